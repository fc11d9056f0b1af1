"""Command-line interface.

Subcommands mirror the library pipeline: generate, green, biorder, rees,
gh, pi1 and repro-paper.  Exit codes: 0 success, 2 parse or input error,
3 closure cap exceeded, 4 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .biorder import extract_biorder, is_regular_biorder, square_census
from .complexes import components, export_dot, gh_complex, gh_vertex_labels, \
    surface_classify
from .errors import (CapExceeded, GHComplexError, ParseError,
                     VerificationMismatch)
from .incidence import bipartite_graph, parse_incidence, rees_semigroup
from .partial_maps import parse_partial_maps
from .presentations import (abelianize, format_presentation, presentation_at,
                            tietze_simplify)
from .repro import format_report_lines, reproduce_paper
from .semigroups import DEFAULT_CAP, generate, idempotents, regularity


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _load_semigroup(path: str, cap: int):
    named = parse_partial_maps(_read(path))
    S = generate([pm for _, pm in named], cap=cap)
    return S, [name for name, _ in named]


def _semigroup_json(S, names) -> dict:
    return {
        "order": S.size,
        "degree": S.elements[0].degree if S.size else 0,
        "generators": {name: g + 1 for name, g in zip(names, S.gens)},
        "zero": None if S.zero is None else S.zero + 1,
        "elements": [[y if y is not None else 0 for y in pm.images]
                     for pm in S.elements],
        "words": [[letter + 1 for letter in w] for w in S.words],
        "mul": [[x + 1 for x in row] for row in S.mul],
    }


def cmd_generate(args) -> int:
    S, names = _load_semigroup(args.input, args.cap)
    print(f"order {S.size}")
    print(f"idempotents {len(idempotents(S))}")
    print(f"zero {'none' if S.zero is None else S.zero + 1}")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(_semigroup_json(S, names), fh, indent=2, sort_keys=True)
            fh.write("\n")
        print(f"wrote {args.output}")
    return 0


def cmd_green(args) -> int:
    S, _ = _load_semigroup(args.input, args.cap)
    g = S.green_data
    flags, all_regular = regularity(S)
    print(f"order {S.size}")
    for name, classes in (("R", g.r_classes), ("L", g.l_classes),
                          ("H", g.h_classes), ("D", g.d_classes),
                          ("J", g.j_classes)):
        sizes = sorted((len(c) for c in classes), reverse=True)
        print(f"{name}-classes {len(classes)} sizes {sizes}")
    print(f"regular {'yes' if all_regular else 'no'} "
          f"({sum(flags)}/{S.size} elements)")
    return 0


def cmd_biorder(args) -> int:
    S, _ = _load_semigroup(args.input, args.cap)
    B = extract_biorder(S)
    if args.squares or args.singular:
        census = square_census(B, include_witnesses=args.singular)
        json.dump(census, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
        return 0
    print(f"idempotents {len(B.E)}")
    print(f"omega_r pairs {len(B.omega_r)}")
    print(f"omega_l pairs {len(B.omega_l)}")
    print(f"basic products {len(B.basic)}")
    print(f"regular biorder {'yes' if is_regular_biorder(S) else 'no'}")
    return 0


def cmd_rees(args) -> int:
    D = parse_incidence(_read(args.matrix))
    S, labels = rees_semigroup(D)
    G = bipartite_graph(D)
    print(f"blocks {D.n_blocks} points {D.n_points}")
    print(f"order {S.size} (pairs {S.size - 1} plus zero)")
    print(f"idempotents {len(idempotents(S))}")
    print(f"bipartite graph: {len(G.edges)} edges, "
          f"{'connected' if G.connected else f'{G.n_components} components'}")
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(G.to_dot())
        print(f"wrote {args.dot}")
    return 0


def cmd_gh(args) -> int:
    S, _ = _load_semigroup(args.input, args.cap)
    B = extract_biorder(S)
    X = gh_complex(B)
    for i, comp in enumerate(components(X), start=1):
        surf = surface_classify(X, comp)
        print(f"component {i}: V={comp.n_vertices} E={comp.n_edges} "
              f"F={comp.n_faces} chi={comp.euler_characteristic}; "
              f"{surf.describe()}")
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(export_dot(X, "gh"))
        print(f"wrote {args.dot}")
    return 0


def cmd_pi1(args) -> int:
    S, _ = _load_semigroup(args.input, args.cap)
    e = args.base - 1
    if not (0 <= e < S.size) or not S.is_idempotent(e):
        raise ParseError(f"--base {args.base} is not an idempotent element index")
    B = extract_biorder(S)
    X = gh_complex(B)
    base = gh_vertex_labels(B, e)[0]
    P = presentation_at(X, base)
    if args.simplify_budget:
        P = tietze_simplify(P, args.simplify_budget)
    if args.abelianize:
        json.dump(abelianize(P).to_json(), sys.stdout, sort_keys=True)
        sys.stdout.write("\n")
    else:
        sys.stdout.write(format_presentation(P))
    return 0


def cmd_repro_paper(args) -> int:
    try:
        report, art = reproduce_paper(check=True)
        failed = False
    except VerificationMismatch as exc:
        report, art = exc.report, None
        failed = True
    if args.json:
        json.dump(report, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    else:
        for line in format_report_lines(report):
            print(line)
    if args.report_dir:
        os.makedirs(args.report_dir, exist_ok=True)
        with open(os.path.join(args.report_dir, "report.json"), "w",
                  encoding="utf-8") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
            fh.write("\n")
        with open(os.path.join(args.report_dir, "report.tsv"), "w",
                  encoding="utf-8") as fh:
            fh.write("\n".join(format_report_lines(report)) + "\n")
        if art is not None:
            from .figures import render_report_figures
            for path in render_report_figures(art, args.report_dir):
                print(f"wrote {path}")
        print(f"wrote {os.path.join(args.report_dir, 'report.json')}")
        print(f"wrote {os.path.join(args.report_dir, 'report.tsv')}")
    return 4 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ghcomplex",
        description="Biordered sets, Graham-Houghton complexes and maximal "
                    "subgroups of free idempotent generated semigroups.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_gens(p):
        p.add_argument("-i", "--input", required=True,
                       help="partial-map generator file")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                       help="closure size cap (default %(default)s)")

    p = sub.add_parser("generate", help="close generators, print the order")
    add_gens(p)
    p.add_argument("-o", "--output", help="write the semigroup as JSON")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("green", help="Green's relations summary")
    add_gens(p)
    p.set_defaults(func=cmd_green)

    p = sub.add_parser("biorder", help="biorder of the closure")
    add_gens(p)
    p.add_argument("--squares", action="store_true",
                   help="emit the E-square census as JSON")
    p.add_argument("--singular", action="store_true",
                   help="include singularization witnesses (implies --squares)")
    p.set_defaults(func=cmd_biorder)

    p = sub.add_parser("rees", help="Rees semigroup of an incidence grid")
    p.add_argument("-m", "--matrix", required=True, help="incidence grid file")
    p.add_argument("--dot", help="write the bipartite graph as DOT")
    p.set_defaults(func=cmd_rees)

    p = sub.add_parser("gh", help="Graham-Houghton complex of the closure")
    add_gens(p)
    p.add_argument("--dot", help="write the complex 1-skeleton as DOT")
    p.set_defaults(func=cmd_gh)

    p = sub.add_parser("pi1", help="fundamental group presentation at an "
                                   "idempotent's L-class")
    add_gens(p)
    p.add_argument("--base", type=int, required=True, metavar="IDEMPOTENT-INDEX",
                   help="1-based element index of an idempotent")
    p.add_argument("--abelianize", action="store_true",
                   help="emit abelian invariants as JSON instead")
    p.add_argument("--simplify-budget", type=int, default=0, metavar="N",
                   help="run up to N Tietze elimination steps first")
    p.set_defaults(func=cmd_pi1)

    p = sub.add_parser("repro-paper", help="reproduce the torus example "
                                           "end to end")
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.add_argument("--report-dir", metavar="DIR",
                   help="write report.json, report.tsv and figures to DIR")
    p.set_defaults(func=cmd_repro_paper)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except VerificationMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (ParseError, GHComplexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
