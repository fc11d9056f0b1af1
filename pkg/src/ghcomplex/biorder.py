"""Biordered sets realised inside an ambient finite semigroup.

The biorder of S is the partial algebra of idempotents with products
restricted to basic products: x*y is kept exactly when x and y are
comparable under omega^r or omega^l in some order, and such a product
is again idempotent.  Everything here is ambient: relations, sandwich
sets, E-squares and their singularizing idempotents are all evaluated
through the Cayley table of S, never axiomatically.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import NoIdempotents, NotAnEPath, NotASquare, NotIdempotent
from .semigroups import FiniteSemigroup

SINGULARIZATION_MODES = ("LR", "RL", "TB", "BT")


class Biorder:
    """Idempotents of an ambient semigroup with their biorder structure.

    omega_r and omega_l are frozensets of ordered pairs (e, f) of element
    indices with e omega^r f (fe = e) resp. e omega^l f (ef = e).  basic
    maps each comparable ordered pair to its product's element index.
    """

    def __init__(self, S: FiniteSemigroup):
        if not S.idempotent_indices:
            raise NoIdempotents("ambient semigroup has no idempotents")
        self.S = S
        self.E = S.idempotent_indices
        mul = S.mul
        omega_r, omega_l = set(), set()
        for e in self.E:
            for f in self.E:
                if mul[f][e] == e:
                    omega_r.add((e, f))
                if mul[e][f] == e:
                    omega_l.add((e, f))
        self.omega_r = frozenset(omega_r)
        self.omega_l = frozenset(omega_l)
        basic = {}
        for x in self.E:
            for y in self.E:
                if self._comparable(x, y):
                    basic[(x, y)] = mul[x][y]
        self.basic = basic

    def _comparable(self, x, y) -> bool:
        return ((x, y) in self.omega_r or (y, x) in self.omega_r
                or (x, y) in self.omega_l or (y, x) in self.omega_l)

    @cached_property
    def green(self):
        return self.S.green_data

    def r_related(self, e, f) -> bool:
        return self.green.r_class[e] == self.green.r_class[f]

    def l_related(self, e, f) -> bool:
        return self.green.l_class[e] == self.green.l_class[f]

    def related(self, e, f) -> bool:
        return self.r_related(e, f) or self.l_related(e, f)


def extract_biorder(S: FiniteSemigroup) -> Biorder:
    """The biordered set of S; raises NoIdempotents when E(S) is empty."""
    return Biorder(S)


def sandwich_set(S: FiniteSemigroup, e: int, f: int) -> tuple:
    """S(e,f) = {h idempotent : ehf = ef and fhe = h}, scanned over E(S)."""
    _require_idempotent(S, e)
    _require_idempotent(S, f)
    mul = S.mul
    ef = mul[e][f]
    out = []
    for h in S.idempotent_indices:
        if mul[mul[e][h]][f] == ef and mul[mul[f][h]][e] == h:
            out.append(h)
    return tuple(out)


def is_regular_biorder(S: FiniteSemigroup) -> bool:
    """True when every ordered pair of idempotents has a non-empty sandwich set."""
    return all(sandwich_set(S, e, f)
               for e in S.idempotent_indices
               for f in S.idempotent_indices)


def _require_idempotent(S, e):
    if not (0 <= e < S.size and S.is_idempotent(e)):
        raise NotIdempotent(f"element {e} is not an idempotent of the ambient")


# ---------------------------------------------------------------------------
# E-squares and singularization
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ESquare:
    """Corners (e, f, g, h) of the closed E-path e R f L g R h L e.

    Drawn as the 2x2 array [[e, f], [h, g]]: rows are R-related, columns
    L-related, and all four corners are pairwise distinct.
    """

    corners: tuple

    def __post_init__(self):
        if len(self.corners) != 4:
            raise ValueError("a square has four corners")

    @property
    def e(self):
        return self.corners[0]

    @property
    def f(self):
        return self.corners[1]

    @property
    def g(self):
        return self.corners[2]

    @property
    def h(self):
        return self.corners[3]


def is_esquare(B: Biorder, corners) -> bool:
    """Non-degenerate square test: distinct corners in the R/L/R/L pattern."""
    if len(corners) != 4 or len(set(corners)) != 4:
        return False
    if any(c not in B.S.idempotent_indices for c in corners):
        return False
    e, f, g, h = corners
    return (B.r_related(e, f) and B.l_related(f, g)
            and B.r_related(g, h) and B.l_related(h, e))


def canonical_square(B: Biorder, corners) -> ESquare:
    """Least of the four row-major dihedral readings of the square.

    A square can be read starting at any corner, first step along its
    row; the other four dihedral readings start along a column and
    describe the transposed array, which would scramble the mode names
    of the singularization witnesses, so they are not used as storage
    orientations.
    """
    if not is_esquare(B, tuple(corners)):
        raise NotASquare(f"{tuple(corners)} is not a non-degenerate E-square")
    e, f, g, h = corners
    readings = [(e, f, g, h), (f, e, h, g), (g, h, e, f), (h, g, f, e)]
    return ESquare(min(readings))


def enumerate_squares(B: Biorder, restrict_to_dclass: int | None = None) -> list:
    """All non-degenerate E-squares, one canonical reading each.

    A square lives in the grid of a single D-class: it is a choice of two
    R-classes and two L-classes all four of whose H-class intersections
    hold an idempotent.  With restrict_to_dclass set to an idempotent,
    only that element's D-class is searched.
    """
    g = B.green
    if restrict_to_dclass is not None:
        _require_idempotent(B.S, restrict_to_dclass)
        dclasses = [g.d_class[restrict_to_dclass]]
    else:
        dclasses = sorted({g.d_class[e] for e in B.E})
    squares = []
    for d in dclasses:
        rows, cols = g.dclass_grid(d)
        cell = {}
        for x in B.E:
            if g.d_class[x] == d:
                cell[(g.r_class[x], g.l_class[x])] = x
        for i1, r1 in enumerate(rows):
            for r2 in rows[i1 + 1:]:
                for j1, c1 in enumerate(cols):
                    for c2 in cols[j1 + 1:]:
                        try:
                            e = cell[(r1, c1)]
                            f = cell[(r1, c2)]
                            gg = cell[(r2, c2)]
                            h = cell[(r2, c1)]
                        except KeyError:
                            continue
                        squares.append(canonical_square(B, (e, f, gg, h)))
    squares.sort(key=lambda sq: sq.corners)
    return squares


@dataclass(frozen=True)
class SingularizationWitness:
    """An idempotent t singularizing a square in one of four modes.

    For the array [[e, f], [h, g]] the modes require, in the ambient
    semigroup:
      LR: te=e, th=h, et=f, ht=g     (left column held, pushed right)
      RL: tf=f, tg=g, ft=e, gt=h
      TB: et=e, ft=f, te=h, tf=g     (top row held, pushed down)
      BT: ht=h, gt=g, th=e, tg=f
    """

    square: ESquare
    t: int
    mode: str


def singularizers(B: Biorder, sq: ESquare) -> list:
    """Every (t, mode) pair witnessing singularity of sq, over all of E(S)."""
    if not is_esquare(B, sq.corners):
        raise NotASquare(f"{sq.corners} is not a square of this biorder")
    mul = B.S.mul
    e, f, g, h = sq.corners
    out = []
    for t in B.E:
        checks = {
            "LR": (mul[t][e] == e and mul[t][h] == h
                   and mul[e][t] == f and mul[h][t] == g),
            "RL": (mul[t][f] == f and mul[t][g] == g
                   and mul[f][t] == e and mul[g][t] == h),
            "TB": (mul[e][t] == e and mul[f][t] == f
                   and mul[t][e] == h and mul[t][f] == g),
            "BT": (mul[h][t] == h and mul[g][t] == g
                   and mul[t][h] == e and mul[t][g] == f),
        }
        for mode in SINGULARIZATION_MODES:
            if checks[mode]:
                out.append(SingularizationWitness(sq, t, mode))
    return out


def is_singular(B: Biorder, sq: ESquare) -> bool:
    return bool(singularizers(B, sq))


# ---------------------------------------------------------------------------
# E-paths and E-chains
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EChain:
    """Canonical representative of an E-path: no inessential vertex remains."""

    vertices: tuple


def validate_e_path(B: Biorder, path):
    path = tuple(path)
    if not path:
        raise NotAnEPath("empty vertex sequence")
    for v in path:
        if not (0 <= v < B.S.size and B.S.is_idempotent(v)):
            raise NotAnEPath(f"vertex {v} is not an idempotent")
    for a, b in zip(path, path[1:]):
        if not B.related(a, b):
            raise NotAnEPath(f"consecutive vertices {a}, {b} are not R- or L-related")
    return path


def canonicalize_e_path(B: Biorder, path) -> EChain:
    """Delete inessential vertices until none remain; endpoints survive.

    A repeated adjacent vertex is dropped, and an interior vertex v is
    dropped when its two neighbours sit with v in one R-class or one
    L-class.  Deletions preserve the Cayley product of the path.
    """
    verts = list(validate_e_path(B, path))
    changed = True
    while changed:
        changed = False
        for i in range(len(verts) - 1):
            if verts[i] == verts[i + 1]:
                del verts[i + 1]
                changed = True
                break
        if changed:
            continue
        for i in range(1, len(verts) - 1):
            a, b, c = verts[i - 1], verts[i], verts[i + 1]
            if ((B.r_related(a, b) and B.r_related(b, c))
                    or (B.l_related(a, b) and B.l_related(b, c))):
                del verts[i]
                changed = True
                break
    return EChain(tuple(verts))


def chain_element(S: FiniteSemigroup, chain) -> int:
    """Cayley product of the chain's vertices; R-related to the first
    vertex and L-related to the last, hence always regular."""
    verts = chain.vertices if isinstance(chain, EChain) else tuple(chain)
    B = extract_biorder(S)
    validate_e_path(B, verts)
    return S.product_of(verts)


# ---------------------------------------------------------------------------
# JSON emission of the square census
# ---------------------------------------------------------------------------

def square_census(B: Biorder, restrict_to_dclass: int | None = None,
                  include_witnesses: bool = True) -> dict:
    """Squares (and witnesses) as JSON-ready data with stable ordering.

    Corners are (row, column) labels inside the square's D-class grid,
    rows and columns numbered by discovery order of their class
    representatives; t values are 1-based element indices.
    """
    g = B.green
    grid_cache = {}
    squares = []
    for sq in enumerate_squares(B, restrict_to_dclass):
        d = g.d_class[sq.e]
        if d not in grid_cache:
            rows, cols = g.dclass_grid(d)
            grid_cache[d] = ({r: i + 1 for i, r in enumerate(rows)},
                             {c: j + 1 for j, c in enumerate(cols)})
        row_no, col_no = grid_cache[d]
        entry = {
            "dclass": d + 1,
            "corners": [[f"R{row_no[g.r_class[x]]}", f"L{col_no[g.l_class[x]]}"]
                        for x in sq.corners],
            "elements": [x + 1 for x in sq.corners],
        }
        if include_witnesses:
            wits = singularizers(B, sq)
            entry["singular"] = bool(wits)
            entry["witnesses"] = [{"t": w.t + 1, "mode": w.mode} for w in wits]
        squares.append(entry)
    return {"n_squares": len(squares), "squares": squares}
