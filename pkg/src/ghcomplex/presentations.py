"""Fundamental-group presentations of 2-complex components, and their
abelianizations via integer Smith normal form.

A presentation is read off a deterministic spanning tree of the base
vertex's component: every non-tree edge is a generator and every face
contributes the relator obtained by reading its boundary with tree
edges deleted.  Words are tuples of non-zero signed generator numbers
(1-based), so `(1, 2, -1, -2)` is the commutator of the first two
generators.  All integer arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complexes import ComplexComponent, TwoComplex, component_of_vertex, components
from .errors import ParseError, VertexNotFound


def free_reduce(word) -> tuple:
    """Cancel adjacent inverse pairs; idempotent."""
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(word) -> tuple:
    w = list(free_reduce(word))
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


def invert_word(word) -> tuple:
    return tuple(-x for x in reversed(word))


@dataclass(frozen=True)
class GroupPresentation:
    num_generators: int
    relators: tuple
    generator_labels: tuple = field(default=(), compare=False)

    def __post_init__(self):
        for rel in self.relators:
            for x in rel:
                if x == 0 or abs(x) > self.num_generators:
                    raise ValueError(f"letter {x} outside 1..{self.num_generators}")

    def normalized(self) -> "GroupPresentation":
        """Freely and cyclically reduce every relator and drop empty ones."""
        rels = tuple(r for r in (cyclic_reduce(rel) for rel in self.relators) if r)
        return GroupPresentation(self.num_generators, rels, self.generator_labels)


def graph_free_rank(X: TwoComplex, component: ComplexComponent) -> int:
    """Free rank E - V + 1 of the component's 1-skeleton."""
    return component.n_edges - component.n_vertices + 1


def spanning_tree(X: TwoComplex, base: str, strategy: str = "bfs") -> set:
    """Edge labels of a deterministic spanning tree of base's component.

    Edges incident to a vertex are scanned in their declaration order;
    "bfs" grows by breadth, "dfs" by depth.  Both are deterministic.
    """
    if base not in X.adjacency:
        raise VertexNotFound(f"no vertex {base!r} in the complex")
    if strategy not in ("bfs", "dfs"):
        raise ValueError(f"unknown tree strategy {strategy!r}")
    tree = set()
    seen = {base}
    frontier = [base]
    while frontier:
        v = frontier.pop(0 if strategy == "bfs" else -1)
        for label, w in X.adjacency[v]:
            if w not in seen:
                seen.add(w)
                tree.add(label)
                frontier.append(w)
    return tree


def presentation_at(X: TwoComplex, base: str,
                    strategy: str = "bfs") -> GroupPresentation:
    """Presentation of pi_1 of base's component.

    Generators are the non-tree edges (in declaration order); collapsing
    the spanning tree to the base point turns each face boundary into a
    relator: tree letters vanish, a non-tree edge read along its stored
    orientation becomes the positive generator.  The result is freely
    and cyclically reduced.
    """
    comp = component_of_vertex(X, base)
    tree = spanning_tree(X, base, strategy)
    gen_no = {}
    labels = []
    for label in comp.edge_labels:
        if label not in tree:
            gen_no[label] = len(labels) + 1
            labels.append(label)
    face_of = {f.label: f for f in X.faces}
    relators = []
    for face_label in comp.face_labels:
        word = []
        for label, sign in face_of[face_label].boundary:
            if label in tree:
                continue
            word.append(sign * gen_no[label])
        word = cyclic_reduce(word)
        if word:
            relators.append(word)
    return GroupPresentation(len(labels), tuple(relators), tuple(labels))


# ---------------------------------------------------------------------------
# Tietze simplification
# ---------------------------------------------------------------------------

def tietze_simplify(P: GroupPresentation, budget: int = 1000) -> GroupPresentation:
    """Bounded presentation cleanup by isomorphism-preserving moves only:
    free/cyclic reduction, dropping empty relators, and eliminating a
    generator that occurs exactly once in some relator (substituting its
    expression into every other relator).  Stops at the budget or at a
    fixpoint; the abelianization is untouched either way.
    """
    if budget < 0:
        raise ValueError("budget must be non-negative")
    P = P.normalized()
    for _ in range(budget):
        target = _pick_elimination(P.relators)
        if target is None:
            break
        P = _eliminate(P, *target)
    return P


def _pick_elimination(relators):
    """(relator index, letter position) of a generator occurring exactly
    once in that relator; shortest relator first, then lowest index."""
    order = sorted(range(len(relators)), key=lambda i: (len(relators[i]), i))
    for i in order:
        rel = relators[i]
        counts: dict[int, int] = {}
        for x in rel:
            counts[abs(x)] = counts.get(abs(x), 0) + 1
        for pos, x in enumerate(rel):
            if counts[abs(x)] == 1:
                return i, pos
    return None


def _eliminate(P: GroupPresentation, rel_index: int, pos: int) -> GroupPresentation:
    rel = P.relators[rel_index]
    letter = rel[pos]
    gen = abs(letter)
    # rel = u letter v = 1, so gen^sign = u^-1 v^-1
    u, v = rel[:pos], rel[pos + 1:]
    expr = free_reduce(invert_word(u) + invert_word(v))
    if letter < 0:
        expr = invert_word(expr)
    # expr is the word replacing gen; rewrite the others without gen
    new_relators = []
    for i, other in enumerate(P.relators):
        if i == rel_index:
            continue
        word = []
        for x in other:
            if abs(x) == gen:
                word.extend(expr if x > 0 else invert_word(expr))
            else:
                word.append(x)
        word = cyclic_reduce(word)
        if word:
            new_relators.append(word)
    renumber = {}
    new_labels = []
    for old in range(1, P.num_generators + 1):
        if old == gen:
            continue
        renumber[old] = len(renumber) + 1
        if P.generator_labels:
            new_labels.append(P.generator_labels[old - 1])
    remapped = tuple(
        tuple((1 if x > 0 else -1) * renumber[abs(x)] for x in rel)
        for rel in new_relators)
    return GroupPresentation(P.num_generators - 1, remapped, tuple(new_labels))


# ---------------------------------------------------------------------------
# Smith normal form and abelianization
# ---------------------------------------------------------------------------

def smith_normal_form(matrix) -> tuple:
    """Diagonal of the Smith normal form of an integer matrix.

    Returns min(m, n) non-negative integers d1 | d2 | ... obtainable from
    the input by unimodular row and column operations.  Plain Python
    integers keep the arithmetic exact whatever the intermediate growth.
    """
    A = [[int(x) for x in row] for row in matrix]
    m = len(A)
    n = len(A[0]) if m else 0
    if m and any(len(row) != n for row in A):
        raise ValueError("ragged matrix")
    diag = []
    k = 0
    while k < min(m, n):
        pivot = _smallest_nonzero(A, k, m, n)
        if pivot is None:
            break
        _move_pivot(A, k, pivot)
        while True:
            cleared = True
            for i in range(k + 1, m):
                if A[i][k] % A[k][k]:
                    cleared = False
                q = A[i][k] // A[k][k]
                if q:
                    for j in range(k, n):
                        A[i][j] -= q * A[k][j]
            for i in range(k + 1, m):
                if A[i][k]:
                    _swap_rows(A, k, i)
                    cleared = False
                    break
            if not cleared:
                continue
            for j in range(k + 1, n):
                if A[k][j] % A[k][k]:
                    cleared = False
                q = A[k][j] // A[k][k]
                if q:
                    for i in range(k, m):
                        A[i][j] -= q * A[i][k]
            for j in range(k + 1, n):
                if A[k][j]:
                    _swap_cols(A, k, j)
                    cleared = False
                    break
            if cleared:
                break
        # divisibility repair: the pivot must divide the whole remainder
        offender = _non_divisible(A, k, m, n)
        if offender is not None:
            for j in range(k, n):
                A[k][j] += A[offender][j]
            continue
        diag.append(abs(A[k][k]))
        k += 1
    diag.extend([0] * (min(m, n) - len(diag)))
    for a, b in zip(diag, diag[1:]):
        assert b == 0 or (a != 0 and b % a == 0)
    return tuple(diag)


def _smallest_nonzero(A, k, m, n):
    best = None
    for i in range(k, m):
        for j in range(k, n):
            v = abs(A[i][j])
            if v and (best is None or v < abs(A[best[0]][best[1]])):
                best = (i, j)
    return best


def _move_pivot(A, k, pivot):
    i, j = pivot
    if i != k:
        _swap_rows(A, k, i)
    if j != k:
        _swap_cols(A, k, j)


def _swap_rows(A, i, j):
    A[i], A[j] = A[j], A[i]


def _swap_cols(A, i, j):
    for row in A:
        row[i], row[j] = row[j], row[i]


def _non_divisible(A, k, m, n):
    d = A[k][k]
    for i in range(k + 1, m):
        for j in range(k + 1, n):
            if A[i][j] % d:
                return i
    return None


@dataclass(frozen=True)
class AbelianInvariants:
    """Invariant factors d1 | d2 | ... (each > 1) plus the free rank."""

    torsion: tuple
    free_rank: int

    def __post_init__(self):
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("torsion coefficients must form a divisor chain")
        if any(d <= 1 for d in self.torsion):
            raise ValueError("torsion coefficients must exceed 1")
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")

    def to_json(self) -> dict:
        return {"torsion": list(self.torsion), "free_rank": self.free_rank}

    def describe(self) -> str:
        parts = [f"Z/{d}" for d in self.torsion] + ["Z"] * self.free_rank
        return " x ".join(parts) if parts else "trivial"


def relator_matrix(P: GroupPresentation) -> list:
    """Exponent-sum matrix: one row per relator, one column per generator."""
    rows = []
    for rel in P.relators:
        row = [0] * P.num_generators
        for x in rel:
            row[abs(x) - 1] += 1 if x > 0 else -1
        rows.append(row)
    return rows


def abelianize(P: GroupPresentation) -> AbelianInvariants:
    """Invariant-factor decomposition of the presentation's commutative
    quotient: SNF of the relator exponent matrix, torsion from the
    diagonal entries above 1, free rank = generators - matrix rank."""
    diag = smith_normal_form(relator_matrix(P)) if P.relators else ()
    rank = sum(1 for d in diag if d != 0)
    torsion = tuple(d for d in diag if d > 1)
    return AbelianInvariants(torsion, P.num_generators - rank)


# ---------------------------------------------------------------------------
# Presentation text format: `gens N`, then one relator per line as
# space-separated non-zero signed generator numbers.
# ---------------------------------------------------------------------------

def format_presentation(P: GroupPresentation) -> str:
    lines = [f"gens {P.num_generators}"]
    for rel in P.relators:
        lines.append(" ".join(str(x) for x in rel))
    return "\n".join(lines) + "\n"


def parse_presentation(text: str) -> GroupPresentation:
    num = None
    relators = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if num is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "gens":
                raise ParseError(f"line {lineno}: expected `gens N`")
            try:
                num = int(parts[1])
            except ValueError:
                raise ParseError(f"line {lineno}: bad generator count") from None
            if num < 0:
                raise ParseError(f"line {lineno}: negative generator count")
            continue
        try:
            word = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise ParseError(f"line {lineno}: bad relator letter") from None
        if any(x == 0 or abs(x) > num for x in word):
            raise ParseError(f"line {lineno}: letter outside 1..{num}")
        relators.append(word)
    if num is None:
        raise ParseError("missing `gens N` header line")
    return GroupPresentation(num, tuple(relators))
