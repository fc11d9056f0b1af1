"""Incidence systems, bipartite graphs and combinatorial Rees matrix semigroups.

An incidence system is an ordered point list together with an ordered
list of blocks (point subsets, duplicates permitted).  One canonical
orientation is stored throughout: rows are blocks, columns are points.
The 0/1 grid with that orientation is what parse_incidence reads and
what incidence_of_dclass extracts from a regular D-class.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import NotRegularElement, NotZeroSimple, ParseError
from .partial_maps import PartialMap, empty_map
from .semigroups import FiniteSemigroup


@dataclass(frozen=True)
class IncidenceSystem:
    points: tuple            # point labels, ordered
    blocks: tuple            # per block, frozenset of 0-based point positions
    block_labels: tuple = field(default=())

    def __post_init__(self):
        if not self.block_labels:
            object.__setattr__(self, "block_labels",
                               tuple(f"R{i+1}" for i in range(len(self.blocks))))
        if len(self.block_labels) != len(self.blocks):
            raise ValueError("one label per block required")
        npoints = len(self.points)
        for b in self.blocks:
            if any(not (0 <= p < npoints) for p in b):
                raise ValueError("block member out of point range")

    @property
    def n_points(self) -> int:
        return len(self.points)

    @property
    def n_blocks(self) -> int:
        return len(self.blocks)

    def matrix(self) -> tuple:
        """0/1 rows, one per block, columns in point order."""
        return tuple(tuple(1 if j in b else 0 for j in range(self.n_points))
                     for b in self.blocks)

    def one_count(self) -> int:
        return sum(len(b) for b in self.blocks)


def incidence_from_rows(rows, point_labels=None, block_labels=None) -> IncidenceSystem:
    rows = [tuple(r) for r in rows]
    width = len(rows[0]) if rows else 0
    points = tuple(point_labels) if point_labels else tuple(
        f"L{j+1}" for j in range(width))
    blocks = tuple(frozenset(j for j, v in enumerate(row) if v) for row in rows)
    return IncidenceSystem(points, blocks, tuple(block_labels) if block_labels else ())


def parse_incidence(text: str) -> IncidenceSystem:
    """Parse the grid format: `rows R cols C`, then R rows of 0/1 entries.

    `#` starts a comment.  Rows become blocks, columns become points.
    """
    header = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 4 or parts[0] != "rows" or parts[2] != "cols":
                raise ParseError(f"line {lineno}: expected `rows R cols C`")
            try:
                header = (int(parts[1]), int(parts[3]))
            except ValueError:
                raise ParseError(f"line {lineno}: bad row/col counts") from None
            if header[0] < 1 or header[1] < 1:
                raise ParseError(f"line {lineno}: row/col counts must be positive")
            continue
        tokens = line.split()
        if len(tokens) != header[1]:
            raise ParseError(
                f"line {lineno}: expected {header[1]} entries, got {len(tokens)}")
        row = []
        for tok in tokens:
            if tok not in ("0", "1"):
                raise ParseError(f"line {lineno}: entries must be 0 or 1, got {tok!r}")
            row.append(int(tok))
        rows.append(tuple(row))
        if len(rows) > header[0]:
            raise ParseError(f"line {lineno}: more than {header[0]} rows")
    if header is None:
        raise ParseError("missing `rows R cols C` header line")
    if len(rows) != header[0]:
        raise ParseError(f"expected {header[0]} rows, got {len(rows)}")
    return incidence_from_rows(rows)


def format_incidence(D: IncidenceSystem) -> str:
    lines = [f"rows {D.n_blocks} cols {D.n_points}"]
    for row in D.matrix():
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Rees matrix semigroup of an incidence system
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ReesLabels:
    """Bijection between element indices and (block label, point label) pairs."""

    pair_of: dict       # element index -> (block label, point label)
    index_of: dict      # (block label, point label) -> element index
    zero_index: int


def rees_semigroup(D: IncidenceSystem):
    """The combinatorial Rees matrix semigroup of a 0-simple incidence system.

    Elements are all (block, point) pairs plus a zero, with
    (b,p)(b',p') = (b,p') when p lies in b' and zero otherwise.  Each
    pair is realised as a partial map on points+blocks: the point part
    is the right Schutzenberger action (the constant map p on block b),
    and one extra block coordinate keeps the representation faithful
    even when equal blocks repeat.  Returns (FiniteSemigroup, ReesLabels).
    """
    for i, b in enumerate(D.blocks):
        if not b:
            raise NotZeroSimple(f"block {D.block_labels[i]} is empty")
    covered = frozenset().union(*D.blocks) if D.blocks else frozenset()
    for j in range(D.n_points):
        if j not in covered:
            raise NotZeroSimple(f"point {D.points[j]} lies in no block")

    P, B = D.n_points, D.n_blocks
    degree = P + B
    maps = []
    pair_of = {}
    index_of = {}
    for i in range(B):
        for j in range(P):
            point_part = tuple(j + 1 if x in D.blocks[i] else None for x in range(P))
            block_part = tuple(j + 1 if b == i else None for b in range(B))
            maps.append(PartialMap(degree, point_part + block_part))
            key = (D.block_labels[i], D.points[j])
            pair_of[len(maps) - 1] = key
            index_of[key] = len(maps) - 1
    zero_index = len(maps)
    maps.append(empty_map(degree))

    S = FiniteSemigroup.from_maps(maps, zero_hint=zero_index)
    assert S.zero == zero_index
    return S, ReesLabels(pair_of, index_of, zero_index)


# ---------------------------------------------------------------------------
# Bipartite incidence graph
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BipartiteGraph:
    block_vertices: tuple
    point_vertices: tuple
    edges: tuple              # (block label, point label), row-major order
    component_of: dict        # vertex label -> component id
    n_components: int

    @property
    def connected(self) -> bool:
        return self.n_components == 1

    def to_dot(self) -> str:
        lines = ["graph incidence {"]
        for b in self.block_vertices:
            lines.append(f'  "{b}" [shape=box];')
        for p in self.point_vertices:
            lines.append(f'  "{p}" [shape=ellipse];')
        for b, p in self.edges:
            lines.append(f'  "{b}" -- "{p}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def bipartite_graph(D: IncidenceSystem) -> BipartiteGraph:
    """Vertices are blocks and points, edges the incidences."""
    edges = tuple((D.block_labels[i], D.points[j])
                  for i in range(D.n_blocks)
                  for j in sorted(D.blocks[i]))
    adjacency = {v: [] for v in D.block_labels + D.points}
    for b, p in edges:
        adjacency[b].append(p)
        adjacency[p].append(b)
    component_of = {}
    n_components = 0
    for start in D.block_labels + D.points:
        if start in component_of:
            continue
        stack = [start]
        component_of[start] = n_components
        while stack:
            v = stack.pop()
            for w in adjacency[v]:
                if w not in component_of:
                    component_of[w] = n_components
                    stack.append(w)
        n_components += 1
    return BipartiteGraph(D.block_labels, D.points, edges, component_of,
                          n_components)


# ---------------------------------------------------------------------------
# Incidence matrix of a regular D-class
# ---------------------------------------------------------------------------

def incidence_of_dclass(S: FiniteSemigroup, e: int) -> IncidenceSystem:
    """Rows are the R-classes of D_e, columns its L-classes, entry 1 where
    the H-class holds an idempotent.  Row/column order is the discovery
    order of the class representatives along the element list.
    """
    mul = S.mul
    if not any(mul[mul[e][s]][e] == e for s in range(S.size)):
        raise NotRegularElement(f"element {e} is not regular")
    g = S.green_data
    d = g.d_class[e]
    rows, cols = g.dclass_grid(d)
    row_pos = {r: i for i, r in enumerate(rows)}
    col_pos = {c: j for j, c in enumerate(cols)}
    blocks = [set() for _ in rows]
    for x in S.idempotent_indices:
        if g.d_class[x] == d:
            blocks[row_pos[g.r_class[x]]].add(col_pos[g.l_class[x]])
    return IncidenceSystem(
        tuple(f"L{j+1}" for j in range(len(cols))),
        tuple(frozenset(b) for b in blocks),
        tuple(f"R{i+1}" for i in range(len(rows))),
    )


# ---------------------------------------------------------------------------
# Permutation-invariant 0/1 matrix comparison
# ---------------------------------------------------------------------------

def canonical_matrix(rows) -> tuple:
    """Alternately sort rows and columns lexicographically to a fixpoint.

    The result is always row/column-permutation-equivalent to the input,
    so equal canonical forms certify equivalence.  (The converse can in
    principle fail; matrices_equivalent falls back to an exact search.)
    """
    m = tuple(tuple(r) for r in rows)
    for _ in range(100):
        rs = tuple(sorted(m))
        cs = _sort_columns(rs)
        if cs == m:
            break
        m = cs
    return m


def _sort_columns(rows):
    if not rows:
        return rows
    cols = sorted(zip(*rows))
    return tuple(tuple(r) for r in zip(*cols))


def matrices_equivalent(a, b, exact_limit: int = 8) -> bool:
    """True iff b is a row/column permutation of a.

    The sort-to-fixpoint canonical form decides most cases; a min-over-
    row-permutations search settles the rest when there are at most
    `exact_limit` rows (or columns, after transposing).
    """
    a = tuple(tuple(r) for r in a)
    b = tuple(tuple(r) for r in b)
    if len(a) != len(b):
        return False
    width = len(a[0]) if a else 0
    if width != (len(b[0]) if b else 0):
        return False
    if not a or width == 0:
        return True
    if sorted(map(sum, a)) != sorted(map(sum, b)):
        return False
    if sorted(map(sum, zip(*a))) != sorted(map(sum, zip(*b))):
        return False
    if canonical_matrix(a) == canonical_matrix(b):
        return True
    if len(a) > exact_limit and width <= exact_limit:
        a = tuple(zip(*a))
        b = tuple(zip(*b))
    if len(a) > exact_limit:
        raise ValueError("matrices too large for the exact permutation search")
    return _exact_canonical(a) == _exact_canonical(b)


def _exact_canonical(rows):
    best = None
    for perm in itertools.permutations(rows):
        candidate = _sort_columns(perm)
        if best is None or candidate < best:
            best = candidate
    return best
