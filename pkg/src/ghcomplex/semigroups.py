"""Finite semigroups of partial maps: closure, Cayley table, Green structure.

Elements are canonical PartialMap values indexed by their deterministic
BFS discovery order, so regenerating from the same generator list gives
a bit-identical semigroup.  Green's relations are computed by literal
principal-ideal comparison; no Schutzenberger-graph shortcuts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import CapExceeded, NotIdempotent
from .partial_maps import PartialMap, compose

DEFAULT_CAP = 1_000_000


class FiniteSemigroup:
    """An indexed element list with its Cayley table.

    elements : tuple of PartialMap, in discovery order
    mul      : mul[i][j] is the index of elements[i]*elements[j]
    gens     : element indices of the generators, in generator-list order
    words    : for each element, the shortlex-least generator word that
               produces it (letters are 0-based positions in the original
               generator list, applied left to right)
    zero     : index of the two-sided zero, or None
    """

    def __init__(self, elements, mul, gens, words, zero=None):
        self.elements = tuple(elements)
        self.mul = tuple(tuple(row) for row in mul)
        self.gens = tuple(gens)
        self.words = tuple(tuple(w) for w in words)
        self.zero = zero
        n = len(self.elements)
        assert len(self.mul) == n and all(len(row) == n for row in self.mul)
        assert len(self.words) == n

    @property
    def size(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def product(self, i: int, j: int) -> int:
        return self.mul[i][j]

    def product_of(self, indices) -> int:
        """Cayley product of a non-empty index sequence, left to right."""
        it = iter(indices)
        try:
            acc = next(it)
        except StopIteration:
            raise ValueError("empty product") from None
        for j in it:
            acc = self.mul[acc][j]
        return acc

    def is_idempotent(self, i: int) -> bool:
        return self.mul[i][i] == i

    @cached_property
    def idempotent_indices(self) -> tuple:
        return tuple(i for i in range(self.size) if self.mul[i][i] == i)

    @cached_property
    def green_data(self) -> "GreenData":
        return green(self)

    @classmethod
    def from_maps(cls, maps, zero_hint=None):
        """Semigroup on an explicitly listed, composition-closed set of maps.

        Every element is registered as its own generator.  Raises
        ValueError if the list is not closed or contains duplicates.
        """
        elements = tuple(maps)
        index_of = {pm: i for i, pm in enumerate(elements)}
        if len(index_of) != len(elements):
            raise ValueError("duplicate elements in closed map list")
        n = len(elements)
        mul = []
        for f in elements:
            row = []
            for g in elements:
                p = compose(f, g)
                if p not in index_of:
                    raise ValueError(f"map list is not closed: missing {p!r}")
                row.append(index_of[p])
            mul.append(tuple(row))
        words = tuple((i,) for i in range(n))
        S = cls(elements, mul, tuple(range(n)), words, zero=None)
        S.zero = _find_zero(S.mul) if zero_hint is None else zero_hint
        return S


def _find_zero(mul):
    n = len(mul)
    for z in range(n):
        if all(mul[z][x] == z and mul[x][z] == z for x in range(n)):
            return z
    return None


def generate(gens, cap: int = DEFAULT_CAP) -> FiniteSemigroup:
    """Close a generator list under composition.

    Discovery order is fixed forever: breadth-first by word length, and
    within one length by (generator index, previously discovered element
    index), i.e. elements are numbered by the shortlex order of their
    least defining word.  New candidates at length L+1 are g*x with g a
    generator and x an element first seen at length L.

    Raises CapExceeded as soon as the closure grows past `cap`.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise ValueError("generators must share a degree")

    elements: list[PartialMap] = []
    words: list[tuple] = []
    index_of: dict[PartialMap, int] = {}
    gen_index = []
    for pos, g in enumerate(gens):
        if g not in index_of:
            if len(elements) >= cap:
                raise CapExceeded(f"closure exceeded cap {cap}")
            index_of[g] = len(elements)
            elements.append(g)
            words.append((pos,))
        gen_index.append(index_of[g])

    level = list(range(len(elements)))
    while level:
        next_level = []
        for pos, g in enumerate(gens):
            for x in level:
                p = compose(g, elements[x])
                if p in index_of:
                    continue
                if len(elements) >= cap:
                    raise CapExceeded(f"closure exceeded cap {cap}")
                index_of[p] = len(elements)
                elements.append(p)
                words.append((pos,) + words[x])
                next_level.append(index_of[p])
        level = next_level

    n = len(elements)
    mul = []
    for f in elements:
        row = []
        for g in elements:
            row.append(index_of[compose(f, g)])
        mul.append(tuple(row))

    S = FiniteSemigroup(elements, mul, gen_index, words)
    S.zero = _find_zero(S.mul)
    return S


# ---------------------------------------------------------------------------
# Green's relations
# ---------------------------------------------------------------------------

class GreenData:
    """The five Green partitions plus both ideal quasi-orders.

    Class labels count from 0 in order of first appearance along the
    element list.  leq_r[a] is the frozenset of b with aS^1 <= bS^1
    (equivalently a in bS^1), and likewise leq_l on the left.
    """

    def __init__(self, S: FiniteSemigroup):
        n = S.size
        mul = S.mul
        right_ideal = [frozenset({a}.union(mul[a])) for a in range(n)]
        left_ideal = [frozenset({a}.union(mul[s][a] for s in range(n)))
                      for a in range(n)]
        two_sided = []
        for a in range(n):
            ideal = set(right_ideal[a]) | set(left_ideal[a])
            aS = mul[a]
            for u in range(n):
                row = mul[u]
                ideal.update(row[w] for w in aS)
            two_sided.append(frozenset(ideal))

        self.r_class = _label_by_key(right_ideal)
        self.l_class = _label_by_key(left_ideal)
        self.j_class = _label_by_key(two_sided)
        self.h_class = _label_by_key(list(zip(self.r_class, self.l_class)))
        self.d_class = _join_classes(self.r_class, self.l_class)
        self.leq_r = tuple(frozenset(b for b in range(n) if a in right_ideal[b])
                           for a in range(n))
        self.leq_l = tuple(frozenset(b for b in range(n) if a in left_ideal[b])
                           for a in range(n))
        self.n = n

    def classes_of(self, labels) -> list:
        """Partition blocks as index lists, in class-label order."""
        count = max(labels) + 1 if labels else 0
        blocks = [[] for _ in range(count)]
        for i, c in enumerate(labels):
            blocks[c].append(i)
        return blocks

    @cached_property
    def r_classes(self):
        return self.classes_of(self.r_class)

    @cached_property
    def l_classes(self):
        return self.classes_of(self.l_class)

    @cached_property
    def h_classes(self):
        return self.classes_of(self.h_class)

    @cached_property
    def d_classes(self):
        return self.classes_of(self.d_class)

    @cached_property
    def j_classes(self):
        return self.classes_of(self.j_class)

    def dclass_grid(self, d: int):
        """R-class and L-class labels of a D-class, in discovery order.

        Returns (rows, cols) where rows lists the r_class labels whose
        classes meet D-class d, ordered by their least element, and cols
        does the same for l_class labels.
        """
        rows, cols = [], []
        for i in range(self.n):
            if self.d_class[i] != d:
                continue
            if self.r_class[i] not in rows:
                rows.append(self.r_class[i])
            if self.l_class[i] not in cols:
                cols.append(self.l_class[i])
        return rows, cols


def _label_by_key(keys):
    label = {}
    out = []
    for k in keys:
        if k not in label:
            label[k] = len(label)
        out.append(label[k])
    return tuple(out)


def _join_classes(r_class, l_class):
    """Smallest equivalence containing R and L, via union-find."""
    n = len(r_class)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    first_r: dict[int, int] = {}
    first_l: dict[int, int] = {}
    for i in range(n):
        if r_class[i] in first_r:
            union(first_r[r_class[i]], i)
        else:
            first_r[r_class[i]] = i
        if l_class[i] in first_l:
            union(first_l[l_class[i]], i)
        else:
            first_l[l_class[i]] = i
    return _label_by_key([find(i) for i in range(n)])


def green(S: FiniteSemigroup) -> GreenData:
    """All five Green partitions plus both quasi-orders of S."""
    return GreenData(S)


def idempotents(S: FiniteSemigroup) -> tuple:
    """Indices of the elements x with x*x = x."""
    return S.idempotent_indices


def _require_idempotent(S: FiniteSemigroup, e: int):
    if not 0 <= e < S.size:
        raise NotIdempotent(f"index {e} out of range")
    if not S.is_idempotent(e):
        raise NotIdempotent(f"element {e} is not idempotent")


@dataclass(frozen=True)
class QuasiOrderFlags:
    omega_r: bool
    omega_l: bool
    omega: bool


def quasi_orders(S: FiniteSemigroup, e: int, f: int) -> QuasiOrderFlags:
    """Biorder comparisons of two idempotents.

    e omega^r f iff fe = e, e omega^l f iff ef = e, and the natural
    partial order omega is the conjunction.
    """
    _require_idempotent(S, e)
    _require_idempotent(S, f)
    omega_r = S.mul[f][e] == e
    omega_l = S.mul[e][f] == e
    return QuasiOrderFlags(omega_r, omega_l, omega_r and omega_l)


def regularity(S: FiniteSemigroup):
    """Per-element regularity flags (x in xSx) and the whole-semigroup flag."""
    n = S.size
    mul = S.mul
    flags = []
    for x in range(n):
        row = mul[x]
        flags.append(any(mul[row[s]][x] == x for s in range(n)))
    flags = tuple(flags)
    return flags, all(flags)


def maximal_subgroup(S: FiniteSemigroup, e: int) -> tuple:
    """Group of units of the local monoid eSe; this is the H-class of e."""
    _require_idempotent(S, e)
    mul = S.mul
    local = sorted({mul[mul[e][s]][e] for s in range(S.size)})
    units = []
    for x in local:
        if any(mul[x][y] == e and mul[y][x] == e for y in local):
            units.append(x)
    return tuple(units)
