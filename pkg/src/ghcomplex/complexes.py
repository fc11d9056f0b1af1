"""Combinatorial 2-complexes: the Graham-Houghton and Nambooripad constructions.

A TwoComplex is a labelled vertex list, labelled undirected edges with a
fixed reference orientation, and faces given as closed walks of directed
edge references.  gh_complex builds the bipartite square complex on the
L- and R-classes of the idempotents (one edge per idempotent, one square
per singular E-square with boundary e f^-1 g h^-1); nambooripad_complex
builds the complex on E itself with co-R/co-L triangles and the same
singular squares.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

from .biorder import Biorder, enumerate_squares, singularizers
from .errors import VertexNotFound


class Edge(NamedTuple):
    label: str
    u: str
    v: str


class Face(NamedTuple):
    label: str
    boundary: tuple      # ((edge_label, +1|-1), ...) forming a closed walk


@dataclass(frozen=True)
class TwoComplex:
    vertices: tuple
    edges: tuple
    faces: tuple = field(default=())

    def __post_init__(self):
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise ValueError("repeated vertex labels")
        seen = set()
        for edge in self.edges:
            if edge.label in seen:
                raise ValueError(f"repeated edge label {edge.label!r}")
            seen.add(edge.label)
            if edge.u not in vset or edge.v not in vset:
                raise ValueError(f"edge {edge.label!r} has an unknown endpoint")
            if edge.u == edge.v:
                raise ValueError(f"edge {edge.label!r} is a loop")
        for f in self.faces:
            if not f.boundary:
                raise ValueError(f"face {f.label!r} has an empty boundary")
            walk = self.face_walk(f)
            for (a, b), (c, _) in zip(walk, walk[1:] + walk[:1]):
                if b != c:
                    raise ValueError(f"face {f.label!r} boundary is not a closed walk")

    @cached_property
    def edge_by_label(self) -> dict:
        return {e.label: e for e in self.edges}

    def face_walk(self, f: Face) -> list:
        """Boundary as a list of (tail, head) vertex pairs."""
        walk = []
        for label, sign in f.boundary:
            e = self.edge_by_label[label]
            walk.append((e.u, e.v) if sign > 0 else (e.v, e.u))
        return walk

    @cached_property
    def adjacency(self) -> dict:
        adj = {v: [] for v in self.vertices}
        for e in self.edges:
            adj[e.u].append((e.label, e.v))
            adj[e.v].append((e.label, e.u))
        return adj


@dataclass(frozen=True)
class ComplexComponent:
    vertices: tuple
    edge_labels: tuple
    face_labels: tuple

    @property
    def n_vertices(self):
        return len(self.vertices)

    @property
    def n_edges(self):
        return len(self.edge_labels)

    @property
    def n_faces(self):
        return len(self.face_labels)

    @property
    def euler_characteristic(self):
        return self.n_vertices - self.n_edges + self.n_faces


def components(X: TwoComplex) -> list:
    """Connected components of the 1-skeleton, in vertex-list order.

    Faces are attached to the component holding their boundary edges;
    isolated vertices form their own components.
    """
    comp_of = {}
    order = []
    for start in X.vertices:
        if start in comp_of:
            continue
        cid = len(order)
        order.append(start)
        stack = [start]
        comp_of[start] = cid
        while stack:
            v = stack.pop()
            for _, w in X.adjacency[v]:
                if w not in comp_of:
                    comp_of[w] = cid
                    stack.append(w)
    out = []
    for cid in range(len(order)):
        verts = tuple(v for v in X.vertices if comp_of[v] == cid)
        vset = set(verts)
        edges = tuple(e.label for e in X.edges if e.u in vset)
        faces = tuple(f.label for f in X.faces
                      if X.edge_by_label[f.boundary[0][0]].u in vset)
        out.append(ComplexComponent(verts, edges, faces))
    return out


def components_and_euler(X: TwoComplex) -> list:
    """(component, chi) pairs; chi = V - E + F per component."""
    return [(c, c.euler_characteristic) for c in components(X)]


def component_of_vertex(X: TwoComplex, v: str) -> ComplexComponent:
    for c in components(X):
        if v in c.vertices:
            return c
    raise VertexNotFound(f"no vertex {v!r} in the complex")


# ---------------------------------------------------------------------------
# The two complexes of a biorder
# ---------------------------------------------------------------------------

def _class_representative(items, class_of):
    rep = {}
    for x in items:
        c = class_of[x]
        if c not in rep:
            rep[c] = x
    return rep


def gh_vertex_labels(B: Biorder, e: int):
    """(L-vertex, R-vertex) labels of an idempotent in the GH complex.

    Classes are named after their least idempotent (1-based element
    index), so labels are stable across rebuilds.
    """
    g = B.green
    l_rep = _class_representative(B.E, g.l_class)
    r_rep = _class_representative(B.E, g.r_class)
    return (f"L(e{l_rep[g.l_class[e]] + 1})", f"R(e{r_rep[g.r_class[e]] + 1})")


def gh_edge_label(e: int) -> str:
    return f"e{e + 1}"


def gh_complex(B: Biorder) -> TwoComplex:
    """The Graham-Houghton complex of the biorder.

    One vertex per L-class and per R-class of E, one edge per idempotent
    oriented from its L-class to its R-class, and one square face per
    singular E-square [[e,f],[h,g]] with boundary word e f^-1 g h^-1.
    """
    l_vertices, r_vertices = [], []
    for e in B.E:
        lv, rv = gh_vertex_labels(B, e)
        if lv not in l_vertices:
            l_vertices.append(lv)
        if rv not in r_vertices:
            r_vertices.append(rv)
    edges = []
    for e in B.E:
        lv, rv = gh_vertex_labels(B, e)
        edges.append(Edge(gh_edge_label(e), lv, rv))
    faces = []
    for n, sq in enumerate(enumerate_squares(B), start=1):
        if not singularizers(B, sq):
            continue
        e, f, g, h = sq.corners
        faces.append(Face(f"sq{n}", (
            (gh_edge_label(e), +1),
            (gh_edge_label(f), -1),
            (gh_edge_label(g), +1),
            (gh_edge_label(h), -1),
        )))
    return TwoComplex(tuple(l_vertices) + tuple(r_vertices), tuple(edges),
                      tuple(faces))


def nambooripad_vertex_label(e: int) -> str:
    return f"e{e + 1}"


def _pair_edge_label(x: int, y: int) -> str:
    a, b = sorted((x, y))
    return f"e{a + 1}-e{b + 1}"


def nambooripad_complex(B: Biorder) -> TwoComplex:
    """The relator complex on E: vertices are idempotents, edges the
    R u L pairs, a triangle for every co-R or co-L triple of distinct
    idempotents and a square for every singular E-square."""
    vertices = tuple(nambooripad_vertex_label(e) for e in B.E)
    g = B.green
    edges = []
    for i, x in enumerate(B.E):
        for y in B.E[i + 1:]:
            if B.related(x, y):
                edges.append(Edge(_pair_edge_label(x, y),
                                  nambooripad_vertex_label(x),
                                  nambooripad_vertex_label(y)))
    faces = []
    tri_no = 0
    for class_of in (g.r_class, g.l_class):
        buckets: dict[int, list] = {}
        for x in B.E:
            buckets.setdefault(class_of[x], []).append(x)
        for c in sorted(buckets):
            members = buckets[c]
            for i, a in enumerate(members):
                for j, b in enumerate(members[i + 1:], start=i + 1):
                    for cc in members[j + 1:]:
                        tri_no += 1
                        faces.append(Face(f"tri{tri_no}", (
                            (_pair_edge_label(a, b), _dir_sign(a, b)),
                            (_pair_edge_label(b, cc), _dir_sign(b, cc)),
                            (_pair_edge_label(cc, a), _dir_sign(cc, a)),
                        )))
    for n, sq in enumerate(enumerate_squares(B), start=1):
        if not singularizers(B, sq):
            continue
        e, f, gg, h = sq.corners
        faces.append(Face(f"sq{n}", (
            (_pair_edge_label(e, f), _dir_sign(e, f)),
            (_pair_edge_label(f, gg), _dir_sign(f, gg)),
            (_pair_edge_label(gg, h), _dir_sign(gg, h)),
            (_pair_edge_label(h, e), _dir_sign(h, e)),
        )))
    return TwoComplex(vertices, tuple(edges), tuple(faces))


def _dir_sign(x: int, y: int) -> int:
    """Traversal sign of the step x -> y along the edge stored as (min, max)."""
    return +1 if x < y else -1


# ---------------------------------------------------------------------------
# Closed-surface recognition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SurfaceType:
    kind: str                 # "orientable" | "non_orientable" | "not_closed"
    genus: int | None
    euler_characteristic: int
    reason: str = ""

    def describe(self) -> str:
        if self.kind == "orientable":
            return f"closed orientable surface of genus {self.genus}"
        if self.kind == "non_orientable":
            return f"closed non-orientable surface (chi={self.euler_characteristic})"
        return f"not a closed surface ({self.reason})"


def surface_classify(X: TwoComplex, component: ComplexComponent) -> SurfaceType:
    """Closed-surface test and classification of one component.

    Closed means: every edge lies on exactly two face sides and the
    corners around every vertex close into a single cycle.  Orientability
    is decided by propagating face orientations across shared edges, and
    the genus comes from the Euler characteristic.
    """
    chi = component.euler_characteristic
    face_of = {f.label: f for f in X.faces}
    faces = [face_of[lbl] for lbl in component.face_labels]
    edge_sides: dict[str, list] = {lbl: [] for lbl in component.edge_labels}
    corners: dict[str, list] = {v: [] for v in component.vertices}
    for f in faces:
        walk = X.face_walk(f)
        k = len(walk)
        for i, (label, sign) in enumerate(f.boundary):
            edge_sides[label].append((f.label, sign))
            head = walk[i][1]
            nxt = f.boundary[(i + 1) % k][0]
            corners[head].append((label, nxt))

    if not faces:
        return SurfaceType("not_closed", None, chi, "no faces")
    for label, sides in edge_sides.items():
        if len(sides) != 2:
            return SurfaceType("not_closed", None, chi,
                               f"edge {label} lies on {len(sides)} face sides")
    for v in component.vertices:
        if not _link_is_single_cycle(v, corners[v], X):
            return SurfaceType("not_closed", None, chi,
                               f"link of vertex {v} is not a single cycle")

    orientable = _orientable(faces, edge_sides)
    if orientable:
        assert chi % 2 == 0
        return SurfaceType("orientable", (2 - chi) // 2, chi)
    return SurfaceType("non_orientable", None, chi)


def _link_is_single_cycle(v, corner_list, X: TwoComplex) -> bool:
    """The corners at v must pair up the incident edge-ends into one cycle."""
    incident = [lbl for lbl, _ in X.adjacency[v]]
    if not incident:
        return False
    degree = {lbl: 0 for lbl in incident}
    for a, b in corner_list:
        if a not in degree or b not in degree:
            return False
        degree[a] += 1
        degree[b] += 1
    if any(d != 2 for d in degree.values()):
        return False
    # 2-regular multigraph on the incident edges: connected iff one cycle
    neighbours: dict[str, list] = {lbl: [] for lbl in incident}
    for a, b in corner_list:
        neighbours[a].append(b)
        neighbours[b].append(a)
    seen = {incident[0]}
    stack = [incident[0]]
    while stack:
        x = stack.pop()
        for y in neighbours[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(incident)


def _orientable(faces, edge_sides) -> bool:
    """Orientations propagate consistently iff each shared edge is run in
    opposite directions by its two (flipped) face sides."""
    flip = {}
    by_face: dict[str, list] = {}
    for label, sides in edge_sides.items():
        for fl, sign in sides:
            by_face.setdefault(fl, []).append(label)
    for f in faces:
        if f.label in flip:
            continue
        flip[f.label] = False
        stack = [f.label]
        while stack:
            cur = stack.pop()
            for label in by_face[cur]:
                (f1, s1), (f2, s2) = edge_sides[label]
                if f1 == f2:
                    if s1 == s2:
                        return False
                    continue
                other, s_cur, s_other = ((f2, s1, s2) if f1 == cur
                                         else (f1, s2, s1))
                # effective directions must be opposite after flips
                need_flip = (s_cur == s_other) ^ flip[cur]
                if other not in flip:
                    flip[other] = need_flip
                    stack.append(other)
                elif flip[other] != need_flip:
                    return False
    return True


# ---------------------------------------------------------------------------
# Export
# ---------------------------------------------------------------------------

def export_dot(X: TwoComplex, name: str = "complex") -> str:
    """1-skeleton in DOT with faces listed as trailing comments."""
    lines = [f"graph {name} {{"]
    for v in X.vertices:
        lines.append(f'  "{v}";')
    for e in X.edges:
        lines.append(f'  "{e.u}" -- "{e.v}" [label="{e.label}"];')
    for f in X.faces:
        word = " ".join(lbl if s > 0 else f"{lbl}^-1" for lbl, s in f.boundary)
        lines.append(f"  // face {f.label}: {word}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def complex_json(X: TwoComplex) -> dict:
    return {
        "vertices": list(X.vertices),
        "edges": [{"label": e.label, "ends": [e.u, e.v]} for e in X.edges],
        "faces": [{"label": f.label,
                   "boundary": [[lbl, s] for lbl, s in f.boundary]}
                  for f in X.faces],
    }
