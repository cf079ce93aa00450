"""Dart-based plane multigraphs.

Edge ``e`` owns the darts ``2e`` (from its smaller endpoint) and ``2e + 1``;
``d ^ 1`` is the twin of ``d``.  ``rot[d]`` is the next dart counterclockwise
around ``origin[d]``.  Faces are the orbits of ``d -> rot[d ^ 1]``, which
traces inner faces counterclockwise and the outer face clockwise.  The face
traced through dart ``d`` occupies the corner between ``rot^-1(d)`` and ``d``.

A disconnected graph is drawn with every component lying in the outer face
of the others, so ``outer`` holds one dart per component that has edges, and
isolated vertices always lie in the outer face.  Vertex labels are arbitrary
integers and are inherited by every subgraph, so colourings computed on a
piece can be merged back without translation.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Mapping, Sequence

__all__ = [
    "CycleRef",
    "EulerViolation",
    "Face",
    "GraphFormatError",
    "InconsistentRotation",
    "MissingElement",
    "NotSeparating",
    "PlaneGraph",
    "PlaneGraphError",
    "SlotsNotCofacial",
    "Split",
    "add_edge",
    "build_from_rotation",
    "collapse_two_faces",
    "delete_edge",
    "delete_vertex",
    "disjoint_union",
    "faces",
    "find_separating_cycle",
    "from_json",
    "induced_subgraph",
    "relabel",
    "separating_cycles",
    "split_at_cycle",
    "to_json",
]


class PlaneGraphError(ValueError):
    """Base class for malformed embeddings and invalid edits."""


class InconsistentRotation(PlaneGraphError):
    pass


class EulerViolation(PlaneGraphError):
    pass


class NotSeparating(PlaneGraphError):
    pass


class SlotsNotCofacial(PlaneGraphError):
    pass


class MissingElement(PlaneGraphError):
    pass


class GraphFormatError(PlaneGraphError):
    pass


@dataclass(frozen=True)
class Face:
    index: int
    darts: tuple[int, ...]
    vertices: tuple[int, ...]
    outer: bool

    @property
    def degree(self) -> int:
        return len(self.darts)


@dataclass(frozen=True)
class CycleRef:
    """A 2- or 3-cycle given by its edges.

    ``darts[i]`` runs from ``vertices[i]`` to ``vertices[i + 1]``.
    ``inside_dart`` is a cycle dart whose face lies on the enclosed side.
    """

    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    darts: tuple[int, ...]
    inside_dart: int
    inside: frozenset[int]
    outside: frozenset[int]

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def separating(self) -> bool:
        return bool(self.inside) and bool(self.outside)


@dataclass(frozen=True)
class Split:
    """Result of :func:`split_at_cycle`; vertex labels are those of the parent."""

    outside_part: PlaneGraph
    inside_part: PlaneGraph
    cycle: CycleRef

    def __iter__(self):
        return iter((self.outside_part, self.inside_part))


@dataclass(frozen=True, eq=False)
class PlaneGraph:
    vertices: tuple[int, ...]
    origin: tuple[int, ...]
    rot: tuple[int, ...]
    outer: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        self._validate()

    # -- basic accessors -------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.origin) // 2

    @property
    def n_darts(self) -> int:
        return len(self.origin)

    def head(self, d: int) -> int:
        return self.origin[d ^ 1]

    def edge_ends(self, e: int) -> tuple[int, int]:
        return self.origin[2 * e], self.origin[2 * e + 1]

    def edges(self) -> list[tuple[int, int]]:
        return [self.edge_ends(e) for e in range(self.n_edges)]

    def degree(self, v: int) -> int:
        return len(self.darts_at[v])

    def rotation(self, v: int) -> tuple[int, ...]:
        """Darts leaving ``v`` in counterclockwise order, starting at the smallest."""
        return self.darts_at[v]

    def edges_between(self, u: int, v: int) -> list[int]:
        return self._edge_index.get((min(u, v), max(u, v)), [])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_index

    def face_darts(self, d: int) -> tuple[int, ...]:
        return self.faces[self.face_of[d]].darts

    def is_outer_dart(self, d: int) -> bool:
        return self.faces[self.face_of[d]].outer

    def is_two_face(self, face: Face) -> bool:
        """A face bounded by two distinct parallel edges."""
        return face.degree == 2 and face.darts[0] >> 1 != face.darts[1] >> 1

    # -- derived structure -----------------------------------------------

    @cached_property
    def darts_at(self) -> dict[int, tuple[int, ...]]:
        first: dict[int, int] = {}
        for d, v in enumerate(self.origin):
            if v not in first:
                first[v] = d
        out: dict[int, tuple[int, ...]] = {}
        for v in self.vertices:
            if v not in first:
                out[v] = ()
                continue
            ring = [first[v]]
            d = self.rot[first[v]]
            while d != first[v]:
                ring.append(d)
                d = self.rot[d]
            out[v] = tuple(ring)
        return out

    @cached_property
    def rot_inv(self) -> tuple[int, ...]:
        inv = [0] * self.n_darts
        for d, r in enumerate(self.rot):
            inv[r] = d
        return tuple(inv)

    @cached_property
    def _edge_index(self) -> dict[tuple[int, int], list[int]]:
        index: dict[tuple[int, int], list[int]] = {}
        for e in range(self.n_edges):
            u, v = self.edge_ends(e)
            index.setdefault((min(u, v), max(u, v)), []).append(e)
        return index

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges():
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}

    @cached_property
    def _orbits(self) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
        face_of = [-1] * self.n_darts
        orbits: list[tuple[int, ...]] = []
        for start in range(self.n_darts):
            if face_of[start] >= 0:
                continue
            orbit = []
            d = start
            while face_of[d] < 0:
                face_of[d] = len(orbits)
                orbit.append(d)
                d = self.rot[d ^ 1]
            orbits.append(tuple(orbit))
        return tuple(orbits), tuple(face_of)

    @property
    def face_of(self) -> tuple[int, ...]:
        return self._orbits[1]

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        """Dart orbits, then one dartless face per isolated vertex.

        The empty graph has a single dartless face.
        """
        orbits, face_of = self._orbits
        outer_ids = {face_of[d] for d in self.outer}
        result = []
        for i, orbit in enumerate(orbits):
            verts = tuple(dict.fromkeys(self.origin[d] for d in orbit))
            result.append(Face(i, orbit, verts, i in outer_ids))
        for v in self.vertices:
            if not self.darts_at[v]:
                result.append(Face(len(result), (), (v,), True))
        if not self.vertices:
            result.append(Face(0, (), (), True))
        return tuple(result)

    @cached_property
    def regions(self) -> tuple[tuple[int, ...], ...]:
        """Vertex sets of the faces of the whole drawing.

        Index 0 is the outer face, merged across components; the rest are the
        inner faces in :attr:`faces` order.
        """
        outer: set[int] = set()
        inner = []
        for f in self.faces:
            if f.outer:
                outer.update(f.vertices)
            else:
                inner.append(f.vertices)
        return (tuple(sorted(outer)), *inner)

    @property
    def outer_vertices(self) -> frozenset[int]:
        return frozenset(self.regions[0])

    def outer_edges(self) -> list[int]:
        return sorted({d >> 1 for f in self.faces if f.outer for d in f.darts})

    @cached_property
    def component_of(self) -> dict[int, int]:
        label: dict[int, int] = {}
        cid = -1
        for v in self.vertices:
            if v in label:
                continue
            cid += 1
            label[v] = cid
            queue = deque([v])
            while queue:
                u = queue.popleft()
                for w in self.adjacency[u]:
                    if w not in label:
                        label[w] = cid
                        queue.append(w)
        return label

    @cached_property
    def components(self) -> tuple[frozenset[int], ...]:
        groups: dict[int, set[int]] = {}
        for v, c in self.component_of.items():
            groups.setdefault(c, set()).add(v)
        return tuple(frozenset(groups[c]) for c in sorted(groups))

    def is_connected(self) -> bool:
        return len(self.components) <= 1

    @cached_property
    def triangles(self) -> tuple[tuple[int, int, int], ...]:
        """Vertex triples that are pairwise adjacent (3-cycles as vertex sets)."""
        adj = self.adjacency
        found = []
        for a in self.vertices:
            for b in adj[a]:
                if b <= a:
                    continue
                for c in adj[a] & adj[b]:
                    if c > b:
                        found.append((a, b, c))
        return tuple(sorted(found))

    # -- validation ------------------------------------------------------

    def _validate(self) -> None:
        n = len(self.origin)
        if len(self.rot) != n or n % 2:
            raise InconsistentRotation("origin and rotation must cover the same even number of darts")
        if list(self.vertices) != sorted(set(self.vertices)):
            raise InconsistentRotation("vertex labels must be sorted and unique")
        vset = set(self.vertices)
        for d in range(n):
            if self.origin[d] not in vset:
                raise InconsistentRotation(f"dart {d} starts at unknown vertex {self.origin[d]}")
            if self.origin[d] == self.origin[d ^ 1]:
                raise InconsistentRotation(f"edge {d >> 1} is a loop")
        if sorted(self.rot) != list(range(n)):
            raise InconsistentRotation("rotation is not a permutation of the darts")
        for d in range(n):
            if self.origin[self.rot[d]] != self.origin[d]:
                raise InconsistentRotation(f"rotation moves dart {d} to another vertex")
        counts: dict[int, int] = {}
        for v in self.origin:
            counts[v] = counts.get(v, 0) + 1
        for v, ring in self.darts_at.items():
            if len(ring) != counts.get(v, 0):
                raise InconsistentRotation(f"darts around vertex {v} form more than one cycle")

        comp = self.component_of
        orbits, face_of = self._orbits
        n_comp = len(self.components)
        v_count = [0] * n_comp
        e_count = [0] * n_comp
        f_count = [0] * n_comp
        for v in self.vertices:
            v_count[comp[v]] += 1
        for e in range(self.n_edges):
            e_count[comp[self.origin[2 * e]]] += 1
        for orbit in orbits:
            f_count[comp[self.origin[orbit[0]]]] += 1
        for c in range(n_comp):
            if e_count[c] == 0:
                f_count[c] = 1
            if v_count[c] - e_count[c] + f_count[c] != 2:
                raise EulerViolation(
                    f"component {c}: V={v_count[c]} E={e_count[c]} F={f_count[c]} is not a plane embedding"
                )

        seen = set()
        for d in self.outer:
            if not 0 <= d < n:
                raise InconsistentRotation(f"outer dart {d} does not exist")
            c = comp[self.origin[d]]
            if c in seen:
                raise InconsistentRotation(f"component {c} has more than one outer dart")
            seen.add(c)
        with_edges = {comp[self.origin[d]] for d in range(n)}
        if seen != with_edges:
            raise InconsistentRotation("every component with edges needs exactly one outer dart")

    # -- construction helpers -------------------------------------------

    @classmethod
    def _assemble(
        cls,
        vertices: Iterable[int],
        origin: Sequence[int],
        rot: Sequence[int],
        candidates: Iterable[int] = (),
    ) -> PlaneGraph:
        """Build a graph, choosing per component the first candidate outer dart."""
        vertices = tuple(sorted(vertices))
        origin = tuple(origin)
        rot = tuple(rot)
        parent = {v: v for v in vertices}

        def find(v: int) -> int:
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for d in range(0, len(origin), 2):
            a, b = find(origin[d]), find(origin[d + 1])
            if a != b:
                parent[a] = b
        chosen: dict[int, int] = {}
        for d in candidates:
            root = find(origin[d])
            chosen.setdefault(root, d)
        # Components nobody nominated get their longest face.
        missing = {find(origin[d]) for d in range(len(origin))} - set(chosen)
        if missing:
            seen = [False] * len(origin)
            best: dict[int, tuple[int, int]] = {}
            for start in range(len(origin)):
                if seen[start]:
                    continue
                d, length = start, 0
                while not seen[d]:
                    seen[d] = True
                    length += 1
                    d = rot[d ^ 1]
                root = find(origin[start])
                if root in missing and (root not in best or length > best[root][0]):
                    best[root] = (length, start)
            for root, (_, d) in best.items():
                chosen[root] = d
        return cls(vertices, origin, rot, tuple(sorted(chosen.values())))


# -- construction -----------------------------------------------------------


def build_from_rotation(
    rings: Mapping[int, Sequence[Sequence[int]]] | Sequence[Sequence[Sequence[int]]],
    outer_hint: Sequence[int] | Sequence[Sequence[int]] | None = None,
) -> PlaneGraph:
    """Build a graph from counterclockwise neighbour lists.

    ``rings[u]`` lists ``(v, k)`` pairs: the ``k``-th edge between ``u`` and
    ``v``.  Both endpoints must name each edge exactly once.  ``outer_hint``
    is a dart ``(u, v, k)`` on the outer face, or a list of such darts (one
    per component).  Components without a hint get their longest face.
    """
    if not isinstance(rings, Mapping):
        rings = dict(enumerate(rings))
    vertices = sorted(rings)
    vset = set(vertices)
    sides: dict[tuple[int, int, int], list[int]] = {}
    for u in vertices:
        for entry in rings[u]:
            if len(entry) != 2:
                raise InconsistentRotation(f"rotation entry {entry!r} at {u} is not a (neighbour, index) pair")
            v, k = int(entry[0]), int(entry[1])
            if v not in vset:
                raise InconsistentRotation(f"vertex {u} names unknown neighbour {v}")
            if v == u:
                raise InconsistentRotation(f"vertex {u} has a loop")
            key = (min(u, v), max(u, v), k)
            sides.setdefault(key, []).append(u)
    for key, ends in sides.items():
        if sorted(ends) != [key[0], key[1]]:
            raise InconsistentRotation(f"edge {key} is not named exactly once by each endpoint")
    keys = sorted(sides)
    edge_id = {key: i for i, key in enumerate(keys)}

    def dart(u: int, v: int, k: int) -> int:
        key = (min(u, v), max(u, v), k)
        if key not in edge_id:
            raise InconsistentRotation(f"no edge {key}")
        return 2 * edge_id[key] + (0 if u < v else 1)

    n = 2 * len(keys)
    origin = [0] * n
    rot = [0] * n
    for u in vertices:
        ring = [dart(u, int(v), int(k)) for v, k in rings[u]]
        for i, d in enumerate(ring):
            origin[d] = u
            rot[d] = ring[(i + 1) % len(ring)]

    hints: list[int] = []
    if outer_hint is not None and len(outer_hint):
        triples = [outer_hint] if isinstance(outer_hint[0], int) else outer_hint
        for t in triples:
            u, v, k = (int(x) for x in t)
            hints.append(dart(u, v, k))
    return PlaneGraph._assemble(vertices, origin, rot, hints)


def disjoint_union(*graphs: PlaneGraph) -> PlaneGraph:
    """Place graphs with disjoint labels side by side in a common outer face."""
    vertices: list[int] = []
    origin: list[int] = []
    rot: list[int] = []
    outer: list[int] = []
    for g in graphs:
        offset = len(origin)
        vertices.extend(g.vertices)
        origin.extend(g.origin)
        rot.extend(r + offset for r in g.rot)
        outer.extend(d + offset for d in g.outer)
    if len(set(vertices)) != len(vertices):
        raise PlaneGraphError("disjoint_union needs disjoint vertex labels")
    return PlaneGraph(tuple(sorted(vertices)), tuple(origin), tuple(rot), tuple(sorted(outer)))


def relabel(g: PlaneGraph, mapping: Mapping[int, int] | int) -> PlaneGraph:
    """Rename vertices by a mapping, or shift every label by an integer."""
    if isinstance(mapping, int):
        shift = mapping
        mapping = {v: v + shift for v in g.vertices}
    if len({mapping[v] for v in g.vertices}) != g.n_vertices:
        raise PlaneGraphError("relabelling must be injective")
    return PlaneGraph(
        tuple(sorted(mapping[v] for v in g.vertices)),
        tuple(mapping[v] for v in g.origin),
        g.rot,
        g.outer,
    )


def faces(g: PlaneGraph) -> list[Face]:
    return list(g.faces)


# -- edits -----------------------------------------------------------------


def _first_kept(g: PlaneGraph, d: int, kept_edges, keep_vertices) -> int | None:
    if g.origin[d] not in keep_vertices:
        return None
    x = d
    while True:
        if (x >> 1) in kept_edges:
            return x
        x = g.rot[x]
        if x == d:
            return None


def _restrict(
    g: PlaneGraph,
    keep_vertices: Iterable[int],
    keep_edges: Iterable[int],
    hints: Iterable[int] = (),
) -> PlaneGraph:
    """Sub-embedding on the given vertices and edges.

    Outer faces are re-derived from the corners of the old outer faces; a
    component that touches none of them takes the face that absorbed the
    deleted darts.
    """
    keep_vertices = frozenset(keep_vertices)
    edges = sorted(set(keep_edges))
    new_id = {e: i for i, e in enumerate(edges)}
    for e in edges:
        if not set(g.edge_ends(e)) <= keep_vertices:
            raise MissingElement(f"edge {e} kept without both endpoints")

    def nd(d: int) -> int:
        return 2 * new_id[d >> 1] + (d & 1)

    origin = [0] * (2 * len(edges))
    rot = [0] * (2 * len(edges))
    for e in edges:
        for d in (2 * e, 2 * e + 1):
            origin[nd(d)] = g.origin[d]
            x = g.rot[d]
            while (x >> 1) not in new_id:
                x = g.rot[x]
            rot[nd(d)] = nd(x)

    candidates = [nd(h) for h in hints]
    for od in g.outer:
        for d in g.face_darts(od):
            c = _first_kept(g, d, new_id, keep_vertices)
            if c is not None:
                candidates.append(nd(c))
    for d in range(g.n_darts):
        if (d >> 1) not in new_id:
            c = _first_kept(g, d, new_id, keep_vertices)
            if c is not None:
                candidates.append(nd(c))
    return PlaneGraph._assemble(keep_vertices, origin, rot, candidates)


def induced_subgraph(g: PlaneGraph, vertices: Iterable[int]) -> PlaneGraph:
    vs = frozenset(vertices)
    missing = vs - set(g.vertices)
    if missing:
        raise MissingElement(f"unknown vertices {sorted(missing)}")
    keep = [e for e in range(g.n_edges) if set(g.edge_ends(e)) <= vs]
    return _restrict(g, vs, keep)


def delete_vertex(g: PlaneGraph, v: int) -> PlaneGraph:
    if v not in g.adjacency:
        raise MissingElement(f"no vertex {v}")
    keep = [e for e in range(g.n_edges) if v not in g.edge_ends(e)]
    return _restrict(g, set(g.vertices) - {v}, keep)


def delete_edge(g: PlaneGraph, d: int) -> PlaneGraph:
    """Delete the edge carrying dart ``d``."""
    if not 0 <= d < g.n_darts:
        raise MissingElement(f"no dart {d}")
    keep = [e for e in range(g.n_edges) if e != d >> 1]
    return _restrict(g, g.vertices, keep)


def _corner_face(g: PlaneGraph, v: int, slot: int | None) -> tuple[str, int]:
    ring = g.darts_at[v]
    if not ring:
        if slot is not None:
            raise SlotsNotCofacial(f"vertex {v} has no darts, slot must be None")
        return ("isolated", v)
    if slot is None or not 0 <= slot < len(ring):
        raise SlotsNotCofacial(f"slot {slot!r} is not a rotation position of {v}")
    return ("face", g.face_of[g.rot[ring[slot]]])


def add_edge(g: PlaneGraph, u: int, v: int, u_slot: int | None, v_slot: int | None) -> PlaneGraph:
    """Insert an edge ``uv`` counterclockwise after position ``u_slot`` of
    ``g.rotation(u)`` and after position ``v_slot`` of ``g.rotation(v)``.

    Slots are ``None`` for vertices without darts.  The two corners must lie
    on one face; corners on the outer faces of different components count as
    cofacial since those components share the outer face.
    """
    if u == v:
        raise PlaneGraphError("loops are not allowed")
    for w in (u, v):
        if w not in g.adjacency:
            raise MissingElement(f"no vertex {w}")
    cu = _corner_face(g, u, u_slot)
    cv = _corner_face(g, v, v_slot)

    def on_outer(corner: tuple[str, int]) -> bool:
        return corner[0] == "isolated" or g.faces[corner[1]].outer

    same_comp = g.component_of[u] == g.component_of[v]
    if same_comp:
        ok = cu == cv
    else:
        ok = on_outer(cu) and on_outer(cv)
    if not ok:
        raise SlotsNotCofacial(f"corners at {u} and {v} do not share a face")

    e = g.n_edges
    du, dv = 2 * e, 2 * e + 1
    if u > v:
        du, dv = dv, du
    origin = list(g.origin) + [0, 0]
    rot = list(g.rot) + [0, 0]
    origin[du], origin[dv] = u, v
    for w, slot, dw in ((u, u_slot, du), (v, v_slot, dv)):
        if slot is None:
            rot[dw] = dw
        else:
            a = g.darts_at[w][slot]
            rot[dw] = g.rot[a]
            rot[a] = dw
    # Appending keeps every existing dart id valid.
    return PlaneGraph._assemble(g.vertices, origin, rot, [*g.outer, du])


def collapse_two_faces(g: PlaneGraph, keep_outer: bool = False) -> PlaneGraph:
    """Delete one edge of every 2-face until none remain.

    With ``keep_outer`` an outer 2-face stays.  Deleting one of its edges
    would merge an inner face into the outer face, so afterwards the faces
    are exactly the original faces other than the inner 2-faces.
    """
    while True:
        two = next((f for f in g.faces if g.is_two_face(f) and not (keep_outer and f.outer)), None)
        if two is None:
            return g
        g = delete_edge(g, max(two.darts))


# -- separating cycles ------------------------------------------------------


def _face_classes(g: PlaneGraph, cycle_edges: Sequence[int]) -> list[bool]:
    """Mark each face orbit as lying inside the cycle or not.

    The cycle edges form a bond of the dual graph, so gluing faces along
    every other edge leaves exactly two classes; the one holding the outer
    face of the cycle's component is outside.  Orbits of other components
    are outside.
    """
    n_faces = len(g._orbits[0])
    parent = list(range(n_faces))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    ce = set(cycle_edges)
    fo = g.face_of
    for e in range(g.n_edges):
        if e not in ce:
            a, b = find(fo[2 * e]), find(fo[2 * e + 1])
            if a != b:
                parent[a] = b
    comp = g.component_of[g.origin[2 * cycle_edges[0]]]
    outer_dart = next(d for d in g.outer if g.component_of[g.origin[d]] == comp)
    out_root = find(fo[outer_dart])
    for e in ce:
        if find(fo[2 * e]) == find(fo[2 * e + 1]):
            raise PlaneGraphError("cycle edges do not separate the faces; embedding is not planar")
    return [find(f) != out_root and g.component_of[g.origin[g._orbits[0][f][0]]] == comp for f in range(n_faces)]


def _sides(g: PlaneGraph, cycle_edges: Sequence[int]) -> tuple[frozenset[int], frozenset[int], list[bool]]:
    """Vertices strictly inside and strictly outside a cycle, plus face classes."""
    inner = _face_classes(g, cycle_edges)
    cyc_vertices = {v for e in cycle_edges for v in g.edge_ends(e)}
    inside, outside = set(), set()
    for v in g.vertices:
        if v in cyc_vertices:
            continue
        ring = g.darts_at[v]
        if ring and inner[g.face_of[ring[0]]]:
            inside.add(v)
        else:
            outside.add(v)
    return frozenset(inside), frozenset(outside), inner


def _make_cycle(g: PlaneGraph, verts: Sequence[int], edges: Sequence[int]) -> CycleRef:
    darts = tuple(2 * e if g.origin[2 * e] == verts[i] else 2 * e + 1 for i, e in enumerate(edges))
    inside, outside, inner = _sides(g, edges)
    inside_dart = min(d for e in edges for d in (2 * e, 2 * e + 1) if inner[g.face_of[d]])
    return CycleRef(tuple(verts), tuple(edges), darts, inside_dart, inside, outside)


def _candidate_cycles(g: PlaneGraph, length: int):
    if length == 2:
        for (u, v), es in sorted(g._edge_index.items()):
            for i in range(len(es)):
                for j in range(i + 1, len(es)):
                    yield (u, v), (es[i], es[j])
    elif length == 3:
        for a, b, c in g.triangles:
            for eab, ebc, eca in product(g.edges_between(a, b), g.edges_between(b, c), g.edges_between(c, a)):
                yield (a, b, c), (eab, ebc, eca)
    else:
        raise ValueError("only cycles of length 2 or 3 are supported")


def separating_cycles(g: PlaneGraph, length: int) -> list[CycleRef]:
    """Every cycle of the given length with vertices strictly on both sides."""
    found = []
    for verts, edges in _candidate_cycles(g, length):
        inside, outside, _ = _sides(g, edges)
        if inside and outside:
            found.append(_make_cycle(g, verts, edges))
    return found


def find_separating_cycle(g: PlaneGraph, length: int) -> CycleRef | None:
    """An innermost separating cycle of the given length, or ``None``.

    Innermost means fewest enclosed vertices; ties go to the smallest sorted
    vertex tuple, then the smallest edge ids.  A cycle with the fewest
    enclosed vertices cannot strictly contain another separating cycle.
    """
    best = None
    best_key = None
    for verts, edges in _candidate_cycles(g, length):
        inside, outside, _ = _sides(g, edges)
        if not (inside and outside):
            continue
        key = (len(inside), tuple(sorted(verts)), tuple(sorted(edges)))
        if best_key is None or key < best_key:
            best_key, best = key, (verts, edges)
    if best is None:
        return None
    return _make_cycle(g, *best)


def split_at_cycle(g: PlaneGraph, c: CycleRef) -> Split:
    """Cut ``g`` along a separating cycle.

    The outside part keeps everything drawn outside the cycle and the inside
    part everything drawn inside; both keep the cycle itself, except that a
    2-cycle survives as its first edge only.  The face bounded by the cycle
    becomes the outer face of the inside part.
    """
    inside, outside, inner = _sides(g, c.edges)
    if not (inside and outside):
        raise NotSeparating(f"cycle on {c.vertices} does not separate the graph")
    cyc_v = set(c.vertices)
    kept_cycle = list(c.edges) if c.length == 3 else [c.edges[0]]
    ce = set(c.edges)
    in_edges = [e for e in range(g.n_edges) if e not in ce and inner[g.face_of[2 * e]]]
    out_edges = [e for e in range(g.n_edges) if e not in ce and not inner[g.face_of[2 * e]]]
    facing_out = [d for e in kept_cycle for d in (2 * e, 2 * e + 1) if not inner[g.face_of[d]]]
    outside_part = _restrict(g, outside | cyc_v, out_edges + kept_cycle)
    inside_part = _restrict(g, inside | cyc_v, in_edges + kept_cycle, hints=facing_out[:1])
    return Split(outside_part, inside_part, c)


# -- serialization -----------------------------------------------------------


def _edge_labels(g: PlaneGraph) -> list[int]:
    """Occurrence index of each edge among the edges joining its endpoints."""
    seen: dict[tuple[int, int], int] = {}
    labels = []
    for e in range(g.n_edges):
        u, v = g.edge_ends(e)
        key = (min(u, v), max(u, v))
        labels.append(seen.get(key, 0))
        seen[key] = labels[-1] + 1
    return labels


def to_json(g: PlaneGraph) -> str:
    """Canonical text form.

    ``{"vertices": N, "rotations": [[[nbr, k], ...], ...], "outer": [u, v, k]}``
    where ``rotations[i]`` is the counterclockwise rotation of vertex ``i``
    starting at its smallest entry, ``[nbr, k]`` names the ``k``-th edge
    between the two vertices, and ``outer`` names a dart on the outer face.
    Graphs whose labels are not ``0..N-1`` carry a ``"labels"`` list and use
    labels throughout.  ``outer`` is ``null`` without edges and a list of
    darts when several components have edges.
    """
    k = _edge_labels(g)
    rotations = []
    for v in g.vertices:
        ring = [[g.head(d), k[d >> 1]] for d in g.darts_at[v]]
        if ring:
            i = ring.index(min(ring))
            ring = ring[i:] + ring[:i]
        rotations.append(ring)
    outer = [[g.origin[d], g.head(d), k[d >> 1]] for d in g.outer]
    data: dict = {"vertices": g.n_vertices}
    if g.vertices != tuple(range(g.n_vertices)):
        data["labels"] = list(g.vertices)
    data["rotations"] = rotations
    data["outer"] = None if not outer else outer[0] if len(outer) == 1 else outer
    return json.dumps(data)


def from_json(text: str) -> PlaneGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"not JSON: {exc}") from exc
    if not isinstance(data, dict) or "vertices" not in data or "rotations" not in data:
        raise GraphFormatError("graph needs 'vertices' and 'rotations'")
    n = data["vertices"]
    labels = data.get("labels", list(range(n)) if isinstance(n, int) else None)
    rotations = data["rotations"]
    if not isinstance(n, int) or n < 0 or len(labels) != n or len(rotations) != n:
        raise GraphFormatError("'vertices' must match the number of rotations and labels")
    try:
        rings = {int(lab): [tuple(entry) for entry in ring] for lab, ring in zip(labels, rotations)}
        if len(rings) != n:
            raise GraphFormatError("duplicate vertex labels")
        outer = data.get("outer")
        return build_from_rotation(rings, outer)
    except PlaneGraphError:
        raise
    except (TypeError, ValueError) as exc:
        raise GraphFormatError(str(exc)) from exc
