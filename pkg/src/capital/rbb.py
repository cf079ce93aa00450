"""Red/blue/black colourings with per-face red and blue constraints.

A request fixes an outer edge ``xy`` and a colour ``c`` for ``x``.  The
conditions checked are:

1. ``x`` has colour ``c``;
2. ``y`` is black;
3. no edge has two blue ends;
4. no vertex on the outer face is red;
5. every inner face has at most one red vertex;
6. every inner face without a red vertex has exactly one blue vertex;
7. (``STRONG7`` only) every 3-cycle has a vertex that is not black.

:func:`oracle_rbb` finds such a colouring by constraint search.
:func:`recursive_rbb` builds one by cutting along innermost separating 2-cycles
and triangles, colouring the outside first and then the inside with a
request derived from the colours on the cut, and it only calls the search
on pieces without separating 2- or 3-cycles.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Mapping

from .plane_graph import (
    PlaneGraph,
    add_edge,
    delete_edge,
    delete_vertex,
    find_separating_cycle,
    induced_subgraph,
    split_at_cycle,
)

__all__ = [
    "Colour",
    "ConditionSet",
    "GluingMismatch",
    "HasTwoFaces",
    "NoColouring",
    "RBBRequest",
    "SearchLimit",
    "TraceEvent",
    "Violation",
    "XYNotOuter",
    "brute_force_rbb",
    "check_conditions",
    "oracle_rbb",
    "recursive_rbb",
]


class Colour(str, enum.Enum):
    RED = "red"
    BLUE = "blue"
    BLACK = "black"


class ConditionSet(str, enum.Enum):
    FG6 = "FG6"
    STRONG7 = "STRONG7"


class HasTwoFaces(ValueError):
    pass


class XYNotOuter(ValueError):
    pass


class NoColouring(RuntimeError):
    """The search space was exhausted; for valid inputs this is a bug."""


class SearchLimit(RuntimeError):
    pass


class GluingMismatch(RuntimeError):
    """An inner colouring disagrees with the outer one on the cut."""


@dataclass(frozen=True)
class RBBRequest:
    x: int
    y: int
    c: Colour = Colour.BLACK
    conditions: ConditionSet = ConditionSet.STRONG7

    def __post_init__(self) -> None:
        object.__setattr__(self, "c", Colour(self.c))
        object.__setattr__(self, "conditions", ConditionSet(self.conditions))
        if self.c is Colour.RED:
            raise ValueError("the colour of x must be black or blue")
        if self.x == self.y:
            raise ValueError("x and y must differ")


@dataclass(frozen=True)
class Violation:
    condition: int
    witness: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class TraceEvent:
    depth: int
    kind: str
    cycle: tuple[int, ...] = ()
    case: str = ""


RBBColouring = dict[int, Colour]


def check_conditions(g: PlaneGraph, col: Mapping[int, Colour], req: RBBRequest) -> list[Violation]:
    """Every violated condition, with the offending vertices as witness."""
    missing = [v for v in g.vertices if v not in col]
    if missing:
        raise ValueError(f"colouring misses vertices {missing}")
    out: list[Violation] = []
    if col[req.x] != req.c:
        out.append(Violation(1, (req.x,), f"x={req.x} is {col[req.x].value}, wanted {req.c.value}"))
    if col[req.y] != Colour.BLACK:
        out.append(Violation(2, (req.y,), f"y={req.y} is {col[req.y].value}"))
    for u, v in sorted({tuple(sorted(g.edge_ends(e))) for e in range(g.n_edges)}):
        if col[u] == col[v] == Colour.BLUE:
            out.append(Violation(3, (u, v), "edge with two blue ends"))
    for v in g.regions[0]:
        if col[v] == Colour.RED:
            out.append(Violation(4, (v,), "red vertex on the outer face"))
    for verts in g.regions[1:]:
        reds = [v for v in verts if col[v] == Colour.RED]
        blues = [v for v in verts if col[v] == Colour.BLUE]
        if len(reds) > 1:
            out.append(Violation(5, tuple(verts), f"inner face with {len(reds)} red vertices"))
        if not reds and len(blues) != 1:
            out.append(Violation(6, tuple(verts), f"red-free inner face with {len(blues)} blue vertices"))
    if req.conditions is ConditionSet.STRONG7:
        for tri in g.triangles:
            if all(col[v] == Colour.BLACK for v in tri):
                out.append(Violation(7, tri, "all-black triangle"))
    return out


def brute_force_rbb(g: PlaneGraph, req: RBBRequest) -> list[RBBColouring]:
    """All valid colourings, by enumerating every one of the ``3^n`` candidates."""
    from itertools import product

    found = []
    for combo in product(list(Colour), repeat=g.n_vertices):
        col = dict(zip(g.vertices, combo))
        if not check_conditions(g, col, req):
            found.append(col)
    return found


def _require_request(g: PlaneGraph, req: RBBRequest) -> None:
    for v in (req.x, req.y):
        if v not in g.adjacency:
            raise XYNotOuter(f"vertex {v} is not in the graph")
    on_outer = any(g.is_outer_dart(d) for e in g.edges_between(req.x, req.y) for d in (2 * e, 2 * e + 1))
    if not on_outer:
        raise XYNotOuter(f"{req.x}{req.y} is not an edge on the outer face")


def _require_no_two_faces(g: PlaneGraph, allow_outer: bool = False) -> None:
    for f in g.faces:
        if g.is_two_face(f) and not (allow_outer and f.outer):
            raise HasTwoFaces(f"2-face on vertices {f.vertices}")


# -- constraint search ---------------------------------------------------------

_R, _B, _K = 1, 2, 4
_ALL = _R | _B | _K
_TO_COLOUR = {_R: Colour.RED, _B: Colour.BLUE, _K: Colour.BLACK}
_FROM_COLOUR = {c: m for m, c in _TO_COLOUR.items()}


class _Fail(Exception):
    pass


class _RBBSearch:
    """Bitmask domains with propagation to a fixpoint and MRV branching."""

    def __init__(self, g: PlaneGraph, req: RBBRequest, node_limit: int | None) -> None:
        self.g = g
        self.node_limit = node_limit
        self.nodes = 0
        self.inner = [tuple(f) for f in g.regions[1:]]
        self.tris = list(g.triangles) if req.conditions is ConditionSet.STRONG7 else []
        self.faces_at: dict[int, list[int]] = {v: [] for v in g.vertices}
        for i, f in enumerate(self.inner):
            for v in f:
                self.faces_at[v].append(i)
        self.tris_at: dict[int, list[int]] = {v: [] for v in g.vertices}
        for i, t in enumerate(self.tris):
            for v in t:
                self.tris_at[v].append(i)
        # Breadth-first rank from x breaks ties among equally constrained vertices.
        rank = {req.x: 0}
        queue = deque([req.x])
        while queue:
            u = queue.popleft()
            for w in sorted(g.adjacency[u]):
                if w not in rank:
                    rank[w] = len(rank)
                    queue.append(w)
        for v in g.vertices:
            rank.setdefault(v, len(rank))
        self.rank = rank
        dom = {v: _ALL for v in g.vertices}
        for v in g.regions[0]:
            dom[v] &= ~_R
        dom[req.x] &= _FROM_COLOUR[req.c]
        dom[req.y] &= _K
        self.start = dom

    def solve(self) -> RBBColouring | None:
        try:
            dom = self._propagate(dict(self.start), list(self.g.vertices))
        except _Fail:
            return None
        result = self._search(dom)
        if result is None:
            return None
        return {v: _TO_COLOUR[m] for v, m in result.items()}

    def _search(self, dom: dict[int, int]) -> dict[int, int] | None:
        open_vs = [v for v, m in dom.items() if m & (m - 1)]
        if not open_vs:
            return dom
        v = min(open_vs, key=lambda u: (bin(dom[u]).count("1"), self.rank[u]))
        for bit in (_K, _B, _R):
            if not dom[v] & bit:
                continue
            self.nodes += 1
            if self.node_limit is not None and self.nodes > self.node_limit:
                raise SearchLimit(f"more than {self.node_limit} search nodes")
            trial = dict(dom)
            trial[v] = bit
            try:
                trial = self._propagate(trial, [v])
            except _Fail:
                continue
            found = self._search(trial)
            if found is not None:
                return found
        return None

    def _narrow(self, dom: dict[int, int], v: int, mask: int, queue: list[int]) -> None:
        new = dom[v] & mask
        if new != dom[v]:
            if not new:
                raise _Fail
            dom[v] = new
            queue.append(v)

    def _propagate(self, dom: dict[int, int], queue: list[int]) -> dict[int, int]:
        adj = self.g.adjacency
        while queue:
            v = queue.pop()
            if dom[v] == _B:
                for w in adj[v]:
                    self._narrow(dom, w, ~_B, queue)
            for fi in self.faces_at[v]:
                self._face(dom, self.inner[fi], queue)
            for ti in self.tris_at[v]:
                t = self.tris[ti]
                blacks = [u for u in t if dom[u] == _K]
                if len(blacks) == 3:
                    raise _Fail
                if len(blacks) == 2:
                    (other,) = [u for u in t if dom[u] != _K]
                    self._narrow(dom, other, ~_K, queue)
        return dom

    def _face(self, dom: dict[int, int], face: tuple[int, ...], queue: list[int]) -> None:
        reds = [u for u in face if dom[u] == _R]
        if len(reds) > 1:
            raise _Fail
        if reds:
            for u in face:
                if u != reds[0]:
                    self._narrow(dom, u, ~_R, queue)
            return
        may_red = [u for u in face if dom[u] & _R]
        blues = [u for u in face if dom[u] == _B]
        if may_red:
            if len(blues) >= 2 and len(may_red) == 1:
                self._narrow(dom, may_red[0], _R, queue)
            return
        # No red is possible: exactly one blue is required.
        if len(blues) > 1:
            raise _Fail
        if blues:
            for u in face:
                if u != blues[0]:
                    self._narrow(dom, u, ~_B, queue)
            return
        may_blue = [u for u in face if dom[u] & _B]
        if not may_blue:
            raise _Fail
        if len(may_blue) == 1:
            self._narrow(dom, may_blue[0], _B, queue)


def oracle_rbb(g: PlaneGraph, req: RBBRequest, *, node_limit: int | None = None) -> RBBColouring:
    """A colouring meeting the request's conditions, found by search.

    Raises :class:`NoColouring` when none exists and :class:`SearchLimit`
    when ``node_limit`` branching steps did not settle the question.
    """
    _require_no_two_faces(g)
    _require_request(g, req)
    found = _RBBSearch(g, req, node_limit).solve()
    if found is None:
        raise NoColouring(f"no colouring for x={req.x}, y={req.y}, c={req.c.value}")
    return found


# -- inductive construction ----------------------------------------------------


def recursive_rbb(
    g: PlaneGraph,
    req: RBBRequest,
    *,
    trace: list[TraceEvent] | None = None,
    allow_outer_two_face: bool = False,
) -> RBBColouring:
    """A colouring meeting all seven conditions, built by cutting along
    innermost separating 2-cycles, then triangles, and searching only on the
    pieces that have neither.

    ``trace`` collects one event per cut, base case and component split.
    With ``allow_outer_two_face`` a component whose outer face is a 2-face
    (a lens ``ab`` with everything inside) is also accepted: one lens edge
    is dropped, a vertex of the face behind it is coloured red, and the rest
    is coloured with ``ab`` as the request edge.
    """
    _require_no_two_faces(g, allow_outer_two_face)
    _require_request(g, req)
    col = _Builder(trace, allow_outer_two_face).solve(g, req.x, req.y, req.c, 0)
    if __debug__:
        bad = check_conditions(g, col, RBBRequest(req.x, req.y, req.c, ConditionSet.STRONG7))
        assert not bad, bad
    return col


def _outer_edge_request(g: PlaneGraph) -> tuple[int, int]:
    e = min(g.outer_edges())
    return g.edge_ends(e)


def _outer_slot(g: PlaneGraph, v: int) -> int | None:
    ring = g.darts_at[v]
    if not ring:
        return None
    return next(i for i, d in enumerate(ring) if g.is_outer_dart(g.rot[d]))


class _Builder:
    def __init__(self, trace: list[TraceEvent] | None, allow_outer_two_face: bool = False) -> None:
        self.trace = trace
        self.allow_outer_two_face = allow_outer_two_face

    def _log(self, depth: int, kind: str, cycle: tuple[int, ...] = (), case: str = "") -> None:
        if self.trace is not None:
            self.trace.append(TraceEvent(depth, kind, cycle, case))

    def solve(self, g: PlaneGraph, x: int, y: int, c: Colour, depth: int) -> RBBColouring:
        _require_no_two_faces(g, self.allow_outer_two_face)
        if not g.is_connected():
            self._log(depth, "components")
            col: RBBColouring = {}
            for comp in g.components:
                sub = induced_subgraph(g, comp)
                if x in comp:
                    col.update(self.solve(sub, x, y, c, depth + 1))
                elif sub.n_edges == 0:
                    col.update({v: Colour.BLACK for v in comp})
                else:
                    a, b = _outer_edge_request(sub)
                    col.update(self.solve(sub, a, b, Colour.BLACK, depth + 1))
            return col
        outer = [f for f in g.faces if f.outer]
        cyc = find_separating_cycle(g, 2)
        if len(outer) == 1 and g.is_two_face(outer[0]):
            col = self._outer_lens(g, outer[0], x, y, c, depth)
        elif cyc is not None:
            col = self._cut_two(g, cyc, x, y, c, depth)
        else:
            tri = find_separating_cycle(g, 3)
            col = self._base(g, x, y, c, depth) if tri is None else self._cut_three(g, tri, x, y, c, depth)
        if __debug__:
            bad = check_conditions(g, col, RBBRequest(x, y, c))
            assert not bad, (depth, bad)
        return col

    def _merge(self, outer: RBBColouring, inner: RBBColouring, shared: dict[int, Colour]) -> RBBColouring:
        for v, want in shared.items():
            if inner.get(v) != want or outer.get(v, want) != want:
                raise GluingMismatch(f"vertex {v}: outer {outer.get(v)}, inner {inner.get(v)}")
        return {**outer, **inner}

    def _cut_two(self, g, cyc, x, y, c, depth) -> RBBColouring:
        outside, inside = split_at_cycle(g, cyc)
        outer_col = self.solve(outside, x, y, c, depth + 1)
        u1, u2 = cyc.vertices
        if Colour.RED in (outer_col[u1], outer_col[u2]):
            red, o = (u1, u2) if outer_col[u1] is Colour.RED else (u2, u1)
            c2 = outer_col[o]
            h = delete_vertex(inside, red)
            on_outer = sorted(
                h.head(d)
                for d in h.darts_at[o]
                if h.is_outer_dart(d) or h.is_outer_dart(d ^ 1)
            )
            if on_outer:
                v = on_outer[0]
                work = h
                case = "red"
            else:
                v = min(h.outer_vertices - {o})
                work = add_edge(h, o, v, _outer_slot(h, o), _outer_slot(h, v))
                case = "red+temporary-edge"
            self._log(depth, "cut2", cyc.vertices, case)
            inner_col = self.solve(work, o, v, c2, depth + 1)
            return self._merge(outer_col, inner_col, {o: c2})
        black, o = (u1, u2) if outer_col[u1] is Colour.BLACK else (u2, u1)
        c2 = outer_col[o]
        candidates = inside.outer_vertices - {u1, u2}
        assert candidates, "a separating 2-cycle leaves another vertex on the inner outer face"
        v = min(candidates)
        self._log(depth, "cut2", cyc.vertices, "black")
        inner_col = self.solve(delete_vertex(inside, v), o, black, c2, depth + 1)
        inner_col[v] = Colour.RED
        return self._merge(outer_col, inner_col, {o: c2, black: Colour.BLACK})

    def _outer_lens(self, g: PlaneGraph, face, x: int, y: int, c: Colour, depth: int) -> RBBColouring:
        # The outer 2-face is bounded by the two lens edges; dropping one
        # merges the outer face with the face behind it.
        dropped = max(face.darts)
        lens = delete_edge(g, dropped)
        v = min(lens.outer_vertices - {x, y})
        self._log(depth, "outer-lens", tuple(sorted((x, y))), "black")
        col = self.solve(delete_vertex(lens, v), x, y, c, depth + 1)
        col[v] = Colour.RED
        return col

    def _cut_three(self, g, tri, x, y, c, depth) -> RBBColouring:
        outside, inside = split_at_cycle(g, tri)
        outer_col = self.solve(outside, x, y, c, depth + 1)
        by = {k: sorted(t for t in tri.vertices if outer_col[t] is k) for k in Colour}
        reds, blues, blacks = by[Colour.RED], by[Colour.BLUE], by[Colour.BLACK]
        if reds and blues:
            (t1,), (t2,), (t3,) = reds, blues, blacks
            self._log(depth, "cut3", tri.vertices, "red-blue-black")
            inner_col = self.solve(delete_vertex(inside, t1), t2, t3, Colour.BLUE, depth + 1)
            shared = {t2: Colour.BLUE, t3: Colour.BLACK}
        elif reds:
            (t1,), (t2, t3) = reds, blacks
            self._log(depth, "cut3", tri.vertices, "red-black-black")
            inner_col = self.solve(delete_vertex(inside, t1), t2, t3, Colour.BLACK, depth + 1)
            shared = {t2: Colour.BLACK, t3: Colour.BLACK}
        elif blues:
            (t1,), (t2, t3) = blues, blacks
            self._log(depth, "cut3", tri.vertices, "blue-black-black")
            inner_col = self.solve(inside, t1, t2, Colour.BLUE, depth + 1)
            shared = {t1: Colour.BLUE, t2: Colour.BLACK, t3: Colour.BLACK}
        else:
            raise AssertionError(f"triangle {tri.vertices} bounds an inner face yet is all black")
        return self._merge(outer_col, inner_col, shared)

    def _base(self, g: PlaneGraph, x: int, y: int, c: Colour, depth: int) -> RBBColouring:
        # Without 2-faces and separating 2-cycles no parallel edges can remain.
        for (a, b), es in g._edge_index.items():
            assert len(es) == 1, f"parallel edges between {a} and {b} in a base case"
        case = ""
        outer = [f for f in g.faces if f.outer]
        if c is Colour.BLACK and len(outer) == 1 and outer[0].degree == 3 and len(outer[0].vertices) == 3:
            (z,) = set(outer[0].vertices) - {x, y}
            x, c = z, Colour.BLUE
            case = "outer-triangle-switch"
        self._log(depth, "base", (), case)
        return oracle_rbb(g, RBBRequest(x, y, c))
