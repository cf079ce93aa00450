"""Capital colourings: proper colourings in which the largest colour on every
face appears on exactly one vertex of that face.

Faces here are the faces of the whole drawing: for a disconnected graph the
outer face is shared by every component (``PlaneGraph.regions``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .plane_graph import Face, PlaneGraph, collapse_two_faces, delete_vertex, induced_subgraph
from .rbb import Colour, RBBColouring, RBBRequest, check_conditions, recursive_rbb
from .triangle_free import three_colour

__all__ = [
    "CapitalReport",
    "Colour5Result",
    "FaceViolation",
    "UncolouredVertex",
    "colour5",
    "colour5_pipeline",
    "face_max",
    "region_max",
    "validate_capital",
]


class UncolouredVertex(KeyError):
    pass


def region_max(vertices, col: Mapping[int, int]) -> tuple[int, int]:
    """Largest colour on a set of distinct vertices and how many vertices carry it."""
    try:
        values = [col[v] for v in vertices]
    except KeyError as exc:
        raise UncolouredVertex(exc.args[0]) from None
    if not values:
        return 0, 0
    top = max(values)
    return top, values.count(top)


def face_max(g: PlaneGraph, col: Mapping[int, int], f: Face) -> tuple[int, int]:
    """``(value, multiplicity)`` of the largest colour on ``f``.

    A vertex met several times along the face boundary is counted once.
    """
    return region_max(f.vertices, col)


@dataclass(frozen=True)
class FaceViolation:
    region: int
    vertices: tuple[int, ...]
    value: int
    holders: tuple[int, ...]


@dataclass(frozen=True)
class CapitalReport:
    monochromatic_edges: tuple[tuple[int, int], ...] = ()
    face_violations: tuple[FaceViolation, ...] = ()
    bad_values: tuple[int, ...] = ()

    @property
    def ok(self) -> bool:
        return not (self.monochromatic_edges or self.face_violations or self.bad_values)

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "monochromatic_edges": [list(e) for e in self.monochromatic_edges],
            "face_violations": [
                {"region": f.region, "vertices": list(f.vertices), "max": f.value, "holders": list(f.holders)}
                for f in self.face_violations
            ],
            "bad_values": list(self.bad_values),
        }


def validate_capital(g: PlaneGraph, col: Mapping[int, int]) -> CapitalReport:
    """List monochromatic edges, faces whose maximum is shared, and vertices
    whose colour is not a positive integer.  Region 0 is the outer face."""
    for v in g.vertices:
        if v not in col:
            raise UncolouredVertex(v)
    bad = tuple(v for v in g.vertices if not isinstance(col[v], int) or isinstance(col[v], bool) or col[v] < 1)
    mono = sorted({tuple(sorted(g.edge_ends(e))) for e in range(g.n_edges) if len(set(col[w] for w in g.edge_ends(e))) == 1})
    faces = []
    for i, verts in enumerate(g.regions):
        top, mult = region_max(verts, col)
        if mult >= 2:
            faces.append(FaceViolation(i, tuple(verts), top, tuple(v for v in verts if col[v] == top)))
    return CapitalReport(tuple(mono), tuple(faces), bad)


@dataclass(frozen=True)
class Colour5Result:
    collapsed: PlaneGraph
    red_vertex: int | None
    rbb: RBBColouring = field(repr=False)
    black_colouring: dict[int, int] = field(repr=False)
    colouring: dict[int, int]


def colour5_pipeline(g: PlaneGraph) -> Colour5Result:
    """Capital colouring with colours in ``{1..5}`` plus its intermediate stages.

    Steps: collapse inner 2-faces; remove the smallest vertex ``v`` of the outer
    face; colour every component of the rest red/blue/black from its
    smallest outer edge with ``x`` black; make ``v`` red; properly 3-colour
    the black vertices; send blue to 4 and red to 5.

    Every component shares the outer face, so one red vertex serves the
    whole drawing.  Outer 2-faces are kept: collapsing one would move an
    inner face into the outer face, where ``v`` need not lie on it.  The
    red/blue/black stage accepts components whose outer face is a 2-face.
    """
    if not g.vertices:
        return Colour5Result(g, None, {}, {}, {})
    h = collapse_two_faces(g, keep_outer=True)
    v = min(h.outer_vertices)
    rest = delete_vertex(h, v)
    rbb: RBBColouring = {}
    for comp in rest.components:
        part = induced_subgraph(rest, comp)
        if part.n_edges == 0:
            rbb.update({u: Colour.BLACK for u in comp})
            continue
        a, b = part.edge_ends(min(part.outer_edges()))
        req = RBBRequest(min(a, b), max(a, b), Colour.BLACK)
        sub = recursive_rbb(part, req, allow_outer_two_face=True)
        assert not check_conditions(part, sub, req)
        rbb.update(sub)
    rbb[v] = Colour.RED

    for verts in h.regions:
        reds = sum(rbb[u] is Colour.RED for u in verts)
        blues = sum(rbb[u] is Colour.BLUE for u in verts)
        assert reds == 1 or (reds == 0 and blues == 1), f"face {verts}: {reds} red, {blues} blue"

    blacks = {u for u in h.vertices if rbb[u] is Colour.BLACK}
    black_adj = {u: h.adjacency[u] & blacks for u in blacks}
    black_col = three_colour(black_adj)
    top = {Colour.BLUE: 4, Colour.RED: 5}
    colouring = {u: black_col[u] if rbb[u] is Colour.BLACK else top[rbb[u]] for u in g.vertices}
    report = validate_capital(g, colouring)
    assert report.ok, report
    return Colour5Result(h, v, rbb, black_col, colouring)


def colour5(g: PlaneGraph) -> dict[int, int]:
    """Capital colouring of any plane graph using colours from ``{1..5}``."""
    return colour5_pipeline(g).colouring
