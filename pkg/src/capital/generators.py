"""Deterministic plane-graph families.

Straight-line families take their rotations from coordinates; the multigraph
families (``nested_2gon``, ``parallel_edge_chain``, ``two_gon_pendant``)
spell their rotations out by hand.
"""

from __future__ import annotations

import math
import random
from typing import Callable, Mapping, Sequence

from .plane_graph import PlaneGraph, build_from_rotation, disjoint_union, relabel

__all__ = ["BadParams", "FAMILIES", "UnknownFamily", "from_positions", "generate"]


class UnknownFamily(KeyError):
    pass


class BadParams(ValueError):
    pass


def from_positions(
    pos: Mapping[int, tuple[float, float]],
    edges: Sequence[tuple[int, int]],
    outer: tuple[int, int] | None = None,
) -> PlaneGraph:
    """Straight-line drawing to plane graph.

    Rotations sort neighbours by angle.  Without ``outer`` the outer face of
    each component is the face whose boundary has the largest signed area:
    inner faces are traced clockwise, the outer face counterclockwise.
    """
    nbrs: dict[int, list[int]] = {v: [] for v in pos}
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    rings = {}
    for v, ns in nbrs.items():
        x, y = pos[v]
        ns.sort(key=lambda w: math.atan2(pos[w][1] - y, pos[w][0] - x))
        rings[v] = [(w, 0) for w in ns]
    if outer is not None:
        return build_from_rotation(rings, (*outer, 0))
    g = build_from_rotation(rings)
    hints = []
    for comp in g.components:
        orbits = [f for f in g.faces if f.darts and g.origin[f.darts[0]] in comp]
        if not orbits:
            continue

        def area(f):
            pts = [pos[g.origin[d]] for d in f.darts]
            return sum(a[0] * b[1] - b[0] * a[1] for a, b in zip(pts, pts[1:] + pts[:1]))

        d = max(orbits, key=area).darts[0]
        hints.append([g.origin[d], g.head(d), 0])
    return build_from_rotation(rings, hints if len(hints) != 1 else hints[0])


def _polar(r: float, turns: float) -> tuple[float, float]:
    a = 2 * math.pi * turns
    return r * math.cos(a), r * math.sin(a)


def path(n: int) -> PlaneGraph:
    if n < 1:
        raise BadParams("path needs n >= 1")
    pos = {i: (float(i), 0.0) for i in range(n)}
    return from_positions(pos, [(i, i + 1) for i in range(n - 1)])


def empty(n: int) -> PlaneGraph:
    if n < 0:
        raise BadParams("empty needs n >= 0")
    return build_from_rotation({i: [] for i in range(n)})


def cycle(n: int) -> PlaneGraph:
    if n < 3:
        raise BadParams("cycle needs n >= 3")
    pos = {i: _polar(1.0, i / n) for i in range(n)}
    return from_positions(pos, [(i, (i + 1) % n) for i in range(n)])


def disjoint_cycles(k: int, n: int) -> PlaneGraph:
    """``k`` copies of ``C_n`` side by side; copy ``i`` uses ``i*n .. i*n+n-1``."""
    if k < 1:
        raise BadParams("disjoint_cycles needs k >= 1")
    return disjoint_union(*(relabel(cycle(n), i * n) for i in range(k)))


def wheel(n: int) -> PlaneGraph:
    """``n`` rim vertices ``0..n-1`` around the hub ``n``."""
    if n < 3:
        raise BadParams("wheel needs n >= 3 rim vertices")
    pos = {i: _polar(1.0, i / n) for i in range(n)}
    pos[n] = (0.0, 0.0)
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, n) for i in range(n)]
    return from_positions(pos, edges)


def grid(rows: int, cols: int) -> PlaneGraph:
    if rows < 1 or cols < 1:
        raise BadParams("grid needs positive dimensions")
    pos = {i * cols + j: (float(j), -float(i)) for i in range(rows) for j in range(cols)}
    edges = []
    for i in range(rows):
        for j in range(cols):
            v = i * cols + j
            if j + 1 < cols:
                edges.append((v, v + 1))
            if i + 1 < rows:
                edges.append((v, v + cols))
    return from_positions(pos, edges)


def prism(n: int) -> PlaneGraph:
    if n < 3:
        raise BadParams("prism needs n >= 3")
    pos = {i: _polar(2.0, i / n) for i in range(n)}
    pos.update({n + i: _polar(1.0, i / n) for i in range(n)})
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return from_positions(pos, edges)


def antiprism(n: int) -> PlaneGraph:
    if n < 3:
        raise BadParams("antiprism needs n >= 3")
    pos = {i: _polar(2.0, i / n) for i in range(n)}
    inner = 1.4 * math.cos(math.pi / n)
    pos.update({n + i: _polar(inner, (i + 0.5) / n) for i in range(n)})
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(n + i, i) for i in range(n)] + [(n + i, (i + 1) % n) for i in range(n)]
    return from_positions(pos, edges)


def octahedron() -> PlaneGraph:
    return antiprism(3)


def icosahedron() -> PlaneGraph:
    phi = (1 + math.sqrt(5)) / 2
    pts = []
    for a in (-1, 1):
        for b in (-phi, phi):
            pts += [(0.0, a, b), (a, b, 0.0), (b, 0.0, a)]
    pts.sort()
    n = len(pts)

    def dist2(p, q):
        return sum((x - y) ** 2 for x, y in zip(p, q))

    nbrs = {i: [j for j in range(n) if j != i and abs(dist2(pts[i], pts[j]) - 4) < 1e-9] for i in range(n)}
    rings = {}
    for i, p in enumerate(pts):
        norm = math.sqrt(sum(x * x for x in p))
        nrm = [x / norm for x in p]
        # Tangent basis (t1, t2) with t1 x t2 = outward normal.
        helper = (1.0, 0.0, 0.0) if abs(nrm[0]) < 0.9 else (0.0, 1.0, 0.0)
        t1 = _cross(helper, nrm)
        t1 = [x / math.sqrt(sum(y * y for y in t1)) for x in t1]
        t2 = _cross(nrm, t1)

        def angle(j, p=p, t1=t1, t2=t2):
            d = [a - b for a, b in zip(pts[j], p)]
            return math.atan2(sum(a * b for a, b in zip(d, t2)), sum(a * b for a, b in zip(d, t1)))

        rings[i] = [(j, 0) for j in sorted(nbrs[i], key=angle)]
    return build_from_rotation(rings, (0, min(nbrs[0]), 0))


def _cross(a, b):
    return [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]


def _from_triangles(triangles: Sequence[tuple[int, int, int]], outer: tuple[int, int, int]) -> PlaneGraph:
    """Simple triangulation from counterclockwise inner triangles and the outer triangle."""
    rot: dict[tuple[int, int], tuple[int, int]] = {}
    a, b, c = outer
    for x, y, z in [*triangles, (a, c, b)]:
        for p, q, r in ((x, y, z), (y, z, x), (z, x, y)):
            rot[(q, p)] = (q, r)
    rings: dict[int, list[tuple[int, int]]] = {}
    for (v, _), _ in sorted(rot.items()):
        if v in rings:
            continue
        start = next(d for d in sorted(rot) if d[0] == v)
        ring = [start]
        d = rot[start]
        while d != start:
            ring.append(d)
            d = rot[d]
        rings[v] = [(w, 0) for _, w in ring]
    return build_from_rotation(rings, (b, a, 0))


def apollonian(depth: int, seed: int = 0) -> PlaneGraph:
    """Random Apollonian network: ``depth`` stellations of seeded inner faces.

    Vertex ``k + 3`` is inserted at step ``k``; step 0 always fills the
    initial triangle, giving ``depth + 3`` vertices.
    """
    if depth < 0:
        raise BadParams("apollonian needs depth >= 0")
    rng = random.Random(seed)
    tris = [(0, 1, 2)]
    for k in range(depth):
        w = k + 3
        x, y, z = tris.pop(rng.randrange(len(tris)))
        tris += [(x, y, w), (y, z, w), (z, x, w)]
    return _from_triangles(tris, (0, 1, 2))


def _rings_of(g: PlaneGraph) -> dict[int, list[tuple[int, int]]]:
    seen: dict[tuple[int, int], int] = {}
    label = {}
    for e in range(g.n_edges):
        key = tuple(sorted(g.edge_ends(e)))
        label[e] = seen.get(key, 0)
        seen[key] = label[e] + 1
    return {v: [(g.head(d), label[d >> 1]) for d in g.darts_at[v]] for v in g.vertices}


def lensed_apollonian(depth: int, seed: int = 0, lenses: int = 1, pendant: int = 0) -> PlaneGraph:
    """Apollonian network with ``lenses`` inner edges doubled into a lens.

    Each lens holds a new vertex, joined to both ends of the doubled edge
    or, when ``pendant`` is set, to one end only (alternating between the
    ends).  The lenses are separating 2-cycles whose ends are inner
    vertices, taken from the edges joining two inner vertices in id order.
    """
    if lenses < 0:
        raise BadParams("lensed_apollonian needs lenses >= 0")
    base = apollonian(depth, seed)
    inner = [
        (u, v) for u, v in sorted(tuple(sorted(base.edge_ends(e))) for e in range(base.n_edges)) if u > 2 and v > 2
    ]
    if lenses > len(inner):
        raise BadParams(f"only {len(inner)} inner edges available for lenses")
    rings = _rings_of(base)
    w = base.n_vertices
    for i, (u, v) in enumerate(inner[:lenses]):
        # The lens opens counterclockwise after (v, 0) at u and clockwise before (u, 0) at v.
        to_u = not pendant or i % 2 == 0
        to_v = not pendant or i % 2 == 1
        ru = rings[u]
        j = ru.index((v, 0))
        rings[u] = ru[: j + 1] + ([(w, 0)] if to_u else []) + [(v, 1)] + ru[j + 1 :]
        rv = rings[v]
        j = rv.index((u, 0))
        rings[v] = rv[:j] + [(u, 1)] + ([(w, 0)] if to_v else []) + rv[j:]
        rings[w] = ([(u, 0)] if to_u else []) + ([(v, 0)] if to_v else [])
        w += 1
    return build_from_rotation(rings, (1, 0, 0))


def stellated_triangles(levels: int) -> PlaneGraph:
    """``levels + 1`` nested triangles joined by triangle bands, with a centre.

    Triangle ``i`` uses vertices ``3i..3i+2``; the centre is the last vertex.
    Every triangle except the outermost is separating.
    """
    if levels < 0:
        raise BadParams("stellated_triangles needs levels >= 0")
    pos = {}
    edges = []
    r = 1.0
    for i in range(levels + 1):
        for j in range(3):
            pos[3 * i + j] = _polar(r, 0.25 + j / 3 + i / 6)
            edges.append((3 * i + j, 3 * i + (j + 1) % 3))
            if i:
                edges.append((3 * i + j, 3 * (i - 1) + j))
                edges.append((3 * i + j, 3 * (i - 1) + (j + 1) % 3))
        r *= 0.4
    centre = 3 * (levels + 1)
    pos[centre] = (0.0, 0.0)
    edges += [(centre, 3 * levels + j) for j in range(3)]
    return from_positions(pos, edges)


def nested_2gon(levels: int) -> PlaneGraph:
    """Poles ``p=1``, ``q=2`` joined by ``2 * levels`` parallel edges nested as
    ``levels`` concentric 2-gons, with one vertex in every band between
    consecutive parallel edges and an outer vertex ``o=0``.

    Every face is a triangle, so there are no 2-faces, and each 2-gon is a
    separating 2-cycle.
    """
    if levels < 1:
        raise BadParams("nested_2gon needs levels >= 1")
    n = levels - 1
    o, p, q = 0, 1, 2
    left = [3 + i for i in range(n)]
    right = [3 + n + i for i in range(n)]
    m = 3 + 2 * n
    # Parallel edge k: left arcs 0..n, right arcs n+1..2n+1 (outermost last).
    left_arc = list(range(n + 1))
    right_arc = [n + 1 + i for i in range(n + 1)]
    rot_p = [(o, 0), (q, left_arc[0])]
    for i in range(n):
        rot_p += [(left[i], 0), (q, left_arc[i + 1])]
    rot_p += [(m, 0), (q, right_arc[n])]
    for i in reversed(range(n)):
        rot_p += [(right[i], 0), (q, right_arc[i])]
    rot_q = []
    for entry in reversed(rot_p):
        w, k = entry
        rot_q.append((p, k) if w == q else (w, 0))
    rings = {o: [(p, 0), (q, 0)], p: rot_p, q: rot_q, m: [(p, 0), (q, 0)]}
    for v in left + right:
        rings[v] = [(p, 0), (q, 0)]
    return build_from_rotation(rings, (p, o, 0))


def two_gon_pendant() -> PlaneGraph:
    """A separating 2-gon ``{0, 1}`` whose inside holds a pendant vertex 3
    hanging from 0, with the outer vertex 2 adjacent to both poles."""
    p, q, o, m = 0, 1, 2, 3
    rings = {
        p: [(o, 0), (q, 0), (m, 0), (q, 1)],
        q: [(p, 1), (p, 0), (o, 0)],
        o: [(p, 0), (q, 0)],
        m: [(p, 0)],
    }
    return build_from_rotation(rings, (p, o, 0))


def parallel_edge_chain(k: int) -> PlaneGraph:
    """Path ``0..k`` with every edge doubled: ``k`` 2-faces."""
    if k < 1:
        raise BadParams("parallel_edge_chain needs k >= 1")
    rings = {}
    for i in range(k + 1):
        ring = []
        if i < k:
            ring.append((i + 1, 0))
        if i > 0:
            ring += [(i - 1, 0), (i - 1, 1)]
        if i < k:
            ring.append((i + 1, 1))
        rings[i] = ring
    return build_from_rotation(rings, (0, 1, 0))


FAMILIES: dict[str, Callable[..., PlaneGraph]] = {
    "antiprism": antiprism,
    "apollonian": apollonian,
    "cycle": cycle,
    "disjoint_cycles": disjoint_cycles,
    "empty": empty,
    "grid": grid,
    "icosahedron": icosahedron,
    "lensed_apollonian": lensed_apollonian,
    "nested_2gon": nested_2gon,
    "octahedron": octahedron,
    "parallel_edge_chain": parallel_edge_chain,
    "path": path,
    "prism": prism,
    "stellated_triangles": stellated_triangles,
    "two_gon_pendant": two_gon_pendant,
    "wheel": wheel,
}


def generate(family: str, params: Sequence[int] = ()) -> PlaneGraph:
    try:
        builder = FAMILIES[family]
    except KeyError:
        raise UnknownFamily(family) from None
    try:
        return builder(*[int(p) for p in params])
    except TypeError as exc:
        raise BadParams(f"{family}: {exc}") from None
