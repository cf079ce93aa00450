"""Exact proper 3-colouring for triangle-free graphs.

Triangle-free planar graphs are always 3-colourable, so on such inputs the
search below cannot fail; :class:`NoColouring` therefore marks a bug or an
input that is not planar.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .plane_graph import PlaneGraph

__all__ = ["NoColouring", "TrianglePresent", "find_triangle", "three_colour"]


class TrianglePresent(ValueError):
    def __init__(self, triangle: tuple[int, int, int]) -> None:
        super().__init__(f"triangle on {triangle}")
        self.triangle = triangle


class NoColouring(RuntimeError):
    pass


Adjacency = Mapping[int, Iterable[int]]


def _adjacency(g: PlaneGraph | Adjacency) -> dict[int, frozenset[int]]:
    if isinstance(g, PlaneGraph):
        return dict(g.adjacency)
    adj: dict[int, set[int]] = {v: set() for v in g}
    for v, ns in g.items():
        for w in ns:
            if w == v:
                raise ValueError(f"loop at {v}")
            adj[v].add(w)
            adj.setdefault(w, set()).add(v)
    return {v: frozenset(ns) for v, ns in adj.items()}


def find_triangle(adj: Mapping[int, frozenset[int]]) -> tuple[int, int, int] | None:
    """Smallest triangle found by intersecting the neighbourhoods of each edge."""
    for u in sorted(adj):
        for v in sorted(adj[u]):
            if v <= u:
                continue
            common = [w for w in adj[u] & adj[v] if w > v]
            if common:
                return (u, v, min(common))
    return None


def three_colour(g: PlaneGraph | Adjacency) -> dict[int, int]:
    """Proper colouring with values in ``{1, 2, 3}``.

    Accepts a plane graph or a plain adjacency mapping.  Branching picks the
    vertex with the fewest remaining colours, then the highest degree, then
    the smallest id; colours are tried in increasing order, and every
    assignment removes its colour from the uncoloured neighbours.
    """
    adj = _adjacency(g)
    tri = find_triangle(adj)
    if tri is not None:
        raise TrianglePresent(tri)
    dom = {v: 0b111 for v in adj}
    colour: dict[int, int] = {}

    def pick() -> int | None:
        best = None
        best_key = None
        for v, m in dom.items():
            if v in colour:
                continue
            key = (bin(m).count("1"), -len(adj[v]), v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        return best

    def search() -> bool:
        v = pick()
        if v is None:
            return True
        for c in (1, 2, 3):
            bit = 1 << (c - 1)
            if not dom[v] & bit:
                continue
            touched = [w for w in adj[v] if w not in colour and dom[w] & bit]
            if any(dom[w] == bit for w in touched):
                continue
            colour[v] = c
            for w in touched:
                dom[w] &= ~bit
            if search():
                return True
            for w in touched:
                dom[w] |= bit
            del colour[v]
        return False

    if not search():
        raise NoColouring("no proper 3-colouring; the input cannot be planar and triangle-free")
    return colour
