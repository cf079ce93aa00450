"""The fixed graph corpus used by the acceptance suite and ``capital corpus``."""

from __future__ import annotations

from dataclasses import dataclass, field

from .generators import generate
from .plane_graph import PlaneGraph

__all__ = ["CorpusEntry", "default_corpus", "load"]


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    family: str
    params: tuple[int, ...] = ()
    expected: dict[str, object] = field(default_factory=dict, compare=False)

    def build(self) -> PlaneGraph:
        return generate(self.family, self.params)


def _e(name: str, family: str, *params: int, **expected: object) -> CorpusEntry:
    return CorpusEntry(name, family, tuple(params), dict(expected))


# Names carry the generator parameters, including seeds.
_ENTRIES = (
    _e("k1", "empty", 1, chi_capital=1),
    _e("k2", "path", 2, chi_capital=2),
    _e("p3", "path", 3),
    _e("p6", "path", 6),
    _e("empty3", "empty", 3),
    _e("c3", "cycle", 3),
    _e("c4", "cycle", 4, chi_capital=3),
    _e("c5", "cycle", 5),
    _e("c12", "cycle", 12),
    _e("k4", "wheel", 3, chi_capital=4),
    _e("wheel5", "wheel", 5),
    _e("wheel10", "wheel", 10),
    _e("octahedron", "octahedron"),
    _e("icosahedron", "icosahedron"),
    _e("grid2x3", "grid", 2, 3),
    _e("grid3x3", "grid", 3, 3),
    _e("grid5x6", "grid", 5, 6),
    _e("grid7x8", "grid", 7, 8),
    _e("prism3", "prism", 3),
    _e("prism5", "prism", 5),
    _e("prism12", "prism", 12),
    _e("antiprism5", "antiprism", 5),
    _e("antiprism12", "antiprism", 12),
    _e("apollonian3_s1", "apollonian", 3, 1),
    _e("apollonian12_s2", "apollonian", 12, 2),
    _e("apollonian30_s3", "apollonian", 30, 3),
    _e("apollonian57_s7", "apollonian", 57, 7),
    _e("stellated1", "stellated_triangles", 1),
    _e("stellated2", "stellated_triangles", 2),
    _e("stellated5", "stellated_triangles", 5),
    _e("nested2gon1", "nested_2gon", 1),
    _e("nested2gon3", "nested_2gon", 3),
    _e("nested2gon6", "nested_2gon", 6),
    _e("parallel1", "parallel_edge_chain", 1),
    _e("parallel4", "parallel_edge_chain", 4),
    _e("two_gon_pendant", "two_gon_pendant"),
    _e("lensed10_s1_l3", "lensed_apollonian", 10, 1, 3, 0),
    _e("lensed20_s4_l4_pendant", "lensed_apollonian", 20, 4, 4, 1),
    _e("cycles3x4", "disjoint_cycles", 3, 4),
)


def default_corpus() -> list[CorpusEntry]:
    """Entries sorted by name."""
    return sorted(_ENTRIES, key=lambda e: e.name)


def load() -> list[tuple[CorpusEntry, PlaneGraph]]:
    return [(e, e.build()) for e in default_corpus()]
