"""Exact search for capital list colourings.

Three outcomes are kept apart: a colouring, ``None`` when the search space
is exhausted (a certificate that none exists), and :class:`BudgetExceeded`
when the node or time budget ran out first.
"""

from __future__ import annotations

import enum
import random
import time
from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb
from typing import Iterable, Mapping

from .core import validate_capital
from .plane_graph import PlaneGraph

__all__ = [
    "BudgetExceeded",
    "DEFAULT_SEED",
    "ProbeOutcome",
    "ProbeResult",
    "SolveBudget",
    "capital_list_colouring",
    "chi_capital",
    "min_capital_colouring",
    "probe_choosability",
    "random_list_assignments",
]

DEFAULT_SEED = 20240601


@dataclass(frozen=True)
class SolveBudget:
    """Limits on search nodes and wall-clock seconds; ``None`` means unlimited."""

    node_limit: int | None = 10**7
    time_limit: float | None = None

    def __post_init__(self) -> None:
        if self.node_limit is not None and self.node_limit <= 0:
            raise ValueError("node_limit must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time_limit must be positive")


class BudgetExceeded(RuntimeError):
    def __init__(self, nodes: int, seconds: float) -> None:
        super().__init__(f"budget exceeded after {nodes} nodes and {seconds:.2f}s")
        self.nodes = nodes
        self.seconds = seconds


class _Meter:
    def __init__(self, budget: SolveBudget | None) -> None:
        self.budget = budget or SolveBudget()
        self.nodes = 0
        self.start = time.monotonic()

    def tick(self) -> None:
        self.nodes += 1
        b = self.budget
        if b.node_limit is not None and self.nodes > b.node_limit:
            raise BudgetExceeded(self.nodes, time.monotonic() - self.start)
        if b.time_limit is not None and self.nodes % 512 == 0:
            elapsed = time.monotonic() - self.start
            if elapsed > b.time_limit:
                raise BudgetExceeded(self.nodes, elapsed)


def _completion_order(n: int, faces: list[tuple[int, ...]], nbrs: list[list[int]]) -> list[int]:
    """Static vertex order that closes faces early.

    Each step takes the vertex whose emptiest face has the fewest uncoloured
    vertices left, preferring vertices with more coloured neighbours.
    """
    left = [len(f) for f in faces]
    faces_at: list[list[int]] = [[] for _ in range(n)]
    for fi, f in enumerate(faces):
        for u in f:
            faces_at[u].append(fi)
    done = [False] * n
    seen_nbrs = [0] * n
    order = []
    for _ in range(n):
        best, best_key = -1, None
        for u in range(n):
            if done[u]:
                continue
            key = (min((left[fi] for fi in faces_at[u]), default=n + 1), -seen_nbrs[u], u)
            if best_key is None or key < best_key:
                best, best_key = u, key
        done[best] = True
        order.append(best)
        for fi in faces_at[best]:
            left[fi] -= 1
        for w in nbrs[best]:
            seen_nbrs[w] += 1
    return order


class _ListSearch:
    def __init__(self, g: PlaneGraph, lists: Mapping[int, Iterable[int]], meter: _Meter) -> None:
        self.g = g
        self.meter = meter
        self.verts = list(g.vertices)
        idx = {v: i for i, v in enumerate(self.verts)}
        clean: list[frozenset[int]] = []
        for v in self.verts:
            if v not in lists:
                raise ValueError(f"no list for vertex {v}")
            vals = frozenset(lists[v])
            if not vals:
                raise ValueError(f"empty list at vertex {v}")
            if any(not isinstance(c, int) or c < 1 for c in vals):
                raise ValueError(f"list at vertex {v} must hold positive integers")
            clean.append(vals)
        self.values = sorted(set().union(*clean)) if clean else []
        rank = {c: r for r, c in enumerate(self.values)}
        self.dom = [sum(1 << rank[c] for c in vals) for vals in clean]
        n = len(self.verts)
        self.nbrs = [sorted(idx[w] for w in g.adjacency[v]) for v in self.verts]
        adj_sets = [set(ns) for ns in self.nbrs]
        faces = []
        for region in g.regions:
            f = tuple(idx[v] for v in region)
            # On a clique every proper colouring already has a unique maximum.
            if all(b in adj_sets[a] for a, b in combinations(f, 2)):
                continue
            faces.append(f)
        self.faces = faces
        self.faces_at: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
        for f in faces:
            for u in f:
                self.faces_at[u].append(f)
        order = _completion_order(n, faces, self.nbrs)
        self.pos = [0] * n
        for p, u in enumerate(order):
            self.pos[u] = p
        self.assigned = [-1] * n

    def run(self) -> dict[int, int] | None:
        if not self._search(len(self.verts)):
            return None
        col = {v: self.values[r] for v, r in zip(self.verts, self.assigned)}
        assert validate_capital(self.g, col).ok
        return col

    def _faces_ok(self, v: int, changed: list[tuple[int, int]]) -> bool:
        assigned, dom = self.assigned, self.dom
        for f in self.faces_at[v]:
            top, count = -1, 0
            free = []
            for u in f:
                a = assigned[u]
                if a < 0:
                    free.append(u)
                elif a > top:
                    top, count = a, 1
                elif a == top:
                    count += 1
            if count < 2:
                continue
            # The maximum so far is shared: some uncoloured vertex must beat it.
            above = ~((1 << (top + 1)) - 1)
            exceed = [u for u in free if dom[u] & above]
            if not exceed:
                return False
            if len(exceed) == 1:
                u = exceed[0]
                removed = dom[u] & ~above
                if removed:
                    dom[u] &= above
                    changed.append((u, removed))
        return True

    def _search(self, remaining: int) -> bool:
        if remaining == 0:
            return True
        assigned, dom, pos = self.assigned, self.dom, self.pos
        v, best = -1, None
        for u in range(len(assigned)):
            if assigned[u] < 0:
                key = (bin(dom[u]).count("1"), pos[u])
                if best is None or key < best:
                    v, best = u, key
        m = dom[v]
        while m:
            bit = m & -m
            m ^= bit
            if not dom[v] & bit:
                continue
            self.meter.tick()
            changed: list[tuple[int, int]] = []
            ok = True
            for w in self.nbrs[v]:
                if assigned[w] < 0 and dom[w] & bit:
                    dom[w] ^= bit
                    changed.append((w, bit))
                    if not dom[w]:
                        ok = False
                        break
            if ok:
                assigned[v] = bit.bit_length() - 1
                if self._faces_ok(v, changed) and self._search(remaining - 1):
                    return True
                assigned[v] = -1
            for w, bits in changed:
                dom[w] |= bits
        return False


def capital_list_colouring(
    g: PlaneGraph,
    lists: Mapping[int, Iterable[int]],
    budget: SolveBudget | None = None,
) -> dict[int, int] | None:
    """A capital colouring with ``c(v)`` in ``lists[v]``, or ``None`` if none exists.

    Raises :class:`BudgetExceeded` when the budget runs out first.
    """
    return _ListSearch(g, lists, _Meter(budget)).run()


def min_capital_colouring(g: PlaneGraph, budget: SolveBudget | None = None) -> tuple[int, dict[int, int]]:
    """The least ``k`` with a capital colouring from ``{1..k}``, and one such colouring.

    The budget covers the whole sweep over ``k``.
    """
    if not g.vertices:
        raise ValueError("the capital chromatic number needs at least one vertex")
    meter = _Meter(budget)
    k = 1
    while True:
        found = _ListSearch(g, {v: range(1, k + 1) for v in g.vertices}, meter).run()
        if found is not None:
            return k, found
        k += 1


def chi_capital(g: PlaneGraph, budget: SolveBudget | None = None) -> int:
    return min_capital_colouring(g, budget)[0]


def random_list_assignments(
    g: PlaneGraph, k: int, m: int, count: int, seed: int = DEFAULT_SEED
) -> list[dict[int, list[int]]]:
    """``count`` assignments of sorted ``k``-subsets of ``{1..m}``, reproducible from ``seed``."""
    if not 1 <= k <= m:
        raise ValueError("need 1 <= k <= m")
    rng = random.Random(seed)
    return [{v: sorted(rng.sample(range(1, m + 1), k)) for v in g.vertices} for _ in range(count)]


class ProbeOutcome(str, enum.Enum):
    ALL_SATISFIED = "all-satisfied"
    COUNTEREXAMPLE = "counterexample"
    BUDGET_EXCEEDED = "budget-exceeded"


@dataclass(frozen=True)
class ProbeResult:
    outcome: ProbeOutcome
    checked: int
    counterexample: dict[int, list[int]] | None = field(default=None)


def _canonical_assignments(verts: list[int], k: int, m: int):
    """Assignments of ``k``-subsets of ``{1..m}`` whose union is ``{1..t}``.

    Capital colourability only depends on the relative order of colours, so
    relabelling the union of the lists order-preservingly onto an initial
    segment loses nothing.
    """
    subsets = list(combinations(range(1, m + 1), k))
    for combo in product(subsets, repeat=len(verts)):
        used = set().union(*combo) if combo else set()
        if max(used, default=0) == len(used):
            yield dict(zip(verts, (list(s) for s in combo)))


def probe_choosability(g: PlaneGraph, k: int, m: int, budget: SolveBudget | None = None) -> ProbeResult:
    """Solve every ``k``-list assignment drawn from ``{1..m}`` (up to relabelling).

    A bounded stand-in for choosability: lists from a larger universe are
    not tried.  One budget covers the whole probe.
    """
    if not 1 <= k <= m:
        raise ValueError("need 1 <= k <= m")
    meter = _Meter(budget)
    checked = 0
    try:
        for lists in _canonical_assignments(list(g.vertices), k, m):
            meter.tick()
            if _ListSearch(g, lists, meter).run() is None:
                return ProbeResult(ProbeOutcome.COUNTEREXAMPLE, checked + 1, lists)
            checked += 1
    except BudgetExceeded:
        return ProbeResult(ProbeOutcome.BUDGET_EXCEEDED, checked)
    return ProbeResult(ProbeOutcome.ALL_SATISFIED, checked)


def probe_size(n: int, k: int, m: int) -> int:
    """Number of raw assignments before the relabelling filter."""
    return comb(m, k) ** n
