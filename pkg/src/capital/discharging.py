"""Charge bookkeeping and configuration detection for the 7-list argument.

Charges are integers in sixths.  A ``d``-vertex and a ``d``-face both start
with ``6(d - 4)``; on a connected plane graph the total is ``-48``.

Vertex rules send charge to incident 3-faces, counted as distinct faces:

* 5-vertex: at most two 3-faces, 3 sixths each; exactly three, 2 each;
* 6-vertex: at most four, 3 each; exactly five, 2 each;
* 7-vertex: at most six, 3 each; exactly seven, 2 each;
* vertex of degree 8 or more: 3 sixths to every incident 3-face.

Face rules act per shared edge between a face of degree at least 5 and a
3-face: 3 sixths when both ends are 4-vertices, 1 sixth when one end is a
4-vertex and the other has degree at least 5.

Degree and incidence combinations not named above transfer nothing; the
audit lists such vertices as ``silent``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .plane_graph import PlaneGraph

__all__ = [
    "AuditReport",
    "ChargeLedger",
    "ConfigurationHit",
    "Disconnected",
    "HIT_KINDS",
    "Transfer",
    "apply_rules",
    "audit",
    "detect_reducible",
    "format_sixths",
    "initial_charges",
    "vertex_rule",
]

TOTAL_SIXTHS = -48

HIT_KINDS = (
    "NotTwoConnected",
    "LowKplusL",
    "SmallDegreeVertex",
    "TwoFace",
    "SharedFourVertex",
    "P5_edge44",
    "P6_4and5with3",
    "P7_4and6with5",
)


class Disconnected(ValueError):
    pass


def format_sixths(x: int) -> str:
    return f"{x}/6"


@dataclass(frozen=True)
class Transfer:
    rule: str
    source: tuple[str, int]
    face: int
    sixths: int


@dataclass(frozen=True)
class ChargeLedger:
    vertex: dict[int, int]
    face: dict[int, int]
    transfers: tuple[Transfer, ...] = ()

    @property
    def total(self) -> int:
        return sum(self.vertex.values()) + sum(self.face.values())

    def to_dict(self) -> dict:
        return {
            "vertex": {str(v): format_sixths(c) for v, c in sorted(self.vertex.items())},
            "face": {str(f): format_sixths(c) for f, c in sorted(self.face.items())},
            "total": format_sixths(self.total),
        }


def _require_connected(g: PlaneGraph) -> None:
    if not g.vertices or not g.is_connected():
        raise Disconnected(f"charges need a connected graph, got {len(g.components)} components")


def initial_charges(g: PlaneGraph) -> ChargeLedger:
    _require_connected(g)
    return ChargeLedger(
        {v: 6 * (g.degree(v) - 4) for v in g.vertices},
        {f.index: 6 * (f.degree - 4) for f in g.faces},
    )


def _three_faces_at(g: PlaneGraph, v: int) -> list[int]:
    """Distinct 3-faces incident with ``v``, in face order."""
    found = {g.face_of[d] for d in g.darts_at[v]}
    return sorted(f for f in found if g.faces[f].degree == 3)


def vertex_rule(degree: int, threes: int) -> tuple[str | None, int]:
    """Rule name and sixths sent to each incident 3-face."""
    if degree == 5:
        return ("V5", 3) if threes <= 2 else ("V5", 2) if threes == 3 else (None, 0)
    if degree == 6:
        return ("V6", 3) if threes <= 4 else ("V6", 2) if threes == 5 else (None, 0)
    if degree == 7:
        return ("V7", 3) if threes <= 6 else ("V7", 2) if threes == 7 else (None, 0)
    if degree >= 8:
        return ("V8", 3)
    return (None, 0)


def _is_silent(degree: int, threes: int) -> bool:
    return 5 <= degree <= 7 and threes > 0 and vertex_rule(degree, threes)[0] is None


def apply_rules(g: PlaneGraph, ledger: ChargeLedger) -> ChargeLedger:
    vertex = dict(ledger.vertex)
    face = dict(ledger.face)
    transfers: list[Transfer] = []
    for v in g.vertices:
        threes = _three_faces_at(g, v)
        rule, amount = vertex_rule(g.degree(v), len(threes))
        if rule is None or not amount:
            continue
        for f in threes:
            vertex[v] -= amount
            face[f] += amount
            transfers.append(Transfer(rule, ("vertex", v), f, amount))
    for big in g.faces:
        if big.degree < 5:
            continue
        for d in big.darts:
            target = g.face_of[d ^ 1]
            if g.faces[target].degree != 3:
                continue
            a, b = sorted((g.degree(g.origin[d]), g.degree(g.head(d))))
            if a == 4 and b == 4:
                rule, amount = "E1", 3
            elif a == 4 and b >= 5:
                rule, amount = "E2", 1
            else:
                continue
            face[big.index] -= amount
            face[target] += amount
            transfers.append(Transfer(rule, ("face", big.index), target, amount))
    return ChargeLedger(vertex, face, tuple(transfers))


@dataclass(frozen=True)
class ConfigurationHit:
    kind: str
    witnesses: dict[str, int]
    detail: str = ""

    def to_dict(self) -> dict:
        return {"kind": self.kind, "witnesses": dict(self.witnesses), "detail": self.detail}


def _cut_vertices(g: PlaneGraph) -> list[int]:
    adj = g.adjacency
    cuts = []
    for v in g.vertices:
        rest = [u for u in g.vertices if u != v]
        if len(rest) < 2:
            continue
        seen = {rest[0]}
        stack = [rest[0]]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w != v and w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) < len(rest):
            cuts.append(v)
    return cuts


def _walk(g: PlaneGraph, d: int, toward: int) -> tuple[list[int], list[int]]:
    """Darts around ``origin(d)`` starting at ``d`` and turning first into face
    ``toward``, with the face of the corner after each dart in walking order."""
    ccw = g.face_of[g.rot[d]] == toward
    darts = [d]
    x = d
    while True:
        x = g.rot[x] if ccw else g.rot_inv[x]
        if x == d:
            break
        darts.append(x)
    corners = []
    for i, a in enumerate(darts):
        b = darts[(i + 1) % len(darts)]
        corners.append(g.face_of[b] if ccw else g.face_of[a])
    return darts, corners


def _shared_edges(g: PlaneGraph):
    """Edges between a 3-face and a 4-face, as (dart on the 3-face side, 3-face, 4-face)."""
    for e in range(g.n_edges):
        for d in (2 * e, 2 * e + 1):
            t, q = g.face_of[d], g.face_of[d ^ 1]
            if g.faces[t].degree == 3 and g.faces[q].degree == 4:
                yield d, t, q


def _labels_44(g: PlaneGraph, d: int, t: int, q: int) -> dict[str, int]:
    """Roles around a 3-face ``v1 v2 v3`` and 4-face ``v1 v2 v5 v4`` on two 4-vertices."""
    d1 = d if g.origin[d] < g.head(d) else d ^ 1
    darts1, corners1 = _walk(g, d1, t)
    darts2, corners2 = _walk(g, d1 ^ 1, t)
    h = g.head
    return {
        "v1": g.origin[d1],
        "v2": h(d1),
        "v3": h(darts1[1]),
        "v4": h(darts1[3]),
        "v5": h(darts2[3]),
        "v6": h(darts2[2]),
        "v7": h(darts1[2]),
        "f1": corners1[1],
        "f2": corners1[2],
        "f3": corners2[2],
        "f4": corners2[1],
        "face3": t,
        "face4": q,
    }


def _labels_big(g: PlaneGraph, d: int, t: int, q: int, big: int) -> dict[str, int]:
    """Roles with ``v1`` the big vertex, ``v2`` the 4-vertex and ``v1``'s
    neighbours ``v2 v3 ...`` listed from the 3-face side."""
    d1 = d if g.origin[d] == big else d ^ 1
    darts1, _ = _walk(g, d1, t)
    darts2, corners2 = _walk(g, d1 ^ 1, t)
    h = g.head
    labels = {f"v{i + 2}": h(x) for i, x in enumerate(darts1)}
    labels["v1"] = big
    n = len(darts1) + 1
    # Around the 4-vertex: v1, v3 on the 3-face side, then the spare neighbour, then the 4-face side.
    labels[f"v{n + 1}"] = h(darts2[3])
    labels[f"v{n + 2}"] = h(darts2[2])
    labels["f1"] = corners2[2]
    labels["f2"] = corners2[1]
    labels["face3"] = t
    labels["face4"] = q
    return labels


def detect_reducible(g: PlaneGraph) -> list[ConfigurationHit]:
    """Every occurrence of the reducible configurations in ``HIT_KINDS``, with role labels."""
    hits: list[ConfigurationHit] = []
    if not g.is_connected():
        reps = [min(c) for c in g.components]
        hits.append(ConfigurationHit("NotTwoConnected", {"v1": reps[0], "v2": reps[1]}, "disconnected"))
    for v in _cut_vertices(g):
        hits.append(ConfigurationHit("NotTwoConnected", {"v1": v}, "cut vertex"))

    face_sets = {v: sorted({g.face_of[d] for d in g.darts_at[v]}) for v in g.vertices}
    for v in g.vertices:
        k = g.degree(v)
        big = [f for f in face_sets[v] if g.faces[f].degree >= 4]
        if k + len(big) <= 6:
            hits.append(ConfigurationHit("LowKplusL", {"v1": v}, f"k={k} l={len(big)}"))
    for v in g.vertices:
        if g.degree(v) <= 3:
            hits.append(ConfigurationHit("SmallDegreeVertex", {"v1": v}, f"degree {g.degree(v)}"))
    for f in g.faces:
        if f.darts and f.degree <= 2:
            hits.append(ConfigurationHit("TwoFace", {"f1": f.index}, f"face on {f.vertices}"))
    threes = {v: _three_faces_at(g, v) for v in g.vertices}
    for v in g.vertices:
        if g.degree(v) == 4 and len(threes[v]) >= 2:
            f1, f2 = threes[v][:2]
            hits.append(ConfigurationHit("SharedFourVertex", {"v1": v, "f1": f1, "f2": f2}))
    seen: set[tuple[str, int]] = set()
    for d, t, q in _shared_edges(g):
        e = d >> 1
        a, b = g.origin[d], g.head(d)
        da, db = g.degree(a), g.degree(b)
        if da == db == 4:
            if ("P5", e) not in seen:
                seen.add(("P5", e))
                hits.append(ConfigurationHit("P5_edge44", _labels_44(g, d, t, q)))
            continue
        for big, four in ((a, b), (b, a)):
            if g.degree(four) != 4:
                continue
            n3 = len(threes[big])
            if g.degree(big) == 5 and n3 == 3:
                kind = "P6_4and5with3"
            elif g.degree(big) == 6 and n3 == 5:
                kind = "P7_4and6with5"
            else:
                continue
            if (kind, e) not in seen:
                seen.add((kind, e))
                hits.append(ConfigurationHit(kind, _labels_big(g, d, t, q, big)))
    return hits


@dataclass(frozen=True)
class AuditReport:
    initial: ChargeLedger
    final: ChargeLedger
    conserved_initial: bool
    conserved_final: bool
    outgoing_within_budget: bool
    untouched_four_faces: bool
    hits: tuple[ConfigurationHit, ...]
    silent_vertices: tuple[tuple[int, int, int], ...]
    negative: tuple[tuple[str, int, int], ...]
    alarm: str | None = None

    @property
    def ok(self) -> bool:
        return (
            self.conserved_initial
            and self.conserved_final
            and self.outgoing_within_budget
            and self.untouched_four_faces
            and self.alarm is None
        )

    def hit_counts(self) -> dict[str, int]:
        counts = {k: 0 for k in HIT_KINDS}
        for h in self.hits:
            counts[h.kind] += 1
        return counts

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "total_initial": format_sixths(self.initial.total),
            "total_final": format_sixths(self.final.total),
            "conserved_initial": self.conserved_initial,
            "conserved_final": self.conserved_final,
            "outgoing_within_budget": self.outgoing_within_budget,
            "untouched_four_faces": self.untouched_four_faces,
            "hit_counts": self.hit_counts(),
            "hits": [h.to_dict() for h in self.hits],
            "silent_vertices": [{"vertex": v, "degree": d, "three_faces": t} for v, d, t in self.silent_vertices],
            "negative": [{"kind": k, "id": i, "charge": format_sixths(c)} for k, i, c in self.negative],
            "alarm": self.alarm,
            "initial": self.initial.to_dict(),
            "final": self.final.to_dict(),
        }


def _outgoing(transfers: Iterable[Transfer]) -> dict[int, int]:
    sent: dict[int, int] = {}
    for t in transfers:
        if t.source[0] == "vertex":
            sent[t.source[1]] = sent.get(t.source[1], 0) + t.sixths
    return sent


def audit(g: PlaneGraph) -> AuditReport:
    """Charges before and after the rules, conservation checks and hits.

    A graph with no hit would need every final charge to be non-negative,
    which the total of -48 forbids; reaching that branch raises an alarm
    either way.
    """
    initial = initial_charges(g)
    final = apply_rules(g, initial)
    sent = _outgoing(final.transfers)
    within = all(sent.get(v, 0) <= max(initial.vertex[v], 0) for v in g.vertices)
    fours = all(final.face[f.index] == initial.face[f.index] for f in g.faces if f.degree == 4)
    hits = detect_reducible(g)
    silent = tuple(
        (v, g.degree(v), len(_three_faces_at(g, v)))
        for v in g.vertices
        if _is_silent(g.degree(v), len(_three_faces_at(g, v)))
    )
    negative = tuple(
        [("vertex", v, c) for v, c in sorted(final.vertex.items()) if c < 0]
        + [("face", f, c) for f, c in sorted(final.face.items()) if c < 0]
    )
    alarm = None
    if not hits:
        if negative:
            alarm = "no reducible configuration, yet some final charge is negative"
        else:
            alarm = "no reducible configuration and all final charges non-negative, contradicting the total"
    return AuditReport(
        initial,
        final,
        initial.total == TOTAL_SIXTHS,
        final.total == TOTAL_SIXTHS,
        within,
        fours,
        tuple(hits),
        silent,
        negative,
        alarm,
    )
