from __future__ import annotations

import pytest

from capital.generators import generate
from capital.plane_graph import collapse_two_faces, from_json
from capital.rbb import (
    Colour,
    ConditionSet,
    HasTwoFaces,
    NoColouring,
    RBBRequest,
    SearchLimit,
    TraceEvent,
    XYNotOuter,
    brute_force_rbb,
    check_conditions,
    recursive_rbb,
    oracle_rbb,
)

from oracles import RawGraph, brute_rbb_solutions, naive_rbb_ok

R, U, K = Colour.RED, Colour.BLUE, Colour.BLACK


def _conditions(violations) -> set[int]:
    return {v.condition for v in violations}


@pytest.fixture
def wheel4():
    # Hub 4 inside the square 0123; every inner face is a triangle on the hub.
    return generate("wheel", [4])


def test_valid_colouring_has_no_violations(wheel4):
    req = RBBRequest(0, 1, K)
    col = {0: K, 1: K, 2: K, 3: U, 4: R}
    assert check_conditions(wheel4, col, req) == []


@pytest.mark.parametrize(
    ("col", "expected"),
    [
        ({0: U, 1: K, 2: K, 3: U, 4: R}, {1}),
        ({0: K, 1: U, 2: K, 3: U, 4: R}, {2}),
        ({0: K, 1: K, 2: K, 3: U, 4: U}, {3}),
        ({0: K, 1: K, 2: R, 3: U, 4: R}, {4, 5}),
        ({0: K, 1: K, 2: K, 3: U, 4: K}, {6}),
    ],
)
def test_each_condition_is_detected(wheel4, col, expected):
    assert _conditions(check_conditions(wheel4, col, RBBRequest(0, 1, K))) >= expected


def test_condition_six_counts_blue_vertices():
    # Faces without red need exactly one blue; two blues on a face fail.
    g = generate("cycle", [4])
    col = {0: U, 1: K, 2: U, 3: K}
    assert [v.condition for v in check_conditions(g, col, RBBRequest(3, 1, K))] == [6]


def test_condition_seven_covers_separating_triangles():
    g = generate("stellated_triangles", [1])
    col = {v: K for v in g.vertices}
    violations = [v for v in check_conditions(g, col, RBBRequest(0, 1, K)) if v.condition == 7]
    assert {v.witness for v in violations} == set(g.triangles)
    face_triangles = {tuple(sorted(f.vertices)) for f in g.faces if f.degree == 3}
    assert set(g.triangles) - face_triangles


def test_fg6_skips_condition_seven():
    g = generate("cycle", [3])
    col = {0: K, 1: K, 2: U}
    assert check_conditions(g, {**col, 2: K}, RBBRequest(0, 1, K, ConditionSet.FG6)) != []
    all_black = {0: K, 1: K, 2: K}
    assert 7 not in _conditions(check_conditions(g, all_black, RBBRequest(0, 1, K, ConditionSet.FG6)))
    assert 7 in _conditions(check_conditions(g, all_black, RBBRequest(0, 1, K)))


def test_request_validation():
    with pytest.raises(ValueError):
        RBBRequest(0, 1, R)
    with pytest.raises(ValueError):
        RBBRequest(1, 1, K)
    assert RBBRequest(0, 1, "blue").c is U


def test_check_conditions_matches_naive_oracle(corpus):
    # All 3^n colourings of the small corpus graphs, both condition sets.
    from itertools import product

    for entry, g in corpus:
        h = collapse_two_faces(g)
        if h.n_vertices > 5 or h.n_edges == 0:
            continue
        raw = RawGraph(h)
        d = next(d for d in range(h.n_darts) if h.is_outer_dart(d))
        x, y = h.origin[d], h.head(d)
        for cs in ConditionSet:
            req = RBBRequest(x, y, U, cs)
            for combo in product(list(Colour), repeat=h.n_vertices):
                col = dict(zip(h.vertices, combo))
                mine = not check_conditions(h, col, req)
                assert mine == naive_rbb_ok(raw, col, x, y, "blue", cs is ConditionSet.STRONG7), entry.name


def test_brute_force_matches_naive_enumeration():
    g = generate("wheel", [4])
    req = RBBRequest(0, 1, U)
    mine = [{v: c.value for v, c in col.items()} for col in brute_force_rbb(g, req)]
    assert mine == brute_rbb_solutions(g, 0, 1, "blue")
    assert mine


def test_oracle_finds_a_solution_exactly_when_brute_force_does(corpus):
    for entry, g in corpus:
        h = collapse_two_faces(g)
        if h.n_vertices > 6 or h.n_edges == 0:
            continue
        raw = RawGraph(h)
        for d in range(h.n_darts):
            if not h.is_outer_dart(d):
                continue
            x, y = h.origin[d], h.head(d)
            for c in (K, U):
                req = RBBRequest(x, y, c)
                exists = bool(brute_rbb_solutions(raw, x, y, c.value))
                try:
                    col = oracle_rbb(h, req)
                except NoColouring:
                    assert not exists, entry.name
                else:
                    assert exists and not check_conditions(h, col, req), entry.name


def test_recursive_output_is_a_brute_force_solution(corpus):
    for entry, g in corpus:
        h = collapse_two_faces(g)
        if h.n_vertices > 6 or h.n_edges == 0:
            continue
        d = min(d for d in range(h.n_darts) if h.is_outer_dart(d))
        x, y = h.origin[d], h.head(d)
        col = recursive_rbb(h, RBBRequest(x, y, K))
        assert {v: c.value for v, c in col.items()} in brute_rbb_solutions(h, x, y, "black"), entry.name


def test_two_faces_are_rejected():
    g = generate("parallel_edge_chain", [2])
    with pytest.raises(HasTwoFaces):
        recursive_rbb(g, RBBRequest(0, 1, K))
    with pytest.raises(HasTwoFaces):
        oracle_rbb(g, RBBRequest(0, 1, K))


def test_request_edge_must_be_on_the_outer_face():
    g = generate("wheel", [4])
    with pytest.raises(XYNotOuter):
        recursive_rbb(g, RBBRequest(4, 0, K))
    with pytest.raises(XYNotOuter):
        recursive_rbb(g, RBBRequest(0, 2, K))


def test_oracle_node_limit():
    g = generate("grid", [5, 6])
    with pytest.raises(SearchLimit):
        oracle_rbb(g, RBBRequest(0, 1, K), node_limit=1)


def _trace(g, c=K):
    trace: list[TraceEvent] = []
    d = min(d for d in range(g.n_darts) if g.is_outer_dart(d))
    req = RBBRequest(g.origin[d], g.head(d), c)
    col = recursive_rbb(g, req, trace=trace)
    assert not check_conditions(g, col, req)
    return trace


def test_stellated_triangles_recurse_deeply():
    trace = _trace(generate("stellated_triangles", [3]))
    assert max(e.depth for e in trace) >= 2
    assert any(e.kind == "cut3" for e in trace)


def test_nested_two_gon_takes_the_black_branch():
    g = collapse_two_faces(generate("nested_2gon", [3]))
    assert any((e.kind, e.case) == ("cut2", "black") for e in _trace(g))


def test_lensed_triangulation_takes_both_red_branches():
    g = generate("lensed_apollonian", [20, 4, 4, 1])
    cases = {(e.kind, e.case) for e in _trace(g)}
    assert ("cut2", "red") in cases
    assert ("cut2", "red+temporary-edge") in cases


def test_triangle_cut_cases_all_occur():
    cases = set()
    for name, params in (("apollonian", [12, 2]), ("apollonian", [30, 3])):
        cases |= {e.case for e in _trace(generate(name, params)) if e.kind == "cut3"}
    assert cases == {"red-blue-black", "red-black-black", "blue-black-black"}


def test_base_case_switches_on_an_outer_triangle():
    trace = _trace(generate("octahedron"))
    assert [(e.kind, e.case) for e in trace] == [("base", "outer-triangle-switch")]


def test_components_are_coloured_separately():
    trace = _trace(generate("disjoint_cycles", [3, 4]))
    assert trace[0].kind == "components"


def test_outer_lens_needs_the_flag():
    # The lens 0-1 bounds the outer face with a pendant 2 at 0 inside.
    g = from_json('{"vertices": 3, "rotations": [[[1, 0], [2, 0], [1, 1]], [[0, 0], [0, 1]], [[0, 0]]], "outer": [1, 0, 1]}')
    assert any(f.outer and g.is_two_face(f) for f in g.faces)
    req = RBBRequest(0, 1, K)
    with pytest.raises(HasTwoFaces):
        recursive_rbb(g, req)
    trace: list[TraceEvent] = []
    col = recursive_rbb(g, req, trace=trace, allow_outer_two_face=True)
    assert trace[0].kind == "outer-lens"
    assert col[2] is R
    assert not check_conditions(g, col, req)
