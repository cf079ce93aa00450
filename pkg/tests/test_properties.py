"""Property tests over random plane graphs.

Graphs are drawn by taking a generated plane graph and deleting random
edges and vertices, which keeps the embedding and produces bridges, cut
vertices, lenses on the outer face and several components.
"""

from __future__ import annotations

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from capital.core import colour5, colour5_pipeline, validate_capital
from capital.discharging import TOTAL_SIXTHS, apply_rules, initial_charges
from capital.exact import capital_list_colouring
from capital.generators import generate
from capital.plane_graph import collapse_two_faces, delete_edge, delete_vertex, from_json, induced_subgraph, to_json
from capital.rbb import Colour, RBBRequest, check_conditions, recursive_rbb
from capital.triangle_free import find_triangle, three_colour

from oracles import RawGraph, brute_list_colourable, brute_rbb_solutions, naive_capital_ok

BASES = st.one_of(
    st.tuples(st.just("apollonian"), st.tuples(st.integers(1, 14), st.integers(0, 50))),
    st.tuples(st.just("lensed_apollonian"), st.tuples(st.integers(6, 12), st.integers(0, 50), st.integers(1, 2), st.integers(0, 1))),
    st.tuples(st.just("nested_2gon"), st.tuples(st.integers(1, 4))),
    st.tuples(st.just("grid"), st.tuples(st.integers(1, 4), st.integers(1, 4))),
    st.tuples(st.just("stellated_triangles"), st.tuples(st.integers(1, 3))),
    st.tuples(st.just("parallel_edge_chain"), st.tuples(st.integers(1, 4))),
    st.tuples(st.just("wheel"), st.tuples(st.integers(3, 8))),
)


@st.composite
def plane_graphs(draw, max_vertices: int | None = None):
    family, params = draw(BASES)
    g = generate(family, params)
    for _ in range(draw(st.integers(0, max(g.n_edges // 2, 0)))):
        if g.n_edges == 0:
            break
        g = delete_edge(g, 2 * draw(st.integers(0, g.n_edges - 1)))
    removals = draw(st.integers(0, 2))
    if max_vertices is not None:
        removals = max(removals, g.n_vertices - max_vertices)
    for _ in range(removals):
        if g.n_vertices <= 1:
            break
        g = delete_vertex(g, draw(st.sampled_from(g.vertices)))
    return g


COMMON = settings(max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@COMMON
@given(plane_graphs())
def test_colour5_is_always_capital(g):
    col = colour5(g)
    assert validate_capital(g, col).ok
    assert naive_capital_ok(g, col)
    assert set(col.values()) <= set(range(1, 6))


@COMMON
@given(plane_graphs())
def test_black_vertices_induce_a_triangle_free_graph(g):
    res = colour5_pipeline(g)
    blacks = set(res.black_colouring)
    assert find_triangle({v: g.adjacency[v] & blacks for v in blacks}) is None


@COMMON
@given(plane_graphs(), st.sampled_from([Colour.BLACK, Colour.BLUE]), st.integers(0, 10**6))
def test_recursive_colouring_meets_all_conditions(g, c, pick):
    h = collapse_two_faces(g)
    comps = [comp for comp in h.components if len(comp) > 1]
    if not comps:
        return
    part = induced_subgraph(h, comps[pick % len(comps)])
    darts = [d for d in range(part.n_darts) if part.is_outer_dart(d)]
    d = darts[pick % len(darts)]
    req = RBBRequest(part.origin[d], part.head(d), c)
    assert not check_conditions(part, recursive_rbb(part, req), req)


@settings(max_examples=80, deadline=None)
@given(plane_graphs(max_vertices=6), st.sampled_from([Colour.BLACK, Colour.BLUE]))
def test_recursive_colouring_is_among_brute_force_solutions(g, c):
    h = collapse_two_faces(g)
    darts = [d for d in range(h.n_darts) if h.is_outer_dart(d)]
    if not darts:
        return
    x, y = h.origin[darts[0]], h.head(darts[0])
    col = recursive_rbb(h, RBBRequest(x, y, c))
    assert {v: k.value for v, k in col.items()} in brute_rbb_solutions(h, x, y, c.value)


@settings(max_examples=80, deadline=None)
@given(plane_graphs(max_vertices=6), st.data())
def test_list_solver_agrees_with_brute_force(g, data):
    lists = {v: sorted(data.draw(st.sets(st.integers(1, 5), min_size=1, max_size=3))) for v in g.vertices}
    found = capital_list_colouring(g, lists)
    assert (found is not None) == brute_list_colourable(g, lists)
    if found is not None:
        assert all(found[v] in lists[v] for v in g.vertices)


@COMMON
@given(plane_graphs())
def test_charge_is_conserved(g):
    if not g.vertices or not g.is_connected():
        return
    init = initial_charges(g)
    final = apply_rules(g, init)
    assert init.total == final.total == TOTAL_SIXTHS


@COMMON
@given(plane_graphs())
def test_json_round_trip_and_regions(g):
    again = from_json(to_json(g))
    assert to_json(again) == to_json(g)
    raw = RawGraph(g)
    if g.vertices:
        assert sorted(raw.regions[0]) == sorted(g.regions[0])
        assert sorted(map(sorted, raw.regions[1:])) == sorted(map(sorted, g.regions[1:]))


@COMMON
@given(st.integers(1, 5), st.integers(1, 6), st.data())
def test_three_colour_on_grid_subgraphs(rows, cols, data):
    g = generate("grid", [rows, cols])
    keep = data.draw(st.sets(st.sampled_from(g.vertices), min_size=1))
    sub = induced_subgraph(g, keep)
    col = three_colour(sub)
    assert all(col[u] != col[w] for u in sub.vertices for w in sub.adjacency[u])
