import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_edge_cut
from kmatch import (
    GraphError,
    Multigraph,
    bipartition,
    component_summary,
    degree,
    delete_vertices,
    edge_connectivity,
    edges_between,
    neighborhood,
    regularity,
)
from kmatch.generators import complete, cycle, path, petersen, star
from kmatch.graph_core import EdgeRecord, union


@st.composite
def multigraphs(draw, max_n=6, max_edges=8, max_mult=3, loops=True):
    n = draw(st.integers(1, max_n))
    vertex = st.integers(0, n - 1)
    edges = draw(
        st.lists(st.tuples(vertex, vertex, st.integers(1, max_mult)), max_size=max_edges)
    )
    if not loops:
        edges = [e for e in edges if e[0] != e[1]]
    return Multigraph(n, edges)


def test_degree_examples(C3, loop1, K4):
    assert [degree(C3, v) for v in range(3)] == [2, 2, 2]
    assert degree(loop1, 0) == 2
    assert all(degree(K4, v) == 3 for v in range(4))


def test_degree_rejects_bad_vertex(C3):
    with pytest.raises(GraphError):
        degree(C3, 3)


def test_parallel_inputs_normalize():
    G = Multigraph(3, [(0, 1), (1, 0, 2), EdgeRecord(1, 2), (2, 1)])
    assert G.records == (EdgeRecord(0, 1, 3), EdgeRecord(1, 2, 2))
    assert G.source_index == (0, 0, 1, 1)
    assert G == Multigraph(3, [(0, 1, 3), (1, 2, 2)])


@pytest.mark.parametrize("bad", [[(0, 3)], [(0, 1, 0)], [(-1, 0)]])
def test_constructor_validates(bad):
    with pytest.raises(GraphError):
        Multigraph(3, bad)


def test_empty_graph_counts():
    E = Multigraph(0)
    s = component_summary(E)
    assert (s.i, s.c_o, s.odd_big) == (0, 0, 0)
    assert edges_between(E, [], []) == 0


def test_edges_between_examples(K4):
    assert edges_between(K4, {0, 1}, {2, 3}) == 4
    assert edges_between(K4, [], range(4)) == 0
    assert edges_between(path(3), {0, 2}, {1}) == 2


def test_edges_between_loop_needs_overlap():
    G = Multigraph(2, [(0, 0, 2), (0, 1)])
    assert edges_between(G, {0}, {0}) == 2
    assert edges_between(G, {0}, {1}) == 1


def test_neighborhood_examples(K13, loop1):
    assert neighborhood(K13, {0}) == (1, 2, 3)
    assert neighborhood(K13, ()) == ()
    assert neighborhood(loop1, {0}) == (0,)


def test_delete_vertices_examples(C5, K13):
    sub = delete_vertices(C5, {0})
    assert sub.vertices == (1, 2, 3, 4)
    assert sub.graph == path(4)
    assert delete_vertices(C5, ()).graph == C5
    leaves = delete_vertices(K13, {0}).graph
    assert leaves.n == 3 and leaves.m == 0


def test_delete_vertices_record_map():
    G = Multigraph(4, [(0, 1), (1, 2, 2), (2, 3), (3, 3)])
    sub = delete_vertices(G, {0})
    assert sub.records == (1, 2, 3)
    for j, host in enumerate(sub.records):
        assert sub.graph.records[j].mult == G.records[host].mult


def test_component_summary_examples(K13, C3):
    s = component_summary(delete_vertices(K13, {0}).graph)
    assert (s.i, s.c_o, s.odd_big) == (3, 3, 0)
    s = component_summary(C3)
    assert (s.i, s.c_o, s.odd_big) == (0, 1, 1)
    G = union(Multigraph(2, [(0, 1)]), Multigraph(1), cycle(5))
    s = component_summary(G)
    assert (s.i, s.c_o, s.odd_big) == (1, 2, 1)
    assert s.orders == (2, 1, 5)


def test_loop_singleton_is_not_isolated(loop1):
    s = component_summary(loop1)
    assert (s.i, s.c_o, s.odd_big, s.loop_singletons) == (0, 1, 0, 1)


def test_edge_connectivity_examples(C5):
    assert edge_connectivity(C5) == 2
    assert edge_connectivity(union(complete(2), complete(2))) == 0
    with pytest.raises(GraphError):
        edge_connectivity(Multigraph(1))


def test_petersen_edge_connectivity_matches_exhaustive_cuts(P10):
    assert brute_edge_cut(P10) == 3
    assert edge_connectivity(P10) == 3


def test_edge_connectivity_counts_multiplicity_and_ignores_loops():
    G = Multigraph(3, [(0, 1, 3), (1, 2, 2), (0, 0, 5)])
    assert edge_connectivity(G) == 2


def test_regularity_examples(K4, K13):
    assert regularity(K4) == 3
    assert regularity(K13) is None
    assert regularity(cycle(6)) == 2
    with pytest.raises(GraphError):
        regularity(Multigraph(0))


def test_bipartition_examples(C4, C3, loop1):
    assert bipartition(C4) == ((0, 2), (1, 3))
    assert bipartition(C3) is None
    assert bipartition(loop1) is None


def test_bipartition_balances_isolated_vertices():
    G = Multigraph(5, [(0, 1), (0, 2)])
    U, W = bipartition(G)
    assert U == (0, 3, 4) and W == (1, 2)


@settings(max_examples=200, deadline=None)
@given(multigraphs())
def test_degree_recount_and_handshake(G):
    everything = range(G.n)
    for v in everything:
        assert degree(G, v) == edges_between(G, {v}, everything) + G.loop_multiplicity(v)
    assert sum(degree(G, v) for v in everything) == 2 * G.total_multiplicity


@settings(max_examples=200, deadline=None)
@given(multigraphs())
def test_summary_invariants(G):
    s = component_summary(G)
    assert s == component_summary(delete_vertices(G, ()).graph)
    assert s.c_o == s.i + s.odd_big + s.loop_singletons
    assert sorted(v for c in s.components for v in c) == list(range(G.n))
    if not G.has_loops():
        assert s.c_o == s.i + s.odd_big


@settings(max_examples=150, deadline=None)
@given(multigraphs(max_n=7, max_edges=12, loops=True))
def test_edge_connectivity_matches_enumeration(G):
    if G.n < 2:
        return
    lam = edge_connectivity(G)
    assert lam == brute_edge_cut(G)
    if not G.has_loops():
        assert lam <= min(G.degrees())


def test_edge_connectivity_enumeration_n10():
    for G in (petersen(), complete(10), cycle(10), star(9)):
        assert edge_connectivity(G) == brute_edge_cut(G)
