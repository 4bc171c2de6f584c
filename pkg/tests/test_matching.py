import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_max_matching_size, subsets
from kmatch import GraphError, Multigraph, bipartition, eval_tutte
from kmatch.generators import cycle, petersen
from kmatch.matching import (
    MatchingError,
    bipartite_max_matching,
    is_matching,
    is_perfect,
    max_matching,
    verify_hall_witness,
)


@st.composite
def simple_graphs(draw, max_n=8, max_edges=12):
    n = draw(st.integers(1, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    if not pairs:
        return Multigraph(n)
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_edges))
    return Multigraph(n, chosen)


def has_augmenting_path(G: Multigraph, M) -> bool:
    """Independent check: DFS over simple alternating paths between exposed vertices."""
    mate = {}
    for j in M:
        r = G.records[j]
        mate[r.u], mate[r.v] = r.v, r.u
    adj = {v: set() for v in range(G.n)}
    for r in G.records:
        adj[r.u].add(r.v)
        adj[r.v].add(r.u)
    exposed = [v for v in range(G.n) if v not in mate]

    def extend(path, need_matched):
        v = path[-1]
        for u in adj[v]:
            if u in path:
                continue
            if need_matched:
                if mate.get(v) == u and extend(path + [u], False):
                    return True
            elif mate.get(v) != u:
                if u not in mate:
                    return True
                if u in mate and extend(path + [u], True):
                    return True
        return False

    return any(extend([s], False) for s in exposed)


def test_small_examples(C4, C5, P10):
    assert len(max_matching(C4)) == 2
    assert len(max_matching(C5)) == 2
    edges = [(r.u, r.v) for r in P10.records]
    assert brute_max_matching_size(edges) == 5
    M = max_matching(P10)
    assert len(M) == 5 and is_matching(P10, M) and is_perfect(P10, M)


def test_is_perfect_examples(C4, C5):
    assert is_perfect(C4, {0, 2})
    assert not is_perfect(C5, max_matching(C5))
    assert is_perfect(Multigraph(0), frozenset())


def test_loops_rejected(loop1):
    with pytest.raises(MatchingError):
        max_matching(loop1)


def test_deterministic(P10):
    assert max_matching(P10) == max_matching(petersen())


def test_blossom_case():
    # triangle with pendant paths forces a blossom contraction
    G = Multigraph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (0, 4), (4, 5)])
    assert len(max_matching(G)) == 3


@settings(max_examples=300, deadline=None)
@given(simple_graphs())
def test_maximum_against_brute_force(G):
    M = max_matching(G)
    assert is_matching(G, M)
    assert len(M) == brute_max_matching_size([(r.u, r.v) for r in G.records])
    assert not has_augmenting_path(G, M)


@settings(max_examples=150, deadline=None)
@given(simple_graphs(max_n=8, max_edges=14))
def test_tutte_biconditional(G):
    perfect = is_perfect(G, max_matching(G))
    tutte_ok = all(eval_tutte(G, S) <= 0 for S in subsets(G.n))
    assert perfect == tutte_ok


def test_bipartite_examples(K33, K13):
    M, w = bipartite_max_matching(K33, (0, 1, 2), (3, 4, 5))
    assert len(M) == 3 and w is None
    M, w = bipartite_max_matching(K13, (1, 2, 3), (0,))
    assert len(M) == 1
    assert w.X == (1, 2, 3) and w.NX == (0,)
    C6 = cycle(6)
    U, W = bipartition(C6)
    M, w = bipartite_max_matching(C6, U, W)
    assert len(M) == 3 and w is None


def test_bipartite_rejects_bad_partition(C3, C4):
    with pytest.raises(GraphError):
        bipartite_max_matching(C4, (0, 1), (2, 3))
    with pytest.raises(GraphError):
        bipartite_max_matching(C3, (0,), (1,))


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_bipartite_size_and_witness(a, b, data):
    pairs = [(i, a + j) for i in range(a) for j in range(b)]
    chosen = data.draw(st.lists(st.sampled_from(pairs), unique=True))
    G = Multigraph(a + b, chosen)
    U, W = tuple(range(a)), tuple(range(a, a + b))
    M, witness = bipartite_max_matching(G, U, W)
    assert is_matching(G, M)
    assert len(M) == brute_max_matching_size(chosen)
    if len(M) == a:
        assert witness is None
    else:
        assert set(witness.X) <= set(U)
        assert verify_hall_witness(G, witness)
        assert len(witness.NX) < len(witness.X)
