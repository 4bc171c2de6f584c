"""Shared fixtures and independent brute-force helpers.

The helpers here deliberately avoid kmatch's own component and matching
code: components come from networkx, matchings and cuts from plain
enumeration.
"""

from __future__ import annotations

import itertools

import networkx as nx
import pytest

from kmatch import Multigraph
from kmatch.generators import complete, complete_bipartite, cycle, petersen, star

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def to_nx(G: Multigraph) -> nx.MultiGraph:
    H = nx.MultiGraph()
    H.add_nodes_from(range(G.n))
    for r in G.records:
        for _ in range(r.mult):
            H.add_edge(r.u, r.v)
    return H


def nx_counts(G: Multigraph, S) -> tuple[int, int]:
    """(isolated, nontrivial odd) components of G - S, via networkx.

    isolated = degree zero in G - S; nontrivial odd = odd order and not isolated.
    """
    H = to_nx(G)
    H.remove_nodes_from(S)
    iso = odd = 0
    for comp in nx.connected_components(H):
        if len(comp) == 1 and H.degree(next(iter(comp))) == 0:
            iso += 1
        elif len(comp) % 2 == 1:
            odd += 1
    return iso, odd


def subsets(n: int):
    for size in range(n + 1):
        yield from itertools.combinations(range(n), size)


def brute_even_ok(G: Multigraph) -> bool:
    return all(nx_counts(G, S)[0] <= len(S) for S in subsets(G.n))


def brute_odd_ok(G: Multigraph, k: int) -> bool:
    for S in subsets(G.n):
        iso, odd = nx_counts(G, S)
        if odd + k * iso > k * len(S):
            return False
    return True


def brute_first_violator(G: Multigraph, k: int):
    for S in subsets(G.n):
        iso, odd = nx_counts(G, S)
        lhs = iso - len(S) if k % 2 == 0 else odd + k * iso - k * len(S)
        if lhs > 0:
            return S
    return None


def brute_max_matching_size(edges: list[tuple[int, int]]) -> int:
    best = 0
    for r in range(len(edges) + 1):
        for sub in itertools.combinations(edges, r):
            ends = [x for e in sub for x in e]
            if len(ends) == len(set(ends)):
                best = max(best, r)
    return best


def brute_edge_cut(G: Multigraph) -> int:
    best = None
    for mask in range(1, 2 ** (G.n - 1)):
        side = {v for v in range(G.n) if mask >> v & 1}
        cut = sum(r.mult for r in G.records if (r.u in side) != (r.v in side))
        best = cut if best is None else min(best, cut)
    return best


def brute_has_perfect_matching(n: int, edges: list[tuple[int, int]]) -> bool:
    adj = {v: set() for v in range(n)}
    for a, b in edges:
        if a != b:
            adj[a].add(b)
            adj[b].add(a)
    memo: dict[frozenset, bool] = {}

    def go(left: frozenset) -> bool:
        if not left:
            return True
        if left in memo:
            return memo[left]
        v = min(left)
        rest = left - {v}
        memo[left] = any(go(rest - {u}) for u in adj[v] & rest)
        return memo[left]

    return go(frozenset(range(n)))


def brute_weight_functions(G: Multigraph, k: int):
    """All perfect weight vectors by full product enumeration."""
    for f in itertools.product(range(k + 1), repeat=G.m):
        load = [0] * G.n
        for r, w in zip(G.records, f):
            load[r.u] += w
            load[r.v] += w
        if all(x == k for x in load):
            yield f


def brute_kfactors(G: Multigraph, k: int):
    for c in itertools.product(*(range(r.mult + 1) for r in G.records)):
        load = [0] * G.n
        for r, w in zip(G.records, c):
            load[r.u] += w
            load[r.v] += w
        if all(x == k for x in load):
            yield c


def connected_atlas(max_n: int = 6) -> list[Multigraph]:
    out = []
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if 1 <= n <= max_n and nx.is_connected(g):
            out.append(Multigraph(n, sorted(g.edges())))
    return out


@pytest.fixture
def K13() -> Multigraph:
    return star(3)


@pytest.fixture
def C3() -> Multigraph:
    return cycle(3)


@pytest.fixture
def C4() -> Multigraph:
    return cycle(4)


@pytest.fixture
def C5() -> Multigraph:
    return cycle(5)


@pytest.fixture
def K4() -> Multigraph:
    return complete(4)


@pytest.fixture
def K33() -> Multigraph:
    return complete_bipartite(3, 3)


@pytest.fixture
def P10() -> Multigraph:
    return petersen()


@pytest.fixture
def loop1() -> Multigraph:
    return Multigraph(1, [(0, 0)])
