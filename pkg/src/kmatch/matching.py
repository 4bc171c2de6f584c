"""Maximum-cardinality matching.

:func:`max_matching` is Edmonds' blossom algorithm in its O(V^3) array form:
a BFS alternating forest grown from one exposed root at a time, contracting
odd cycles by relabelling their base. :func:`bipartite_max_matching` is the
plain augmenting-path method and additionally extracts a Hall witness when
the left side cannot be saturated.

Matchings are frozensets of record indices of the host graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .graph_core import GraphError, Multigraph, neighborhood, vertex_set

Matching = frozenset[int]


class MatchingError(ValueError):
    pass


@dataclass(frozen=True)
class HallWitness:
    """A left-side set X whose neighbourhood NX is smaller than X."""

    X: tuple[int, ...]
    NX: tuple[int, ...]


def _adjacency(G: Multigraph) -> list[list[tuple[int, int]]]:
    adj: list[list[tuple[int, int]]] = [[] for _ in range(G.n)]
    for j, rec in enumerate(G.records):
        if rec.is_loop:
            raise MatchingError(f"record {j} is a loop; strip loops before matching")
        adj[rec.u].append((rec.v, j))
        adj[rec.v].append((rec.u, j))
    return adj


def _mates_to_matching(G: Multigraph, mate: list[int]) -> Matching:
    chosen = []
    for j, rec in enumerate(G.records):
        # one record per endpoint pair, so the mate relation picks a unique record
        if mate[rec.u] == rec.v:
            chosen.append(j)
    return frozenset(chosen)


def max_matching(G: Multigraph) -> Matching:
    """Maximum-cardinality matching of a loop-free graph.

    Parallel multiplicities are irrelevant (records are already one per
    endpoint pair). Scans are in vertex and record order, so the result is
    a deterministic function of the graph.
    """
    adj = _adjacency(G)
    nbrs = [[u for u, _ in row] for row in adj]
    n = G.n
    mate = [-1] * n

    # greedy start; augmentation below restores maximality
    for v in range(n):
        if mate[v] == -1:
            for u in nbrs[v]:
                if mate[u] == -1:
                    mate[v], mate[u] = u, v
                    break

    for root in range(n):
        if mate[root] == -1:
            end, parent = _find_augmenting(root, nbrs, mate)
            if end != -1:
                _augment(end, mate, parent)
    return _mates_to_matching(G, mate)


def _find_augmenting(root: int, nbrs: list[list[int]], mate: list[int]) -> tuple[int, list[int]]:
    n = len(nbrs)
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for to in nbrs[v]:
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    return to, parent
                used[mate[to]] = True
                queue.append(mate[to])
    return -1, parent


def _augment(v: int, mate: list[int], parent: list[int]) -> None:
    while v != -1:
        pv = parent[v]
        nxt = mate[pv]
        mate[v], mate[pv] = pv, v
        v = nxt


def is_perfect(G: Multigraph, M: Iterable[int]) -> bool:
    return 2 * len(frozenset(M)) == G.n


def is_matching(G: Multigraph, M: Iterable[int]) -> bool:
    covered: set[int] = set()
    for j in M:
        if not 0 <= j < G.m:
            return False
        rec = G.records[j]
        if rec.is_loop or rec.u in covered or rec.v in covered:
            return False
        covered.update((rec.u, rec.v))
    return True


def bipartite_max_matching(
    G: Multigraph, U: Iterable[int], W: Iterable[int]
) -> tuple[Matching, HallWitness | None]:
    """Maximum matching of a bipartite graph with parts U and W.

    When U is not saturated, the witness X consists of the U-vertices
    reachable from exposed U-vertices by alternating paths; its
    neighbourhood is matched into X, so ``|N(X)| < |X|``.
    """
    U = vertex_set(G, U)
    W = vertex_set(G, W)
    side = [-1] * G.n
    for v in U:
        side[v] = 0
    for v in W:
        if side[v] == 0:
            raise GraphError(f"vertex {v} is on both sides")
        side[v] = 1
    if -1 in side:
        raise GraphError("U and W do not cover every vertex")
    adj: list[list[tuple[int, int]]] = [[] for _ in range(G.n)]
    for j, rec in enumerate(G.records):
        if rec.is_loop or side[rec.u] == side[rec.v]:
            raise GraphError(f"record {j} ({rec.u}, {rec.v}) does not cross the bipartition")
        left = rec.u if side[rec.u] == 0 else rec.v
        adj[left].append((rec.other(left), j))

    match_rec = [-1] * G.n  # record matched at each vertex
    mate = [-1] * G.n

    def try_augment(x: int, seen: list[bool]) -> bool:
        # iterative DFS over alternating paths from x
        stack = [(x, 0)]
        path: list[tuple[int, int, int]] = []
        while stack:
            u, pos = stack.pop()
            while pos < len(adj[u]):
                y, j = adj[u][pos]
                pos += 1
                if seen[y]:
                    continue
                seen[y] = True
                if mate[y] == -1:
                    path.append((u, y, j))
                    for a, b, rec in path:
                        mate[a], mate[b] = b, a
                        match_rec[a] = match_rec[b] = rec
                    return True
                stack.append((u, pos))
                path.append((u, y, j))
                stack.append((mate[y], 0))
                break
            else:
                if path:
                    path.pop()
        return False

    for x in U:
        if mate[x] == -1:
            try_augment(x, [False] * G.n)

    M = frozenset(match_rec[x] for x in U if match_rec[x] != -1)
    exposed = [x for x in U if mate[x] == -1]
    if not exposed:
        return M, None

    reach_left = set(exposed)
    reach_right: set[int] = set()
    queue = deque(exposed)
    while queue:
        x = queue.popleft()
        for y, _ in adj[x]:
            if y not in reach_right:
                reach_right.add(y)
                z = mate[y]
                if z != -1 and z not in reach_left:
                    reach_left.add(z)
                    queue.append(z)
    X = tuple(sorted(reach_left))
    witness = HallWitness(X, neighborhood(G, X))
    assert witness.NX == tuple(sorted(reach_right)) and len(witness.NX) < len(X)
    return M, witness


def verify_hall_witness(G: Multigraph, witness: HallWitness) -> bool:
    """Re-check a witness against the graph: NX is exactly N(X), smaller than X."""
    X = vertex_set(G, witness.X)
    return neighborhood(G, X) == tuple(witness.NX) and len(witness.NX) < len(X)
