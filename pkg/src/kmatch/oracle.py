"""Brute-force ground truth by backtracking over record weights.

Deliberately shares nothing with the reduction pipelines beyond the
:class:`Multigraph` container. Counts are per normalized record: weight
functions on endpoint pairs, not on individual parallel copies.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .graph_core import Multigraph
from .weights import WeightFunction

DEFAULT_WORK_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleResult:
    exists: bool
    count: int | None
    witness: WeightFunction | None


def _search(
    G: Multigraph,
    k: int,
    cap: Callable[[int], int],
    count: bool,
    budget: int,
) -> tuple[int, tuple[int, ...] | None]:
    """Assignments c with 0 <= c[j] <= cap(j) giving every vertex load k.

    Returns (number found, first found). When ``count`` is false the search
    stops at the first solution.
    """
    n, recs = G.n, G.records
    m = len(recs)
    if n == 0:
        return 1, ()
    last = [-1] * n
    for j, r in enumerate(recs):
        last[r.u] = last[r.v] = j
    if any(x == -1 for x in last):
        return 0, None  # a vertex with no records can never reach load k >= 1

    # most load still obtainable at each vertex from records j.. onward
    room = [[0] * n for _ in range(m + 1)]
    for j in range(m - 1, -1, -1):
        row = room[j] = list(room[j + 1])
        r = recs[j]
        if r.is_loop:
            row[r.u] += 2 * min(cap(j), k // 2)
        else:
            row[r.u] += min(cap(j), k)
            row[r.v] += min(cap(j), k)
    finished = [[] for _ in range(m)]
    for v in range(n):
        finished[last[v]].append(v)

    residual = [k] * n
    assign = [0] * m
    found = 0
    first: tuple[int, ...] | None = None
    nodes = 0

    def go(j: int) -> bool:
        nonlocal found, first, nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"oracle exceeded its work budget of {budget} nodes")
        if j == m:
            found += 1
            if first is None:
                first = tuple(assign)
            return not count
        r = recs[j]
        if r.is_loop:
            top = min(cap(j), residual[r.u] // 2)
        else:
            top = min(cap(j), residual[r.u], residual[r.v])
        nxt = room[j + 1]
        for w in range(top + 1):
            assign[j] = w
            if r.is_loop:
                residual[r.u] -= 2 * w
            else:
                residual[r.u] -= w
                residual[r.v] -= w
            ok = all(residual[v] == 0 for v in finished[j]) and all(
                residual[v] <= nxt[v] for v in (r.u, r.v)
            )
            stop = ok and go(j + 1)
            if r.is_loop:
                residual[r.u] += 2 * w
            else:
                residual[r.u] += w
                residual[r.v] += w
            if stop:
                return True
        assign[j] = 0
        return False

    go(0)
    return found, first


def oracle_solve(
    G: Multigraph, k: int, count: bool = False, budget: int = DEFAULT_WORK_BUDGET
) -> OracleResult:
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    found, first = _search(G, k, lambda j: k, count, budget)
    witness = WeightFunction(G, k, first) if first is not None else None
    return OracleResult(found > 0, found if count else None, witness)


def oracle_kfactor(G: Multigraph, k: int, budget: int = DEFAULT_WORK_BUDGET) -> bool:
    """Does some choice of 0..mult(e) copies per record give degree k everywhere?"""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    mults = [r.mult for r in G.records]
    found, _ = _search(G, k, lambda j: mults[j], False, budget)
    return found > 0
