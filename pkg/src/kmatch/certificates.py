"""Deficiency conditions, their violators, and certificate checking.

Every evaluator returns ``lhs - rhs`` of its condition, so a positive value
is a strict violation. For the k-factor criterion the value is the
deficiency delta itself and a negative value is the violation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Union

from .graph_core import (
    GraphError,
    Multigraph,
    components_avoiding,
    neighborhood,
    summarize,
    vertex_set,
)
from .matching import HallWitness, verify_hall_witness

DEFAULT_CERT_BOUND = 16


def eval_even(G: Multigraph, S: Iterable[int]) -> int:
    """i(G-S) - |S|."""
    S = vertex_set(G, S)
    return summarize(G, S).i - len(S)


def eval_odd(G: Multigraph, S: Iterable[int], k: int) -> int:
    """odd(G-S) + k*i(G-S) - k*|S| for odd k.

    odd() counts odd components that are not isolated vertices, which
    includes single vertices carrying a loop: their internal load is even,
    so like larger odd components they need odd weight from S.
    """
    if k < 1 or k % 2 == 0:
        raise ValueError(f"eval_odd needs an odd positive k, got {k}")
    S = vertex_set(G, S)
    summary = summarize(G, S)
    return summary.odd_nontrivial + k * summary.i - k * len(S)


def eval_tutte(G: Multigraph, S: Iterable[int]) -> int:
    """c_o(G-S) - |S|."""
    S = vertex_set(G, S)
    return summarize(G, S).c_o - len(S)


@dataclass(frozen=True)
class ComponentParity:
    order: int
    edges_to_S: int
    counted: bool


@dataclass(frozen=True)
class DeltaReport:
    delta: int
    tau: int
    ledger: tuple[ComponentParity, ...]


def eval_delta(G: Multigraph, k: int, D: Iterable[int], S: Iterable[int]) -> DeltaReport:
    """k|D| - k|S| + sum_{v in S} d_{G-D}(v) - tau over components of G-(D u S)."""
    D = vertex_set(G, D)
    S = vertex_set(G, S)
    if set(D) & set(S):
        raise ValueError("D and S must be disjoint")
    in_d = set(D)
    in_s = set(S)
    deg_s = 0
    for v in S:
        for j in G.incident(v):
            rec = G.records[j]
            if rec.is_loop:
                deg_s += 2 * rec.mult
            elif rec.other(v) not in in_d:
                deg_s += rec.mult

    ledger = []
    for comp in components_avoiding(G, in_d | in_s):
        e_cs = 0
        for v in comp:
            for j in G.incident(v):
                rec = G.records[j]
                if rec.other(v) in in_s:
                    e_cs += rec.mult
        ledger.append(ComponentParity(len(comp), e_cs, (e_cs + k * len(comp)) % 2 == 1))
    tau = sum(1 for c in ledger if c.counted)
    delta = k * len(D) - k * len(S) + deg_s - tau
    assert (delta - k * G.n) % 2 == 0, "delta parity clause failed"
    return DeltaReport(delta, tau, tuple(ledger))


@dataclass(frozen=True)
class EvenViolator:
    S: tuple[int, ...]


@dataclass(frozen=True)
class OddViolator:
    S: tuple[int, ...]
    k: int


@dataclass(frozen=True)
class TutteViolator:
    S: tuple[int, ...]


@dataclass(frozen=True)
class HallViolator:
    X: tuple[int, ...]


@dataclass(frozen=True)
class TutteBarrier:
    D: tuple[int, ...]
    S: tuple[int, ...]
    k: int


Certificate = Union[EvenViolator, OddViolator, TutteViolator, HallViolator, TutteBarrier]


def violation_value(G: Multigraph, k: int, S: Iterable[int]) -> int:
    """The condition that is exact for perfect k-matchings, evaluated at S."""
    return eval_even(G, S) if k % 2 == 0 else eval_odd(G, S, k)


def find_violator(G: Multigraph, k: int, bound: int = DEFAULT_CERT_BOUND) -> Certificate | None:
    """First violating S in (size, lexicographic) order, or None.

    Returns None without searching when ``G.n > bound``.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if G.n > bound:
        return None
    for size in range(G.n + 1):
        for S in combinations(range(G.n), size):
            if violation_value(G, k, S) > 0:
                return EvenViolator(S) if k % 2 == 0 else OddViolator(S, k)
    return None


def verify_certificate(G: Multigraph, c: Certificate) -> bool:
    try:
        if isinstance(c, EvenViolator):
            return eval_even(G, c.S) > 0
        if isinstance(c, OddViolator):
            return eval_odd(G, c.S, c.k) > 0
        if isinstance(c, TutteViolator):
            return eval_tutte(G, c.S) > 0
        if isinstance(c, HallViolator):
            return _hall_violated(G, c.X)
        if isinstance(c, TutteBarrier):
            return eval_delta(G, c.k, c.D, c.S).delta < 0
    except GraphError as exc:
        raise ValueError(f"certificate does not fit the graph: {exc}") from None
    raise TypeError(f"not a certificate: {c!r}")


def _hall_violated(G: Multigraph, X: Iterable[int]) -> bool:
    X = vertex_set(G, X)
    NX = neighborhood(G, X)
    # X must be independent so that each x needs a private partner in N(X)
    return not set(X) & set(NX) and verify_hall_witness(G, HallWitness(X, NX))


def all_barriers_nonnegative(G: Multigraph, k: int) -> bool:
    """True iff delta(D, S) >= 0 for every disjoint pair (3^n evaluations)."""
    n = G.n
    for code in range(3 ** n):
        D, S = [], []
        x = code
        for v in range(n):
            x, r = divmod(x, 3)
            if r == 1:
                D.append(v)
            elif r == 2:
                S.append(v)
        if eval_delta(G, k, D, S).delta < 0:
            return False
    return True
