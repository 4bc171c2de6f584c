"""Decide and construct perfect k-matchings.

Three routes:

``direct_matching`` (k = 1)
    Drop loops and run the blossom algorithm.
``even_via_2matching`` (k even)
    Perfect matching in the split graph gives a perfect 2-matching f2 with
    values in {0, 1, 2}; ``(k/2) * f2`` is a perfect k-matching.
``odd_via_kfactor`` (k odd, k >= 3)
    A perfect k-matching of G is a k-factor of G with every edge repeated k
    times; k-factors are found as perfect matchings of the factor gadget.

Infeasible answers come with a canonical violator when ``n <= cert_bound``.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

from .certificates import DEFAULT_CERT_BOUND, Certificate, find_violator, verify_certificate
from .graph_core import Multigraph, edge_connectivity, regularity, strip_loops
from .matching import bipartite_max_matching, is_perfect, max_matching
from .transforms import (
    InternalInconsistency,
    TwoFactorDecomposition,
    factor_gadget,
    multiply_edges,
    normalize_two_matching,
    recover_factor,
    split_bipartite,
    two_matching_from_split,
)
from .weights import WeightFunction, vertex_load, verify_perfect

__all__ = [
    "CorollaryReport",
    "SolveOptions",
    "SolveReport",
    "WeightFunction",
    "check_regular_corollary",
    "corollary_threshold",
    "solve",
    "vertex_load",
    "verify_perfect",
]

DIRECT = "direct_matching"
EVEN = "even_via_2matching"
ODD = "odd_via_kfactor"


@dataclass(frozen=True)
class SolveOptions:
    cert_bound: int = DEFAULT_CERT_BOUND
    factor_decomposition: bool = False  # even k: also build the {K2, odd cycle} factor


@dataclass
class SolveReport:
    feasible: bool
    k: int
    route: str
    weights: WeightFunction | None = None
    certificate: Certificate | None = None
    reason: str | None = None
    decomposition: TwoFactorDecomposition | None = None
    stats: dict = field(default_factory=dict)


def solve(G: Multigraph, k: int, options: SolveOptions | None = None) -> SolveReport:
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    options = options or SolveOptions()
    started = time.perf_counter()
    if k == 1:
        report = _solve_direct(G)
    elif k % 2 == 0:
        report = _solve_even(G, k, options)
    else:
        report = _solve_odd(G, k)

    if report.feasible:
        if not verify_perfect(G, report.weights):
            raise InternalInconsistency(f"{report.route} returned a weight function that is not perfect")
    else:
        _attach_certificate(G, report, options.cert_bound)
    report.stats["seconds"] = time.perf_counter() - started
    return report


def _solve_direct(G: Multigraph) -> SolveReport:
    H, back = strip_loops(G)
    M = max_matching(H)
    stats = {"matching_size": len(M)}
    if not is_perfect(H, M):
        return SolveReport(False, 1, DIRECT, stats=stats)
    weights = [0] * G.m
    for j in M:
        weights[back[j]] = 1
    return SolveReport(True, 1, DIRECT, WeightFunction(G, 1, tuple(weights)), stats=stats)


def _solve_even(G: Multigraph, k: int, options: SolveOptions) -> SolveReport:
    split = split_bipartite(G)
    M, witness = bipartite_max_matching(split.graph, split.left, split.right)
    stats = {"split_nodes": split.graph.n, "split_edges": split.graph.m, "matching_size": len(M)}
    if witness is not None:
        stats["hall_witness_size"] = len(witness.X)
        return SolveReport(False, k, EVEN, stats=stats)
    f2 = two_matching_from_split(split, M)
    half = k // 2
    f = WeightFunction(G, k, tuple(half * w for w in f2.weights))
    report = SolveReport(True, k, EVEN, f, stats=stats)
    if options.factor_decomposition and not any(
        w and rec.is_loop for rec, w in zip(G.records, f2.weights)
    ):
        report.decomposition = normalize_two_matching(G, f2)
    return report


def _solve_odd(G: Multigraph, k: int) -> SolveReport:
    if (k * G.n) % 2:
        return SolveReport(False, k, ODD, reason="k*n is odd", stats={"early_exit": "parity"})
    zero = [v for v, d in enumerate(G.degrees()) if d == 0]
    if zero:
        return SolveReport(
            False, k, ODD, reason=f"vertex {zero[0]} has degree 0", stats={"early_exit": "isolated"}
        )
    star = multiply_edges(G, k)
    gadget = factor_gadget(star.graph, k)
    M = max_matching(gadget.gadget)
    stats = {
        "gadget_nodes": gadget.gadget.n,
        "gadget_edges": gadget.gadget.m,
        "matching_size": len(M),
    }
    if not is_perfect(gadget.gadget, M):
        return SolveReport(False, k, ODD, stats=stats)
    selection = recover_factor(gadget, M)
    # records of G* are the records of G, so copy counts are the weights
    return SolveReport(True, k, ODD, WeightFunction(G, k, selection.counts), stats=stats)


def _attach_certificate(G: Multigraph, report: SolveReport, bound: int) -> None:
    if G.n > bound:
        report.reason = report.reason or f"certificate search skipped (n > {bound})"
        return
    cert = find_violator(G, report.k, bound)
    if cert is None or not verify_certificate(G, cert):
        raise InternalInconsistency(f"no verified violator for an infeasible instance (k={report.k})")
    report.certificate = cert


def corollary_threshold(r: int, k: int) -> int:
    """Edge-connectivity threshold for r-regular graphs and odd k."""
    q = math.ceil(r / k)
    return q - 1 if q % 2 == r % 2 else q


@dataclass(frozen=True)
class CorollaryReport:
    r: int | None
    lam: int | None
    threshold: int | None
    hypothesis_met: bool
    literal_hypothesis_met: bool
    feasible: bool
    violation: bool


def check_regular_corollary(G: Multigraph, k: int, strict: bool = False) -> CorollaryReport:
    """Compare the solver with the edge-connectivity sufficient condition.

    ``literal_hypothesis_met`` is regularity plus ``lam >= threshold``
    (``lam == threshold`` when ``strict``). ``hypothesis_met`` additionally
    requires even order: with k odd an odd-order graph never has a perfect
    k-matching, and for even r the ``>=`` reading would otherwise admit
    connected odd-order graphs such as C5. ``violation`` is raised against
    ``hypothesis_met``.
    """
    if k < 1 or k % 2 == 0:
        raise ValueError(f"the regular-graph corollary needs odd k, got {k}")
    feasible = solve(G, k).feasible
    r = regularity(G) if G.n else None
    if r is None or G.n < 2:
        return CorollaryReport(r, None, None, False, False, feasible, False)
    lam = edge_connectivity(G)
    t = corollary_threshold(r, k)
    literal = lam == t if strict else lam >= t
    met = literal and G.n % 2 == 0
    return CorollaryReport(r, lam, t, met, literal, feasible, met and not feasible)

