"""Command-line interface.

Exit status: 0 feasible / consistent / verified, 1 infeasible / violation /
rejected, 2 usage or input error, 3 work budget exceeded. Results go to
stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from . import certificates as certs
from .formats import (
    FormatError,
    format_graph,
    format_solution,
    format_vertex_line,
    parse_graph,
    parse_solution,
)
from .generators import generate
from .graph_core import GraphError, Multigraph
from .oracle import DEFAULT_WORK_BUDGET, BudgetExceeded, oracle_solve
from .solver import SolveOptions, check_regular_corollary, solve
from .transforms import ReductionError, factor_gadget, multiply_edges, split_bipartite
from .weights import WeightFunction, verify_perfect

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}") from None


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path: str) -> Multigraph:
    return parse_graph(_read(path))


def certificate_line(c: certs.Certificate) -> str:
    if isinstance(c, (certs.EvenViolator, certs.OddViolator)):
        return format_vertex_line("S", c.S)
    if isinstance(c, certs.TutteViolator):
        return format_vertex_line("T", c.S)
    if isinstance(c, certs.HallViolator):
        return format_vertex_line("X", c.X)
    return format_vertex_line("DS", c.D, c.S)


def _certificate_from_line(kind: str, groups, k: int) -> certs.Certificate:
    if kind == "S":
        return certs.EvenViolator(groups[0]) if k % 2 == 0 else certs.OddViolator(groups[0], k)
    if kind == "T":
        return certs.TutteViolator(groups[0])
    if kind == "X":
        return certs.HallViolator(groups[0])
    return certs.TutteBarrier(groups[0], groups[1], k)


def _solve_output(G: Multigraph, k: int, bound: int, with_weights: bool) -> tuple[str, int]:
    report = solve(G, k, SolveOptions(cert_bound=bound))
    if report.feasible:
        weights = report.weights.weights if with_weights else None
        return format_solution(G.n, k, True, weights), EXIT_OK
    lines = [certificate_line(report.certificate)] if report.certificate else []
    if report.reason:
        print(f"kmatch: {report.reason}", file=sys.stderr)
    return format_solution(G.n, k, False, cert_lines=lines), EXIT_NO


def cmd_decide(args) -> tuple[str, int]:
    return _solve_output(_load_graph(args.graph), args.k, args.cert_bound, False)


def cmd_construct(args) -> tuple[str, int]:
    return _solve_output(_load_graph(args.graph), args.k, args.cert_bound, True)


def cmd_certify(args) -> tuple[str, int]:
    G = _load_graph(args.graph)
    if G.n > args.cert_bound:
        raise UsageError(f"certificate search needs n <= {args.cert_bound}, graph has {G.n} vertices")
    cert = certs.find_violator(G, args.k, args.cert_bound)
    if cert is None:
        return format_solution(G.n, args.k, True), EXIT_OK
    return format_solution(G.n, args.k, False, cert_lines=[certificate_line(cert)]), EXIT_NO


def cmd_verify(args) -> tuple[str, int]:
    G = _load_graph(args.graph)
    sol = parse_solution(_read(args.solution))
    problems = []
    if sol.n != G.n or sol.k != args.k:
        problems.append(f"solution is for n={sol.n}, k={sol.k}; expected n={G.n}, k={args.k}")
    elif sol.feasible:
        if any(j >= G.m for j in sol.weights) or any(w > args.k for w in sol.weights.values()):
            problems.append("weight refers to a missing record or exceeds k")
        else:
            f = WeightFunction(G, args.k, tuple(sol.weights.get(j, 0) for j in range(G.m)))
            if not verify_perfect(G, f):
                problems.append("some vertex load differs from k")
    elif not sol.certificates:
        problems.append("infeasible claim without a certificate")
    else:
        for kind, groups in sol.certificates:
            cert = _certificate_from_line(kind, groups, args.k)
            try:
                ok = certs.verify_certificate(G, cert)
            except ValueError as exc:
                ok = False
                problems.append(str(exc))
            if not ok:
                problems.append(f"certificate {certificate_line(cert)!r} is not a violation")
    for p in problems:
        print(f"kmatch: {p}", file=sys.stderr)
    return ("v kmatch rejected\n", EXIT_NO) if problems else ("v kmatch verified\n", EXIT_OK)


def cmd_oracle(args) -> tuple[str, int]:
    G = _load_graph(args.graph)
    res = oracle_solve(G, args.k, count=args.count, budget=args.budget)
    weights = res.witness.weights if res.witness else None
    out = format_solution(G.n, args.k, res.exists, weights)
    if args.count:
        out += f"count {res.count}\n"
    return out, EXIT_OK if res.exists else EXIT_NO


def cmd_check_regular(args) -> tuple[str, int]:
    G = _load_graph(args.graph)
    rep = check_regular_corollary(G, args.k, strict=args.strict_lambda)

    def show(x) -> str:
        return "-" if x is None else str(x)

    line = (
        f"r {show(rep.r)} lambda {show(rep.lam)} threshold {show(rep.threshold)} "
        f"hypothesis {'met' if rep.hypothesis_met else 'unmet'} "
        f"decision {'feasible' if rep.feasible else 'infeasible'} "
        f"{'violation' if rep.violation else 'consistent'}\n"
    )
    return line, EXIT_NO if rep.violation else EXIT_OK


def cmd_gen(args) -> tuple[str, int]:
    G = generate(args.name, args.params, args.seed)
    label = " ".join([args.name, *args.params] + ([f"seed={args.seed}"] if args.seed is not None else []))
    return format_graph(G, comments=(label,)), EXIT_OK


def cmd_dump_reduction(args) -> tuple[str, int]:
    G = _load_graph(args.graph)
    if args.kind == "multiplied":
        H = multiply_edges(G, args.k).graph
    elif args.kind == "split":
        H = split_bipartite(G).graph
    else:
        H = factor_gadget(multiply_edges(G, args.k).graph, args.k).gadget
    return format_graph(H, comments=(f"{args.kind} reduction, k={args.k}",)), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kmatch", description="Perfect k-matchings of multigraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_k(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument("-k", type=int, required=True, help="target load at every vertex")
        p.add_argument("graph", help="graph file, or - for stdin")
        return p

    def with_bound(p: argparse.ArgumentParser) -> None:
        p.add_argument("--cert-bound", type=int, default=None,
                       help="largest n for exhaustive certificate search (env KMATCH_CERT_BOUND)")

    for name, fn in (("decide", cmd_decide), ("construct", cmd_construct), ("certify", cmd_certify)):
        p = with_k(sub.add_parser(name))
        with_bound(p)
        p.set_defaults(func=fn)

    p = with_k(sub.add_parser("verify"))
    p.add_argument("solution", help="solution file with weights or certificates")
    p.set_defaults(func=cmd_verify)

    p = with_k(sub.add_parser("oracle"))
    p.add_argument("--count", action="store_true", help="count all perfect weight functions")
    p.add_argument("--budget", type=int, default=None,
                   help="backtracking node budget (env KMATCH_WORK_BUDGET)")
    p.set_defaults(func=cmd_oracle)

    p = with_k(sub.add_parser("check-regular"))
    p.add_argument("--strict-lambda", action="store_true",
                   help="require edge connectivity equal to the threshold")
    p.set_defaults(func=cmd_check_regular)

    p = sub.add_parser("gen")
    p.add_argument("name")
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_gen)

    p = with_k(sub.add_parser("dump-reduction"))
    p.add_argument("--kind", choices=("multiplied", "split", "gadget"), default="gadget")
    p.set_defaults(func=cmd_dump_reduction)
    return parser


def run(argv: Sequence[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if getattr(args, "k", 1) < 1:
            raise UsageError("-k must be a positive integer")
        if hasattr(args, "cert_bound") and args.cert_bound is None:
            args.cert_bound = _env_int("KMATCH_CERT_BOUND", certs.DEFAULT_CERT_BOUND)
        if hasattr(args, "budget") and args.budget is None:
            args.budget = _env_int("KMATCH_WORK_BUDGET", DEFAULT_WORK_BUDGET)
        out, code = args.func(args)
    except BudgetExceeded as exc:
        print(f"kmatch: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, FormatError, GraphError, ReductionError, OSError, ValueError) as exc:
        print(f"kmatch: {exc}", file=sys.stderr)
        return EXIT_USAGE
    stdout.write(out)
    stdout.flush()
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
