"""Line-oriented text formats for graphs, weight functions and certificates.

Graph files::

    c comment
    p kmatch <n> <m>
    e <u> <v> [mult]

Solution files::

    s kmatch <n> <k> <feasible|infeasible>
    w <record> <weight>
    cert S <v> ...

All vertex and record indices are 1-based on disk and 0-based in memory.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph_core import GraphError, Multigraph


class FormatError(ValueError):
    pass


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def parse_graph(text: str) -> Multigraph:
    n = declared = None
    edges: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        tag = tokens[0]
        if tag == "p":
            if n is not None:
                raise FormatError(f"line {lineno}: duplicate header")
            if len(tokens) != 4 or tokens[1] != "kmatch":
                raise FormatError(f"line {lineno}: header must be 'p kmatch <n> <m>'")
            n, declared = _ints(tokens[2:], lineno)
            if n < 0 or declared < 0:
                raise FormatError(f"line {lineno}: negative size in header")
        elif tag == "e":
            if n is None:
                raise FormatError(f"line {lineno}: edge before header")
            if len(tokens) not in (3, 4):
                raise FormatError(f"line {lineno}: edge must be 'e <u> <v> [mult]'")
            vals = _ints(tokens[1:], lineno)
            u, v = vals[0] - 1, vals[1] - 1
            mult = vals[2] if len(vals) == 3 else 1
            if not (0 <= u < n and 0 <= v < n):
                raise FormatError(f"line {lineno}: vertex out of range 1..{n}")
            if mult < 1:
                raise FormatError(f"line {lineno}: multiplicity must be positive")
            edges.append((u, v, mult))
        else:
            raise FormatError(f"line {lineno}: unknown line type {tag!r}")
    if n is None:
        raise FormatError("missing 'p kmatch' header")
    if declared != len(edges):
        raise FormatError(f"header declares {declared} edges, found {len(edges)}")
    try:
        return Multigraph(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def format_graph(G: Multigraph, comments: tuple[str, ...] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p kmatch {G.n} {G.m}")
    for r in G.records:
        if r.mult == 1:
            lines.append(f"e {r.u + 1} {r.v + 1}")
        else:
            lines.append(f"e {r.u + 1} {r.v + 1} {r.mult}")
    return "\n".join(lines) + "\n"


@dataclass
class SolutionFile:
    """Parsed contents of a solution file."""

    n: int
    k: int
    feasible: bool
    weights: dict[int, int] = field(default_factory=dict)
    # (kind, sets) where kind is one of S, T, X, DS and sets are 0-based vertex tuples
    certificates: list[tuple[str, tuple[tuple[int, ...], ...]]] = field(default_factory=list)


def format_solution(n: int, k: int, feasible: bool, weights=None, cert_lines=()) -> str:
    lines = [f"s kmatch {n} {k} {'feasible' if feasible else 'infeasible'}"]
    if weights is not None:
        lines.extend(f"w {j + 1} {w}" for j, w in enumerate(weights) if w)
    lines.extend(cert_lines)
    return "\n".join(lines) + "\n"


def format_vertex_line(tag: str, *groups: tuple[int, ...]) -> str:
    """``cert`` line; ``groups`` pairs with the letters in ``tag`` (``S``, ``X``, ``T`` or ``DS``)."""
    parts = ["cert"]
    for letter, group in zip(tag, groups):
        parts.append(letter)
        parts.extend(str(v + 1) for v in group)
    return " ".join(parts)


def parse_solution(text: str) -> SolutionFile:
    sol: SolutionFile | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        tag = tokens[0]
        if tag == "s":
            if sol is not None:
                raise FormatError(f"line {lineno}: duplicate solution header")
            if len(tokens) != 5 or tokens[1] != "kmatch" or tokens[4] not in ("feasible", "infeasible"):
                raise FormatError(f"line {lineno}: header must be 's kmatch <n> <k> <feasible|infeasible>'")
            n, k = _ints(tokens[2:4], lineno)
            sol = SolutionFile(n, k, tokens[4] == "feasible")
            continue
        if sol is None:
            raise FormatError(f"line {lineno}: content before 's kmatch' header")
        if tag == "w":
            if len(tokens) != 3:
                raise FormatError(f"line {lineno}: weight must be 'w <record> <weight>'")
            j, w = _ints(tokens[1:], lineno)
            if j < 1 or w < 0:
                raise FormatError(f"line {lineno}: bad record index or weight")
            if j - 1 in sol.weights:
                raise FormatError(f"line {lineno}: duplicate weight for record {j}")
            sol.weights[j - 1] = w
        elif tag == "cert":
            sol.certificates.append(_parse_cert(tokens[1:], lineno))
        elif tag == "count":
            continue
        else:
            raise FormatError(f"line {lineno}: unknown line type {tag!r}")
    if sol is None:
        raise FormatError("missing 's kmatch' header")
    return sol


def _parse_cert(tokens: list[str], lineno: int) -> tuple[str, tuple[tuple[int, ...], ...]]:
    if not tokens or tokens[0] not in ("S", "T", "X", "D"):
        raise FormatError(f"line {lineno}: certificate must start with S, T, X or D")
    kind = tokens[0]
    if kind == "D":
        if "S" not in tokens:
            raise FormatError(f"line {lineno}: barrier certificate needs 'D ... S ...'")
        cut = tokens.index("S")
        groups = (_ints(tokens[1:cut], lineno), _ints(tokens[cut + 1:], lineno))
        kind = "DS"
    else:
        groups = (_ints(tokens[1:], lineno),)
    return kind, tuple(tuple(v - 1 for v in g) for g in groups)
