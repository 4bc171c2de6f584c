"""Multigraphs with loops and parallel edges, and the structural queries
that matching and factor conditions are stated in.

Vertices are dense integers ``0..n-1``. Edges are stored as normalized
records, one per unordered endpoint pair, each carrying a positive
multiplicity. A loop is a record with ``u == v`` and contributes ``2 * mult``
to the degree of its vertex.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

VertexSet = tuple[int, ...]


class GraphError(ValueError):
    """Raised for invalid vertices, multiplicities or degenerate queries."""


@dataclass(frozen=True)
class EdgeRecord:
    u: int
    v: int
    mult: int = 1

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def other(self, x: int) -> int:
        return self.v if x == self.u else self.u


class Multigraph:
    """Immutable multigraph on vertices ``0..n-1``.

    ``edges`` may contain ``(u, v)`` pairs, ``(u, v, mult)`` triples or
    :class:`EdgeRecord` values. Repeated endpoint pairs are merged into a
    single record with summed multiplicity; records keep the order in which
    their endpoint pair first appeared. ``source_index[i]`` gives the record
    that the ``i``-th input edge was merged into.
    """

    __slots__ = ("n", "records", "source_index", "_incident", "_degree", "_loops")

    def __init__(self, n: int, edges: Iterable = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        slot: dict[tuple[int, int], int] = {}
        pairs: list[tuple[int, int]] = []
        mults: list[int] = []
        source: list[int] = []
        for item in edges:
            if isinstance(item, EdgeRecord):
                u, v, m = item.u, item.v, item.mult
            elif len(item) == 2:
                (u, v), m = item, 1
            else:
                u, v, m = item
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            if m < 1:
                raise GraphError(f"multiplicity must be >= 1, got {m}")
            key = (u, v) if u <= v else (v, u)
            idx = slot.get(key)
            if idx is None:
                idx = slot[key] = len(pairs)
                pairs.append(key)
                mults.append(0)
            mults[idx] += m
            source.append(idx)

        self.n = n
        self.records: tuple[EdgeRecord, ...] = tuple(
            EdgeRecord(u, v, m) for (u, v), m in zip(pairs, mults)
        )
        self.source_index: tuple[int, ...] = tuple(source)

        incident: list[list[int]] = [[] for _ in range(n)]
        degree = [0] * n
        loops = [0] * n
        for j, rec in enumerate(self.records):
            incident[rec.u].append(j)
            degree[rec.u] += rec.mult
            if rec.is_loop:
                loops[rec.u] += rec.mult
            else:
                incident[rec.v].append(j)
            degree[rec.v] += rec.mult
        self._incident = tuple(tuple(x) for x in incident)
        self._degree = tuple(degree)
        self._loops = tuple(loops)

    @property
    def m(self) -> int:
        """Number of normalized records."""
        return len(self.records)

    @property
    def total_multiplicity(self) -> int:
        return sum(r.mult for r in self.records)

    def vertices(self) -> range:
        return range(self.n)

    def incident(self, v: int) -> tuple[int, ...]:
        """Record indices incident with ``v`` (a loop appears once)."""
        self._check_vertex(v)
        return self._incident[v]

    def loop_multiplicity(self, v: int) -> int:
        self._check_vertex(v)
        return self._loops[v]

    def has_loops(self) -> bool:
        return any(self._loops)

    def degrees(self) -> tuple[int, ...]:
        return self._degree

    def key(self) -> tuple:
        """Hashable normal form; equal keys mean identical normalized graphs."""
        return (self.n, tuple((r.u, r.v, r.mult) for r in self.records))

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise GraphError(f"vertex {v!r} is not in [0, {self.n})")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        body = ", ".join(
            f"({r.u}, {r.v})" if r.mult == 1 else f"({r.u}, {r.v}, {r.mult})"
            for r in self.records
        )
        return f"Multigraph({self.n}, [{body}])"


def vertex_set(G: Multigraph, vertices: Iterable[int]) -> VertexSet:
    """Sorted, duplicate-free, validated tuple of vertices of ``G``."""
    out = tuple(sorted(set(vertices)))
    for v in out:
        G._check_vertex(v)
    return out


def degree(G: Multigraph, v: int) -> int:
    G._check_vertex(v)
    return G._degree[v]


def edges_between(G: Multigraph, S: Iterable[int], T: Iterable[int]) -> int:
    """Multiplicity-weighted number of edges with one end in S and the other in T.

    S and T may overlap; an edge with both ends in the overlap is counted once,
    and a loop at ``v`` counts only when ``v`` is in both sets.
    """
    S = set(vertex_set(G, S))
    T = set(vertex_set(G, T))
    total = 0
    for rec in G.records:
        if (rec.u in S and rec.v in T) or (rec.v in S and rec.u in T):
            total += rec.mult
    return total


def neighborhood(G: Multigraph, X: Iterable[int]) -> VertexSet:
    """All vertices adjacent to some vertex of X; a loop makes a vertex its own neighbour."""
    out: set[int] = set()
    for x in vertex_set(G, X):
        for j in G._incident[x]:
            out.add(G.records[j].other(x))
    return tuple(sorted(out))


@dataclass(frozen=True)
class InducedSubgraph:
    """Result of :func:`delete_vertices` with maps back into the host graph."""

    graph: Multigraph
    vertices: tuple[int, ...]  # new vertex i is host vertex vertices[i]
    records: tuple[int, ...]  # new record j is host record records[j]


def delete_vertices(G: Multigraph, S: Iterable[int]) -> InducedSubgraph:
    removed = set(vertex_set(G, S))
    kept = tuple(v for v in range(G.n) if v not in removed)
    new_id = {v: i for i, v in enumerate(kept)}
    edges = []
    rec_map = []
    for j, rec in enumerate(G.records):
        if rec.u in removed or rec.v in removed:
            continue
        edges.append((new_id[rec.u], new_id[rec.v], rec.mult))
        rec_map.append(j)
    return InducedSubgraph(Multigraph(len(kept), edges), kept, tuple(rec_map))


@dataclass(frozen=True)
class ComponentSummary:
    """Connected components and the odd-component counts used by the theorems.

    ``i`` counts isolated vertices, i.e. vertices of degree zero.
    ``loop_singletons`` counts single-vertex components that carry a loop:
    they have odd order but are not isolated. ``odd_big`` counts odd
    components of order at least three, so ``c_o = i + loop_singletons + odd_big``.
    """

    components: tuple[VertexSet, ...]
    i: int
    c_o: int
    odd_big: int
    loop_singletons: int = 0
    orders: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "orders", tuple(len(c) for c in self.components))

    @property
    def odd_nontrivial(self) -> int:
        """Odd components that are not isolated vertices."""
        return self.odd_big + self.loop_singletons


def components_avoiding(G: Multigraph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Components of ``G - removed`` in host vertex labels, ordered by smallest vertex."""
    gone = [False] * G.n
    for v in removed:
        gone[v] = True
    seen = list(gone)
    records = G.records
    comps = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            for j in G._incident[x]:
                y = records[j].other(x)
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        comp.sort()
        comps.append(comp)
    return comps


def summarize(G: Multigraph, removed: Iterable[int] = ()) -> ComponentSummary:
    """Component summary of ``G - removed`` without materializing the subgraph."""
    removed = set(removed)
    comps = components_avoiding(G, removed)
    i = loop_singletons = odd_big = c_o = 0
    for comp in comps:
        size = len(comp)
        if size % 2 == 0:
            continue
        c_o += 1
        if size >= 3:
            odd_big += 1
        elif G._loops[comp[0]]:
            loop_singletons += 1
        else:
            i += 1
    return ComponentSummary(tuple(tuple(c) for c in comps), i, c_o, odd_big, loop_singletons)


def component_summary(G: Multigraph) -> ComponentSummary:
    return summarize(G)


def edge_connectivity(G: Multigraph) -> int:
    """Global minimum multiplicity-weighted edge cut (Stoer-Wagner).

    Loops never cross a cut and are ignored. Returns 0 for disconnected graphs.
    """
    n = G.n
    if n < 2:
        raise GraphError("edge connectivity needs at least two vertices")
    w = [[0] * n for _ in range(n)]
    for rec in G.records:
        if not rec.is_loop:
            w[rec.u][rec.v] += rec.mult
            w[rec.v][rec.u] += rec.mult

    active = list(range(n))
    best: int | None = None
    while len(active) > 1:
        # maximum adjacency ordering over the current super-vertices
        weights = {v: 0 for v in active}
        in_a = set()
        prev = last = active[0]
        for _ in range(len(active)):
            nxt = max((v for v in active if v not in in_a), key=lambda v: (weights[v], -v))
            in_a.add(nxt)
            prev, last = last, nxt
            for v in active:
                if v not in in_a:
                    weights[v] += w[nxt][v]
        cut = weights[last]
        if best is None or cut < best:
            best = cut
        # merge last into prev
        for v in active:
            w[prev][v] += w[last][v]
            w[v][prev] = w[prev][v]
        w[prev][prev] = 0
        active.remove(last)
    return best if best is not None else 0


def regularity(G: Multigraph) -> int | None:
    """Common degree if ``G`` is regular, otherwise ``None``."""
    if G.n == 0:
        raise GraphError("regularity of the empty graph is undefined")
    first = G._degree[0]
    return first if all(d == first for d in G._degree) else None


def bipartition(G: Multigraph) -> tuple[VertexSet, VertexSet] | None:
    """A proper 2-colouring ``(U, W)`` or ``None``.

    Each non-trivial component is coloured from its smallest vertex, which
    goes to U. Degree-zero vertices are then handed to the smaller side.
    """
    if G.has_loops():
        return None
    color = [-1] * G.n
    loose = []
    for s in range(G.n):
        if color[s] != -1:
            continue
        if not G._incident[s]:
            loose.append(s)
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for j in G._incident[x]:
                y = G.records[j].other(x)
                if color[y] == -1:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
    sides: list[list[int]] = [[], []]
    for v in range(G.n):
        if color[v] != -1:
            sides[color[v]].append(v)
    for v in loose:
        sides[0 if len(sides[0]) <= len(sides[1]) else 1].append(v)
    return tuple(sorted(sides[0])), tuple(sorted(sides[1]))


def strip_loops(G: Multigraph) -> tuple[Multigraph, tuple[int, ...]]:
    """Loop-free copy of ``G`` with every multiplicity set to 1.

    Returns the simple graph and, for each of its records, the host record index.
    """
    keep = [j for j, r in enumerate(G.records) if not r.is_loop]
    H = Multigraph(G.n, [(G.records[j].u, G.records[j].v) for j in keep])
    return H, tuple(keep)


def is_simple(G: Multigraph) -> bool:
    return all(r.mult == 1 and not r.is_loop for r in G.records)


def union(*graphs: Multigraph) -> Multigraph:
    """Disjoint union, relabelling the i-th graph's vertices by a running offset."""
    edges = []
    offset = 0
    for H in graphs:
        edges.extend((r.u + offset, r.v + offset, r.mult) for r in H.records)
        offset += H.n
    return Multigraph(offset, edges)
