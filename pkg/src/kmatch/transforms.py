"""Graph reductions with the bookkeeping needed to map solutions back.

* :func:`multiply_edges` -- every record's multiplicity times k.
* :func:`split_bipartite` -- the bipartite double: a perfect matching of the
  split graph is a perfect 2-matching of the base graph.
* :func:`factor_gadget` -- vertex gadgets turning k-factor existence into
  perfect matching existence.
* :func:`normalize_two_matching` -- a perfect 2-matching rewritten as a
  spanning union of single edges and odd cycles.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph_core import Multigraph
from .matching import Matching, is_matching, is_perfect
from .weights import WeightFunction, loads


class ReductionError(ValueError):
    pass


class InternalInconsistency(RuntimeError):
    """A recovered object failed re-verification; indicates a bug, not bad input."""


@dataclass(frozen=True)
class MultipliedGraph:
    base: Multigraph
    k: int
    graph: Multigraph  # record j of graph is record j of base, multiplicity scaled


def multiply_edges(G: Multigraph, k: int) -> MultipliedGraph:
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    H = Multigraph(G.n, [(r.u, r.v, r.mult * k) for r in G.records])
    return MultipliedGraph(G, k, H)


@dataclass(frozen=True)
class SplitGraph:
    """Left copy of v is node v, right copy is node n + v.

    ``pairs[j]`` lists the split records for base record j: two for an
    ordinary edge, one for a loop.
    """

    base: Multigraph
    graph: Multigraph
    pairs: tuple[tuple[int, ...], ...]

    @property
    def left(self) -> tuple[int, ...]:
        return tuple(range(self.base.n))

    @property
    def right(self) -> tuple[int, ...]:
        return tuple(range(self.base.n, 2 * self.base.n))


def split_bipartite(G: Multigraph) -> SplitGraph:
    n = G.n
    edges = []
    pairs = []
    for rec in G.records:
        if rec.is_loop:
            pairs.append((len(edges),))
            edges.append((rec.u, n + rec.u))
        else:
            pairs.append((len(edges), len(edges) + 1))
            edges.append((rec.u, n + rec.v))
            edges.append((rec.v, n + rec.u))
    H = Multigraph(2 * n, edges)
    assert H.m == len(edges)
    return SplitGraph(G, H, tuple(pairs))


def two_matching_from_split(S: SplitGraph, M: Matching) -> WeightFunction:
    """Weight of a base record = number of its split edges in M."""
    if not (is_matching(S.graph, M) and is_perfect(S.graph, M)):
        raise ReductionError("matching is not a perfect matching of the split graph")
    weights = tuple(sum(1 for j in pair if j in M) for pair in S.pairs)
    f = WeightFunction(S.base, 2, weights)
    if any(x != 2 for x in loads(S.base, f)):
        raise InternalInconsistency("split matching did not give load 2 everywhere")
    return f


@dataclass(frozen=True)
class TwoFactorDecomposition:
    """Spanning {K2, odd cycle} factor; cycles are record sequences."""

    k2: tuple[int, ...]
    cycles: tuple[tuple[int, ...], ...]


def normalize_two_matching(G: Multigraph, f2: WeightFunction) -> TwoFactorDecomposition:
    if f2.k != 2 or any(x != 2 for x in loads(G, f2)):
        raise ReductionError("input is not a perfect 2-matching")
    for rec, w in zip(G.records, f2.weights):
        if rec.is_loop and w:
            raise ReductionError("loop with positive weight cannot be normalized")

    k2 = [j for j, w in enumerate(f2.weights) if w == 2]
    ones: list[list[int]] = [[] for _ in range(G.n)]
    for j, w in enumerate(f2.weights):
        if w == 1:
            rec = G.records[j]
            ones[rec.u].append(j)
            ones[rec.v].append(j)

    cycles = []
    done = [False] * G.n
    for start in range(G.n):
        if done[start] or not ones[start]:
            continue
        # load 2 with no weight-2 edge means exactly two weight-1 edges here
        seq = []
        v, j = start, min(ones[start])
        while True:
            done[v] = True
            seq.append(j)
            v = G.records[j].other(v)
            if v == start:
                break
            a, b = ones[v]
            j = b if a == j else a
        if len(seq) % 2:
            cycles.append(tuple(seq))
        else:
            k2.extend(seq[0::2])
    return TwoFactorDecomposition(tuple(sorted(k2)), tuple(cycles))


def check_decomposition(G: Multigraph, dec: TwoFactorDecomposition) -> bool:
    """Each vertex lies on exactly one K2 or one odd cycle of length >= 3."""
    hits = [0] * G.n
    for j in dec.k2:
        rec = G.records[j]
        if rec.is_loop:
            return False
        hits[rec.u] += 1
        hits[rec.v] += 1
    for cyc in dec.cycles:
        if len(cyc) < 3 or len(cyc) % 2 == 0:
            return False
        verts: set[int] = set()
        deg: dict[int, int] = {}
        for j in cyc:
            rec = G.records[j]
            if rec.is_loop:
                return False
            for x in (rec.u, rec.v):
                deg[x] = deg.get(x, 0) + 1
                verts.add(x)
        if len(verts) != len(cyc) or any(d != 2 for d in deg.values()):
            return False
        for x in verts:
            hits[x] += 1
    return all(h == 1 for h in hits)


@dataclass(frozen=True)
class GadgetMap:
    """Perfect-matching gadget for k-factors of ``base``.

    Gadget nodes are laid out vertex by vertex: first the external slots of
    v (one per edge-endpoint copy, a loop copy taking two), then its
    ``deg(v) - k`` internal nodes. ``copy_edges[j][c]`` is the gadget record
    for copy c of base record j.
    """

    base: Multigraph
    k: int
    gadget: Multigraph
    external: tuple[tuple[int, ...], ...]
    internal: tuple[tuple[int, ...], ...]
    copy_edges: tuple[tuple[int, ...], ...]


def factor_gadget(G: Multigraph, k: int) -> GadgetMap:
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    deg = G.degrees()
    short = [v for v in range(G.n) if deg[v] < k]
    if short:
        raise ReductionError(f"vertex {short[0]} has degree {deg[short[0]]} < {k}; no {k}-factor")

    # slots[v] lists (record, copy, end) in incident-record order
    next_node = 0
    external: list[tuple[int, ...]] = []
    internal: list[tuple[int, ...]] = []
    slot_of: dict[tuple[int, int, int], int] = {}
    for v in range(G.n):
        ext = []
        for j in G.incident(v):
            rec = G.records[j]
            ends = (0, 1) if rec.is_loop else ((0,) if rec.u == v else (1,))
            for c in range(rec.mult):
                for end in ends:
                    slot_of[(j, c, end)] = next_node
                    ext.append(next_node)
                    next_node += 1
        external.append(tuple(ext))
        internal.append(tuple(range(next_node, next_node + deg[v] - k)))
        next_node += deg[v] - k

    edges = []
    copy_edges = []
    for j, rec in enumerate(G.records):
        ids = []
        for c in range(rec.mult):
            ids.append(len(edges))
            edges.append((slot_of[(j, c, 0)], slot_of[(j, c, 1)]))
        copy_edges.append(tuple(ids))
    for v in range(G.n):
        for a in internal[v]:
            for s in external[v]:
                edges.append((a, s))
    gadget = Multigraph(next_node, edges)
    assert gadget.m == len(edges)
    return GadgetMap(G, k, gadget, tuple(external), tuple(internal), tuple(copy_edges))


@dataclass(frozen=True)
class FactorSelection:
    """Number of selected copies per base record."""

    graph: Multigraph
    k: int
    counts: tuple[int, ...]

    def degrees(self) -> list[int]:
        out = [0] * self.graph.n
        for rec, c in zip(self.graph.records, self.counts):
            out[rec.u] += c
            out[rec.v] += c
        return out

    def is_valid(self) -> bool:
        return all(0 <= c <= r.mult for r, c in zip(self.graph.records, self.counts)) and all(
            d == self.k for d in self.degrees()
        )


def recover_factor(GM: GadgetMap, M: Matching) -> FactorSelection:
    if not (is_matching(GM.gadget, M) and is_perfect(GM.gadget, M)):
        raise ReductionError("matching is not a perfect matching of the gadget")
    counts = tuple(sum(1 for e in ids if e in M) for ids in GM.copy_edges)
    sel = FactorSelection(GM.base, GM.k, counts)
    if not sel.is_valid():
        raise InternalInconsistency("gadget matching did not recover a k-factor")
    return sel
