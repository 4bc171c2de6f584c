"""Edge weight functions and the perfect k-matching check."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph_core import Multigraph


class HostMismatch(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class WeightFunction:
    """Integer weights ``0..k`` on the records of ``graph``.

    A record's weight is not bounded by its multiplicity: weight w on a
    record stands for w units of matching weight on that endpoint pair.
    """

    graph: Multigraph
    k: int
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"k must be positive, got {self.k}")
        if len(self.weights) != self.graph.m:
            raise HostMismatch(f"{len(self.weights)} weights for {self.graph.m} records")
        for w in self.weights:
            if not 0 <= w <= self.k:
                raise ValueError(f"weight {w} outside [0, {self.k}]")

    @classmethod
    def from_sequence(cls, graph: Multigraph, k: int, weights: Sequence[int]) -> WeightFunction:
        return cls(graph, k, tuple(int(w) for w in weights))

    @property
    def support(self) -> tuple[int, ...]:
        """Records carrying positive weight (the k-matching as a subgraph)."""
        return tuple(j for j, w in enumerate(self.weights) if w)

    @property
    def size(self) -> int:
        return sum(self.weights)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightFunction):
            return NotImplemented
        return self.graph == other.graph and self.k == other.k and self.weights == other.weights

    def __hash__(self) -> int:
        return hash((self.graph, self.k, self.weights))


def loads(G: Multigraph, f: WeightFunction) -> list[int]:
    if f.graph is not G and f.graph != G:
        raise HostMismatch("weight function is hosted on a different graph")
    out = [0] * G.n
    for rec, w in zip(G.records, f.weights):
        out[rec.u] += w
        out[rec.v] += w
    return out


def vertex_load(G: Multigraph, f: WeightFunction, v: int) -> int:
    """Total weight at ``v``; a loop contributes twice its weight."""
    G._check_vertex(v)
    return loads(G, f)[v]


def verify_perfect(G: Multigraph, f: WeightFunction) -> bool:
    load = loads(G, f)
    if any(x != f.k for x in load):
        return False
    # every record, loop or not, adds 2w to the total load
    assert 2 * f.size == f.k * G.n, "size identity failed on a perfect weight function"
    return True
