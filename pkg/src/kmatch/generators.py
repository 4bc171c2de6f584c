"""Named graph families and seeded random generators."""

from __future__ import annotations

import random

from .graph_core import GraphError, Multigraph

RANDOM_REGULAR_RETRIES = 1000


def cycle(n: int) -> Multigraph:
    if n < 3:
        raise GraphError("a simple cycle needs at least 3 vertices")
    return Multigraph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Multigraph:
    return Multigraph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Multigraph:
    return Multigraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Multigraph:
    """Left part 0..a-1, right part a..a+b-1."""
    return Multigraph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(n: int) -> Multigraph:
    """K_{1,n} with centre 0."""
    return complete_bipartite(1, n)


def petersen() -> Multigraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Multigraph(10, outer + spokes + inner)


def gnp(n: int, p: float, seed: int) -> Multigraph:
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    return Multigraph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def random_regular(n: int, r: int, seed: int) -> Multigraph:
    """Simple r-regular graph from the configuration model with rejection."""
    if r < 0 or (n > 0 and r >= n):
        raise GraphError(f"no simple {r}-regular graph on {n} vertices")
    if (n * r) % 2:
        raise GraphError(f"n*r must be even, got n={n}, r={r}")
    rng = random.Random(seed)
    points = [v for v in range(n) for _ in range(r)]
    for _ in range(RANDOM_REGULAR_RETRIES):
        rng.shuffle(points)
        edges = set()
        for a, b in zip(points[0::2], points[1::2]):
            if a == b or (min(a, b), max(a, b)) in edges:
                break
            edges.add((min(a, b), max(a, b)))
        else:
            return Multigraph(n, sorted(edges))
    raise GraphError(f"no simple {r}-regular graph on {n} vertices after {RANDOM_REGULAR_RETRIES} tries")


def random_multigraph(n: int, m: int, maxmult: int, seed: int) -> Multigraph:
    """m random edge draws (loops allowed), each with multiplicity 1..maxmult.

    Draws on an already used endpoint pair add to its multiplicity, capped
    at ``maxmult``.
    """
    if n < 1 and m > 0:
        raise GraphError("cannot place edges on an empty vertex set")
    if maxmult < 1:
        raise GraphError("maxmult must be positive")
    rng = random.Random(seed)
    mult: dict[tuple[int, int], int] = {}
    for _ in range(m):
        u, v = rng.randrange(n), rng.randrange(n)
        key = (min(u, v), max(u, v))
        mult[key] = min(maxmult, mult.get(key, 0) + rng.randint(1, maxmult))
    return Multigraph(n, [(u, v, c) for (u, v), c in mult.items()])


def random_bipartite(a: int, b: int, p: float, seed: int) -> Multigraph:
    rng = random.Random(seed)
    return Multigraph(
        a + b, [(i, a + j) for i in range(a) for j in range(b) if rng.random() < p]
    )


GENERATORS = {
    "cycle": (cycle, (int,), False),
    "path": (path, (int,), False),
    "complete": (complete, (int,), False),
    "complete-bipartite": (complete_bipartite, (int, int), False),
    "star": (star, (int,), False),
    "petersen": (petersen, (), False),
    "gnp": (gnp, (int, float), True),
    "random-regular": (random_regular, (int, int), True),
    "random-multigraph": (random_multigraph, (int, int, int), True),
}


def generate(name: str, params: list[str], seed: int | None = None) -> Multigraph:
    if name not in GENERATORS:
        raise GraphError(f"unknown generator {name!r}; choose from {', '.join(GENERATORS)}")
    fn, types, seeded = GENERATORS[name]
    if len(params) != len(types):
        raise GraphError(f"{name} takes {len(types)} parameter(s), got {len(params)}")
    try:
        args = [t(p) for t, p in zip(types, params)]
    except ValueError:
        raise GraphError(f"bad parameters for {name}: {params}") from None
    if seeded:
        if seed is None:
            raise GraphError(f"{name} is randomized and needs --seed")
        return fn(*args, seed)
    return fn(*args)
