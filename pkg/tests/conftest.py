import random

import pytest

from dominator.graph import Graph, generate


def random_graph(seed: int, n_max: int = 10, n_min: int = 2) -> Graph:
    """Seeded Erdos-Renyi graph with random density."""
    rng = random.Random(seed)
    n = rng.randint(n_min, n_max)
    p = rng.uniform(0.15, 0.85)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph.from_edges(n, edges)


def naive_gamma(g: Graph, a: int, b: int):
    """Brute force over all 2^n subsets; the independent oracle for the
    branch-and-bound solver. Returns (size, witness) or None."""
    masks = g.neighbor_masks()
    best = None
    for s in range(1 << g.n):
        ok = True
        for v in range(g.n):
            need = a if (s >> v) & 1 else b
            if bin(masks[v] & s).count("1") < need:
                ok = False
                break
        if ok:
            size = bin(s).count("1")
            if best is None or size < best[0]:
                best = (size,
                        frozenset(v for v in range(g.n) if (s >> v) & 1))
    return best


def naive_independence(g: Graph) -> int:
    masks = g.neighbor_masks()
    best = 0
    for s in range(1 << g.n):
        if all(not (masks[v] & s) for v in range(g.n) if (s >> v) & 1):
            best = max(best, bin(s).count("1"))
    return best


def naive_is_ab(g: Graph, S, a: int, b: int) -> bool:
    """Definition applied literally, without bitmasks."""
    S = set(S)
    for v in range(g.n):
        inside = sum(1 for u in g.neighbors(v) if u in S)
        if v in S and inside < a:
            return False
        if v not in S and inside < b:
            return False
    return True


@pytest.fixture(scope="session")
def heawood():
    return generate("heawood")


@pytest.fixture(scope="session")
def petersen():
    return generate("petersen")


@pytest.fixture(scope="session")
def c4():
    return generate("cycle", n=4)


@pytest.fixture(scope="session")
def k4():
    return generate("complete", n=4)


@pytest.fixture(scope="session")
def star3():
    return generate("complete_bipartite", s=1, t=3)
