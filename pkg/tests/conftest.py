import random
from itertools import combinations

import pytest

from nbhdpoly.graph import Graph, gen_basic, gen_interval_family, gen_random_chordal, gen_split
from nbhdpoly.poly import Polynomial


def naive_neighborhood_poly(g: Graph) -> Polynomial:
    """Set-based enumeration, deliberately unlike the bitmask oracle."""
    counts = [0] * (g.n + 1)
    for r in range(g.n + 1):
        for s in combinations(range(g.n), r):
            if any(set(s) <= g.adj[v] for v in range(g.n)):
                counts[r] += 1
    return Polynomial(counts)


def random_chordal_corpus(count: int, max_n: int, max_attach: int, seed: int):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, max_n)
        k = rng.randint(1, max_attach)
        yield gen_random_chordal(n, k, rng.getrandbits(64))


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def named_families(max_n: int = 10):
    for n in range(1, max_n + 1):
        for kind in ("path", "star", "complete"):
            yield gen_basic(kind, n)
    for m in range(1, 6):
        yield gen_split(m)
    for m in range(1, 4):
        yield gen_interval_family(m)


@pytest.fixture(scope="session")
def small_chordal():
    return list(random_chordal_corpus(120, 12, 5, seed=20240601))


ACCEPTANCE: dict[str, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"{ACCEPTANCE[name]} {name}")
