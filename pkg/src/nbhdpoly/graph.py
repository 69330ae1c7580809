"""Simple undirected graphs on vertices ``0..n-1`` plus the test-family generators.

Vertex sets are passed around as ``frozenset[int]``; anything user-facing
(edge lists, traces, rendered records) is emitted in ascending order.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterable, TextIO

VertexSet = frozenset


class GraphError(ValueError):
    """Invalid graph construction or violated vertex-set precondition."""


class ParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class Graph:
    """Immutable simple graph with adjacency stored as frozensets."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Iterable[Iterable[int]]):
        adj = tuple(frozenset(a) for a in adj)
        if n < 0 or len(adj) != n:
            raise GraphError(f"adjacency has {len(adj)} rows for n={n}")
        for v, nbrs in enumerate(adj):
            for u in nbrs:
                if not 0 <= u < n:
                    raise GraphError(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise GraphError(f"self-loop at {v}")
                if v not in adj[u]:
                    raise GraphError(f"asymmetric adjacency {v}-{u}")
        self.n = n
        self.adj = adj

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, adj)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self.adj[v]))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def edge_restriction(self, keep: Iterable[int]) -> Graph:
        """Same vertex count, keeping only edges with both ends in ``keep``.

        Vertices outside ``keep`` become isolated. Isolated vertices change
        neither the neighborhood complex nor any periphery, which lets tests
        compare a partially built graph against oracles without relabeling.
        """
        keep = frozenset(keep)
        return Graph(
            self.n,
            (self.adj[v] & keep if v in keep else () for v in range(self.n)),
        )

    def to_edge_list(self) -> str:
        lines = [str(self.n)]
        lines.extend(f"{u} {v}" for u, v in self.edges())
        return "\n".join(lines) + "\n"


def _check_vertices(g: Graph, s: Iterable[int]) -> frozenset[int]:
    s = frozenset(s)
    for v in s:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    return s


def parse_edge_list(text: str | TextIO) -> Graph:
    if not isinstance(text, str):
        text = text.read()
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            nums = [int(f) for f in fields]
        except ValueError:
            raise ParseError(lineno, f"non-integer field in {raw!r}") from None
        if n is None:
            if len(nums) != 1 or nums[0] < 0:
                raise ParseError(lineno, f"expected vertex count, got {raw!r}")
            n = nums[0]
            continue
        if len(nums) != 2:
            raise ParseError(lineno, f"expected 'u v', got {raw!r}")
        u, v = nums
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(lineno, f"vertex index out of range [0, {n})")
        if u == v:
            raise ParseError(lineno, f"self-loop at vertex {u}")
        edges.append((u, v))
    if n is None:
        raise ParseError(0, "missing vertex count")
    return Graph.from_edges(n, edges)


def complement(g: Graph) -> Graph:
    everything = frozenset(range(g.n))
    return Graph(g.n, (everything - g.adj[v] - {v} for v in range(g.n)))


def common_neighborhood(g: Graph, w: Iterable[int]) -> frozenset[int]:
    """Intersection of the neighborhoods of ``w``; all vertices when ``w`` is empty."""
    w = _check_vertices(g, w)
    out = frozenset(range(g.n))
    for v in w:
        out &= g.adj[v]
    return out


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    s = sorted(_check_vertices(g, s))
    return all(v in g.adj[u] for u, v in combinations(s, 2))


def periphery(g: Graph, c: Iterable[int]) -> frozenset[int]:
    c = _check_vertices(g, c)
    if not is_clique(g, c):
        raise GraphError(f"{sorted(c)} is not a clique")
    out: set[int] = set()
    for v in c:
        out |= g.adj[v]
    return frozenset(out - c)


def gen_basic(kind: str, n: int) -> Graph:
    if n < 1:
        raise GraphError(f"{kind} needs n >= 1, got {n}")
    if kind == "path":
        return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))
    if kind == "cycle":
        if n < 3:
            raise GraphError(f"cycle needs n >= 3, got {n}")
        return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))
    if kind == "complete":
        return Graph.from_edges(n, combinations(range(n), 2))
    if kind == "star":
        return Graph.from_edges(n, ((0, i) for i in range(1, n)))
    raise GraphError(f"unknown graph kind {kind!r}")


def gen_split(m: int) -> Graph:
    """Split graph S_m: clique ``0..m-1``; vertex ``m+i`` misses exactly clique vertex ``i``."""
    if m < 1:
        raise GraphError(f"split graph needs m >= 1, got {m}")
    edges = list(combinations(range(m), 2))
    edges += [(m + i, j) for i in range(m) for j in range(m) if j != i]
    return Graph.from_edges(2 * m, edges)


def interval_family_intervals(m: int) -> list[tuple[int, int]]:
    """Intervals on the host path ``-m..m``; the first ``2m+1`` share position 0."""
    if m < 1:
        raise GraphError(f"interval family needs m >= 1, got {m}")
    clique = [(-m, i) for i in range(0, m + 1)]
    clique += [(i, m) for i in range(-m + 1, 1)]
    outer = [(-m, i) for i in range(-m, 0)]
    outer += [(i, m) for i in range(1, m + 1)]
    return clique + outer


def gen_interval_family(m: int) -> Graph:
    """Interval graph on ``4m+1`` vertices whose vertices ``0..2m`` form the central clique."""
    ivs = interval_family_intervals(m)
    edges = [
        (a, b)
        for (a, (lo1, hi1)), (b, (lo2, hi2)) in combinations(enumerate(ivs), 2)
        if lo1 <= hi2 and lo2 <= hi1
    ]
    return Graph.from_edges(len(ivs), edges)


def gen_random_chordal(n: int, attach_max: int, seed: int) -> Graph:
    """Random connected chordal graph grown by clique attachment.

    Vertex ``i`` is attached to a random non-empty subset (size uniform in
    ``[1, attach_max]``, capped by the host size) of a maximal clique drawn
    uniformly from the current list of maximal cliques.
    """
    if n < 1:
        raise GraphError(f"random chordal graph needs n >= 1, got {n}")
    if attach_max < 1:
        raise GraphError(f"attach_max must be >= 1, got {attach_max}")
    rng = random.Random(seed)
    cliques: list[tuple[int, ...]] = [(0,)]
    edges: list[tuple[int, int]] = []
    for v in range(1, n):
        idx = rng.randrange(len(cliques))
        host = cliques[idx]
        size = rng.randint(1, min(attach_max, len(host)))
        chosen = tuple(sorted(rng.sample(host, size)))
        edges.extend((u, v) for u in chosen)
        if len(chosen) == len(host):
            cliques.pop(idx)
        cliques.append(chosen + (v,))
    return Graph.from_edges(n, edges)
