"""Slow, independent reference computations used to check the engine.

Nothing here shares code with the engine beyond ``Graph`` and ``Polynomial``.
Subset enumeration walks integer bitmasks and refuses inputs above a size
limit instead of silently truncating.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

import numpy as np

from nbhdpoly.graph import Graph, common_neighborhood, complement, is_clique, periphery
from nbhdpoly.poly import ONE, ZERO, Polynomial, binomial_power

DEFAULT_LIMIT = 22
PERIPHERY_LIMIT = 20
ATTACH_LIMIT = 20


class OracleLimitError(ValueError):
    """Input exceeds the size an exponential oracle is allowed to enumerate."""


def _require(size: int, limit: int, what: str) -> None:
    if size > limit:
        raise OracleLimitError(f"{what} has size {size}, oracle limit is {limit}")


def _mask(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _size_histogram(selected: np.ndarray, masks: np.ndarray) -> Polynomial:
    sizes = np.bitwise_count(masks[selected])
    counts = np.bincount(sizes.astype(np.int64))
    return Polynomial(int(c) for c in counts)


def brute_neighborhood_poly(g: Graph, limit: int = DEFAULT_LIMIT) -> Polynomial:
    """Count every vertex subset contained in some open neighborhood."""
    _require(g.n, limit, "graph")
    if g.n == 0:
        return ZERO
    masks = np.arange(1 << g.n, dtype=np.uint64)
    inside = np.zeros(masks.shape, dtype=bool)
    for v in range(g.n):
        outside = np.uint64(((1 << g.n) - 1) & ~_mask(g.adj[v]))
        inside |= (masks & outside) == 0
    return _size_histogram(inside, masks)


def brute_domination_poly(g: Graph, limit: int = DEFAULT_LIMIT) -> Polynomial:
    _require(g.n, limit, "graph")
    if g.n == 0:
        return ONE
    masks = np.arange(1 << g.n, dtype=np.uint64)
    dominating = np.ones(masks.shape, dtype=bool)
    for u in range(g.n):
        closed = np.uint64(_mask(g.adj[u]) | (1 << u))
        dominating &= (masks & closed) != 0
    return _size_histogram(dominating, masks)


def check_complement_identity(g: Graph, limit: int = DEFAULT_LIMIT) -> bool:
    lhs = brute_domination_poly(complement(g), limit) + brute_neighborhood_poly(g, limit)
    return lhs == binomial_power(g.n)


def brute_anchor_data(
    g: Graph, c: Iterable[int], limit: int = PERIPHERY_LIMIT
) -> dict[frozenset[int], Polynomial]:
    """Group all periphery subsets of clique ``c`` by their anchor set."""
    c = frozenset(c)
    outer = sorted(periphery(g, c))
    _require(len(outer), limit, "periphery")
    clique = sorted(c)
    bit = {v: i for i, v in enumerate(clique)}
    full = (1 << len(clique)) - 1

    # anchor bitmask over the clique for every periphery subset
    masks = np.arange(1 << len(outer), dtype=np.uint64)
    anchor = np.full(masks.shape, full, dtype=np.uint64)
    for j, w in enumerate(outer):
        local = np.uint64(_mask(bit[u] for u in g.adj[w] if u in bit))
        has_w = (masks >> np.uint64(j)) & np.uint64(1) == 1
        anchor = np.where(has_w, anchor & local, anchor)

    sizes = np.bitwise_count(masks).astype(np.int64)
    out: dict[frozenset[int], Polynomial] = {}
    for a in np.unique(anchor):
        a = int(a)
        if a == 0:
            continue
        counts = np.bincount(sizes[anchor == a])
        key = frozenset(clique[i] for i in range(len(clique)) if a >> i & 1)
        out[key] = Polynomial(int(x) for x in counts)
    return out


def closure_anchor_family(g: Graph, c: Iterable[int]) -> set[frozenset[int]]:
    """Smallest family containing ``c`` closed under intersecting with periphery neighborhoods."""
    c = frozenset(c)
    outer = periphery(g, c)
    family = {c}
    frontier = [c]
    while frontier:
        nxt = []
        for a in frontier:
            for w in outer:
                b = a & g.adj[w]
                if b and b not in family:
                    family.add(b)
                    nxt.append(b)
        frontier = nxt
    return family


def general_attachment(
    g: Graph, n_g: Polynomial, u: Iterable[int], limit: int = ATTACH_LIMIT
) -> Polynomial:
    """Neighborhood polynomial after joining a fresh vertex to ``u`` (inclusion-exclusion)."""
    u = sorted(set(u))
    _require(len(u), limit, "attachment set")
    total = n_g
    x = Polynomial((0, 1))
    for r in range(1, len(u) + 1):
        sign = 1 if r % 2 else -1
        for w in combinations(u, r):
            common = common_neighborhood(g, w)
            if not common:
                total = total + Polynomial.monomial(r)
            total = total + x * binomial_power(len(common)) * sign
    return total


def replay_attachment(g: Graph, order: Iterable[int]) -> Polynomial:
    """Rebuild ``g`` vertex by vertex, updating with :func:`general_attachment`.

    Vertices not yet added stay isolated; they change neither neighborhoods
    nor the polynomial, so the graph keeps its full vertex count throughout.
    """
    if g.n == 0:
        return ZERO
    present: set[int] = set()
    current = g.edge_restriction(())
    poly = ONE
    for v in order:
        nbrs = [w for w in g.adj[v] if w in present]
        poly = general_attachment(current, poly, nbrs)
        present.add(v)
        current = g.edge_restriction(present)
    return poly


def cograph_combine(kind: str, p1: Polynomial, p2: Polynomial, n1: int, n2: int) -> Polynomial:
    if kind == "union":
        return p1 + p2 - ONE
    if kind == "join":
        return binomial_power(n2) * p1 + binomial_power(n1) * p2 - p1 * p2
    raise ValueError(f"unknown cograph operation {kind!r}")


def brute_maximal_cliques(g: Graph, vertices: Iterable[int] | None = None) -> set[frozenset[int]]:
    """Maximal cliques of ``g[vertices]`` by enumerating every vertex subset."""
    verts = sorted(range(g.n) if vertices is None else set(vertices))
    _require(len(verts), DEFAULT_LIMIT, "vertex set")
    cliques = []
    for r in range(1, len(verts) + 1):
        for s in combinations(verts, r):
            if is_clique(g, s):
                cliques.append(frozenset(s))
    return {s for s in cliques if not any(s < t for t in cliques)}


def has_long_induced_cycle(g: Graph) -> bool:
    """True if some induced cycle has length at least four (exhaustive)."""
    _require(g.n, 12, "graph")
    for r in range(4, g.n + 1):
        for s in combinations(range(g.n), r):
            sub = set(s)
            if all(len(g.adj[v] & sub) == 2 for v in s) and _connected(g, sub):
                return True
    return False


def _connected(g: Graph, sub: set[int]) -> bool:
    start = next(iter(sub))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.adj[v] & sub:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == sub

