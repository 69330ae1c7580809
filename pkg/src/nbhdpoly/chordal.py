"""Chordality recognition via lexicographic breadth-first search."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from nbhdpoly.graph import Graph, GraphError


@dataclass(frozen=True)
class NotChordal:
    """Certificate: ``order`` fails the elimination check at ``vertex``."""

    order: tuple[int, ...]
    vertex: int

    def __bool__(self):
        return False


class _Cell:
    __slots__ = ("members", "prev", "next")

    def __init__(self):
        self.members: dict[int, None] = {}
        self.prev: _Cell | None = None
        self.next: _Cell | None = None


def lex_bfs(
    g: Graph, tie_seed: int | None = None, vertices: Iterable[int] | None = None
) -> tuple[int, ...]:
    """Return the reverse of a Lex-BFS visit order of ``g[vertices]``.

    The result is a perfect elimination order whenever the (connected)
    induced subgraph is chordal. Ties inside the leading partition cell go
    to the smallest index, or to a seeded pseudo-random member.
    """
    verts = sorted(range(g.n) if vertices is None else set(vertices))
    if not verts:
        return ()
    rng = random.Random(tie_seed) if tie_seed is not None else None

    head = _Cell()
    head.members = dict.fromkeys(verts)
    cell_of = dict.fromkeys(verts, head)
    visit: list[int] = []

    while head is not None:
        if rng is None:
            pivot = min(head.members)
        else:
            pivot = rng.choice(sorted(head.members))
        del head.members[pivot]
        del cell_of[pivot]
        visit.append(pivot)

        touched = [head]
        split: dict[int, _Cell] = {}
        for w in sorted(g.adj[pivot]):
            cell = cell_of.get(w)
            if cell is None:
                continue
            front = split.get(id(cell))
            if front is None:
                front = _Cell()
                front.prev, front.next = cell.prev, cell
                if cell.prev is not None:
                    cell.prev.next = front
                else:
                    head = front
                cell.prev = front
                split[id(cell)] = front
                touched.append(cell)
            del cell.members[w]
            front.members[w] = None
            cell_of[w] = front

        for cell in touched:
            if cell.members:
                continue
            if cell.prev is not None:
                cell.prev.next = cell.next
            elif head is cell:
                head = cell.next
            if cell.next is not None:
                cell.next.prev = cell.prev
            cell.prev = cell.next = None
    visit.reverse()
    return tuple(visit)


def peo_violation(g: Graph, order: Sequence[int]) -> int | None:
    """First vertex whose later neighbors are not a clique, or ``None``.

    Uses the parent check: with ``p`` the earliest later neighbor of ``v``,
    the remaining later neighbors of ``v`` must all be adjacent to ``p``.
    """
    _check_permutation(g, order)
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in g.adj[v] if pos[u] > pos[v]]
        if len(later) < 2:
            continue
        parent = min(later, key=pos.__getitem__)
        nbrs = g.adj[parent]
        for u in later:
            if u != parent and u not in nbrs:
                return v
    return None


def is_peo(g: Graph, order: Sequence[int]) -> bool:
    return peo_violation(g, order) is None


def _check_permutation(g: Graph, order: Sequence[int]) -> None:
    if len(order) != g.n or sorted(order) != list(range(g.n)):
        raise GraphError(f"order is not a permutation of 0..{g.n - 1}")


def connected_components(g: Graph) -> list[frozenset[int]]:
    seen = [False] * g.n
    comps: list[frozenset[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], [s]
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
                    comp.append(w)
        comps.append(frozenset(comp))
    return comps


def component_orders(
    g: Graph, tie_seed: int | None = None
) -> list[tuple[int, ...]] | NotChordal:
    """Per-component elimination orders, or a certificate of non-chordality."""
    orders = [lex_bfs(g, tie_seed, comp) for comp in connected_components(g)]
    full = tuple(v for o in orders for v in o)
    bad = peo_violation(g, full)
    if bad is not None:
        return NotChordal(full, bad)
    return orders


def find_peo(g: Graph, tie_seed: int | None = None) -> tuple[int, ...] | NotChordal:
    orders = component_orders(g, tie_seed)
    if isinstance(orders, NotChordal):
        return orders
    return tuple(v for o in orders for v in o)
