"""Neighborhood polynomial of chordal graphs by incremental clique attachment.

Vertices are added in reverse elimination order; each new vertex is
attached to the clique formed by its already-present neighbors. For every
maximal clique of the partial graph we keep its anchor family: the
distinct non-empty common neighborhoods inside the clique of subsets of
its periphery, each mapped to the generating polynomial of those
periphery subsets. That information is enough both to update the
neighborhood polynomial and to carry the records forward one step.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Mapping, TextIO

from nbhdpoly.chordal import NotChordal, component_orders
from nbhdpoly.graph import Graph, GraphError
from nbhdpoly.poly import ONE, ZERO, Polynomial, binomial_power

logger = logging.getLogger(__name__)

AnchorData = dict[frozenset[int], Polynomial]


class NotChordalError(Exception):
    """Raised by :func:`compute` when the input admits no elimination order."""

    def __init__(self, certificate: NotChordal):
        super().__init__(
            f"graph is not chordal (elimination check fails at vertex {certificate.vertex})"
        )
        self.certificate = certificate


@dataclass
class CliqueRecord:
    clique: frozenset[int]
    anchors: AnchorData

    @property
    def width(self) -> int:
        return len(self.anchors)

    def sorted_anchors(self, rank: Mapping[int, int] | None = None):
        """Anchor items ordered by size, then lexicographically by ``rank``."""
        key = rank.__getitem__ if rank is not None else None
        return sorted(
            self.anchors.items(),
            key=lambda kv: (len(kv[0]), sorted(kv[0], key=key)),
        )


@dataclass(frozen=True)
class StepStat:
    vertex: int
    clique_size: int
    host_size: int
    touched: int
    records: int
    max_family: int


@dataclass
class ComputationResult:
    poly: Polynomial
    anchor_width: int
    peak_width: int
    steps: list[StepStat] = field(default_factory=list)
    records: list[CliqueRecord] = field(default_factory=list)


def _add_into(acc: AnchorData, key: frozenset[int], p: Polynomial) -> None:
    prev = acc.get(key)
    acc[key] = p if prev is None else prev + p


def restrict_record(rec: CliqueRecord, c: frozenset[int]) -> AnchorData:
    """Anchor data of the sub-clique ``c`` derived from its host record."""
    if not c or not c <= rec.clique:
        raise GraphError(f"{sorted(c)} is not a non-empty subset of the record clique")
    acc: AnchorData = {}
    for a, p in rec.anchors.items():
        b = a & c
        if b:
            _add_into(acc, b, p)
    factor = binomial_power(len(rec.clique) - len(c))
    if factor != ONE:
        acc = {a: p * factor for a, p in acc.items()}
    return acc


def local_neighborhood_gf(restricted: Mapping[frozenset[int], Polynomial], clique_size: int) -> Polynomial:
    """Generating function of all vertex sets with a common neighbor in the clique."""
    total = ZERO
    full = binomial_power(clique_size)
    for a, p in restricted.items():
        k = len(a)
        extend = full - binomial_power(clique_size - k).shift(k)
        total = total + p * extend
    return total


def attachment_delta(
    restricted: Mapping[frozenset[int], Polynomial], clique_size: int, c_was_maximal: bool
) -> Polynomial:
    delta = local_neighborhood_gf(restricted, clique_size).shift(1)
    if c_was_maximal:
        delta = delta + Polynomial.monomial(clique_size)
    return delta


def spawn_record(restricted: Mapping[frozenset[int], Polynomial], c: frozenset[int], v: int) -> CliqueRecord:
    """Record for ``c + v``; the empty periphery set moves from anchor ``c`` to ``c + v``."""
    grown = c | {v}
    anchors: AnchorData = {}
    for a, p in restricted.items():
        if a == c:
            p = p - ONE
            if not p:
                continue
        anchors[a] = p
    anchors[grown] = ONE
    return CliqueRecord(grown, anchors)


def refresh_record(rec: CliqueRecord, c: frozenset[int], v: int) -> CliqueRecord:
    """Update a maximal clique meeting ``c`` after ``v`` joins its periphery.

    Every old periphery set ``M`` survives with its anchor, and ``M + v``
    gets anchor ``A & (rec.clique & c)`` when that is non-empty.
    """
    shared = rec.clique & c
    if not shared:
        raise GraphError("record clique does not meet the attachment clique")
    if shared == rec.clique:
        raise GraphError("attachment clique contains the record clique")
    gained: AnchorData = {}
    for a, p in rec.anchors.items():
        b = a & shared
        if b:
            _add_into(gained, b, p)
    anchors = dict(rec.anchors)
    for b, p in gained.items():
        _add_into(anchors, b, p.shift(1))
    return CliqueRecord(rec.clique, anchors)


@dataclass
class EngineState:
    """Mutable state of one run; confined to a single :func:`compute` call."""

    records: list[CliqueRecord] = field(default_factory=list)
    poly: Polynomial = ZERO
    attach_order: dict[int, int] = field(default_factory=dict)

    @property
    def vertices(self) -> list[int]:
        return list(self.attach_order)


StepHook = Callable[[EngineState, int], None]


def _format_trace(stat: StepStat) -> str:
    return (
        f"step vertex={stat.vertex} clique={stat.clique_size} host={stat.host_size} "
        f"touched={stat.touched} records={stat.records} max_family={stat.max_family}"
    )


def _attach(state: EngineState, v: int, c: frozenset[int]) -> StepStat:
    host = None
    hits: list[int] = []
    for i, rec in enumerate(state.records):
        if rec.clique.isdisjoint(c):
            continue
        hits.append(i)
        if host is None and c <= rec.clique:
            host = i
    if host is None:
        raise GraphError(f"no maximal clique contains the neighbors of vertex {v}")

    host_rec = state.records[host]
    restricted = restrict_record(host_rec, c)
    was_maximal = host_rec.clique == c
    state.poly = state.poly + attachment_delta(restricted, len(c), was_maximal)

    spawned = spawn_record(restricted, c, v)
    for i in hits:
        if was_maximal and i == host:
            continue
        state.records[i] = refresh_record(state.records[i], c, v)
    if was_maximal:
        state.records.pop(host)
    state.records.append(spawned)
    state.attach_order[v] = len(state.attach_order)

    return StepStat(
        vertex=v,
        clique_size=len(c),
        host_size=len(host_rec.clique),
        touched=len(hits),
        records=len(state.records),
        max_family=max(r.width for r in state.records),
    )


def compute(
    g: Graph,
    tie_seed: int | None = None,
    trace: TextIO | None = None,
    on_step: StepHook | None = None,
) -> ComputationResult:
    """Neighborhood polynomial and anchor width of a chordal graph.

    ``on_step`` is called with the engine state after the seed vertex and
    after every attachment of each component; tests use it to compare the
    intermediate records against brute force.
    """
    orders = component_orders(g, tie_seed)
    if isinstance(orders, NotChordal):
        raise NotChordalError(orders)
    if g.n == 0:
        return ComputationResult(ZERO, 0, 0)

    total = ZERO
    peak = 0
    steps: list[StepStat] = []
    final: list[CliqueRecord] = []
    for order in orders:
        state = EngineState()
        seed = order[-1]
        state.records.append(CliqueRecord(frozenset((seed,)), {frozenset((seed,)): ONE}))
        state.poly = ONE
        state.attach_order[seed] = 0
        peak = max(peak, 1)
        if on_step is not None:
            on_step(state, seed)
        for v in reversed(order[:-1]):
            c = frozenset(u for u in g.adj[v] if u in state.attach_order)
            stat = _attach(state, v, c)
            steps.append(stat)
            peak = max(peak, stat.max_family)
            if trace is not None:
                trace.write(_format_trace(stat) + "\n")
            if on_step is not None:
                on_step(state, v)
        # components combine as a disjoint union: N1 + N2 - 1
        total = state.poly if not final else total + state.poly - ONE
        final.extend(state.records)

    width = max(r.width for r in final)
    logger.debug("n=%d records=%d width=%d peak=%d", g.n, len(final), width, peak)
    return ComputationResult(total, width, peak, steps, final)


def anchor_width(g: Graph) -> int:
    """Largest anchor family over the maximal cliques of ``g``.

    Every non-maximal clique's family is the image of its host's family
    under intersection, so it is never larger.
    """
    return compute(g).anchor_width
