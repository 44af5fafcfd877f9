"""Replaying networks, checking coverage and comparing against bounds."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .bounds import BoundsReport
from .errors import InvalidArgument, MalformedNetwork, SizeExceeded
from .isoperimetry import LinearOrder
from .lattice import Coord, Edge, InteractionGraph, Term
from .network import SwapLayer, SwapNetwork


@dataclass
class CoverageReport:
    """Outcome of replaying a network against an interaction graph.

    Attributes:
        covered: first layer index at which each required edge was interacted.
        missing: required edges never interacted.
        missing_sites: single-site terms never applied.
    """

    covered: Dict[Edge, int]
    missing: List[Edge]
    swap_depth: int
    interaction_depth: int
    missing_sites: List[Tuple[Coord, Term]] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return not self.missing and not self.missing_sites

    def to_json(self) -> dict:
        return {
            "complete": self.complete,
            "swap_depth": self.swap_depth,
            "interaction_depth": self.interaction_depth,
            "covered": len(self.covered),
            "missing": [[list(u), list(w)] for u, w in self.missing],
            "missing_sites": [list(v) for v, _ in self.missing_sites],
        }


def simulate(net: SwapNetwork) -> List[LinearOrder]:
    """Line order before the first layer and after each layer."""
    net.check_structure()
    cur = list(net.initial_order)
    out = [net.initial_order]
    for layer in net.layers:
        if isinstance(layer, SwapLayer):
            for i in layer.at:
                cur[i], cur[i + 1] = cur[i + 1], cur[i]
            out.append(LinearOrder(tuple(cur)))
        else:
            out.append(out[-1])
    return out


def coverage(net: SwapNetwork, ig: InteractionGraph) -> CoverageReport:
    """Replay ``net`` and record where each required term is applied.

    Raises:
        MalformedNetwork: a record names vertices that are not at its
            positions, pairs vertices that share no term, or mislabels a term.
    """
    net.check_structure()
    if net.num_positions != len(ig.vertices):
        raise MalformedNetwork(f"network has {net.num_positions} positions, graph has {len(ig.vertices)} vertices")
    try:
        net.initial_order.check_covers(ig.vertices)
    except InvalidArgument as exc:
        raise MalformedNetwork(str(exc)) from exc
    keys = {frozenset(e): e for e in ig.edges}
    site_kind = dict(ig.site_terms)
    covered: Dict[Edge, int] = {}
    sites_seen = set()
    cur = list(net.initial_order)
    for li, layer in enumerate(net.layers):
        if isinstance(layer, SwapLayer):
            for i in layer.at:
                cur[i], cur[i + 1] = cur[i + 1], cur[i]
            continue
        for rec in layer.pairs:
            here = tuple(cur[p] for p in rec.positions)
            if here != tuple(rec.sites):
                raise MalformedNetwork(f"layer {li}: record expects {rec.sites} at {rec.at}, line holds {here}")
            if len(here) == 1:
                if site_kind.get(here[0]) is not rec.term:
                    raise MalformedNetwork(f"layer {li}: no {rec.term.value} term on {here[0]}")
                sites_seen.add(here[0])
                continue
            e = keys.get(frozenset(here))
            if e is None:
                raise MalformedNetwork(f"layer {li}: {here} is not an edge of the interaction graph")
            if ig.edge_terms[e] is not rec.term:
                raise MalformedNetwork(f"layer {li}: {here} carries {ig.edge_terms[e].value}, not {rec.term.value}")
            covered.setdefault(e, li)
    missing = [e for e in ig.edges if e not in covered]
    missing_sites = [(v, k) for v, k in ig.site_terms if v not in sites_seen]
    return CoverageReport(covered, missing, net.swap_depth, net.interaction_depth, missing_sites)


def check_against_bounds(report: CoverageReport, bounds: BoundsReport) -> Dict[str, bool]:
    """Whether each depth meets its lower bound exactly."""
    return {
        "swap_optimal": report.swap_depth == bounds.swap_depth_lb,
        "interaction_optimal": report.interaction_depth == bounds.interaction_depth_lb,
    }


def min_swap_depth_exhaustive(ig: InteractionGraph, size_limit: int = 7) -> int:
    """Fewest swap layers over all networks covering every edge of ``ig``.

    Breadth-first over (line order, covered edges), with every initial order
    allowed and every non-empty set of disjoint adjacent transpositions as a
    move. Interaction layers are free, so an edge counts as covered as soon
    as its endpoints are adjacent. Line reversal is a symmetry and is
    quotiented out; per order only the maximal covered sets are kept.
    """
    verts = list(ig.vertices)
    n = len(verts)
    if n > size_limit:
        raise SizeExceeded(n, size_limit)
    index = {v: i for i, v in enumerate(verts)}
    bit = {}
    for k, (u, w) in enumerate(ig.edges):
        bit[(index[u], index[w])] = bit[(index[w], index[u])] = 1 << k
    full = (1 << len(ig.edges)) - 1
    if full == 0:
        return 0

    adj_cache: Dict[tuple, int] = {}

    def adj_mask(p: tuple) -> int:
        m = adj_cache.get(p)
        if m is None:
            m = 0
            for a, b in zip(p, p[1:]):
                m |= bit.get((a, b), 0)
            adj_cache[p] = m
        return m

    def canon(p: tuple) -> tuple:
        r = p[::-1]
        return p if p <= r else r

    moves = []
    for r in range(1, n // 2 + 1):
        for at in itertools.combinations(range(n - 1), r):
            if all(b - a > 1 for a, b in zip(at, at[1:])):
                moves.append(at)

    def add(front: Dict[tuple, List[int]], p: tuple, m: int) -> None:
        kept = front.setdefault(p, [])
        for x in kept:
            if x | m == x:
                return
        kept[:] = [x for x in kept if x | m != m]
        kept.append(m)

    front: Dict[tuple, List[int]] = {}
    for p in itertools.permutations(range(n)):
        if p <= p[::-1]:
            add(front, p, adj_mask(p))
    depth = 0
    while True:
        if any(m == full for ms in front.values() for m in ms):
            return depth
        nxt: Dict[tuple, List[int]] = {}
        for p, ms in front.items():
            for at in moves:
                q = list(p)
                for i in at:
                    q[i], q[i + 1] = q[i + 1], q[i]
                q = tuple(q)
                gain = adj_mask(q)
                qc = canon(q)
                for m in ms:
                    if m | gain == full:
                        return depth + 1
                    add(nxt, qc, m | gain)
        front = nxt
        depth += 1
