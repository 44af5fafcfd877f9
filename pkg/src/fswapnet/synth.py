"""Swap-network constructions.

Grid networks follow the interleaved-shell scheme: vertices are split by the
parity of their coordinate sum, the even shells form a fixed skeleton, and the
odd shells are inserted between their lower neighbours and then shifted up the
line, one transposition per vertex per layer, until each sits between its upper
neighbours. Every grid edge joins an odd and an even vertex, so it is brought
to adjacency exactly when the odd endpoint passes (or starts or ends next to)
the even one.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import InvalidArgument, UnsupportedMode
from .isoperimetry import LinearOrder, wang_wang_order
from .lattice import (
    Coord,
    Edge,
    GridGraph,
    HubbardModel,
    InteractionGraph,
    Term,
    dense_interaction_graph,
    grid_interaction_graph,
    interaction_graph,
    make_grid,
)
from .network import InteractLayer, Interaction, SwapLayer, SwapNetwork

Snapshot = List[Coord]


# -- shared machinery ------------------------------------------------------


def _apply_swaps(order: Snapshot, at: Iterable[int]) -> Snapshot:
    out = list(order)
    for i in at:
        out[i], out[i + 1] = out[i + 1], out[i]
    return out


def _pack_disjoint(records: List[Tuple[int, Edge]]) -> List[List[Tuple[int, Edge]]]:
    """Split line pairs (left index, edge) into layers of disjoint pairs.

    Pairs on a line form disjoint paths, so two layers always suffice.
    """
    layers: List[List[Tuple[int, Edge]]] = []
    last: List[int] = []
    for rec in sorted(records):
        for li, layer in enumerate(layers):
            if rec[0] > last[li] + 1:
                layer.append(rec)
                last[li] = rec[0]
                break
        else:
            layers.append([rec])
            last.append(rec[0])
    return layers


def _assemble(
    snapshots: List[Snapshot],
    swaps: List[Tuple[int, ...]],
    groups: Sequence[Sequence[Edge]],
    ig: InteractionGraph,
) -> SwapNetwork:
    """Place interaction layers around a fixed swap schedule.

    Each group is interacted at the time step where most of its still-pending
    edges are adjacent (earliest on ties), repeating until the group is done;
    one layer per group and time step, split in two only if pairs overlap.
    Single-site terms ride along in the first interaction layer.
    """
    pos = [{v: i for i, v in enumerate(s)} for s in snapshots]
    at_time: Dict[int, List[List[Tuple[int, Edge]]]] = {}
    for group in groups:
        pending = list(group)
        while pending:
            best_t, best = None, []
            for t, p in enumerate(pos):
                hit = [e for e in pending if abs(p[e[0]] - p[e[1]]) == 1]
                if len(hit) > len(best):
                    best_t, best = t, hit
            if not best:
                raise InvalidArgument(f"edges never brought to adjacency: {pending[:4]}")
            recs = [(min(pos[best_t][e[0]], pos[best_t][e[1]]), e) for e in best]
            at_time.setdefault(best_t, []).extend(_pack_disjoint(recs))
            hit_set = set(best)
            pending = [e for e in pending if e not in hit_set]

    if ig.site_terms and not at_time:
        at_time[0] = [[]]

    layers = []
    sites_done = not ig.site_terms
    for t, snap in enumerate(snapshots):
        for chunk in at_time.get(t, []):
            recs = []
            if not sites_done:
                recs.extend(Interaction(pos[t][v], kind, (v,)) for v, kind in
                            sorted(ig.site_terms, key=lambda s: pos[t][s[0]]))
                sites_done = True
            for left, e in chunk:
                recs.append(Interaction(left, ig.term(*e), (snap[left], snap[left + 1])))
            layers.append(InteractLayer(tuple(recs)))
        if t < len(swaps):
            layers.append(SwapLayer(tuple(swaps[t])))
    return SwapNetwork(len(snapshots[0]), LinearOrder(tuple(snapshots[0])), tuple(layers))


def _route(start: Snapshot, target: Sequence[Coord]) -> Tuple[List[Snapshot], List[Tuple[int, ...]]]:
    """Odd-even transposition sort from ``start`` to ``target``."""
    rank = {v: i for i, v in enumerate(target)}
    cur = list(start)
    snaps, swaps = [], []
    parity = 0
    idle = 0
    while idle < 2:
        at = tuple(i for i in range(parity, len(cur) - 1, 2) if rank[cur[i]] > rank[cur[i + 1]])
        if at:
            cur = _apply_swaps(cur, at)
            snaps.append(cur)
            swaps.append(at)
            idle = 0
        else:
            idle += 1
        parity ^= 1
    return snaps, swaps


# -- dense one-body networks ------------------------------------------------


def round_robin_matchings(n: int) -> List[List[Tuple[int, int]]]:
    """1-factorization of K_n by the circle method.

    Vertex ``n - 1`` stays put; round ``r`` pairs it with ``r`` and pairs
    ``r + k`` with ``r - k`` (mod ``n - 1``).
    """
    if n < 2 or n % 2:
        raise InvalidArgument(f"round robin needs an even n >= 2, got {n}")
    m = n - 1
    rounds = []
    for r in range(m):
        match = [(n - 1, r)]
        for k in range(1, n // 2):
            match.append(((r + k) % m, (r - k) % m))
        rounds.append(match)
    return rounds


def dense_network(n: int, mode: str = "swap_optimal") -> SwapNetwork:
    """Network bringing every pair of ``n`` modes to adjacency.

    ``swap_optimal`` is the odd-even brickwork with its last two swap layers
    dropped: n - 2 swap layers and n interaction layers, the pairs that would
    have met in the final brick being interacted up front. ``interaction_optimal``
    (even n) uses one interaction layer per perfect matching of a round-robin
    1-factorization and routes between them with odd-even transposition sort.
    """
    if n < 2:
        raise InvalidArgument(f"need n >= 2, got {n}")
    ig = dense_interaction_graph(n)
    verts = list(ig.vertices)
    edge_of = {frozenset(e): e for e in ig.edges}

    if mode == "swap_optimal":
        snaps = [verts]
        swaps = []
        for t in range(n - 2):
            at = tuple(range(t % 2, n - 1, 2))
            swaps.append(at)
            snaps.append(_apply_swaps(snaps[-1], at))
        groups = []
        seen = set()
        for t in range(n - 1):
            snap = snaps[min(t, len(snaps) - 1)]
            grp = []
            for i in range(t % 2, n - 1, 2):
                e = edge_of[frozenset((snap[i], snap[i + 1]))]
                if e not in seen:
                    grp.append(e)
                    seen.add(e)
            groups.append(grp)
        groups.append([e for e in ig.edges if e not in seen])
        return _assemble(snaps, swaps, [g for g in groups if g], ig)

    if mode == "interaction_optimal":
        if n % 2:
            raise UnsupportedMode("interaction_optimal needs an even number of modes")
        matchings = [[edge_of[frozenset((verts[a], verts[b]))] for a, b in m]
                     for m in round_robin_matchings(n)]
        snaps: List[Snapshot] = []
        swaps: List[Tuple[int, ...]] = []
        for match in matchings:
            if not snaps:
                snaps.append([v for e in match for v in e])
                continue
            pos = {v: i for i, v in enumerate(snaps[-1])}
            pairs = sorted((sorted(e, key=pos.get) for e in match),
                           key=lambda p: pos[p[0]] + pos[p[1]])
            target = [v for p in pairs for v in p]
            s, w = _route(snaps[-1], target)
            snaps.extend(s)
            swaps.extend(w)
        return _assemble(snaps, swaps, matchings, ig)

    raise UnsupportedMode(f"unknown dense mode {mode!r}")


# -- grid networks -----------------------------------------------------------


def _row_axes(g: GridGraph) -> Tuple[int, ...]:
    """Axes the sigma-rows run along: the smallest and largest non-trivial axes.

    Running rows along the largest axis keeps the row count, and so the shift
    distance, governed by the middle axes.
    """
    live = [i for i, m in enumerate(g.dims) if m > 1]
    if not live:
        return (0,)
    if len(live) == 1:
        return (live[0],)
    return (live[0], live[-1])


def _parity_sequences(g: GridGraph, axes: Tuple[int, ...]) -> Tuple[List[Coord], List[Coord]]:
    rest = [i for i in range(g.ndim) if i not in axes]
    key = lambda v: (sum(v), tuple(-v[i] for i in rest), -v[axes[0]])
    ordered = sorted(g.vertices, key=key)
    even = [v for v in ordered if sum(v) % 2 == 0]
    odd = [v for v in ordered if sum(v) % 2 == 1]
    return even, odd


def _merge(even: List[Coord], odd: List[Coord], gap: Dict[Coord, int]) -> Snapshot:
    out, oi = [], 0
    for gi in range(len(even) + 1):
        while oi < len(odd) and gap[odd[oi]] == gi:
            out.append(odd[oi])
            oi += 1
        if gi < len(even):
            out.append(even[gi])
    if len(out) != len(even) + len(odd):
        raise AssertionError("interleaving lost vertices")
    return out


def _interleave(g: GridGraph):
    """Skeleton and start/end gaps for the odd vertices.

    Gap ``k`` means "after the first k skeleton vertices". At the start an odd
    vertex must not lie right of any even neighbour unless it touches it; the
    rightmost such gaps are taken. At the end it must not lie left of any even
    neighbour unless it touches it; the leftmost such gaps are taken. A vertex
    touching its left (start) or right (end) skeleton neighbour must be the
    outermost odd vertex in its gap.
    """
    axes = _row_axes(g)
    even, odd = _parity_sequences(g, axes)
    eidx = {v: i for i, v in enumerate(even)}
    adj = g.adjacency
    lo = {u: min(eidx[w] for w in adj[u]) for u in odd}
    hi = {u: max(eidx[w] for w in adj[u]) for u in odd}

    start: Dict[Coord, int] = {}
    nxt = None
    for u in reversed(odd):
        k = lo[u] + 1
        if nxt is not None:
            k = min(k, start[nxt])
            if k == start[nxt] and start[nxt] == lo[nxt] + 1:
                k -= 1
        start[u] = k
        nxt = u

    end: Dict[Coord, int] = {}
    prv = None
    for u in odd:
        # a vertex with a single even neighbour may already be done at the start
        k = max(hi[u], start[u])
        if prv is not None:
            k = max(k, end[prv])
            if k == end[prv] and end[prv] == hi[prv]:
                k += 1
        end[u] = k
        prv = u
    return even, odd, eidx, start, end


def interleave_orders(g: GridGraph) -> LinearOrder:
    """Initial line order of the grid scheme."""
    even, odd, _, start, _ = _interleave(g)
    return LinearOrder(tuple(_merge(even, odd, start)))


def _shift_schedule(g: GridGraph) -> Tuple[List[Snapshot], List[Tuple[int, ...]]]:
    """Shift odd vertices rightwards until they reach their end gaps.

    Each layer swaps every odd vertex with the even vertex to its right if the
    odd vertex still has to pass it. Such (odd, even) pairs never overlap, so
    of two queued odd vertices the right one moves first.
    """
    even, odd, eidx, start, end = _interleave(g)
    cur = _merge(even, odd, start)
    final = _merge(even, odd, end)
    snaps, swaps = [cur], []
    while True:
        at = tuple(
            i for i in range(len(cur) - 1)
            if sum(cur[i]) % 2 == 1 and sum(cur[i + 1]) % 2 == 0 and eidx[cur[i + 1]] < end[cur[i]]
        )
        if not at:
            break
        cur = _apply_swaps(cur, at)
        snaps.append(cur)
        swaps.append(at)
    if cur != final:
        raise AssertionError("shift schedule did not reach the final order")
    return snaps, swaps


def _class_groups(ig: InteractionGraph) -> List[List[Edge]]:
    """Edges grouped by direction class, lower-neighbour classes first.

    Odd vertices start beside their lower even neighbours and finish beside
    their upper ones, so this follows the sweep; it also keeps same-time
    layers from grouping all of one axis before the other.
    """
    groups: Dict[tuple, List[Edge]] = {}
    for e in ig.edges:
        groups.setdefault(ig.edge_classes.get(e, ("other",)), []).append(e)

    def key(c: tuple):
        return (c[2] if c[0] == "grid" else 2, repr(c))

    return [groups[k] for k in sorted(groups, key=key)]


def _grid_scheme(ig: InteractionGraph, repair: bool = False) -> SwapNetwork:
    g = ig.graph
    if g is None:
        raise InvalidArgument("grid scheme needs a grid-backed interaction graph")
    snaps, swaps = _shift_schedule(g)
    if repair:
        extra_snaps, extra_swaps = _repair(snaps, ig.edges)
        snaps = snaps + extra_snaps
        swaps = swaps + extra_swaps
    net = _assemble(snaps, swaps, _class_groups(ig), ig)
    return net


def _adjacent_pairs(snap: Snapshot) -> set:
    return {frozenset(p) for p in zip(snap, snap[1:])}


def _repair(snaps: List[Snapshot], edges: Sequence[Edge], limit: Optional[int] = None):
    """Append swap layers until every edge has been adjacent at some step.

    Greedy: each layer takes disjoint transpositions that close the most
    pending pairs, falling back to moves that shorten a pending pair.
    """
    seen = set().union(*(_adjacent_pairs(s) for s in snaps))
    pending = {frozenset(e) for e in edges} - seen
    cur = list(snaps[-1])
    out_snaps, out_swaps = [], []
    limit = limit if limit is not None else 4 * len(cur)
    while pending:
        if len(out_swaps) >= limit:
            raise AssertionError(f"repair did not converge, {len(pending)} pairs left")
        pos = {v: i for i, v in enumerate(cur)}
        scored = []
        for pair in pending:
            a, b = sorted(pos[v] for v in pair)
            for i in (a, b - 1):
                trial = _apply_swaps(cur, (i,))
                gain = len(pending & _adjacent_pairs(trial))
                tpos = {v: j for j, v in enumerate(trial)}
                spread = sum(abs(tpos[x] - tpos[y]) for x, y in map(tuple, pending))
                scored.append((-gain, spread, i))
        used, at = set(), []
        for _, _, i in sorted(set(scored)):
            if i in used or i + 1 in used:
                continue
            at.append(i)
            used.update((i, i + 1))
        cur = _apply_swaps(cur, sorted(at))
        out_snaps.append(cur)
        out_swaps.append(tuple(sorted(at)))
        pending -= _adjacent_pairs(cur)
    return out_snaps, out_swaps


def hubbard_network(m: HubbardModel) -> SwapNetwork:
    """Interleaved-shell network for the spinless or spin M x N Hubbard model.

    Spinless models need M - 1 swap layers and one interaction layer per
    lattice direction (four once both sides are at least 3); the spin model
    needs 2M - 1 swap layers and six interaction layers.
    """
    return _grid_scheme(interaction_graph(m))


def grid_network(dims: Sequence[int]) -> SwapNetwork:
    """The same scheme on an arbitrary grid, all edges hopping terms.

    Coverage is guaranteed; swap depth is not claimed optimal beyond two
    dimensions.
    """
    return _grid_scheme(grid_interaction_graph(make_grid(dims)))


def triangular_interaction_graph(M: int, N: int) -> InteractionGraph:
    """Spinless M x N grid plus edges between consecutive vertices of each shell."""
    base = interaction_graph(HubbardModel(M, N))
    g = base.graph
    terms = dict(base.edge_terms)
    classes = dict(base.edge_classes)
    order = wang_wang_order(g)
    for u, w in zip(order, order[1:]):
        if sum(u) == sum(w):
            e = (u, w) if g.index(u) < g.index(w) else (w, u)
            terms[e] = Term.HOP
            classes[e] = ("shell",)
    return InteractionGraph(base.vertices, terms, base.site_terms, g, classes)


def triangular_network(M: int, N: int) -> Tuple[InteractionGraph, SwapNetwork]:
    """Spinless network extended to the triangular lattice.

    The in-shell edges never meet in the plain spinless schedule (the odd
    vertices stream past in lock step), so swap layers are appended after it
    until they have, and all terms are then scheduled over the full run.
    """
    if M > N:
        raise InvalidArgument(f"need M <= N, got M={M}, N={N}")
    ig = triangular_interaction_graph(M, N)
    return ig, _grid_scheme(ig, repair=True)
