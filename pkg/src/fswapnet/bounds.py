"""Bandwidth, 2-bandwidth and the swap-depth lower bounds they imply."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import InvalidArgument, SizeExceeded
from .isoperimetry import (
    LinearOrder,
    closure,
    is_initial_segment_closed,
    vertex_boundary,
    wang_wang_order,
)
from .lattice import (
    Coord,
    GridGraph,
    HubbardModel,
    InteractionGraph,
    degree_bound,
    grid_interaction_graph,
    interaction_graph,
)


@dataclass
class BoundsReport:
    bandwidth: Optional[int]
    two_bandwidth: Optional[int]
    swap_depth_lb: int
    interaction_depth_lb: int
    boundary_profile: List[Tuple[int, int, int]] = field(default_factory=list)
    method: str = "profile"
    exact: bool = True
    notes: List[str] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {
            "bandwidth": self.bandwidth,
            "two_bandwidth": self.two_bandwidth,
            "swap_depth_lb": self.swap_depth_lb,
            "interaction_depth_lb": self.interaction_depth_lb,
            "profile": [list(p) for p in self.boundary_profile],
            "method": self.method,
        }
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def order_bandwidth(r: LinearOrder, W: Iterable[Coord]) -> int:
    """Rank span of ``W`` under ``r``."""
    ranks = [r.rank[tuple(w)] for w in W]
    if not ranks:
        raise InvalidArgument("order bandwidth of an empty set")
    return max(ranks) - min(ranks)


def swap_depth_lower_bound(b: int, b2: int) -> int:
    """max(ceil((b - 1) / 2), ceil((b2 - 2) / 2)), floored at zero."""
    return max(0, math.ceil((b - 1) / 2), math.ceil((b2 - 2) / 2))


def _interaction_lb(g) -> int:
    if isinstance(g, InteractionGraph):
        return degree_bound(g)
    return degree_bound(grid_interaction_graph(g))


def boundary_profile(g, r: Optional[LinearOrder] = None) -> BoundsReport:
    """Boundary profile ``(k, |B(r_k)|, |B(r_k) u B(C(r_k))|)`` for k = 1..|V|.

    When ``r`` is closed under taking boundary closures of initial segments,
    the profile maxima equal the bandwidth and 2-bandwidth; otherwise they
    are only lower bounds and the report is marked inexact.
    """
    if r is None:
        r = wang_wang_order(g)
    r.check_covers(g.vertices)
    profile = []
    for k in range(1, len(r) + 1):
        seg = r.prefix(k)
        b1 = vertex_boundary(g, seg)
        b2 = vertex_boundary(g, closure(g, seg))
        profile.append((k, len(b1), len(b1 | b2)))
    bw = max((p[1] for p in profile), default=0)
    bw2 = max((p[2] for p in profile), default=0)
    exact = is_initial_segment_closed(g, r)
    return BoundsReport(
        bandwidth=bw,
        two_bandwidth=bw2,
        swap_depth_lb=swap_depth_lower_bound(bw, bw2),
        interaction_depth_lb=_interaction_lb(g),
        boundary_profile=profile,
        method="profile",
        exact=exact,
    )


def _min_span_layout(n: int, groups: Sequence[Sequence[int]], lo: int) -> int:
    """Least w such that some order of ``range(n)`` keeps every group's rank
    span at most w. Depth-first placement, left to right, with a look-ahead
    on the positions still owed to each partly placed group."""
    member_of = [[] for _ in range(n)]
    for gi, grp in enumerate(groups):
        for v in grp:
            member_of[v].append(gi)
    sizes = [len(grp) for grp in groups]

    def feasible(w: int) -> bool:
        first = [-1] * len(groups)
        left = list(sizes)
        placed = [False] * n

        def place(p: int) -> bool:
            if p == n:
                return True
            for v in range(n):
                if placed[v]:
                    continue
                ok = True
                for gi in member_of[v]:
                    if first[gi] >= 0 and p - first[gi] > w:
                        ok = False
                        break
                if not ok:
                    continue
                placed[v] = True
                touched = []
                for gi in member_of[v]:
                    if first[gi] < 0:
                        first[gi] = p
                        touched.append(gi)
                    left[gi] -= 1
                # every open group still needs `left` later positions
                if all(first[gi] < 0 or left[gi] == 0 or first[gi] + w >= p + left[gi]
                       for gi in range(len(groups))):
                    if place(p + 1):
                        return True
                for gi in member_of[v]:
                    left[gi] += 1
                for gi in touched:
                    first[gi] = -1
                placed[v] = False
            return False

        return place(0)

    w = lo
    while not feasible(w):
        w += 1
    return w


def _graph_index(g):
    verts = list(g.vertices)
    index = {v: i for i, v in enumerate(verts)}
    edges = [(index[u], index[w]) for u, w in g.edges]
    return verts, index, edges


def bandwidth_exact(g, size_limit: int = 9) -> int:
    """Graph bandwidth by exhaustive search over vertex orders."""
    verts, _, edges = _graph_index(g)
    if len(verts) > size_limit:
        raise SizeExceeded(len(verts), size_limit)
    if not edges:
        return 0
    maxdeg = max(len(nb) for nb in g.adjacency.values())
    return _min_span_layout(len(verts), edges, max(1, math.ceil(maxdeg / 2)))


def length_two_paths(g) -> List[Tuple[Coord, Coord, Coord]]:
    """All (end, middle, end) triples with two distinct neighbours of the middle."""
    out = []
    for v in g.vertices:
        nb = sorted(g.adjacency[v])
        for a, b in itertools.combinations(nb, 2):
            out.append((a, v, b))
    return out


def two_bandwidth_exact(g, size_limit: int = 9) -> int:
    """Graph 2-bandwidth by exhaustive search.

    Graphs with no length-two path report their bandwidth.
    """
    verts, index, _ = _graph_index(g)
    if len(verts) > size_limit:
        raise SizeExceeded(len(verts), size_limit)
    paths = length_two_paths(g)
    if not paths:
        return bandwidth_exact(g, size_limit)
    groups = [tuple(index[x] for x in p) for p in paths]
    return _min_span_layout(len(verts), groups, 2)


def exhaustive_bounds(g, size_limit: int = 9) -> BoundsReport:
    b = bandwidth_exact(g, size_limit)
    b2 = two_bandwidth_exact(g, size_limit)
    return BoundsReport(b, b2, swap_depth_lower_bound(b, b2), _interaction_lb(g), method="exhaustive")


def hubbard_bounds(m: HubbardModel) -> BoundsReport:
    """Closed-form bounds for the M x N Hubbard models.

    Spinless: bandwidth M, 2-bandwidth 2M, swap depth at least M - 1.
    Spin: bandwidth 2M - 1, 2-bandwidth 4M (4M - 1 when M = N), swap depth at
    least 2M - 1. The interaction-depth bound is the degree of the interaction
    graph. Each closed form is cross-checked against the boundary profile of
    the isoperimetric order, which is exact on grids; where they disagree
    (small or degenerate grids) the profile value is reported and a note is
    attached.
    """
    ig = interaction_graph(m)
    M, N = m.M, m.N
    if m.spin:
        closed_b, closed_b2 = 2 * M - 1, (4 * M if M < N else 4 * M - 1)
    else:
        closed_b, closed_b2 = M, 2 * M
    prof = boundary_profile(ig.graph)
    notes = []
    b, b2 = closed_b, closed_b2
    if prof.bandwidth != closed_b:
        notes.append(f"bandwidth: closed form {closed_b}, boundary profile {prof.bandwidth}")
        b = prof.bandwidth
    if prof.two_bandwidth != closed_b2:
        notes.append(f"two_bandwidth: closed form {closed_b2}, boundary profile {prof.two_bandwidth}")
        b2 = prof.two_bandwidth
    return BoundsReport(
        bandwidth=b,
        two_bandwidth=b2,
        swap_depth_lb=swap_depth_lower_bound(b, b2),
        interaction_depth_lb=degree_bound(ig),
        boundary_profile=prof.boundary_profile,
        method="closed_form",
        exact=True,
        notes=notes,
    )


def dense_bounds(n: int) -> BoundsReport:
    """Bounds for the complete interaction graph on ``n`` modes.

    Following the least mode through the network forces ``n - 2`` swap
    layers. The interaction depth is at least the degree ``n - 1``, and at
    least ``n`` when ``n`` is odd because no layer can then pair every mode.
    """
    if n < 2:
        raise InvalidArgument(f"need n >= 2, got {n}")
    inter = n - 1 if n % 2 == 0 else n
    return BoundsReport(
        bandwidth=n - 1,
        two_bandwidth=n - 1,
        swap_depth_lb=n - 2,
        interaction_depth_lb=inter,
        method="closed_form",
    )
