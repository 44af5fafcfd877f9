"""Grid graphs and Hubbard-model interaction graphs.

Vertices are integer coordinate tuples. A grid stores its dimensions in
ascending order; the axis permutation applied to get there is kept so that
coordinates can be mapped back to the caller's axis order.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .errors import InvalidArgument

Coord = Tuple[int, ...]
Edge = Tuple[Coord, Coord]


class Term(str, Enum):
    HOP = "hop"
    ONSITE_PAIR = "onsite_pair"
    NUMBER_OP = "number_op"


@dataclass(frozen=True)
class GridGraph:
    """Finite product of path graphs.

    Attributes:
        dims: axis sizes, ascending.
        axis_perm: ``axis_perm[i]`` is the caller's axis that became sorted
            axis ``i``.
    """

    dims: Tuple[int, ...]
    axis_perm: Tuple[int, ...] = ()

    def __post_init__(self):
        if not self.axis_perm:
            object.__setattr__(self, "axis_perm", tuple(range(len(self.dims))))

    @property
    def ndim(self) -> int:
        return len(self.dims)

    @cached_property
    def vertices(self) -> List[Coord]:
        # mixed radix, component 0 fastest
        ranges = [range(m) for m in reversed(self.dims)]
        return [tuple(reversed(c)) for c in itertools.product(*ranges)]

    @cached_property
    def _index(self) -> Dict[Coord, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def index(self, v: Coord) -> int:
        try:
            return self._index[tuple(v)]
        except KeyError:
            raise InvalidArgument(f"{v} is not a vertex of grid {self.dims}") from None

    def __contains__(self, v) -> bool:
        return tuple(v) in self._index

    def __len__(self) -> int:
        return math.prod(self.dims)

    @cached_property
    def edges(self) -> List[Edge]:
        """Edges ``(u, u + e_i)`` in vertex order, then axis order."""
        out = []
        for v in self.vertices:
            for i, m in enumerate(self.dims):
                if v[i] + 1 < m:
                    w = v[:i] + (v[i] + 1,) + v[i + 1 :]
                    out.append((v, w))
        return out

    @cached_property
    def adjacency(self) -> Dict[Coord, FrozenSet[Coord]]:
        adj: Dict[Coord, set] = {v: set() for v in self.vertices}
        for u, w in self.edges:
            adj[u].add(w)
            adj[w].add(u)
        return {v: frozenset(s) for v, s in adj.items()}

    def edge_axis(self, u: Coord, w: Coord) -> int:
        diff = [i for i in range(self.ndim) if u[i] != w[i]]
        if len(diff) != 1 or abs(u[diff[0]] - w[diff[0]]) != 1:
            raise InvalidArgument(f"{u} and {w} are not adjacent")
        return diff[0]

    def to_original(self, v: Coord) -> Coord:
        """Map a sorted-axis coordinate back to the caller's axis order."""
        out = [0] * self.ndim
        for i, axis in enumerate(self.axis_perm):
            out[axis] = v[i]
        return tuple(out)

    def from_original(self, v: Sequence[int]) -> Coord:
        return tuple(v[axis] for axis in self.axis_perm)


def make_grid(dims: Sequence[int]) -> GridGraph:
    """Build the grid graph with the given axis sizes.

    >>> g = make_grid([3, 3])
    >>> len(g.vertices), len(g.edges)
    (9, 12)
    """
    dims = list(dims)
    if not dims:
        raise InvalidArgument("grid needs at least one dimension")
    for m in dims:
        if not isinstance(m, int) or isinstance(m, bool) or m < 1:
            raise InvalidArgument(f"grid dimensions must be positive integers, got {dims}")
    perm = tuple(sorted(range(len(dims)), key=lambda i: dims[i]))
    return GridGraph(tuple(dims[i] for i in perm), perm)


def neighbors(g: GridGraph, v: Sequence[int]) -> set:
    v = tuple(v)
    if len(v) != g.ndim or v not in g:
        raise InvalidArgument(f"{v} is out of bounds for grid {g.dims}")
    return set(g.adjacency[v])


@dataclass(frozen=True)
class HubbardModel:
    """Spinless or spinful M x N Hubbard model with uniform couplings."""

    M: int
    N: int
    spin: bool = False
    U: float = 1.0
    t: float = 1.0

    def __post_init__(self):
        for name in ("M", "N"):
            val = getattr(self, name)
            if not isinstance(val, int) or isinstance(val, bool) or val < 1:
                raise InvalidArgument(f"{name} must be a positive integer, got {val!r}")
        if self.M > self.N:
            raise InvalidArgument(f"need M <= N, got M={self.M}, N={self.N}")

    @property
    def n_modes(self) -> int:
        return self.M * self.N * (2 if self.spin else 1)


@dataclass(frozen=True)
class InteractionGraph:
    """Required two-site terms plus single-site terms.

    ``graph`` is the underlying grid when there is one (Hubbard, plain grid
    and triangular models); dense graphs carry ``None``. ``edge_classes``
    tags edges for layer scheduling.
    """

    vertices: Tuple[Coord, ...]
    edge_terms: Dict[Edge, Term]
    site_terms: Tuple[Tuple[Coord, Term], ...] = ()
    graph: Optional[GridGraph] = None
    edge_classes: Dict[Edge, tuple] = field(default_factory=dict, compare=False)

    @property
    def edges(self) -> List[Edge]:
        return list(self.edge_terms)

    @cached_property
    def adjacency(self) -> Dict[Coord, FrozenSet[Coord]]:
        adj: Dict[Coord, set] = {v: set() for v in self.vertices}
        for u, w in self.edge_terms:
            adj[u].add(w)
            adj[w].add(u)
        return {v: frozenset(s) for v, s in adj.items()}

    def term(self, u: Coord, w: Coord) -> Optional[Term]:
        return self.edge_terms.get((u, w), self.edge_terms.get((w, u)))

    def count(self, kind: Term) -> int:
        return sum(1 for k in self.edge_terms.values() if k is kind)

    def to_dot(self) -> str:
        return graph_to_dot(self.vertices, self.edge_terms)


def _grid_classes(g: GridGraph, edges: Iterable[Edge]) -> Dict[Edge, tuple]:
    # direction of the edge seen from its odd-parity endpoint
    classes = {}
    for u, w in edges:
        axis = g.edge_axis(u, w)
        odd, even = (u, w) if sum(u) % 2 else (w, u)
        classes[(u, w)] = ("grid", axis, even[axis] - odd[axis])
    return classes


def grid_interaction_graph(g: GridGraph) -> InteractionGraph:
    """Every grid edge is a hopping term; no site terms."""
    terms = {e: Term.HOP for e in g.edges}
    return InteractionGraph(tuple(g.vertices), terms, (), g, _grid_classes(g, g.edges))


def interaction_graph(m: HubbardModel) -> InteractionGraph:
    """Interaction graph of a Hubbard model.

    Spinless models live on the M x N grid, with one number operator per site.
    The spin model lives on the 2 x M x N grid; edges along the spin axis carry
    the on-site ``U n_up n_down`` pair and all other edges carry hopping.
    """
    if not m.spin:
        g = make_grid([m.M, m.N])
        terms = {e: Term.HOP for e in g.edges}
        sites = tuple((v, Term.NUMBER_OP) for v in g.vertices)
        return InteractionGraph(tuple(g.vertices), terms, sites, g, _grid_classes(g, g.edges))
    g = make_grid([2, m.M, m.N])
    spin_axis = g.axis_perm.index(0)
    terms = {}
    for u, w in g.edges:
        terms[(u, w)] = Term.ONSITE_PAIR if g.edge_axis(u, w) == spin_axis else Term.HOP
    return InteractionGraph(tuple(g.vertices), terms, (), g, _grid_classes(g, g.edges))


def dense_interaction_graph(n: int) -> InteractionGraph:
    """Complete graph on ``n`` modes, vertices ``(0,), ..., (n-1,)``."""
    if n < 1:
        raise InvalidArgument(f"need n >= 1, got {n}")
    verts = tuple((p,) for p in range(n))
    terms = {(verts[p], verts[q]): Term.HOP for p, q in itertools.combinations(range(n), 2)}
    return InteractionGraph(verts, terms)


def degree_bound(ig: InteractionGraph) -> int:
    """Largest vertex degree over two-site terms."""
    if not ig.edge_terms:
        return 0
    return max(len(nb) for nb in ig.adjacency.values())


def coord_label(v: Sequence[int]) -> str:
    return "(" + ",".join(str(c) for c in v) + ")"


def graph_to_dot(vertices, edges, labels: Optional[Dict[Edge, str]] = None) -> str:
    lines = ["graph G {"]
    for v in vertices:
        lines.append(f'  "{coord_label(v)}";')
    for e in edges:
        u, w = e
        attr = ""
        if labels and e in labels:
            attr = f' [label="{labels[e]}"]'
        lines.append(f'  "{coord_label(u)}" -- "{coord_label(w)}"{attr};')
    lines.append("}")
    return "\n".join(lines) + "\n"
