"""Linear orders, vertex boundaries and isoperimetric orders on grid graphs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np

from .errors import InvalidArgument, SizeExceeded
from .lattice import Coord, GridGraph


@dataclass(frozen=True)
class LinearOrder:
    """A bijection from vertices to positions ``0 .. n-1``.

    ``sequence[i]`` is the vertex at position ``i``.
    """

    sequence: Tuple[Coord, ...]

    def __post_init__(self):
        seq = tuple(tuple(v) for v in self.sequence)
        object.__setattr__(self, "sequence", seq)
        if len(set(seq)) != len(seq):
            raise InvalidArgument("order lists a vertex twice")

    @cached_property
    def rank(self) -> Dict[Coord, int]:
        return {v: i for i, v in enumerate(self.sequence)}

    def __len__(self) -> int:
        return len(self.sequence)

    def __iter__(self):
        return iter(self.sequence)

    def __getitem__(self, i):
        return self.sequence[i]

    def prefix(self, k: int) -> FrozenSet[Coord]:
        """The initial segment holding the first ``k`` vertices."""
        return frozenset(self.sequence[:k])

    def check_covers(self, vertices: Iterable[Coord]) -> None:
        if set(self.sequence) != set(vertices):
            raise InvalidArgument("order is not a bijection onto the graph's vertices")

    def to_json(self) -> list:
        return [list(v) for v in self.sequence]


@dataclass(frozen=True)
class ShellPartition:
    shells: Tuple[FrozenSet[Coord], ...]

    def __len__(self):
        return len(self.shells)

    def __getitem__(self, i):
        return self.shells[i]


@dataclass(frozen=True)
class SigmaRow:
    shell_index: int
    row_index: Tuple[int, ...]
    elements: Tuple[Coord, ...]


@dataclass(frozen=True)
class IsoperimetryReport:
    ok: bool
    counterexample_k: Optional[int]
    order_boundary: Tuple[int, ...]
    min_boundary: Tuple[int, ...]


def wang_wang_order(g: GridGraph) -> LinearOrder:
    """Order by coordinate sum, ties broken by descending lexicographic order."""
    key = lambda v: (sum(v), tuple(-c for c in v))
    return LinearOrder(tuple(sorted(g.vertices, key=key)))


def row_major_order(g: GridGraph) -> LinearOrder:
    """Canonical vertex order (component 0 fastest)."""
    return LinearOrder(tuple(g.vertices))


def snake_order(g: GridGraph) -> LinearOrder:
    """Boustrophedon order: component 0 reverses direction on every line."""
    seq = []
    lines: Dict[tuple, list] = {}
    for v in g.vertices:
        lines.setdefault(v[1:], []).append(v)
    for i, key in enumerate(sorted(lines, key=lambda k: tuple(reversed(k)))):
        line = lines[key]
        seq.extend(reversed(line) if i % 2 else line)
    return LinearOrder(tuple(seq))


def vertex_boundary(g, W: Iterable[Coord]) -> Set[Coord]:
    """Vertices outside ``W`` adjacent to some vertex of ``W``."""
    W = set(W)
    out = set()
    adj = g.adjacency
    for w in W:
        out.update(adj[w])
    return out - W


def closure(g, W: Iterable[Coord]) -> Set[Coord]:
    W = set(W)
    return W | vertex_boundary(g, W)


def shells(g: GridGraph, root: Optional[Coord] = None) -> ShellPartition:
    """Iterated boundaries starting from ``root`` (the all-zeros vertex)."""
    if root is None:
        root = wang_wang_order(g)[0]
    out = [frozenset([tuple(root)])]
    seen = set(out[0])
    while len(seen) < len(g.vertices):
        nxt = frozenset(vertex_boundary(g, seen))
        if not nxt:
            raise InvalidArgument("graph is not connected")
        out.append(nxt)
        seen |= nxt
    return ShellPartition(tuple(out))


def is_initial_segment_closed(g, r: LinearOrder) -> bool:
    r.check_covers(g.vertices)
    n = len(r)
    for k in range(n + 1):
        seg = r.prefix(k)
        bnd = vertex_boundary(g, seg)
        if seg | bnd != r.prefix(k + len(bnd)):
            return False
    return True


def _neighbor_masks(g, verts: Sequence[Coord]) -> List[int]:
    index = {v: i for i, v in enumerate(verts)}
    masks = []
    for v in verts:
        m = 0
        for w in g.adjacency[v]:
            m |= 1 << index[w]
        masks.append(m)
    return masks


def min_boundary_by_size(g, size_limit: int = 20) -> np.ndarray:
    """``out[k]`` is the least vertex-boundary size over all k-subsets."""
    verts = list(g.vertices)
    n = len(verts)
    if n > size_limit:
        raise SizeExceeded(n, size_limit)
    nb = _neighbor_masks(g, verts)
    union = np.zeros(1, dtype=np.int64)
    for i in range(n):
        union = np.concatenate([union, union | nb[i]])
    masks = np.arange(1 << n, dtype=np.int64)
    bsize = np.bitwise_count(union & ~masks)
    ssize = np.bitwise_count(masks)
    out = np.full(n + 1, n + 1, dtype=np.int64)
    np.minimum.at(out, ssize, bsize)
    return out


def verify_isoperimetric(g, r: LinearOrder, size_limit: int = 20) -> IsoperimetryReport:
    """Compare every initial segment's boundary with the best k-subset.

    The boundary depends only on the set, so an order is isoperimetric exactly
    when each initial segment attains the subset minimum for its size.
    """
    r.check_covers(g.vertices)
    best = min_boundary_by_size(g, size_limit)
    got = [len(vertex_boundary(g, r.prefix(k))) for k in range(len(r) + 1)]
    bad = next((k for k, (a, b) in enumerate(zip(got, best)) if a != b), None)
    return IsoperimetryReport(bad is None, bad, tuple(got), tuple(int(b) for b in best))


def sigma_rows(g: GridGraph, shell_index: int, axes: Tuple[int, ...] = (0, 1)) -> List[SigmaRow]:
    """Split a coordinate-sum shell into anti-diagonal rows.

    A row fixes every coordinate outside ``axes`` (its row index) and runs
    ``(k, 0, ...), (k-1, 1, ...), ..., (0, k, ...)`` along the two ``axes``,
    clipped to the grid. Rows come in descending lexicographic order of row
    index; within a row the first axis descends.
    """
    depth = sum(m - 1 for m in g.dims)
    if not 0 <= shell_index <= depth:
        raise InvalidArgument(f"shell {shell_index} out of range 0..{depth}")
    if g.ndim == 1:
        return [SigmaRow(shell_index, (), ((shell_index,),))]
    axes = tuple(axes)
    if len(axes) != 2 or axes[0] == axes[1] or not all(0 <= a < g.ndim for a in axes):
        raise InvalidArgument(f"bad sigma-row axes {axes} for a {g.ndim}-d grid")
    rest = [i for i in range(g.ndim) if i not in axes]
    rows: Dict[tuple, list] = {}
    for v in g.vertices:
        if sum(v) == shell_index:
            rows.setdefault(tuple(v[i] for i in rest), []).append(v)
    out = []
    for idx in sorted(rows, reverse=True):
        elems = sorted(rows[idx], key=lambda v: -v[axes[0]])
        out.append(SigmaRow(shell_index, idx, tuple(elems)))
    return out
