"""Swap-network data types and their file formats."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Tuple, Union

from .errors import MalformedNetwork
from .isoperimetry import LinearOrder
from .lattice import Coord, Term, coord_label, graph_to_dot

FORMAT_VERSION = 1


@dataclass(frozen=True)
class Interaction:
    """One local term evolution at line position ``at``.

    Two-site terms act on positions ``at`` and ``at + 1``; ``sites`` names the
    vertices expected there. Single-site terms carry one site.
    """

    at: int
    term: Term
    sites: Tuple[Coord, ...]

    @property
    def positions(self) -> Tuple[int, ...]:
        return tuple(range(self.at, self.at + len(self.sites)))


@dataclass(frozen=True)
class SwapLayer:
    """Transpositions ``(i, i + 1)`` for each left index ``i``."""

    at: Tuple[int, ...]
    kind = "swap"


@dataclass(frozen=True)
class InteractLayer:
    pairs: Tuple[Interaction, ...]
    kind = "interact"


Layer = Union[SwapLayer, InteractLayer]


@dataclass(frozen=True)
class SwapNetwork:
    num_positions: int
    initial_order: LinearOrder
    layers: Tuple[Layer, ...] = ()
    meta: Dict[str, object] = field(default_factory=dict, compare=False, hash=False)

    @property
    def swap_depth(self) -> int:
        return sum(1 for layer in self.layers if isinstance(layer, SwapLayer))

    @property
    def interaction_depth(self) -> int:
        return sum(1 for layer in self.layers if isinstance(layer, InteractLayer))

    def without_layer(self, i: int) -> "SwapNetwork":
        layers = self.layers[:i] + self.layers[i + 1 :]
        return SwapNetwork(self.num_positions, self.initial_order, layers)

    def check_structure(self) -> None:
        """Raise MalformedNetwork unless every layer is internally consistent."""
        n = self.num_positions
        if len(self.initial_order) != n:
            raise MalformedNetwork(f"initial order has {len(self.initial_order)} entries, expected {n}")
        for li, layer in enumerate(self.layers):
            if isinstance(layer, SwapLayer):
                used = set()
                for i in layer.at:
                    if not 0 <= i < n - 1:
                        raise MalformedNetwork(f"layer {li}: transposition at {i} out of range")
                    if i in used or i + 1 in used:
                        raise MalformedNetwork(f"layer {li}: overlapping transpositions at {i}")
                    used.update((i, i + 1))
            elif isinstance(layer, InteractLayer):
                used = set()
                for rec in layer.pairs:
                    if len(rec.sites) not in (1, 2):
                        raise MalformedNetwork(f"layer {li}: record with {len(rec.sites)} sites")
                    pos = rec.positions
                    if pos[0] < 0 or pos[-1] >= n:
                        raise MalformedNetwork(f"layer {li}: record at {rec.at} out of range")
                    if len(pos) == 2:
                        if used & set(pos):
                            raise MalformedNetwork(f"layer {li}: overlapping pairs at {rec.at}")
                        used.update(pos)
            else:
                raise MalformedNetwork(f"layer {li}: unknown layer type {type(layer).__name__}")

    # -- serialization ----------------------------------------------------

    def to_dict(self) -> dict:
        layers = []
        for layer in self.layers:
            if isinstance(layer, SwapLayer):
                layers.append({"type": "swap", "at": list(layer.at)})
            else:
                pairs = [
                    {"at": rec.at, "term": rec.term.value, "sites": [list(s) for s in rec.sites]}
                    for rec in layer.pairs
                ]
                layers.append({"type": "interact", "pairs": pairs})
        return {
            "version": FORMAT_VERSION,
            "num_positions": self.num_positions,
            "initial_order": self.initial_order.to_json(),
            "layers": layers,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"), ensure_ascii=False) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "SwapNetwork":
        try:
            if data["version"] != FORMAT_VERSION:
                raise MalformedNetwork(f"unsupported network format version {data['version']}")
            order = LinearOrder(tuple(tuple(v) for v in data["initial_order"]))
            layers: List[Layer] = []
            for entry in data["layers"]:
                if entry["type"] == "swap":
                    layers.append(SwapLayer(tuple(int(i) for i in entry["at"])))
                elif entry["type"] == "interact":
                    recs = tuple(
                        Interaction(int(p["at"]), Term(p["term"]), tuple(tuple(s) for s in p["sites"]))
                        for p in entry["pairs"]
                    )
                    layers.append(InteractLayer(recs))
                else:
                    raise MalformedNetwork(f"unknown layer type {entry['type']!r}")
            return cls(int(data["num_positions"]), order, tuple(layers))
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedNetwork(f"bad network document: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> "SwapNetwork":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedNetwork(f"not valid JSON: {exc}") from exc
        return cls.from_dict(data)

    def to_text(self) -> str:
        lines = []
        for li, layer in enumerate(self.layers):
            if isinstance(layer, SwapLayer):
                body = " ".join(f"{i}:{i + 1}" for i in layer.at)
                lines.append(f"{li:3d} swap     {body}")
            else:
                parts = []
                for rec in layer.pairs:
                    sites = "-".join(coord_label(s) for s in rec.sites)
                    parts.append(f"{rec.at}:{rec.term.value}:{sites}")
                lines.append(f"{li:3d} interact {' '.join(parts)}")
        return "\n".join(lines) + ("\n" if lines else "")

    def to_dot(self) -> str:
        """Interacted pairs as a graph, each edge labelled by its layer."""
        labels: Dict[Tuple[Coord, Coord], str] = {}
        for li, layer in enumerate(self.layers):
            if isinstance(layer, InteractLayer):
                for rec in layer.pairs:
                    if len(rec.sites) == 2:
                        labels.setdefault(tuple(rec.sites), f"L{li}")
        return graph_to_dot(self.initial_order.sequence, list(labels), labels)
