"""Fermionic swap networks for Trotter steps of lattice fermion models."""

from .bounds import (
    BoundsReport,
    bandwidth_exact,
    boundary_profile,
    dense_bounds,
    hubbard_bounds,
    swap_depth_lower_bound,
    two_bandwidth_exact,
)
from .errors import FswapError, InvalidArgument, MalformedNetwork, SizeExceeded, UnsupportedMode
from .isoperimetry import LinearOrder, wang_wang_order
from .lattice import GridGraph, HubbardModel, InteractionGraph, Term, interaction_graph, make_grid
from .network import InteractLayer, Interaction, SwapLayer, SwapNetwork
from .synth import dense_network, grid_network, hubbard_network, round_robin_matchings, triangular_network
from .verify import CoverageReport, check_against_bounds, coverage, min_swap_depth_exhaustive, simulate

__all__ = [
    "BoundsReport", "CoverageReport", "FswapError", "GridGraph", "HubbardModel", "InteractLayer",
    "Interaction", "InteractionGraph", "InvalidArgument", "LinearOrder", "MalformedNetwork",
    "SizeExceeded", "SwapLayer", "SwapNetwork", "Term", "UnsupportedMode", "bandwidth_exact",
    "boundary_profile", "check_against_bounds", "coverage", "dense_bounds", "dense_network",
    "grid_network", "hubbard_bounds", "hubbard_network", "interaction_graph", "make_grid",
    "min_swap_depth_exhaustive", "round_robin_matchings", "simulate", "swap_depth_lower_bound",
    "triangular_network", "two_bandwidth_exact", "wang_wang_order",
]
