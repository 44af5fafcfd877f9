import itertools

import pytest

from fswapnet.bounds import hubbard_bounds
from fswapnet.errors import InvalidArgument, UnsupportedMode
from fswapnet.lattice import HubbardModel, dense_interaction_graph, grid_interaction_graph, interaction_graph, make_grid
from fswapnet.network import InteractLayer, SwapLayer
from fswapnet.synth import (
    dense_network,
    grid_network,
    hubbard_network,
    interleave_orders,
    round_robin_matchings,
    triangular_interaction_graph,
    triangular_network,
)


def interacted(net):
    """Pairs named by interaction records, after checking each against the line."""
    cur = list(net.initial_order)
    out = set()
    for layer in net.layers:
        if isinstance(layer, SwapLayer):
            for i in layer.at:
                cur[i], cur[i + 1] = cur[i + 1], cur[i]
        else:
            for rec in layer.pairs:
                assert tuple(cur[p] for p in rec.positions) == rec.sites
                if len(rec.sites) == 2:
                    out.add(frozenset(rec.sites))
    return out


def assert_covers(net, ig):
    net.check_structure()
    assert {frozenset(e) for e in ig.edges} <= interacted(net)


# -- dense -------------------------------------------------------------------


@pytest.mark.parametrize("n", range(2, 9))
def test_dense_swap_optimal(n):
    net = dense_network(n)
    assert net.swap_depth == n - 2
    assert net.interaction_depth == (n if n > 2 else 1)
    assert_covers(net, dense_interaction_graph(n))


def test_dense_examples():
    assert (dense_network(2).swap_depth, dense_network(2).interaction_depth) == (0, 1)
    assert (dense_network(4).swap_depth, dense_network(4).interaction_depth) == (2, 4)
    assert (dense_network(5).swap_depth, dense_network(5).interaction_depth) == (3, 5)


@pytest.mark.parametrize("n", [2, 4, 6, 8, 10])
def test_dense_interaction_optimal(n):
    net = dense_network(n, "interaction_optimal")
    assert net.interaction_depth == n - 1
    assert_covers(net, dense_interaction_graph(n))


def test_dense_modes_rejected():
    with pytest.raises(UnsupportedMode):
        dense_network(5, "interaction_optimal")
    with pytest.raises(UnsupportedMode):
        dense_network(4, "fastest")
    with pytest.raises(InvalidArgument):
        dense_network(1)


@pytest.mark.parametrize("n", range(2, 13, 2))
def test_round_robin(n):
    ms = round_robin_matchings(n)
    assert len(ms) == n - 1
    seen = set()
    for m in ms:
        assert len(m) == n // 2
        assert sorted(v for e in m for v in e) == list(range(n))
        for e in m:
            key = frozenset(e)
            assert key not in seen
            seen.add(key)
    assert seen == {frozenset(p) for p in itertools.combinations(range(n), 2)}


def test_round_robin_examples():
    assert round_robin_matchings(2) == [[(1, 0)]]
    assert round_robin_matchings(4)[0] == [(3, 0), (1, 2)]
    with pytest.raises(InvalidArgument):
        round_robin_matchings(5)


# -- grids -------------------------------------------------------------------


def test_interleave_examples():
    assert list(interleave_orders(make_grid([3, 3]))) == [
        (1, 0), (0, 0), (0, 1), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2), (2, 2)]
    assert list(interleave_orders(make_grid([2, 2]))) == [(1, 0), (0, 0), (0, 1), (1, 1)]
    assert list(interleave_orders(make_grid([2]))) == [(0,), (1,)]


@pytest.mark.parametrize("M", range(1, 7))
@pytest.mark.parametrize("N", range(1, 7))
def test_spinless_networks(M, N):
    if M > N:
        return
    m = HubbardModel(M, N)
    net = hubbard_network(m)
    assert_covers(net, interaction_graph(m))
    assert net.swap_depth == max(M - 1, 0)
    if M >= 2:
        assert net.swap_depth == hubbard_bounds(m).swap_depth_lb
    if M >= 3:
        assert net.interaction_depth == 4


@pytest.mark.parametrize("M,N", [(M, N) for N in range(1, 5) for M in range(1, N + 1)])
def test_spin_networks(M, N):
    m = HubbardModel(M, N, spin=True)
    net = hubbard_network(m)
    assert_covers(net, interaction_graph(m))
    # a single site is one already-adjacent pair
    assert net.swap_depth == (2 * M - 1 if M * N > 1 else 0)
    if M >= 2:
        assert net.interaction_depth == 6


def test_spin_larger_grids_need_a_seventh_layer():
    net = hubbard_network(HubbardModel(4, 5, spin=True))
    assert net.swap_depth == 7 and net.interaction_depth == 7


def test_path_network():
    net = hubbard_network(HubbardModel(1, 4))
    assert (net.swap_depth, net.interaction_depth) == (0, 2)


def test_every_site_term_attached_once():
    net = hubbard_network(HubbardModel(3, 4))
    sites = [r.sites[0] for l in net.layers if isinstance(l, InteractLayer) for r in l.pairs if len(r.sites) == 1]
    assert sorted(sites) == sorted(make_grid([3, 4]).vertices)
    first = next(l for l in net.layers if isinstance(l, InteractLayer))
    assert sum(len(r.sites) == 1 for r in first.pairs) == 12


def test_each_edge_interacted_exactly_once():
    for m in (HubbardModel(3, 3), HubbardModel(3, 3, spin=True)):
        recs = [frozenset(r.sites) for l in hubbard_network(m).layers if isinstance(l, InteractLayer)
                for r in l.pairs if len(r.sites) == 2]
        assert len(recs) == len(set(recs)) == len(interaction_graph(m).edges)


def test_grid_network_matches_hubbard():
    a, b = grid_network([3, 3]), hubbard_network(HubbardModel(3, 3))
    assert (a.swap_depth, a.interaction_depth) == (b.swap_depth, b.interaction_depth)
    assert list(a.initial_order) == list(b.initial_order)
    assert_covers(a, grid_interaction_graph(make_grid([3, 3])))


@pytest.mark.parametrize("dims", [[2, 2, 2], [2, 2, 3], [3, 3, 3], [2, 2, 2, 2], [2, 3, 4], [3, 5], [1, 1, 6]])
def test_grid_network_coverage(dims):
    net = grid_network(dims)
    assert_covers(net, grid_interaction_graph(make_grid(dims)))


def test_grid_network_edge_cases():
    assert grid_network([4]).swap_depth == 0
    assert grid_network([1]).interaction_depth == 0
    net = grid_network([2, 2, 2])
    assert net.swap_depth >= 3


def test_swap_layers_only_move_odd_past_even():
    net = hubbard_network(HubbardModel(4, 5))
    cur = list(net.initial_order)
    for layer in net.layers:
        if isinstance(layer, SwapLayer):
            for i in layer.at:
                assert sum(cur[i]) % 2 == 1 and sum(cur[i + 1]) % 2 == 0
                cur[i], cur[i + 1] = cur[i + 1], cur[i]


# -- triangular --------------------------------------------------------------


def test_triangular_graph():
    assert len(triangular_interaction_graph(3, 3).edges) == 16
    assert len(triangular_interaction_graph(2, 2).edges) == 5
    assert len(triangular_interaction_graph(1, 5).edges) == 4


@pytest.mark.parametrize("M,N", [(1, 4), (2, 2), (2, 3), (3, 3), (3, 4), (4, 4)])
def test_triangular_networks_cover(M, N):
    ig, net = triangular_network(M, N)
    assert_covers(net, ig)
    assert net.swap_depth >= max(M - 1, 0)


def test_triangular_degenerates_to_path():
    ig, net = triangular_network(1, 4)
    base = hubbard_network(HubbardModel(1, 4))
    assert net.to_json() == base.to_json()


def test_triangular_rejects_bad_shape():
    with pytest.raises(InvalidArgument):
        triangular_network(3, 2)
