import pytest
from hypothesis import given, settings, strategies as st

from fswapnet.errors import InvalidArgument
from fswapnet.lattice import (
    HubbardModel,
    Term,
    degree_bound,
    dense_interaction_graph,
    interaction_graph,
    make_grid,
    neighbors,
)

from oracles import grid_edges, grid_vertices


@pytest.mark.parametrize("dims,nv,ne", [([2], 2, 1), ([3, 3], 9, 12), ([2, 2, 2], 8, 12), ([1], 1, 0)])
def test_make_grid_counts(dims, nv, ne):
    g = make_grid(dims)
    assert (len(g.vertices), len(g.edges)) == (nv, ne)


@pytest.mark.parametrize("bad", [[], [0], [3, 0], [2, -1], [2.0], [True]])
def test_make_grid_rejects(bad):
    with pytest.raises(InvalidArgument):
        make_grid(bad)


def test_dims_are_sorted_with_permutation_kept():
    g = make_grid([4, 2, 3])
    assert g.dims == (2, 3, 4)
    assert g.axis_perm == (1, 2, 0)
    for v in g.vertices:
        assert g.from_original(g.to_original(v)) == v
    assert g.to_original((1, 2, 3)) == (3, 1, 2)


def test_vertex_order_is_mixed_radix_component_zero_fastest():
    g = make_grid([2, 3])
    assert g.vertices[:3] == [(0, 0), (1, 0), (0, 1)]
    assert [g.index(v) for v in g.vertices] == list(range(6))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=1, max_size=3))
def test_grid_matches_reference_enumeration(dims):
    g = make_grid(dims)
    ref = sorted(dims)
    assert sorted(g.vertices) == sorted(grid_vertices(ref))
    assert {frozenset(e) for e in g.edges} == {frozenset(e) for e in grid_edges(ref)}
    for u, w in g.edges:
        diff = [abs(a - b) for a, b in zip(u, w)]
        assert sorted(diff)[-1] == 1 and sum(diff) == 1


@pytest.mark.parametrize("M", range(1, 6))
@pytest.mark.parametrize("N", range(1, 6))
def test_edge_count_formulas(M, N):
    assert len(make_grid([M, N]).edges) == 2 * M * N - M - N
    assert len(make_grid([2, M, N]).edges) == M * N + 2 * (2 * M * N - M - N)


def test_neighbors():
    g = make_grid([3, 3])
    assert neighbors(g, (1, 1)) == {(0, 1), (2, 1), (1, 0), (1, 2)}
    assert neighbors(g, (0, 0)) == {(1, 0), (0, 1)}
    assert neighbors(make_grid([2, 3, 3]), (1, 2, 2)) == {(0, 2, 2), (1, 1, 2), (1, 2, 1)}
    with pytest.raises(InvalidArgument):
        neighbors(g, (3, 0))
    with pytest.raises(InvalidArgument):
        neighbors(g, (0, 0, 0))


def test_spinless_interaction_graph():
    ig = interaction_graph(HubbardModel(3, 3))
    assert ig.count(Term.HOP) == 12 and len(ig.site_terms) == 9
    assert all(k is Term.NUMBER_OP for _, k in ig.site_terms)
    ig = interaction_graph(HubbardModel(1, 2))
    assert len(ig.edges) == 1 and len(ig.site_terms) == 2


def test_spin_interaction_graph():
    ig = interaction_graph(HubbardModel(3, 3, spin=True))
    assert len(ig.edges) == 33
    assert ig.count(Term.ONSITE_PAIR) == 9 and ig.count(Term.HOP) == 24
    for (u, w), kind in ig.edge_terms.items():
        assert (kind is Term.ONSITE_PAIR) == (u[0] != w[0])
    assert not ig.site_terms


@pytest.mark.parametrize("M,N", [(1, 1), (2, 3), (3, 4)])
def test_spin_graph_is_grid(M, N):
    ig = interaction_graph(HubbardModel(M, N, spin=True))
    assert set(ig.edges) == set(make_grid([2, M, N]).edges)


def test_spin_axis_when_a_lattice_side_is_one():
    # with M = 1 the spin axis is no longer the smallest, so it moves
    ig = interaction_graph(HubbardModel(1, 3, spin=True))
    g = ig.graph
    spin_axis = g.axis_perm.index(0)
    for (u, w), kind in ig.edge_terms.items():
        assert (kind is Term.ONSITE_PAIR) == (g.edge_axis(u, w) == spin_axis)
    assert ig.count(Term.ONSITE_PAIR) == 3


def test_model_validation():
    with pytest.raises(InvalidArgument):
        HubbardModel(3, 2)
    with pytest.raises(InvalidArgument):
        HubbardModel(0, 2)


def test_degree_bound():
    assert degree_bound(interaction_graph(HubbardModel(3, 3))) == 4
    assert degree_bound(interaction_graph(HubbardModel(3, 3, spin=True))) == 5
    assert degree_bound(interaction_graph(HubbardModel(1, 2))) == 1
    assert degree_bound(dense_interaction_graph(5)) == 4


def test_dot_export():
    dot = interaction_graph(HubbardModel(1, 2)).to_dot()
    assert dot.startswith("graph G {")
    assert '"(0,0)" -- "(0,1)";' in dot
