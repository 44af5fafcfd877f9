import json

import pytest
from hypothesis import given, settings, strategies as st

from fswapnet.errors import MalformedNetwork
from fswapnet.isoperimetry import LinearOrder
from fswapnet.lattice import HubbardModel, Term
from fswapnet.network import InteractLayer, Interaction, SwapLayer, SwapNetwork
from fswapnet.synth import dense_network, hubbard_network, triangular_network


def line(n):
    return LinearOrder(tuple((i,) for i in range(n)))


def test_empty_network_json():
    net = SwapNetwork(3, line(3))
    assert net.to_json() == '{"version":1,"num_positions":3,"initial_order":[[0],[1],[2]],"layers":[]}\n'


def test_key_order():
    doc = json.loads(hubbard_network(HubbardModel(2, 2)).to_json())
    assert list(doc) == ["version", "num_positions", "initial_order", "layers"]
    swap = next(l for l in doc["layers"] if l["type"] == "swap")
    inter = next(l for l in doc["layers"] if l["type"] == "interact")
    assert list(swap) == ["type", "at"]
    assert list(inter) == ["type", "pairs"] and list(inter["pairs"][0]) == ["at", "term", "sites"]


@pytest.mark.parametrize("net", [
    hubbard_network(HubbardModel(2, 2, spin=True)),
    hubbard_network(HubbardModel(3, 4)),
    dense_network(6, "interaction_optimal"),
    triangular_network(3, 3)[1],
])
def test_round_trip_is_byte_identical(net):
    text = net.to_json()
    back = SwapNetwork.from_json(text)
    assert back == net
    assert back.to_json() == text


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 8).flatmap(lambda n: st.tuples(
    st.just(n),
    st.permutations(range(n)),
    st.lists(st.lists(st.integers(0, n - 2), max_size=3), max_size=5))))
def test_round_trip_random_swap_networks(args):
    n, perm, raw = args
    layers = []
    for at in raw:
        chosen = []
        for i in sorted(set(at)):
            if not chosen or i > chosen[-1] + 1:
                chosen.append(i)
        layers.append(SwapLayer(tuple(chosen)))
    net = SwapNetwork(n, LinearOrder(tuple((p,) for p in perm)), tuple(layers))
    net.check_structure()
    assert SwapNetwork.from_json(net.to_json()) == net


def test_depth_counts():
    net = hubbard_network(HubbardModel(3, 3))
    assert (net.swap_depth, net.interaction_depth) == (2, 4)
    assert len(net.to_text().splitlines()) == 6


@pytest.mark.parametrize("layer", [
    SwapLayer((0, 1)),
    SwapLayer((3,)),
    SwapLayer((-1,)),
    InteractLayer((Interaction(0, Term.HOP, ((0,), (1,))), Interaction(1, Term.HOP, ((1,), (2,))))),
    InteractLayer((Interaction(3, Term.HOP, ((3,), (4,))),)),
    InteractLayer((Interaction(0, Term.HOP, ((0,), (1,), (2,))),)),
])
def test_structure_errors(layer):
    with pytest.raises(MalformedNetwork):
        SwapNetwork(4, line(4), (layer,)).check_structure()


def test_site_records_may_share_positions_with_pairs():
    layer = InteractLayer((Interaction(0, Term.NUMBER_OP, ((0,),)), Interaction(0, Term.HOP, ((0,), (1,)))))
    SwapNetwork(2, line(2), (layer,)).check_structure()


@pytest.mark.parametrize("text", [
    "not json",
    '{"version":2,"num_positions":1,"initial_order":[[0]],"layers":[]}',
    '{"version":1,"num_positions":1,"initial_order":[[0]],"layers":[{"type":"teleport"}]}',
    '{"version":1,"num_positions":2,"initial_order":[[0],[1]],'
    '"layers":[{"type":"interact","pairs":[{"at":0,"term":"magic","sites":[[0],[1]]}]}]}',
    '{"version":1,"initial_order":[[0]],"layers":[]}',
])
def test_bad_documents(text):
    with pytest.raises(MalformedNetwork):
        SwapNetwork.from_json(text)


def test_text_and_dot_exports():
    net = hubbard_network(HubbardModel(2, 2))
    text = net.to_text()
    assert "swap     0:1 2:3" in text
    assert "hop:(1,0)-(0,0)" in text
    dot = net.to_dot()
    assert dot.startswith("graph G {") and '[label="L0"]' in dot
    assert dot.count(" -- ") == 4


def test_without_layer():
    net = hubbard_network(HubbardModel(3, 3))
    shorter = net.without_layer(2)
    assert len(shorter.layers) == len(net.layers) - 1
    assert shorter.swap_depth == 1
