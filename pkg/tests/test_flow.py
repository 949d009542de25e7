import random

import pytest

from flownuc import flow
from flownuc.errors import InputError, LimitError
from flownuc.flow import Edge, FlowNetwork
from flownuc.game import coalition_of
from flownuc.rational import rational

from _oracles import min_cut_value


def single_edge_net(capacity=5):
    return FlowNetwork(("s", "t"), "s", "t", (Edge("f1", "s", "t", rational(capacity), 1),))


def test_grand_coalition_flow_is_4(ten_net):
    assert flow.max_flow(ten_net) == 4


def test_subcoalition_flow_is_2(ten_net):
    allowed = ten_net.edges_owned_by(coalition_of((1, 4, 5, 8, 10)))
    assert flow.max_flow(ten_net, allowed) == 2


def test_no_edges_no_flow(ten_net):
    assert flow.max_flow(ten_net, ()) == 0


def test_unknown_edge_rejected(ten_net):
    with pytest.raises(InputError):
        flow.max_flow(ten_net, ("nope",))


def test_min_cuts_exact(ten_net):
    cuts = flow.enumerate_min_cuts(ten_net)
    assert sorted(map(sorted, cuts)) == sorted(
        map(sorted, [{"f4", "f5", "f6", "f7"}, {"f4", "f6", "f10"}])
    )
    for cut in cuts:
        cap = sum(
            (e.capacity for e in ten_net.edges if e.id in cut), rational(0)
        )
        assert cap == 4


def test_single_edge_cut():
    net = single_edge_net(5)
    cuts = flow.enumerate_min_cuts(net)
    assert cuts == [frozenset({"f1"})]
    assert flow.cut_allocation(net, cuts[0]) == (rational(5),)


def test_cut_allocations(ten_net):
    alloc = flow.cut_allocation(ten_net, {"f4", "f6", "f10"})
    assert alloc == tuple(rational(v) for v in (0, 0, 0, 1, 0, 1, 0, 0, 0, 2))
    alloc = flow.cut_allocation(ten_net, {"f4", "f5", "f6", "f7"})
    assert alloc == tuple(rational(v) for v in (0, 0, 0, 1, 1, 1, 1, 0, 0, 0))


def test_non_cut_rejected(ten_net):
    with pytest.raises(InputError):
        flow.cut_allocation(ten_net, {"f1", "f2"})


def test_audit_rejects_bad_networks():
    good = dict(nodes=("s", "a", "t"), source="s", sink="t")
    with pytest.raises(InputError, match="enters the source"):
        FlowNetwork(edges=(Edge("e", "a", "s", rational(1), 1),), **good)
    with pytest.raises(InputError, match="leaves the sink"):
        FlowNetwork(edges=(Edge("e", "t", "a", rational(1), 1),), **good)
    with pytest.raises(InputError, match="negative capacity"):
        FlowNetwork(edges=(Edge("e", "s", "t", rational(-1), 1),), **good)
    with pytest.raises(InputError, match="gaps"):
        FlowNetwork(edges=(Edge("e", "s", "t", rational(1), 3),), **good)
    with pytest.raises(InputError, match="source and sink"):
        FlowNetwork(("s",), "s", "s", ())
    with pytest.raises(InputError, match="duplicate edge id"):
        FlowNetwork(
            edges=(
                Edge("e", "s", "a", rational(1), 1),
                Edge("e", "a", "t", rational(1), 2),
            ),
            **good,
        )


def test_build_flow_game_basics(ten_net, ten_game):
    assert ten_game.n == 10
    assert ten_game.worth[ten_game.grand_coalition] == 4
    assert ten_game.worth[coalition_of((1, 4, 5, 8, 10))] == 2
    for i in range(10):
        assert ten_game.worth[1 << i] == 0  # no single player owns an s-t path


def test_build_flow_game_jobs_deterministic(ten_net, ten_game):
    assert flow.build_flow_game(ten_net, jobs=4) == ten_game


def test_player_limit():
    net = single_edge_net()
    with pytest.raises(LimitError):
        flow.build_flow_game(net, max_players=0)


def test_node_limit():
    with pytest.raises(LimitError):
        flow.enumerate_min_cuts(single_edge_net(), max_nodes=1)


def random_network(rng: random.Random):
    """Random audited DAG-ish network with <= 8 nodes and gapless owners."""
    inner = rng.randint(1, 6)
    nodes = ["s"] + [f"n{k}" for k in range(inner)] + ["t"]
    edges = []
    owner = 1
    for i, tail in enumerate(nodes[:-1]):
        for head in nodes[i + 1 :]:
            if tail == "s" and head == "t":
                continue  # keep at least two hops
            if rng.random() < 0.5:
                cap = rational(rng.randint(0, 8), rng.choice((1, 1, 2, 3)))
                edges.append(Edge(f"e{owner}", tail, head, cap, owner))
                owner += 1
    if not edges:
        edges.append(Edge("e1", "s", nodes[1], rational(1), 1))
    return FlowNetwork(tuple(nodes), "s", "t", tuple(edges))


def test_max_flow_equals_min_cut_on_random_networks():
    rng = random.Random(42)
    for _ in range(50):
        net = random_network(rng)
        assert flow.max_flow(net) == min_cut_value(net)


def test_monotonicity_on_random_edge_subsets():
    rng = random.Random(43)
    for _ in range(30):
        net = random_network(rng)
        ids = list(net.edge_ids())
        small = set(rng.sample(ids, rng.randint(0, len(ids))))
        extra = set(rng.sample(ids, rng.randint(0, len(ids))))
        assert flow.max_flow(net, small) <= flow.max_flow(net, small | extra)


def test_network_json_round_trip(tmp_path, ten_net):
    path = tmp_path / "net.json"
    flow.save_network(ten_net, path)
    assert flow.load_network(path) == ten_net


def test_network_parse_diagnostics(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"nodes": ["s","t"], "source": "s"')
    with pytest.raises(InputError, match=r"bad\.json:1:"):
        flow.load_network(bad)
    bad.write_text(
        '{"nodes": ["s","t"], "source": "s", "sink": "t",'
        ' "edges": [{"id": "f1", "tail": "s", "head": "t", "capacity": "x", "owner": 1}]}'
    )
    with pytest.raises(InputError, match=r"edges\[0\]\.capacity"):
        flow.load_network(bad)


def test_float_capacities_parse_exactly(tmp_path):
    path = tmp_path / "net.json"
    path.write_text(
        '{"nodes": ["s","t"], "source": "s", "sink": "t",'
        ' "edges": [{"id": "f1", "tail": "s", "head": "t", "capacity": 0.2, "owner": 1}]}'
    )
    net = flow.load_network(path)
    assert net.edges[0].capacity == rational(1, 5)
