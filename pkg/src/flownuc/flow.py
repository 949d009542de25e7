"""Owned-edge flow networks and the TU games they induce.

Each edge belongs to exactly one player; a coalition may route flow only
through edges its members own.  The induced game assigns every coalition the
value of a maximum source-to-sink flow over its edges, computed exactly with
shortest-augmenting-path search (plain Edmonds-Karp, which terminates in
O(VE) augmentations regardless of the rational capacities).

Minimum cuts are enumerated by brute force over source/sink bipartitions of
the node set and filtered to those whose crossing capacity equals the
max-flow value; at the intended problem sizes this doubles as a strong-
duality oracle.
"""

from __future__ import annotations

import json
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Optional

from .errors import InputError, LimitError
from .game import TUGame
from .rational import ZERO, Rational, format_rational, parse_rational, rational


@dataclass(frozen=True)
class Edge:
    id: str
    tail: str
    head: str
    capacity: Rational
    owner: int


@dataclass(frozen=True)
class FlowNetwork:
    """Directed network with per-edge capacities and owning players.

    Construction audits the data and raises ``InputError`` listing every
    problem found; nothing is silently repaired.  Instances are immutable.
    """

    nodes: tuple[str, ...]
    source: str
    sink: str
    edges: tuple[Edge, ...]

    def __post_init__(self):
        problems = []
        node_set = set(self.nodes)
        if len(node_set) != len(self.nodes):
            problems.append("duplicate node names")
        if self.source == self.sink:
            problems.append("source and sink must differ")
        for name, node in (("source", self.source), ("sink", self.sink)):
            if node not in node_set:
                problems.append(f"{name} {node!r} is not a listed node")
        seen_ids = set()
        owners = set()
        for e in self.edges:
            if e.id in seen_ids:
                problems.append(f"duplicate edge id {e.id!r}")
            seen_ids.add(e.id)
            for end, node in (("tail", e.tail), ("head", e.head)):
                if node not in node_set:
                    problems.append(f"edge {e.id!r}: {end} {node!r} is not a listed node")
            if e.head == self.source:
                problems.append(f"edge {e.id!r} enters the source")
            if e.tail == self.sink:
                problems.append(f"edge {e.id!r} leaves the sink")
            if e.capacity < 0:
                problems.append(f"edge {e.id!r}: negative capacity")
            if e.owner < 1:
                problems.append(f"edge {e.id!r}: owner ids are 1-based")
            else:
                owners.add(e.owner)
        if owners:
            expected = set(range(1, max(owners) + 1))
            missing = expected - owners
            if missing:
                problems.append(f"owner ids have gaps: missing {sorted(missing)}")
        if problems:
            raise InputError("invalid network: " + "; ".join(problems))

    @property
    def player_count(self) -> int:
        return max((e.owner for e in self.edges), default=0)

    def edge_ids(self) -> tuple[str, ...]:
        return tuple(e.id for e in self.edges)

    def edges_owned_by(self, coalition: int) -> frozenset[str]:
        """Edge ids owned by members of the coalition bitmask."""
        return frozenset(e.id for e in self.edges if coalition >> (e.owner - 1) & 1)


def max_flow(net: FlowNetwork, allowed: Iterable[str] | None = None) -> Rational:
    """Value of a maximum source-sink flow using only ``allowed`` edges.

    ``allowed`` defaults to every edge; unknown ids are rejected.  A
    disconnected instance simply yields 0.
    """
    if allowed is None:
        active = list(range(len(net.edges)))
    else:
        index = {e.id: k for k, e in enumerate(net.edges)}
        active = []
        for eid in allowed:
            if eid not in index:
                raise InputError(f"unknown edge id {eid!r}")
            active.append(index[eid])
        active = sorted(set(active))

    node_at = {name: k for k, name in enumerate(net.nodes)}
    s, t = node_at[net.source], node_at[net.sink]
    adj: list[list[tuple[int, int, bool]]] = [[] for _ in net.nodes]
    residual_fwd = {}
    residual_bwd = {}
    for k in active:
        e = net.edges[k]
        residual_fwd[k] = e.capacity
        residual_bwd[k] = ZERO
        adj[node_at[e.tail]].append((node_at[e.head], k, True))
        adj[node_at[e.head]].append((node_at[e.tail], k, False))

    total = ZERO
    while True:
        parent: list[Optional[tuple[int, int, bool]]] = [None] * len(net.nodes)
        parent[s] = (s, -1, True)
        queue = deque([s])
        while queue and parent[t] is None:
            u = queue.popleft()
            for v, k, fwd in adj[u]:
                if parent[v] is None and (residual_fwd[k] if fwd else residual_bwd[k]) > 0:
                    parent[v] = (u, k, fwd)
                    queue.append(v)
        if parent[t] is None:
            return total
        bottleneck = None
        v = t
        while v != s:
            u, k, fwd = parent[v]
            r = residual_fwd[k] if fwd else residual_bwd[k]
            bottleneck = r if bottleneck is None or r < bottleneck else bottleneck
            v = u
        v = t
        while v != s:
            u, k, fwd = parent[v]
            if fwd:
                residual_fwd[k] -= bottleneck
                residual_bwd[k] += bottleneck
            else:
                residual_bwd[k] -= bottleneck
                residual_fwd[k] += bottleneck
            v = u
        total += bottleneck


def coalition_value(net: FlowNetwork, coalition: int) -> Rational:
    """Max flow through the edges owned by the coalition's members."""
    return max_flow(net, net.edges_owned_by(coalition))


def build_flow_game(net: FlowNetwork, max_players: int = 20, jobs: int = 1) -> TUGame:
    """TU game with ``v(S)`` = coalition-restricted max flow, for all 2^n S.

    Refuses player counts beyond ``max_players`` (2^n max-flow runs).  With
    ``jobs > 1`` coalition values are computed in a thread pool and merged
    back in mask order, which is safe because networks are immutable.
    """
    n = net.player_count
    if n < 1:
        raise InputError("network has no owned edges, so no players")
    if n > max_players:
        raise LimitError(
            f"network has {n} players; building the game enumerates 2^{n} "
            f"coalitions, above the limit of {max_players}. Raise max_players "
            "(library) or FLOWNUC_MAX_PLAYERS (CLI) if you accept the cost."
        )
    owned = [net.edges_owned_by(1 << i) for i in range(n)]

    def value(mask: int) -> Rational:
        ids: set[str] = set()
        for i in range(n):
            if mask >> i & 1:
                ids.update(owned[i])
        return max_flow(net, ids)

    size = 1 << n
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            table = list(pool.map(value, range(size), chunksize=max(1, size // (4 * jobs))))
        table[0] = ZERO
    else:
        table = [ZERO] + [value(mask) for mask in range(1, size)]
    return TUGame(n, tuple(table))


def enumerate_min_cuts(net: FlowNetwork, max_nodes: int = 20) -> list[frozenset[str]]:
    """All minimum-capacity edge cuts, as sets of edge ids.

    Every source/sink bipartition of the nodes is enumerated; the crossing
    edge sets whose total capacity equals the max-flow value are collected,
    de-duplicated, and returned sorted by (size, edge order).
    """
    middle = [v for v in net.nodes if v not in (net.source, net.sink)]
    if len(middle) > max_nodes - 2:
        raise LimitError(
            f"{len(net.nodes)} nodes means 2^{len(middle)} bipartitions, above "
            f"the limit of 2^{max_nodes - 2}; raise max_nodes to proceed"
        )
    best = max_flow(net)
    order = {e.id: k for k, e in enumerate(net.edges)}
    found = set()
    for pick in range(1 << len(middle)):
        s_side = {net.source}
        for j, v in enumerate(middle):
            if pick >> j & 1:
                s_side.add(v)
        crossing = frozenset(
            e.id for e in net.edges if e.tail in s_side and e.head not in s_side
        )
        capacity = sum((net.edges[order[eid]].capacity for eid in crossing), ZERO)
        if capacity == best:
            found.add(crossing)
    return sorted(found, key=lambda cut: (len(cut), sorted(order[e] for e in cut)))


def cut_allocation(net: FlowNetwork, cut: Iterable[str]) -> tuple[Rational, ...]:
    """Payoff vector paying each player the capacity of their cut edges.

    ``cut`` must be one of the minimum cuts of the network (checked against
    the enumeration); the payoffs then total the grand-coalition value.
    """
    cut = frozenset(cut)
    if cut not in set(enumerate_min_cuts(net)):
        raise InputError("not a minimum cut of this network")
    n = net.player_count
    payoffs = [ZERO] * n
    for e in net.edges:
        if e.id in cut:
            payoffs[e.owner - 1] += e.capacity
    return tuple(payoffs)


# ---------------------------------------------------------------------------
# file format


def network_to_dict(net: FlowNetwork) -> dict:
    return {
        "nodes": list(net.nodes),
        "source": net.source,
        "sink": net.sink,
        "edges": [
            {
                "id": e.id,
                "tail": e.tail,
                "head": e.head,
                "capacity": format_rational(e.capacity),
                "owner": e.owner,
            }
            for e in net.edges
        ],
    }


def network_from_dict(data: dict) -> FlowNetwork:
    for key in ("nodes", "source", "sink", "edges"):
        if key not in data:
            raise InputError(f"network file: missing {key!r}")
    nodes = data["nodes"]
    if not isinstance(nodes, list) or not all(isinstance(v, str) for v in nodes):
        raise InputError("network file: 'nodes' must be a list of strings")
    raw_edges = data["edges"]
    if not isinstance(raw_edges, list):
        raise InputError("network file: 'edges' must be a list")
    edges = []
    for idx, entry in enumerate(raw_edges):
        where = f"edges[{idx}]"
        if not isinstance(entry, dict):
            raise InputError(f"network file: {where} must be an object")
        for key in ("id", "tail", "head", "capacity", "owner"):
            if key not in entry:
                raise InputError(f"network file: {where} is missing {key!r}")
        cap = entry["capacity"]
        if isinstance(cap, (int, Fraction)):
            cap = rational(cap)
        else:
            try:
                cap = parse_rational(str(cap))
            except InputError:
                raise InputError(f"network file: {where}.capacity is not a rational") from None
        owner = entry["owner"]
        if not isinstance(owner, int):
            raise InputError(f"network file: {where}.owner must be an integer")
        edges.append(Edge(str(entry["id"]), str(entry["tail"]), str(entry["head"]), cap, owner))
    return FlowNetwork(tuple(nodes), str(data["source"]), str(data["sink"]), tuple(edges))


def load_network(path: str | Path) -> FlowNetwork:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{p}: {exc.strerror or exc}") from None
    try:
        data = json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise InputError(f"{p}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise InputError(f"{p}: top-level value must be an object")
    try:
        return network_from_dict(data)
    except InputError as exc:
        raise InputError(f"{p}: {exc}") from None


def save_network(net: FlowNetwork, path: str | Path) -> None:
    Path(path).write_text(json.dumps(network_to_dict(net), indent=2) + "\n", encoding="utf-8")
