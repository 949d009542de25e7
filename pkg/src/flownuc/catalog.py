"""Named example instances used by the demos, the CLI report and the tests."""

from __future__ import annotations

from typing import Iterable, Sequence

from .flow import Edge, FlowNetwork
from .game import TUGame, coalition_of
from .rational import ZERO, Rational, RationalLike, rational


def ten_player_network() -> FlowNetwork:
    """The bundled 10-player, 6-node owned-edge network (examples/flow10.json).

    Its induced game has grand-coalition value 4, exactly two minimum cuts,
    and a nucleolus with denominator 15; the audit suite reproduces all of
    those numbers from this instance.
    """
    caps = {1: 3, 2: 2, 9: 3, 10: 2}
    links = [
        ("s", "1"), ("s", "2"), ("1", "2"), ("1", "3"), ("1", "4"),
        ("2", "3"), ("2", "4"), ("3", "4"), ("3", "t"), ("4", "t"),
    ]
    edges = tuple(
        Edge(f"f{k}", tail, head, rational(caps.get(k, 1)), k)
        for k, (tail, head) in enumerate(links, start=1)
    )
    return FlowNetwork(("s", "1", "2", "3", "4", "t"), "s", "t", edges)


def ten_player_claimed_solution() -> tuple[Rational, ...]:
    """Allocation a flawed staged-LP solver reported as the nucleolus of the
    ten-player game; kept as an audit fixture (it is not even in the core)."""
    return tuple(rational(p, 5) for p in (5, 1, 0, 1, 2, 2, 3, 0, 5, 1))


def ten_player_nucleolus() -> tuple[Rational, ...]:
    """The actual nucleolus of the ten-player game (exact fifteenths)."""
    return tuple(rational(p, 15) for p in (11, 3, 0, 5, 3, 9, 5, 0, 8, 16))


def unanimity_game(n: int, carrier: Iterable[int]) -> TUGame:
    """v(S) = 1 iff S contains every carrier player."""
    need = coalition_of(carrier)
    return TUGame.from_function(n, lambda m: 1 if m & need == need else 0)


def additive_game(values: Sequence[RationalLike]) -> TUGame:
    """v(S) = sum of per-player values over S."""
    a = [rational(v) for v in values]
    n = len(a)

    def worth(mask: int) -> Rational:
        return sum((a[i] for i in range(n) if mask >> i & 1), ZERO)

    return TUGame.from_function(n, worth)


def symmetric_game(n: int, by_size: Sequence[RationalLike]) -> TUGame:
    """v(S) depends only on |S|; ``by_size[k]`` is the worth of size-k coalitions."""
    if len(by_size) != n + 1:
        raise ValueError("need one worth per coalition size 0..n")
    vals = [rational(v) for v in by_size]
    return TUGame.from_function(n, lambda m: vals[bin(m).count("1")])


def three_player_glove_game() -> TUGame:
    """v(S) = 1 iff S contains player 1 and at least one other player."""
    return TUGame.from_function(3, lambda m: 1 if (m & 1) and m not in (0, 1) else 0)
