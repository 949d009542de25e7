import random
import time
from pathlib import Path

import pytest

from flownuc import catalog, flow, game, solver
from flownuc.rational import ZERO, rational

REPO = Path(__file__).resolve().parents[1]


@pytest.fixture(scope="session")
def ten_net():
    return catalog.ten_player_network()


@pytest.fixture(scope="session")
def ten_game(ten_net):
    return flow.build_flow_game(ten_net)


@pytest.fixture(scope="session")
def claimed():
    return catalog.ten_player_claimed_solution()


@pytest.fixture(scope="session")
def expected_nu():
    return catalog.ten_player_nucleolus()


@pytest.fixture(scope="session")
def nucleolus_run(ten_game):
    """Timed nucleolus solve of the ten-player game; reused by many tests."""
    start = time.perf_counter()
    result = solver.solve(ten_game, solver.NUCLEOLUS)
    return result, time.perf_counter() - start


@pytest.fixture(scope="session")
def prenucleolus_run(ten_game):
    start = time.perf_counter()
    result = solver.solve(ten_game, solver.PRENUCLEOLUS)
    return result, time.perf_counter() - start


def random_imputation(g, rng: random.Random):
    """Exact random imputation: individual worths plus weighted surplus."""
    surplus = g.worth[g.grand_coalition] - sum((g.worth[1 << i] for i in range(g.n)), ZERO)
    weights = [rng.randint(0, 99) for _ in range(g.n)]
    if sum(weights) == 0:
        weights[rng.randrange(g.n)] = 1
    total = sum(weights)
    return tuple(
        g.worth[1 << i] + surplus * rational(weights[i], total) for i in range(g.n)
    )


def corpus_games():
    """Ten named games exercising the solvers (flow game added by callers)."""
    return [
        ("unanimity-3", catalog.unanimity_game(3, (1, 2))),
        ("unanimity-4", catalog.unanimity_game(4, (2, 4))),
        ("additive-5", catalog.additive_game([3, rational(1, 2), 2, 0, 1])),
        ("symmetric-2", catalog.symmetric_game(2, [0, 0, 1])),
        ("symmetric-3", catalog.symmetric_game(3, [0, 0, 1, 3])),
        ("glove-3", catalog.three_player_glove_game()),
        ("majority-3", catalog.symmetric_game(3, [0, 0, 1, 1])),
        ("ir-binding-3", game.TUGame.from_mapping(3, {0b011: 4, 0b111: 3})),
        (
            "market-4",
            game.TUGame.from_function(
                4, lambda m: min(bin(m & 0b0011).count("1"), bin(m & 0b1100).count("1"))
            ),
        ),
    ]
