import pytest

from flownuc import catalog, lp, solver
from flownuc.errors import InputError
from flownuc.game import TUGame
from flownuc.rational import ZERO, rational


def test_flow_nucleolus_passes(nucleolus_run):
    result, _ = nucleolus_run
    report = result.certificate
    assert report.verdict and report.first_failing is None
    alphas = [level.alpha for level in report.levels]
    assert all(a > b for a, b in zip(alphas, alphas[1:]))
    sizes = [len(level.collection) for level in report.levels]
    assert all(a < b for a, b in zip(sizes, sizes[1:]))
    # nested cumulative collections
    for earlier, later in zip(report.levels, report.levels[1:]):
        assert set(earlier.collection) < set(later.collection)
    # the last level covers every proper nonempty coalition
    assert sizes[-1] == (1 << 10) - 2
    assert report.verdict == all(level.result.balanced for level in report.levels)


def test_flow_claimed_solution_fails(ten_game, claimed):
    report = solver.kohlberg_verify(ten_game, claimed, solver.NUCLEOLUS)
    assert not report.verdict
    assert report.first_failing is not None
    failing = report.levels[report.first_failing]
    assert not failing.result.balanced


def test_level_certificates_revalidate(nucleolus_run):
    result, _ = nucleolus_run
    for level in result.certificate.levels[:6]:
        weights = level.result.weights
        totals = [ZERO] * 10
        for mask, w in weights.items():
            assert w > 0
            for i in range(10):
                if mask >> i & 1:
                    totals[i] += w
        assert all(t == 1 for t in totals)
        assert all(mask in weights for mask in level.collection)


def test_additive_game_single_level():
    g = catalog.additive_game([1, 2, 3])
    x = (rational(1), rational(2), rational(3))
    for mode in (solver.PRENUCLEOLUS, solver.NUCLEOLUS):
        report = solver.kohlberg_verify(g, x, mode)
        assert report.verdict
        assert len(report.levels) == 1
        assert report.levels[0].alpha == 0


def test_mode_semantics_on_ir_binding_game():
    g = TUGame.from_mapping(3, {0b011: 4, 0b111: 3})
    x = (rational(3, 2), rational(3, 2), ZERO)
    assert solver.kohlberg_verify(g, x, solver.NUCLEOLUS).verdict
    report = solver.kohlberg_verify(g, x, solver.PRENUCLEOLUS)
    assert not report.verdict
    # top level is {1,2} alone, which cannot cover player 3 without the
    # individually-rational singleton helper that only nucleolus mode grants
    assert report.first_failing == 0
    assert report.levels[0].result.infeasible


def test_inefficient_allocation_rejected(ten_game):
    with pytest.raises(InputError, match="efficient"):
        solver.kohlberg_verify(ten_game, (ZERO,) * 10, solver.PRENUCLEOLUS)


def test_non_imputation_rejected_in_nucleolus_mode():
    g = TUGame.from_mapping(2, {0b01: 1, 0b11: 1})
    x = (ZERO, rational(1))  # efficient but x1 < v({1})
    with pytest.raises(InputError, match="imputation"):
        solver.kohlberg_verify(g, x, solver.NUCLEOLUS)
    report = solver.kohlberg_verify(g, x, solver.PRENUCLEOLUS)
    assert not report.verdict  # and it is not the prenucleolus either


def test_wrong_solutions_fail_on_small_games():
    g = catalog.unanimity_game(3, (1, 2))
    for bad in [(1, 0, 0), (0, 1, 0), (rational(1, 3),) * 3]:
        x = tuple(map(rational, bad))
        report = solver.kohlberg_verify(g, x, solver.NUCLEOLUS)
        assert not report.verdict, bad
    good = (rational(1, 2), rational(1, 2), ZERO)
    assert solver.kohlberg_verify(g, good, solver.NUCLEOLUS).verdict


def test_single_player_report_vacuous():
    g = TUGame(1, (ZERO, rational(5)))
    report = solver.kohlberg_verify(g, (rational(5),), solver.NUCLEOLUS)
    assert report.verdict and report.levels == ()


def test_describe_level_mentions_witness():
    result = lp.BalancednessResult(False, witness=0b101)
    level = solver.KohlbergLevel(rational(1, 2), (0b101,), result)
    assert "{1,3}" in solver.describe_level(level)
