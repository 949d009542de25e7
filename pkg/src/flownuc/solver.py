"""Nucleolus and pre-nucleolus by nested LPs, plus the certification battery
that any proposed solution must face: balanced-collection level checks and
kernel / pre-kernel surplus tests.

The staged scheme minimizes the worst excess, then pins down the coalitions
whose excess is maximal in *every* optimum and repeats on the optimal face.
"Tight in every optimum" is decided by maximizing each tight row's slack
over the face (a zero maximum is the certificate), never by looking at one
optimal basis, and a full-rank equality system alone never ends the run
without the balanced-collection verification passing afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import lp
from .errors import InputError
from .game import (
    Allocation,
    Coalition,
    TUGame,
    coalition_str,
    coalition_sums,
    proper_coalitions,
)
from .rational import ONE, ZERO, Rational


@dataclass(frozen=True)
class StageState:
    """Snapshot after one stage: its optimal excess level, the equalities
    fixed so far (coalition, pinned x(S) value), and one optimal payoff."""

    index: int
    eps: Rational
    fixed: tuple[tuple[Coalition, Rational], ...]
    sample: tuple[Rational, ...]


@dataclass(frozen=True)
class KohlbergLevel:
    alpha: Rational
    collection: tuple[Coalition, ...]
    result: lp.BalancednessResult


@dataclass(frozen=True)
class KohlbergReport:
    """Per-level balancedness certificates for the sorted excess levels.

    ``levels`` carries one entry per distinct excess value, largest first,
    each with the cumulative tight collection and its certificate.  The scan
    stops at the first unbalanced level (recorded in ``first_failing``);
    the verdict is True iff every level was reached and balanced.
    """

    mode: str
    levels: tuple[KohlbergLevel, ...]
    verdict: bool
    first_failing: Optional[int] = None


@dataclass(frozen=True)
class KernelReport:
    prekernel: bool
    kernel: bool
    witnesses: tuple[tuple[int, int, Rational, Rational], ...]


@dataclass(frozen=True)
class SolverResult:
    allocation: Allocation
    stages: tuple[StageState, ...]
    certificate: KohlbergReport

    @property
    def verified(self) -> bool:
        return self.certificate.verdict


PRENUCLEOLUS, NUCLEOLUS = "prenucleolus", "nucleolus"


def _imputation_rows(game: TUGame) -> list[lp.FaceRow]:
    return [lp.FaceRow(1 << i, lp.GREATER, game.worth[1 << i]) for i in range(game.n)]


def _stage_scheme(game: TUGame, mode: str) -> tuple[Allocation, tuple[StageState, ...]]:
    n = game.n
    full = game.grand_coalition
    v = game.worth
    ir_rows: list[lp.FaceRow] = []
    if mode == NUCLEOLUS:
        if sum((v[1 << i] for i in range(n)), ZERO) > v[full]:
            raise InputError("empty imputation set: singleton worths exceed v(N)")
        ir_rows = _imputation_rows(game)

    basis = lp.RowBasis(n)
    basis.add([ONE] * n)  # efficiency pins one dimension from the start
    fixed: list[tuple[Coalition, Rational]] = []
    pool = list(proper_coalitions(n))
    stages: list[StageState] = []
    prev_eps: Optional[Rational] = None

    while basis.rank < n:
        assert pool, "incidence rows ran out before the solution was determined"
        rows = [lp.FaceRow(full, lp.EQUAL, v[full])]
        rows += [lp.FaceRow(s, lp.EQUAL, r) for s, r in fixed]
        rows += [lp.FaceRow(s, lp.GREATER, v[s], eps_coef=ONE) for s in pool]
        rows += ir_rows
        out = lp.solve_face_lp(game.n, rows, eps_objective=ONE)
        if out.status != lp.OPTIMAL:
            raise RuntimeError("stage program must have an optimum")
        eps, xstar = out.eps, out.x
        assert prev_eps is None or eps < prev_eps, "stage levels must strictly decrease"
        prev_eps = eps

        # face of this stage's optima, epsilon substituted at its optimal value
        face = [lp.FaceRow(full, lp.EQUAL, v[full])]
        face += [lp.FaceRow(s, lp.EQUAL, r) for s, r in fixed]
        face += [lp.FaceRow(s, lp.GREATER, v[s] - eps) for s in pool]
        face += ir_rows

        # rows tight at the returned optimum are only candidates; a row is
        # fixed when its slack is zero over the whole face.  The combined
        # slack of all undecided candidates is maximized at once: a zero
        # maximum proves every one of them tight everywhere (slacks are
        # nonnegative on the face), a positive one rules out the rows the
        # probe point leaves slack, and the loop repeats on the rest.
        sums = coalition_sums(xstar)
        pending = [s for s in pool if sums[s] == v[s] - eps]
        always_tight: list[Coalition] = []
        while pending:
            probe = [ZERO] * n
            for s in pending:
                for i in range(n):
                    if s >> i & 1:
                        probe[i] -= ONE
            slack_out = lp.solve_face_lp(game.n, face, objective_x=probe)
            if slack_out.status != lp.OPTIMAL:
                raise RuntimeError("slack probe must have an optimum")
            bound = sum((v[s] - eps for s in pending), ZERO)
            if -slack_out.value == bound:
                always_tight.extend(pending)
                break
            probe_sums = coalition_sums(slack_out.x)
            still = [s for s in pending if probe_sums[s] == v[s] - eps]
            assert len(still) < len(pending)
            pending = still
        assert always_tight, "every stage fixes at least one coalition"

        for s in always_tight:
            pool.remove(s)
            fixed.append((s, v[s] - eps))
            basis.add([ONE if s >> i & 1 else ZERO for i in range(n)])
        stages.append(StageState(len(stages) + 1, eps, tuple(fixed), xstar))

    rows_mat = [[ONE] * n] + [
        [ONE if s >> i & 1 else ZERO for i in range(n)] for s, _ in fixed
    ]
    rhs = [v[full]] + [r for _, r in fixed]
    x = lp.solve_equalities(rows_mat, rhs)

    # safety: the determined point satisfies everything that was left loose
    sums = coalition_sums(x)
    if pool and prev_eps is not None:
        assert all(sums[s] >= v[s] - prev_eps for s in pool)
    if mode == NUCLEOLUS:
        assert all(x[i] >= v[1 << i] for i in range(n))
    return tuple(x), tuple(stages)


def solve(game: TUGame, mode: str = NUCLEOLUS) -> SolverResult:
    """Run the staged scheme, then certify the result levelwise.

    The returned ``SolverResult.verified`` flag is the verdict of the
    balanced-collection verification, which is always run: reaching a
    full-rank equality system is how the stage loop stops, not evidence of
    correctness on its own.
    """
    if mode not in (PRENUCLEOLUS, NUCLEOLUS):
        raise InputError(f"unknown mode {mode!r}")
    x, stages = _stage_scheme(game, mode)
    report = kohlberg_verify(game, x, mode)
    if not report.verdict:
        raise RuntimeError(
            "solver output failed its own balanced-collection certification; "
            "this is a bug, please report the game"
        )
    return SolverResult(x, stages, report)


def prenucleolus(game: TUGame) -> Allocation:
    """The unique payoff vector lexicographically minimizing the sorted
    excesses over all efficient payoff vectors."""
    return solve(game, PRENUCLEOLUS).allocation


def nucleolus(game: TUGame) -> Allocation:
    """Same lexicographic minimizer over imputations (individually rational
    efficient payoffs); requires a nonempty imputation set."""
    return solve(game, NUCLEOLUS).allocation


def kohlberg_verify(game: TUGame, x: Sequence[Rational], mode: str = NUCLEOLUS) -> KohlbergReport:
    """Levelwise balanced-collection check of a proposed solution.

    Excess levels are scanned from the largest down; level k's collection is
    every coalition with excess >= that level's value.  In nucleolus mode the
    singletons pinned at their individual worth may assist with weight >= 0
    while collection members still need strictly positive weight.  All levels
    are checked (stopping early only once a level fails); a final level over
    all proper coalitions is always balanced, so a True verdict really did
    survey the whole excess range.
    """
    if mode not in (PRENUCLEOLUS, NUCLEOLUS):
        raise InputError(f"unknown mode {mode!r}")
    if len(x) != game.n:
        raise InputError("allocation length does not match game")
    sums = coalition_sums(x)
    full = game.grand_coalition
    if sums[full] != game.worth[full]:
        raise InputError("allocation is not efficient; level analysis undefined")
    helpers_all: list[Coalition] = []
    if mode == NUCLEOLUS:
        for i in range(game.n):
            if x[i] < game.worth[1 << i]:
                raise InputError("allocation is not an imputation (individual rationality fails)")
            if x[i] == game.worth[1 << i]:
                helpers_all.append(1 << i)

    by_level: dict[Rational, list[Coalition]] = {}
    for m in proper_coalitions(game.n):
        by_level.setdefault(game.worth[m] - sums[m], []).append(m)
    levels = sorted(by_level, reverse=True)

    reports: list[KohlbergLevel] = []
    cumulative: list[Coalition] = []
    in_cumulative: set[Coalition] = set()
    seed: Optional[dict[Coalition, Rational]] = None
    verdict = True
    first_failing = None
    for idx, alpha in enumerate(levels):
        cumulative.extend(by_level[alpha])
        in_cumulative.update(by_level[alpha])
        helpers = [h for h in helpers_all if h not in in_cumulative]
        result = lp.certify_balanced(cumulative, helpers, game.n, seed=seed)
        reports.append(KohlbergLevel(alpha, tuple(cumulative), result))
        if not result.balanced:
            verdict = False
            first_failing = idx
            break
        seed = result.weights
    return KohlbergReport(mode, tuple(reports), verdict, first_failing)


def max_surplus(game: TUGame, x: Sequence[Rational], i: int, j: int) -> Rational:
    """Largest excess over coalitions containing player i but not player j."""
    if i == j:
        raise InputError("surplus needs two distinct players")
    if not (1 <= i <= game.n and 1 <= j <= game.n):
        raise InputError("player id out of range")
    if len(x) != game.n:
        raise InputError("allocation length does not match game")
    sums = coalition_sums(x)
    return _surplus_from_sums(game, sums, i, j)


def _surplus_from_sums(game: TUGame, sums, i: int, j: int) -> Rational:
    others = game.grand_coalition & ~(1 << (i - 1)) & ~(1 << (j - 1))
    bit_i = 1 << (i - 1)
    best = None
    sub = others
    while True:
        mask = sub | bit_i
        e = game.worth[mask] - sums[mask]
        if best is None or e > best:
            best = e
        if sub == 0:
            break
        sub = (sub - 1) & others
    return best


def surplus_matrix(game: TUGame, x: Sequence[Rational]) -> dict[tuple[int, int], Rational]:
    """All pairwise maximum surpluses s[i, j] for i != j."""
    if len(x) != game.n:
        raise InputError("allocation length does not match game")
    sums = coalition_sums(x)
    out = {}
    for i in range(1, game.n + 1):
        for j in range(1, game.n + 1):
            if i != j:
                out[(i, j)] = _surplus_from_sums(game, sums, i, j)
    return out


def kernel_checks(game: TUGame, x: Sequence[Rational]) -> KernelReport:
    """Pre-kernel (all surpluses balanced) and kernel membership of x.

    The kernel test compares surpluses only where the outweighed player is
    strictly above their individual worth; it additionally requires x to be
    an imputation, so a non-imputation is reported as outside the kernel.
    """
    s = surplus_matrix(game, x)
    witnesses = []
    prekernel = True
    kernel = True
    imputation = sum(x, ZERO) == game.worth[game.grand_coalition] and all(
        x[i] >= game.worth[1 << i] for i in range(game.n)
    )
    for i in range(1, game.n + 1):
        for j in range(i + 1, game.n + 1):
            sij, sji = s[(i, j)], s[(j, i)]
            if sij != sji:
                prekernel = False
                witnesses.append((i, j, sij, sji))
            if sij > sji and x[j - 1] > game.worth[1 << (j - 1)]:
                kernel = False
            if sji > sij and x[i - 1] > game.worth[1 << (i - 1)]:
                kernel = False
    if not imputation:
        kernel = False
    return KernelReport(prekernel, kernel, tuple(witnesses))


def describe_level(level: KohlbergLevel) -> str:
    """One-line human summary of a level result (used by the CLI)."""
    head = f"level alpha={level.alpha} with {len(level.collection)} coalitions"
    if level.result.balanced:
        return head + ": balanced"
    if level.result.infeasible:
        return head + ": not balanced (no nonnegative cover exists)"
    return head + f": not balanced (member {coalition_str(level.result.witness)} forced to weight 0)"
