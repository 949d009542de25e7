"""Exact rational linear programming and balanced-collection certification.

The solver is a two-phase primal simplex over a dense tableau of exact
rationals with Bland's anti-cycling pivot rule.  Every optimal solve returns
a dual vector and reduced costs and is certificate-checked on the spot:
primal feasibility, complementary slackness and strong duality must hold as
exact rational identities, otherwise a ``RuntimeError`` is raised.

``solve_face_lp`` handles the package's recurring LP shape (a handful of
payoff variables constrained by one row per coalition) by handing the
*dual* program (few rows, many columns) to the simplex engine and reading
the payoff vector back off the dual multipliers.  At two-digit player counts
the primal orientation would mean thousands of tableau rows, which dense
exact pivoting cannot afford.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import InputError
from .rational import ONE, ZERO, Rational, RationalLike, rational

LESS, EQUAL, GREATER = "<=", "=", ">="
_RELATIONS = (LESS, EQUAL, GREATER)

OPTIMAL, INFEASIBLE, UNBOUNDED = "optimal", "infeasible", "unbounded"

#: Counters over all solves in this process; ``verified`` counts optimal
#: solves whose exact optimality certificate was checked (always equal to
#: ``optimal`` unless a check raised).
solve_stats = {"optimal": 0, "infeasible": 0, "unbounded": 0, "verified": 0}

_PIVOT_LIMIT = 200_000


def _q(value: RationalLike) -> Rational:
    return rational(value) if not isinstance(value, Rational) else value


@dataclass(frozen=True)
class LinearProgram:
    """min/max ``objective @ x`` subject to rows ``coeffs @ x REL rhs``.

    Variables are free by default; ``lower``/``upper`` give optional
    per-variable bounds.
    """

    objective: tuple[Rational, ...]
    sense: str
    rows: tuple[tuple[tuple[Rational, ...], str, Rational], ...]
    lower: tuple[Optional[Rational], ...]
    upper: tuple[Optional[Rational], ...]

    @staticmethod
    def build(
        objective: Sequence[RationalLike],
        sense: str = "min",
        rows: Iterable[tuple[Sequence[RationalLike], str, RationalLike]] = (),
        lower: Sequence[Optional[RationalLike]] | None = None,
        upper: Sequence[Optional[RationalLike]] | None = None,
    ) -> "LinearProgram":
        if sense not in ("min", "max"):
            raise InputError(f"unknown objective sense {sense!r}")
        obj = tuple(_q(c) for c in objective)
        n = len(obj)
        norm_rows = []
        for coeffs, rel, rhs in rows:
            if rel not in _RELATIONS:
                raise InputError(f"unknown relation {rel!r}")
            coeffs = tuple(_q(c) for c in coeffs)
            if len(coeffs) != n:
                raise InputError("constraint width does not match objective")
            norm_rows.append((coeffs, rel, _q(rhs)))

        def norm_bounds(b):
            if b is None:
                return (None,) * n
            if len(b) != n:
                raise InputError("bound vector width does not match objective")
            return tuple(None if v is None else _q(v) for v in b)

        return LinearProgram(obj, sense, tuple(norm_rows), norm_bounds(lower), norm_bounds(upper))

    @property
    def num_vars(self) -> int:
        return len(self.objective)


@dataclass
class LpOutcome:
    """Result of a solve; solution/duals are present only when optimal."""

    program: LinearProgram
    status: str
    value: Optional[Rational] = None
    solution: Optional[tuple[Rational, ...]] = None
    duals: Optional[tuple[Rational, ...]] = None
    reduced_costs: Optional[tuple[Rational, ...]] = None

    def dual_objective(self) -> Rational:
        """Exact dual objective value; equals ``value`` at optimality."""
        if self.status != OPTIMAL:
            raise ValueError("dual objective only defined for optimal outcomes")
        p = self.program
        total = ZERO
        for y, (_, _, rhs) in zip(self.duals, p.rows):
            total += y * rhs
        for j, d in enumerate(self.reduced_costs):
            if not d:
                continue
            at_lower = (d > 0) == (p.sense == "min")
            bound = p.lower[j] if at_lower else p.upper[j]
            if bound is None:
                raise RuntimeError("nonzero reduced cost on an unbounded side")
            total += d * bound
        return total


def check_certificates(outcome: LpOutcome) -> None:
    """Raise ``RuntimeError`` unless the optimal outcome is exactly certified.

    Checks primal feasibility, dual sign conventions, complementary
    slackness and equality of primal and dual objective values, all in
    exact arithmetic.
    """
    p, x, y, d = outcome.program, outcome.solution, outcome.duals, outcome.reduced_costs
    minimizing = p.sense == "min"

    def fail(msg):
        raise RuntimeError(f"internal LP certificate violation: {msg}")

    for j, v in enumerate(x):
        if p.lower[j] is not None and v < p.lower[j]:
            fail(f"x[{j}] below lower bound")
        if p.upper[j] is not None and v > p.upper[j]:
            fail(f"x[{j}] above upper bound")
    value = sum((c * v for c, v in zip(p.objective, x)), ZERO)
    if value != outcome.value:
        fail("objective value mismatch")
    for i, (coeffs, rel, rhs) in enumerate(p.rows):
        lhs = sum((c * v for c, v in zip(coeffs, x) if c), ZERO)
        if rel == LESS and lhs > rhs:
            fail(f"row {i} violated")
        if rel == GREATER and lhs < rhs:
            fail(f"row {i} violated")
        if rel == EQUAL and lhs != rhs:
            fail(f"row {i} violated")
        yi = y[i]
        if yi:
            if lhs != rhs:
                fail(f"row {i}: nonzero dual on slack row")
            want_nonneg = (rel == GREATER) == minimizing
            if rel != EQUAL and ((yi > 0) != want_nonneg):
                fail(f"row {i}: dual sign")
    for j, dj in enumerate(d):
        if not dj:
            continue
        at_lower = (dj > 0) == minimizing
        bound = p.lower[j] if at_lower else p.upper[j]
        if bound is None or x[j] != bound:
            fail(f"variable {j}: reduced cost not complementary")
    if outcome.dual_objective() != value:
        fail("strong duality gap")
    solve_stats["verified"] += 1


# ---------------------------------------------------------------------------
# standard form + simplex


class _Std:
    """Equality standard form ``min c@z, A z = b, z >= 0`` plus recovery maps."""

    def __init__(self, p: LinearProgram):
        n = p.num_vars
        self.p = p
        self.sense_mult = ONE if p.sense == "min" else -ONE
        cost_in = [c * self.sense_mult for c in p.objective]

        # variable substitutions: x_j = off_j + sum(sign * z_col)
        self.offsets = [ZERO] * n
        self.var_cols: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        cols_cost: list[Rational] = []
        bound_rows: list[tuple[int, Rational]] = []  # (col, width) for l<u<inf
        self.infeasible_bounds = False
        for j in range(n):
            lo, up = p.lower[j], p.upper[j]
            if lo is not None and up is not None and lo > up:
                self.infeasible_bounds = True
            if lo is not None and up is not None and lo == up:
                self.offsets[j] = lo
                continue
            if lo is not None:
                self.offsets[j] = lo
                self.var_cols[j].append((len(cols_cost), 1))
                cols_cost.append(cost_in[j])
                if up is not None:
                    bound_rows.append((len(cols_cost) - 1, up - lo))
            elif up is not None:
                self.offsets[j] = up
                self.var_cols[j].append((len(cols_cost), -1))
                cols_cost.append(-cost_in[j])
            else:
                self.var_cols[j].append((len(cols_cost), 1))
                cols_cost.append(cost_in[j])
                self.var_cols[j].append((len(cols_cost), -1))
                cols_cost.append(-cost_in[j])
        self.obj_const = sum((cost_in[j] * self.offsets[j] for j in range(n)), ZERO)

        # rows: input rows first, then internal upper-bound rows
        rows: list[list[Rational]] = []
        rhs: list[Rational] = []
        rels: list[str] = []
        self.row_ids: list[tuple[str, int, int]] = []  # (kind, index, sign)
        nstruct = len(cols_cost)
        for i, (coeffs, rel, b) in enumerate(p.rows):
            row = [ZERO] * nstruct
            shift = b
            for j, c in enumerate(coeffs):
                if not c:
                    continue
                shift -= c * self.offsets[j]
                for col, sgn in self.var_cols[j]:
                    row[col] += c if sgn > 0 else -c
            rows.append(row)
            rhs.append(shift)
            rels.append(rel)
            self.row_ids.append(("input", i, 1))
        for col, width in bound_rows:
            row = [ZERO] * nstruct
            row[col] = ONE
            rows.append(row)
            rhs.append(width)
            rels.append(LESS)
            self.row_ids.append(("bound", col, 1))

        # slacks, then rhs sign normalization
        m = len(rows)
        self.slack_of_row = [None] * m
        nslack = sum(1 for r in rels if r != EQUAL)
        at = nstruct
        for i in range(m):
            rows[i].extend([ZERO] * nslack)
            if rels[i] != EQUAL:
                rows[i][at] = ONE if rels[i] == LESS else -ONE
                self.slack_of_row[i] = at
                at += 1
        cols_cost.extend([ZERO] * nslack)
        for i in range(m):
            if rhs[i] < 0:
                rows[i] = [-v for v in rows[i]]
                rhs[i] = -rhs[i]
                kind, idx, sgn = self.row_ids[i]
                self.row_ids[i] = (kind, idx, -sgn)

        self.rows = rows
        self.rhs = rhs
        self.cost = cols_cost
        self.nstruct = nstruct


def _pivot(rows, rhs, cost, basis, r, c, zbox):
    prow = rows[r]
    piv = prow[c]
    if piv != 1:
        inv = 1 / piv
        rows[r] = prow = [v * inv if v else v for v in prow]
        rhs[r] *= inv
    nz = [(k, v) for k, v in enumerate(prow) if v]
    for i, row in enumerate(rows):
        if i == r:
            continue
        f = row[c]
        if f:
            for k, v in nz:
                row[k] -= f * v
            rhs[i] -= f * rhs[r]
    f = cost[c]
    if f:
        for k, v in nz:
            cost[k] -= f * v
        zbox[0] -= f * rhs[r]
    basis[r] = c


def _simplex(rows, rhs, cost, basis, zbox) -> str:
    """Bland's rule loop on a canonical tableau; returns optimal/unbounded."""
    ncols = len(cost)
    pivots = 0
    while True:
        enter = -1
        for j in range(ncols):
            if cost[j] < 0:
                enter = j
                break
        if enter < 0:
            return OPTIMAL
        leave, best, leave_var = -1, None, None
        for i, row in enumerate(rows):
            a = row[enter]
            if a > 0:
                ratio = rhs[i] / a
                if best is None or ratio < best or (ratio == best and basis[i] < leave_var):
                    leave, best, leave_var = i, ratio, basis[i]
        if leave < 0:
            return UNBOUNDED
        _pivot(rows, rhs, cost, basis, leave, enter, zbox)
        pivots += 1
        if pivots > _PIVOT_LIMIT:
            raise RuntimeError("simplex pivot limit exceeded")


def _gauss_solve(matrix: list[list[Rational]], rhs: list[Rational]) -> list[Rational]:
    """Solve a square nonsingular rational system by Gaussian elimination."""
    m = len(matrix)
    a = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(m):
        piv = next((r for r in range(col, m) if a[r][col]), None)
        if piv is None:
            raise RuntimeError("singular system in dual extraction")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv if v else v for v in a[col]]
        for r in range(m):
            if r != col and a[r][col]:
                f = a[r][col]
                arow, crow = a[r], a[col]
                for k in range(col, m + 1):
                    if crow[k]:
                        arow[k] -= f * crow[k]
    return [a[i][m] for i in range(m)]


def solve_lp(program: LinearProgram) -> LpOutcome:
    """Exact optimum of ``program`` with certified duals and reduced costs."""
    std = _Std(program)
    if std.infeasible_bounds:
        solve_stats["infeasible"] += 1
        return LpOutcome(program, INFEASIBLE)

    rows = [list(r) for r in std.rows]
    rhs = list(std.rhs)
    m = len(rows)
    ncols = len(std.cost)
    alive = list(range(m))  # indices into std rows, for dual mapping

    # phase 1: artificial basis where no +1 slack is available
    basis: list[int] = []
    art_cols = []
    for i in range(m):
        s = std.slack_of_row[i]
        kind, idx, sgn = std.row_ids[i]
        if s is not None and rows[i][s] == 1:
            basis.append(s)
        else:
            col = ncols + len(art_cols)
            art_cols.append(col)
            for k in range(m):
                rows[k].append(ONE if k == i else ZERO)
            basis.append(col)
    if art_cols:
        total = ncols + len(art_cols)
        cost1 = [ZERO] * total
        zbox = [ZERO]  # holds the negated objective, like the cost row's rhs
        for i in range(m):
            if basis[i] >= ncols:
                row = rows[i]
                for k in range(total):
                    if row[k] and k != basis[i]:
                        cost1[k] -= row[k]
                zbox[0] -= rhs[i]
        status = _simplex(rows, rhs, cost1, basis, zbox)
        assert status == OPTIMAL  # phase-1 objective is bounded below by 0
        if zbox[0] != 0:
            solve_stats["infeasible"] += 1
            return LpOutcome(program, INFEASIBLE)
        # drive artificials out of the basis; drop redundant rows
        for i in range(m - 1, -1, -1):
            if basis[i] < ncols:
                continue
            col = next((k for k in range(ncols) if rows[i][k]), None)
            if col is None:
                del rows[i], rhs[i], basis[i], alive[i]
                m -= 1
            else:
                _pivot(rows, rhs, cost1, basis, i, col, zbox)
        rows = [r[:ncols] for r in rows]

    # phase 2
    cost2 = list(std.cost)
    zbox = [ZERO]
    for i in range(m):
        f = cost2[basis[i]]
        if f:
            row = rows[i]
            for k in range(ncols):
                if row[k]:
                    cost2[k] -= f * row[k]
            zbox[0] -= f * rhs[i]
    status = _simplex(rows, rhs, cost2, basis, zbox)
    if status == UNBOUNDED:
        solve_stats["unbounded"] += 1
        return LpOutcome(program, UNBOUNDED)

    # primal solution in original variables
    zvals = [ZERO] * ncols
    for i in range(m):
        zvals[basis[i]] = rhs[i]
    x = []
    for j in range(program.num_vars):
        v = std.offsets[j]
        for col, sgn in std.var_cols[j]:
            v = v + zvals[col] if sgn > 0 else v - zvals[col]
        x.append(v)
    value = (-zbox[0] + std.obj_const) * std.sense_mult

    # duals: solve B^T y = c_B over the surviving standard rows
    bt = [[std.rows[alive[i]][basis[r]] for i in range(m)] for r in range(m)]
    cb = [std.cost[basis[r]] for r in range(m)]
    y_std_alive = _gauss_solve(bt, cb) if m else []
    y_std = [ZERO] * len(std.rows)
    for i, yi in zip(alive, y_std_alive):
        y_std[i] = yi
    duals = [ZERO] * len(program.rows)
    for i, (kind, idx, sgn) in enumerate(std.row_ids):
        if kind == "input":
            duals[idx] = y_std[i] * sgn * std.sense_mult
    reduced = []
    for j in range(program.num_vars):
        dj = program.objective[j]
        for (coeffs, _, _), yi in zip(program.rows, duals):
            if yi and coeffs[j]:
                dj -= coeffs[j] * yi
        reduced.append(dj)

    outcome = LpOutcome(program, OPTIMAL, value, tuple(x), tuple(duals), tuple(reduced))
    solve_stats["optimal"] += 1
    check_certificates(outcome)
    return outcome


# ---------------------------------------------------------------------------
# coalition-shaped LPs, solved via their duals


@dataclass(frozen=True)
class FaceRow:
    """One constraint ``x(mask) + eps_coef * eps  REL  rhs`` over payoffs."""

    mask: int
    rel: str
    rhs: Rational
    eps_coef: Rational = ZERO


@dataclass(frozen=True)
class FaceOutcome:
    status: str
    value: Optional[Rational] = None
    x: Optional[tuple[Rational, ...]] = None
    eps: Optional[Rational] = None


def solve_face_lp(
    n: int,
    rows: Sequence[FaceRow],
    objective_x: Sequence[RationalLike] | None = None,
    eps_objective: RationalLike | None = None,
) -> FaceOutcome:
    """Minimize ``objective_x @ x (+ eps_objective * eps)`` over the rows.

    Rows must use ``=`` or ``>=``.  The epsilon variable exists iff
    ``eps_objective`` is not None (it may then still be 0).  Internally the
    dual program, one row per payoff variable, is solved, and the payoff
    vector is read from the dual multipliers.
    """
    has_eps = eps_objective is not None
    c_x = [ZERO] * n if objective_x is None else [_q(v) for v in objective_x]
    if len(c_x) != n:
        raise InputError("objective width does not match player count")
    lower = []
    dual_rows_coeffs: list[list[Rational]] = [[] for _ in range(n + (1 if has_eps else 0))]
    dual_obj = []
    for row in rows:
        if row.rel not in (EQUAL, GREATER):
            raise InputError("face rows must use '=' or '>='")
        if not 0 <= row.mask < (1 << n):
            raise InputError("face row mask out of range")
        lower.append(ZERO if row.rel == GREATER else None)
        dual_obj.append(_q(row.rhs))
        for i in range(n):
            dual_rows_coeffs[i].append(ONE if row.mask >> i & 1 else ZERO)
        if has_eps:
            dual_rows_coeffs[n].append(_q(row.eps_coef))
        elif row.eps_coef:
            raise InputError("eps coefficient given but no eps variable requested")
    rhs = list(c_x) + ([_q(eps_objective)] if has_eps else [])
    dual = LinearProgram.build(
        objective=dual_obj,
        sense="max",
        rows=[(coeffs, EQUAL, rhs[i]) for i, coeffs in enumerate(dual_rows_coeffs)],
        lower=lower,
    )
    out = solve_lp(dual)
    if out.status == OPTIMAL:
        x = out.duals[:n]
        eps = out.duals[n] if has_eps else None
        return FaceOutcome(OPTIMAL, out.value, tuple(x), eps)
    if out.status == UNBOUNDED:
        return FaceOutcome(INFEASIBLE)
    # dual infeasible: primal infeasible or unbounded; callers treat as error
    return FaceOutcome(INFEASIBLE)


# ---------------------------------------------------------------------------
# balanced collections


@dataclass(frozen=True)
class BalancednessResult:
    """Outcome of a balanced-collection check.

    ``weights`` maps coalition masks to strictly positive weights whose
    weighted incidence vectors sum exactly to the all-ones vector; present
    iff ``balanced``.  Otherwise ``witness`` names a member whose maximal
    weight is zero, or is None with ``infeasible`` set when the covering
    equation has no nonnegative solution at all.
    """

    balanced: bool
    weights: Optional[dict[int, Rational]] = None
    witness: Optional[int] = None
    infeasible: bool = False


def _check_cover(weights: dict[int, Rational], n: int) -> bool:
    totals = [ZERO] * n
    for mask, w in weights.items():
        for i in range(n):
            if mask >> i & 1:
                totals[i] += w
    return all(t == 1 for t in totals)


def certify_balanced(
    required: Sequence[int],
    helpers: Sequence[int],
    n: int,
    seed: dict[int, Rational] | None = None,
) -> BalancednessResult:
    """Certify that positive weights exist on ``required`` (helpers may take
    weight >= 0) covering every player exactly once.

    The decision is by weight maximization: the collection fails exactly
    when some required member's maximal weight is zero.  Members are
    certified in groups: the combined weight of all still-unwitnessed
    members is maximized at once; a zero maximum pins *every* one of them at
    weight zero on the whole feasible set (weights are nonnegative), while a
    positive one certifies all members the solution touches, and the loop
    repeats on the rest.  A feasible ``seed`` pre-certifies its own support.
    The returned certificate averages the solutions in hand, so it is
    strictly positive on every required member by convexity, and the
    covering equation is re-validated exactly before returning.
    """
    variables = list(dict.fromkeys(list(required) + [h for h in helpers if h not in set(required)]))
    col_of = {mask: k for k, mask in enumerate(variables)}
    solutions: list[dict[int, Rational]] = []
    if seed:
        if not set(seed) <= set(variables) or not _check_cover(seed, n):
            raise ValueError("seed is not a feasible weight vector for this collection")
        solutions.append(seed)

    base_rows = [
        tuple(ONE if mask >> i & 1 else ZERO for mask in variables) for i in range(n)
    ]
    rows = [(row, EQUAL, ONE) for row in base_rows]
    lower = [ZERO] * len(variables)
    pending = [t for t in required if not any(sol.get(t, ZERO) > 0 for sol in solutions)]
    while pending:
        objective = [ZERO] * len(variables)
        for t in pending:
            objective[col_of[t]] = ONE
        out = solve_lp(LinearProgram.build(objective, "max", rows, lower=lower))
        if out.status != OPTIMAL:
            return BalancednessResult(False, infeasible=True)
        if out.value == 0:
            return BalancednessResult(False, witness=pending[0])
        solutions.append({mask: v for mask, v in zip(variables, out.solution) if v})
        still = [t for t in pending if not out.solution[col_of[t]]]
        assert len(still) < len(pending)
        pending = still

    count = rational(len(solutions))
    weights: dict[int, Rational] = {}
    for sol in solutions:
        for mask, w in sol.items():
            weights[mask] = weights.get(mask, ZERO) + w / count
    weights = {mask: w for mask, w in weights.items() if w}
    assert all(weights.get(t, ZERO) > 0 for t in required)
    assert _check_cover(weights, n)
    return BalancednessResult(True, weights=weights)


def is_balanced_collection(collection: Iterable[int], n: int) -> BalancednessResult:
    """Decide balancedness of a collection of coalitions over ``n`` players.

    Balanced means strictly positive weights exist whose weighted incidence
    vectors sum to the all-ones vector.  Members must be nonempty coalitions
    (the grand coalition is allowed; the empty set is not).
    """
    members = sorted(set(int(m) for m in collection))
    if not members:
        raise InputError("empty collection")
    for m in members:
        if not 0 < m < (1 << n):
            raise InputError(f"coalition {m:#x} is not a nonempty coalition over {n} players")
    return certify_balanced(members, (), n)


# ---------------------------------------------------------------------------
# exact linear algebra helpers for incidence systems


class RowBasis:
    """Incremental exact row-space tracker (reduced echelon rows)."""

    def __init__(self, width: int):
        self.width = width
        self._rows: list[list[Rational]] = []
        self._pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    def add(self, row: Sequence[RationalLike]) -> bool:
        """Reduce ``row`` against the basis; keep it if independent."""
        work = [_q(v) for v in row]
        for piv, basis_row in zip(self._pivots, self._rows):
            f = work[piv]
            if f:
                for k in range(self.width):
                    if basis_row[k]:
                        work[k] -= f * basis_row[k]
        lead = next((k for k in range(self.width) if work[k]), None)
        if lead is None:
            return False
        inv = 1 / work[lead]
        work = [v * inv if v else v for v in work]
        for piv, basis_row in zip(self._pivots, self._rows):
            f = basis_row[lead]
            if f:
                for k in range(self.width):
                    if work[k]:
                        basis_row[k] -= f * work[k]
        self._rows.append(work)
        self._pivots.append(lead)
        return True


def solve_equalities(rows: Sequence[Sequence[RationalLike]], rhs: Sequence[RationalLike]) -> tuple[Rational, ...]:
    """Unique solution of a consistent full-column-rank linear system."""
    if not rows:
        raise ValueError("empty system")
    width = len(rows[0])
    aug = [[_q(v) for v in row] + [_q(b)] for row, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for col in range(width):
        piv = next((i for i in range(r, len(aug)) if aug[i][col]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][col]
        aug[r] = [v * inv if v else v for v in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][col]:
                f = aug[i][col]
                row_i, row_r = aug[i], aug[r]
                for k in range(col, width + 1):
                    if row_r[k]:
                        row_i[k] -= f * row_r[k]
        pivots.append(col)
        r += 1
        if r == len(aug):
            break
    if len(pivots) < width:
        raise ValueError("system does not determine a unique solution")
    for i in range(r, len(aug)):
        if aug[i][width]:
            raise ValueError("inconsistent system")
    x = [ZERO] * width
    for i, col in enumerate(pivots):
        x[col] = aug[i][width]
    return tuple(x)
