"""Independent brute-force oracles.

Everything here recomputes results by a different route than the library:
max flow as the minimum crossing capacity over all source/sink bipartitions,
LP optima by exhaustive vertex enumeration, balancedness by enumerating
basic feasible weight vectors.  The oracles use ``fractions.Fraction`` on
purpose so they do not even share the library's scalar type.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations


def min_cut_value(net, allowed_ids=None) -> Fraction:
    """Max-flow value computed as the cheapest crossing edge set."""
    allowed = set(net.edge_ids() if allowed_ids is None else allowed_ids)
    middle = [v for v in net.nodes if v not in (net.source, net.sink)]
    best = None
    for pick in range(1 << len(middle)):
        s_side = {net.source} | {v for j, v in enumerate(middle) if pick >> j & 1}
        cap = Fraction(0)
        for e in net.edges:
            if e.id in allowed and e.tail in s_side and e.head not in s_side:
                cap += Fraction(int(e.capacity.numerator), int(e.capacity.denominator))
        if best is None or cap < best:
            best = cap
    return best


def _solve_square(rows, rhs):
    """Fraction Gaussian elimination; None when singular."""
    n = len(rows)
    a = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = a[col][col]
        a[col] = [v / inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


def lp_by_vertex_enumeration(objective, rows, lower, upper, sense="min"):
    """Optimum of a *box-bounded* LP by checking every candidate vertex.

    Constraints are (coeffs, rel, rhs) with rel in {'<=', '=', '>='}.  All
    variables must have finite lower and upper bounds, which makes the
    feasible set a polytope: if it is nonempty some vertex is optimal, and
    every vertex solves n constraints-at-equality drawn from rows + bounds.
    Returns (status, value) with status 'optimal' or 'infeasible'.
    """
    n = len(objective)
    objective = [Fraction(v) for v in objective]
    cons = [([Fraction(c) for c in coeffs], rel, Fraction(rhs)) for coeffs, rel, rhs in rows]
    for j in range(n):
        unit = [Fraction(int(k == j)) for k in range(n)]
        cons.append((unit, ">=", Fraction(lower[j])))
        cons.append((unit, "<=", Fraction(upper[j])))

    def feasible(x):
        for coeffs, rel, rhs in cons:
            lhs = sum(c * v for c, v in zip(coeffs, x))
            if rel == "<=" and lhs > rhs:
                return False
            if rel == ">=" and lhs < rhs:
                return False
            if rel == "=" and lhs != rhs:
                return False
        return True

    best = None
    for chosen in combinations(range(len(cons)), n):
        mat = [cons[i][0] for i in chosen]
        rhs = [cons[i][2] for i in chosen]
        x = _solve_square(mat, rhs)
        if x is None or not feasible(x):
            continue
        value = sum(c * v for c, v in zip(objective, x))
        if best is None or (value < best if sense == "min" else value > best):
            best = value
    if best is None:
        return "infeasible", None
    return "optimal", best


def balanced_by_vertex_supports(collection, n) -> bool:
    """Balancedness via basic feasible solutions of the weight polytope.

    The feasible weight vectors form a bounded polytope, so each one is a
    convex combination of basic solutions with support of size <= n; the
    collection is balanced iff the union of those supports covers it.
    """
    members = sorted(collection)
    covered = set()
    feasible_at_all = False
    for size in range(1, n + 1):
        for support in combinations(range(len(members)), size):
            cols = [members[i] for i in support]
            # solve: sum of weights of cols covering player i == 1 for all i
            rows = [[Fraction(int(c >> i & 1)) for c in cols] for i in range(n)]
            # overdetermined (n rows, size cols): solve by picking independent rows
            sol = _least_squares_exact(rows, [Fraction(1)] * n)
            if sol is None or any(w < 0 for w in sol):
                continue
            # verify the full cover equation
            ok = all(
                sum(w for c, w in zip(cols, sol) if c >> i & 1) == 1 for i in range(n)
            )
            if not ok:
                continue
            feasible_at_all = True
            covered.update(c for c, w in zip(cols, sol) if w > 0)
    return feasible_at_all and covered == set(members)


def _least_squares_exact(rows, rhs):
    """Solve a consistent overdetermined system exactly; None otherwise."""
    m, k = len(rows), len(rows[0])
    aug = [list(map(Fraction, rows[i])) + [Fraction(rhs[i])] for i in range(m)]
    pivots = []
    r = 0
    for col in range(k):
        piv = next((i for i in range(r, m) if aug[i][col] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = aug[r][col]
        aug[r] = [v / inv for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    if len(pivots) < k:
        return None  # underdetermined support; skip (smaller supports cover it)
    for i in range(r, m):
        if aug[i][k] != 0:
            return None
    x = [Fraction(0)] * k
    for i, col in enumerate(pivots):
        x[col] = aug[i][k]
    return x
