"""Transferable-utility games over coalition bitmasks, with the direct
measurements the audit suite is built from: excesses, sorted excess vectors,
core membership, structural properties.

Coalitions are ints; player ``i`` (1-based) owns bit ``i - 1``.  Iteration
order over coalitions is increasing mask everywhere, so every report is
reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable, Iterable, Iterator, Mapping, Optional, Sequence

from . import lp
from .errors import InputError, LimitError
from .rational import ZERO, Rational, RationalLike, format_rational, parse_rational, rational

Coalition = int
Allocation = tuple[Rational, ...]


def coalition_of(players: Iterable[int]) -> Coalition:
    """Bitmask of a set of 1-based player ids."""
    mask = 0
    for p in players:
        if p < 1:
            raise InputError(f"player ids are 1-based, got {p}")
        mask |= 1 << (p - 1)
    return mask


def players_of(mask: Coalition) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def coalition_str(mask: Coalition) -> str:
    return "{" + ",".join(str(p) for p in players_of(mask)) + "}"


def proper_coalitions(n: int) -> Iterator[Coalition]:
    """All nonempty coalitions except the grand one, in increasing mask order."""
    full = (1 << n) - 1
    return (m for m in range(1, full))


@dataclass(frozen=True)
class TUGame:
    """Player count plus a dense worth table indexed by coalition mask."""

    n: int
    worth: tuple[Rational, ...]

    def __post_init__(self):
        if self.n < 1:
            raise InputError("a game needs at least one player")
        if len(self.worth) != 1 << self.n:
            raise InputError(f"worth table must have {1 << self.n} entries")
        if self.worth[0] != 0:
            raise InputError("the empty coalition must have worth 0")

    @classmethod
    def from_function(cls, n: int, fn: Callable[[Coalition], RationalLike]) -> "TUGame":
        return cls(n, tuple(rational(fn(m)) if m else ZERO for m in range(1 << n)))

    @classmethod
    def from_mapping(cls, n: int, values: Mapping[Coalition, RationalLike]) -> "TUGame":
        table = [ZERO] * (1 << n)
        for mask, v in values.items():
            table[mask] = rational(v)
        return cls(n, tuple(table))

    def value(self, mask: Coalition) -> Rational:
        return self.worth[mask]

    @property
    def grand_coalition(self) -> Coalition:
        return (1 << self.n) - 1


def coalition_sums(x: Sequence[Rational]) -> list[Rational]:
    """``sums[mask] = sum of x_i over members`` for every mask, by DP."""
    n = len(x)
    sums = [ZERO] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        sums[mask] = sums[mask ^ low] + x[low.bit_length() - 1]
    return sums


def excess(game: TUGame, x: Sequence[Rational], mask: Coalition) -> Rational:
    """``v(S) - x(S)``, the dissatisfaction of S at x."""
    if len(x) != game.n:
        raise InputError("allocation length does not match game")
    total = ZERO
    for i in range(game.n):
        if mask >> i & 1:
            total += x[i]
    return game.worth[mask] - total


def excess_vector(game: TUGame, x: Sequence[Rational]) -> tuple[Rational, ...]:
    """Excesses of all proper nonempty coalitions, sorted non-increasing."""
    if len(x) != game.n:
        raise InputError("allocation length does not match game")
    sums = coalition_sums(x)
    values = [game.worth[m] - sums[m] for m in proper_coalitions(game.n)]
    values.sort(reverse=True)
    return tuple(values)


def lex_compare(a: Sequence[Rational], b: Sequence[Rational]) -> int:
    """Lexicographic order on equal-length vectors: -1, 0 or 1."""
    if len(a) != len(b):
        raise InputError("lexicographic comparison needs equal lengths")
    for u, v in zip(a, b):
        if u != v:
            return -1 if u < v else 1
    return 0


@dataclass(frozen=True)
class ImputationReport:
    efficient: bool
    individually_rational: bool


def check_imputation(game: TUGame, x: Sequence[Rational]) -> ImputationReport:
    if len(x) != game.n:
        raise InputError("allocation length does not match game")
    efficient = sum(x, ZERO) == game.worth[game.grand_coalition]
    rational_ok = all(x[i] >= game.worth[1 << i] for i in range(game.n))
    return ImputationReport(efficient, rational_ok)


def blocking_coalitions(game: TUGame, x: Sequence[Rational]) -> list[tuple[Coalition, Rational]]:
    """Proper nonempty coalitions with positive excess, sorted by descending
    excess then mask.  Empty iff x is in the core (given efficiency)."""
    if len(x) != game.n:
        raise InputError("allocation length does not match game")
    sums = coalition_sums(x)
    out = []
    for m in proper_coalitions(game.n):
        e = game.worth[m] - sums[m]
        if e > 0:
            out.append((m, e))
    out.sort(key=lambda item: (-item[1], item[0]))
    return out


def is_zero_monotonic(game: TUGame) -> tuple[bool, Optional[tuple[Coalition, int]]]:
    """True iff ``v(S + i) >= v(S) + v({i})`` everywhere; else first witness."""
    for mask in range(1 << game.n):
        for i in range(game.n):
            if mask >> i & 1:
                continue
            if game.worth[mask | (1 << i)] < game.worth[mask] + game.worth[1 << i]:
                return False, (mask, i + 1)
    return True, None


def subgame(game: TUGame, members: Coalition) -> TUGame:
    """Restriction to ``members``, players re-indexed order-preservingly."""
    if members == 0:
        raise InputError("subgame of the empty coalition is undefined")
    bits = [i for i in range(game.n) if members >> i & 1]
    k = len(bits)
    table = []
    for sub in range(1 << k):
        big = 0
        for j in range(k):
            if sub >> j & 1:
                big |= 1 << bits[j]
        table.append(game.worth[big])
    return TUGame(k, tuple(table))


def core_nonempty(game: TUGame) -> tuple[bool, Optional[Allocation]]:
    """LP feasibility of the core; returns a certificate point when nonempty.

    Solves the least-core program ``min eps`` over efficient x with
    ``x(S) >= v(S) - eps``; the core is nonempty iff the optimum is <= 0.
    """
    full = game.grand_coalition
    if game.n == 1:
        return True, (game.worth[full],)
    rows = [lp.FaceRow(full, lp.EQUAL, game.worth[full])]
    rows += [lp.FaceRow(m, lp.GREATER, game.worth[m], eps_coef=rational(1)) for m in proper_coalitions(game.n)]
    out = lp.solve_face_lp(game.n, rows, eps_objective=rational(1))
    if out.status != lp.OPTIMAL:
        raise RuntimeError("least-core program must be solvable")
    if out.value > 0:
        return False, None
    return True, out.x


# ---------------------------------------------------------------------------
# file formats


def game_to_dict(game: TUGame) -> dict:
    entries = []
    for mask in range(1, 1 << game.n):
        entries.append(
            {"players": list(players_of(mask)), "value": format_rational(game.worth[mask])}
        )
    return {"n": game.n, "coalitions": entries}


def game_from_dict(data: dict, max_players: int = 20) -> TUGame:
    try:
        n = int(data["n"])
    except (KeyError, TypeError, ValueError):
        raise InputError("game file: missing or invalid 'n'") from None
    if n < 1:
        raise InputError("game file: 'n' must be >= 1")
    if n > max_players:
        raise LimitError(
            f"game file has {n} players; the enumeration limit is {max_players} "
            "(raise it explicitly if you really want 2^n coalitions materialized)"
        )
    sparse = bool(data.get("sparse", False))
    entries = data.get("coalitions")
    if not isinstance(entries, list):
        raise InputError("game file: 'coalitions' must be a list")
    table: list[Optional[Rational]] = [None] * (1 << n)
    table[0] = ZERO
    for idx, entry in enumerate(entries):
        where = f"coalitions[{idx}]"
        if not isinstance(entry, dict) or "players" not in entry or "value" not in entry:
            raise InputError(f"game file: {where} needs 'players' and 'value'")
        players = entry["players"]
        if not isinstance(players, list) or not all(isinstance(p, int) for p in players):
            raise InputError(f"game file: {where}.players must be a list of ints")
        if any(not 1 <= p <= n for p in players):
            raise InputError(f"game file: {where}.players out of range 1..{n}")
        mask = coalition_of(players)
        value = entry["value"]
        value = value if isinstance(value, (Rational, Fraction, int)) else parse_rational(str(value))
        value = rational(value)
        if mask == 0:
            if value != 0:
                raise InputError(f"game file: {where} assigns nonzero worth to the empty coalition")
            continue
        if table[mask] is not None:
            raise InputError(f"game file: duplicate coalition {coalition_str(mask)} at {where}")
        table[mask] = value
    if sparse:
        table = [v if v is not None else ZERO for v in table]
    else:
        missing = [m for m in range(1, 1 << n) if table[m] is None]
        if missing:
            raise InputError(
                f"game file: {len(missing)} coalitions missing (first: "
                f"{coalition_str(missing[0])}); set \"sparse\": true to default them to 0"
            )
    return TUGame(n, tuple(table))


def load_game(path: str | Path, max_players: int = 20) -> TUGame:
    return game_from_dict(_load_json(path), max_players=max_players)


def save_game(game: TUGame, path: str | Path) -> None:
    Path(path).write_text(json.dumps(game_to_dict(game), indent=2) + "\n", encoding="utf-8")


def allocation_to_dict(x: Sequence[Rational]) -> dict:
    return {"payoffs": [format_rational(v) for v in x]}


def allocation_from_dict(data: dict, n: int | None = None) -> Allocation:
    payoffs = data.get("payoffs")
    if not isinstance(payoffs, list):
        raise InputError("solution file: 'payoffs' must be a list")
    values = []
    for idx, item in enumerate(payoffs):
        if isinstance(item, (int, Fraction, Rational)):
            values.append(rational(item))
        else:
            try:
                values.append(parse_rational(str(item)))
            except InputError:
                raise InputError(f"solution file: payoffs[{idx}] is not a rational") from None
    if n is not None and len(values) != n:
        raise InputError(f"solution file has {len(values)} payoffs, expected {n}")
    return tuple(values)


def load_allocation(path: str | Path, n: int | None = None) -> Allocation:
    return allocation_from_dict(_load_json(path), n=n)


def save_allocation(x: Sequence[Rational], path: str | Path) -> None:
    Path(path).write_text(json.dumps(allocation_to_dict(x), indent=2) + "\n", encoding="utf-8")


def _load_json(path: str | Path) -> dict:
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
    return data
