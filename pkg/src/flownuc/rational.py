"""Exact rational scalar used for every quantity in the package.

Arithmetic is delegated to gmpy2's C-implemented ``mpq``, which keeps values
in canonical form at all times: positive denominator, reduced by gcd, zero
stored as 0/1.  Values are immutable and hashable, so they can be shared
freely between threads.  No floating point is used anywhere; decimal text
such as ``"0.2"`` is parsed exactly (1/5).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from gmpy2 import mpq

from .errors import InputError

Rational = mpq
RationalLike = Union[mpq, Fraction, int, str]

ZERO = mpq(0)
ONE = mpq(1)


def rational(num: int | Rational, den: int | Rational = 1) -> Rational:
    """Canonical fraction num/den; the denominator must be nonzero."""
    if den == 0:
        raise InputError("rational number with zero denominator")
    return mpq(num, den)


def parse_rational(text: str) -> Rational:
    """Parse ``"p/q"``, an integer, or exact decimal text such as ``"0.2"``."""
    s = text.strip()
    try:
        if "/" in s:
            num, _, den = s.partition("/")
            return rational(int(num.strip()), int(den.strip()))
        return mpq(Fraction(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational literal: {text!r}") from exc


def format_rational(value: RationalLike) -> str:
    """Canonical text form: ``p/q``, or just ``p`` for integers."""
    return str(mpq(value))


def compare(a: RationalLike, b: RationalLike) -> int:
    """Total order on rationals: -1, 0 or 1 (exact cross multiplication)."""
    a, b = mpq(a), mpq(b)
    if a < b:
        return -1
    if a > b:
        return 1
    return 0


def decimal_string(value: RationalLike, places: int) -> str:
    """Fixed-point rendering rounded half away from zero (display only)."""
    if places < 0:
        raise ValueError("places must be >= 0")
    q = mpq(value)
    scaled = q * 10**places
    num, den = int(scaled.numerator), int(scaled.denominator)
    digits = (2 * abs(num) + den) // (2 * den)
    sign = "-" if num < 0 and digits else ""
    if places == 0:
        return f"{sign}{digits}"
    whole, frac = divmod(digits, 10**places)
    return f"{sign}{whole}.{frac:0{places}d}"
