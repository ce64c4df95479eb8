"""Exact rational coefficients.

All arithmetic in the package runs over Q.  gmpy2's mpq is used when
available (it is several times faster than fractions.Fraction in the
Groebner inner loops); the stdlib Fraction is a drop-in fallback.  Both
keep gcd(|num|, den) = 1 and den >= 1 automatically.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover
    from fractions import Fraction as Rational

ZERO = Rational(0)
ONE = Rational(1)


def rat(num, den=1) -> Rational:
    """Build a normalized rational from integers or a 'a/b' string."""
    if isinstance(num, str):
        num = num.strip()
        if "/" in num:
            a, b = num.split("/", 1)
            return Rational(int(a), int(b))
        return Rational(int(num))
    return Rational(num, den)


def num_den(q) -> tuple[int, int]:
    """(numerator, denominator) as Python ints, denominator positive."""
    return int(q.numerator), int(q.denominator)


def format_rational(q) -> str:
    n, d = num_den(q)
    return str(n) if d == 1 else f"{n}/{d}"
