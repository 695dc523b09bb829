"""Exact rational arithmetic for the solvers.

Everything numeric in this package (LP values, bounds, ratios) runs on
arbitrary-precision rationals so statements like "this component equals 1/2"
are decidable, not approximate. gmpy2's mpq is used when available because it
is a fast C implementation; the stdlib Fraction is a drop-in fallback.
"""

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover - environments without gmpy2
    from fractions import Fraction as Rat

RAT_ZERO = Rat(0)
RAT_ONE = Rat(1)


def rat(numerator, denominator=1):
    """Build a rational from integers."""
    return Rat(numerator, denominator)


def rat_str(value) -> str:
    """Wire form: "num/den", or just "num" when the value is integral."""
    return str(value)


def parse_rat(text: str):
    """Inverse of rat_str."""
    return Rat(text.strip())


def is_integral(value) -> bool:
    return value.denominator == 1


def ceil_rat(value) -> int:
    """Smallest integer >= value."""
    return -int(-value.numerator // value.denominator)
