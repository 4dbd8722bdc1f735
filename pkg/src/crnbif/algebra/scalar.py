"""Exact rational scalars.

The exact scalar type is :class:`fractions.Fraction`; it is always reduced,
keeps a positive denominator and compares exactly, which is all we need.
This module only adds parsing and a few helpers for dyadic witnesses.
"""
from fractions import Fraction

ExactScalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def to_scalar(value):
    """Coerce ints, Fractions and strings such as ``"3/2"`` to a Fraction.

    Floats are refused on purpose: a decimal that sneaks into an exact
    pipeline silently destroys exactness.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty scalar")
        if any(c in text for c in "eE.") and "/" not in text:
            raise ValueError(f"decimal literal {value!r}: use an exact rational like 3/2")
        return Fraction(text)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact scalar")


def sign(x):
    return (x > 0) - (x < 0)


def is_dyadic(x):
    d = Fraction(x).denominator
    return d & (d - 1) == 0


def fmt(x):
    """Serialise a scalar as ``"p/q"`` (or ``"p"``)."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def dyadic_between(lo, hi):
    """A dyadic rational strictly inside (lo, hi), preferring small denominators."""
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError("empty interval")
    k = 0
    while True:
        den = 1 << k
        # smallest numerator with num/den > lo
        num = (lo * den).__floor__() + 1
        cand = Fraction(num, den)
        if cand < hi:
            return cand
        k += 1
