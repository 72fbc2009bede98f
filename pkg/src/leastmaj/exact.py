"""Exact rational helpers.

Values are kept as plain ``int`` whenever they are integral and as
``fractions.Fraction`` otherwise, so integer-only instances never pay for
fraction arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor, ceil, gcd
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]


def q(value) -> Rational:
    """Convert ``value`` to an exact rational.

    Accepts ints, Fractions, ``"p/q"`` strings and decimal strings (converted
    with power-of-ten denominators).  Floats are converted through their
    shortest repr, so ``0.6`` becomes ``3/5`` rather than the binary value.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, float):
        value = repr(value)
    if isinstance(value, str):
        try:
            value = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational number: {value!r}") from exc
        return value.numerator if value.denominator == 1 else value
    try:
        return q(Fraction(value))
    except TypeError as exc:
        raise TypeError(f"cannot convert {type(value).__name__} to a rational") from exc


def div(num, den) -> Rational:
    return q(Fraction(num) / Fraction(den))


def point(coords: Iterable) -> tuple:
    return tuple(q(c) for c in coords)


def fmt(value: Rational) -> str:
    value = q(value)
    if isinstance(value, int):
        return str(value)
    return f"{value.numerator}/{value.denominator}"


def fmt_point(x: Sequence) -> str:
    return "(" + ", ".join(fmt(v) for v in x) + ")"


def to_json(value: Rational):
    value = q(value)
    return value if isinstance(value, int) else fmt(value)


def is_integral(value) -> bool:
    return isinstance(q(value), int)


def floor_q(value) -> int:
    return floor(value)


def ceil_q(value) -> int:
    return ceil(value)


def common_denominator(values: Iterable) -> int:
    d = 1
    for v in values:
        if isinstance(v, Fraction):
            den = v.denominator
            d = d * den // gcd(d, den)
    return d


def scaled(values: Iterable, d: int) -> list[int]:
    """Multiply every value by ``d`` (which must clear all denominators)."""
    out = []
    for v in values:
        s = v * d
        if isinstance(s, Fraction):
            if s.denominator != 1:
                raise ValueError("scale does not clear denominators")
            s = s.numerator
        out.append(s)
    return out


def dot(w: Sequence, x: Sequence) -> Rational:
    return q(sum(wi * xi for wi, xi in zip(w, x)))
