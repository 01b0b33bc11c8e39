"""Exact rational helpers on top of :class:`fractions.Fraction`."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

RationalLike = Union[int, str, Fraction]


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints, ``Fraction`` and text literals (``3``, ``0.25``, ``5/6``).

    Floats are rejected on purpose: they would smuggle rounding error into
    guarantee-bearing code.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact value {value!r}")
    if isinstance(value, str):
        return parse_rational(value)
    return Fraction(value)


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("empty rational literal")
    try:
        q = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational literal {text!r}") from exc
    return q


def format_rational(q: Fraction) -> str:
    """Canonical ``p/q`` form (just ``p`` for integers)."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_decimal(q: Fraction, places: int = 6) -> str:
    return f"{float(q):.{places}f}"


def common_denominator(values: Iterable[Fraction]) -> int:
    d = 1
    for v in values:
        if v:
            d = math.lcm(d, Fraction(v).denominator)
    return d


def scale_to_integers(values: Iterable[Fraction]) -> tuple[int, list[int]]:
    """Return ``(D, [D*v ...])`` with ``D`` the lcm of the denominators."""
    values = [Fraction(v) for v in values]
    d = common_denominator(values)
    scaled = []
    for v in values:
        s = v * d
        assert s.denominator == 1
        scaled.append(s.numerator)
    return d, scaled
