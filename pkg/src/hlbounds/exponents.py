"""Optimal coefficient-norm exponents, in exact rational arithmetic.

Two regimes are covered for an m-homogeneous polynomial on l_p:

* ``2m <= p <= inf``: the exponent is ``2mp / (mp + p - 2m)``, which tends to
  ``2m / (m + 1)`` as p grows (the polydisc case).
* ``m < p < 2m``: the exponent is ``p / (p - m)``.

All results are `fractions.Fraction` values; nothing is rounded until a
caller converts to float.  No inequality is available for ``p <= m``, so that
region is rejected everywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from .errors import DomainError, InputError

ExponentLike = Union["LpExponent", int, float, str, Fraction]

_INFINITE_TOKENS = {"inf", "infinity", "oo"}


class LpExponent:
    """The index p of an l_p space: an exact rational >= 1, or infinity.

    Infinity is an explicit marker, never a float sentinel, so formulas with
    p in a denominator can branch on :attr:`is_infinite` instead of trusting
    IEEE overflow behaviour.  Floats are converted through
    ``Fraction(float)``, which is exact for the given binary value; pass a
    string like ``"4.5"`` or ``"9/2"`` when a decimal is meant literally.
    """

    __slots__ = ("_value",)

    def __init__(self, value: ExponentLike):
        if isinstance(value, LpExponent):
            self._value = value._value
            return
        if isinstance(value, str):
            text = value.strip().lower()
            if text in _INFINITE_TOKENS:
                self._value = None
                return
            try:
                value = Fraction(text)
            except (ValueError, ZeroDivisionError) as exc:
                raise InputError(f"cannot parse exponent {value!r}") from exc
        if isinstance(value, float):
            if math.isinf(value):
                self._value = None
                return
            if math.isnan(value):
                raise InputError("exponent cannot be NaN")
            value = Fraction(value)
        if isinstance(value, (int, Fraction)):
            value = Fraction(value)
            if value < 1:
                raise DomainError(f"exponent must be >= 1, got {value}")
            self._value = value
            return
        raise InputError(f"cannot interpret {value!r} as an exponent")

    @classmethod
    def infinity(cls) -> "LpExponent":
        return cls("inf")

    @property
    def is_infinite(self) -> bool:
        return self._value is None

    @property
    def value(self) -> Fraction:
        """The exact finite value; raises on the infinity marker."""
        if self._value is None:
            raise DomainError("exponent is infinite")
        return self._value

    def as_float(self) -> float:
        return math.inf if self._value is None else float(self._value)

    def _key(self, other: ExponentLike) -> tuple:
        other = other if isinstance(other, LpExponent) else LpExponent(other)
        inf = Fraction(0)  # placeholder, compared via the flag first
        a = (1, inf) if self.is_infinite else (0, self._value)
        b = (1, inf) if other.is_infinite else (0, other._value)
        return a, b

    def __eq__(self, other: object) -> bool:
        try:
            a, b = self._key(other)  # type: ignore[arg-type]
        except (DomainError, InputError, TypeError):
            return NotImplemented
        return a == b

    def __hash__(self) -> int:
        return hash(("LpExponent", self._value))

    def __lt__(self, other: ExponentLike) -> bool:
        a, b = self._key(other)
        return a < b

    def __le__(self, other: ExponentLike) -> bool:
        a, b = self._key(other)
        return a <= b

    def __gt__(self, other: ExponentLike) -> bool:
        a, b = self._key(other)
        return a > b

    def __ge__(self, other: ExponentLike) -> bool:
        a, b = self._key(other)
        return a >= b

    def __str__(self) -> str:
        return "inf" if self._value is None else str(self._value)

    def __repr__(self) -> str:
        return f"LpExponent({str(self)!r})"


INFINITY = LpExponent.infinity()


def as_exponent(p: ExponentLike) -> LpExponent:
    return p if isinstance(p, LpExponent) else LpExponent(p)


def _check_degree(m: int) -> None:
    if not isinstance(m, int) or isinstance(m, bool):
        raise DomainError(f"degree must be an integer, got {m!r}")
    if m < 2:
        raise DomainError(f"degree must be >= 2, got {m}")


def hl_exponent(m: int, p: ExponentLike) -> Fraction:
    """Exponent 2mp/(mp + p - 2m) for the high regime 2m <= p <= inf.

    For infinite p this is 2m/(m + 1).  The result always lies in (1, 2].
    """
    _check_degree(m)
    p = as_exponent(p)
    if p.is_infinite:
        return Fraction(2 * m, m + 1)
    if p < 2 * m:
        raise DomainError(
            f"hl_exponent needs p >= 2m (= {2 * m}), got p = {p}; "
            "use hl_exponent_low below 2m"
        )
    pv = p.value
    return (2 * m * pv) / (m * pv + pv - 2 * m)


def hl_exponent_low(m: int, p: ExponentLike) -> Fraction:
    """Exponent p/(p - m) for the low regime m < p < 2m.  Always > 2."""
    _check_degree(m)
    p = as_exponent(p)
    if p.is_infinite or not (m < p < 2 * m):
        raise DomainError(
            f"hl_exponent_low needs m < p < 2m, got m = {m}, p = {p}"
        )
    pv = p.value
    return pv / (pv - m)


def exponent_for(m: int, p: ExponentLike) -> Fraction:
    """Dispatch to the regime containing p.  Rejects p <= m."""
    _check_degree(m)
    p = as_exponent(p)
    if p.is_infinite or p >= 2 * m:
        return hl_exponent(m, p)
    if p > m:
        return hl_exponent_low(m, p)
    raise DomainError(f"no inequality holds for p <= m (m = {m}, p = {p})")
