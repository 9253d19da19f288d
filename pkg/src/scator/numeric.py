"""Scalar backends shared by every scator type.

Two interchangeable representations are supported: exact rationals
(:class:`fractions.Fraction`) and 64-bit floats.  Integers and strings are
promoted to ``Fraction`` so that ``Scator(2, 1, 1)`` stays exact; a ``float``
anywhere in an expression turns the result into a float, the usual Python
numeric tower behaviour.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Union

Number = Union[Fraction, float]

DEFAULT_EPS = 1e-9


class ScatorError(ArithmeticError):
    """Base class for algebraic failures.  ``expr`` names the offending input."""

    def __init__(self, message: str, expr: object = None):
        super().__init__(message)
        self.expr = expr


class DomainError(ScatorError):
    """An operation needs a non-zero scalar component or denominator."""


class NotInvertible(ScatorError):
    """Light-like scators have zero modulus and no inverse."""


class NotInImage(ScatorError):
    """A multivector is outside the image of the fundamental embedding."""


def _env_eps() -> float:
    raw = os.environ.get("SCATOR_EPS")
    if not raw:
        return DEFAULT_EPS
    try:
        value = float(raw)
    except ValueError:
        raise ValueError(f"SCATOR_EPS must be a float, got {raw!r}") from None
    if value < 0:
        raise ValueError("SCATOR_EPS must be non-negative")
    return value


@dataclass(frozen=True)
class Tolerance:
    """Floating comparison settings.

    ``eps`` is the relative tolerance used by ``close``/``is_close_zero`` and
    the light-like test.  ``guard`` rejects floating scalar components with
    ``|a0| < guard`` as if they were zero; 0 disables it.
    """

    eps: float = DEFAULT_EPS
    guard: float = 0.0

    @classmethod
    def from_env(cls) -> "Tolerance":
        return cls(eps=_env_eps())


def default_tolerance() -> Tolerance:
    return Tolerance.from_env()


def as_number(x) -> Number:
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (Fraction, float)):
        return x
    if isinstance(x, (int, str, Decimal)):
        return Fraction(x)
    try:
        return float(x)
    except (TypeError, ValueError):
        raise TypeError(f"cannot use {x!r} as a scalar") from None


def to_float(x: Number) -> float:
    return float(x)


def is_exact(*xs: Number) -> bool:
    return not any(isinstance(x, float) for x in xs)


def is_zero_scalar(x: Number, tol: Tolerance | None = None) -> bool:
    """True when ``x`` cannot serve as a divisor."""
    if x == 0:
        return True
    if isinstance(x, float):
        guard = (tol or default_tolerance()).guard
        return abs(x) < guard
    return False


def close(x: Number, y: Number, tol: Tolerance | None = None, scale: float = 1.0) -> bool:
    """Equality for exact values, relative closeness for floats.

    ``scale`` widens the floating tolerance for ill-conditioned quantities.
    """
    if is_exact(x, y):
        return x == y
    eps = (tol or default_tolerance()).eps
    fx, fy = float(x), float(y)
    return abs(fx - fy) <= eps * max(1.0, abs(fx), abs(fy), scale)


def sign(x: Number) -> int:
    return (x > 0) - (x < 0)


def format_number(x: Number) -> str:
    """Canonical text: ``p/q`` (or ``p``) for rationals, shortest repr for floats."""
    if isinstance(x, float):
        if x == 0:
            x = 0.0
        return repr(x)
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
