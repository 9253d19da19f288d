"""The 1+2 dimensional hyperbolic scator and its non-distributive product."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .numeric import (
    DomainError,
    NotInvertible,
    Number,
    Tolerance,
    as_number,
    default_tolerance,
    format_number,
    is_exact,
    is_zero_scalar,
)


class Causality(enum.Enum):
    TimeLike = "T"
    SpaceLike = "S"
    LightLike = "L"

    @property
    def code(self) -> str:
        return self.value

    def swapped(self) -> "Causality":
        """Image under a causality swap: time-like and space-like exchange."""
        if self is Causality.TimeLike:
            return Causality.SpaceLike
        if self is Causality.SpaceLike:
            return Causality.TimeLike
        return self


@dataclass(frozen=True)
class Scator:
    """A 1+2 scator ``(a0; a1, a2)``.

    ``a0`` is the scalar (temporal) component, ``a1`` and ``a2`` the
    directors.  Any triple is a valid value; operations that divide by
    ``a0`` check it themselves.

    Operators: ``a * b`` is the scator product (or scaling when one side is
    a plain number), ``+``/``-`` are componentwise.
    """

    a0: Number
    a1: Number
    a2: Number

    def __post_init__(self):
        for name in ("a0", "a1", "a2"):
            object.__setattr__(self, name, as_number(getattr(self, name)))

    def __iter__(self) -> Iterator[Number]:
        yield self.a0
        yield self.a1
        yield self.a2

    @property
    def directors(self) -> tuple[Number, Number]:
        return (self.a1, self.a2)

    def to_float(self) -> "Scator":
        return Scator(*(float(x) for x in self))

    def is_exact(self) -> bool:
        return is_exact(*self)

    def __add__(self, other):
        if not isinstance(other, Scator):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other):
        if not isinstance(other, Scator):
            return NotImplemented
        return Scator(self.a0 - other.a0, self.a1 - other.a1, self.a2 - other.a2)

    def __neg__(self):
        return scale(-1, self)

    def __mul__(self, other):
        if isinstance(other, Scator):
            return product(self, other)
        try:
            lam = as_number(other)
        except TypeError:
            return NotImplemented
        return scale(lam, self)

    def __rmul__(self, other):
        try:
            lam = as_number(other)
        except TypeError:
            return NotImplemented
        return scale(lam, self)

    def __str__(self):
        a0, a1, a2 = (format_number(x) for x in self)
        return f"({a0}; {a1}, {a2})"


ZERO = Scator(0, 0, 0)
ONE = Scator(1, 0, 0)


def _require_scalar(a: Scator, tol: Tolerance | None, what: str = "scator") -> None:
    if is_zero_scalar(a.a0, tol):
        raise DomainError(f"{what} {a} has zero scalar component", a)


def add(a: Scator, b: Scator) -> Scator:
    return Scator(a.a0 + b.a0, a.a1 + b.a1, a.a2 + b.a2)


def scale(lam, a: Scator) -> Scator:
    lam = as_number(lam)
    return Scator(lam * a.a0, lam * a.a1, lam * a.a2)


def product(a: Scator, b: Scator, tol: Tolerance | None = None) -> Scator:
    """Scator product.  Commutative, associative away from zero divisors,
    not distributive over ``+``.
    """
    _require_scalar(a, tol, "left factor")
    _require_scalar(b, tol, "right factor")
    a0, a1, a2 = a
    b0, b1, b2 = b
    return Scator(
        a0 * b0 + a1 * b1 + a2 * b2 + a1 * a2 * b1 * b2 / (a0 * b0),
        a0 * b1 + a1 * b0 + a1 * a2 * b2 / a0 + a2 * b1 * b2 / b0,
        a0 * b2 + a2 * b0 + a1 * a2 * b1 / a0 + a1 * b1 * b2 / b0,
    )


def conjugate(a: Scator) -> Scator:
    return Scator(a.a0, -a.a1, -a.a2)


def modulus_squared(a: Scator, tol: Tolerance | None = None) -> Number:
    """Scator-deformed Lorentz modulus ``a0^2 (1 - a1^2/a0^2)(1 - a2^2/a0^2)``.

    Computed in the factored form ``(a0^2 - a1^2)(a0^2 - a2^2) / a0^2`` so the
    sign is reliable in floating point.  May be negative.
    """
    _require_scalar(a, tol)
    s0 = a.a0 * a.a0
    return (s0 - a.a1 * a.a1) * (s0 - a.a2 * a.a2) / s0


def _light_like_pair(s0: Number, s: Number, tol: Tolerance) -> bool:
    if is_exact(s0, s):
        return s0 == s
    return abs(s0 - s) <= tol.eps * max(abs(s0), abs(s), 1.0)


def classify(a: Scator, tol: Tolerance | None = None) -> Causality:
    """Causal type of ``a``.

    Time-like inside the light bipyramid (``a0^2`` above both director
    squares) and in the wings (below both).  Light-like wins whenever either
    director square equals ``a0^2``.
    """
    tol = tol or default_tolerance()
    s0, s1, s2 = a.a0 * a.a0, a.a1 * a.a1, a.a2 * a.a2
    if _light_like_pair(s0, s1, tol) or _light_like_pair(s0, s2, tol):
        return Causality.LightLike
    if (s0 > s1) == (s0 > s2):
        return Causality.TimeLike
    return Causality.SpaceLike


def inverse(a: Scator, tol: Tolerance | None = None) -> Scator:
    """``conjugate(a) / modulus_squared(a)``; light-like scators raise."""
    m = modulus_squared(a, tol)
    if m == 0 or (not is_exact(m) and classify(a, tol) is Causality.LightLike):
        raise NotInvertible(f"light-like scator {a} is not invertible", a)
    return scale(1 / m, conjugate(a))


def delta_coefficient(a: Scator, b: Scator, tol: Tolerance | None = None) -> Number:
    """Scalar factor multiplying the dual of ``c`` in the distributivity defect."""
    _require_scalar(a, tol)
    _require_scalar(b, tol)
    a0, a1, a2 = a
    b0, b1, b2 = b
    if is_zero_scalar(a0 + b0, tol):
        raise DomainError(f"sum {add(a, b)} has zero scalar component", (a, b))
    return (b0 * a1 - a0 * b1) * (a0 * b2 - b0 * a2) / (a0 * b0 * (a0 + b0))


def delta_defect(a: Scator, b: Scator, c: Scator, tol: Tolerance | None = None) -> Scator:
    """Closed form of ``(a + b) c - a c - b c``.

    Equals ``delta_coefficient(a, b)`` times the ordinary dual
    ``(c1 c2 / c0; c2, c1)`` of ``c``; vanishes when ``b`` is parallel to ``a``.
    """
    k = delta_coefficient(a, b, tol)
    _require_scalar(c, tol)
    c0, c1, c2 = c
    return Scator(k * (c1 * c2 / c0), k * c2, k * c1)


def delta_direct(a: Scator, b: Scator, c: Scator, tol: Tolerance | None = None) -> Scator:
    """The defect evaluated literally from three scator products."""
    return product(add(a, b), c, tol) - product(a, c, tol) - product(b, c, tol)
