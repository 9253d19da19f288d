"""1+3 dimensional scators via the 8-dimensional embedding algebra.

The product is defined as the projection of the product of embeddings,
which is the same construction that reproduces the 1+2 product exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import embedding as em
from .core import Scator
from .numeric import (
    DomainError,
    NotInvertible,
    NotInImage,
    Number,
    Tolerance,
    as_number,
    default_tolerance,
    format_number,
    is_exact,
    is_zero_scalar,
)


class MultiVec8(em.MultiVector):
    """Coefficients over ``1, i1, i2, i3, i12, i13, i23, i123``."""

    BLADES = (0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111)
    NAMES = ("1", "i1", "i2", "i3", "i12", "i13", "i23", "i123")
    # frozen copy of embedding.commuting_table(BLADES); regenerated in the tests
    TABLE = (
        ((0, 1), (1, 1), (2, 1), (3, 1), (4, 1), (5, 1), (6, 1), (7, 1)),
        ((1, 1), (0, 1), (4, 1), (5, 1), (2, 1), (3, 1), (7, 1), (6, 1)),
        ((2, 1), (4, 1), (0, 1), (6, 1), (1, 1), (7, 1), (3, 1), (5, 1)),
        ((3, 1), (5, 1), (6, 1), (0, 1), (7, 1), (1, 1), (2, 1), (4, 1)),
        ((4, 1), (2, 1), (1, 1), (7, 1), (0, 1), (6, 1), (5, 1), (3, 1)),
        ((5, 1), (3, 1), (7, 1), (1, 1), (6, 1), (0, 1), (4, 1), (2, 1)),
        ((6, 1), (7, 1), (3, 1), (2, 1), (5, 1), (4, 1), (0, 1), (1, 1)),
        ((7, 1), (6, 1), (5, 1), (4, 1), (3, 1), (2, 1), (1, 1), (0, 1)),
    )
    __slots__ = ()


@dataclass(frozen=True)
class Scator3:
    """A 1+3 scator ``(a0; a1, a2, a3)``."""

    a0: Number
    a1: Number
    a2: Number
    a3: Number

    def __post_init__(self):
        for name in ("a0", "a1", "a2", "a3"):
            object.__setattr__(self, name, as_number(getattr(self, name)))

    def __iter__(self) -> Iterator[Number]:
        yield from (self.a0, self.a1, self.a2, self.a3)

    @property
    def directors(self) -> tuple[Number, Number, Number]:
        return (self.a1, self.a2, self.a3)

    @classmethod
    def lift(cls, a: Scator) -> "Scator3":
        """Embed a 1+2 scator with a zero third director."""
        return cls(a.a0, a.a1, a.a2, 0)

    def reduce(self) -> Scator:
        return Scator(self.a0, self.a1, self.a2)

    def to_float(self) -> "Scator3":
        return Scator3(*(float(x) for x in self))

    def __add__(self, other):
        if not isinstance(other, Scator3):
            return NotImplemented
        return add3(self, other)

    def __sub__(self, other):
        if not isinstance(other, Scator3):
            return NotImplemented
        return Scator3(*(p - q for p, q in zip(self, other)))

    def __neg__(self):
        return scale3(-1, self)

    def __mul__(self, other):
        if isinstance(other, Scator3):
            return product3(self, other)
        try:
            lam = as_number(other)
        except TypeError:
            return NotImplemented
        return scale3(lam, self)

    def __rmul__(self, other):
        try:
            lam = as_number(other)
        except TypeError:
            return NotImplemented
        return scale3(lam, self)

    def __str__(self):
        a0, a1, a2, a3 = (format_number(x) for x in self)
        return f"({a0}; {a1}, {a2}, {a3})"


def _require_scalar(a: Scator3, tol: Tolerance | None) -> None:
    if is_zero_scalar(a.a0, tol):
        raise DomainError(f"{a} has zero scalar component", a)


def add3(a: Scator3, b: Scator3) -> Scator3:
    return Scator3(*(p + q for p, q in zip(a, b)))


def scale3(lam, a: Scator3) -> Scator3:
    lam = as_number(lam)
    return Scator3(*(lam * x for x in a))


def conjugate3(a: Scator3) -> Scator3:
    return Scator3(a.a0, -a.a1, -a.a2, -a.a3)


def embed3(a: Scator3, tol: Tolerance | None = None) -> MultiVec8:
    """``a0 (1 + a1/a0 i1)(1 + a2/a0 i2)(1 + a3/a0 i3)`` in expanded form."""
    _require_scalar(a, tol)
    a0, a1, a2, a3 = a
    return MultiVec8(
        a0, a1, a2, a3,
        a1 * a2 / a0, a1 * a3 / a0, a2 * a3 / a0,
        a1 * a2 * a3 / (a0 * a0),
    )


def embed3_factorized(a: Scator3) -> MultiVec8:
    if a.a0 == 0:
        raise DomainError(f"{a} has zero scalar component", a)
    out = MultiVec8.basis("1")
    for name, ak in zip(("i1", "i2", "i3"), a.directors):
        out = out * (MultiVec8.basis("1") + (ak / a.a0) * MultiVec8.basis(name))
    return a.a0 * out


def project3(x: MultiVec8) -> Scator3:
    return Scator3(*x.coeffs[:4])


def in_image3(x: MultiVec8, tol: Tolerance | None = None) -> bool:
    c = x.coeffs
    if is_zero_scalar(c[0], tol):
        return False
    expected = embed3(project3(x), tol)
    if is_exact(*c):
        return expected == x
    eps = (tol or default_tolerance()).eps
    return all(abs(float(p) - float(q)) <= eps * max(1.0, abs(float(q))) for p, q in zip(c, expected.coeffs))


def unembed3(x: MultiVec8, tol: Tolerance | None = None) -> Scator3:
    if not in_image3(x, tol):
        raise NotInImage(f"{x} is not the embedding of a 1+3 scator", x)
    return project3(x)


def product3(a: Scator3, b: Scator3, tol: Tolerance | None = None) -> Scator3:
    return project3(em.mv_product(embed3(a, tol), embed3(b, tol)))


def modulus_squared3(a: Scator3, tol: Tolerance | None = None) -> Number:
    """``a0^2 * prod_k (1 - ak^2 / a0^2)``."""
    _require_scalar(a, tol)
    s0 = a.a0 * a.a0
    out = s0
    for ak in a.directors:
        out = out * (s0 - ak * ak) / s0
    return out


def inverse3(a: Scator3, tol: Tolerance | None = None) -> Scator3:
    m = modulus_squared3(a, tol)
    if m == 0:
        raise NotInvertible(f"light-like scator {a} is not invertible", a)
    if not is_exact(m):
        tol = tol or default_tolerance()
        s0 = float(a.a0) ** 2
        if any(abs(s0 - float(ak) ** 2) <= tol.eps * max(s0, float(ak) ** 2, 1.0) for ak in a.directors):
            raise NotInvertible(f"light-like scator {a} is not invertible", a)
    return scale3(1 / m, conjugate3(a))


def dual3(a: Scator3, blade: str, tol: Tolerance | None = None) -> Scator3:
    """Generic duality: project ``d * F(a)`` for a basis blade ``d``."""
    return project3(em.mv_product(MultiVec8.basis(blade), embed3(a, tol)))


@dataclass(frozen=True)
class DefectCoefficients3:
    c12: Number
    c13: Number
    c23: Number
    c123: Number

    def as_multivector(self) -> MultiVec8:
        return MultiVec8(0, 0, 0, 0, self.c12, self.c13, self.c23, self.c123)


def defect_coefficients3(a: Scator3, b: Scator3, tol: Tolerance | None = None) -> DefectCoefficients3:
    """Closed forms of the bivector and trivector parts of ``F(a+b) - F(a) - F(b)``."""
    _require_scalar(a, tol)
    _require_scalar(b, tol)
    s0 = a.a0 + b.a0
    if is_zero_scalar(s0, tol):
        raise DomainError(f"{a} + {b} has zero scalar component", (a, b))
    s = add3(a, b)

    def pair(i: int, j: int) -> Number:
        x, y, z = tuple(s), tuple(a), tuple(b)
        return x[i] * x[j] / s0 - y[i] * y[j] / a.a0 - z[i] * z[j] / b.a0

    c123 = (
        s.a1 * s.a2 * s.a3 / (s0 * s0)
        - a.a1 * a.a2 * a.a3 / (a.a0 * a.a0)
        - b.a1 * b.a2 * b.a3 / (b.a0 * b.a0)
    )
    return DefectCoefficients3(pair(1, 2), pair(1, 3), pair(2, 3), c123)


def additive_defect3(a: Scator3, b: Scator3, tol: Tolerance | None = None) -> MultiVec8:
    """``F(a+b) - F(a) - F(b)`` from the closed-form coefficients."""
    return defect_coefficients3(a, b, tol).as_multivector()


def additive_defect3_direct(a: Scator3, b: Scator3, tol: Tolerance | None = None) -> MultiVec8:
    return embed3(add3(a, b), tol) - embed3(a, tol) - embed3(b, tol)
