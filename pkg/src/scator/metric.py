"""Norm multiplicativity and the (non-bilinear) scalar product of scators."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .core import Scator, add, modulus_squared, product, scale
from .numeric import DomainError, Number, Tolerance, as_number, is_zero_scalar


def dot(a: Scator, b: Scator, tol: Tolerance | None = None) -> Number:
    """Scalar product ``(|a+b|^2 - |a|^2 - |b|^2) / 2`` in closed form.

    Ill-defined when ``a``, ``b`` or ``a + b`` has a zero scalar component.
    The closed form avoids subtracting three large norms.
    """
    a0, a1, a2 = a
    b0, b1, b2 = b
    for s0, what in ((a0, a), (b0, b), (a0 + b0, add(a, b))):
        if is_zero_scalar(s0, tol):
            raise DomainError(f"scalar product undefined: {what} has zero scalar component", what)
    s0 = a0 + b0
    s12 = (a1 + b1) * (a2 + b2)
    return (
        a0 * b0 - a1 * b1 - a2 * b2
        + s12 * s12 / (2 * s0 * s0)
        - (a1 * a2) ** 2 / (2 * a0 * a0)
        - (b1 * b2) ** 2 / (2 * b0 * b0)
    )


def dot_polarization(a: Scator, b: Scator, tol: Tolerance | None = None) -> Number:
    """Reference value straight from the polarization definition."""
    return (modulus_squared(add(a, b), tol) - modulus_squared(a, tol) - modulus_squared(b, tol)) / 2


@dataclass
class NormReport:
    product_residual: Number
    scaling_residual: Number

    @property
    def ok(self) -> bool:
        return self.product_residual == 0 and self.scaling_residual == 0


def norm_product_check(a: Scator, b: Scator, lam=-2, tol: Tolerance | None = None) -> NormReport:
    """Residuals of ``|ab|^2 = |a|^2 |b|^2`` and ``|lam a|^2 = lam^2 |a|^2``."""
    lam = as_number(lam)
    ab = product(a, b, tol)
    na = modulus_squared(a, tol)
    return NormReport(
        product_residual=modulus_squared(ab, tol) - na * modulus_squared(b, tol),
        scaling_residual=modulus_squared(scale(lam, a), tol) - lam * lam * na,
    )


def _small_scators(scalars=(1, 2), directors=(-1, 0, 1, 2)):
    for a0 in scalars:
        for a1, a2 in itertools.product(directors, repeat=2):
            yield Scator(a0, a1, a2)


def _parallel(a: Scator, b: Scator) -> bool:
    # b = t a with t = b0 / a0
    t = Fraction(b.a0) / Fraction(a.a0)
    return b.a1 == t * a.a1 and b.a2 == t * a.a2


def nonbilinearity_witness() -> tuple[Scator, Scator, Scator]:
    """First triple, in a fixed grid order, with ``(a+b).c != a.c + b.c``.

    Candidates use positive integer scalars so every sum stays defined;
    parallel ``a``, ``b`` are skipped.
    """
    grid = list(_small_scators())
    for a, b, c in itertools.product(grid, repeat=3):
        if _parallel(a, b):
            continue
        if dot(add(a, b), c) != dot(a, c) + dot(b, c):
            return a, b, c
    raise RuntimeError("no non-bilinearity witness on the search grid")


def homogeneity_witness() -> tuple[Fraction, Scator, Scator]:
    """``(lam, a, b)`` with ``lam (a.b) != (lam a).b``, from the same grid."""
    grid = list(_small_scators())
    for lam in (Fraction(2), Fraction(3), Fraction(1, 2)):
        for a, b in itertools.product(grid, repeat=2):
            if lam * dot(a, b) != dot(scale(lam, a), b):
                return lam, a, b
    raise RuntimeError("no homogeneity witness on the search grid")
