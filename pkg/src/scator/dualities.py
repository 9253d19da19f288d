"""Ordinary, internal and external dualities.

Each duality is multiplication of the embedded scator by a basis element
``d`` with ``d**2 == 1`` followed by the projection back to scators.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Callable

from . import embedding as em
from .core import Scator, product
from .numeric import DomainError, Number, Tolerance, close, is_zero_scalar


class DualityKind(enum.Enum):
    Identity = "1"
    Internal = "i1"
    External = "i2"
    Ordinary = "i12"

    @property
    def element(self) -> em.MultiVec4:
        return em.MultiVec4.basis(self.value)

    def compose(self, other: "DualityKind") -> "DualityKind":
        """Kind whose basis element is the product of the two elements."""
        mask = em.MultiVec4.BLADES[em.MultiVec4.NAMES.index(self.value)] ^ em.MultiVec4.BLADES[
            em.MultiVec4.NAMES.index(other.value)
        ]
        return DualityKind(em.MultiVec4.NAMES[em.MultiVec4.BLADES.index(mask)])


PROPER_KINDS = (DualityKind.Internal, DualityKind.External, DualityKind.Ordinary)


def dual(a: Scator, kind: DualityKind = DualityKind.Ordinary, tol: Tolerance | None = None) -> Scator:
    """Closed-form duals of ``a = (a0; a1, a2)``:

    - Ordinary: ``(a1 a2 / a0; a2, a1)``
    - Internal: ``(a1; a0, a1 a2 / a0)``
    - External: ``(a2; a1 a2 / a0, a0)``

    The result may have a zero scalar component (e.g. ``a1 == 0`` for the
    ordinary dual); it is returned as is, later products will reject it.
    """
    if is_zero_scalar(a.a0, tol):
        raise DomainError(f"dual undefined for {a}: zero scalar component", a)
    a0, a1, a2 = a
    a3 = a1 * a2 / a0
    if kind is DualityKind.Ordinary:
        return Scator(a3, a2, a1)
    if kind is DualityKind.Internal:
        return Scator(a1, a0, a3)
    if kind is DualityKind.External:
        return Scator(a2, a3, a0)
    return a


def dual_mv(x: em.MultiVector, kind: DualityKind) -> em.MultiVector:
    """Multiply by the basis element of ``kind``; an involution."""
    return em.mv_product(kind.element, x)


def dual_via_embedding(a: Scator, kind: DualityKind, tol: Tolerance | None = None) -> Scator:
    return em.project(dual_mv(em.embed(a, tol), kind))


@dataclass
class IdentityCheck:
    name: str
    ok: bool
    residual: tuple[Number, ...] | None = None
    error: str | None = None


@dataclass
class TranslatorReport:
    a: Scator
    b: Scator
    checks: list[IdentityCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[IdentityCheck]:
        return [c for c in self.checks if not c.ok]


def _compare(name: str, lhs: Callable[[], Scator], rhs: Callable[[], Scator],
             tol: Tolerance | None) -> IdentityCheck:
    try:
        left, right = lhs(), rhs()
    except DomainError as exc:
        return IdentityCheck(name, False, error=str(exc))
    residual = tuple(p - q for p, q in zip(left, right))
    ok = all(close(p, q, tol) for p, q in zip(left, right))
    return IdentityCheck(name, ok, residual)


def translator_table(a: Scator, b: Scator, tol: Tolerance | None = None) -> TranslatorReport:
    """Evaluate every duality translation law for the pair ``(a, b)``.

    For each ``p`` in {i1, i2, i12}: ``d_p(ab) = d_p(a) b`` and
    ``d_p(ab) = a d_p(b)`` (6 laws); for each ordered pair ``(p, q)``:
    ``d_p(a) d_q(b) = d_pq(ab)`` (9 laws).  Every side is computed on its
    own, no shared subexpressions.
    """
    report = TranslatorReport(a, b)
    for p in PROPER_KINDS:
        report.checks.append(_compare(
            f"d_{p.value}(ab) = d_{p.value}(a) b",
            lambda p=p: dual(product(a, b, tol), p, tol),
            lambda p=p: product(dual(a, p, tol), b, tol),
            tol,
        ))
        report.checks.append(_compare(
            f"d_{p.value}(ab) = a d_{p.value}(b)",
            lambda p=p: dual(product(a, b, tol), p, tol),
            lambda p=p: product(a, dual(b, p, tol), tol),
            tol,
        ))
    for p, q in itertools.product(PROPER_KINDS, repeat=2):
        pq = p.compose(q)
        report.checks.append(_compare(
            f"d_{p.value}(a) d_{q.value}(b) = d_{pq.value}(ab)",
            lambda p=p, q=q: product(dual(a, p, tol), dual(b, q, tol), tol),
            lambda pq=pq: dual(product(a, b, tol), pq, tol),
            tol,
        ))
    return report


def translator_defined(a: Scator, b: Scator) -> bool:
    """Whether every product in :func:`translator_table` has non-zero scalars."""
    if 0 in (a.a0, a.a1, a.a2, b.a0, b.a1, b.a2):
        return False
    return product(a, b).a0 != 0
