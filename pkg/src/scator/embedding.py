"""Distributive commutative algebra hosting the scators.

Basis elements are products of commuting generators ``i_k`` with
``i_k**2 == 1``; a blade is therefore identified by the bitmask of its
generators and the product of two blades is their XOR with sign +1.  The
multiplication table is stored as data per algebra, so the 4-dimensional
algebra here and the 8-dimensional one in :mod:`scator.scator3d` share one
implementation.
"""
from __future__ import annotations

from typing import ClassVar, Iterable, Sequence

from .core import Scator, add
from .numeric import (
    DomainError,
    NotInImage,
    Number,
    Tolerance,
    as_number,
    default_tolerance,
    format_number,
    is_exact,
    is_zero_scalar,
)

Table = tuple[tuple[tuple[int, int], ...], ...]


def commuting_table(blades: Sequence[int]) -> Table:
    """Multiplication table ``table[i][j] = (k, sign)`` for commuting,
    self-inverse generators, with blades listed as generator bitmasks."""
    index = {blade: k for k, blade in enumerate(blades)}
    if len(index) != len(blades):
        raise ValueError("duplicate blade")
    return tuple(
        tuple((index[x ^ y], 1) for y in blades)
        for x in blades
    )


class MultiVector:
    """Element of a commutative blade algebra; subclasses fix the basis."""

    BLADES: ClassVar[tuple[int, ...]]
    NAMES: ClassVar[tuple[str, ...]]
    TABLE: ClassVar[Table]

    __slots__ = ("coeffs",)

    def __init__(self, *coeffs):
        if len(coeffs) == 1 and not isinstance(coeffs[0], (int, float, str)) and hasattr(coeffs[0], "__iter__"):
            coeffs = tuple(coeffs[0])
        if len(coeffs) != len(self.BLADES):
            raise ValueError(f"{type(self).__name__} takes {len(self.BLADES)} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", tuple(as_number(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def zero(cls):
        return cls(*([0] * len(cls.BLADES)))

    @classmethod
    def basis(cls, name: str):
        coeffs = [0] * len(cls.BLADES)
        coeffs[cls.NAMES.index(name)] = 1
        return cls(*coeffs)

    def __getitem__(self, name: str) -> Number:
        return self.coeffs[self.NAMES.index(name)]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((type(self).__name__, self.coeffs))

    def __repr__(self):
        return f"{type(self).__name__}{tuple(self.coeffs)!r}"

    def __str__(self):
        return "(" + "; ".join(format_number(c) for c in self.coeffs) + ")"

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return mv_add(self, other)

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return mv_add(self, mv_scale(-1, other))

    def __neg__(self):
        return mv_scale(-1, self)

    def __mul__(self, other):
        if type(other) is type(self):
            return mv_product(self, other)
        try:
            lam = as_number(other)
        except TypeError:
            return NotImplemented
        return mv_scale(lam, self)

    def __rmul__(self, other):
        try:
            lam = as_number(other)
        except TypeError:
            return NotImplemented
        return mv_scale(lam, self)

    def to_float(self):
        return type(self)(*(float(c) for c in self.coeffs))

    def grade(self, k: int) -> int:
        return bin(self.BLADES[k]).count("1")


class MultiVec4(MultiVector):
    """``c0 + c1 i1 + c2 i2 + c12 i12`` with ``i12 = i1 i2``."""

    BLADES = (0b00, 0b01, 0b10, 0b11)
    NAMES = ("1", "i1", "i2", "i12")
    # frozen copy of commuting_table(BLADES); regenerated in the tests
    TABLE = (
        ((0, 1), (1, 1), (2, 1), (3, 1)),
        ((1, 1), (0, 1), (3, 1), (2, 1)),
        ((2, 1), (3, 1), (0, 1), (1, 1)),
        ((3, 1), (2, 1), (1, 1), (0, 1)),
    )
    __slots__ = ()

    @property
    def c0(self):
        return self.coeffs[0]

    @property
    def c1(self):
        return self.coeffs[1]

    @property
    def c2(self):
        return self.coeffs[2]

    @property
    def c12(self):
        return self.coeffs[3]


ONE = MultiVec4.basis("1")
I1 = MultiVec4.basis("i1")
I2 = MultiVec4.basis("i2")
I12 = MultiVec4.basis("i12")


def _check_same(x: MultiVector, y: MultiVector) -> None:
    if type(x) is not type(y):
        raise TypeError(f"cannot combine {type(x).__name__} with {type(y).__name__}")


def mv_product(x: MultiVector, y: MultiVector) -> MultiVector:
    _check_same(x, y)
    out = [0] * len(x.coeffs)
    table = x.TABLE
    for i, xi in enumerate(x.coeffs):
        if xi == 0:
            continue
        row = table[i]
        for j, yj in enumerate(y.coeffs):
            if yj == 0:
                continue
            k, s = row[j]
            out[k] = out[k] + s * xi * yj
    return type(x)(*out)


def mv_add(x: MultiVector, y: MultiVector) -> MultiVector:
    _check_same(x, y)
    return type(x)(*(p + q for p, q in zip(x.coeffs, y.coeffs)))


def mv_scale(lam, x: MultiVector) -> MultiVector:
    lam = as_number(lam)
    return type(x)(*(lam * c for c in x.coeffs))


def mv_conjugate(x: MultiVector) -> MultiVector:
    """Flip every generator's sign: odd-grade blades change sign."""
    return type(x)(*(-c if x.grade(k) % 2 else c for k, c in enumerate(x.coeffs)))


def embed(a: Scator, tol: Tolerance | None = None) -> MultiVec4:
    """Fundamental embedding ``(a0; a1, a2) -> (a0; a1, a2, a1 a2 / a0)``."""
    if is_zero_scalar(a.a0, tol):
        raise DomainError(f"cannot embed {a}: zero scalar component", a)
    return MultiVec4(a.a0, a.a1, a.a2, a.a1 * a.a2 / a.a0)


def embed_factorized(a: Scator) -> MultiVec4:
    """``a0 (1 + (a1/a0) i1)(1 + (a2/a0) i2)``, built by multiplication."""
    if a.a0 == 0:
        raise DomainError(f"cannot embed {a}: zero scalar component", a)
    f1 = ONE + (a.a1 / a.a0) * I1
    f2 = ONE + (a.a2 / a.a0) * I2
    return a.a0 * (f1 * f2)


def project(x: MultiVec4) -> Scator:
    """Natural projection: drop the ``i12`` coefficient."""
    return Scator(x.c0, x.c1, x.c2)


def in_image(x: MultiVec4, tol: Tolerance | None = None) -> bool:
    if is_zero_scalar(x.c0, tol):
        return False
    if is_exact(*x.coeffs):
        return x.c12 * x.c0 == x.c1 * x.c2
    eps = (tol or default_tolerance()).eps
    p = float(x.c1) * float(x.c2)
    return abs(float(x.c12) * float(x.c0) - p) <= eps * (1.0 + abs(p))


def unembed(x: MultiVec4, tol: Tolerance | None = None) -> Scator:
    """Inverse of :func:`embed`, defined only on its image."""
    if not in_image(x, tol):
        raise NotInImage(f"{x} is not the embedding of a scator", x)
    return project(x)


def kappa(a: Scator, b: Scator, tol: Tolerance | None = None) -> Number:
    """Additive defect of the embedding: ``F(a+b) - F(a) - F(b) = kappa * i12``."""
    for s in (a, b):
        if is_zero_scalar(s.a0, tol):
            raise DomainError(f"kappa undefined: {s} has zero scalar component", s)
    s0 = a.a0 + b.a0
    if is_zero_scalar(s0, tol):
        raise DomainError(f"kappa undefined: {a} + {b} has zero scalar component", (a, b))
    return (a.a1 + b.a1) * (a.a2 + b.a2) / s0 - a.a1 * a.a2 / a.a0 - b.a1 * b.a2 / b.a0


def kappa_n(scators: Iterable[Scator], tol: Tolerance | None = None) -> Number:
    """Defect coefficient of an n-fold sum, accumulated over prefix sums."""
    scators = list(scators)
    if not scators:
        raise ValueError("kappa_n needs at least one scator")
    if is_zero_scalar(scators[0].a0, tol):
        raise DomainError(f"{scators[0]} has zero scalar component", scators[0])
    total: Number = as_number(0)
    prefix = scators[0]
    for s in scators[1:]:
        total = total + kappa(prefix, s, tol)
        prefix = add(prefix, s)
    return total
