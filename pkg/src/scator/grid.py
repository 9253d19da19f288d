"""Causal-region sampling of a fixed-time cross-section as CSV."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, TextIO

from .core import Causality, Scator, classify, modulus_squared
from .numeric import Number, Tolerance, as_number, format_number

HEADER = "a1,a2,class,norm2"


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class GridSpec:
    """Square grid ``[min, max]^2`` of director values at scalar ``a0``.

    Coordinates are ``min + k * step`` computed exactly, so decimal steps
    such as 0.05 land on the light-like lines ``|a_k| = |a0|`` exactly.
    """

    a0: Fraction
    min: Fraction
    max: Fraction
    step: Fraction

    def __post_init__(self):
        for name in ("a0", "min", "max", "step"):
            value = getattr(self, name)
            if isinstance(value, float):
                value = Fraction(repr(value))
            object.__setattr__(self, name, Fraction(value))
        if self.a0 == 0:
            raise UsageError("a0 must be non-zero")
        if self.step <= 0:
            raise UsageError("step must be positive")
        if self.min > self.max:
            raise UsageError("min must not exceed max")

    def axis(self) -> list[Fraction]:
        if self.min == self.max:
            return []
        count = int((self.max - self.min) / self.step)
        return [self.min + k * self.step for k in range(count + 1)]


@dataclass(frozen=True)
class Sample:
    a1: Number
    a2: Number
    causality: Causality
    norm2: Number


def sample_regions(spec: GridSpec, exact: bool = False, tol: Tolerance | None = None) -> Iterator[Sample]:
    """Classify every grid point, ``a1``-major, both axes ascending."""
    axis = spec.axis()
    a0: Number = spec.a0
    if not exact:
        axis = [float(x) for x in axis]
        a0 = float(a0)
    for a1 in axis:
        for a2 in axis:
            s = Scator(a0, a1, a2)
            yield Sample(a1, a2, classify(s, tol), modulus_squared(s, tol))


def write_csv(samples, out: TextIO) -> int:
    out.write(HEADER + "\n")
    n = 0
    for s in samples:
        out.write(f"{format_number(s.a1)},{format_number(s.a2)},{s.causality.code},{format_number(s.norm2)}\n")
        n += 1
    return n


def parse_number(text: str) -> Fraction:
    try:
        return Fraction(as_number(text.strip()))
    except (TypeError, ValueError, ZeroDivisionError):
        raise UsageError(f"not a number: {text!r}") from None
