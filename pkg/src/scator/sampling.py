"""Seeded random rational scators for identity sweeps."""
from __future__ import annotations

import random
from fractions import Fraction

from .core import Scator
from .scator3d import Scator3

DIGITS = [d for d in range(-9, 10) if d != 0]


def rational(rng: random.Random, allow_zero: bool = True) -> Fraction:
    """``p/q`` with ``p`` in [-9, 9] (non-zero unless allowed) and ``q`` in [-9, 9] \\ {0}."""
    p = rng.randint(-9, 9) if allow_zero else rng.choice(DIGITS)
    return Fraction(p, rng.choice(DIGITS))


def scator(rng: random.Random, nonzero_directors: bool = False) -> Scator:
    return Scator(
        rational(rng, allow_zero=False),
        rational(rng, allow_zero=not nonzero_directors),
        rational(rng, allow_zero=not nonzero_directors),
    )


def scator3(rng: random.Random, nonzero_directors: bool = False) -> Scator3:
    return Scator3(
        rational(rng, allow_zero=False),
        *(rational(rng, allow_zero=not nonzero_directors) for _ in range(3)),
    )


def scator_pair(rng: random.Random, nonzero_directors: bool = False) -> tuple[Scator, Scator]:
    """Two scators whose sum keeps a non-zero scalar component."""
    while True:
        a = scator(rng, nonzero_directors)
        b = scator(rng, nonzero_directors)
        if a.a0 + b.a0 != 0:
            return a, b


def scator3_pair(rng: random.Random, nonzero_directors: bool = False) -> tuple[Scator3, Scator3]:
    while True:
        a = scator3(rng, nonzero_directors)
        b = scator3(rng, nonzero_directors)
        if a.a0 + b.a0 != 0:
            return a, b
