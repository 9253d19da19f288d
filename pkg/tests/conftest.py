from fractions import Fraction

import pytest
import sympy
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from scator import Scator, Scator3

settings.register_profile("default", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.filter_too_much])
settings.load_profile("default")

DIGITS = [d for d in range(-9, 10) if d != 0]

nonzero_rationals = st.builds(Fraction, st.sampled_from(DIGITS), st.sampled_from(DIGITS))
rationals = st.builds(Fraction, st.integers(-9, 9), st.sampled_from(DIGITS))


def scators(nonzero_directors=False):
    director = nonzero_rationals if nonzero_directors else rationals
    return st.builds(Scator, nonzero_rationals, director, director)


def scators3(nonzero_directors=False):
    director = nonzero_rationals if nonzero_directors else rationals
    return st.builds(Scator3, nonzero_rationals, director, director, director)


def pairs(nonzero_directors=False):
    return st.tuples(scators(nonzero_directors), scators(nonzero_directors)).filter(
        lambda p: p[0].a0 + p[1].a0 != 0
    )


I1, I2, I3 = sympy.symbols("i1 i2 i3")


def reduce_generators(expr, gens):
    """Expand and apply i_k**2 = 1: an oracle independent of the table code."""
    poly = sympy.Poly(sympy.expand(expr), *gens)
    out = {}
    for monom, coeff in poly.terms():
        key = tuple(e % 2 for e in monom)
        out[key] = out.get(key, 0) + coeff
    return out


def as_poly(coeffs, monomials, gens):
    return sum(sympy.Rational(c) * sympy.Mul(*(g ** e for g, e in zip(gens, m)))
               for c, m in zip(coeffs, monomials))


MONOMIALS4 = [(0, 0), (1, 0), (0, 1), (1, 1)]
MONOMIALS8 = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1)]


def oracle_product(x, y, monomials, gens):
    reduced = reduce_generators(as_poly(x, monomials, gens) * as_poly(y, monomials, gens), gens)
    return tuple(Fraction(str(reduced.get(m, 0))) for m in monomials)


@pytest.fixture
def oracle4():
    return lambda x, y: oracle_product(x, y, MONOMIALS4, (I1, I2))


@pytest.fixture
def oracle8():
    return lambda x, y: oracle_product(x, y, MONOMIALS8, (I1, I2, I3))


# acceptance report -----------------------------------------------------------

ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
