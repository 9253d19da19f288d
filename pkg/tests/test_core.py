from fractions import Fraction as F

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import nonzero_rationals, oracle_product, pairs, scators, MONOMIALS4, I1, I2
from scator import core
from scator.core import Causality, Scator
from scator.numeric import DomainError, NotInvertible, Tolerance, close


def test_identity_element():
    b = Scator(F(3, 2), -4, F(2, 7))
    assert core.product(core.ONE, b) == b


def test_product_matches_embedding_oracle():
    a = Scator(2, 1, 1)
    fa = (2, 1, 1, F(1, 2))
    c0, c1, c2, _ = oracle_product(fa, fa, MONOMIALS4, (I1, I2))
    assert core.product(a, a) == Scator(c0, c1, c2) == Scator(F(25, 4), 5, 5)


def test_product_cross_terms_vanish():
    assert core.product(Scator(1, 1, 0), Scator(1, 0, 1)) == Scator(1, 1, 1)


def test_operator_forms():
    a, b = Scator(2, 1, 1), Scator(1, 0, 1)
    assert a * b == core.product(a, b)
    assert 3 * a == a * 3 == Scator(6, 3, 3)
    assert a + b == Scator(3, 1, 2)
    assert a - a == core.ZERO
    assert -a + a == core.ZERO


def test_ints_stay_exact():
    a = Scator(3, 1, 1)
    assert isinstance(core.product(a, a).a0, F)


def test_conjugate():
    assert core.conjugate(Scator(2, 1, 1)) == Scator(2, -1, -1)
    assert core.conjugate(Scator(5, 0, 0)) == Scator(5, 0, 0)


@given(scators())
def test_conjugate_involution(a):
    assert core.conjugate(core.conjugate(a)) == a


@pytest.mark.parametrize("a, expected", [
    (Scator(2, 1, 1), F(9, 4)),
    (Scator(1, 1, 17), 0),
    (Scator(1, 1, F(-3, 5)), 0),
    (Scator(F(-7, 3), 0, 0), F(49, 9)),
])
def test_modulus_squared(a, expected):
    assert core.modulus_squared(a) == expected


def test_inverse():
    a = Scator(2, 1, 1)
    inv = core.inverse(a)
    assert inv == Scator(F(8, 9), F(-4, 9), F(-4, 9))
    assert core.product(a, inv) == core.ONE
    assert core.inverse(Scator(F(2, 3), 0, 0)) == Scator(F(3, 2), 0, 0)


def test_light_like_not_invertible():
    with pytest.raises(NotInvertible):
        core.inverse(Scator(1, 1, 0))


@pytest.mark.parametrize("op", [
    lambda a: core.product(a, Scator(1, 1, 1)),
    lambda a: core.product(Scator(1, 1, 1), a),
    core.modulus_squared,
    core.inverse,
])
def test_zero_scalar_rejected(op):
    with pytest.raises(DomainError):
        op(Scator(0, 1, 0))


def test_float_guard_is_opt_in():
    tiny = Scator(1e-300, 0.0, 0.0)
    core.product(tiny, Scator(1.0, 0.0, 0.0))
    with pytest.raises(DomainError):
        core.product(tiny, Scator(1.0, 0.0, 0.0), tol=Tolerance(guard=1e-12))


@pytest.mark.parametrize("a, kind", [
    (Scator(2, 1, 1), Causality.TimeLike),
    (Scator(1, 2, 3), Causality.TimeLike),
    (Scator(1, 2, 0), Causality.SpaceLike),
    (Scator(1, 0, -2), Causality.SpaceLike),
    (Scator(1, 1, 7), Causality.LightLike),
    (Scator(-3, 0, 3), Causality.LightLike),
    (Scator(1, 1, 0), Causality.LightLike),
])
def test_classify(a, kind):
    assert core.classify(a) is kind


def test_classify_float_tolerance():
    assert core.classify(Scator(1.0, 1.0 + 1e-13, 0.3)) is Causality.LightLike
    assert core.classify(Scator(1.0, 1.0 + 1e-6, 0.3)) is Causality.SpaceLike
    assert core.classify(Scator(1.0, 1.0 + 1e-6, 0.3), Tolerance(eps=1e-3)) is Causality.LightLike


def test_add_and_scale():
    assert core.add(Scator(1, 1, 0), Scator(1, 0, 1)) == Scator(2, 1, 1)
    a = Scator(F(3, 4), -2, 5)
    assert core.scale(0, a) == core.ZERO
    assert core.scale(-1, a) + a == core.ZERO


# defect ---------------------------------------------------------------------

def _coefficient_oracle(a, b):
    # the same scalar written through the embedding defect instead
    return (a.a1 + b.a1) * (a.a2 + b.a2) / (a.a0 + b.a0) - a.a1 * a.a2 / a.a0 - b.a1 * b.a2 / b.a0


def test_delta_example():
    a, b, c = Scator(1, 1, 0), Scator(1, 0, 1), Scator(1, 1, 1)
    assert core.delta_defect(a, b, c) == Scator(F(1, 2), F(1, 2), F(1, 2))
    assert core.delta_direct(a, b, c) == Scator(F(1, 2), F(1, 2), F(1, 2))


def test_delta_parallel_vanishes():
    a = Scator(2, F(1, 3), -5)
    b = core.scale(F(7, 2), a)
    c = Scator(3, 1, 2)
    assert core.delta_defect(a, b, c) == core.ZERO
    assert core.delta_direct(a, b, c) == core.ZERO


def test_delta_coefficient_second_example():
    a, b = Scator(1, 1, 0), Scator(1, 1, 1)
    assert core.delta_coefficient(a, b) == _coefficient_oracle(a, b) == 0
    c = Scator(2, 3, 5)
    assert core.delta_direct(a, b, c) == core.ZERO


def test_delta_undefined_for_opposite_scalars():
    with pytest.raises(DomainError):
        core.delta_defect(Scator(1, 1, 0), Scator(-1, 0, 1), Scator(1, 1, 1))


@given(pairs(), scators())
def test_delta_closed_form_equals_direct(ab, c):
    a, b = ab
    assert core.delta_defect(a, b, c) == core.delta_direct(a, b, c)
    assert core.delta_coefficient(a, b) == _coefficient_oracle(a, b)


@given(pairs(), scators())
def test_delta_float_within_dual_scaled_tolerance(ab, c):
    a, b = ab
    closed = core.delta_defect(a.to_float(), b.to_float(), c.to_float())
    exact = core.delta_direct(a, b, c)
    magnitude = max(abs(float(x)) for x in (c.a1 * c.a2 / c.a0, c.a1, c.a2, 1))
    tol = Tolerance(eps=1e-9)
    assert all(close(float(x), y, tol, scale=magnitude * 1e3) for x, y in zip(exact, closed))


# algebraic laws ---------------------------------------------------------------

@given(scators(), scators())
def test_commutative(a, b):
    assert core.product(a, b) == core.product(b, a)


@given(scators(), scators(), scators())
def test_associative_away_from_zero_divisors(a, b, c):
    assume(core.product(a, b).a0 != 0 and core.product(b, c).a0 != 0)
    assert core.product(core.product(a, b), c) == core.product(a, core.product(b, c))


@given(scators(), scators())
def test_conjugation_homomorphism(a, b):
    assert core.conjugate(core.product(a, b)) == core.product(core.conjugate(a), core.conjugate(b))


@given(scators(), scators())
def test_polarization_combination_is_scalar(a, b):
    s = core.product(core.conjugate(a), b) + core.product(a, core.conjugate(b))
    a0, a1, a2 = a
    b0, b1, b2 = b
    assert s == Scator(2 * (a0 * b0 - a1 * b1 - a2 * b2 + a1 * a2 * b1 * b2 / (a0 * b0)), 0, 0)


@given(scators())
def test_modulus_is_conjugate_product(a):
    assert core.product(a, core.conjugate(a)) == Scator(core.modulus_squared(a), 0, 0)
    a0, a1, a2 = a
    assert core.modulus_squared(a) == a0 ** 2 - a1 ** 2 - a2 ** 2 + a1 ** 2 * a2 ** 2 / a0 ** 2


@given(scators())
def test_inverse_law(a):
    assume(core.modulus_squared(a) != 0)
    assert core.product(a, core.inverse(a)) == core.ONE


@given(scators())
def test_classify_sign_law(a):
    m = core.modulus_squared(a)
    kind = core.classify(a)
    assert (m > 0) == (kind is Causality.TimeLike)
    assert (m < 0) == (kind is Causality.SpaceLike)
    assert (m == 0) == (kind is Causality.LightLike)


@given(nonzero_rationals, st.integers(2, 9), st.integers(2, 9), st.booleans(), st.booleans())
def test_wings_have_positive_modulus(a0, k1, k2, s1, s2):
    # |a1|, |a2| > |a0|: outside the bipyramid but still time-like
    a = Scator(a0, (-1) ** s1 * k1 * a0, (-1) ** s2 * k2 * a0)
    assert core.classify(a) is Causality.TimeLike
    assert core.modulus_squared(a) > 0


@given(scators(), scators())
def test_float_backend_agrees_with_exact(a, b):
    exact = core.product(a, b)
    approx = core.product(a.to_float(), b.to_float())
    assert all(close(float(x), y, Tolerance(eps=1e-9)) for x, y in zip(exact, approx))
