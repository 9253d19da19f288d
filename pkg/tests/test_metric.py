import json
from fractions import Fraction as F
from pathlib import Path

import pytest
from hypothesis import assume, given

from conftest import nonzero_rationals, pairs, scators
from scator import core, embedding as em, metric
from scator.core import Causality, Scator
from scator.expr import Lit, parse
from scator.numeric import DomainError

WITNESS = Path(__file__).parent / "data" / "nonbilinearity_witness.json"


def _scator(text):
    lit = parse(text)
    assert isinstance(lit, Lit)
    return Scator(*lit.values)


def test_dot_example_both_routes():
    a, b = Scator(1, 1, 0), Scator(1, 0, 1)
    # |(2;1,1)|^2 = 9/4 and both summands are light-like
    assert core.modulus_squared(a + b) == F(9, 4)
    assert metric.dot(a, b) == metric.dot_polarization(a, b) == F(9, 8)


def test_dot_quadratic_scaling_example():
    a, b = Scator(1, 1, 0), Scator(1, 0, 1)
    assert metric.dot(core.scale(3, a), core.scale(3, b)) == F(81, 8)


def test_dot_undefined():
    with pytest.raises(DomainError):
        metric.dot(Scator(1, 1, 0), Scator(-1, 0, 1))
    with pytest.raises(DomainError):
        metric.dot(Scator(0, 1, 0), Scator(1, 0, 1))


def test_norm_product_examples():
    a = Scator(2, 1, 1)
    assert core.modulus_squared(core.product(a, a)) == F(81, 16)
    assert metric.norm_product_check(a, a).ok
    light = Scator(3, 3, 1)
    assert core.modulus_squared(core.product(a, light)) == 0
    assert core.modulus_squared(core.scale(-2, a)) == 4 * core.modulus_squared(a)


@given(pairs())
def test_closed_form_equals_polarization(ab):
    a, b = ab
    assert metric.dot(a, b) == metric.dot_polarization(a, b)


@given(pairs())
def test_norm_of_sum_through_embedding(ab):
    a, b = ab
    ac, bc = core.conjugate(a), core.conjugate(b)
    lhs = em.embed(a) + em.embed(b) + em.kappa(a, b) * em.I12
    rhs = em.embed(ac) + em.embed(bc) + em.kappa(ac, bc) * em.I12
    assert em.project(em.mv_product(lhs, rhs)) == Scator(core.modulus_squared(a + b), 0, 0)


@given(scators())
def test_dual_plus_conjugate_dual(a):
    from scator.dualities import dual
    assert dual(core.conjugate(a)) + dual(a) == Scator(2 * a.a1 * a.a2 / a.a0, 0, 0)


@given(pairs())
def test_symmetric(ab):
    a, b = ab
    assert metric.dot(a, b) == metric.dot(b, a)


@given(scators())
def test_self_dot_is_modulus(a):
    assert metric.dot(a, a) == core.modulus_squared(a)


@given(scators())
def test_sign_semantics(a):
    d = metric.dot(a, a)
    kind = core.classify(a)
    assert (d > 0) == (kind is Causality.TimeLike)
    assert (d < 0) == (kind is Causality.SpaceLike)
    assert (d == 0) == (kind is Causality.LightLike)


@given(scators(), scators(), nonzero_rationals)
def test_norm_multiplicative(a, b, lam):
    assume(core.product(a, b).a0 != 0)
    report = metric.norm_product_check(a, b, lam)
    assert report.product_residual == 0
    assert report.scaling_residual == 0


@given(pairs(), nonzero_rationals)
def test_quadratic_scaling(ab, lam):
    a, b = ab
    assert metric.dot(core.scale(lam, a), core.scale(lam, b)) == lam * lam * metric.dot(a, b)


def test_witness_search_is_deterministic():
    assert metric.nonbilinearity_witness() == metric.nonbilinearity_witness()
    a, b, c = metric.nonbilinearity_witness()
    assert metric.dot(a + b, c) != metric.dot(a, c) + metric.dot(b, c)
    lam, p, q = metric.homogeneity_witness()
    assert lam * metric.dot(p, q) != metric.dot(core.scale(lam, p), q)


def test_stored_witness():
    record = json.loads(WITNESS.read_text())
    add = record["additivity"]
    a, b, c = (_scator(add[k]) for k in "abc")
    lhs, rhs = metric.dot(a + b, c), metric.dot(a, c) + metric.dot(b, c)
    assert lhs != rhs
    assert (str(lhs), str(rhs)) == (add["lhs"], add["rhs"])
    assert (a, b, c) == metric.nonbilinearity_witness()

    hom = record["homogeneity"]
    lam = F(hom["lambda"])
    p, q = _scator(hom["a"]), _scator(hom["b"])
    assert lam * metric.dot(p, q) != metric.dot(core.scale(lam, p), q)


def test_witness_is_not_a_parallel_pair():
    a, b, _c = metric.nonbilinearity_witness()
    assert not metric._parallel(a, b)
    assert metric._parallel(Scator(1, F(1, 2), F(1, 3)), Scator(-2, -1, F(-2, 3)))
