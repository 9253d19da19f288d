"""Seeded identity runner behind ``scator verify``.

Every registered identity draws its own inputs from a shared
``random.Random``; inputs that violate an identity's preconditions are
redrawn, so a seed fixes the whole report.  Output is one JSON object per
identity per trial, plus one record per stored counterexample
("expected-inequality": the identity is supposed to fail there).
"""
from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, TextIO

from . import core, dualities, embedding as em, metric, sampling, scator3d as s3
from .core import Causality, Scator
from .dualities import DualityKind, PROPER_KINDS
from .numeric import DomainError, NotInvertible, format_number, sign

MODULES = ("core", "embed", "dual", "metric", "3d")

FLOAT_REL_TOL = 1e-9

# a check returns (ok, residual), or a list of (name, ok, residual) for a
# family of identities evaluated on one draw
Check = Callable[[random.Random], "tuple[bool, str] | list[tuple[str, bool, str]]"]


@dataclass(frozen=True)
class Identity:
    module: str
    name: str
    check: Check
    backend: str = "exact"


REGISTRY: list[Identity] = []


def identity(module: str, name: str, backend: str = "exact"):
    def register(fn: Check) -> Check:
        REGISTRY.append(Identity(module, name, fn, backend))
        return fn
    return register


def _residual(x, y) -> str:
    if isinstance(x, (Scator, s3.Scator3, em.MultiVector)):
        return str(x - y)
    return format_number(x - y)


def _eq(x, y) -> tuple[bool, str]:
    return x == y, _residual(x, y)


def _rel_err(exact, approx) -> float:
    worst = 0.0
    for p, q in zip(exact, approx):
        p = float(p)
        worst = max(worst, abs(p - q) / max(1.0, abs(p)))
    return worst


def _draw(rng: random.Random, make, accept=lambda *_: True):
    """Redraw ``make(rng)`` until ``accept`` holds and no DomainError occurs."""
    while True:
        args = make(rng)
        try:
            if accept(*args):
                return args
        except (DomainError, NotInvertible, ZeroDivisionError):
            pass


def _pair(nonzero=False):
    return lambda rng: sampling.scator_pair(rng, nonzero)


def _triple(nonzero=False):
    return lambda rng: (sampling.scator(rng, nonzero), sampling.scator(rng, nonzero), sampling.scator(rng, nonzero))


def _single(nonzero=False):
    return lambda rng: (sampling.scator(rng, nonzero),)


def _invertible(a: Scator) -> bool:
    return core.modulus_squared(a) != 0


# ---- core -----------------------------------------------------------------

@identity("core", "commutativity")
def _(rng):
    a, b = _draw(rng, _pair())
    return _eq(core.product(a, b), core.product(b, a))


@identity("core", "associativity")
def _(rng):
    a, b, c = _draw(rng, _triple(),
                    lambda a, b, c: core.product(a, b).a0 != 0 and core.product(b, c).a0 != 0)
    return _eq(core.product(core.product(a, b), c), core.product(a, core.product(b, c)))


@identity("core", "conjugation homomorphism")
def _(rng):
    a, b = _draw(rng, _pair())
    return _eq(core.conjugate(core.product(a, b)),
               core.product(core.conjugate(a), core.conjugate(b)))


@identity("core", "polarization combination is scalar")
def _(rng):
    a, b = _draw(rng, _pair())
    lhs = core.product(core.conjugate(a), b) + core.product(a, core.conjugate(b))
    a0, a1, a2 = a
    b0, b1, b2 = b
    rhs = Scator(2 * (a0 * b0 - a1 * b1 - a2 * b2 + a1 * a2 * b1 * b2 / (a0 * b0)), 0, 0)
    return _eq(lhs, rhs)


@identity("core", "defect closed form")
def _(rng):
    a, b, c = _draw(rng, _triple(), lambda a, b, c: a.a0 + b.a0 != 0)
    return _eq(core.delta_defect(a, b, c), core.delta_direct(a, b, c))


@identity("core", "modulus from conjugate product")
def _(rng):
    (a,) = _draw(rng, _single())
    return _eq(Scator(core.modulus_squared(a), 0, 0), core.product(a, core.conjugate(a)))


@identity("core", "classification sign law")
def _(rng):
    (a,) = _draw(rng, _single())
    expected = {Causality.TimeLike: 1, Causality.SpaceLike: -1, Causality.LightLike: 0}[core.classify(a)]
    s = sign(core.modulus_squared(a))
    return s == expected, str(s - expected)


@identity("core", "inverse")
def _(rng):
    (a,) = _draw(rng, _single(), _invertible)
    return _eq(core.product(a, core.inverse(a)), core.ONE)


@identity("core", "float product agrees with exact", backend="float")
def _(rng):
    a, b = _draw(rng, _pair())
    err = _rel_err(core.product(a, b), core.product(a.to_float(), b.to_float()))
    return err <= FLOAT_REL_TOL, repr(err)


# ---- embed ----------------------------------------------------------------

def _defined_product(a, b):
    return core.product(a, b).a0 != 0


@identity("embed", "multiplicative homomorphism")
def _(rng):
    a, b = _draw(rng, _pair(), _defined_product)
    return _eq(em.embed(core.product(a, b)), em.mv_product(em.embed(a), em.embed(b)))


@identity("embed", "multiplicative homomorphism", backend="float")
def _(rng):
    a, b = _draw(rng, _pair(), _defined_product)
    exact = em.mv_product(em.embed(a), em.embed(b))
    approx = em.embed(core.product(a.to_float(), b.to_float()))
    err = _rel_err(exact, approx)
    return err <= FLOAT_REL_TOL, repr(err)


@identity("embed", "image closed under product")
def _(rng):
    a, b = _draw(rng, _pair(), _defined_product)
    x = em.mv_product(em.embed(a), em.embed(b))
    return em.in_image(x), str(x)


@identity("embed", "factorized embedding")
def _(rng):
    (a,) = _draw(rng, _single())
    return _eq(em.embed(a), em.embed_factorized(a))


@identity("embed", "additive defect is kappa i12")
def _(rng):
    a, b = _draw(rng, _pair())
    return _eq(em.embed(a + b) - em.embed(a) - em.embed(b), em.kappa(a, b) * em.I12)


@identity("embed", "defect transport")
def _(rng):
    a, b = _draw(rng, _pair())
    (c,) = _draw(rng, _single(nonzero=True))
    lhs = em.mv_product(em.embed(a + b) - em.embed(a) - em.embed(b), em.embed(c))
    return _eq(lhs, em.kappa(a, b) * em.embed(dualities.dual(c)))


@identity("embed", "projection is additive")
def _(rng):
    x = em.MultiVec4(*(sampling.rational(rng) for _ in range(4)))
    y = em.MultiVec4(*(sampling.rational(rng) for _ in range(4)))
    return _eq(em.project(x + y), em.project(x) + em.project(y))


@identity("embed", "conjugation and scaling commute with embedding")
def _(rng):
    (a,) = _draw(rng, _single())
    lam = sampling.rational(rng, allow_zero=False)
    ok = (em.embed(core.conjugate(a)) == em.mv_conjugate(em.embed(a))
          and em.embed(core.scale(lam, a)) == em.mv_scale(lam, em.embed(a)))
    return ok, ""


@identity("embed", "distributivity of the algebra")
def _(rng):
    x, y, z = (em.MultiVec4(*(sampling.rational(rng) for _ in range(4))) for _ in range(3))
    return _eq(em.mv_product(x + y, z), em.mv_product(x, z) + em.mv_product(y, z))


@identity("embed", "zero divisor")
def _(rng):
    (a,) = _draw(rng, _single(nonzero=True), _invertible)
    x = em.mv_product(em.embed(dualities.dual(a)), em.embed(core.inverse(a)))
    ok = x == em.I12 and core.product(dualities.dual(a), core.inverse(a)) == core.ZERO
    return ok, _residual(x, em.I12)


@identity("embed", "kappa conjugation invariance")
def _(rng):
    a, b = _draw(rng, _pair())
    return _eq(em.kappa(core.conjugate(a), core.conjugate(b)), em.kappa(a, b))


@identity("embed", "kappa_n permutation symmetry")
def _(rng):
    def make(rng):
        return [sampling.scator(rng) for _ in range(rng.randint(2, 4))]

    def ok_prefixes(items):
        for perm in itertools.permutations(items):
            total = Fraction(0)
            for s in perm:
                total += s.a0
                if total == 0:
                    return False
        return True

    items = _draw(rng, lambda r: (make(r),), ok_prefixes)[0]
    values = {em.kappa_n(perm) for perm in itertools.permutations(items)}
    total = items[0]
    embedded = em.embed(items[0])
    for s in items[1:]:
        total = total + s
        embedded = embedded + em.embed(s)
    value = next(iter(values))
    ok = len(values) == 1 and em.embed(total) == embedded + value * em.I12
    return ok, str(len(values) - 1)


# ---- dual -----------------------------------------------------------------

for _kind in PROPER_KINDS:
    @identity("dual", f"idempotence {_kind.name}")
    def _(rng, kind=_kind):
        (a,) = _draw(rng, _single(nonzero=True))
        return _eq(dualities.dual(dualities.dual(a, kind), kind), a)

    @identity("dual", f"closed form matches embedding {_kind.name}")
    def _(rng, kind=_kind):
        (a,) = _draw(rng, _single(nonzero=True))
        return _eq(dualities.dual(a, kind), dualities.dual_via_embedding(a, kind))

    @identity("dual", f"commutes with inversion {_kind.name}")
    def _(rng, kind=_kind):
        (a,) = _draw(rng, _single(nonzero=True), _invertible)
        return _eq(dualities.dual(core.inverse(a), kind), core.inverse(dualities.dual(a, kind)))


@identity("dual", "ordinary dual commutes with conjugation")
def _(rng):
    (a,) = _draw(rng, _single(nonzero=True))
    return _eq(core.conjugate(dualities.dual(a)), dualities.dual(core.conjugate(a)))


for _kind in (DualityKind.Internal, DualityKind.External):
    @identity("dual", f"anti-commutes with conjugation {_kind.name}")
    def _(rng, kind=_kind):
        (a,) = _draw(rng, _single(nonzero=True))
        return _eq(core.conjugate(dualities.dual(a, kind)) + dualities.dual(core.conjugate(a), kind), core.ZERO)

    @identity("dual", f"causality swap {_kind.name}")
    def _(rng, kind=_kind):
        (a,) = _draw(rng, _single(nonzero=True))
        d = dualities.dual(a, kind)
        ok = core.modulus_squared(d) == -core.modulus_squared(a) and core.classify(d) is core.classify(a).swapped()
        return ok, format_number(core.modulus_squared(d) + core.modulus_squared(a))

    @identity("dual", f"quotient gives generator {_kind.name}")
    def _(rng, kind=_kind):
        (a,) = _draw(rng, _single(nonzero=True), _invertible)
        x = em.mv_product(dualities.dual_mv(em.embed(a), kind), em.embed(core.inverse(a)))
        return _eq(x, kind.element)


@identity("dual", "ordinary dual is an isometry")
def _(rng):
    (a,) = _draw(rng, _single(nonzero=True))
    return _eq(core.modulus_squared(dualities.dual(a)), core.modulus_squared(a))


@identity("dual", "ordinary dual over inverse is zero")
def _(rng):
    (a,) = _draw(rng, _single(nonzero=True), _invertible)
    return _eq(core.product(dualities.dual(a), core.inverse(a)), core.ZERO)


def _translator_pair(rng):
    return _draw(rng, _pair(nonzero=True), dualities.translator_defined)


@identity("dual", "translator")
def _(rng):
    a, b = _translator_pair(rng)
    return [
        (check.name, check.ok, check.error or " ".join(format_number(r) for r in check.residual))
        for check in dualities.translator_table(a, b).checks
    ]


# ---- metric ---------------------------------------------------------------

@identity("metric", "closed form equals polarization")
def _(rng):
    a, b = _draw(rng, _pair())
    return _eq(metric.dot(a, b), metric.dot_polarization(a, b))


@identity("metric", "norm of sum through embedding")
def _(rng):
    a, b = _draw(rng, _pair())
    k = em.kappa(a, b)
    k_star = em.kappa(core.conjugate(a), core.conjugate(b))
    fa = em.embed(a) + em.embed(b) + k * em.I12
    fb = em.embed(core.conjugate(a)) + em.embed(core.conjugate(b)) + k_star * em.I12
    via_embedding = em.project(em.mv_product(fa, fb))
    return _eq(via_embedding, Scator(core.modulus_squared(a + b), 0, 0))


@identity("metric", "symmetry")
def _(rng):
    a, b = _draw(rng, _pair())
    return _eq(metric.dot(a, b), metric.dot(b, a))


@identity("metric", "self product is modulus")
def _(rng):
    (a,) = _draw(rng, _single())
    return _eq(metric.dot(a, a), core.modulus_squared(a))


@identity("metric", "norm multiplicativity")
def _(rng):
    a, b = _draw(rng, _pair(), lambda a, b: core.product(a, b).a0 != 0)
    report = metric.norm_product_check(a, b, lam=sampling.rational(rng, allow_zero=False))
    return report.ok, f"{format_number(report.product_residual)} {format_number(report.scaling_residual)}"


@identity("metric", "quadratic scaling")
def _(rng):
    a, b = _draw(rng, _pair())
    lam = sampling.rational(rng, allow_zero=False)
    return _eq(metric.dot(core.scale(lam, a), core.scale(lam, b)), lam * lam * metric.dot(a, b))


@identity("metric", "sign semantics")
def _(rng):
    (a,) = _draw(rng, _single())
    expected = {Causality.TimeLike: 1, Causality.SpaceLike: -1, Causality.LightLike: 0}[core.classify(a)]
    s = sign(metric.dot(a, a))
    return s == expected, str(s - expected)


# ---- 3d -------------------------------------------------------------------

def _pair3(nonzero=False):
    return lambda rng: sampling.scator3_pair(rng, nonzero)


@identity("3d", "multiplicative homomorphism")
def _(rng):
    a, b = _draw(rng, _pair3(), lambda a, b: s3.product3(a, b).a0 != 0)
    return _eq(s3.embed3(s3.product3(a, b)), em.mv_product(s3.embed3(a), s3.embed3(b)))


@identity("3d", "factorized embedding")
def _(rng):
    a, _b = _draw(rng, _pair3())
    return _eq(s3.embed3(a), s3.embed3_factorized(a))


@identity("3d", "defect coefficients")
def _(rng):
    a, b = _draw(rng, _pair3())
    return _eq(s3.additive_defect3_direct(a, b), s3.additive_defect3(a, b))


@identity("3d", "dimensional reduction")
def _(rng):
    a, b = _draw(rng, _pair())
    la, lb = s3.Scator3.lift(a), s3.Scator3.lift(b)
    p = s3.product3(la, lb)
    coeffs = s3.defect_coefficients3(la, lb)
    ok = (
        p == s3.Scator3.lift(core.product(a, b))
        and coeffs == s3.DefectCoefficients3(em.kappa(a, b), 0, 0, 0)
        and s3.modulus_squared3(la) == core.modulus_squared(a)
        and s3.add3(la, lb).reduce() == a + b
        and s3.conjugate3(la).reduce() == core.conjugate(a)
    )
    return ok, _residual(p, s3.Scator3.lift(core.product(a, b)))


@identity("3d", "norm multiplicativity")
def _(rng):
    a, b = _draw(rng, _pair3(), lambda a, b: s3.product3(a, b).a0 != 0)
    lhs = s3.modulus_squared3(s3.product3(a, b))
    return _eq(lhs, s3.modulus_squared3(a) * s3.modulus_squared3(b))


# ---- stored counterexamples ----------------------------------------------

def non_homomorphism_witness(kind: DualityKind) -> tuple[Scator, Scator]:
    """First small-grid pair with ``dual(ab) != dual(a) dual(b)``."""
    grid = [Scator(a0, a1, a2) for a0 in (1, 2, 3) for a1 in (1, 2, -1) for a2 in (1, 2, -1)]
    for a, b in itertools.product(grid, repeat=2):
        try:
            if dualities.dual(core.product(a, b), kind) != core.product(dualities.dual(a, kind), dualities.dual(b, kind)):
                return a, b
        except DomainError:
            continue
    raise RuntimeError(f"no non-homomorphism witness for {kind.name}")


def witness_records() -> dict[str, list[dict]]:
    out: dict[str, list[dict]] = {m: [] for m in MODULES}
    for kind in PROPER_KINDS:
        a, b = non_homomorphism_witness(kind)
        lhs = dualities.dual(core.product(a, b), kind)
        rhs = core.product(dualities.dual(a, kind), dualities.dual(b, kind))
        out["dual"].append(_witness("dual", f"dual is not a homomorphism {kind.name}", lhs != rhs, [a, b]))
    a, b, c = metric.nonbilinearity_witness()
    holds = metric.dot(a + b, c) != metric.dot(a, c) + metric.dot(b, c)
    out["metric"].append(_witness("metric", "non-bilinearity (a+b).c != a.c + b.c", holds, [a, b, c]))
    lam, a, b = metric.homogeneity_witness()
    holds = lam * metric.dot(a, b) != metric.dot(core.scale(lam, a), b)
    out["metric"].append(_witness("metric", "non-homogeneity lam(a.b) != (lam a).b", holds, [lam, a, b]))
    a, b, c = Scator(1, 1, 0), Scator(1, 0, 1), Scator(1, 1, 1)
    holds = core.delta_direct(a, b, c) != core.ZERO
    out["core"].append(_witness("core", "non-distributivity (a+b)c != ac + bc", holds, [a, b, c]))
    return out


def _witness(module: str, name: str, holds: bool, inputs: list) -> dict:
    return {
        "module": module,
        "identity": name,
        "trial": None,
        "backend": "exact",
        "status": "expected-inequality" if holds else "fail",
        "inputs": [str(x) if not isinstance(x, Fraction) else format_number(x) for x in inputs],
    }


# ---- driver ---------------------------------------------------------------

def select(module: str = "all") -> list[Identity]:
    if module == "all":
        return list(REGISTRY)
    if module not in MODULES:
        raise ValueError(f"unknown module {module!r}; choose from all, {', '.join(MODULES)}")
    return [i for i in REGISTRY if i.module == module]


def run_identity_suite(seed: int, n: int, module: str = "all") -> Iterator[dict]:
    """Yield one record per identity per trial, then the witness records."""
    if n < 1:
        raise ValueError("need at least one trial")
    identities = select(module)
    rng = random.Random(seed)
    for trial in range(n):
        for ident in identities:
            try:
                result = ident.check(rng)
            except (DomainError, NotInvertible, ZeroDivisionError) as exc:
                result = (False, f"{type(exc).__name__}: {exc}")
            if isinstance(result, tuple):
                result = [(ident.name, *result)]
            else:
                result = [(f"{ident.name} {name}", ok, res) for name, ok, res in result]
            for name, ok, residual in result:
                yield {
                    "module": ident.module,
                    "identity": name,
                    "trial": trial,
                    "backend": ident.backend,
                    "status": "pass" if ok else "fail",
                    "residual": residual,
                }
    witnesses = witness_records()
    for m in (MODULES if module == "all" else (module,)):
        yield from witnesses[m]


def write_report(records, out: TextIO) -> int:
    """Write JSON lines; return the number of exact-backend failures."""
    failures = 0
    for rec in records:
        out.write(json.dumps(rec, sort_keys=True) + "\n")
        if rec["status"] == "fail" and rec["backend"] == "exact":
            failures += 1
    return failures
