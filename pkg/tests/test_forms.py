"""Minimal/maximal parameters, validation, and the three extensions."""

import random

import pytest

from formk1.forms import (
    explicit_param,
    form_param_extend_poly,
    form_param_validate,
    gamma_plus,
    lambda_max,
    lambda_min,
    lambda_prime,
)
from formk1.rings import (
    GaussianModular,
    Ideal,
    Integers,
    ModularInt,
)


def test_min_max_frozen_values():
    # exhaustive enumerations over the small rings
    z4a = ModularInt(4, 1)
    assert lambda_min(z4a).elements() == [0]
    assert lambda_max(z4a).elements() == [0, 2]

    z4b = ModularInt(4, 3)
    assert lambda_min(z4b).elements() == [0, 2]
    assert lambda_max(z4b).elements() == [0, 1, 2, 3]

    g5 = GaussianModular(5, 1)
    imag = [(0, b) for b in range(5)]
    assert lambda_min(g5).elements() == imag
    assert lambda_max(g5).elements() == imag


def test_min_max_closed_under_conjugation():
    for ring in (ModularInt(4, 1), ModularInt(4, 3), GaussianModular(5, 1)):
        for fp in (lambda_min(ring), lambda_max(ring)):
            for v in fp.elements():
                for x in ring.elements():
                    assert fp.contains(ring.mul(ring.conj(x), ring.mul(v, x)))


def test_validate_explicit_sets():
    z4 = ModularInt(4, 1)
    assert form_param_validate(explicit_param(z4, [0, 2])).ok
    report = form_param_validate(explicit_param(z4, [0, 1]))
    assert not report.ok
    failed = {c.name for c in report.checks if not c.passed}
    assert "inside-maximal" in failed  # 1 != -1 mod 4


@pytest.mark.parametrize(
    "ring",
    [ModularInt(4, 3), ModularInt(8, 7), ModularInt(9, 8), GaussianModular(5, 1),
     Integers(-1)],
    ids=["Z/4", "Z/8", "Z/9", "Z[i]/5", "Z"],
)
def test_min_and_max_always_validate(ring):
    assert form_param_validate(lambda_min(ring), 150).ok
    assert form_param_validate(lambda_max(ring), 150).ok


def test_poly_extension_worked_example():
    z4 = ModularInt(4, 1)
    fp = explicit_param(z4, [0, 2])
    fpx = form_param_extend_poly(fp)
    poly = fpx.ring
    a = poly.parse("1+X")
    b = poly.parse("2X")
    prod = poly.mul(poly.conj(a), poly.mul(b, a))
    assert prod == poly.parse("2X+2X^3")
    assert fpx.contains(prod)
    assert fpx.contains(poly.zero())
    assert fpx.contains(poly.mul(poly.parse("X"), poly.mul(poly.parse("2"), poly.parse("X"))))


def test_poly_extension_closure_sampled():
    rng = random.Random(21)
    for ring in (ModularInt(4, 3), GaussianModular(5, 1)):
        fpx = form_param_extend_poly(lambda_max(ring))
        poly = fpx.ring
        for _ in range(300):
            a = poly.sample(rng, max_degree=4)
            b = fpx.sample(rng)
            assert fpx.contains(poly.mul(poly.conj(a), poly.mul(b, a)))
        assert form_param_validate(fpx, 100).ok


def test_gamma_plus_worked_example():
    z4 = ModularInt(4, 3)
    J = Ideal(z4, [2])
    gp = gamma_plus(explicit_param(z4, [0, 2]), J)
    assert gp.elements() == [(0, 0), (0, 2), (2, 0), (2, 2)]
    assert gp.contains((0, 0))
    assert not gp.contains((1, 0))
    assert form_param_validate(gp).ok


def test_lambda_prime_validates():
    z4 = ModularInt(4, 3)
    J = Ideal(z4, [2])
    lp = lambda_prime(explicit_param(z4, [0, 2]), J)
    assert lp.contains((2, 0)) and not lp.contains((1, 3))
    assert form_param_validate(lp).ok
    lam = lp.ring.lam
    assert lp.ring.mul(lam, lp.ring.conj(lam)) == lp.ring.one()


@pytest.mark.parametrize(
    "m,lam,gen", [(4, 3, 2), (8, 7, 2), (9, 8, 3)], ids=["Z/4", "Z/8", "Z/9"]
)
def test_extensions_always_validate(m, lam, gen):
    ring = ModularInt(m, lam)
    fp = lambda_max(ring)
    J = Ideal(ring, [gen])
    assert form_param_validate(form_param_extend_poly(fp), 120).ok
    assert form_param_validate(gamma_plus(fp, J), 120).ok
    assert form_param_validate(lambda_prime(fp, J), 120).ok


def test_undecidable_without_a_procedure():
    from formk1.errors import Undecidable
    from formk1.rings import MatrixRing

    big = MatrixRing(Integers(-1), 2)  # infinite and no structural rule
    with pytest.raises(Undecidable):
        lambda_min(big)
    assert lambda_max(big).contains(big.zero())  # the predicate still works
    with pytest.raises(Undecidable):
        lambda_max(big).elements()


def test_bar_parameter():
    g5 = GaussianModular(5, 1)
    fp = lambda_max(g5)
    bar = fp.bar()
    for v in fp.elements():
        assert bar.contains(g5.conj(v))
    assert bar.elements() == fp.elements()  # conjugation fixes the imaginary line
