"""Spreading, dilation laws, matrix dilation, and degree-zero congruence."""

import random

import pytest

from formk1 import matrices as mx
from formk1.errors import DegreeError
from formk1.forms import lambda_max
from formk1.gq import ElemGen, Word, gq_member, random_word, word_eval
from formk1.graded import (
    degree_zero_part,
    dilate,
    dilate_matrix,
    identity_mod_positive,
    matrix_degree_zero,
    spread,
)
from formk1.rings import GaussianModular, GradedRing, Integers, ModularInt, PolynomialRing


def test_spread_and_dilate_worked_example():
    g = GradedRing(Integers(1), 5)
    b = g.parse("2+3Y")
    poly = PolynomialRing(g)
    s = spread(g, b)
    assert s == poly._norm([g.parse("2"), g.parse("3Y")])
    assert dilate(g, b, g.from_int(5)) == g.parse("2+15Y")
    assert dilate(g, b, g.zero()) == degree_zero_part(g, b) == g.parse("2")
    assert dilate(g, g.one(), g.from_int(7)) == g.one()


def test_dilate_rejects_higher_degree_points():
    g = GradedRing(ModularInt(4), 4)
    with pytest.raises(DegreeError):
        dilate(g, g.parse("1+Y"), g.parse("Y"))


def test_composition_law_random():
    rng = random.Random(3)
    g = GradedRing(ModularInt(4, 3), 8)
    for _ in range(400):
        b = g.sample(rng)
        x = g._embed(g.component.sample(rng), 0)
        y = g._embed(g.component.sample(rng), 0)
        assert dilate(g, dilate(g, b, x), y) == dilate(g, b, g.mul(x, y))
        one = g._embed(g.component.one(), 0)
        assert dilate(g, b, one) == b


def test_spread_is_a_ring_homomorphism():
    rng = random.Random(4)
    g = GradedRing(ModularInt(9), 8)
    poly = PolynomialRing(g)
    assert spread(g, g.one()) == poly.one()
    for _ in range(400):
        b = g.sample(rng, max_degree=2)
        c = g.sample(rng, max_degree=2)
        assert poly.mul(spread(g, b), spread(g, c)) == spread(g, g.mul(b, c))
        assert poly.add(spread(g, b), spread(g, c)) == spread(g, g.add(b, c))


def test_spread_injective_on_distinct_supports():
    g = GradedRing(ModularInt(4), 4)
    seen = {}
    for b in (g.parse("1"), g.parse("Y"), g.parse("1+Y"), g.parse("2Y^2")):
        s = spread(g, b)
        assert s not in seen.values()
        seen[b] = s


def test_matrix_dilation_preserves_membership():
    rng = random.Random(5)
    g = GradedRing(ModularInt(4, 3), 12)
    fp = lambda_max(g)

    def low_deg(r):
        return g._embed(g.component.sample(r), r.randrange(3))

    for _ in range(40):
        w = random_word(fp, 2, rng, length=3, allow_diagonal=False, param_sampler=low_deg)
        M = word_eval(fp, 2, w)
        assert gq_member(g, M)
        at = g._embed(g.component.sample(rng), 0)
        D = dilate_matrix(g, M, at)
        assert gq_member(g, D)
        # dilation at zero recovers the degree-zero part entrywise
        assert dilate_matrix(g, M, g.zero()) == matrix_degree_zero(g, M)


def test_matrix_dilation_is_multiplicative():
    rng = random.Random(6)
    g = GradedRing(ModularInt(9, 8), 12)
    fp = lambda_max(g)

    def low_deg(r):
        return g._embed(g.component.sample(r), r.randrange(2))

    for _ in range(40):
        A = word_eval(fp, 2, random_word(fp, 2, rng, 2, False, low_deg))
        B = word_eval(fp, 2, random_word(fp, 2, rng, 2, False, low_deg))
        at = g._embed(g.component.sample(rng), 0)
        assert dilate_matrix(g, mx.mat_mul(g, A, B), at) == mx.mat_mul(
            g, dilate_matrix(g, A, at), dilate_matrix(g, B, at)
        )


def test_identity_mod_positive():
    g = GradedRing(ModularInt(4, 3), 6)
    fp = lambda_max(g)
    w = Word((ElemGen("QE", 1, 2, g._embed(3, 1)),))
    M = word_eval(fp, 2, w)
    assert identity_mod_positive(g, M)
    w0 = Word((ElemGen("QE", 1, 2, g._embed(3, 0)),))
    assert not identity_mod_positive(g, word_eval(fp, 2, w0))
    assert identity_mod_positive(g, mx.identity(g, 4))


def test_congruence_agrees_with_dilation_at_zero():
    rng = random.Random(7)
    g = GradedRing(GaussianModular(5, 1), 8)
    I = mx.identity(g, 4)
    for _ in range(200):
        M = tuple(tuple(g.sample(rng, max_degree=2) for _ in range(4)) for _ in range(4))
        assert identity_mod_positive(g, M) == (dilate_matrix(g, M, g.zero()) == I)


def test_nilpotent_matrix_degree_zero_part():
    g = GradedRing(ModularInt(4, 3), 6)
    N = ((g._embed(2, 0), g._embed(2, 1)), (g._embed(2, 1), g._embed(2, 0)))
    assert mx.nilpotency_order(g, N, 8) is not None
    N0 = matrix_degree_zero(g, N)
    assert mx.nilpotency_order(g, N0, 8) is not None
