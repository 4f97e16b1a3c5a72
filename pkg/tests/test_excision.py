"""Folding, lifting, the double-ring isomorphism, and the sequence maps."""

import random

import pytest

from formk1 import matrices as mx
from formk1.errors import MalformedWord, NotCongruent
from formk1.excision import (
    double_iso_f,
    double_iso_g,
    fold,
    fold_matrix,
    integral_pair_identity,
    lift_relative_word,
    relative_level,
    seq_i,
    seq_p2,
)
from formk1.forms import gamma_plus, lambda_max, lambda_prime
from formk1.gq import (
    ElemGen,
    RelGen,
    Word,
    gq_member,
    random_relative_word,
    random_word,
    word_eval,
)
from formk1.rings import DoubleRing, ExcisionRing, Ideal, Integers, ModularInt


def _setup():
    z4 = ModularInt(4, 3)
    J = Ideal(z4, [2])
    return z4, J, lambda_max(z4)


def test_fold_is_a_homomorphism():
    z4, J, _ = _setup()
    exc = ExcisionRing(z4, J)
    assert fold(ExcisionRing(Integers(1), Ideal(Integers(1), [2])), (3, 4)) == 7
    rng = random.Random(1)
    for _ in range(1000):
        x, y = exc.sample(rng), exc.sample(rng)
        assert fold(exc, exc.mul(x, y)) == z4.mul(fold(exc, x), fold(exc, y))
        assert fold(exc, exc.add(x, y)) == z4.add(fold(exc, x), fold(exc, y))
        assert fold(exc, exc.conj(x)) == z4.conj(fold(exc, x))
    assert fold_matrix(exc, mx.identity(exc, 4)) == mx.identity(z4, 4)
    # surjectivity witnessed by the base copy
    for r in z4.elements():
        assert fold(exc, (r, z4.zero())) == r


def test_lift_worked_example():
    z4, J, fp = _setup()
    exc = ExcisionRing(z4, J)
    gp = gamma_plus(fp, J, exc)
    w = Word((RelGen((ElemGen("QE", 1, 2, 1),), ElemGen("QE", 2, 1, 2)),))
    lifted = lift_relative_word(exc, w)
    core = lifted.factors[0].core
    conj = lifted.factors[0].conjugator[0]
    assert conj.a == (1, 0) and core.a == (0, 2)
    up = word_eval(gp, 3, lifted, ideal=relative_level(exc))
    assert gq_member(exc, up)
    assert fold_matrix(exc, up) == word_eval(fp, 3, w, ideal=J)
    assert lift_relative_word(exc, Word(())) == Word(())


def test_lift_rejects_plain_generators():
    z4, J, _ = _setup()
    exc = ExcisionRing(z4, J)
    with pytest.raises(MalformedWord):
        lift_relative_word(exc, Word((ElemGen("QE", 1, 2, 1),)))


def test_lift_zero_core_gives_identity():
    z4, J, fp = _setup()
    exc = ExcisionRing(z4, J)
    gp = gamma_plus(fp, J, exc)
    w = Word((RelGen((ElemGen("QE", 1, 2, 3),), ElemGen("QR", 2, 1, 0)),))
    up = word_eval(gp, 3, lift_relative_word(exc, w), ideal=relative_level(exc))
    assert up == mx.identity(exc, 6)


def test_fold_after_lift_on_random_words():
    rng = random.Random(23)
    z4, J, fp = _setup()
    exc = ExcisionRing(z4, J)
    gp = gamma_plus(fp, J, exc)
    level = relative_level(exc)
    for _ in range(60):
        w = random_relative_word(fp, J, 3, rng, length=2)
        assert fold_matrix(exc, word_eval(gp, 3, lift_relative_word(exc, w), ideal=level)) == word_eval(fp, 3, w, ideal=J)


def test_double_iso_roundtrip_exhaustive():
    z4, J, fp = _setup()
    exc = ExcisionRing(z4, J)
    dbl = DoubleRing(z4, J)
    assert double_iso_f(dbl, (1, 1)) == (1, 0)
    for x in dbl.elements():
        assert double_iso_g(exc, double_iso_f(dbl, x)) == x
    for y in exc.elements():
        assert double_iso_f(dbl, double_iso_g(exc, y)) == y
    for x in dbl.elements():
        for y in dbl.elements():
            assert double_iso_f(dbl, dbl.mul(x, y)) == exc.mul(
                double_iso_f(dbl, x), double_iso_f(dbl, y)
            )


def test_double_iso_parameter_images():
    z4, J, fp = _setup()
    exc = ExcisionRing(z4, J)
    dbl = DoubleRing(z4, J)
    gp = gamma_plus(fp, J, exc)
    lp = lambda_prime(fp, J, dbl)
    image = sorted({double_iso_f(dbl, v) for v in lp.elements()})
    assert image == gp.elements()


def test_integral_pair_identity_all_of_j():
    z4, J, _ = _setup()
    exc = ExcisionRing(z4, J)
    for i in J.elements():
        assert integral_pair_identity(exc, i) == exc.zero()


def test_sequence_maps():
    rng = random.Random(31)
    z4, J, fp = _setup()
    dbl = DoubleRing(z4, J)
    lp = lambda_prime(fp, J, dbl)
    for _ in range(30):
        w = random_relative_word(fp, J, 3, rng, length=2)
        alpha = word_eval(fp, 3, w, ideal=J)
        up = seq_i(dbl, alpha, J)
        assert gq_member(dbl, up)
        assert seq_p2(dbl, up) == mx.identity(z4, 6)
    assert seq_i(dbl, mx.identity(z4, 6), J) == mx.identity(dbl, 6)
    with pytest.raises(NotCongruent):
        from formk1.gq import elem_gen_eval

        seq_i(dbl, elem_gen_eval(fp, 3, ElemGen("QE", 1, 2, 1)), J)
    for _ in range(20):
        A = word_eval(lp, 3, random_word(lp, 3, rng, 3))
        B = word_eval(lp, 3, random_word(lp, 3, rng, 3))
        assert seq_p2(dbl, mx.mat_mul(dbl, A, B)) == mx.mat_mul(
            z4, seq_p2(dbl, A), seq_p2(dbl, B)
        )
