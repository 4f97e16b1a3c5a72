"""Form membership, generators, words, relative certificates, the rank-one
update operator, Hermitian blocks, and transvections."""

import random

import pytest

from formk1 import matrices as mx
from formk1.errors import (
    BadParameter,
    DimensionMismatch,
    NotHermitian,
    ParameterNotInIdeal,
    PreconditionFailed,
)
from formk1.forms import explicit_param, lambda_max
from formk1.gq import (
    ElemGen,
    RelGen,
    Word,
    basis_vector,
    elem_gen_eval,
    gq_member,
    hermitian_check,
    hyperbolic,
    hyperbolic_form,
    inner,
    key_lemma_check,
    m_op,
    quadratic_conditions,
    random_eq_lambda_word,
    random_relative_word,
    random_word,
    rel_congruent,
    rel_gen_eval,
    t12,
    t21,
    tilde,
    transvection_apply,
    transvection_matrix,
    word_eval,
    word_inverse,
)
from formk1.rings import GaussianModular, Ideal, Integers, ModularInt


def test_form_matrix_display():
    assert hyperbolic_form(Integers(-1), 1) == ((0, 1), (-1, 0))
    z4 = ModularInt(4, 3)
    psi = hyperbolic_form(z4, 3)
    assert len(psi) == 6
    for i in range(3):
        assert psi[i][3 + i] == 1 and psi[3 + i][i] == 3


def test_gq_member_requires_even_square():
    with pytest.raises(DimensionMismatch):
        gq_member(Integers(1), ((1, 0, 0), (0, 1, 0), (0, 0, 1)))


def test_generator_frozen_matrices():
    z4 = ModularInt(4, 1)
    fp = lambda_max(z4)
    I6 = mx.identity(z4, 6)

    qe = [list(r) for r in I6]
    qe[0][1] = 1
    qe[4][3] = 3
    assert elem_gen_eval(fp, 3, ElemGen("QE", 1, 2, 1)) == tuple(map(tuple, qe))

    qr = [list(r) for r in I6]
    qr[0][4] = 1
    qr[1][3] = 3
    assert elem_gen_eval(fp, 3, ElemGen("QR", 1, 2, 1)) == tuple(map(tuple, qr))

    assert elem_gen_eval(fp, 3, ElemGen("QE", 1, 2, 0)) == I6


def test_uncompensated_unit_is_not_a_member():
    z4 = ModularInt(4, 3)
    bad = [list(r) for r in mx.identity(z4, 6)]
    bad[0][1] = 1
    assert not gq_member(z4, tuple(map(tuple, bad)))


def test_diagonal_generator_constraints():
    z = Integers(1)
    fp = explicit_param(z, [0])
    with pytest.raises(BadParameter):
        elem_gen_eval(fp, 2, ElemGen("QR", 1, 1, 1))  # needs a = -conj(lam)*a
    with pytest.raises(BadParameter):
        elem_gen_eval(fp, 2, ElemGen("QL", 1, 1, 1))  # needs a in the parameter
    zm = Integers(-1)
    fpm = lambda_max(zm)
    M = elem_gen_eval(fpm, 2, ElemGen("QR", 1, 1, 5))
    assert gq_member(zm, M)


def test_same_position_additivity_and_inverse():
    rng = random.Random(3)
    g5 = GaussianModular(5, 1)
    fp = lambda_max(g5)
    for _ in range(100):
        fam = ("QE", "QR", "QL")[rng.randrange(3)]
        i, j = 1, 2
        a, b = g5.sample(rng), g5.sample(rng)
        left = mx.mat_mul(
            g5,
            elem_gen_eval(fp, 3, ElemGen(fam, i, j, a)),
            elem_gen_eval(fp, 3, ElemGen(fam, i, j, b)),
        )
        assert left == elem_gen_eval(fp, 3, ElemGen(fam, i, j, g5.add(a, b)))
        inv = elem_gen_eval(fp, 3, ElemGen(fam, i, j, g5.neg(a)))
        assert mx.mat_mul(g5, elem_gen_eval(fp, 3, ElemGen(fam, i, j, a)), inv) == mx.identity(g5, 6)


def test_word_eval_and_inverse():
    z4 = ModularInt(4, 3)
    fp = lambda_max(z4)
    assert word_eval(fp, 3, Word(())) == mx.identity(z4, 6)
    w = Word((ElemGen("QE", 1, 2, 1), ElemGen("QE", 1, 2, 3)))
    assert word_eval(fp, 3, w) == mx.identity(z4, 6)
    rng = random.Random(8)
    g5 = GaussianModular(5, 1)
    fg = lambda_max(g5)
    for _ in range(25):
        w = random_word(fg, 3, rng, length=12)
        M = word_eval(fg, 3, w)
        assert gq_member(g5, M)
        assert mx.mat_mul(g5, M, word_eval(fg, 3, word_inverse(g5, w))) == mx.identity(g5, 6)


def test_relative_generator_worked_example():
    z4 = ModularInt(4, 3)
    fp = lambda_max(z4)
    J = Ideal(z4, [2])
    g = RelGen((ElemGen("QE", 1, 2, 1),), ElemGen("QE", 2, 1, 2))
    M = rel_gen_eval(fp, 3, g, J)
    assert gq_member(z4, M)
    assert rel_congruent(z4, M, J)
    zero_core = RelGen((ElemGen("QE", 1, 2, 1),), ElemGen("QE", 2, 1, 0))
    assert rel_gen_eval(fp, 3, zero_core, J) == mx.identity(z4, 6)
    with pytest.raises(ParameterNotInIdeal):
        rel_gen_eval(fp, 3, RelGen((), ElemGen("QE", 2, 1, 1)), J)


def test_tilde_inner_update_worked_example():
    z4 = ModularInt(4, 1)
    fp = lambda_max(z4)
    v = basis_vector(z4, 6, 0)
    w = basis_vector(z4, 6, 1)
    assert tilde(z4, v) == basis_vector(z4, 6, 3)
    assert inner(z4, v, w) == 0
    assert inner(z4, v, v) == 0
    expected = elem_gen_eval(fp, 3, ElemGen("QR", 1, 2, 1))
    assert mx.mat_add(z4, mx.identity(z4, 6), m_op(z4, v, w)) == expected
    zero = (0,) * 6
    assert m_op(z4, v, zero) == mx.zero_matrix(z4, 6)


def test_key_lemma_check():
    z4 = ModularInt(4, 1)
    fp = lambda_max(z4)
    J = Ideal(z4, [2])
    v = basis_vector(z4, 6, 0)
    w = tuple(z4.mul(2, c) for c in basis_vector(z4, 6, 1))
    report = key_lemma_check(fp, v, w, J)
    assert report.ok and report.certificate is None
    assert key_lemma_check(fp, v, (0,) * 6, J).ok
    with pytest.raises(PreconditionFailed):
        key_lemma_check(fp, v, basis_vector(z4, 6, 3), J)
    with pytest.raises(PreconditionFailed):
        key_lemma_check(fp, v, basis_vector(z4, 6, 1), J)  # not an ideal vector


def test_hermitian_predicates():
    z = Integers(-1)
    fz = lambda_max(z)
    # any symmetric integer matrix with lam = -1
    assert hermitian_check(fz, ((1, 2), (2, 5)))
    z1 = Integers(1)
    f0 = explicit_param(z1, [0])
    assert hermitian_check(f0, ((0, 1), (-1, 0)))
    assert not hermitian_check(f0, ((1, 1), (-1, 0)))  # diagonal escapes
    # conjugation stability under star-sandwiching by invertible blocks
    rng = random.Random(5)
    from formk1.gq import random_hermitian, random_linear_elementary

    for ring in (GaussianModular(5, 1), ModularInt(8, 7)):
        fg = lambda_max(ring)
        for _ in range(160):
            beta = random_hermitian(fg, 2, rng)
            alpha, _ = random_linear_elementary(ring, 2, rng, 3)
            conj = mx.mat_mul(ring, mx.mat_mul(ring, mx.star(ring, alpha), beta), alpha)
            assert hermitian_check(fg, conj)


def test_hyperbolic_and_unitriangular():
    z = Integers(-1)
    fz = lambda_max(z)
    assert hyperbolic(z, mx.identity(z, 2)) == mx.identity(z, 4)
    assert t12(fz, ((1,),)) == ((1, 1), (0, 1))
    z1 = Integers(1)
    with pytest.raises(NotHermitian):
        t12(explicit_param(z1, [0]), ((1,),))
    gamma = ((3,),)
    assert t21(fz, gamma) == ((1, 0), (3, 1))
    from formk1.gq import is_lambda_quadratic

    assert is_lambda_quadratic(fz, t12(fz, ((1,),)))


def test_condition_agreement_both_populations():
    rng = random.Random(6)
    for ring in (ModularInt(4, 3), GaussianModular(5, 1)):
        fp = lambda_max(ring)
        for _ in range(40):
            M = word_eval(fp, 2, random_eq_lambda_word(fp, 2, rng, 4))
            assert all(quadratic_conditions(fp, M))
            rows = [list(r) for r in M]
            rows[rng.randrange(4)][rng.randrange(4)] = ring.sample(rng)
            P = tuple(map(tuple, rows))
            if not gq_member(ring, P):
                conds = quadratic_conditions(fp, P)
                assert len(set(conds)) == 1 and not conds[0]


def test_group_member_outside_parameter_class():
    z = Integers(-1)
    fp = explicit_param(z, [0, 2, -2, 4, -4, 6, -6, 8, -8])
    M = ((1, 1), (0, 1))
    assert gq_member(z, M)
    conds = quadratic_conditions(fp, M)
    assert conds == (False, False, False, False)


def test_transvection_matches_generator_and_errors():
    z4 = ModularInt(4, 1)
    fp = lambda_max(z4)
    u = basis_vector(z4, 6, 0)
    v = basis_vector(z4, 6, 1)
    assert transvection_matrix(fp, u, v, 0) == elem_gen_eval(fp, 3, ElemGen("QR", 1, 2, 1))
    assert transvection_matrix(fp, u, (0,) * 6, 0) == mx.identity(z4, 6)
    with pytest.raises(PreconditionFailed):
        transvection_apply(fp, u, basis_vector(z4, 6, 3), 0, v)


def test_transvections_preserve_quadratic_values():
    rng = random.Random(14)
    g5 = GaussianModular(5, 1)
    fp = lambda_max(g5)
    from formk1.gq import q_preserved

    u = basis_vector(g5, 6, 0)
    zero_vec = (g5.zero(),) * 6
    for a in fp.elements():
        M = transvection_matrix(fp, u, zero_vec, a)
        assert gq_member(g5, M)
        assert q_preserved(fp, M, rng, samples=20)


def test_relative_words_random():
    rng = random.Random(17)
    z8 = ModularInt(8, 7)
    fp = lambda_max(z8)
    J = Ideal(z8, [2])
    for _ in range(50):
        w = random_relative_word(fp, J, 3, rng, length=3)
        M = word_eval(fp, 3, w, ideal=J)
        assert gq_member(z8, M)
        assert rel_congruent(z8, M, J)
