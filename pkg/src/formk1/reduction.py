"""Reductions to hyperbolic form with certificate words, Kopeiko normal-form
representatives of polynomial classes, truncated-polynomial unit
factorization with uniqueness, and torsion descent on truncated units."""

from __future__ import annotations

from dataclasses import dataclass

from . import matrices as mx
from .errors import (
    ConditionViolated,
    HypothesisFailed,
    KNotInvertible,
    NotInvertible,
    NotNilpotent,
    NotQuadratic,
)
from .gq import BlockGen, Word, hermitian_bar_check, hermitian_check
from .rings import NILPOTENCY_BOUND, PolynomialRing, TruncatedPolynomialRing, trunc_inverse


@dataclass
class ReductionResult:
    """Invertible block alpha (with inverse) plus a certificate word w with
    input . eval(w) == H(alpha) exactly."""

    hyperbolic_block: tuple
    hyperbolic_block_inverse: tuple
    certificate: Word


def _split_triangular(fp, M):
    a, b, c, d = mx.blocks(M)
    return a, b, c, d


def reduce_upper(fp, A, alpha_inverse=None):
    """(alpha beta; 0 delta) -> H(alpha) via one T12 factor.

    Validates delta == star(alpha)^{-1} and that alpha^{-1}.beta satisfies
    the conjugate Hermitian condition; then A . T12(-alpha^{-1}.beta) is
    exactly H(alpha).
    """
    ring = fp.ring
    alpha, beta, low, delta = _split_triangular(fp, A)
    n = len(alpha)
    if low != mx.zero_matrix(ring, n):
        raise NotQuadratic("lower-left block is not zero")
    inv = mx.try_inverse(ring, alpha, witness=alpha_inverse)
    if inv is None:
        raise NotInvertible("top-left block has no verified inverse")
    if delta != mx.star(ring, inv):
        raise NotQuadratic("bottom-right block is not the inverse conjugate transpose")
    x = mx.mat_mul(ring, inv, beta)
    if not hermitian_bar_check(fp, x):
        raise NotQuadratic("alpha^{-1}.beta fails the conjugate Hermitian condition")
    cert = Word((BlockGen("T12", mx.mat_neg(ring, x)),))
    return ReductionResult(alpha, inv, cert)


def reduce_lower(fp, B, alpha_inverse=None):
    """(alpha 0; gamma delta) -> H(alpha) via one T21 factor.

    The block condition forced by the quadratic constraints is that
    star(alpha).gamma is Hermitian; the certificate is T21 of its negative.
    """
    ring = fp.ring
    alpha, up, gamma, delta = _split_triangular(fp, B)
    n = len(alpha)
    if up != mx.zero_matrix(ring, n):
        raise NotQuadratic("upper-right block is not zero")
    inv = mx.try_inverse(ring, alpha, witness=alpha_inverse)
    if inv is None:
        raise NotInvertible("top-left block has no verified inverse")
    if delta != mx.star(ring, inv):
        raise NotQuadratic("bottom-right block is not the inverse conjugate transpose")
    x = mx.mat_mul(ring, mx.star(ring, alpha), gamma)
    if not hermitian_check(fp, x):
        raise NotQuadratic("star(alpha).gamma fails the Hermitian condition")
    cert = Word((BlockGen("T21", mx.mat_neg(ring, x)),))
    return ReductionResult(alpha, inv, cert)


def reduce_invertible_corner(fp, M, a_inverse=None):
    """Any quadratic matrix with invertible top-left block -> H(a): first a
    T12 factor clears the upper-right corner, then the lower reduction."""
    ring = fp.ring
    a, b, c, d = mx.blocks(M)
    inv = mx.try_inverse(ring, a, witness=a_inverse)
    if inv is None:
        raise NotInvertible("top-left block has no verified inverse")
    x = mx.mat_mul(ring, inv, b)
    if not hermitian_bar_check(fp, x):
        raise NotQuadratic("a^{-1}.b fails the conjugate Hermitian condition")
    first = BlockGen("T12", mx.mat_neg(ring, x))
    from .gq import factor_eval

    lowered = mx.mat_mul(ring, M, factor_eval(fp, len(a), first))
    rest = reduce_lower(fp, lowered, alpha_inverse=inv)
    return ReductionResult(a, inv, Word((first,) + rest.certificate.factors))


def reconstruct(fp, M, result):
    """input . eval(certificate); equals H(block) exactly when sound."""
    from .gq import word_eval

    n = len(result.hyperbolic_block)
    return mx.mat_mul(fp.ring, M, word_eval(fp, n, result.certificate))


def hyperbolic_of(fp, result):
    from .gq import hyperbolic

    return hyperbolic(fp.ring, result.hyperbolic_block, result.hyperbolic_block_inverse)


# ---------------------------------------------------------------------------
# Kopeiko normal forms


@dataclass
class KopeikoData:
    """Blocks (a, b, c) over R and the degree parameter n of the lower-left
    corner, subject to the three normal-form conditions."""

    a: tuple
    b: tuple
    c: tuple
    n: int


def _mat_pow(ring, M, k):
    acc = mx.identity(ring, len(M))
    for _ in range(k):
        acc = mx.mat_mul(ring, acc, M)
    return acc


def kopeiko_validate(fp, data):
    """Check the three conditions exactly; raises ConditionViolated with the
    1-based index of the first failure, returns True otherwise.

    The Hermitian sides follow the block positions: b (upper right) on the
    conjugate-parameter side, c (lower left) on the parameter side.
    """
    ring = fp.ring
    a, b, c = data.a, data.b, data.c
    star = mx.star
    ab = mx.mat_mul(ring, a, b)
    if not (
        hermitian_bar_check(fp, b)
        and hermitian_bar_check(fp, ab)
        and ab == mx.mat_mul(ring, b, star(ring, a))
    ):
        raise ConditionViolated(1, "b / a.b fail the conjugate Hermitian conditions")
    ca = mx.mat_mul(ring, c, a)
    if not (
        hermitian_check(fp, c)
        and hermitian_check(fp, ca)
        and ca == mx.mat_mul(ring, star(ring, a), c)
    ):
        raise ConditionViolated(2, "c / c.a fail the Hermitian conditions")
    if not (
        mx.mat_mul(ring, b, c) == _mat_pow(ring, a, data.n + 1)
        and mx.mat_mul(ring, c, b) == _mat_pow(ring, star(ring, a), data.n + 1)
    ):
        raise ConditionViolated(3, "b.c / c.b do not match the required power")
    return True


def kopeiko_is_valid(fp, data):
    try:
        return kopeiko_validate(fp, data)
    except ConditionViolated:
        return False


def kopeiko_matrix(fp, data):
    """The 2r x 2r polynomial representative

        (I - aX,  bX;  -cX^n,  I + a*X + ... + (a*)^n X^n).
    """
    ring = fp.ring
    poly = PolynomialRing(ring)
    r = len(data.a)
    embed = lambda M: tuple(tuple(poly._embed(c) for c in row) for row in M)
    shift = lambda M, k: tuple(tuple(poly.shift(poly._embed(c), k) for c in row) for row in M)
    I = mx.identity(poly, r)
    a_block = mx.mat_sub(poly, I, shift(data.a, 1))
    b_block = shift(data.b, 1)
    c_block = mx.mat_neg(poly, shift(data.c, data.n))
    astar = mx.star(ring, data.a)
    d_block = I
    for k in range(1, data.n + 1):
        d_block = mx.mat_add(poly, d_block, shift(_mat_pow(ring, astar, k), k))
    return mx.from_blocks(a_block, b_block, c_block, d_block)


def geometric_series_inverse(fp, a, bound=NILPOTENCY_BOUND):
    """Inverse of I - aX over R[X] for nilpotent a: sum of a^k X^k."""
    ring = fp.ring
    poly = PolynomialRing(ring)
    order = mx.nilpotency_order(ring, a, bound)
    if order is None:
        raise NotNilpotent(f"no power of the block vanishes below the bound {bound}")
    r = len(a)
    acc = mx.identity(poly, r)
    shift = lambda M, k: tuple(tuple(poly.shift(poly._embed(c), k) for c in row) for row in M)
    for k in range(1, order):
        acc = mx.mat_add(poly, acc, shift(_mat_pow(ring, a, k), k))
    return acc


def kopeiko_to_hyperbolic(fp, data, bound=NILPOTENCY_BOUND):
    """Reduce a validated representative to H(I - aX) with a certificate.

    Needs I - aX invertible, equivalently (in the library's scope) a
    nilpotent; the inverse is the terminating geometric series.  The result
    lives over R[X] with the coefficientwise extension of the parameter
    (see :func:`kopeiko_extended_param`).
    """
    kopeiko_validate(fp, data)
    M = kopeiko_matrix(fp, data)
    inv = geometric_series_inverse(fp, data.a, bound)
    return reduce_invertible_corner(kopeiko_extended_param(fp), M, a_inverse=inv)


def kopeiko_extended_param(fp):
    from .forms import form_param_extend_poly

    return form_param_extend_poly(fp)


# ---------------------------------------------------------------------------
# truncated polynomial units


def trunc_split(ring, P, r, t):
    """In R_t: 1 + X^r P(X) == (1 + X^r P(0)) (1 + X^{r+1} Q(X)) exactly.

    Returns (P(0), Q) with deg Q < t - r.  The left factor is inverted by a
    terminating geometric series, so the identity is exact by construction
    and re-checkable by multiplication.
    """
    if r < 1 or t < r:
        raise HypothesisFailed("need 1 <= r <= t")
    rt = TruncatedPolynomialRing(ring, t)
    p0 = P[0] if P else ring.zero()
    u = rt.add(rt.one(), rt.from_poly(_shift_coeffs(ring, P, r, t)))
    head = rt.add(rt.one(), rt.from_poly(_shift_coeffs(ring, (p0,), r, t)))
    w = rt.mul(trunc_inverse(rt, head), u)
    # w == 1 + X^{r+1} Q by the telescoping of the series
    q = list(w[r + 1 :])
    return p0, _strip(ring, q)


def _shift_coeffs(ring, coeffs, k, t):
    z = ring.zero()
    out = [z] * (t + 1)
    for i, c in enumerate(coeffs):
        if k + i <= t:
            out[k + i] = c
    return out


def _strip(ring, coeffs):
    z = ring.zero()
    n = len(coeffs)
    while n and coeffs[n - 1] == z:
        n -= 1
    return tuple(coeffs[:n])


def trunc_product_decomp(ring, P, t):
    """Coefficients (a_1 .. a_t) with 1 + X P(X) == prod(1 + a_i X^i) in R_t;
    iterated splitting, unique by ascending induction."""
    rt = TruncatedPolynomialRing(ring, t)
    u = rt.add(rt.one(), rt.from_poly(_shift_coeffs(ring, P, 1, t)))
    out = []
    for i in range(1, t + 1):
        ai = u[i]
        out.append(ai)
        head = rt.add(rt.one(), rt.from_poly(_shift_coeffs(ring, (ai,), i, t)))
        u = rt.mul(trunc_inverse(rt, head), u)
    return out


def trunc_product_eval(ring, coeffs, t):
    """prod(1 + a_i X^i) for i = 1..len(coeffs), in R_t."""
    rt = TruncatedPolynomialRing(ring, t)
    acc = rt.one()
    for i, ai in enumerate(coeffs, start=1):
        acc = rt.mul(acc, rt.add(rt.one(), rt.from_poly(_shift_coeffs(ring, (ai,), i, t))))
    return acc


def torsion_descent(rt, u, k, r):
    """Given u = 1 + X^r P with u**(k**r) == 1, k invertible in R, and P(0)
    central, certify that the X^r coefficient vanishes and return Q with
    u == 1 + X^{r+1} Q."""
    ring = rt.base
    if r < 1 or r > rt.t:
        raise HypothesisFailed("need 1 <= r <= t")
    if ring.try_inverse(ring.from_int(k)) is None:
        raise KNotInvertible(f"{k} is not invertible in the base ring")
    if u[0] != ring.one() or any(u[d] != ring.zero() for d in range(1, r)):
        raise HypothesisFailed("unit is not of the shape 1 + X^r P")
    p0 = u[r]
    central = ring.is_central(p0)
    if central is False:
        raise HypothesisFailed("the leading tail coefficient is not central")
    if rt.power(u, k**r) != rt.one():
        raise HypothesisFailed("the unit is not k^r-torsion")
    if p0 != ring.zero():
        # forced to vanish by invertibility of k; reaching here means the
        # hypotheses themselves were inconsistent
        raise HypothesisFailed("X^r coefficient did not vanish")
    return _strip(ring, list(u[r + 1 :]))
