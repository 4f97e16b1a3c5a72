"""The hyperbolic form, membership and block conditions for the quadratic
group, the three elementary generator families with certificate words,
relative generators, the rank-one update operator, Hermitian block predicates,
hyperbolic and unitriangular block matrices, and transvections on free
hyperbolic modules."""

from __future__ import annotations

from dataclasses import dataclass

from . import matrices as mx
from .errors import (
    BadParameter,
    DimensionMismatch,
    MalformedWord,
    NotHermitian,
    NotInvertible,
    ParameterNotInIdeal,
    PreconditionFailed,
)
from .rings import Report


def hyperbolic_form(ring, n):
    """The 2n x 2n Gram matrix with I_n top-right and lam*I_n bottom-left."""
    z = ring.zero()
    o = ring.one()
    lam = ring.lam
    rows = []
    for i in range(2 * n):
        row = [z] * (2 * n)
        if i < n:
            row[n + i] = o
        else:
            row[i - n] = lam
        rows.append(tuple(row))
    return tuple(rows)


def gq_member(ring, M):
    """True iff star(M) . psi . M == psi (invertibility follows over the
    stably finite rings supported here)."""
    size = len(M)
    if size % 2 or any(len(row) != size for row in M):
        raise DimensionMismatch("expected a square matrix of even size")
    psi = hyperbolic_form(ring, size // 2)
    return mx.mat_mul(ring, mx.mat_mul(ring, mx.star(ring, M), psi), M) == psi


def hermitian_check(fp, A):
    """A == -lam * star(A) with every diagonal entry in the parameter."""
    ring = fp.ring
    if A != mx.mat_neg(ring, mx.left_scale(ring, ring.lam, mx.star(ring, A))):
        return False
    return all(fp.contains(c) for c in mx.diagonal(A))


def hermitian_bar_check(fp, A):
    """A == -conj(lam) * star(A) with diagonal entries in the conjugate
    parameter."""
    ring = fp.ring
    if A != mx.mat_neg(ring, mx.left_scale(ring, ring.lam_conj(), mx.star(ring, A))):
        return False
    bar = fp.bar()
    return all(bar.contains(c) for c in mx.diagonal(A))


def quadratic_conditions(fp, M):
    """The four equivalent block conditions, each evaluated independently."""
    ring = fp.ring
    a, b, c, d = mx.blocks(M)
    n = len(a)
    I = mx.identity(ring, n)
    lam = ring.lam
    a_s, b_s, c_s, d_s = (mx.star(ring, X) for X in (a, b, c, d))

    def diag_in(M_):
        return all(fp.contains(x) for x in mx.diagonal(M_))

    member = gq_member(ring, M)
    ac = mx.mat_mul(ring, a_s, c)
    bd = mx.mat_mul(ring, b_s, d)
    ab = mx.mat_mul(ring, a, b_s)
    cd = mx.mat_mul(ring, c, d_s)

    cond1 = member and diag_in(ac) and diag_in(bd)
    cond2 = (
        mx.mat_add(ring, mx.mat_mul(ring, a_s, d), mx.left_scale(ring, lam, mx.mat_mul(ring, c_s, b))) == I
        and hermitian_check(fp, ac)
        and hermitian_check(fp, bd)
    )
    cond3 = member and diag_in(ab) and diag_in(cd)
    cond4 = (
        mx.mat_add(ring, mx.mat_mul(ring, a, d_s), mx.left_scale(ring, lam, mx.mat_mul(ring, b, c_s))) == I
        and hermitian_check(fp, ab)
        and hermitian_check(fp, cd)
    )
    return (cond1, cond2, cond3, cond4)


def is_lambda_quadratic(fp, M):
    return all(quadratic_conditions(fp, M))


# ---------------------------------------------------------------------------
# generators and certificate words


@dataclass(frozen=True)
class ElemGen:
    """One short/long root generator; i, j are 1-based in 1..n."""

    family: str  # "QE", "QR", "QL"
    i: int
    j: int
    a: object


@dataclass(frozen=True)
class BlockGen:
    """Block-level generator: hyperbolic of an invertible block ("H") or a
    unitriangular one-block matrix ("T12"/"T21")."""

    kind: str
    block: tuple
    inverse: tuple = None


@dataclass(frozen=True)
class RelGen:
    """Conjugate of a generator whose parameter lies in the ideal."""

    conjugator: tuple  # tuple of ElemGen
    core: ElemGen


@dataclass(frozen=True)
class Word:
    factors: tuple

    def __len__(self):
        return len(self.factors)


def _require_indices(g, n):
    if not (1 <= g.i <= n and 1 <= g.j <= n):
        raise BadParameter(f"indices ({g.i},{g.j}) out of range 1..{n}")
    if g.family == "QE" and g.i == g.j:
        raise BadParameter("equal indices are not allowed in the QE family")


def elem_gen_eval(fp, n, g):
    """Evaluate one generator to its 2n x 2n matrix."""
    ring = fp.ring
    _require_indices(g, n)
    i, j = g.i - 1, g.j - 1
    ri, rj = n + i, n + j
    a = g.a
    rows = [list(row) for row in mx.identity(ring, 2 * n)]
    if g.family == "QE":
        rows[i][j] = ring.add(rows[i][j], a)
        rows[rj][ri] = ring.sub(rows[rj][ri], ring.conj(a))
    elif g.family == "QR":
        if g.i == g.j:
            if a != ring.neg(ring.mul(ring.lam_conj(), ring.conj(a))):
                raise BadParameter(
                    "diagonal QR parameter must satisfy a = -conj(lambda)*conj(a)"
                )
            rows[i][ri] = ring.add(rows[i][ri], a)
        else:
            rows[i][rj] = ring.add(rows[i][rj], a)
            rows[j][ri] = ring.sub(rows[j][ri], ring.mul(ring.lam, ring.conj(a)))
    elif g.family == "QL":
        if g.i == g.j:
            if not fp.contains(a):
                raise BadParameter("diagonal QL parameter must lie in the form parameter")
            rows[ri][i] = ring.add(rows[ri][i], a)
        else:
            rows[ri][j] = ring.add(rows[ri][j], a)
            rows[rj][i] = ring.sub(rows[rj][i], ring.mul(ring.lam_conj(), ring.conj(a)))
    else:
        raise MalformedWord(f"unknown generator family {g.family!r}")
    return tuple(tuple(row) for row in rows)


def factor_inverse(ring, g):
    if isinstance(g, ElemGen):
        return ElemGen(g.family, g.i, g.j, ring.neg(g.a))
    if isinstance(g, BlockGen):
        if g.kind in ("T12", "T21"):
            return BlockGen(g.kind, mx.mat_neg(ring, g.block))
        if g.kind == "H":
            return BlockGen("H", g.inverse, g.block)
        raise MalformedWord(f"unknown block kind {g.kind!r}")
    if isinstance(g, RelGen):
        return RelGen(g.conjugator, factor_inverse(ring, g.core))
    raise MalformedWord(f"unknown word factor {g!r}")


def word_inverse(ring, w):
    """Reverse the order and negate the parameters."""
    return Word(tuple(factor_inverse(ring, g) for g in reversed(w.factors)))


def factor_eval(fp, n, g, ideal=None):
    if isinstance(g, ElemGen):
        return elem_gen_eval(fp, n, g)
    if isinstance(g, BlockGen):
        if g.kind == "H":
            return hyperbolic(fp.ring, g.block, g.inverse)
        if g.kind == "T12":
            return t12(fp, g.block)
        if g.kind == "T21":
            return t21(fp, g.block)
        raise MalformedWord(f"unknown block kind {g.kind!r}")
    if isinstance(g, RelGen):
        return rel_gen_eval(fp, n, g, ideal)
    raise MalformedWord(f"unknown word factor {g!r}")


def word_eval(fp, n, w, ideal=None):
    """Ordered product of the factors (identity for the empty word)."""
    acc = mx.identity(fp.ring, 2 * n)
    for g in w.factors:
        acc = mx.mat_mul(fp.ring, acc, factor_eval(fp, n, g, ideal))
    return acc


def rel_gen_eval(fp, n, g, ideal):
    """g . core . g^{-1} with the core parameter certified to lie in J."""
    if ideal is None:
        raise ParameterNotInIdeal("relative generator evaluated without an ideal")
    if not ideal.contains(g.core.a):
        raise ParameterNotInIdeal(
            f"core parameter {fp.ring.format(g.core.a)} is not in the ideal"
        )
    conj_word = Word(g.conjugator)
    C = word_eval(fp, n, conj_word)
    C_inv = word_eval(fp, n, word_inverse(fp.ring, conj_word))
    core = elem_gen_eval(fp, n, g.core)
    return mx.mat_mul(fp.ring, mx.mat_mul(fp.ring, C, core), C_inv)


def rel_congruent(ring, M, ideal):
    """Entrywise congruence to the identity modulo the ideal."""
    I = mx.identity(ring, len(M))
    return mx.entries_in_ideal(ring, mx.mat_sub(ring, M, I), ideal)


# ---------------------------------------------------------------------------
# the rank-one update operator and its isotropy bookkeeping


def tilde(ring, v):
    """Row vector conj(v)^t . psi."""
    size = len(v)
    if size % 2:
        raise DimensionMismatch("vectors must have even length")
    n = size // 2
    lam = ring.lam
    out = [ring.zero()] * size
    for k in range(size):
        ck = ring.conj(v[k])
        if k < n:
            out[n + k] = ring.add(out[n + k], ck)
        else:
            out[k - n] = ring.add(out[k - n], ring.mul(ck, lam))
    return tuple(out)


def inner(ring, v, w):
    """tilde(v) . w"""
    if len(v) != len(w):
        raise DimensionMismatch("vector length mismatch")
    tv = tilde(ring, v)
    acc = ring.zero()
    for a, b in zip(tv, w):
        acc = ring.add(acc, ring.mul(a, b))
    return acc


def m_op(ring, v, w):
    """v . tilde(w) - conj(lam) . w . tilde(v)  (a 2n x 2n matrix).

    The second factor carries w unconjugated: that is what the transvection
    formula x -> x + u.h(v,x) - v.conj(lam).h(u,x) expands to, and it is the
    unique variant for which I + M is psi-alternating (the first-order terms
    of star(I+M).psi.(I+M) cancel for every involution, not only trivial
    ones).
    """
    if len(v) != len(w):
        raise DimensionMismatch("vector length mismatch")
    tw = tilde(ring, w)
    tv = tilde(ring, v)
    lc = ring.lam_conj()
    size = len(v)
    return tuple(
        tuple(
            ring.sub(
                ring.mul(v[k], tw[l]),
                ring.mul(ring.mul(lc, w[k]), tv[l]),
            )
            for l in range(size)
        )
        for k in range(size)
    )


def key_lemma_check(fp, v, w, ideal):
    """Verify the two computable facts about the rank-one isotropic update:
    I + M(v, w) preserves the form and is congruent to I modulo J.

    The report's ``certificate`` stays None: producing the elementary
    factorization itself is a hook for a future builder.
    """
    ring = fp.ring
    ip = inner(ring, v, w)
    if ip != ring.zero():
        raise PreconditionFailed(f"inner product is {ring.format(ip)}, not zero")
    if not all(ideal.contains(c) for c in w):
        raise PreconditionFailed("second vector is not an ideal vector")
    M = mx.mat_add(ring, mx.identity(ring, len(v)), m_op(ring, v, w))
    report = Report()
    report.add("form-preserved", gq_member(ring, M), 1)
    report.add("congruent-to-identity", rel_congruent(ring, M, ideal), 1)
    report.certificate = None
    return report


# ---------------------------------------------------------------------------
# block-level matrices


def hyperbolic(ring, alpha, alpha_inverse=None):
    """diag(alpha, star(alpha)^{-1}) for an invertible block."""
    inv = mx.try_inverse(ring, alpha, witness=alpha_inverse)
    if inv is None:
        raise NotInvertible("hyperbolic block needs a verified two-sided inverse")
    n = len(alpha)
    return mx.from_blocks(
        alpha, mx.zero_matrix(ring, n), mx.zero_matrix(ring, n), mx.star(ring, inv)
    )


def t12(fp, beta):
    if not hermitian_bar_check(fp, beta):
        raise NotHermitian("upper block must satisfy the conjugate Hermitian condition")
    n = len(beta)
    I = mx.identity(fp.ring, n)
    return mx.from_blocks(I, beta, mx.zero_matrix(fp.ring, n), I)


def t21(fp, gamma):
    if not hermitian_check(fp, gamma):
        raise NotHermitian("lower block must satisfy the Hermitian condition")
    n = len(gamma)
    I = mx.identity(fp.ring, n)
    return mx.from_blocks(I, mx.zero_matrix(fp.ring, n), gamma, I)


# ---------------------------------------------------------------------------
# transvections on the free hyperbolic module


def sesq_form(ring, u, v):
    """conj(u)^t . phi . v with phi the top-right block form."""
    size = len(u)
    if size != len(v) or size % 2:
        raise DimensionMismatch("vectors must share an even length")
    n = size // 2
    acc = ring.zero()
    for k in range(n):
        acc = ring.add(acc, ring.mul(ring.conj(u[k]), v[n + k]))
    return acc


def herm_form(ring, u, v):
    """f(u, v) + lam * conj(f(v, u)); equals conj(u)^t . psi . v."""
    return inner(ring, u, v)


def _transvection_preconditions(fp, u, v, a):
    ring = fp.ring
    problems = []
    if not fp.contains(sesq_form(ring, u, u)):
        problems.append("f(u,u) is not in the form parameter")
    if herm_form(ring, u, v) != ring.zero():
        problems.append("h(u,v) is not zero")
    if not fp.contains(ring.sub(sesq_form(ring, v, v), a)):
        problems.append("f(v,v) is not congruent to the scalar modulo the parameter")
    if problems:
        raise PreconditionFailed("; ".join(problems))


def transvection_apply(fp, u, v, a, x):
    """x + u.h(v,x) - v.conj(lam).h(u,x) - u.conj(lam).a.h(u,x)."""
    ring = fp.ring
    _transvection_preconditions(fp, u, v, a)
    hv = herm_form(ring, v, x)
    hu = herm_form(ring, u, x)
    lc = ring.lam_conj()
    out = []
    for k in range(len(x)):
        t = ring.add(x[k], ring.mul(u[k], hv))
        t = ring.sub(t, ring.mul(v[k], ring.mul(lc, hu)))
        t = ring.sub(t, ring.mul(u[k], ring.mul(ring.mul(lc, a), hu)))
        out.append(t)
    return tuple(out)


def transvection_matrix(fp, u, v, a):
    """Matrix of the transvection (columns are images of the basis)."""
    ring = fp.ring
    size = len(u)
    cols = []
    for k in range(size):
        e = tuple(ring.one() if i == k else ring.zero() for i in range(size))
        cols.append(transvection_apply(fp, u, v, a, e))
    return tuple(tuple(cols[j][i] for j in range(size)) for i in range(size))


def q_preserved(fp, M, rng, samples=32):
    """Sampled check that f(Mx, Mx) - f(x, x) stays in the parameter."""
    ring = fp.ring
    size = len(M)
    for _ in range(samples):
        x = tuple(ring.sample(rng) for _ in range(size))
        y = mx.mat_vec(ring, M, x)
        if not fp.contains(ring.sub(sesq_form(ring, y, y), sesq_form(ring, x, x))):
            return False
    return True


# ---------------------------------------------------------------------------
# randomized builders used by the suites and tests


def basis_vector(ring, size, k):
    return tuple(ring.one() if i == k else ring.zero() for i in range(size))


def random_elem_gen(fp, n, rng, allow_diagonal=True, param_sampler=None):
    ring = fp.ring
    fam = ("QE", "QR", "QL")[rng.randrange(3)]
    i = rng.randint(1, n)
    j = rng.randint(1, n)
    if fam == "QE" or not allow_diagonal:
        while j == i:
            j = rng.randint(1, n)
    if fam != "QE" and i == j:
        if fam == "QL":
            a = fp.sample(rng)
        else:
            from .forms import lambda_max

            a = ring.conj(lambda_max(ring).sample(rng))
    else:
        a = param_sampler(rng) if param_sampler else ring.sample(rng)
    return ElemGen(fam, i, j, a)


def random_word(fp, n, rng, length=6, allow_diagonal=True, param_sampler=None):
    return Word(
        tuple(
            random_elem_gen(fp, n, rng, allow_diagonal, param_sampler)
            for _ in range(length)
        )
    )


def random_relative_word(fp, ideal, n, rng, length=3, conj_length=2):
    factors = []
    for _ in range(length):
        conj = tuple(
            random_elem_gen(fp, n, rng, allow_diagonal=False) for _ in range(conj_length)
        )
        fam = ("QE", "QR", "QL")[rng.randrange(3)]
        i = rng.randint(1, n)
        j = rng.randint(1, n)
        while j == i:
            j = rng.randint(1, n)
        factors.append(RelGen(conj, ElemGen(fam, i, j, ideal.sample(rng))))
    return Word(tuple(factors))


def random_linear_elementary(ring, r, rng, length=4):
    """A product of I + a*e_kl (k != l) together with its exact inverse."""
    M = mx.identity(ring, r)
    M_inv = mx.identity(ring, r)
    if r == 1:
        return M, M_inv
    for _ in range(length):
        k = rng.randrange(r)
        l = rng.randrange(r)
        while l == k:
            l = rng.randrange(r)
        a = ring.sample(rng)
        E = [list(row) for row in mx.identity(ring, r)]
        E[k][l] = ring.add(E[k][l], a)
        E_inv = [list(row) for row in mx.identity(ring, r)]
        E_inv[k][l] = ring.sub(E_inv[k][l], a)
        M = mx.mat_mul(ring, M, tuple(tuple(row) for row in E))
        M_inv = mx.mat_mul(ring, tuple(tuple(row) for row in E_inv), M_inv)
    return M, M_inv


def random_hermitian(fp, r, rng):
    """A block satisfying hermitian_check, built from free strict-lower
    entries, mirrored uppers, and diagonal samples from the parameter."""
    ring = fp.ring
    lam = ring.lam
    rows = [[ring.zero()] * r for _ in range(r)]
    for k in range(r):
        rows[k][k] = fp.sample(rng)
        for l in range(k):
            c = ring.sample(rng)
            rows[k][l] = c
            rows[l][k] = ring.neg(ring.mul(lam, ring.conj(c)))
    return tuple(tuple(row) for row in rows)


def random_hermitian_bar(fp, r, rng):
    ring = fp.ring
    lc = ring.lam_conj()
    bar = fp.bar()
    rows = [[ring.zero()] * r for _ in range(r)]
    for k in range(r):
        rows[k][k] = bar.sample(rng)
        for l in range(k):
            c = ring.sample(rng)
            rows[k][l] = c
            rows[l][k] = ring.neg(ring.mul(lc, ring.conj(c)))
    return tuple(tuple(row) for row in rows)


def random_eq_lambda_word(fp, r, rng, length=4):
    """Word of H/T12/T21 factors, every factor individually quadratic."""
    ring = fp.ring
    factors = []
    for _ in range(length):
        kind = rng.randrange(3)
        if kind == 0 and r > 1:
            alpha, alpha_inv = random_linear_elementary(ring, r, rng, length=3)
            factors.append(BlockGen("H", alpha, alpha_inv))
        elif kind == 1:
            factors.append(BlockGen("T12", random_hermitian_bar(fp, r, rng)))
        else:
            factors.append(BlockGen("T21", random_hermitian(fp, r, rng)))
    return Word(tuple(factors))
