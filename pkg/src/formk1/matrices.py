"""Exact matrix arithmetic over any ring from :mod:`formk1.rings`.

Matrices are immutable tuples of row tuples; vectors are plain tuples.
Every function takes the ring explicitly.
"""

from __future__ import annotations

import itertools

from .errors import DimensionMismatch, NotInvertible
from .rings import NILPOTENCY_BOUND


def from_rows(rows):
    return tuple(tuple(r) for r in rows)


def identity(ring, size):
    z, o = ring.zero(), ring.one()
    return tuple(tuple(o if i == j else z for j in range(size)) for i in range(size))


def zero_matrix(ring, rows, cols=None):
    z = ring.zero()
    cols = rows if cols is None else cols
    return tuple((z,) * cols for _ in range(rows))


def scalar_matrix(ring, size, c):
    z = ring.zero()
    return tuple(tuple(c if i == j else z for j in range(size)) for i in range(size))


def dims(M):
    return len(M), len(M[0]) if M else 0


def mat_add(ring, A, B):
    return tuple(tuple(ring.add(a, b) for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_neg(ring, A):
    return tuple(tuple(ring.neg(a) for a in row) for row in A)


def mat_sub(ring, A, B):
    return mat_add(ring, A, mat_neg(ring, B))


def mat_mul(ring, A, B):
    n, k = dims(A)
    k2, m = dims(B)
    if k != k2:
        raise DimensionMismatch(f"cannot multiply {n}x{k} by {k2}x{m}")
    add, mul, zero = ring.add, ring.mul, ring.zero()
    Bt = tuple(zip(*B))
    out = []
    for row in A:
        orow = []
        for col in Bt:
            acc = zero
            for a, b in zip(row, col):
                acc = add(acc, mul(a, b))
            orow.append(acc)
        out.append(tuple(orow))
    return tuple(out)


def mat_mul_many(ring, mats):
    acc = None
    for M in mats:
        acc = M if acc is None else mat_mul(ring, acc, M)
    return acc


def transpose(M):
    return tuple(zip(*M))


def star(ring, M):
    """Conjugate transpose: (a_ij)* = (conj(a_ji))."""
    n, m = dims(M)
    return tuple(tuple(ring.conj(M[j][i]) for j in range(n)) for i in range(m))


def left_scale(ring, c, M):
    return tuple(tuple(ring.mul(c, a) for a in row) for row in M)


def blocks(M):
    """Split a 2n x 2n matrix into its four n x n corners (a, b, c, d)."""
    size = len(M)
    if size % 2:
        raise DimensionMismatch(f"matrix of odd size {size} has no half-rank blocks")
    n = size // 2
    a = tuple(row[:n] for row in M[:n])
    b = tuple(row[n:] for row in M[:n])
    c = tuple(row[:n] for row in M[n:])
    d = tuple(row[n:] for row in M[n:])
    return a, b, c, d


def from_blocks(a, b, c, d):
    top = tuple(ra + rb for ra, rb in zip(a, b))
    bottom = tuple(rc + rd for rc, rd in zip(c, d))
    return top + bottom


def diagonal(M):
    return tuple(M[i][i] for i in range(len(M)))


def mat_vec(ring, M, v):
    if len(M[0]) != len(v):
        raise DimensionMismatch("matrix/vector size mismatch")
    add, mul, zero = ring.add, ring.mul, ring.zero()
    out = []
    for row in M:
        acc = zero
        for a, x in zip(row, v):
            acc = add(acc, mul(a, x))
        out.append(acc)
    return tuple(out)


def is_identity(ring, M):
    return M == identity(ring, len(M))


def verify_inverse(ring, M, W):
    I = identity(ring, len(M))
    return mat_mul(ring, M, W) == I and mat_mul(ring, W, M) == I


def nilpotency_order(ring, M, bound=NILPOTENCY_BOUND):
    """Smallest k <= bound with M**k == 0, or None."""
    Z = zero_matrix(ring, len(M))
    P = M
    for k in range(1, bound + 1):
        if P == Z:
            return k
        P = mat_mul(ring, P, M)
    return None


def det(ring, M):
    """Permutation expansion; fine for the small block sizes used here."""
    n = len(M)
    acc = ring.zero()
    for perm in itertools.permutations(range(n)):
        term = ring.one()
        for i, j in enumerate(perm):
            term = ring.mul(term, M[i][j])
        if _parity(perm):
            term = ring.neg(term)
        acc = ring.add(acc, term)
    return acc


def _parity(perm):
    inv = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inv += 1
    return inv % 2


def _minor(M, i, j):
    return tuple(
        tuple(c for cj, c in enumerate(row) if cj != j)
        for ri, row in enumerate(M)
        if ri != i
    )


def adjugate(ring, M):
    n = len(M)
    if n == 1:
        return ((ring.one(),),)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            c = det(ring, _minor(M, j, i))
            if (i + j) % 2:
                c = ring.neg(c)
            row.append(c)
        out.append(tuple(row))
    return tuple(out)


def try_inverse(ring, M, witness=None, bound=NILPOTENCY_BOUND):
    """Two-sided inverse of a square matrix, or None.

    Strategies: a supplied witness (verified), the geometric series when
    I - M is nilpotent, and determinant/adjugate over commutative rings.
    """
    if witness is not None:
        return witness if verify_inverse(ring, M, witness) else None
    n = len(M)
    I = identity(ring, n)
    if M == I:
        return I
    N = mat_sub(ring, I, M)  # M = I - N
    k = nilpotency_order(ring, N, bound)
    if k is not None:
        acc, P = I, N
        for _ in range(k - 1):
            acc = mat_add(ring, acc, P)
            P = mat_mul(ring, P, N)
        return acc
    if ring.is_commutative:
        d = det(ring, M)
        d_inv = ring.try_inverse(d)
        if d_inv is not None:
            W = left_scale(ring, d_inv, adjugate(ring, M))
            if verify_inverse(ring, M, W):
                return W
    return None


def require_inverse(ring, M, witness=None, bound=NILPOTENCY_BOUND):
    W = try_inverse(ring, M, witness, bound)
    if W is None:
        raise NotInvertible("no two-sided inverse found for the given block")
    return W


def entries_in_ideal(ring, M, ideal):
    return all(ideal.contains(c) for row in M for c in row)


def mat_format(ring, M):
    return [[ring.format(c) for c in row] for row in M]


def mat_parse(ring, rows):
    return tuple(tuple(ring.parse(c) for c in row) for row in rows)
