"""Spreading graded elements along powers of a formal variable, the induced
specializations, the matrix-level dilation, and degree-zero congruence."""

from __future__ import annotations

from .errors import DegreeError
from .gq import gq_member
from .rings import PolynomialRing


def spread(gring, b):
    """The graded element as a polynomial over the graded ring: the degree-d
    component becomes the coefficient of X**d.  A ring homomorphism."""
    poly = PolynomialRing(gring)
    coeffs = [gring.component_of(b, d) for d in range(gring.top + 1)]
    return poly._norm(coeffs)


def dilate(gring, b, a):
    """Evaluate the spread polynomial at a degree-zero element: each
    component is scaled by the matching power of a."""
    if not gring.is_homogeneous(a, 0):
        raise DegreeError("dilation point must be homogeneous of degree zero")
    comp = gring.component
    a0 = gring.degree_zero(a)
    out = []
    p = comp.one()
    for d in range(gring.top + 1):
        out.append(comp.mul(b[d], p))
        p = comp.mul(p, a0)
    return tuple(out)


def degree_zero_part(gring, b):
    """The degree-zero component as a graded element; equals dilate(b, 0)."""
    return gring._embed(gring.degree_zero(b), 0)


def dilate_matrix(gring, M, a):
    """Entrywise dilation; a group homomorphism preserving the form when the
    distinguished unit is degree-zero (it always is here)."""
    return tuple(tuple(dilate(gring, c, a) for c in row) for row in M)


def identity_mod_positive(gring, M):
    """True iff the degree-zero part of M is the identity, equivalently the
    dilation of M at zero is the identity."""
    comp = gring.component
    o, z = comp.one(), comp.zero()
    n = len(M)
    for i in range(n):
        for j in range(n):
            want = o if i == j else z
            if gring.degree_zero(M[i][j]) != want:
                return False
    return True


def matrix_degree_zero(gring, M):
    """Entrywise degree-zero parts (the matrix dilated at zero)."""
    return tuple(tuple(degree_zero_part(gring, c) for c in row) for row in M)


def dilation_preserves_membership(gring, M, a):
    return gq_member(gring, dilate_matrix(gring, M, a))
