"""Excision-ring and double-ring machinery: the folding map, constructive
lifting of relative certificate words, the ring isomorphism between the two
constructions, and the section/projection pair of the relative sequence."""

from __future__ import annotations

from .errors import MalformedWord, NotCongruent
from .gq import ElemGen, RelGen, Word, rel_congruent


def excision_mul(ring, x, y):
    """(r,i)(s,j) = (rs, rj+is+ij); delegates to the ring but keeps the
    operation available under its contract name."""
    return ring.mul(x, y)


def fold(ring, x):
    """(r, i) -> r + i, a surjective ring homomorphism onto the base."""
    return ring.base.add(x[0], x[1])


def fold_matrix(ring, M):
    return tuple(tuple(fold(ring, c) for c in row) for row in M)


def lift_relative_word(exc_ring, w):
    """Lift a relative word: conjugator parameters x become (x, 0) and core
    parameters a become (0, a); folding the evaluation returns the original
    evaluation exactly."""
    base = exc_ring.base
    z = base.zero()
    factors = []
    for g in w.factors:
        if not isinstance(g, RelGen):
            raise MalformedWord("only relative generators can be lifted")
        if not all(isinstance(c, ElemGen) for c in g.conjugator):
            raise MalformedWord("lifting needs elementary conjugator factors")
        conj = tuple(ElemGen(c.family, c.i, c.j, (c.a, z)) for c in g.conjugator)
        core = ElemGen(g.core.family, g.core.i, g.core.j, (z, g.core.a))
        factors.append(RelGen(conj, core))
    return Word(tuple(factors))


def double_ring_ops(ring, x, y):
    """Componentwise product in the double ring (constraint preserved)."""
    return ring.mul(x, y)


def double_iso_f(dring, x):
    """(a, b) -> (a, b - a): double ring to excision ring."""
    a, b = x
    return (a, dring.base.sub(b, a))


def double_iso_g(exc_or_dring, x):
    """(a, i) -> (a, a + i): excision ring to double ring."""
    a, i = x
    base = exc_or_dring.base
    return (a, base.add(a, i))


def seq_i(dring, M, ideal=None):
    """Entrywise (m_kl, delta_kl); requires congruence to I modulo J so every
    pair satisfies the double-ring constraint."""
    ideal = ideal or dring.ideal
    base = dring.base
    if not rel_congruent(base, M, ideal):
        raise NotCongruent("matrix is not congruent to the identity modulo the ideal")
    n = len(M)
    o, z = base.one(), base.zero()
    return tuple(
        tuple((M[k][l], o if k == l else z) for l in range(n)) for k in range(n)
    )


def seq_p2(dring, M):
    """Second components; a group homomorphism onto matrices over the base."""
    return tuple(tuple(c[1] for c in row) for row in M)


class _RelativeLevel:
    """The set of pairs (0, j) inside the excision ring, exposed with the
    membership/sampling surface relative evaluation needs."""

    def __init__(self, exc_ring):
        self.ring = exc_ring
        self.generators = tuple(
            (exc_ring.base.zero(), g) for g in exc_ring.ideal.generators
        )

    def contains(self, x):
        return x[0] == self.ring.base.zero() and self.ring.ideal.contains(x[1])

    def sample(self, rng):
        return (self.ring.base.zero(), self.ring.ideal.sample(rng))


def relative_level(exc_ring):
    return _RelativeLevel(exc_ring)


def integral_pair_identity(exc_ring, i):
    """(0,i)**2 - (i,0)(0,i) over the excision ring (zero for every i in J)."""
    x = (exc_ring.base.zero(), i)
    y = (i, exc_ring.base.zero())
    return exc_ring.sub(exc_ring.mul(x, x), exc_ring.mul(y, x))
