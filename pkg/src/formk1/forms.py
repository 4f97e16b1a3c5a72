"""Form parameters: the additive subgroups between {a - lam*conj(a)} and
{a : a = -lam*conj(a)}, with extensions to R[X], the excision ring, and the
relative double ring."""

from __future__ import annotations

import random

from .errors import Undecidable
from .rings import (
    ENUM_CAP,
    DoubleRing,
    ExcisionRing,
    GradedRing,
    Integers,
    PolynomialRing,
    Report,
    TruncatedPolynomialRing,
)

_COMPONENTWISE = (PolynomialRing, TruncatedPolynomialRing, GradedRing)


def _max_contains(ring, x):
    return x == ring.neg(ring.mul(ring.lam, ring.conj(x)))


def _min_witness(ring, a):
    return ring.sub(a, ring.mul(ring.lam, ring.conj(a)))


class FormParameter:
    """Decidable membership predicate (plus an element list for finite rings)."""

    def __init__(self, ring, mode, contains, sample, elements=None, base=None):
        self.ring = ring
        self.mode = mode
        self._contains = contains
        self._sample = sample
        self._elements = elements
        self.base = base

    def contains(self, x):
        return self._contains(x)

    def sample(self, rng):
        return self._sample(rng)

    def elements(self):
        if self._elements is None:
            raise Undecidable(f"no element enumeration for mode {self.mode!r}")
        return self._elements()

    def bar(self):
        """The conjugate parameter {conj(a) : a in Lambda}."""
        ring = self.ring
        els = None
        if self._elements is not None:
            els = lambda: sorted({ring.conj(a) for a in self.elements()})
        return FormParameter(
            ring,
            "bar",
            lambda x: self.contains(ring.conj(x)),
            lambda rng: ring.conj(self.sample(rng)),
            els,
            base=self,
        )

    def to_json(self):
        if self.mode in ("min", "max"):
            return {"mode": self.mode}
        if self._elements is not None:
            return {
                "mode": "explicit",
                "elements": [self.ring.format(a) for a in self.elements()],
            }
        return {"mode": self.mode}

    def __repr__(self):
        return f"<form parameter {self.mode} over {self.ring.kind}>"


def _finite_filter(ring, pred):
    n = ring.order()
    if n is None or n > ENUM_CAP:
        return None
    cache = []

    def elements():
        if not cache:
            cache.append(sorted(x for x in ring.elements() if pred(x)))
        return list(cache[0])

    return elements


def lambda_max(ring):
    """{a : a = -lam * conj(a)} with a structural sampler per ring kind."""
    pred = lambda x: _max_contains(ring, x)
    els = _finite_filter(ring, pred)

    def sample(rng):
        if els is not None:
            pool = els()
            return pool[rng.randrange(len(pool))]
        return _max_sample_structural(ring, rng)

    return FormParameter(ring, "max", pred, sample, els)


def _max_sample_structural(ring, rng):
    if isinstance(ring, Integers):
        trivial_minus = ring.lam == -1
        return rng.randint(-9, 9) if trivial_minus else 0
    if isinstance(ring, _COMPONENTWISE):
        base_param = lambda_max(_component_ring(ring))
        return _lift_componentwise(ring, base_param, rng)
    # fall back to the always-valid element 0
    probe = ring.sample(rng)
    return probe if _max_contains(ring, probe) else ring.zero()


def _component_ring(ring):
    return ring.component if isinstance(ring, GradedRing) else ring.base


def _lift_componentwise(ring, base_param, rng):
    if isinstance(ring, PolynomialRing):
        deg = rng.randint(0, 4)
        return ring._norm([base_param.sample(rng) for _ in range(deg + 1)])
    if isinstance(ring, TruncatedPolynomialRing):
        return tuple(base_param.sample(rng) for _ in range(ring.t + 1))
    if isinstance(ring, GradedRing):
        lim = max(1, ring.top // 3)
        z = ring.component.zero()
        out = [z] * (ring.top + 1)
        for d in range(lim + 1):
            out[d] = base_param.sample(rng)
        return tuple(out)
    raise Undecidable(f"no componentwise lift for {ring.kind}")


def lambda_min(ring):
    """{a - lam*conj(a) : a in R}; sampling is always possible, membership
    uses per-kind normal forms (or enumeration for finite rings)."""

    def sample(rng):
        return _min_witness(ring, ring.sample(rng))

    pred = _min_contains_fn(ring)
    els = None
    n = ring.order()
    if n is not None and n <= ENUM_CAP:
        cache = []

        def elements():
            if not cache:
                cache.append(sorted({_min_witness(ring, a) for a in ring.elements()}))
            return list(cache[0])

        els = elements
        if pred is None:
            pred = lambda x: x in set(els())
    if pred is None:
        raise Undecidable(f"no minimal-parameter decision procedure for {ring.kind}")
    return FormParameter(ring, "min", pred, sample, els)


def _min_contains_fn(ring):
    if isinstance(ring, Integers):
        if ring.lam == 1:
            return lambda x: x == 0
        if ring.lam == -1:
            return lambda x: x % 2 == 0
        return None
    if isinstance(ring, _COMPONENTWISE):
        try:
            base_min = lambda_min(_component_ring(ring))
        except Undecidable:
            return None
        return lambda x: all(base_min.contains(c) for c in x)
    n = ring.order()
    if n is not None and n <= ENUM_CAP:
        return None  # enumeration fills this in
    return None


def explicit_param(ring, elements):
    els = sorted(set(elements))
    members = set(els)
    return FormParameter(
        ring,
        "explicit",
        lambda x: x in members,
        lambda rng: els[rng.randrange(len(els))],
        lambda: list(els),
    )


def form_param_extend_poly(fp, poly_ring=None):
    """Lambda[X]: polynomials with every coefficient in Lambda."""
    ring = poly_ring or PolynomialRing(fp.ring)

    def contains(x):
        return all(fp.contains(c) for c in x)

    def sample(rng):
        deg = rng.randint(0, 4)
        return ring._norm([fp.sample(rng) for _ in range(deg + 1)])

    return FormParameter(ring, "poly", contains, sample, base=fp)


def gamma_plus(fp, ideal, exc_ring=None):
    """(Lambda + J) intersected with the maximal parameter of the excision ring."""
    ring = exc_ring or ExcisionRing(fp.ring, ideal)

    def contains(x):
        a, i = x
        return fp.contains(a) and ideal.contains(i) and _max_contains(ring, x)

    els = _finite_filter(ring, contains)

    def sample(rng):
        if els is not None:
            pool = els()
            return pool[rng.randrange(len(pool))]
        for _ in range(32):
            x = (fp.sample(rng), ideal.sample(rng))
            if _max_contains(ring, x):
                return x
        return (fp.sample(rng), fp.ring.zero())

    return FormParameter(ring, "excision", contains, sample, els, base=fp)


def lambda_prime(fp, ideal, dring=None):
    """Pairs from Lambda x Lambda whose difference lies in J."""
    ring = dring or DoubleRing(fp.ring, ideal)

    def contains(x):
        a, b = x
        return fp.contains(a) and fp.contains(b) and ideal.contains(fp.ring.sub(a, b))

    els = _finite_filter(ring, contains)

    def sample(rng):
        if els is not None:
            pool = els()
            return pool[rng.randrange(len(pool))]
        for _ in range(64):
            a = fp.sample(rng)
            b = fp.ring.sub(a, ideal.sample(rng))
            if fp.contains(b):
                return (a, b)
        a = fp.sample(rng)
        return (a, a)

    return FormParameter(ring, "double", contains, sample, els, base=fp)


def form_param_validate(fp, sample_count=200, rng=None):
    """Check the subgroup property, both inclusions, and conjugation closure.

    Exhaustive when the ring (and parameter) are small enough to enumerate,
    sampled otherwise; failures come back as report entries with witnesses.
    """
    rng = rng or random.Random(0)
    ring = fp.ring
    f = ring.format
    report = Report()

    n = ring.order()
    exhaustive = n is not None and n <= 512
    ring_pool = list(ring.elements()) if exhaustive else [
        ring.sample(rng) for _ in range(sample_count)
    ]
    try:
        lam_pool = fp.elements()
        lam_exhaustive = True
    except Undecidable:
        lam_pool = [fp.sample(rng) for _ in range(sample_count)]
        lam_exhaustive = False

    report.add("zero-member", fp.contains(ring.zero()), 1,
               None if fp.contains(ring.zero()) else "0 not in the parameter")

    witness = None
    pairs = 0
    for v in lam_pool:
        for w in lam_pool if lam_exhaustive else [fp.sample(rng) for _ in range(4)]:
            pairs += 1
            if not fp.contains(ring.add(v, w)):
                witness = f"{f(v)}+{f(w)} not a member"
                break
            if pairs >= sample_count and not lam_exhaustive:
                break
        if witness or (pairs >= sample_count and not lam_exhaustive):
            break
    report.add("additive-closure", witness is None, pairs, witness)

    witness = None
    for v in lam_pool:
        if not fp.contains(ring.neg(v)):
            witness = f"-{f(v)} not a member"
            break
    report.add("negation-closure", witness is None, len(lam_pool), witness)

    witness = None
    for a in ring_pool:
        w = _min_witness(ring, a)
        if not fp.contains(w):
            witness = f"{f(a)} gives minimal element {f(w)} outside the parameter"
            break
    report.add("contains-minimal", witness is None, len(ring_pool), witness)

    witness = None
    for v in lam_pool:
        if not _max_contains(ring, v):
            witness = f"{f(v)} violates v = -lambda*conj(v)"
            break
    report.add("inside-maximal", witness is None, len(lam_pool), witness)

    witness = None
    cases = 0
    for x in ring_pool:
        for v in lam_pool if lam_exhaustive and len(lam_pool) <= 64 else [
            fp.sample(rng) for _ in range(2)
        ]:
            cases += 1
            y = ring.mul(ring.conj(x), ring.mul(v, x))
            if not fp.contains(y):
                witness = f"conj({f(x)})*{f(v)}*{f(x)} = {f(y)} escapes"
                break
        if witness:
            break
    report.add("conjugation-closure", witness is None, cases, witness)
    return report
