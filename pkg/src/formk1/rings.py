"""Exact involutive rings with a distinguished central unit.

Every element is plain immutable data (ints, tuples) in a canonical form, so
``==`` is exact equality.  Operations live on the ring object, which also
carries the involution and the distinguished element ``lam`` with
lam * conj(lam) == 1.  No floating point appears anywhere.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field

from .errors import (
    ConstraintViolated,
    DegreeError,
    NotAUnit,
    ParseError,
    Undecidable,
)

# Enumerations larger than this are refused (callers fall back to sampling).
ENUM_CAP = 8192
# Default bound for nilpotency searches (powers computed before giving up).
NILPOTENCY_BOUND = 64


@dataclass
class Check:
    """Outcome of one verified property, with a counterexample if it failed."""

    name: str
    passed: bool
    cases: int
    witness: str | None = None

    def to_json(self):
        out = {"name": self.name, "passed": self.passed, "cases": self.cases}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Report:
    checks: list = field(default_factory=list)

    @property
    def ok(self):
        return all(c.passed for c in self.checks)

    def add(self, name, passed, cases, witness=None):
        self.checks.append(Check(name, passed, cases, witness))

    def to_json(self):
        return {"ok": self.ok, "checks": [c.to_json() for c in self.checks]}


class Ring:
    """Base class; subclasses fix the element encoding and arithmetic."""

    kind = "?"
    is_commutative = True
    involution_name = "trivial"

    def __init__(self):
        self.lam = self.one()

    # -- arithmetic ---------------------------------------------------------
    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def add(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise NotImplementedError

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        raise NotImplementedError

    def conj(self, x):
        """The involution."""
        raise NotImplementedError

    def lam_conj(self):
        return self.conj(self.lam)

    def from_int(self, k):
        one = self.one()
        neg = k < 0
        k = abs(k)
        acc, base = self.zero(), one
        while k:
            if k & 1:
                acc = self.add(acc, base)
            base = self.add(base, base)
            k >>= 1
        return self.neg(acc) if neg else acc

    # -- structure ----------------------------------------------------------
    def order(self):
        """Number of elements, or None when infinite."""
        return None

    def elements(self):
        """Iterate all elements (finite rings only)."""
        raise Undecidable(f"{self.kind} is not enumerable")

    def sample(self, rng):
        raise NotImplementedError

    def try_inverse(self, x):
        """Two-sided inverse of x, or None if not found."""
        n = self.order()
        if n is not None and n <= ENUM_CAP:
            one = self.one()
            for y in self.elements():
                if self.mul(x, y) == one and self.mul(y, x) == one:
                    return y
            return None
        return None

    def is_central(self, x):
        return True if self.is_commutative else None

    def nilpotency_order(self, x, bound=NILPOTENCY_BOUND):
        """Smallest k <= bound with x**k == 0, or None."""
        zero = self.zero()
        p = x
        for k in range(1, bound + 1):
            if p == zero:
                return k
            p = self.mul(p, x)
        return None

    # -- strings / descriptors ----------------------------------------------
    def format(self, x):
        raise NotImplementedError

    def parse(self, s):
        raise NotImplementedError

    def describe(self):
        """JSON-able descriptor (inverse of serialize.ring_from_json)."""
        raise NotImplementedError

    def descriptor_key(self):
        import json

        return json.dumps(self.describe(), sort_keys=True)

    def __eq__(self, other):
        return isinstance(other, Ring) and self.descriptor_key() == other.descriptor_key()

    def __hash__(self):
        return hash(self.descriptor_key())

    def __repr__(self):
        return f"<ring {self.descriptor_key()}>"


class Integers(Ring):
    kind = "Integers"

    def __init__(self, lam=1):
        self.lam = int(lam)

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def conj(self, x):
        return x

    def from_int(self, k):
        return int(k)

    def sample(self, rng):
        return rng.randint(-9, 9)

    def try_inverse(self, x):
        return x if x in (1, -1) else None

    def format(self, x):
        return str(x)

    def parse(self, s):
        try:
            return int(s.strip())
        except ValueError:
            raise ParseError(f"not an integer: {s!r}")

    def describe(self):
        return {"kind": "Integers", "involution": "trivial", "lambda": str(self.lam)}


class ModularInt(Ring):
    kind = "ModularInt"

    def __init__(self, m, lam=1):
        if m < 2:
            raise ParseError("modulus must be >= 2")
        self.m = m
        self.lam = int(lam) % m

    def zero(self):
        return 0

    def one(self):
        return 1 % self.m

    def add(self, x, y):
        return (x + y) % self.m

    def neg(self, x):
        return (-x) % self.m

    def mul(self, x, y):
        return (x * y) % self.m

    def conj(self, x):
        return x

    def from_int(self, k):
        return k % self.m

    def order(self):
        return self.m

    def elements(self):
        return iter(range(self.m))

    def sample(self, rng):
        return rng.randrange(self.m)

    def try_inverse(self, x):
        if math.gcd(x, self.m) != 1:
            return None
        return pow(x, -1, self.m)

    def format(self, x):
        return str(x)

    def parse(self, s):
        try:
            return int(s.strip()) % self.m
        except ValueError:
            raise ParseError(f"not an integer: {s!r}")

    def describe(self):
        return {
            "kind": "ModularInt",
            "m": self.m,
            "involution": "trivial",
            "lambda": str(self.lam),
        }


_GAUSS_RE = re.compile(r"^(?:([+-]?\d+)(?=[+-]))?([+-]?\d*)i$")


class GaussianModular(Ring):
    """(Z/m)[i] with conjugation i -> -i.  Elements are (re, im) pairs."""

    kind = "GaussianModular"
    involution_name = "conjugation"

    def __init__(self, m, lam=1):
        if m < 2:
            raise ParseError("modulus must be >= 2")
        self.m = m
        self.lam = self.parse(str(lam)) if isinstance(lam, str) else self._norm(lam)

    def _norm(self, x):
        if isinstance(x, int):
            return (x % self.m, 0)
        a, b = x
        return (a % self.m, b % self.m)

    def zero(self):
        return (0, 0)

    def one(self):
        return (1 % self.m, 0)

    def add(self, x, y):
        return ((x[0] + y[0]) % self.m, (x[1] + y[1]) % self.m)

    def neg(self, x):
        return ((-x[0]) % self.m, (-x[1]) % self.m)

    def mul(self, x, y):
        a, b = x
        c, d = y
        return ((a * c - b * d) % self.m, (a * d + b * c) % self.m)

    def conj(self, x):
        return (x[0], (-x[1]) % self.m)

    def from_int(self, k):
        return (k % self.m, 0)

    def order(self):
        return self.m * self.m

    def elements(self):
        return ((a, b) for a in range(self.m) for b in range(self.m))

    def sample(self, rng):
        return (rng.randrange(self.m), rng.randrange(self.m))

    def format(self, x):
        a, b = x
        if b == 0:
            return str(a)
        im = "i" if b == 1 else f"{b}i"
        return im if a == 0 else f"{a}+{im}"

    def parse(self, s):
        s = s.replace(" ", "")
        if not s:
            raise ParseError("empty Gaussian integer")
        if "i" not in s:
            try:
                return (int(s) % self.m, 0)
            except ValueError:
                raise ParseError(f"bad Gaussian integer: {s!r}")
        m = _GAUSS_RE.match(s)
        if not m:
            raise ParseError(f"bad Gaussian integer: {s!r}")
        re_part = int(m.group(1)) if m.group(1) else 0
        im_raw = m.group(2)
        if im_raw in ("", "+"):
            im_part = 1
        elif im_raw == "-":
            im_part = -1
        else:
            im_part = int(im_raw)
        return (re_part % self.m, im_part % self.m)

    def describe(self):
        return {
            "kind": "GaussianModular",
            "m": self.m,
            "involution": "conjugation",
            "lambda": self.format(self.lam),
        }


def _strip_trailing_zeros(coeffs, zero):
    n = len(coeffs)
    while n and coeffs[n - 1] == zero:
        n -= 1
    return tuple(coeffs[:n])


def _split_terms(s):
    """Split at depth-0 '+'/'-' signs, keeping the sign with its term."""
    terms, depth, cur = [], 0, ""
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and cur not in ("", "+", "-"):
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    if cur:
        terms.append(cur)
    return terms


def _parse_poly_string(base, s, var):
    s = s.replace(" ", "")
    if not s:
        raise ParseError("empty polynomial")
    coeffs = {}
    for term in _split_terms(s):
        sign = 1
        if term.startswith("+"):
            term = term[1:]
        elif term.startswith("-"):
            sign, term = -1, term[1:]
        if var in term:
            head, _, tail = term.partition(var)
            deg = 1
            if tail:
                if not tail.startswith("^"):
                    raise ParseError(f"bad term near {var}{tail!r}")
                deg = int(tail[1:])
            if head == "":
                c = base.one()
            else:
                if head.startswith("(") and head.endswith(")"):
                    head = head[1:-1]
                c = base.parse(head)
        else:
            deg = 0
            if term.startswith("(") and term.endswith(")"):
                term = term[1:-1]
            c = base.parse(term)
        if sign < 0:
            c = base.neg(c)
        coeffs[deg] = base.add(coeffs.get(deg, base.zero()), c)
    top = max(coeffs) if coeffs else 0
    return [coeffs.get(d, base.zero()) for d in range(top + 1)]


def _format_poly(base, coeffs, var):
    zero = base.zero()
    one = base.one()
    parts = []
    for d, c in enumerate(coeffs):
        if c == zero:
            continue
        if d == 0:
            cs = base.format(c)
        else:
            v = var if d == 1 else f"{var}^{d}"
            if c == one:
                cs = v
            else:
                cstr = base.format(c)
                if cstr == "-1":
                    cs = "-" + v
                else:
                    if any(ch in cstr[1:] for ch in "+-"):
                        cstr = f"({cstr})"
                    cs = cstr + v
        parts.append(cs)
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


class PolynomialRing(Ring):
    """R[X] with involution applied coefficientwise (the variable is fixed)."""

    kind = "Polynomial"
    involution_name = "componentwise-extension"
    var = "X"

    def __init__(self, base):
        self.base = base
        self.is_commutative = base.is_commutative
        self.lam = self._embed(base.lam)

    def _embed(self, c):
        return () if c == self.base.zero() else (c,)

    def zero(self):
        return ()

    def one(self):
        return (self.base.one(),)

    def _norm(self, coeffs):
        return _strip_trailing_zeros(coeffs, self.base.zero())

    def add(self, x, y):
        b = self.base
        n = max(len(x), len(y))
        z = b.zero()
        return self._norm(
            [b.add(x[i] if i < len(x) else z, y[i] if i < len(y) else z) for i in range(n)]
        )

    def neg(self, x):
        return tuple(self.base.neg(c) for c in x)

    def mul(self, x, y):
        if not x or not y:
            return ()
        b = self.base
        z = b.zero()
        out = [z] * (len(x) + len(y) - 1)
        for i, xi in enumerate(x):
            if xi == z:
                continue
            for j, yj in enumerate(y):
                out[i + j] = b.add(out[i + j], b.mul(xi, yj))
        return self._norm(out)

    def conj(self, x):
        return tuple(self.base.conj(c) for c in x)

    def from_int(self, k):
        return self._embed(self.base.from_int(k))

    def coeff(self, x, d):
        return x[d] if d < len(x) else self.base.zero()

    def evaluate(self, x, at):
        """Evaluate at a base element (constant term for at == 0)."""
        b = self.base
        acc, p = b.zero(), b.one()
        for c in x:
            acc = b.add(acc, b.mul(c, p))
            p = b.mul(p, at)
        return acc

    def shift(self, x, k):
        """Multiply by X**k."""
        if not x:
            return ()
        return (self.base.zero(),) * k + tuple(x)

    def sample(self, rng, max_degree=4):
        deg = rng.randint(0, max_degree)
        return self._norm([self.base.sample(rng) for _ in range(deg + 1)])

    def try_inverse(self, x):
        # unit constant term plus nilpotent tail: geometric series terminates
        if not x:
            return None
        c0_inv = self.base.try_inverse(x[0])
        if c0_inv is None:
            return None
        c0i = self._embed(c0_inv)
        neg_w = self.neg(self.sub(self.mul(c0i, x), self.one()))
        acc, p = self.one(), neg_w
        for _ in range(NILPOTENCY_BOUND):
            if p == ():
                return self.mul(acc, c0i)
            acc = self.add(acc, p)
            p = self.mul(p, neg_w)
        return None

    def format(self, x):
        return _format_poly(self.base, x, self.var)

    def parse(self, s):
        return self._norm(_parse_poly_string(self.base, s, self.var))

    def describe(self):
        return {"kind": "Polynomial", "base": self.base.describe()}


class TruncatedPolynomialRing(Ring):
    """R[X]/(X**(t+1)); elements are coefficient tuples of length t+1."""

    kind = "TruncatedPolynomial"
    involution_name = "componentwise-extension"
    var = "X"

    def __init__(self, base, t):
        if t < 0:
            raise ParseError("truncation degree must be >= 0")
        self.base = base
        self.t = t
        self.is_commutative = base.is_commutative
        self.lam = self._embed(base.lam)

    def _embed(self, c):
        return (c,) + (self.base.zero(),) * self.t

    def zero(self):
        return (self.base.zero(),) * (self.t + 1)

    def one(self):
        return self._embed(self.base.one())

    def add(self, x, y):
        b = self.base
        return tuple(b.add(a, c) for a, c in zip(x, y))

    def neg(self, x):
        return tuple(self.base.neg(c) for c in x)

    def mul(self, x, y):
        b = self.base
        z = b.zero()
        out = [z] * (self.t + 1)
        for i, xi in enumerate(x):
            if xi == z:
                continue
            for j, yj in enumerate(y):
                if i + j > self.t:
                    break
                out[i + j] = b.add(out[i + j], b.mul(xi, yj))
        return tuple(out)

    def conj(self, x):
        return tuple(self.base.conj(c) for c in x)

    def from_int(self, k):
        return self._embed(self.base.from_int(k))

    def from_poly(self, coeffs):
        z = self.base.zero()
        c = list(coeffs[: self.t + 1])
        return tuple(c + [z] * (self.t + 1 - len(c)))

    def order(self):
        n = self.base.order()
        return None if n is None else n ** (self.t + 1)

    def elements(self):
        return (
            tuple(c) for c in itertools.product(list(self.base.elements()), repeat=self.t + 1)
        )

    def sample(self, rng):
        return tuple(self.base.sample(rng) for _ in range(self.t + 1))

    def power(self, x, k):
        acc, p = self.one(), x
        while k:
            if k & 1:
                acc = self.mul(acc, p)
            p = self.mul(p, p)
            k >>= 1
        return acc

    def try_inverse(self, x):
        try:
            return trunc_inverse(self, x)
        except NotAUnit:
            return None

    def format(self, x):
        return _format_poly(self.base, x, self.var)

    def parse(self, s):
        coeffs = _parse_poly_string(self.base, s, self.var)
        if len(coeffs) > self.t + 1:
            raise ParseError(f"degree exceeds truncation bound {self.t}")
        return self.from_poly(coeffs)

    def describe(self):
        return {"kind": "TruncatedPolynomial", "base": self.base.describe(), "t": self.t}


def trunc_inverse(ring, u):
    """Exact inverse of a unit in R_t = R[X]/(X**(t+1)).

    The constant term must be a unit of R; the tail is a multiple of X and
    therefore nilpotent, so the geometric series terminates.
    """
    b = ring.base
    c0_inv = b.try_inverse(u[0])
    if c0_inv is None:
        raise NotAUnit(f"constant term {b.format(u[0])} is not invertible")
    c0i = ring._embed(c0_inv)
    w = ring.sub(ring.mul(c0i, u), ring.one())
    neg_w = ring.neg(w)
    acc, p = ring.one(), neg_w
    for _ in range(ring.t + 1):
        if p == ring.zero():
            break
        acc = ring.add(acc, p)
        p = ring.mul(p, neg_w)
    return ring.mul(acc, c0i)


class Ideal:
    """Two-sided involution-invariant ideal given by generators."""

    def __init__(self, ring, generators):
        self.ring = ring
        self.generators = tuple(generators)
        self._cache = None
        self._gcd = None
        if isinstance(ring, Integers):
            g = 0
            for x in self.generators:
                g = math.gcd(g, abs(x))
            self._gcd = g
        elif isinstance(ring, (PolynomialRing, TruncatedPolynomialRing)):
            base = ring.base
            consts = []
            for g in self.generators:
                if any(i > 0 and c != base.zero() for i, c in enumerate(g)):
                    raise Undecidable("only constant-generated ideals of R[X] are supported")
                consts.append(g[0] if g else base.zero())
            self.base_ideal = Ideal(base, consts)

    def contains(self, x):
        r = self.ring
        if self._gcd is not None:
            return x == 0 if self._gcd == 0 else x % self._gcd == 0
        if isinstance(r, (PolynomialRing, TruncatedPolynomialRing)):
            return all(self.base_ideal.contains(c) for c in x)
        return x in self._element_set()

    def _element_set(self):
        if self._cache is not None:
            return self._cache
        r = self.ring
        n = r.order()
        if n is None or n > ENUM_CAP:
            raise Undecidable("ideal membership needs a finite enumerable ring here")
        els = list(r.elements())
        seeds = set()
        for g in self.generators:
            if r.is_commutative:
                seeds.update(r.mul(a, g) for a in els)
            else:
                seeds.update(r.mul(a, r.mul(g, b)) for a in els for b in els)
        seeds.add(r.zero())
        closed = set(seeds)
        frontier = set(seeds)
        while frontier:
            new = set()
            for a in frontier:
                for b in seeds:
                    c = r.add(a, b)
                    if c not in closed:
                        closed.add(c)
                        new.add(c)
            frontier = new
        self._cache = closed
        return closed

    def elements(self):
        if self._gcd is not None:
            raise Undecidable("ideal of Z is infinite")
        return sorted(self._element_set())

    def sample(self, rng):
        if self._gcd is not None:
            return self._gcd * rng.randint(-9, 9)
        if isinstance(self.ring, (PolynomialRing, TruncatedPolynomialRing)):
            base = self.ring.base
            deg = rng.randint(0, 3)
            coeffs = [self.base_ideal.sample(rng) for _ in range(deg + 1)]
            if isinstance(self.ring, TruncatedPolynomialRing):
                return self.ring.from_poly(coeffs)
            return self.ring._norm(coeffs)
        els = self.elements()
        return els[rng.randrange(len(els))]

    def involution_invariant(self):
        return all(self.contains(self.ring.conj(g)) for g in self.generators)

    def to_json(self):
        return {"generators": [self.ring.format(g) for g in self.generators]}


class ExcisionRing(Ring):
    """Pairs (r, i) with i in J; multiplication (r,i)(s,j) = (rs, rj+is+ij)."""

    kind = "Excision"
    involution_name = "componentwise-extension"

    def __init__(self, base, ideal):
        self.base = base
        self.ideal = ideal
        self.is_commutative = base.is_commutative
        self.lam = (base.lam, base.zero())

    def pair(self, r, i):
        if not self.ideal.contains(i):
            raise ConstraintViolated(f"second component {self.base.format(i)} is not in J")
        return (r, i)

    def zero(self):
        return (self.base.zero(), self.base.zero())

    def one(self):
        return (self.base.one(), self.base.zero())

    def add(self, x, y):
        b = self.base
        return (b.add(x[0], y[0]), b.add(x[1], y[1]))

    def neg(self, x):
        b = self.base
        return (b.neg(x[0]), b.neg(x[1]))

    def mul(self, x, y):
        b = self.base
        r, i = x
        s, j = y
        return (b.mul(r, s), b.add(b.add(b.mul(r, j), b.mul(i, s)), b.mul(i, j)))

    def conj(self, x):
        b = self.base
        return (b.conj(x[0]), b.conj(x[1]))

    def from_int(self, k):
        return (self.base.from_int(k), self.base.zero())

    def order(self):
        n = self.base.order()
        if n is None:
            return None
        try:
            return n * len(self.ideal.elements())
        except Undecidable:
            return None

    def elements(self):
        return ((r, i) for r in self.base.elements() for i in self.ideal.elements())

    def sample(self, rng):
        return (self.base.sample(rng), self.ideal.sample(rng))

    def format(self, x):
        return f"({self.base.format(x[0])},{self.base.format(x[1])})"

    def parse(self, s):
        r, i = _parse_pair(self.base, s, ",")
        return self.pair(r, i)

    def describe(self):
        return {
            "kind": "Excision",
            "base": self.base.describe(),
            "idealGens": [self.base.format(g) for g in self.ideal.generators],
        }


class DoubleRing(Ring):
    """Pairs (a, b) with a - b in J, componentwise operations."""

    kind = "Double"
    involution_name = "componentwise-extension"

    def __init__(self, base, ideal):
        self.base = base
        self.ideal = ideal
        self.is_commutative = base.is_commutative
        self.lam = (base.lam, base.lam)

    def pair(self, a, b):
        if not self.ideal.contains(self.base.sub(a, b)):
            raise ConstraintViolated(
                f"{self.base.format(a)} - {self.base.format(b)} is not in J"
            )
        return (a, b)

    def zero(self):
        z = self.base.zero()
        return (z, z)

    def one(self):
        o = self.base.one()
        return (o, o)

    def add(self, x, y):
        b = self.base
        return (b.add(x[0], y[0]), b.add(x[1], y[1]))

    def neg(self, x):
        b = self.base
        return (b.neg(x[0]), b.neg(x[1]))

    def mul(self, x, y):
        b = self.base
        return (b.mul(x[0], y[0]), b.mul(x[1], y[1]))

    def conj(self, x):
        b = self.base
        return (b.conj(x[0]), b.conj(x[1]))

    def from_int(self, k):
        c = self.base.from_int(k)
        return (c, c)

    def order(self):
        n = self.base.order()
        if n is None:
            return None
        try:
            return n * len(self.ideal.elements())
        except Undecidable:
            return None

    def elements(self):
        for a in self.base.elements():
            for j in self.ideal.elements():
                yield (a, self.base.sub(a, j))

    def sample(self, rng):
        a = self.base.sample(rng)
        return (a, self.base.sub(a, self.ideal.sample(rng)))

    def format(self, x):
        return f"({self.base.format(x[0])}|{self.base.format(x[1])})"

    def parse(self, s):
        a, b = _parse_pair(self.base, s, "|")
        return self.pair(a, b)

    def describe(self):
        return {
            "kind": "Double",
            "base": self.base.describe(),
            "idealGens": [self.base.format(g) for g in self.ideal.generators],
        }


def _parse_pair(base, s, sep):
    s = s.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ParseError(f"expected parenthesized pair, got {s!r}")
    body = s[1:-1]
    depth = 0
    for k, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == sep and depth == 0:
            return base.parse(body[:k]), base.parse(body[k + 1 :])
    raise ParseError(f"missing {sep!r} separator in {s!r}")


class GradedRing(Ring):
    """Component ring spread over degrees 0..top; degree overflow is an error.

    The concrete instance is R0[Y] truncated-by-contract: the degree-d slot
    holds the coefficient of Y**d, and products that would exceed the top
    degree raise instead of wrapping or truncating.
    """

    kind = "Graded"
    involution_name = "componentwise-extension"
    var = "Y"

    def __init__(self, component, top_degree):
        if top_degree < 1:
            raise ParseError("topDegree must be >= 1")
        self.component = component
        self.top = top_degree
        self.is_commutative = component.is_commutative
        self.lam = self._embed(component.lam, 0)

    def _embed(self, c, degree):
        z = self.component.zero()
        out = [z] * (self.top + 1)
        out[degree] = c
        return tuple(out)

    def zero(self):
        return (self.component.zero(),) * (self.top + 1)

    def one(self):
        return self._embed(self.component.one(), 0)

    def add(self, x, y):
        b = self.component
        return tuple(b.add(a, c) for a, c in zip(x, y))

    def neg(self, x):
        return tuple(self.component.neg(c) for c in x)

    def mul(self, x, y):
        b = self.component
        z = b.zero()
        out = [z] * (self.top + 1)
        for i, xi in enumerate(x):
            if xi == z:
                continue
            for j, yj in enumerate(y):
                if yj == z:
                    continue
                if i + j > self.top:
                    raise DegreeError(
                        f"product degree {i + j} exceeds top degree {self.top}"
                    )
                out[i + j] = b.add(out[i + j], b.mul(xi, yj))
        return tuple(out)

    def conj(self, x):
        return tuple(self.component.conj(c) for c in x)

    def from_int(self, k):
        return self._embed(self.component.from_int(k), 0)

    def degree_zero(self, x):
        return x[0]

    def component_of(self, x, d):
        """The homogeneous degree-d part, as a graded element."""
        return self._embed(x[d], d)

    def support(self, x):
        z = self.component.zero()
        return [d for d, c in enumerate(x) if c != z]

    def is_homogeneous(self, x, degree):
        z = self.component.zero()
        return all(c == z for d, c in enumerate(x) if d != degree)

    def order(self):
        n = self.component.order()
        return None if n is None else n ** (self.top + 1)

    def elements(self):
        return (
            tuple(c)
            for c in itertools.product(list(self.component.elements()), repeat=self.top + 1)
        )

    def sample(self, rng, max_degree=None):
        # bounded support keeps sampled products inside the hard top degree
        lim = max_degree if max_degree is not None else max(1, self.top // 3)
        z = self.component.zero()
        out = [z] * (self.top + 1)
        for d in range(min(lim, self.top) + 1):
            out[d] = self.component.sample(rng)
        return tuple(out)

    def format(self, x):
        return _format_poly(self.component, x, self.var)

    def parse(self, s):
        coeffs = _parse_poly_string(self.component, s, self.var)
        if len(coeffs) > self.top + 1:
            raise ParseError(f"degree exceeds top degree {self.top}")
        z = self.component.zero()
        return tuple(coeffs + [z] * (self.top + 1 - len(coeffs)))

    def describe(self):
        return {
            "kind": "Graded",
            "componentRing": self.component.describe(),
            "topDegree": self.top,
        }


class MatrixRing(Ring):
    """n x n matrices over a commutative base; * is the conjugate transpose."""

    kind = "Matrix"
    involution_name = "componentwise-extension"

    def __init__(self, base, size):
        if size < 1:
            raise ParseError("matrix size must be >= 1")
        self.base = base
        self.size = size
        self.is_commutative = size == 1 and base.is_commutative
        self.lam = self.scalar(base.lam)

    def scalar(self, c):
        z = self.base.zero()
        return tuple(
            tuple(c if i == j else z for j in range(self.size)) for i in range(self.size)
        )

    def zero(self):
        z = self.base.zero()
        return tuple((z,) * self.size for _ in range(self.size))

    def one(self):
        return self.scalar(self.base.one())

    def add(self, x, y):
        b = self.base
        return tuple(
            tuple(b.add(a, c) for a, c in zip(rx, ry)) for rx, ry in zip(x, y)
        )

    def neg(self, x):
        return tuple(tuple(self.base.neg(c) for c in row) for row in x)

    def mul(self, x, y):
        b = self.base
        n = self.size
        return tuple(
            tuple(
                _dot(b, [x[i][k] for k in range(n)], [y[k][j] for k in range(n)])
                for j in range(n)
            )
            for i in range(n)
        )

    def conj(self, x):
        b = self.base
        n = self.size
        return tuple(tuple(b.conj(x[j][i]) for j in range(n)) for i in range(n))

    def from_int(self, k):
        return self.scalar(self.base.from_int(k))

    def order(self):
        n = self.base.order()
        return None if n is None else n ** (self.size * self.size)

    def elements(self):
        els = list(self.base.elements())
        n = self.size
        for flat in itertools.product(els, repeat=n * n):
            yield tuple(tuple(flat[i * n + j] for j in range(n)) for i in range(n))

    def sample(self, rng):
        return tuple(
            tuple(self.base.sample(rng) for _ in range(self.size)) for _ in range(self.size)
        )

    def is_central(self, x):
        # commuting with every matrix unit pins down the center exactly
        b = self.base
        n = self.size
        z = b.zero()
        for i in range(n):
            for j in range(n):
                unit = tuple(
                    tuple(b.one() if (r, c) == (i, j) else z for c in range(n))
                    for r in range(n)
                )
                if self.mul(x, unit) != self.mul(unit, x):
                    return False
        return True

    def format(self, x):
        import json

        return json.dumps([[self.base.format(c) for c in row] for row in x])

    def parse(self, s):
        import json

        try:
            rows = json.loads(s)
        except json.JSONDecodeError as e:
            raise ParseError(f"bad matrix literal: {e}")
        if len(rows) != self.size or any(len(r) != self.size for r in rows):
            raise ParseError(f"expected a {self.size}x{self.size} matrix")
        return tuple(tuple(self.base.parse(c) for c in row) for row in rows)

    def describe(self):
        return {"kind": "Matrix", "base": self.base.describe(), "size": self.size}


def _dot(base, xs, ys):
    acc = base.zero()
    for a, c in zip(xs, ys):
        acc = base.add(acc, base.mul(a, c))
    return acc


def poly_extend(ring):
    """R[X] with the involution applied coefficientwise and the variable fixed."""
    return PolynomialRing(ring)


def ring_axiom_suite(ring, sample_count=200, rng=None):
    """Randomized (exhaustive for small rings) check of all ring axioms."""
    import random

    rng = rng or random.Random(0)
    n = ring.order()
    if n is not None and n <= 32:
        pool = list(ring.elements())
    else:
        pool = [ring.sample(rng) for _ in range(max(sample_count, 8))]
    pool = pool + [ring.zero(), ring.one(), ring.lam]

    def pick():
        return pool[rng.randrange(len(pool))]

    report = Report()
    f = ring.format

    def run(name, arity, pred, render):
        for _ in range(sample_count):
            args = tuple(pick() for _ in range(arity))
            try:
                if not pred(*args):
                    report.add(name, False, sample_count, render(*args))
                    return
            except DegreeError:
                continue
        report.add(name, True, sample_count)

    add, mul, neg, conj = ring.add, ring.mul, ring.neg, ring.conj
    zero, one, lam = ring.zero(), ring.one(), ring.lam
    run("add-associative", 3, lambda x, y, z: add(add(x, y), z) == add(x, add(y, z)),
        lambda x, y, z: f"({f(x)}+{f(y)})+{f(z)}")
    run("add-commutative", 2, lambda x, y: add(x, y) == add(y, x),
        lambda x, y: f"{f(x)}+{f(y)}")
    run("add-zero", 1, lambda x: add(x, zero) == x, f)
    run("add-negate", 1, lambda x: add(x, neg(x)) == zero, f)
    run("mul-associative", 3, lambda x, y, z: mul(mul(x, y), z) == mul(x, mul(y, z)),
        lambda x, y, z: f"({f(x)}*{f(y)})*{f(z)}")
    run("mul-one", 1, lambda x: mul(x, one) == x and mul(one, x) == x, f)
    run("distributive-left", 3,
        lambda x, y, z: mul(x, add(y, z)) == add(mul(x, y), mul(x, z)),
        lambda x, y, z: f"{f(x)}*({f(y)}+{f(z)})")
    run("distributive-right", 3,
        lambda x, y, z: mul(add(x, y), z) == add(mul(x, z), mul(y, z)),
        lambda x, y, z: f"({f(x)}+{f(y)})*{f(z)}")
    run("involution-additive", 2, lambda x, y: conj(add(x, y)) == add(conj(x), conj(y)),
        lambda x, y: f"conj({f(x)}+{f(y)})")
    run("involution-involutive", 1, lambda x: conj(conj(x)) == x, f)
    run("involution-antimultiplicative", 2,
        lambda x, y: conj(mul(x, y)) == mul(conj(y), conj(x)),
        lambda x, y: f"conj({f(x)}*{f(y)})")
    run("lambda-central", 1, lambda x: mul(lam, x) == mul(x, lam),
        lambda x: f"lambda*{f(x)}")
    lam_ok = mul(lam, conj(lam)) == one
    report.add(
        "lambda-unitary", lam_ok, 1,
        None if lam_ok else f"{f(lam)}*{f(conj(lam))}={f(mul(lam, conj(lam)))}",
    )
    return report
