"""JSON wire formats: ring descriptors, form parameters, ideals, matrices,
words, normal-form data, and graded elements.  Elements travel as canonical
strings produced by the owning ring."""

from __future__ import annotations

import re

from . import matrices as mx
from .errors import ParseError
from .forms import explicit_param, lambda_max, lambda_min
from .gq import BlockGen, ElemGen, RelGen, Word
from .reduction import KopeikoData
from .rings import (
    DoubleRing,
    ExcisionRing,
    GaussianModular,
    GradedRing,
    Ideal,
    Integers,
    MatrixRing,
    ModularInt,
    PolynomialRing,
    TruncatedPolynomialRing,
)

_SHORTHAND = re.compile(r"^Z(?:/(\d+))?$")
_SHORTHAND_GAUSS = re.compile(r"^Z\[i\]/(\d+)$")


def ring_from_json(obj, lam=None):
    """Build a ring from a descriptor dict or a shorthand string ("Z",
    "Z/4", "Z[i]/5").  ``lam`` (a canonical string) overrides the
    descriptor's distinguished element."""
    if isinstance(obj, str):
        m = _SHORTHAND.match(obj.strip())
        if m:
            ring = ModularInt(int(m.group(1))) if m.group(1) else Integers()
            if lam is not None:
                ring.lam = ring.parse(lam)
            return ring
        m = _SHORTHAND_GAUSS.match(obj.strip())
        if m:
            ring = GaussianModular(int(m.group(1)))
            if lam is not None:
                ring.lam = ring.parse(lam)
            return ring
        raise ParseError(f"unknown ring shorthand {obj!r}")
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ParseError("ring descriptor must be a dict with a 'kind'")
    kind = obj["kind"]
    if kind == "Integers":
        ring = Integers()
    elif kind == "ModularInt":
        ring = ModularInt(int(obj["m"]))
    elif kind == "GaussianModular":
        ring = GaussianModular(int(obj["m"]))
    elif kind == "Polynomial":
        ring = PolynomialRing(ring_from_json(obj["base"]))
    elif kind == "TruncatedPolynomial":
        ring = TruncatedPolynomialRing(ring_from_json(obj["base"]), int(obj["t"]))
    elif kind == "Excision":
        base = ring_from_json(obj["base"])
        ring = ExcisionRing(base, ideal_from_json(base, obj.get("idealGens", [])))
    elif kind == "Double":
        base = ring_from_json(obj["base"])
        ring = DoubleRing(base, ideal_from_json(base, obj.get("idealGens", [])))
    elif kind == "Graded":
        comp = ring_from_json(obj.get("componentRing") or obj["base"])
        ring = GradedRing(comp, int(obj["topDegree"]))
    elif kind == "Matrix":
        ring = MatrixRing(ring_from_json(obj["base"]), int(obj["size"]))
    else:
        raise ParseError(f"unknown ring kind {kind!r}")
    inv = obj.get("involution")
    if inv is not None and inv != ring.involution_name:
        raise ParseError(
            f"kind {kind} carries the {ring.involution_name!r} involution, not {inv!r}"
        )
    lam_str = lam if lam is not None else obj.get("lambda")
    if lam_str is not None:
        ring.lam = ring.parse(str(lam_str))
    return ring


def ring_to_json(ring):
    return ring.describe()


def ideal_from_json(ring, obj):
    if isinstance(obj, dict):
        gens = obj.get("generators", [])
    else:
        gens = obj
    return Ideal(ring, [ring.parse(str(g)) for g in gens])


def form_from_json(ring, obj):
    if obj is None:
        return lambda_max(ring)
    if isinstance(obj, str):
        obj = {"mode": obj}
    mode = obj.get("mode", "max")
    if mode == "max":
        return lambda_max(ring)
    if mode == "min":
        return lambda_min(ring)
    if mode == "explicit":
        return explicit_param(ring, [ring.parse(s) for s in obj["elements"]])
    raise ParseError(f"unknown form parameter mode {mode!r}")


def form_to_json(fp):
    return fp.to_json()


def matrix_from_json(ring, obj):
    if isinstance(obj, list):
        rows = obj
    elif isinstance(obj, dict) and "entries" in obj:
        rows = obj["entries"]
        if "n" in obj and len(rows) != 2 * int(obj["n"]):
            raise ParseError("matrix 'n' does not match the number of rows")
    else:
        raise ParseError("matrix payload must be a row list or {'entries': ...}")
    if any(len(r) != len(rows) for r in rows):
        raise ParseError("matrix must be square")
    return mx.mat_parse(ring, rows)


def matrix_to_json(ring, M, half_rank=None):
    out = {"entries": mx.mat_format(ring, M)}
    if half_rank is not None:
        out["n"] = half_rank
    elif len(M) % 2 == 0:
        out["n"] = len(M) // 2
    return out


def _gen_from_json(ring, obj):
    if not isinstance(obj, dict):
        raise ParseError("word factors must be objects with a 'family'")
    fam = obj.get("family")
    if fam in ("QE", "QR", "QL"):
        return ElemGen(fam, int(obj["i"]), int(obj["j"]), ring.parse(obj["a"]))
    if fam == "REL":
        conj = tuple(_gen_from_json(ring, g) for g in obj.get("conjugator", []))
        core = _gen_from_json(ring, obj["core"])
        if not isinstance(core, ElemGen):
            raise ParseError("relative core must be an elementary generator")
        return RelGen(conj, core)
    if fam in ("H", "T12", "T21"):
        block = mx.mat_parse(ring, obj["block"])
        inverse = None
        if fam == "H":
            if "inverse" not in obj:
                raise ParseError("hyperbolic factors carry an 'inverse' block")
            inverse = mx.mat_parse(ring, obj["inverse"])
        return BlockGen(fam, block, inverse)
    raise ParseError(f"unknown word factor family {fam!r}")


def _gen_to_json(ring, g):
    if isinstance(g, ElemGen):
        return {"family": g.family, "i": g.i, "j": g.j, "a": ring.format(g.a)}
    if isinstance(g, RelGen):
        return {
            "family": "REL",
            "conjugator": [_gen_to_json(ring, c) for c in g.conjugator],
            "core": _gen_to_json(ring, g.core),
        }
    if isinstance(g, BlockGen):
        out = {"family": g.kind, "block": mx.mat_format(ring, g.block)}
        if g.inverse is not None:
            out["inverse"] = mx.mat_format(ring, g.inverse)
        return out
    raise ParseError(f"unknown word factor {g!r}")


def word_from_json(ring, obj):
    if isinstance(obj, dict) and "factors" in obj:
        factors = obj["factors"]
    elif isinstance(obj, list):
        factors = obj
    else:
        raise ParseError("word payload must be a factor list or {'factors': ...}")
    return Word(tuple(_gen_from_json(ring, g) for g in factors))


def word_to_json(ring, w):
    return {"factors": [_gen_to_json(ring, g) for g in w.factors]}


def kopeiko_from_json(ring, obj):
    if not isinstance(obj, dict) or not all(k in obj for k in ("a", "b", "c", "n")):
        raise ParseError("normal-form payload needs keys a, b, c, n")
    r = int(obj.get("r", len(obj["a"])))
    a = mx.mat_parse(ring, obj["a"])
    b = mx.mat_parse(ring, obj["b"])
    c = mx.mat_parse(ring, obj["c"])
    for M in (a, b, c):
        if len(M) != r or any(len(row) != r for row in M):
            raise ParseError("normal-form blocks must all be r x r")
    return KopeikoData(a, b, c, int(obj["n"]))


def kopeiko_to_json(ring, data):
    return {
        "r": len(data.a),
        "n": data.n,
        "a": mx.mat_format(ring, data.a),
        "b": mx.mat_format(ring, data.b),
        "c": mx.mat_format(ring, data.c),
    }


def reduction_to_json(ring, res):
    return {
        "hyperbolicPart": mx.mat_format(ring, res.hyperbolic_block),
        "hyperbolicPartInverse": mx.mat_format(ring, res.hyperbolic_block_inverse),
        "certificate": word_to_json(ring, res.certificate),
    }


def graded_from_json(gring, obj):
    if isinstance(obj, str):
        return gring.parse(obj)
    comps = obj["components"]
    z = gring.component.zero()
    out = [z] * (gring.top + 1)
    for key, val in comps.items():
        d = int(key)
        if d > gring.top:
            raise ParseError(f"degree {d} exceeds top degree {gring.top}")
        out[d] = gring.component.parse(val)
    return tuple(out)


def graded_to_json(gring, x):
    comp = gring.component
    z = comp.zero()
    return {
        "components": {str(d): comp.format(c) for d, c in enumerate(x) if c != z}
    }
