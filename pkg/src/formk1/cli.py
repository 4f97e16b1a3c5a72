"""Command-line surface: every operation behind a subcommand with JSON in
and JSON out, plus verify-paper for the full suite run.

Exit codes: 0 success, 1 failed check or refused operation, 2 malformed
input.  Output is byte-identical for a fixed seed and input; --pretty
switches to human tables.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import serialize as ser
from .errors import FormK1Error, ParseError
from .excision import fold_matrix, relative_level
from .forms import form_param_validate, gamma_plus
from .gq import (
    ElemGen,
    elem_gen_eval,
    gq_member,
    is_lambda_quadratic,
    quadratic_conditions,
    word_eval,
)
from .graded import dilate, dilate_matrix
from .reduction import (
    kopeiko_extended_param,
    kopeiko_matrix,
    kopeiko_to_hyperbolic,
    kopeiko_validate,
    reduce_invertible_corner,
    reduce_lower,
    reduce_upper,
    torsion_descent,
    trunc_product_decomp,
    trunc_split,
)
from .rings import (
    ExcisionRing,
    GradedRing,
    PolynomialRing,
    TruncatedPolynomialRing,
    ring_axiom_suite,
)
from .serialize import ring_from_json
from .suites import DEFAULT_SEED, SUITES, run_suites


def _load(value):
    """Inline JSON, a file path containing JSON, or a literal string."""
    if value is None:
        return None
    text = value
    if not text.lstrip().startswith(("{", "[")) and os.path.isfile(text):
        with open(text, "r", encoding="utf-8") as fh:
            text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith(("{", "[")):
        try:
            return json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"bad JSON payload: {e}")
    return value


def _emit(payload, args, failed=False):
    if getattr(args, "pretty", False):
        text = _pretty(payload)
    else:
        text = json.dumps(payload, sort_keys=True, indent=2)
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return 1 if failed else 0


def _pretty(payload, indent=0):
    pad = "  " * indent
    if isinstance(payload, dict):
        lines = []
        for key in sorted(payload):
            val = payload[key]
            if isinstance(val, (dict, list)):
                lines.append(f"{pad}{key}:")
                lines.append(_pretty(val, indent + 1))
            else:
                lines.append(f"{pad}{key}: {val}")
        return "\n".join(lines)
    if isinstance(payload, list):
        return "\n".join(
            _pretty(v, indent) if isinstance(v, (dict, list)) else f"{pad}- {v}"
            for v in payload
        )
    return f"{pad}{payload}"


def _ring(args):
    obj = _load(args.ring)
    if obj is None:
        raise ParseError("--ring is required for this command")
    return ring_from_json(obj, lam=getattr(args, "lam", None))


def _form(args, ring):
    return ser.form_from_json(ring, _load(getattr(args, "form", None)))


def _ideal(args, ring):
    obj = _load(getattr(args, "ideal", None))
    if obj is None:
        raise ParseError("--ideal is required for this command")
    return ser.ideal_from_json(ring, obj)


def _matrix(args, ring):
    obj = _load(args.matrix)
    if obj is None:
        raise ParseError("--matrix is required for this command")
    return ser.matrix_from_json(ring, obj)


# -- command handlers ---------------------------------------------------------


def cmd_ring_check(args):
    ring = _ring(args)
    import random

    report = ring_axiom_suite(ring, args.samples, random.Random(args.seed))
    return _emit(report.to_json(), args, failed=not report.ok)


def cmd_form_validate(args):
    ring = _ring(args)
    fp = _form(args, ring)
    import random

    report = form_param_validate(fp, args.samples, random.Random(args.seed))
    return _emit(report.to_json(), args, failed=not report.ok)


def cmd_gq_member(args):
    ring = _ring(args)
    M = _matrix(args, ring)
    member = gq_member(ring, M)
    return _emit({"member": member}, args, failed=not member)


def cmd_gq_conditions(args):
    ring = _ring(args)
    fp = _form(args, ring)
    M = _matrix(args, ring)
    conds = quadratic_conditions(fp, M)
    return _emit(
        {"conditions": list(conds), "quadratic": all(conds)},
        args,
        failed=not all(conds),
    )


def cmd_gq_gen(args):
    ring = _ring(args)
    fp = _form(args, ring)
    gen = ElemGen(args.family, args.i, args.j, ring.parse(args.a))
    M = elem_gen_eval(fp, args.n, gen)
    return _emit(ser.matrix_to_json(ring, M, args.n), args)


def cmd_word_eval(args):
    ring = _ring(args)
    fp = _form(args, ring)
    w = ser.word_from_json(ring, _load(args.word))
    ideal = None
    if getattr(args, "ideal", None):
        ideal = _ideal(args, ring)
    M = word_eval(fp, args.n, w, ideal=ideal)
    out = ser.matrix_to_json(ring, M, args.n)
    out["member"] = gq_member(ring, M)
    return _emit(out, args)


def cmd_word_lift(args):
    from .excision import lift_relative_word

    ring = _ring(args)
    fp = _form(args, ring)
    ideal = _ideal(args, ring)
    w = ser.word_from_json(ring, _load(args.word))
    exc = ExcisionRing(ring, ideal)
    lifted = lift_relative_word(exc, w)
    gp = gamma_plus(fp, ideal, exc)
    up = word_eval(gp, args.n, lifted, ideal=relative_level(exc))
    down = word_eval(fp, args.n, w, ideal=ideal)
    matches = fold_matrix(exc, up) == down
    payload = {
        "ring": exc.describe(),
        "word": ser.word_to_json(exc, lifted),
        "foldMatches": matches,
    }
    return _emit(payload, args, failed=not matches)


def cmd_excision_roundtrip(args):
    from .suites import suite_excision

    res = suite_excision(args.seed)
    return _emit(res.to_json(), args, failed=not res.ok)


def _cmd_reduce(args, which):
    ring = _ring(args)
    fp = _form(args, ring)
    M = _matrix(args, ring)
    witness = None
    if getattr(args, "alpha_inverse", None):
        witness = ser.matrix_from_json(ring, _load(args.alpha_inverse))
    fn = {"upper": reduce_upper, "lower": reduce_lower, "corner": reduce_invertible_corner}[
        which
    ]
    res = fn(fp, M, witness)
    return _emit(ser.reduction_to_json(ring, res), args)


def cmd_kopeiko_validate(args):
    ring = _ring(args)
    fp = _form(args, ring)
    data = ser.kopeiko_from_json(ring, _load(args.data))
    from .errors import ConditionViolated

    try:
        kopeiko_validate(fp, data)
    except ConditionViolated as e:
        return _emit({"valid": False, "condition": e.index}, args, failed=True)
    return _emit({"valid": True}, args)


def cmd_kopeiko_build(args):
    ring = _ring(args)
    fp = _form(args, ring)
    data = ser.kopeiko_from_json(ring, _load(args.data))
    kopeiko_validate(fp, data)
    M = kopeiko_matrix(fp, data)
    poly = PolynomialRing(ring)
    out = ser.matrix_to_json(poly, M, len(data.a))
    out["quadratic"] = is_lambda_quadratic(kopeiko_extended_param(fp), M)
    return _emit(out, args, failed=not out["quadratic"])


def cmd_kopeiko_reduce(args):
    ring = _ring(args)
    fp = _form(args, ring)
    data = ser.kopeiko_from_json(ring, _load(args.data))
    res = kopeiko_to_hyperbolic(fp, data)
    poly = PolynomialRing(ring)
    return _emit(ser.reduction_to_json(poly, res), args)


def cmd_trunc_split(args):
    ring = _ring(args)
    poly = PolynomialRing(ring)
    P = poly.parse(args.p)
    c, Q = trunc_split(ring, P, args.r, args.t)
    return _emit({"constant": ring.format(c), "q": poly.format(Q)}, args)


def cmd_trunc_decomp(args):
    ring = _ring(args)
    poly = PolynomialRing(ring)
    P = poly.parse(args.p)
    coeffs = trunc_product_decomp(ring, P, args.t)
    return _emit({"a": [ring.format(c) for c in coeffs]}, args)


def cmd_trunc_descent(args):
    ring = _ring(args)
    rt = TruncatedPolynomialRing(ring, args.t)
    u = rt.parse(args.u)
    Q = torsion_descent(rt, u, args.k, args.r)
    poly = PolynomialRing(ring)
    return _emit({"q": poly.format(Q)}, args)


def cmd_graded_eval(args):
    gring = _ring(args)
    if not isinstance(gring, GradedRing):
        raise ParseError("graded commands need a Graded ring descriptor")
    b = ser.graded_from_json(gring, _load(args.element))
    at = gring.parse(args.at) if args.at else gring.zero()
    out = dilate(gring, b, at)
    return _emit(ser.graded_to_json(gring, out), args)


def cmd_graded_dilate(args):
    from .graded import identity_mod_positive

    gring = _ring(args)
    if not isinstance(gring, GradedRing):
        raise ParseError("graded commands need a Graded ring descriptor")
    M = _matrix(args, gring)
    at = gring.parse(args.at) if args.at else gring.zero()
    out = dilate_matrix(gring, M, at)
    payload = ser.matrix_to_json(gring, out)
    payload["congruentToIdentity"] = identity_mod_positive(gring, M)
    return _emit(payload, args)


def cmd_verify_paper(args):
    names = args.suite or None
    report = run_suites(args.seed, names)
    return _emit(report, args, failed=not report["ok"])


# -- argument wiring ----------------------------------------------------------


def _common(sub, ring=True, form=False, seed=False):
    if ring:
        sub.add_argument("--ring", required=False, help="ring descriptor JSON, file, or shorthand (Z, Z/4, Z[i]/5)")
        sub.add_argument("--lambda", dest="lam", default=None, help="override the distinguished element")
    if form:
        sub.add_argument("--form", default=None, help='form parameter JSON ({"mode":"max"} default)')
    if seed:
        sub.add_argument("--seed", type=int, default=None, help="suite seed (default FORMK1_SEED or 1729)")
    sub.add_argument("--pretty", action="store_true", help="human tables instead of JSON")
    sub.add_argument("--out", default=None, help="write the output to a file")


def build_parser():
    top = argparse.ArgumentParser(prog="formk1", description=__doc__)
    groups = top.add_subparsers(dest="group", required=True)

    ring = groups.add_parser("ring", help="ring-level operations").add_subparsers(
        dest="op", required=True
    )
    p = ring.add_parser("check", help="run the randomized ring axiom suite")
    p.add_argument("--samples", type=int, default=300)
    _common(p, seed=True)
    p.set_defaults(fn=cmd_ring_check)

    form = groups.add_parser("form", help="form parameter operations").add_subparsers(
        dest="op", required=True
    )
    p = form.add_parser("validate", help="validate a form parameter")
    p.add_argument("--samples", type=int, default=200)
    _common(p, form=True, seed=True)
    p.set_defaults(fn=cmd_form_validate)

    gq = groups.add_parser("gq", help="quadratic group operations").add_subparsers(
        dest="op", required=True
    )
    p = gq.add_parser("member", help="form-preservation membership test")
    p.add_argument("--matrix", required=True)
    _common(p)
    p.set_defaults(fn=cmd_gq_member)
    p = gq.add_parser("conditions", help="the four equivalent block conditions")
    p.add_argument("--matrix", required=True)
    _common(p, form=True)
    p.set_defaults(fn=cmd_gq_conditions)
    p = gq.add_parser("gen", help="evaluate one elementary generator")
    p.add_argument("--family", required=True, choices=["QE", "QR", "QL"])
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--n", type=int, required=True)
    _common(p, form=True)
    p.set_defaults(fn=cmd_gq_gen)

    word = groups.add_parser("word", help="certificate word operations").add_subparsers(
        dest="op", required=True
    )
    p = word.add_parser("eval", help="evaluate a word to its matrix")
    p.add_argument("--word", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ideal", default=None)
    _common(p, form=True)
    p.set_defaults(fn=cmd_word_eval)
    p = word.add_parser("lift", help="lift a relative word to the excision ring")
    p.add_argument("--word", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ideal", required=True)
    _common(p, form=True)
    p.set_defaults(fn=cmd_word_lift)

    exc = groups.add_parser("excision", help="excision/double checks").add_subparsers(
        dest="op", required=True
    )
    p = exc.add_parser("roundtrip", help="run the excision suite")
    _common(p, ring=False, seed=True)
    p.set_defaults(fn=cmd_excision_roundtrip)

    red = groups.add_parser("reduce", help="reductions to hyperbolic form").add_subparsers(
        dest="op", required=True
    )
    for which in ("upper", "lower", "corner"):
        p = red.add_parser(which)
        p.add_argument("--matrix", required=True)
        p.add_argument("--alpha-inverse", dest="alpha_inverse", default=None)
        _common(p, form=True)
        p.set_defaults(fn=lambda a, w=which: _cmd_reduce(a, w))

    kop = groups.add_parser("kopeiko", help="polynomial normal forms").add_subparsers(
        dest="op", required=True
    )
    for which, fn in (
        ("validate", cmd_kopeiko_validate),
        ("build", cmd_kopeiko_build),
        ("reduce", cmd_kopeiko_reduce),
    ):
        p = kop.add_parser(which)
        p.add_argument("--data", required=True, help='{"r":1,"n":1,"a":[["2"]],...}')
        _common(p, form=True)
        p.set_defaults(fn=fn)

    tr = groups.add_parser("trunc", help="truncated polynomial units").add_subparsers(
        dest="op", required=True
    )
    p = tr.add_parser("split", help="peel the lowest-degree unit factor")
    p.add_argument("--p", required=True, help="polynomial P with u = 1 + X^r P")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    _common(p)
    p.set_defaults(fn=cmd_trunc_split)
    p = tr.add_parser("decomp", help="full product decomposition of 1 + X P")
    p.add_argument("--p", required=True)
    p.add_argument("--t", type=int, required=True)
    _common(p)
    p.set_defaults(fn=cmd_trunc_decomp)
    p = tr.add_parser("descent", help="torsion descent on a truncated unit")
    p.add_argument("--u", required=True, help="unit of shape 1 + X^r P")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _common(p)
    p.set_defaults(fn=cmd_trunc_descent)

    gr = groups.add_parser("graded", help="graded dilation operations").add_subparsers(
        dest="op", required=True
    )
    p = gr.add_parser("eval", help="dilate a graded element at a degree-0 point")
    p.add_argument("--element", required=True)
    p.add_argument("--at", default=None)
    _common(p)
    p.set_defaults(fn=cmd_graded_eval)
    p = gr.add_parser("dilate", help="dilate a matrix entrywise")
    p.add_argument("--matrix", required=True)
    p.add_argument("--at", default=None)
    _common(p)
    p.set_defaults(fn=cmd_graded_dilate)

    p = groups.add_parser("verify-paper", help="run the full lemma suite")
    p.add_argument("--suite", action="append", choices=sorted(SUITES),
                   help="restrict to named suites (repeatable)")
    _common(p, ring=False, seed=True)
    p.set_defaults(fn=cmd_verify_paper)

    return top


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "seed", None) is None:
        args.seed = int(os.environ.get("FORMK1_SEED", DEFAULT_SEED))
    try:
        return args.fn(args)
    except ParseError as e:
        _emit({"error": {"type": type(e).__name__, "message": str(e)}}, args)
        return 2
    except FormK1Error as e:
        _emit({"error": {"type": type(e).__name__, "message": str(e)}}, args)
        return 1
    except (KeyError, ValueError, TypeError, AttributeError, OSError) as e:
        _emit({"error": {"type": type(e).__name__, "message": str(e)}}, args)
        return 2


if __name__ == "__main__":
    sys.exit(main())
