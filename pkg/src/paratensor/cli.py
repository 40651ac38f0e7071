"""Command-line front end; every command prints one JSON document on stdout.

Exit codes: 0 success, 1 negative mathematical result, 2 usage or parse
error, 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from .algebra import INF, FieldMismatchError, field_from_flag
from .forge import generate, translation_automorphisms, twist_by_translation
from .orbifold import DEFAULT_BUDGET, OrbifoldSignature, classify, enumerate_parabolic_signatures
from .parse import ParseError, parse_differential_parts, parse_rational, parse_scalar
from .ratmap import PointSet, RatMap, mobius_normal_form
from .tensor import (
    KDifferential, minimal_k, parallel_factor, predicted_modulus_squared,
    search_parallel, validate_constraints,
)

SCHEMA = 1

OK, NEGATIVE, USAGE, INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# JSON helpers


def _w(w):
    return "inf" if w == math.inf else int(w)


def _text(x) -> str:
    if x is None:
        return None
    if x is INF:
        return "inf"
    if isinstance(x, Fraction):
        return str(x)
    return str(x)


def _point_labels(S: PointSet) -> list[str]:
    out = []
    if S.poly.degree > 0:
        out.append(S.poly.to_str())
    if S.has_infinity:
        out.append("inf")
    return out


def signature_payload(sig: OrbifoldSignature) -> dict:
    nu = {}
    for S, w in sig.components:
        for label in _point_labels(S):
            nu[label] = _w(w)
    post = _point_labels(sig.postcritical) if sig.postcritical is not None else []
    return {
        "degree": sig.degree,
        "pcf": sig.pcf,
        "postcritical": post,
        "nu": nu,
        "weights": [_w(w) for w in sig.weights],
        "chi": _text(sig.chi),
        "type": sig.type_tag,
    }


def certificate_payload(cert, boundary: bool | None = None) -> dict:
    out = {
        "k": cert.k,
        "differential": str(cert.differential),
        "lambda": str(cert.lam),
        "lambda_modulus_squared": _text(Fraction(int(cert.modulus_squared.numerator),
                                                 int(cert.modulus_squared.denominator))),
        "identity_verified": cert.verify(),
    }
    if boundary is not None:
        pred = predicted_modulus_squared(cert.map.degree, cert.k, boundary)
        out["predicted_modulus_squared"] = str(pred)
        out["modulus_matches"] = cert.modulus_squared == pred
    return out


def validation_payload(report) -> dict:
    return {
        "passed": report.passed,
        "clauses": {name: {"ok": ok, "detail": msg} for name, (ok, msg) in report.clauses.items()},
        "pole_orders": [[label, m] for label, m in report.pole_orders],
    }


def _emit(command: str, field_flag: str, status: str, result: dict) -> str:
    doc = {"schema": SCHEMA, "command": command, "field": field_flag, "status": status, "result": result}
    return json.dumps(doc, sort_keys=True, indent=2)


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


# ---------------------------------------------------------------------------
# commands


def _parse_map(text: str, F) -> RatMap:
    r = parse_rational(text, F)
    if r.is_constant():
        raise UsageError(f"map {text!r} is constant")
    return RatMap.from_function(r)


def cmd_classify(args, F) -> tuple[int, dict]:
    f = _parse_map(args.map, F)
    if f.degree == 1:
        nf = mobius_normal_form(f)
        res = {
            "degree": 1,
            "mobius": {
                "kind": nf.kind,
                "parameter": _text(nf.parameter),
                "conjugator": _text(nf.conjugator),
                "fixed_points": [_text(p) for p in nf.fixed_points],
                "extension": _text(nf.extension),
                "multiplier_poly": nf.multiplier_poly.to_str("w") if nf.multiplier_poly is not None else None,
            },
        }
        _note(f"degree 1: {nf.kind}")
        return OK, res
    sig = classify(f, args.budget)
    _note(f"type {sig.type_tag}, weights {[_w(w) for w in sig.weights]}")
    return (OK if sig.is_parabolic else NEGATIVE), signature_payload(sig)


def cmd_verify(args, F) -> tuple[int, dict]:
    f = _parse_map(args.map, F)
    R, k = parse_differential_parts(args.differential, F)
    if R.is_zero():
        raise UsageError("the zero differential is parallel to everything")
    q = KDifferential(R, k)
    cert = parallel_factor(f, q)
    if cert is None:
        _note("not parallel")
        return NEGATIVE, {"parallel": False, "map": str(f), "differential": str(q)}
    if not cert.verify():
        raise ArithmeticError("certificate failed re-verification")
    report = validate_constraints(f, q, cert)
    _note(f"parallel, lambda = {cert.lam}")
    return OK, {
        "parallel": True,
        "map": str(f),
        "certificate": certificate_payload(cert),
        "validation": validation_payload(report),
    }


def _search(f: RatMap, sig: OrbifoldSignature, max_k: int):
    """First certified k among minimal_k, 2 minimal_k, ... up to max_k."""
    if not sig.pcf:
        return None, "not postcritically finite"
    if not sig.is_parabolic:
        return None, sig.type_tag
    k0 = minimal_k(sig)
    k = k0
    while k <= max_k:
        cert = search_parallel(f, sig, k)
        if cert is not None:
            return cert, None
        k += k0
    return None, f"no admissible k <= {max_k}"


def cmd_search(args, F) -> tuple[int, dict]:
    f = _parse_map(args.map, F)
    if f.degree < 2:
        raise UsageError("search needs degree at least 2")
    sig = classify(f, args.budget)
    cert, refusal = _search(f, sig, args.max_k)
    res = {"signature": signature_payload(sig)}
    if cert is None:
        _note(f"refused: {refusal}")
        res["refusal"] = refusal
        return NEGATIVE, res
    report = validate_constraints(f, cert.differential, cert)
    if not report.passed:
        raise ArithmeticError(f"certified tensor fails validation: {report.failed}")
    res["certificate"] = certificate_payload(cert, sig.is_boundary)
    res["validation"] = validation_payload(report)
    _note(f"k = {cert.k}, lambda = {cert.lam}")
    return OK, res


def _generated(args, F):
    kind = args.kind
    try:
        if kind == "power":
            return generate("power", args.n, field=F)
        if kind == "cheb":
            return generate("cheb", args.n, negate=args.neg, field=F)
        if kind == "lattes":
            a = parse_scalar(args.a, F)
            b = parse_scalar(args.b, F)
            return generate("lattes", a=a, b=b, m=args.m, field=F)
        if kind == "cm":
            coeff = parse_scalar(args.coefficient, F) if args.coefficient is not None else None
            a = coeff if args.family == "j1728" else None
            b = coeff if args.family == "j0" else None
            target = args.target or ("244" if args.family == "j1728" else None)
            if target is None:
                raise UsageError("the j0 family needs --target 333 or 236")
            return generate("cm", m=args.m, family=args.family, target=target, a=a, b=b, field=F)
    except (ValueError, TypeError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise UsageError(str(exc)) from exc
    raise UsageError(f"unknown generator {kind!r}")


def cmd_generate(args, F) -> tuple[int, dict]:
    gen = _generated(args, F)
    f = gen.map
    declared = classify(f, args.budget)
    if args.twist:
        try:
            options = translation_automorphisms(declared)
            f = twist_by_translation(f, declared, args.twist)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        twist = str(options[args.twist - 1])
    else:
        twist = None
    sig = classify(f, args.budget)
    if tuple(sig.weights) != tuple(gen.weights):
        raise ArithmeticError(f"round trip failed: declared {gen.weights}, classified {sig.weights}")
    cert, refusal = _search(f, sig, minimal_k(sig))
    if cert is None:
        raise ArithmeticError(f"round trip failed: no tensor ({refusal})")
    pred = predicted_modulus_squared(f.degree, cert.k, sig.is_boundary)
    if cert.modulus_squared != pred:
        raise ArithmeticError(f"|lambda|^2 = {cert.modulus_squared}, predicted {pred}")
    if f.degree != gen.endo.predicted_degree():
        raise ArithmeticError(f"degree {f.degree}, endomorphism predicts {gen.endo.predicted_degree()}")
    # self-check: the emitted texts must verify on their own
    f2 = _parse_map(str(f), F)
    R2, k2 = parse_differential_parts(str(cert.differential), F)
    again = parallel_factor(f2, KDifferential(R2, k2))
    if again is None or again.lam != cert.lam:
        raise ArithmeticError("emitted map and tensor do not re-verify")
    _note(f"{gen.description}: type {sig.type_tag}, lambda = {cert.lam}")
    return OK, {
        "map": str(f),
        "description": gen.description,
        "twist": twist,
        "declared_weights": [_w(w) for w in gen.weights],
        "signature": signature_payload(sig),
        "certificate": certificate_payload(cert, sig.is_boundary),
    }


def cmd_enumerate(args, F) -> tuple[int, dict]:
    if args.max_weight < 2:
        raise UsageError("--max-weight must be at least 2")
    sigs = enumerate_parabolic_signatures(args.max_weight, args.boundary)
    return OK, {"max_weight": args.max_weight, "boundary": args.boundary,
                "count": len(sigs), "signatures": [[_w(w) for w in s] for s in sigs]}


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default=argparse.SUPPRESS,
                        help="coefficient field: q, qi, qw or qd:D (default q)")
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS,
                        help=f"postcritical degree budget (default {DEFAULT_BUDGET})")

    p = argparse.ArgumentParser(prog="paratensor", parents=[common],
                                description="Parallel tensors of rational maps, in exact arithmetic.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common], help="orbifold signature of a map")
    c.add_argument("map")

    v = sub.add_parser("verify", parents=[common], help="check f*q = lambda q")
    v.add_argument("map")
    v.add_argument("differential")

    s = sub.add_parser("search", parents=[common], help="find a parallel tensor")
    s.add_argument("map")
    s.add_argument("--max-k", type=int, default=12)

    g = sub.add_parser("generate", parents=[common], help="build a map from a family")
    gsub = g.add_subparsers(dest="kind", required=True)
    twist = argparse.ArgumentParser(add_help=False)
    twist.add_argument("--twist", type=int, default=0,
                       help="0 for none, else the index of a translation automorphism")
    gp = gsub.add_parser("power", parents=[common, twist])
    gp.add_argument("n", type=int)
    gc = gsub.add_parser("cheb", parents=[common, twist])
    gc.add_argument("n", type=int)
    gc.add_argument("--neg", action="store_true", help="use -P_n")
    gl = gsub.add_parser("lattes", parents=[common, twist])
    gl.add_argument("--a", default="-1")
    gl.add_argument("--b", default="0")
    gl.add_argument("--m", type=int, default=2)
    gm = gsub.add_parser("cm", parents=[common, twist])
    gm.add_argument("--family", choices=["j1728", "j0"], required=True)
    gm.add_argument("--m", type=int, default=2)
    gm.add_argument("--target", choices=["244", "333", "236"])
    gm.add_argument("--coefficient", default=None, help="a for j1728 (default -1), b for j0 (default 1)")

    e = sub.add_parser("enumerate", parents=[common], help="list parabolic signatures")
    e.add_argument("--max-weight", type=int, default=6)
    e.add_argument("--boundary", action="store_true", help="include weights inf")
    return p


COMMANDS = {
    "classify": cmd_classify,
    "verify": cmd_verify,
    "search": cmd_search,
    "generate": cmd_generate,
    "enumerate": cmd_enumerate,
}


def run(argv: list[str] | None = None) -> tuple[int, str]:
    """Execute one command; returns (exit code, stdout text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (USAGE if exc.code else OK), ""
    field_flag = getattr(args, "field", "q")
    args.budget = getattr(args, "budget", DEFAULT_BUDGET)
    command = args.command
    try:
        F = field_from_flag(field_flag)
    except ValueError as exc:
        _note(f"error: {exc}")
        return USAGE, _emit(command, field_flag, "usage-error", {"error": str(exc)})
    try:
        code, result = COMMANDS[command](args, F)
    except (ParseError, UsageError, FieldMismatchError, ValueError) as exc:
        _note(f"error: {exc}")
        return USAGE, _emit(command, F.flag(), "usage-error", {"error": str(exc)})
    except ArithmeticError as exc:
        _note(f"invariant failure: {exc}")
        return INTERNAL, _emit(command, F.flag(), "internal-error", {"error": str(exc)})
    status = "ok" if code == OK else "negative"
    return code, _emit(command, F.flag(), status, result)


def main(argv: list[str] | None = None) -> int:
    code, out = run(argv)
    if out:
        print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
