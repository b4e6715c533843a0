"""Command-line interface.

Every subcommand reads JSON files and prints one compact JSON document with
sorted keys on stdout.  Domain errors exit with status 1 and print
``{"error": {...}}``; usage errors exit with status 2.
"""
import argparse
import json
import os
import sys

from .arith.field import get_field, parse_field_spec
from .arith.parse import parse_poly, parse_ratfunc, parse_var
from .errors import DomainError, ParseError
from .groebner import DEFAULT_MAX_DEGREE, DEFAULT_MAX_PAIRS
from .operator import (
    DEFAULT_DEPTH,
    apply,
    frobenius_image_member,
    is_constant,
    iterate,
    operator_from_json,
)
from .prolong import (
    IdealPresentation,
    axiom_conditions,
    equalizer_ideal,
    fiber_ideal,
    point_prolong,
    power_obstructions,
    prolongation_ideal,
    witness_search,
)
from .scheme import (
    check_assumption2,
    classify,
    companionability_report,
    compose,
    compose_power,
    scheme_from_json,
    scheme_pow_symbolic,
    transport,
    twist,
    verify_morphism,
    verify_scheme,
)
from .scheme.core import AdditivePoly
from .search import DEFAULT_BUDGET
from .skew import SkewMatrix, SkewPoly, diagonalize, left_divmod, right_divmod


def dumps(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def load_json(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as err:
        raise ParseError(f"cannot read {path}: {err.strerror}", path=path) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(err.msg, path=path, line=err.lineno, column=err.colno) from None


def parse_scheme_file(path, skip_verify=False):
    S = scheme_from_json(load_json(path))
    if not skip_verify:
        verify_scheme(S).raise_if_failed()
    return S


def _field_from(data, override=None):
    if override:
        return parse_field_spec(override)
    if "p" not in data:
        raise ParseError("field missing: give p/field in the file or use --field")
    fld = data.get("field") or {"deg": 1}
    modulus = fld.get("modulus")
    return get_field(int(data["p"]), int(fld.get("deg", 1)), tuple(modulus) if modulus else None)


def load_operator(path, skip_verify=False):
    data = load_json(path)
    ref = data.get("scheme")
    if isinstance(ref, str):
        scheme_path = os.path.join(os.path.dirname(path), ref)
        S = parse_scheme_file(scheme_path, skip_verify)
    elif isinstance(ref, dict):
        S = scheme_from_json(ref)
        if not skip_verify:
            verify_scheme(S).raise_if_failed()
    else:
        raise ParseError("operator file needs a scheme", path=path)
    return operator_from_json(S, data)


def load_ideal(ctx, path):
    return IdealPresentation.from_json(ctx, load_json(path))


def parse_exps(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ParseError(f"bad exponent list {text!r}") from None


def parse_point(ctx, text):
    """A point given as JSON {"x1": "expr", ...}."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(f"bad point: {err.msg}", column=err.colno) from None
    return {parse_var(k): parse_ratfunc(ctx, str(v)) for k, v in data.items()}


def _point_json(point):
    return [str(x) if not hasattr(x, "coords") else _point_json(x) for x in point.coords]


# --- scheme -----------------------------------------------------------------

def cmd_scheme_verify(args):
    S = scheme_from_json(load_json(args.file))
    report = verify_scheme(S)
    report.raise_if_failed()
    return report.to_json()


def cmd_scheme_twist(args):
    S = parse_scheme_file(args.file, args.skip_verify)
    return twist(S, args.n).to_json()


def cmd_scheme_transport(args):
    S = parse_scheme_file(args.file, args.skip_verify)
    if args.exps is None:
        raise ParseError("transport needs --exps")
    return transport(S, parse_exps(args.exps)).to_json()


def cmd_scheme_classify(args):
    S = parse_scheme_file(args.file, args.skip_verify)
    return {"exponents": list(classify(S))}


def cmd_scheme_assumption2(args):
    S = parse_scheme_file(args.file, args.skip_verify)
    return {"assumption2": check_assumption2(S)}


def cmd_scheme_compose(args):
    S = parse_scheme_file(args.file, args.skip_verify)
    if args.inner:
        return compose(S, parse_scheme_file(args.inner, args.skip_verify)).to_json()
    return compose_power(S, args.n or 2).to_json()


def cmd_scheme_companion(args):
    S = parse_scheme_file(args.file, args.skip_verify)
    return companionability_report(S, args.budget)


def cmd_scheme_power(args):
    S = parse_scheme_file(args.file, args.skip_verify)
    m = args.n if args.n is not None else S.ctx.p
    return {"power": m, "coords": [str(f) for f in scheme_pow_symbolic(S, m)]}


def cmd_scheme_morphism(args):
    A = parse_scheme_file(args.file, args.skip_verify)
    B = parse_scheme_file(args.target, args.skip_verify)
    data = load_json(args.map)
    terms = []
    for t in data["terms"]:
        c = A.ctx.from_digits(t["c"]) if isinstance(t["c"], list) else A.ctx.embed_int(t["c"])
        terms.append((c, int(t["i"]) - 1, int(t["j"]) - 1, int(t["r"])))
    phi = AdditivePoly.build(A.ctx, A.e, B.e, terms)
    return verify_morphism(A, B, phi).to_json()


# --- skew -------------------------------------------------------------------

def cmd_skew_diag(args):
    data = load_json(args.file)
    ctx = _field_from(data, args.field)
    M = SkewMatrix.from_json(ctx, data["matrix"])
    return diagonalize(M).to_json()


def cmd_skew_div(args):
    data = load_json(args.file)
    ctx = _field_from(data, args.field)
    f = SkewPoly.from_json(ctx, data["f"])
    g = SkewPoly.from_json(ctx, data["g"])
    out = {}
    if args.side in ("right", "both"):
        q, r = right_divmod(f, g)
        out["right"] = {"q": q.to_json(), "r": r.to_json()}
    if args.side in ("left", "both"):
        q, r = left_divmod(f, g)
        out["left"] = {"q": q.to_json(), "r": r.to_json()}
    return out


# --- operators --------------------------------------------------------------

def cmd_op_apply(args):
    op = load_operator(args.file, args.skip_verify)
    return {"value": _point_json(apply(op, parse_ratfunc(op.ctx, args.expr)))}


def cmd_op_iterate(args):
    op = load_operator(args.file, args.skip_verify)
    f = parse_ratfunc(op.ctx, args.expr)
    point = iterate(op, f, args.n or 1, args.depth)
    return {"value": _point_json(point)}


def cmd_op_constant(args):
    op = load_operator(args.file, args.skip_verify)
    return {"constant": is_constant(op, parse_ratfunc(op.ctx, args.expr))}


def cmd_op_member(args):
    op = load_operator(args.file, args.skip_verify)
    point = iterate(op, parse_ratfunc(op.ctx, args.expr), args.n or 1, args.depth)
    return {"member": frobenius_image_member(op.scheme, point)}


# --- prolongations ----------------------------------------------------------

def cmd_prolong_ideal(args):
    op = load_operator(args.file, args.skip_verify)
    return prolongation_ideal(op, load_ideal(op.ctx, args.ideal)).to_json()


def cmd_prolong_point(args):
    op = load_operator(args.file, args.skip_verify)
    V = load_ideal(op.ctx, args.ideal)
    return point_prolong(op, V, parse_point(op.ctx, args.point)).to_json()


def cmd_prolong_fiber(args):
    op = load_operator(args.file, args.skip_verify)
    ctx = op.ctx
    V = load_ideal(ctx, args.ideal)
    tau = prolongation_ideal(op, V)
    minpoly = parse_poly(ctx, args.minpoly) if args.minpoly else None
    ext = parse_var(args.ext) if args.ext else None
    if (minpoly is None) != (ext is None):
        raise ParseError("--minpoly and --ext go together")
    fiber = fiber_ideal(tau, parse_point(ctx, args.point), ext, minpoly)
    out = {"ideal": fiber.to_json()}
    if args.substitute:
        subs = parse_point(ctx, args.substitute)
        out["obstructions"] = power_obstructions(fiber, subs)
    return out


def cmd_prolong_equalizer(args):
    op = load_operator(args.file, args.skip_verify)
    V = load_ideal(op.ctx, args.ideal)
    W = load_ideal(op.ctx, args.w)
    E = equalizer_ideal(op, V, W)
    out = E.to_json()
    out["ideal"] = E.ideal.to_json()
    return out


def cmd_axioms_check(args):
    op = load_operator(args.file, args.skip_verify)
    V = load_ideal(op.ctx, args.ideal)
    W = load_ideal(op.ctx, args.w)
    return axiom_conditions(op, V, W, max_pairs=args.max_pairs, max_degree=args.max_degree).to_json()


def cmd_witness_search(args):
    op = load_operator(args.file, args.skip_verify)
    V = load_ideal(op.ctx, args.ideal)
    W = load_ideal(op.ctx, args.w)
    pt = witness_search(op, V, W, args.budget)
    if pt is None:
        return {"witness": None}
    ctx = op.ctx
    return {"witness": {v.name(): ctx.digits(x) for v, x in sorted(pt.items())}}


# --- parser -----------------------------------------------------------------

def _common(p):
    p.add_argument("--skip-verify", action="store_true", help="do not verify the scheme axioms on load")
    p.add_argument("--golden", action="store_true", help="pretty-print instead of compact JSON")


def build_parser():
    parser = argparse.ArgumentParser(prog="ringschemes", description="Coordinate ring schemes over finite fields.")
    top = parser.add_subparsers(dest="group", required=True)

    scheme = top.add_parser("scheme", help="scheme constructions").add_subparsers(dest="cmd", required=True)
    for name, fn, helptext in (
        ("verify", cmd_scheme_verify, "check the ring scheme axioms"),
        ("twist", cmd_scheme_twist, "Frobenius twist (--n)"),
        ("transport", cmd_scheme_transport, "transport by Frobenius powers (--exps)"),
        ("classify", cmd_scheme_classify, "classification exponents"),
        ("assumption2", cmd_scheme_assumption2, "does Frobenius kill the kernel of the projection"),
        ("compose", cmd_scheme_compose, "composite scheme (optional inner file, or --n self-power)"),
        ("companion", cmd_scheme_companion, "companionability verdict"),
        ("power", cmd_scheme_power, "symbolic scheme power (--n, default p)"),
        ("morphism", cmd_scheme_morphism, "verify an additive map as a morphism"),
    ):
        p = scheme.add_parser(name, help=helptext)
        p.add_argument("file")
        if name == "compose":
            p.add_argument("inner", nargs="?")
        if name == "morphism":
            p.add_argument("target")
            p.add_argument("map")
        if name == "transport":
            p.add_argument("--exps")
        if name in ("twist", "compose", "power"):
            p.add_argument("--n", type=int, default=1 if name == "twist" else None)
        if name == "companion":
            p.add_argument("--budget", type=int, default=10 ** 6)
        _common(p)
        p.set_defaults(func=fn)

    skew = top.add_parser("skew", help="skew polynomials in Frobenius").add_subparsers(dest="cmd", required=True)
    p = skew.add_parser("diag", help="diagonalize a matrix over k[fr]")
    p.add_argument("file")
    p.add_argument("--field")
    _common(p)
    p.set_defaults(func=cmd_skew_diag)
    p = skew.add_parser("div", help="left and right division with remainder")
    p.add_argument("file")
    p.add_argument("--field")
    p.add_argument("--side", choices=("left", "right", "both"), default="both")
    _common(p)
    p.set_defaults(func=cmd_skew_div)

    op = top.add_parser("op", help="B-operators").add_subparsers(dest="cmd", required=True)
    for name, fn in (
        ("apply", cmd_op_apply),
        ("iterate", cmd_op_iterate),
        ("constant", cmd_op_constant),
        ("member", cmd_op_member),
    ):
        p = op.add_parser(name)
        p.add_argument("file", help="operator JSON")
        p.add_argument("expr", help="element of K, e.g. 't1^2/(t1+1)'")
        if name in ("iterate", "member"):
            p.add_argument("--n", type=int, default=1, help="iteration count")
            p.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
        _common(p)
        p.set_defaults(func=fn)

    prolong = top.add_parser("prolong", help="prolongations").add_subparsers(dest="cmd", required=True)
    for name, fn in (
        ("ideal", cmd_prolong_ideal),
        ("point", cmd_prolong_point),
        ("fiber", cmd_prolong_fiber),
        ("equalizer", cmd_prolong_equalizer),
    ):
        p = prolong.add_parser(name)
        p.add_argument("file", help="operator JSON")
        p.add_argument("ideal", help="ideal JSON of V")
        if name == "equalizer":
            p.add_argument("w", help="ideal JSON of W")
        if name in ("point", "fiber"):
            p.add_argument("--point", required=True, help='JSON object such as {"x1": "t1"}')
        if name == "fiber":
            p.add_argument("--minpoly")
            p.add_argument("--ext")
            p.add_argument("--substitute", help="parameter rewrite applied before root checks")
        _common(p)
        p.set_defaults(func=fn)

    pairs = (
        ("axioms", "check", cmd_axioms_check, "geometric axiom conditions for (V, W)"),
        ("witness", "search", cmd_witness_search, "finite search for a point of V prolonging into W"),
    )
    for group, name, fn, text in pairs:
        sub = top.add_parser(group, help=text).add_subparsers(dest="cmd", required=True)
        p = sub.add_parser(name, help=text)
        p.add_argument("file", help="operator JSON")
        p.add_argument("ideal", help="ideal JSON of V")
        p.add_argument("w", help="ideal JSON of W")
        if name == "search":
            p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        else:
            p.add_argument("--max-pairs", type=int, default=DEFAULT_MAX_PAIRS)
            p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
        _common(p)
        p.set_defaults(func=fn)
    return parser


def _pretty(obj):
    return json.dumps(obj, sort_keys=True, indent=2)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except DomainError as err:
        print(dumps({"error": err.to_json()}))
        return 1
    except (KeyError, TypeError, ValueError) as err:
        print(dumps({"error": {"kind": "ParseError", "message": str(err)}}))
        return 1
    print(_pretty(result) if args.golden else dumps(result))
    return 0


if __name__ == "__main__":
    sys.exit(main())
