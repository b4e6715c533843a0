"""Acceptance suite: one check per criterion, each with its time limit.

Each check raises AssertionError on failure.  Under pytest every criterion is
a test and a "criterion N: PASS/FAIL" summary is printed at the end of the
run (see conftest.py); run this file directly to print the same lines.
"""
import glob
import json
import os
import random
import sys
import time

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from oracles import freeze, homomorphisms, layered  # noqa: E402
from ringschemes import catalog  # noqa: E402
from ringschemes.arith import MultiPoly, RatFunc, VarId, get_field, param, parse_poly, parse_ratfunc  # noqa: E402
from ringschemes.errors import NonPolynomial  # noqa: E402
from ringschemes.operator import BOperator, is_constant  # noqa: E402
from ringschemes.prolong import (  # noqa: E402
    IdealPresentation,
    equalizer_ideal,
    fiber_ideal,
    power_obstructions,
    prolongation_ideal,
    rational_root,
)
from ringschemes.scheme import (  # noqa: E402
    NO_PRODUCT_CASE,
    NO_UNIFORM_TWIST,
    UNKNOWN_OPEN,
    YES_ASSUMPTION2,
    YES_SEPARABLE,
    check_assumption2,
    check_kernel_nilpotent,
    classify,
    compose_self,
    dual_numbers,
    predict_companionability,
    scheme_from_json,
    scheme_pow_symbolic,
    split_dual_scheme,
    split_pair_scheme,
    transport,
    truncated_poly_scheme,
    twist,
    verify_scheme,
)
from ringschemes.search import find_zeros  # noqa: E402
from ringschemes.skew import SkewPoly, left_divmod, right_divmod, skew_mul  # noqa: E402

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
T1 = param(1)

RESULTS = {}


def polys(S, *texts):
    return tuple(parse_poly(S.ctx, t) for t in texts)


def generic_product(S):
    return tuple((S.generic_point(0) * S.generic_point(S.e)).coords)


def xy(S, *texts):
    """Formulas in x1.., y1.. rewritten into the generic variable names."""
    out = []
    for text in texts:
        for i in range(S.e, 0, -1):
            text = text.replace(f"y{i}", f"x{S.e + i}")
        out.append(text)
    return polys(S, *out)


def fixture_schemes():
    out = {}
    for path in sorted(glob.glob(os.path.join(ROOT, "fixtures", "*.json"))):
        with open(path) as fh:
            data = json.load(fh)
        if "mult" in data:
            out[os.path.basename(path)[:-5]] = scheme_from_json(data)
    return out


def zero_op(S):
    return BOperator.zero_operator(S)


# --- criteria -----------------------------------------------------------------

def criterion_1():
    for p in (2, 3, 5):
        for n in (1, 2, 3):
            S = twist(catalog.dual(p), n)
            q = p ** n
            assert generic_product(S) == xy(S, "x1*y1", f"x1^{q}*y2 + x2*y1^{q}"), (p, n)


def criterion_2():
    S = catalog.kx3(2)
    for m in range(4):
        for n in range(4):
            try:
                T = transport(S, (0, m, n))
            except NonPolynomial:
                assert m > n, (m, n)
                continue
            assert m <= n, (m, n)
            assert verify_scheme(T).ok
    T = transport(S, (0, 1, 2))
    # the middle term is (x2*y2)^(p^(n-m)) with p = 2, n - m = 1
    assert generic_product(T) == xy(T, "x1*y1", "x1^2*y2 + x2*y1^2", "x1^4*y3 + x2^2*y2^2 + x3*y1^4")


def criterion_3():
    S = catalog.twistex(1, 2, 2)
    assert tuple(scheme_pow_symbolic(S, 2)) == polys(S, "x1^2", "0", "x2^4")
    C = compose_self(S)
    # blocks (x_1, ., x_2), (., ., .), (y_1, ., .) sit at flat positions 1, 2, 7
    expected = ("x1^2", "0", "x2^4", "0", "0", "0", "x4^4", "0", "0")
    assert tuple(scheme_pow_symbolic(C, 2)) == polys(C, *expected)


def criterion_4():
    rng = random.Random(4)
    builders = {
        "dual": dual_numbers,
        "kx3": lambda ctx: truncated_poly_scheme(ctx, 3),
        "pair": split_pair_scheme,
        "pair_dual": split_dual_scheme,
    }
    fields = [get_field(2), get_field(3), get_field(2, 2)]
    done = 0
    while done < 20:
        ctx = rng.choice(fields)
        name = rng.choice(sorted(builders))
        S = builders[name](ctx)
        exps = (0,) + tuple(rng.randint(0, 3) for _ in range(S.e - 1))
        try:
            T = transport(S, exps)
        except NonPolynomial:
            continue
        assert tuple(classify(T)) == exps, (name, ctx.q, exps)
        done += 1


def criterion_5():
    for p, d in ((2, 1), (2, 2), (3, 2)):
        ctx = get_field(p, d)
        rng = random.Random(500 + p * 10 + d)
        for _ in range(500):
            f = SkewPoly(ctx, [rng.randrange(ctx.q) for _ in range(rng.randint(0, 7))])
            g_coeffs = [rng.randrange(ctx.q) for _ in range(rng.randint(0, 4))] + [rng.randrange(1, ctx.q)]
            g = SkewPoly(ctx, g_coeffs)
            q, r = right_divmod(f, g)
            assert skew_mul(q, g) + r == f and r.degree < g.degree
            q, r = left_divmod(f, g)
            assert skew_mul(g, q) + r == f and r.degree < g.degree


def criterion_6():
    for p in (2, 3):
        for S in (catalog.dual(p), catalog.dual_twisted(p)):
            ctx = S.ctx
            for V in (catalog.affine_space(ctx, 1), catalog.affine_space(ctx, 2), catalog.parabola(ctx)):
                tau = prolongation_ideal(zero_op(S), V)
                points = [freeze(pt) for pt in find_zeros(ctx, tau.gens, tau.vars)]
                homs = [freeze(layered(h)) for h in homomorphisms(S, V)]
                assert len(points) == len(homs)
                assert len(set(homs)) == len(homs)
                assert set(points) == set(homs)


def criterion_7():
    rng = random.Random(7)
    checked = 0
    for S in fixture_schemes().values():
        if not check_assumption2(S):
            continue
        ctx = S.ctx
        t = RatFunc(MultiPoly.var(ctx, T1))
        values = [t] + [RatFunc(MultiPoly.var(ctx, T1, rng.randint(0, 3)).scale(rng.randrange(ctx.q)))
                        for _ in range(S.e - 1)]
        op = BOperator(S, {T1: values})
        fractions = check_kernel_nilpotent(S)
        for _ in range(100):
            num = sum((t.pow(k).scale(rng.randrange(ctx.q)) for k in range(4)), t.zero())
            den = sum((t.pow(k).scale(rng.randrange(ctx.q)) for k in range(3)), t.zero())
            f = num / den if fractions and not den.is_zero() else num
            assert is_constant(op, f.pow(ctx.p))
        checked += 1
    assert checked >= 1


def _agreement_set(S, V, W):
    out = set()
    for h in homomorphisms(S, W):
        pt = layered(h)
        if all(pt[VarId(v.j, (1, i))] == pt[VarId(v.j, (i, 1))] for v in V.vars for i in range(1, S.e + 1)):
            out.add(freeze(pt))
    return out


def criterion_8():
    cases = 0
    for S in fixture_schemes().values():
        if S.e != 2 or S.ctx.q not in (2, 3):
            continue
        ctx = S.ctx
        A1 = catalog.affine_space(ctx, 1)
        P = catalog.parabola(ctx)
        tau_a1 = prolongation_ideal(zero_op(S), A1)
        pairs = [
            (A1, tau_a1),
            (A1, IdealPresentation.build(ctx, tau_a1.vars, ["x1_2"])),
            (A1, IdealPresentation.build(ctx, tau_a1.vars, ["x1_2 - 1"])),
            (A1, IdealPresentation.build(ctx, tau_a1.vars, ["x1_2 - x1_1"])),
            (P, prolongation_ideal(zero_op(S), P)),
        ]
        for V, W in pairs:
            E = equalizer_ideal(zero_op(S), V, W)
            found = {freeze(pt) for pt in find_zeros(ctx, E.ideal.gens, E.ideal.vars)}
            assert found == _agreement_set(S, V, W)
            cases += 1
    assert cases >= 5


def criterion_9():
    op = catalog.closing_operator()
    ctx = op.ctx
    tau = prolongation_ideal(op, catalog.closing_variety())
    u = param(3)
    fiber = fiber_ideal(tau, {VarId(1): parse_ratfunc(ctx, "t3")}, ext_var=u, minpoly=parse_poly(ctx, "t3^2 + t1"))
    # s^4 - y with s = x1_2 and y = t2 (characteristic 2, so minus is plus)
    assert parse_poly(ctx, "x1_2^4 - t2") in fiber.gens
    assert rational_root(parse_ratfunc(ctx, "t2"), 2) is None
    obstructions = power_obstructions(fiber, {param(1): parse_ratfunc(ctx, "t3^2")})
    assert [(o["variable"], o["power"], o["value"]) for o in obstructions] == [("x1_2", 4, "t2")]


def criterion_10():
    assert predict_companionability(catalog.dual_twisted(2)) == YES_ASSUMPTION2
    assert predict_companionability(catalog.dual_twisted(3, 2)) == YES_ASSUMPTION2
    assert predict_companionability(catalog.prod(2)) == YES_SEPARABLE
    assert predict_companionability(catalog.split_pair(2)) == YES_SEPARABLE
    assert predict_companionability(catalog.split_dual(2)) == NO_PRODUCT_CASE
    assert predict_companionability(catalog.kx3_twisted(2)) == NO_UNIFORM_TWIST
    assert predict_companionability(catalog.twistex(1, 2, 2)) == UNKNOWN_OPEN


def criterion_11():
    sys.path.insert(0, os.path.join(ROOT, "tools"))
    from regen_goldens import GOLDENS, mutation_commands, run

    with open(os.path.join(ROOT, "fixtures", "mutations", "manifest.json")) as fh:
        manifest = {e["name"]: e for e in json.load(fh)}
    assert len(manifest) == 10
    for name, argv in mutation_commands().items():
        entry = manifest[name[len("mutation_"):]]
        code, out = run(argv)
        assert code == 1, name
        with open(os.path.join(GOLDENS, f"{name}.json")) as fh:
            assert out == fh.read(), name
        error = json.loads(out)["error"]
        for key, value in entry["expected"].items():
            assert error[key] == value, (name, key)


# limits in seconds; None means untimed
CRITERIA = {
    1: (criterion_1, 1.0),
    2: (criterion_2, 1.0),
    3: (criterion_3, 5.0),
    4: (criterion_4, 10.0),
    5: (criterion_5, 5.0),
    6: (criterion_6, 30.0),
    7: (criterion_7, None),
    8: (criterion_8, 60.0),
    9: (criterion_9, 1.0),
    10: (criterion_10, None),
    11: (criterion_11, None),
}


def run_criterion(number):
    fn, limit = CRITERIA[number]
    start = time.perf_counter()
    try:
        fn()
        error = None
    except AssertionError as exc:
        error = f"assertion failed {exc}".strip()
    elapsed = time.perf_counter() - start
    if error is None and limit is not None and elapsed >= limit:
        error = f"took {elapsed:.2f} s, limit {limit:.0f} s"
    RESULTS[number] = (error is None, elapsed, error)
    return error


def summary_line(number):
    ok, elapsed, error = RESULTS[number]
    status = "PASS" if ok else f"FAIL ({error})"
    return f"criterion {number}: {status} [{elapsed:.2f} s]"


def summary_lines():
    return [summary_line(n) for n in sorted(RESULTS)]


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    error = run_criterion(number)
    print(summary_line(number))
    assert error is None, error


if __name__ == "__main__":
    for n in sorted(CRITERIA):
        run_criterion(n)
    print("\n".join(summary_lines()))
    sys.exit(0 if all(ok for ok, _, _ in RESULTS.values()) else 1)
