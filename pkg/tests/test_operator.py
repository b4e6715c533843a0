import random

import pytest

from oracles import random_poly
from ringschemes import catalog
from ringschemes.arith import MultiPoly, RatFunc, get_field, param, parse_ratfunc
from ringschemes.errors import (
    DepthExceeded,
    InvalidScheme,
    NonInvertible,
    NotNilpotentKernel,
    UnsupportedImageShape,
    ZeroLeadingCoordinate,
)
from ringschemes.operator import (
    BOperator,
    apply,
    frobenius_image_member,
    invert_unit,
    is_constant,
    iterate,
    operator_from_json,
)
from ringschemes.scheme import (
    SchemePoint,
    check_assumption2,
    check_kernel_nilpotent,
    tensor_scheme,
    truncated_poly_scheme,
)

T1 = param(1)
T2 = param(2)


def rf(ctx, text):
    return parse_ratfunc(ctx, text)


def point(S, *coords):
    return SchemePoint(S, [rf(S.ctx, c) if isinstance(c, str) else c for c in coords])


@pytest.fixture
def twdual():
    S = catalog.dual_twisted(2)
    return BOperator(S, {T1: ("t1", "1")})


def rand_ratfunc(ctx, rng, gens=(T1,), allow_fraction=True):
    num = random_poly(ctx, rng, list(gens), max_terms=3, max_exp=3)
    if not allow_fraction:
        return RatFunc(num)
    den = random_poly(ctx, rng, list(gens), max_terms=2, max_exp=2)
    if den.is_zero():
        den = den.one()
    return RatFunc(num, den)


def test_apply_examples(twdual):
    S = twdual.scheme
    assert apply(twdual, "t1^2") == point(S, "t1^2", "0")
    assert apply(twdual, "t1 + 1") == point(S, "t1 + 1", "1")
    assert apply(twdual, "t1") == point(S, "t1", "1")


def test_apply_zero_operator_is_iota(rng):
    S = catalog.kx3_twisted(2)
    op = BOperator.zero_operator(S, [T1, T2])
    for _ in range(20):
        f = rand_ratfunc(S.ctx, rng, (T1, T2), allow_fraction=False)
        assert apply(op, f) == SchemePoint.iota(S, f)
        assert is_constant(op, f)


def test_projection_of_apply_is_identity(twdual, rng):
    for _ in range(50):
        f = rand_ratfunc(twdual.ctx, rng)
        assert apply(twdual, f).coords[0] == f


@pytest.mark.parametrize("p", [2, 3, 5])
def test_homomorphism_laws(p):
    rng = random.Random(p)
    S = catalog.dual_twisted(p)
    ctx = S.ctx
    op = BOperator(S, {T1: (RatFunc(MultiPoly.var(ctx, T1)), rand_ratfunc(ctx, rng, allow_fraction=False))})
    for _ in range(200):
        f, g = rand_ratfunc(ctx, rng), rand_ratfunc(ctx, rng)
        df, dg = apply(op, f), apply(op, g)
        assert apply(op, f + g) == df + dg
        assert apply(op, f * g) == df * dg
        if not g.is_zero():
            assert apply(op, f / g) * dg == df


def test_constants_of_the_prime_field_are_constant(twdual):
    for c in range(2):
        assert is_constant(twdual, RatFunc.const(twdual.ctx, c))


def test_is_constant_examples(twdual):
    assert not is_constant(twdual, "t1")
    assert is_constant(twdual, "t1^2")


ASSUMPTION_SCHEMES = {
    "dual_f2": lambda: catalog.dual(2),
    "dual_f3": lambda: catalog.dual(3),
    "dual_f9": lambda: catalog.dual(3, 2),
    "dual_twisted_f2": lambda: catalog.dual_twisted(2),
    "dual_twisted_f3_n2": lambda: catalog.dual_twisted(3, 2),
    "kx3_f3": lambda: truncated_poly_scheme(get_field(3), 3),
}


@pytest.mark.parametrize("name", sorted(ASSUMPTION_SCHEMES))
def test_pth_powers_are_constants(name):
    S = ASSUMPTION_SCHEMES[name]()
    if not check_assumption2(S):
        pytest.skip("assumption fails for this scheme")
    ctx = S.ctx
    rng = random.Random(sum(map(ord, name)))
    values = [RatFunc(MultiPoly.var(ctx, T1))]
    values += [rand_ratfunc(ctx, rng, allow_fraction=False) for _ in range(S.e - 1)]
    op = BOperator(S, {T1: values})
    fractions = check_kernel_nilpotent(S)
    for _ in range(100):
        f = rand_ratfunc(ctx, rng, allow_fraction=fractions)
        assert is_constant(op, f.pow(ctx.p))


def test_derivation_of_frobenius_law(rng):
    S = catalog.dual_twisted(3)
    ctx = S.ctx
    op = BOperator(S, {T1: ("t1", "t1^2 + 1")})
    for _ in range(50):
        f, g = rand_ratfunc(ctx, rng), rand_ratfunc(ctx, rng)
        D = lambda h: apply(op, h).coords[1]  # noqa: E731
        assert D(f * g) == f.pow(3) * D(g) + g.pow(3) * D(f)


def test_invert_unit_formula():
    S = catalog.dual_twisted(2)
    ctx = S.ctx
    a, b = rf(ctx, "t1 + 1"), rf(ctx, "t1^3")
    inv = invert_unit(S, point(S, a, b))
    assert inv == point(S, a.inverse(), b / a.pow(4))


def test_invert_unit_examples():
    S = catalog.dual_twisted(2)
    one = point(S, "1", "0")
    assert invert_unit(S, one) == one
    f = rf(S.ctx, "t1^2 + t1 + 1")
    assert invert_unit(S, SchemePoint.iota(S, f)) == SchemePoint.iota(S, f.inverse())


def test_fraction_through_operator(twdual):
    assert apply(twdual, "1/t1") == point(twdual.scheme, "1/t1", "1/t1^4")


@pytest.mark.parametrize("name", ["dual", "dual_twisted", "kx3", "kx3_twisted", "twistex1"])
def test_invert_unit_times_input_is_one(name, rng):
    S = catalog.SCHEMES[name]()
    ctx = S.ctx
    for _ in range(30):
        coords = [rand_ratfunc(ctx, rng, allow_fraction=False) for _ in range(S.e)]
        if coords[0].is_zero():
            coords[0] = coords[0].one()
        a = SchemePoint(S, coords)
        assert a * invert_unit(S, a) == a.one()


def test_invert_unit_errors():
    S = catalog.dual_twisted(2)
    with pytest.raises(ZeroLeadingCoordinate):
        invert_unit(S, point(S, "0", "1"))
    P = catalog.prod(2)
    with pytest.raises(NotNilpotentKernel):
        invert_unit(P, point(P, "t1", "1"))
    op = BOperator(P, {T1: ("t1", "t1 + 1")})
    with pytest.raises(NonInvertible):
        apply(op, "1/t1")


def test_operator_first_coordinate_checked():
    S = catalog.dual_twisted(2)
    with pytest.raises(InvalidScheme):
        BOperator(S, {T1: ("t1 + 1", "1")})


def test_iterate_closing_example():
    op = catalog.closing_operator()
    S = op.scheme
    assert iterate(op, "t1", 1) == apply(op, "t1")
    second = iterate(op, "t1", 2)
    expected = SchemePoint(
        S, [point(S, "t1", "0", "t2"), point(S, "0", "0", "0"), point(S, "t2", "0", "0")]
    )
    assert second == expected


def test_iterate_zero_operator():
    S = catalog.dual(3)
    op = BOperator.zero_operator(S, [T1])
    nested = iterate(op, "t1", 3).flatten()
    assert nested[0] == rf(S.ctx, "t1")
    assert all(x.is_zero() for x in nested[1:])


def test_iterate_depth_cap():
    op = catalog.closing_operator()
    with pytest.raises(DepthExceeded):
        iterate(op, "t1", 5)
    with pytest.raises(DepthExceeded):
        iterate(op, "t1", 3, depth=2)


def test_frobenius_membership_examples():
    S = catalog.twistex(1, 2, 2)
    assert frobenius_image_member(S, point(S, "t1", "0", "t2"))
    assert not frobenius_image_member(S, point(S, "t1", "1", "t2"))
    assert frobenius_image_member(S, point(S, "0", "0", "0"))


@pytest.mark.parametrize("i", [1, 2, 3])
def test_iterates_of_closing_operator_are_pth_powers(i):
    op = catalog.closing_operator()
    assert frobenius_image_member(op.scheme, iterate(op, "t1", i))


def test_frobenius_membership_unsupported_shape():
    # F_4 as an F_2-algebra in the basis 1, e with e^2 = e + 1: the first
    # coordinate of the Frobenius image is x1^2 + x2^2
    S = tensor_scheme(get_field(2), [[[1, 0], [0, 1]], [[0, 1], [1, 1]]])
    with pytest.raises(UnsupportedImageShape):
        frobenius_image_member(S, point(S, "t1", "t1"))


def test_fq_part_on_product():
    ctx = get_field(2, 2)
    S = catalog.prod(2, 2)
    w = ctx.omega
    op = BOperator(S, {}, fq_part=[w, ctx.add(w, 1)])
    out = apply(op, RatFunc.const(ctx, w))
    assert [x.num.constant_value() for x in out.coords] == [w, ctx.add(w, 1)]


def test_fq_part_must_be_well_defined():
    ctx = get_field(2, 2)
    S = catalog.prod(2, 2)
    with pytest.raises(InvalidScheme):
        BOperator(S, {}, fq_part=[ctx.omega, 1])


def test_operator_json_round_trip(twdual):
    data = twdual.to_json()
    back = operator_from_json(twdual.scheme, data)
    assert back.to_json() == data
    assert apply(back, "t1^3") == apply(twdual, "t1^3")
