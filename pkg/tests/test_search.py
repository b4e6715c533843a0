import random

import pytest

from oracles import freeze, random_poly, zeros_by_evaluation
from ringschemes import search
from ringschemes._kernel_py import common_zeros as python_kernel
from ringschemes.arith import VarId, get_field, parse_poly
from ringschemes.errors import BudgetExceeded, Unsupported
from ringschemes.search import (
    CompiledSystem,
    count_zeros,
    find_zeros,
    first_zero,
    reduce_exponent,
)

VARS = [VarId(1), VarId(2), VarId(3)]

try:
    from ringschemes._kernel import common_zeros as compiled_kernel
except ImportError:  # extension not built
    compiled_kernel = None

needs_compiled = pytest.mark.skipif(compiled_kernel is None, reason="compiled kernel not built")


def test_backend_is_named():
    assert search.BACKEND in ("compiled", "python")


@pytest.mark.parametrize("p,d", [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)])
def test_reduce_exponent_preserves_values(p, d):
    ctx = get_field(p, d)
    q = ctx.q
    for e in range(1, 3 * q):
        r = reduce_exponent(e, q)
        assert 1 <= r <= q - 1
        for x in ctx.elements():
            assert ctx.pow(x, e) == ctx.pow(x, r)


def test_zeros_match_plain_evaluation(field, rng):
    for _ in range(20):
        polys = [random_poly(field, rng, VARS[:2], max_exp=5) for _ in range(2)]
        found = find_zeros(field, polys, VARS[:2])
        assert [freeze(p) for p in found] == [freeze(p) for p in zeros_by_evaluation(field, polys, VARS[:2])]
        assert count_zeros(field, polys, VARS[:2]) == len(found)


@needs_compiled
@pytest.mark.parametrize("p,d", [(2, 1), (3, 1), (2, 2), (5, 1), (3, 2)])
def test_compiled_and_python_kernels_agree(p, d):
    ctx = get_field(p, d)
    rng = random.Random(p * 31 + d)
    for _ in range(15):
        polys = [random_poly(ctx, rng, VARS, max_exp=6) for _ in range(rng.randint(1, 3))]
        system = CompiledSystem(ctx, polys, VARS)
        for kwargs in ({}, {"max_hits": 1}, {"count_only": True}):
            assert system.run(kernel=compiled_kernel, **kwargs) == system.run(kernel=python_kernel, **kwargs)


def test_first_zero_is_first_in_odometer_order():
    ctx = get_field(3)
    f = parse_poly(ctx, "x1 + x2 - 1")
    assert first_zero(ctx, [f], VARS[:2]) == {VARS[0]: 0, VARS[1]: 1}
    zeros = find_zeros(ctx, [f], VARS[:2])
    assert [(z[VARS[0]], z[VARS[1]]) for z in zeros] == [(0, 1), (1, 0), (2, 2)]


def test_no_zero():
    ctx = get_field(5)
    assert first_zero(ctx, [parse_poly(ctx, "x1^4 + 1")], VARS[:1]) is None


def test_empty_system_counts_every_point():
    ctx = get_field(2, 2)
    assert count_zeros(ctx, [], VARS[:2]) == 16


def test_unknown_variable_rejected():
    ctx = get_field(3)
    with pytest.raises(ValueError):
        find_zeros(ctx, [parse_poly(ctx, "x3")], VARS[:2])


def test_budget_exceeded():
    ctx = get_field(5)
    with pytest.raises(BudgetExceeded) as info:
        find_zeros(ctx, [], VARS, budget=100)
    assert info.value.details["points"] == 125


def test_large_fields_unsupported():
    ctx = get_field(257)
    with pytest.raises(Unsupported):
        find_zeros(ctx, [parse_poly(ctx, "x1")], VARS[:1])
