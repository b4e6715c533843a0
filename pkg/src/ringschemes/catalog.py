"""Named example schemes, operators and varieties used by fixtures and tests."""
from .arith.field import get_field
from .arith.poly import param
from .operator import BOperator
from .prolong import IdealPresentation
from .scheme import (
    dual_numbers,
    product_scheme,
    split_dual_scheme,
    split_pair_scheme,
    transport,
    truncated_poly_scheme,
    twist,
)


def dual(p=3, d=1):
    return dual_numbers(get_field(p, d))


def dual_twisted(p=3, n=1, d=1):
    return twist(dual(p, d), n)


def kx3(p=2):
    return truncated_poly_scheme(get_field(p), 3)


def twistex(m=1, n=2, p=2):
    """k[X]/(X^3) transported by (0, m, n); polynomial exactly when m <= n."""
    return transport(kx3(p), (0, m, n))


def kx3_twisted(p=2):
    """Uniform twist of k[X]/(X^3): local, non-reduced, exponents (0, 1, 1)."""
    return transport(kx3(p), (0, 1, 1))


def prod(p=2, d=1):
    return product_scheme(get_field(p, d))


def prod_twisted(p=2, n=1):
    return twist(prod(p), n)


def split_pair(p=2, d=1):
    return split_pair_scheme(get_field(p, d))


def split_dual(p=2, d=1):
    return split_dual_scheme(get_field(p, d))


SCHEMES = {
    "dual": dual,
    "dual_twisted": dual_twisted,
    "kx3": kx3,
    "twistex1": twistex,
    "kx3_twisted": kx3_twisted,
    "prod": prod,
    "prod_twisted": prod_twisted,
    "split_pair": split_pair,
    "split_dual": split_dual,
}


def closing_operator():
    """K = F_2(t1, t2) on the transported k[X]/(X^3) with d(t1) = (t1, 0, t2)."""
    S = twistex(1, 2, 2)
    t1, t2 = param(1), param(2)
    return BOperator(S, {t1: ("t1", "0", "t2"), t2: ("t2", "0", "0")})


def closing_variety():
    """W = V(u^2 - t1) in the affine line with coordinate x1 = u."""
    return IdealPresentation.build(get_field(2), ["x1"], ["x1^2 - t1"])


def affine_space(ctx, n):
    return IdealPresentation.build(ctx, [f"x{j}" for j in range(1, n + 1)], [])


def parabola(ctx):
    """V(y - x^2) with x = x1 and y = x2."""
    return IdealPresentation.build(ctx, ["x1", "x2"], ["x2 - x1^2"])
