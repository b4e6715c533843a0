"""Building new coordinate schemes: tensor forms, twists, transports, composites."""
from ..arith.poly import MultiPoly, VarId
from ..errors import NonPolynomial
from .core import (
    AdditivePoly,
    BiadditiveMonomial,
    CoordinateScheme,
    SchemePoint,
    additive_terms,
    biadditive_monomials,
)


def tensor_scheme(ctx, table, unit=None):
    """B_tensor of a finite algebra given by structure constants.

    ``table[i][j]`` is the coordinate vector of ``e_i * e_j``.  The first
    coordinate must be a ring map to k for the result to be a coordinate
    scheme; with ``unit=None`` the first basis vector is taken as the unit.
    """
    e = len(table)
    if unit is None:
        unit = [1] + [0] * (e - 1)
    mult = [[] for _ in range(e)]
    for i in range(e):
        for j in range(e):
            for l, c in enumerate(table[i][j]):
                if c:
                    mult[l].append(BiadditiveMonomial(i, j, 0, 0, c))
    iota = [(u, i, 0) for i, u in enumerate(unit) if u]
    return CoordinateScheme.build(ctx, e, mult, iota)


def truncated_poly_scheme(ctx, n):
    """B_tensor of k[X]/(X^n) in the basis 1, X, ..., X^(n-1)."""
    table = [[[1 if l == i + j else 0 for l in range(n)] for j in range(n)] for i in range(n)]
    return tensor_scheme(ctx, table)


def dual_numbers(ctx):
    return truncated_poly_scheme(ctx, 2)


def split_pair_scheme(ctx):
    """k x k in the basis (1,1), (0,1): the first coordinate is the first factor."""
    table = [
        [[1, 0], [0, 1]],
        [[0, 1], [0, 1]],
    ]
    return tensor_scheme(ctx, table)


def product_scheme(ctx):
    """S_k x S_k with the diagonal embedding."""
    table = [
        [[1, 0], [0, 0]],
        [[0, 0], [0, 1]],
    ]
    return tensor_scheme(ctx, table, unit=[1, 1])


def split_dual_scheme(ctx):
    """k x k[X]/(X^2) in the basis (1;1), (0;1), (0;X)."""
    table = [
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        [[0, 1, 0], [0, 1, 0], [0, 0, 1]],
        [[0, 0, 1], [0, 0, 1], [0, 0, 0]],
    ]
    return tensor_scheme(ctx, table)


def _extract(S_ctx, e, point, iota_point):
    polys = point.flatten() if isinstance(point, SchemePoint) else list(point)
    mult = [biadditive_monomials(S_ctx, f, e) for f in polys]
    iota_polys = iota_point.flatten()
    iota_terms = []
    for i, f in enumerate(iota_polys):
        for c, _, r in additive_terms(S_ctx, f, 1, coordinate=i):
            iota_terms.append((c, i, r))
    return CoordinateScheme.build(S_ctx, e, mult, iota_terms)


def twist(S, n):
    """Frobenius twist: x*y = xT yT + xF yP + xP yF + xP yP.

    Here xT = iota(x_1), xP = x - xT and xF = iota(x_1^(p^n)).  The general
    iota is used, so schemes with a diagonal embedding twist correctly.
    """
    if n < 0:
        raise ValueError("twist exponent must be >= 0")
    X = S.generic_point(0)
    Y = S.generic_point(S.e)

    def parts(P):
        first = P.coords[0]
        tee = SchemePoint.iota(S, first)
        return tee, P - tee, SchemePoint.iota(S, first.frob_pow(n))

    xT, xP, xF = parts(X)
    yT, yP, yF = parts(Y)
    prod = xT * yT + xF * yP + xP * yF + xP * yP
    mult = [biadditive_monomials(S.ctx, f, S.e) for f in prod.coords]
    return CoordinateScheme(S.ctx, S.e, tuple(mult), S.iota)


def transport(S, exps):
    """Conjugate the multiplication by (id, fr^n_2, ..., fr^n_e).

    Raises NonPolynomial at the first monomial whose shifted Frobenius level
    would be negative.
    """
    exps = tuple(int(n) for n in exps)
    if len(exps) != S.e:
        raise ValueError(f"need {S.e} exponents, got {len(exps)}")
    if exps[0] != 0:
        raise ValueError("the first transport exponent must be 0")
    if any(n < 0 for n in exps):
        raise ValueError("transport exponents must be >= 0")
    ctx = S.ctx
    mult = []
    for i, monos in enumerate(S.mult):
        ni = exps[i]
        out = []
        for m in monos:
            r = m.r + ni - exps[m.j]
            s = m.s + ni - exps[m.k]
            if r < 0 or s < 0:
                raise NonPolynomial(
                    "transported multiplication is not polynomial",
                    coordinate=i + 1,
                    monomial=m.to_json(ctx),
                    text=m.describe(ctx),
                    level=min(r, s),
                )
            out.append(BiadditiveMonomial(m.j, m.k, r, s, ctx.frob(m.c, ni)))
        mult.append(out)
    iota = [(ctx.frob(c, exps[i]), i, r + exps[i]) for c, i, _, r in S.iota.terms]
    return CoordinateScheme.build(ctx, S.e, mult, iota)


def nested_generic_point(outer, inner, offset=0):
    """Generic point of outer(inner(R)) with flat variables x_{offset+1}..."""
    ctx = outer.ctx
    ei = inner.e
    return SchemePoint(
        outer,
        [
            SchemePoint(inner, [MultiPoly.var(ctx, VarId(offset + a * ei + b + 1)) for b in range(ei)])
            for a in range(outer.e)
        ],
    )


def compose(outer, inner):
    """The scheme R -> outer(inner(R)), flattened to e_outer * e_inner coordinates.

    Coordinate (a, b) -- inner coordinate b of outer coordinate a -- becomes
    flat index a * e_inner + b.
    """
    if outer.ctx != inner.ctx:
        raise ValueError("schemes over different fields")
    ctx = outer.ctx
    E = outer.e * inner.e
    X = nested_generic_point(outer, inner, 0)
    Y = nested_generic_point(outer, inner, E)
    prod = X * Y
    x = MultiPoly.var(ctx, VarId(1))
    iota_point = SchemePoint.iota(outer, SchemePoint.iota(inner, x))
    return _extract(ctx, E, prod, iota_point)


def compose_self(S):
    return compose(S, S)


def compose_power(S, n):
    """B^(n): S composed with itself n times (n >= 1)."""
    result = S
    for _ in range(n - 1):
        result = compose(S, result)
    return result


def additive_map(ctx, source, target, terms):
    return AdditivePoly.build(ctx, source, target, terms)
