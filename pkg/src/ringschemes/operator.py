"""B-operators: ring maps d: K -> B(K) with first coordinate the identity.

An operator is stored by its values on the generators t_i of
K = F_q(t_1, ..., t_m).  Everything else is forced by the homomorphism laws:
sums go to scheme sums, products to scheme products, p-th powers through the
scheme Frobenius formula, and quotients through :func:`invert_unit`.

Points of B(K) are :class:`~ringschemes.scheme.SchemePoint` objects whose
coordinates are :class:`~ringschemes.arith.RatFunc` values.  Iterates nest
these points.
"""
from functools import lru_cache

from .arith.parse import parse_ratfunc
from .arith.poly import MultiPoly, VarId
from .arith.ratfunc import RatFunc
from .errors import (
    DepthExceeded,
    InvalidScheme,
    NonInvertible,
    NotNilpotentKernel,
    UnsupportedImageShape,
    ZeroLeadingCoordinate,
)
from .scheme.checks import check_kernel_nilpotent
from .scheme.core import SchemePoint

DEFAULT_DEPTH = 4


@lru_cache(maxsize=None)
def _kernel_nilpotent(S):
    return check_kernel_nilpotent(S)


def _as_ratfunc(ctx, x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, MultiPoly):
        return RatFunc(x)
    if isinstance(x, str):
        return parse_ratfunc(ctx, x)
    if isinstance(x, int):
        return RatFunc.const(ctx, ctx.embed_int(x))
    raise TypeError(f"cannot read {x!r} as an element of K")


class Evaluator:
    """Homomorphic evaluation from variable images into B(K).

    ``images`` maps every variable that may occur to a SchemePoint with
    RatFunc coordinates; ``coeff_point`` maps an F_q constant to its image
    (None means the default iota).
    """

    def __init__(self, scheme, images, coeff_point=None):
        self.scheme = scheme
        self.ctx = scheme.ctx
        self.images = images
        self.coeff_point = coeff_point
        self._powers = {}
        self._monos = {}
        self._zero = SchemePoint(scheme, [RatFunc.const(self.ctx, 0)] * scheme.e)

    def _var_power(self, v, e):
        key = (v, e)
        out = self._powers.get(key)
        if out is None:
            base = self.images.get(v)
            if base is None:
                raise ValueError(f"no operator value for variable {v.name()}")
            out = base if e == 1 else base.pow(e)
            self._powers[key] = out
        return out

    def _monomial(self, mono):
        out = self._monos.get(mono)
        if out is None:
            out = None
            for v, e in mono:
                f = self._var_power(v, e)
                out = f if out is None else out * f
            if out is None:
                out = self._zero.one()
            self._monos[mono] = out
        return out

    def poly(self, f):
        result = self._zero
        p = self.ctx.p
        for mono, c in f.terms.items():
            img = self._monomial(mono)
            if self.coeff_point is not None and c >= p:
                term = self.coeff_point(c) * img
            else:
                term = img.scale(c)
            result = result + term
        return result

    def ratfunc(self, f):
        num = self.poly(f.num)
        if f.is_poly():
            return num
        try:
            inv = invert_unit(self.scheme, self.poly(f.den))
        except (NotNilpotentKernel, ZeroLeadingCoordinate) as err:
            raise NonInvertible(
                "denominator image is not invertible", reason=err.kind, denominator=str(f.den)
            ) from None
        return num * inv


class BOperator:
    def __init__(self, scheme, values=None, fq_part=None, check=True):
        self.scheme = scheme
        self.ctx = scheme.ctx
        self.values = {}
        for v, coords in (values or {}).items():
            coords = tuple(_as_ratfunc(self.ctx, x) for x in coords)
            if len(coords) != scheme.e:
                raise ValueError(f"value of {v.name()} needs {scheme.e} coordinates")
            self.values[v] = SchemePoint(scheme, coords)
        self.fq_part = None if fq_part is None else tuple(fq_part)
        if check:
            self._validate()
        self._coeff_cache = {}
        self.evaluator = Evaluator(
            scheme, self.values, self._coeff_point if self.fq_part is not None else None
        )

    @classmethod
    def zero_operator(cls, scheme, gens=()):
        """The structure map iota: every generator goes to iota(t)."""
        ctx = scheme.ctx
        values = {}
        for v in gens:
            values[v] = SchemePoint.iota(scheme, RatFunc(MultiPoly.var(ctx, v))).coords
        return cls(scheme, values)

    @property
    def gens(self):
        return tuple(sorted(self.values))

    def _validate(self):
        ctx = self.ctx
        for v, pt in self.values.items():
            if pt.coords[0] != RatFunc(MultiPoly.var(ctx, v)):
                raise InvalidScheme(
                    f"first coordinate of the value of {v.name()} must be {v.name()}",
                    axiom="operator_projection",
                )
        if self.fq_part is not None:
            S = self.scheme
            theta = self.fq_part
            if len(theta) != S.e or theta[0] != ctx.omega:
                raise InvalidScheme("F_q part must have first coordinate w", axiom="operator_projection")
            acc = (0,) * S.e
            power = S.unit_values()
            for c in ctx.modulus:
                if c:
                    acc = tuple(ctx.add(a, ctx.mul(c, b)) for a, b in zip(acc, power))
                power = S.mul_values(power, theta)
            if any(acc):
                raise InvalidScheme(
                    "minimal polynomial does not vanish at the F_q part", axiom="operator_well_defined"
                )

    def _coeff_point(self, c):
        out = self._coeff_cache.get(c)
        if out is None:
            S = self.scheme
            ctx = self.ctx
            acc = (0,) * S.e
            power = S.unit_values()
            for digit in ctx.digits(c):
                if digit:
                    acc = tuple(ctx.add(a, ctx.mul(digit, b)) for a, b in zip(acc, power))
                power = S.mul_values(power, self.fq_part)
            out = SchemePoint(S, [RatFunc.const(ctx, a) for a in acc])
            self._coeff_cache[c] = out
        return out

    def to_json(self):
        out = {
            "base": {"q": self.ctx.q, "gens": [v.name() for v in self.gens]},
            "values": {v.name(): [str(x) for x in self.values[v].coords] for v in self.gens},
        }
        if self.fq_part is not None:
            out["fq_part"] = [self.ctx.digits(x) for x in self.fq_part]
        return out


def apply(op, f):
    """The point op(f) of B(K)."""
    f = _as_ratfunc(op.ctx, f)
    return op.evaluator.ratfunc(f)


def invert_unit(S, a):
    """Inverse of a point with nonzero first coordinate, by a finite geometric series."""
    a1 = a.coords[0]
    if a1.is_zero():
        raise ZeroLeadingCoordinate("first coordinate is zero")
    if not _kernel_nilpotent(S):
        raise NotNilpotentKernel("kernel of the projection is not nilpotent")
    u = SchemePoint.iota(S, a1.inverse())
    kappa = a - SchemePoint.iota(S, a1)
    w = -(u * kappa)
    total = a.one()
    term = total
    for _ in range(S.e - 1):
        term = term * w
        if term.is_zero():
            break
        total = total + term
    result = u * total
    if not (a * result == a.one()):
        raise NonInvertible("geometric series did not produce an inverse")
    return result


def is_constant(op, f):
    f = _as_ratfunc(op.ctx, f)
    return apply(op, f) == SchemePoint.iota(op.scheme, f)


def _map_leaves(point, fn):
    if isinstance(point.coords[0], SchemePoint):
        return SchemePoint(point.scheme, [_map_leaves(x, fn) for x in point.coords])
    return SchemePoint(point.scheme, [fn(x) for x in point.coords])


def iterate(op, f, i, depth=DEFAULT_DEPTH):
    """The i-th iterate: apply op to every leaf of the previous iterate."""
    if i < 1:
        raise ValueError("iterate needs i >= 1")
    if i > depth:
        raise DepthExceeded(f"iteration depth {i} exceeds the cap {depth}", depth=depth, requested=i)
    point = apply(op, f)
    for _ in range(i - 1):
        point = _map_leaves(point, lambda x: apply(op, x))
    return point


def nesting_level(point):
    level = 0
    x = point
    while isinstance(x, SchemePoint):
        level += 1
        x = x.coords[0]
    return level


def nested_generic(S, level, offset=0):
    """Generic point of B^(level) with flat variables x_{offset+1}, ..."""
    if level == 1:
        return S.generic_point(offset)
    block = S.e ** (level - 1)
    return SchemePoint(S, [nested_generic(S, level - 1, offset + a * block) for a in range(S.e)])


@lru_cache(maxsize=None)
def frobenius_image_pattern(S, level=1):
    """Which flat coordinates of the Frobenius image of B^(level) vanish identically.

    Returns a tuple of booleans (True = identically zero) after checking that
    every other coordinate is a single monomial in its own variable.
    """
    generic = nested_generic(S, level)
    image = generic.pow_by_mul(S.ctx.p).flatten()
    pattern = []
    seen = set()
    for i, f in enumerate(image):
        if f.is_zero():
            pattern.append(True)
            continue
        if len(f.terms) != 1:
            raise UnsupportedImageShape("Frobenius image coordinate is not a monomial", coordinate=i + 1, value=str(f))
        (mono,) = f.terms
        if len(mono) != 1 or mono[0][0] in seen:
            raise UnsupportedImageShape(
                "Frobenius image coordinates do not use distinct single variables",
                coordinate=i + 1,
                value=str(f),
            )
        seen.add(mono[0][0])
        pattern.append(False)
    return tuple(pattern)


def frobenius_image_member(S, a, level=None):
    """Is a in the image of the scheme Frobenius over the algebraic closure?

    Decided by the zero pattern alone, which is exact once every nonzero
    coordinate of the image is a monomial in its own variable.
    """
    if isinstance(a, SchemePoint):
        if level is None:
            level = nesting_level(a)
        coords = a.flatten()
    else:
        coords = list(a)
        if level is None:
            level = 1
    pattern = frobenius_image_pattern(S, level)
    if len(coords) != len(pattern):
        raise ValueError("point arity does not match the composed scheme")
    return all(x.is_zero() for x, zero in zip(coords, pattern) if zero)


def operator_from_json(scheme, data):
    ctx = scheme.ctx
    values = {}
    for name, coords in (data.get("values") or {}).items():
        v = _parse_gen(name)
        values[v] = [_as_ratfunc(ctx, c) for c in coords]
    for name in (data.get("base") or {}).get("gens", []):
        v = _parse_gen(name)
        if v not in values:
            values[v] = SchemePoint.iota(scheme, RatFunc(MultiPoly.var(ctx, v))).coords
    fq_part = data.get("fq_part")
    if fq_part is not None:
        fq_part = [ctx.from_digits(x) if isinstance(x, list) else ctx.embed_int(x) for x in fq_part]
    return BOperator(scheme, values, fq_part)


def _parse_gen(name):
    from .arith.parse import parse_var

    v = parse_var(name)
    if not isinstance(v, VarId):
        raise ValueError(name)
    return v
