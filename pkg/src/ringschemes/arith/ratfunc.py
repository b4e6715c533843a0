"""Rational functions num/den over F_q.

No multivariate gcd is taken.  Normalization only cancels the common monomial
content and scales the denominator to leading coefficient 1, so equality has
to go through cross-multiplication.
"""
from ..errors import DivisionByZero
from .poly import MultiPoly


def _monomial_content(*polys):
    """Largest monomial dividing every term of every poly."""
    common = None
    for f in polys:
        for m in f.terms:
            exps = dict(m)
            if common is None:
                common = exps
            else:
                common = {v: min(e, exps[v]) for v, e in common.items() if v in exps}
            if not common:
                return {}
    return common or {}


def _divide_monomial(f, content):
    out = {}
    for m, c in f.terms.items():
        new = tuple((v, e - content.get(v, 0)) for v, e in m if e != content.get(v, 0))
        out[new] = c
    return MultiPoly(f.ctx, out, _trusted=True)


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _normalized=False):
        if den is None:
            self.num = num
            self.den = num.one()
            return
        if _normalized:
            self.num, self.den = num, den
            return
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if num.is_zero():
            self.num, self.den = num, den.one()
            return
        if den.is_constant():
            self.num = num.scale(num.ctx.inv(den.constant_value()))
            self.den = den.one()
            return
        content = _monomial_content(num, den)
        if content:
            num = _divide_monomial(num, content)
            den = _divide_monomial(den, content)
        lc = den.leading_coeff()
        if lc != 1:
            inv = den.ctx.inv(lc)
            num, den = num.scale(inv), den.scale(inv)
        if len(num.terms) == len(den.terms) and set(num.terms) == set(den.terms):
            # num = c * den is the one cancellation that is cheap to spot
            c = num.leading_coeff()
            if num == den.scale(c):
                num, den = MultiPoly.const(num.ctx, c), den.one()
        self.num, self.den = num, den

    @property
    def ctx(self):
        return self.num.ctx

    @classmethod
    def const(cls, ctx, c):
        return cls(MultiPoly.const(ctx, c))

    def is_poly(self):
        return self.den.is_constant()

    # --- element protocol ---------------------------------------------
    def zero(self):
        return RatFunc(self.num.zero())

    def one(self):
        return RatFunc(self.num.one())

    def constant(self, c):
        return RatFunc(MultiPoly.const(self.ctx, c))

    def is_zero(self):
        return self.num.is_zero()

    def scale(self, c):
        if c == 1:
            return self
        if c == 0:
            return self.zero()
        return RatFunc(self.num.scale(c), self.den, _normalized=True)

    def frob_pow(self, r):
        if r == 0:
            return self
        return RatFunc(self.num.frob_pow(r), self.den.frob_pow(r), _normalized=True)

    # --- field operations ---------------------------------------------
    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, MultiPoly):
            return RatFunc(other)
        if isinstance(other, int):
            return RatFunc(MultiPoly.const(self.ctx, self.ctx.embed_int(other)))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _normalized=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return self.zero()
        if self.is_poly() and other.is_poly():
            return RatFunc(self.num * other.num)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise DivisionByZero("inverse of the zero fraction")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def pow(self, n):
        if n < 0:
            return self.inverse().pow(-n)
        if self.is_poly():
            return RatFunc(self.num.pow(n))
        return RatFunc(self.num.pow(n), self.den.pow(n), _normalized=True)

    def __pow__(self, n):
        return self.pow(n)

    # --- substitution and evaluation ----------------------------------
    def subs(self, images):
        num = self.num.subs(images)
        den = self.den.subs(images)
        if not isinstance(num, RatFunc):
            num = RatFunc(num)
        if not isinstance(den, RatFunc):
            den = RatFunc(den)
        return num / den

    def evaluate(self, point):
        d = self.den.evaluate(point)
        if d == 0:
            raise DivisionByZero("denominator vanishes at the point")
        return self.ctx.div(self.num.evaluate(point), d)

    def variables(self):
        return tuple(sorted(set(self.num.variables()) | set(self.den.variables())))

    # --- identity and display -----------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, MultiPoly)):
            other = self._coerce(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def __str__(self):
        if self.is_poly():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFunc({self})"

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, ctx, data):
        if isinstance(data, list):
            return cls(MultiPoly.from_json(ctx, data))
        return cls(MultiPoly.from_json(ctx, data["num"]), MultiPoly.from_json(ctx, data["den"]))
