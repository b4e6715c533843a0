"""Sparse multivariate polynomials over F_q with layered variables.

A monomial is a tuple of ``(VarId, exponent)`` pairs sorted by ``VarId``; the
empty tuple is the constant monomial.  Exponents are Python ints, so the huge
Frobenius levels produced by transports are not a problem.

Variable order: ``VarId`` compares as the tuple ``(j, path)``, so parameters
(negative ``j``) come first, then ``x1`` with its layers, then ``x2``, etc.
The term order is graded reverse lexicographic with the smallest ``VarId``
as the largest variable.
"""
from typing import NamedTuple

from ..errors import DivisionByZero


class VarId(NamedTuple):
    j: int
    path: tuple = ()

    def layered(self, i):
        """The variable one prolongation layer deeper, coordinate i (1-based)."""
        return VarId(self.j, self.path + (i,))

    @property
    def is_param(self):
        return self.j < 0

    def name(self):
        if self.j < 0:
            base = f"t{-self.j}"
        else:
            base = f"x{self.j}"
        return base + "".join(f"_{i}" for i in self.path)

    def to_json(self):
        return [self.j, list(self.path)]

    @classmethod
    def from_json(cls, data):
        j, path = data
        return cls(int(j), tuple(int(i) for i in path))


def param(i):
    """The i-th parameter t_i of a rational function field K = F_q(t_1, ...)."""
    return VarId(-i, ())


def xvar(j, *path):
    return VarId(j, tuple(path))


def mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    out = []
    i = k = 0
    la, lb = len(a), len(b)
    while i < la and k < lb:
        va, ea = a[i]
        vb, eb = b[k]
        if va == vb:
            out.append((va, ea + eb))
            i += 1
            k += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[k])
            k += 1
    if i < la:
        out.extend(a[i:])
    if k < lb:
        out.extend(b[k:])
    return tuple(out)


def mono_degree(m):
    return sum(e for _, e in m)


def grevlex_key(m, variables):
    """Sort key for monomial m; larger key means larger in grevlex."""
    exps = dict(m)
    return (mono_degree(m), tuple(-exps.get(v, 0) for v in reversed(variables)))


def compare_monomials(a, b):
    """Return -1, 0 or 1 comparing monomials a and b in grevlex."""
    variables = sorted({v for v, _ in a} | {v for v, _ in b})
    ka, kb = grevlex_key(a, variables), grevlex_key(b, variables)
    return (ka > kb) - (ka < kb)


def _int_digits(n, p):
    out = []
    while n:
        out.append(n % p)
        n //= p
    return out


class MultiPoly:
    """Polynomial as a dict from monomial to nonzero field element (int)."""

    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx, terms=None, _trusted=False):
        self.ctx = ctx
        if terms is None:
            terms = {}
        elif not _trusted:
            terms = {m: c for m, c in terms.items() if c}
        self.terms = terms
        self._hash = None

    # --- constructors -------------------------------------------------
    @classmethod
    def const(cls, ctx, c):
        return cls(ctx, {(): c} if c else {}, _trusted=True)

    @classmethod
    def var(cls, ctx, v, exp=1, coeff=1):
        return cls(ctx, {((v, exp),): coeff} if coeff else {}, _trusted=True)

    @classmethod
    def monomial(cls, ctx, mono, coeff=1):
        return cls(ctx, {tuple(sorted(mono)): coeff} if coeff else {}, _trusted=True)

    # --- element protocol ---------------------------------------------
    def zero(self):
        return MultiPoly(self.ctx, {}, _trusted=True)

    def one(self):
        return MultiPoly.const(self.ctx, 1)

    def constant(self, c):
        return MultiPoly.const(self.ctx, c)

    def is_zero(self):
        return not self.terms

    def scale(self, c):
        if c == 1:
            return self
        if c == 0:
            return self.zero()
        mul = self.ctx.mul
        return MultiPoly(self.ctx, {m: mul(v, c) for m, v in self.terms.items()}, _trusted=True)

    def frob_pow(self, r):
        """self^(p^r) for r >= 0 (coefficientwise Frobenius, exponents times p^r)."""
        if r == 0:
            return self
        if r < 0:
            raise ValueError("use pth_root for inverse Frobenius on polynomials")
        ctx = self.ctx
        f = ctx.p ** r
        return MultiPoly(
            ctx,
            {tuple((v, e * f) for v, e in m): ctx.frob(c, r) for m, c in self.terms.items()},
            _trusted=True,
        )

    # --- ring operations ----------------------------------------------
    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, int):
            return MultiPoly.const(self.ctx, self.ctx.embed_int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        add = self.ctx.add
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                s = add(v, c)
                if s:
                    out[m] = s
                else:
                    del out[m]
        return MultiPoly(self.ctx, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ctx.neg
        return MultiPoly(self.ctx, {m: neg(c) for m, c in self.terms.items()}, _trusted=True)

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
        if not self.terms or not other.terms:
            return self.zero()
        ctx = self.ctx
        mul, add = ctx.mul, ctx.add
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                c = mul(c1, c2)
                v = out.get(m)
                if v is None:
                    out[m] = c
                else:
                    out[m] = add(v, c)
        return MultiPoly(ctx, out)

    __rmul__ = __mul__

    def pow(self, n):
        """self^n using base-p digits so that p-power steps are Frobenius maps."""
        if n < 0:
            raise ValueError("negative power of a polynomial")
        if n == 0:
            return self.one()
        if len(self.terms) == 1:
            ((m, c),) = self.terms.items()
            return MultiPoly(
                self.ctx, {tuple((v, e * n) for v, e in m): self.ctx.pow(c, n)}, _trusted=True
            )
        result = self.one()
        for i, digit in enumerate(_int_digits(n, self.ctx.p)):
            if digit:
                base = self.frob_pow(i)
                for _ in range(digit):
                    result = result * base
        return result

    def __pow__(self, n):
        return self.pow(n)

    def pth_root(self):
        """g with g^p == self, or None when some exponent is not divisible by p."""
        ctx = self.ctx
        p = ctx.p
        out = {}
        for m, c in self.terms.items():
            new = []
            for v, e in m:
                if e % p:
                    return None
                new.append((v, e // p))
            out[tuple(new)] = ctx.frob(c, -1)
        return MultiPoly(ctx, out, _trusted=True)

    # --- inspection ---------------------------------------------------
    def variables(self):
        return tuple(sorted({v for m in self.terms for v, _ in m}))

    def degree(self):
        return max((mono_degree(m) for m in self.terms), default=-1)

    def degree_in(self, v):
        return max((dict(m).get(v, 0) for m in self.terms), default=-1)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_value(self):
        return self.terms.get((), 0)

    def sorted_terms(self):
        """Terms in descending grevlex order."""
        variables = self.variables()
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0], variables), reverse=True)

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        variables = self.variables()
        return max(self.terms.items(), key=lambda t: grevlex_key(t[0], variables))

    def leading_coeff(self):
        return self.leading_term()[1]

    def monic(self):
        if not self.terms:
            return self
        return self.scale(self.ctx.inv(self.leading_coeff()))

    def coefficients_in(self, v):
        """Split as a polynomial in v: {exponent: coefficient polynomial}."""
        out = {}
        for m, c in self.terms.items():
            e = 0
            rest = []
            for w, k in m:
                if w == v:
                    e = k
                else:
                    rest.append((w, k))
            out.setdefault(e, {})[tuple(rest)] = c
        return {e: MultiPoly(self.ctx, t, _trusted=True) for e, t in out.items()}

    # --- substitution and evaluation ----------------------------------
    def subs(self, images):
        """Substitute variables by MultiPoly or RatFunc images.

        Variables without an image are kept.  The result is a RatFunc as soon
        as one of the images is.
        """
        from .ratfunc import RatFunc

        rational = any(isinstance(img, RatFunc) for img in images.values())
        ctx = self.ctx
        if rational:
            images = {v: (img if isinstance(img, RatFunc) else RatFunc(img)) for v, img in images.items()}
            result = RatFunc(self.zero())
        else:
            result = self.zero()
        cache = {}
        for m, c in self.terms.items():
            kept = []
            factors = []
            for v, e in m:
                img = images.get(v)
                if img is None:
                    kept.append((v, e))
                else:
                    key = (v, e)
                    powed = cache.get(key)
                    if powed is None:
                        powed = img.pow(e)
                        cache[key] = powed
                    factors.append(powed)
            term = MultiPoly(ctx, {tuple(kept): c}, _trusted=True)
            if rational:
                term = RatFunc(term)
            for f in factors:
                term = term * f
            result = result + term
        return result

    def evaluate(self, point):
        """Evaluate at a dict VarId -> field int; every variable must be bound."""
        ctx = self.ctx
        mul, add, fpow = ctx.mul, ctx.add, ctx.pow
        total = 0
        for m, c in self.terms.items():
            v = c
            for var, e in m:
                v = mul(v, fpow(point[var], e))
                if not v:
                    break
            total = add(total, v)
        return total

    def rename(self, mapping):
        """Rename variables through a dict VarId -> VarId (must stay injective)."""
        out = {}
        for m, c in self.terms.items():
            out[tuple(sorted((mapping.get(v, v), e) for v, e in m))] = c
        return MultiPoly(self.ctx, out, _trusted=True)

    # --- identity and display -----------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = self._coerce(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(v.name() + (f"^{e}" if e != 1 else "") for v, e in m)
            coeff = self.ctx.format_elem(c)
            if not mono:
                parts.append(coeff)
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{coeff}*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"MultiPoly({self})"

    def to_json(self):
        ctx = self.ctx
        return [
            {"vars": [[v.j, list(v.path), e] for v, e in m], "coeff": ctx.digits(c)}
            for m, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, ctx, data):
        terms = {}
        for item in data:
            mono = tuple(sorted((VarId(int(j), tuple(path)), int(e)) for j, path, e in item["vars"]))
            c = ctx.from_digits(item["coeff"])
            terms[mono] = ctx.add(terms.get(mono, 0), c)
        return cls(ctx, terms)


def poly_pth_root(f):
    """Return g with g^p == f, or None if f is not a p-th power termwise."""
    return f.pth_root()


def reduce_by_monic(f, v, m):
    """Remainder of f modulo m, viewing both as univariate in v (m monic in v)."""
    n = m.degree_in(v)
    if n < 1:
        raise DivisionByZero("modulus must have positive degree in the variable")
    split_m = m.coefficients_in(v)
    if split_m[n] != m.one():
        raise ValueError("modulus must be monic in the extension variable")
    while True:
        deg = f.degree_in(v)
        if deg < n:
            return f
        top = f.coefficients_in(v)[deg]
        shift = MultiPoly.var(f.ctx, v, deg - n) if deg > n else f.one()
        f = f - top * shift * m
