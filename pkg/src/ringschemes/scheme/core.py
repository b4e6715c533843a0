"""Coordinate ring schemes: multiplication tables, points and symbolic powers.

A coordinate scheme lives on affine e-space with coordinatewise addition.  Its
multiplication is given by e biadditive polynomials F_1..F_e, each a sum of
monomials ``c * X_j^(p^r) * Y_k^(p^s)``, and the scalar embedding iota is an
additive map from the line.  Indices are 0-based in code and 1-based in JSON.

Points are :class:`SchemePoint` objects whose coordinates can be anything that
implements the element protocol (``+ - *``, ``scale``, ``frob_pow``,
``zero``, ``constant``, ``is_zero``): field elements, polynomials, fractions,
or scheme points themselves.  The last case is what makes composite schemes
B(B(R)) work without extra code.
"""
from dataclasses import dataclass
from functools import cached_property

from ..arith.poly import MultiPoly, VarId
from ..errors import InvalidScheme


def p_log(n, p):
    """r with n == p^r, or None."""
    if n < 1:
        return None
    r = 0
    while n % p == 0:
        n //= p
        r += 1
    return r if n == 1 else None


@dataclass(frozen=True, order=True)
class BiadditiveMonomial:
    """c * X_j^(p^r) * Y_k^(p^s) with 0-based coordinate indices."""

    j: int
    k: int
    r: int
    s: int
    c: int

    def to_json(self, ctx):
        return {"c": ctx.digits(self.c), "j": self.j + 1, "r": self.r, "k": self.k + 1, "s": self.s}

    def describe(self, ctx):
        p = ctx.p
        coeff = "" if self.c == 1 else ctx.format_elem(self.c) + "*"
        xs = f"x{self.j + 1}" + (f"^{p ** self.r}" if self.r else "")
        ys = f"y{self.k + 1}" + (f"^{p ** self.s}" if self.s else "")
        return f"{coeff}{xs}*{ys}"


def _canonical_monomials(ctx, monos):
    merged = {}
    for m in monos:
        key = (m.j, m.k, m.r, m.s)
        merged[key] = ctx.add(merged.get(key, 0), m.c)
    return tuple(
        BiadditiveMonomial(j, k, r, s, c) for (j, k, r, s), c in sorted(merged.items()) if c
    )


@dataclass(frozen=True)
class AdditivePoly:
    """Additive map G_a^source -> G_a^target.

    ``terms`` holds ``(c, i, j, r)``: coordinate i of the output gets
    ``c * x_j^(p^r)``.
    """

    source: int
    target: int
    terms: tuple

    @classmethod
    def build(cls, ctx, source, target, terms):
        merged = {}
        for c, i, j, r in terms:
            if not (0 <= i < target and 0 <= j < source and r >= 0):
                raise InvalidScheme("additive map term out of range", axiom="structure")
            merged[(i, j, r)] = ctx.add(merged.get((i, j, r), 0), c)
        return cls(source, target, tuple((c, i, j, r) for (i, j, r), c in sorted(merged.items()) if c))

    @classmethod
    def identity(cls, e):
        return cls(e, e, tuple((1, i, i, 0) for i in range(e)))

    def apply(self, coords):
        zero = coords[0].zero()
        out = [zero] * self.target
        for c, i, j, r in self.terms:
            out[i] = out[i] + coords[j].frob_pow(r).scale(c)
        return out

    def coordinate(self, i):
        return [(c, j, r) for c, ii, j, r in self.terms if ii == i]

    def to_skew_matrix(self, ctx):
        from ..skew import SkewMatrix, SkewPoly

        grid = [[{} for _ in range(self.source)] for _ in range(self.target)]
        for c, i, j, r in self.terms:
            grid[i][j][r] = c
        return SkewMatrix(
            ctx,
            [
                [SkewPoly(ctx, [cell.get(r, 0) for r in range(max(cell, default=-1) + 1)]) for cell in row]
                for row in grid
            ],
        )

    @classmethod
    def from_skew_matrix(cls, ctx, M):
        terms = []
        for i, row in enumerate(M.entries):
            for j, s in enumerate(row):
                for r, c in enumerate(s.coeffs):
                    if c:
                        terms.append((c, i, j, r))
        return cls.build(ctx, M.cols, M.rows, terms)

    def to_json(self, ctx):
        return [
            {"c": ctx.digits(c), "i": i + 1, "j": j + 1, "r": r} for c, i, j, r in self.terms
        ]


@dataclass(frozen=True)
class CoordinateScheme:
    ctx: object
    e: int
    mult: tuple
    iota: AdditivePoly

    @classmethod
    def build(cls, ctx, e, mult, iota_terms):
        """Construct from per-coordinate monomial lists and (c, i, r) iota terms."""
        if e < 1:
            raise InvalidScheme("dimension must be at least 1", axiom="structure")
        if len(mult) != e:
            raise InvalidScheme(
                f"expected {e} multiplication coordinates, got {len(mult)}", axiom="structure"
            )
        coords = []
        for monos in mult:
            monos = list(monos)
            for m in monos:
                if not (0 <= m.j < e and 0 <= m.k < e):
                    raise InvalidScheme("monomial index out of range", axiom="structure")
                if m.r < 0 or m.s < 0:
                    raise InvalidScheme("negative Frobenius level", axiom="structure")
                if not m.c:
                    raise InvalidScheme("zero monomial coefficient", axiom="structure")
            coords.append(_canonical_monomials(ctx, monos))
        iota = AdditivePoly.build(ctx, 1, e, [(c, i, 0, r) for c, i, r in iota_terms])
        return cls(ctx, e, tuple(coords), iota)

    @classmethod
    def from_polys(cls, ctx, e, polys, iota):
        """Build from biadditive MultiPolys in X = x_1..x_e, Y = x_{e+1}..x_{2e}."""
        mult = [biadditive_monomials(ctx, f, e) for f in polys]
        return cls.build(ctx, e, mult, [(c, i, r) for c, i, _, r in iota.terms])

    # --- derived data -------------------------------------------------
    @cached_property
    def frobenius_terms(self):
        """Per coordinate, the (c, j, r) terms of the p-th power map."""
        powered = scheme_pow_symbolic(self, self.ctx.p)
        out = []
        for i, f in enumerate(powered):
            out.append(additive_terms(self.ctx, f, self.e, coordinate=i))
        return tuple(out)

    def point(self, coords):
        return SchemePoint(self, tuple(coords))

    def generic_point(self, offset=0):
        ctx = self.ctx
        return SchemePoint(self, tuple(MultiPoly.var(ctx, VarId(offset + i + 1)) for i in range(self.e)))

    def iota_of(self, x):
        return SchemePoint.iota(self, x)

    def unit_values(self):
        """iota(1) as a tuple of field ints."""
        out = [0] * self.e
        for c, i, _, _ in self.iota.terms:
            out[i] = self.ctx.add(out[i], c)
        return tuple(out)

    def mul_values(self, a, b):
        """Product of two F_q-points given as int tuples."""
        ctx = self.ctx
        add, mul, frob = ctx.add, ctx.mul, ctx.frob
        out = []
        for monos in self.mult:
            acc = 0
            for m in monos:
                x, y = a[m.j], b[m.k]
                if x and y:
                    acc = add(acc, mul(m.c, mul(frob(x, m.r), frob(y, m.s))))
            out.append(acc)
        return tuple(out)

    def iota_values(self, x):
        ctx = self.ctx
        out = [0] * self.e
        for c, i, _, r in self.iota.terms:
            out[i] = ctx.add(out[i], ctx.mul(c, ctx.frob(x, r)))
        return tuple(out)

    def to_json(self):
        ctx = self.ctx
        out = ctx.to_json()
        out["e"] = self.e
        out["mult"] = [[m.to_json(ctx) for m in monos] for monos in self.mult]
        out["iota"] = [{"c": ctx.digits(c), "i": i + 1, "r": r} for c, i, _, r in self.iota.terms]
        return out

    def describe(self):
        coords = []
        for monos in self.mult:
            coords.append(" + ".join(m.describe(self.ctx) for m in monos) or "0")
        return "(" + ", ".join(coords) + ")"


class SchemePoint:
    """A point of a coordinate scheme with coordinates in some ring."""

    __slots__ = ("scheme", "coords")

    def __init__(self, scheme, coords):
        if len(coords) != scheme.e:
            raise ValueError(f"point has {len(coords)} coordinates, scheme needs {scheme.e}")
        self.scheme = scheme
        self.coords = tuple(coords)

    @classmethod
    def iota(cls, scheme, x):
        zero = x.zero()
        out = [zero] * scheme.e
        for c, i, _, r in scheme.iota.terms:
            out[i] = out[i] + x.frob_pow(r).scale(c)
        return cls(scheme, out)

    def _new(self, coords):
        return SchemePoint(self.scheme, coords)

    # element protocol
    def zero(self):
        z = self.coords[0].zero()
        return self._new([z] * self.scheme.e)

    def one(self):
        return self.constant(1)

    def constant(self, c):
        return SchemePoint.iota(self.scheme, self.coords[0].constant(c))

    def is_zero(self):
        return all(x.is_zero() for x in self.coords)

    def scale(self, c):
        if c == 1:
            return self
        if self.scheme.ctx.in_prime_field(c):
            return self._new([x.scale(c) for x in self.coords])
        return self.constant(c) * self

    def frob_pow(self, r):
        point = self
        for _ in range(r):
            point = point._frob_once()
        return point

    def _frob_once(self):
        terms = self.scheme.frobenius_terms
        zero = self.coords[0].zero()
        out = []
        for coord_terms in terms:
            acc = zero
            for c, j, r in coord_terms:
                acc = acc + self.coords[j].frob_pow(r).scale(c)
            out.append(acc)
        return self._new(out)

    def __add__(self, other):
        return self._new([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        return self._new([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return self._new([-a for a in self.coords])

    def __mul__(self, other):
        scheme = self.scheme
        xs, ys = self.coords, other.coords
        fx, fy = {}, {}
        zero = xs[0].zero()
        out = []
        for monos in scheme.mult:
            acc = None
            for m in monos:
                u = fx.get((m.j, m.r))
                if u is None:
                    u = fx[(m.j, m.r)] = xs[m.j].frob_pow(m.r)
                if u.is_zero():
                    continue
                v = fy.get((m.k, m.s))
                if v is None:
                    v = fy[(m.k, m.s)] = ys[m.k].frob_pow(m.s)
                if v.is_zero():
                    continue
                prod = (u * v).scale(m.c)
                acc = prod if acc is None else acc + prod
            out.append(zero if acc is None else acc)
        return self._new(out)

    def pow(self, n):
        """n-th power using base-p digits, so p-power steps use the Frobenius formula."""
        if n < 1:
            if n == 0:
                return self.one()
            raise ValueError("negative power of a scheme point")
        result = None
        p = self.scheme.ctx.p
        i = 0
        while n:
            digit = n % p
            if digit:
                base = self.frob_pow(i)
                for _ in range(digit):
                    result = base if result is None else result * base
            n //= p
            i += 1
        return result

    def pow_by_mul(self, n):
        """n-th power by repeated squaring with plain scheme multiplication."""
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def flatten(self):
        out = []
        for x in self.coords:
            if isinstance(x, SchemePoint):
                out.extend(x.flatten())
            else:
                out.append(x)
        return out

    def __eq__(self, other):
        if not isinstance(other, SchemePoint):
            return NotImplemented
        return self.scheme == other.scheme and all(a == b for a, b in zip(self.coords, other.coords))

    __hash__ = None

    def __repr__(self):
        return "(" + ", ".join(str(x) for x in self.coords) + ")"

    __str__ = __repr__


def scheme_mul_points(S, a, b):
    """Multiply two points given as coordinate sequences (ints or ring elements)."""
    if a and isinstance(a[0], int):
        return S.mul_values(tuple(a), tuple(b))
    return (SchemePoint(S, a) * SchemePoint(S, b)).coords


def scheme_pow_symbolic(S, m):
    """The m-fold product of a generic point, as e MultiPolys in x_1..x_e."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return S.generic_point().pow_by_mul(m).coords


def biadditive_monomials(ctx, f, e, offset=0):
    """Read a biadditive polynomial in X = x_{o+1..o+e}, Y = x_{o+e+1..o+2e}."""
    p = ctx.p
    out = []
    for mono, c in f.terms.items():
        if len(mono) != 2:
            raise InvalidScheme("multiplication is not biadditive", axiom="biadditivity", monomial=str(MultiPoly(ctx, {mono: c})))
        (v1, e1), (v2, e2) = mono
        j, k = v1.j - offset - 1, v2.j - offset - e - 1
        r, s = p_log(e1, p), p_log(e2, p)
        if not (0 <= j < e and 0 <= k < e) or r is None or s is None or v1.path or v2.path:
            raise InvalidScheme("multiplication is not biadditive", axiom="biadditivity", monomial=str(MultiPoly(ctx, {mono: c})))
        out.append(BiadditiveMonomial(j, k, r, s, c))
    return _canonical_monomials(ctx, out)


def additive_terms(ctx, f, e, coordinate=None, offset=0):
    """Read an additive polynomial in x_{o+1..o+e} as (c, j, r) terms."""
    p = ctx.p
    out = []
    for mono, c in f.terms.items():
        ok = len(mono) == 1
        if ok:
            ((v, exp),) = mono
            j, r = v.j - offset - 1, p_log(exp, p)
            ok = 0 <= j < e and r is not None and not v.path
        if not ok:
            raise InvalidScheme(
                "map is not additive",
                axiom="additivity",
                coordinate=None if coordinate is None else coordinate + 1,
                monomial=str(MultiPoly(ctx, {mono: c})),
            )
        out.append((c, j, r))
    return tuple(sorted(out, key=lambda t: (t[1], t[2])))


def scheme_from_json(data):
    from ..arith.field import get_field

    try:
        p = int(data["p"])
        fld = data.get("field") or {"deg": 1}
        d = int(fld.get("deg", 1))
        modulus = fld.get("modulus")
        ctx = get_field(p, d, tuple(modulus) if modulus is not None else None)
        e = int(data["e"])

        def coeff(v):
            if isinstance(v, list):
                return ctx.from_digits(v)
            return ctx.embed_int(int(v))

        mult = [
            [
                BiadditiveMonomial(int(m["j"]) - 1, int(m["k"]) - 1, int(m["r"]), int(m["s"]), coeff(m["c"]))
                for m in monos
            ]
            for monos in data["mult"]
        ]
        iota = [(coeff(t["c"]), int(t["i"]) - 1, int(t["r"])) for t in data["iota"]]
    except (KeyError, TypeError, ValueError) as err:
        raise InvalidScheme(f"malformed scheme data: {err}", axiom="structure") from None
    return CoordinateScheme.build(ctx, e, mult, iota)
