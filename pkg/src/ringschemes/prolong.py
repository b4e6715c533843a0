"""Prolongations, fibers, the equalizer scheme and the axiom conditions.

Variables of a variety V are ``VarId(j, ())``.  Its prolongation lives on the
layer-1 variables ``VarId(j, (i,))`` for i = 1..e, the universal operator
sending x_j to (x_j_1, ..., x_j_e).  Prolonging a subvariety W of the
prolongation adds one more layer: ``VarId(j, (i, i2))``.

Why generator images suffice: if I = (g_1, ..., g_s), an element h*g of I is
sent to d(h)*d(g), and every monomial of the product law in coordinate l has
the form c * X_a^(p^r) * Y_b^(p^s).  With Y = d(g) each such monomial carries
a p-power of a coordinate of d(g), so every coordinate of d(h*g) lies in the
ideal generated by the coordinates of the d(g_k).  Sums are coordinatewise.
"""
from dataclasses import dataclass, field

from .arith.parse import parse_poly, parse_ratfunc, parse_var
from .arith.poly import MultiPoly, VarId, reduce_by_monic
from .arith.ratfunc import RatFunc
from .errors import NotOnVariety, NotSubschemeOfProlongation
from .groebner import buchberger, is_dominant
from .operator import Evaluator, apply
from .scheme.core import SchemePoint
from .search import DEFAULT_BUDGET, find_zeros, first_zero

MAX_LAYERS = 2


@dataclass(frozen=True)
class IdealPresentation:
    vars: tuple
    gens: tuple

    @classmethod
    def build(cls, ctx, variables, gens):
        variables = tuple(sorted(parse_var(v) if isinstance(v, str) else v for v in variables))
        polys = tuple(parse_poly(ctx, g) if isinstance(g, str) else g for g in gens)
        known = set(variables)
        for g in polys:
            extra = [v for v in g.variables() if not v.is_param and v not in known]
            if extra:
                raise ValueError(f"generator {g} uses variables outside the ambient space: {extra}")
        return cls(variables, polys)

    def to_json(self):
        return {"vars": [v.to_json() for v in self.vars], "gens": [g.to_json() for g in self.gens]}

    def describe(self):
        return {"vars": [v.name() for v in self.vars], "gens": [str(g) for g in self.gens]}

    @classmethod
    def from_json(cls, ctx, data):
        variables = [
            parse_var(v) if isinstance(v, str) else VarId.from_json(v) for v in data["vars"]
        ]
        gens = [
            parse_poly(ctx, g) if isinstance(g, str) else MultiPoly.from_json(ctx, g)
            for g in data.get("gens", [])
        ]
        return cls.build(ctx, variables, gens)


@dataclass(frozen=True)
class AlgebraMap:
    source: tuple
    target: tuple
    images: tuple  # (VarId, MultiPoly) pairs in source order

    def apply(self, f):
        return f.subs(dict(self.images))

    def image_of(self, v):
        return dict(self.images)[v]

    def to_json(self):
        return {
            "source": [v.name() for v in self.source],
            "target": [v.name() for v in self.target],
            "images": {v.name(): str(f) for v, f in self.images},
        }


def _rename_map(ctx, source, rule):
    images = tuple((v, MultiPoly.var(ctx, rule(v))) for v in source)
    target = tuple(sorted(rule(v) for v in source))
    return AlgebraMap(tuple(source), target, images)


def layered_vars(variables, e):
    return tuple(sorted(v.layered(i) for v in variables for i in range(1, e + 1)))


def _check_depth(variables):
    for v in variables:
        if len(v.path) >= MAX_LAYERS:
            raise ValueError(f"{v.name()}: at most {MAX_LAYERS} prolongation layers are supported")


def universal_evaluator(op, variables):
    """Evaluator for the universal operator: x_j -> (x_j_1, ..., x_j_e)."""
    S = op.scheme
    ctx = S.ctx
    images = dict(op.values)
    for v in variables:
        images[v] = SchemePoint(S, [RatFunc(MultiPoly.var(ctx, v.layered(i))) for i in range(1, S.e + 1)])
    return Evaluator(S, images, op.evaluator.coeff_point)


def prolongation_ideal(op, V):
    """Ideal of the prolongation of V: coordinates of the universal image of each generator."""
    _check_depth(V.vars)
    ev = universal_evaluator(op, V.vars)
    gens = []
    seen = set()
    for g in V.gens:
        for coord in ev.poly(g).coords:
            num = coord.num  # the denominator only involves K and is a unit
            if not num.is_zero() and num not in seen:
                seen.add(num)
                gens.append(num)
    return IdealPresentation(layered_vars(V.vars, op.scheme.e), tuple(gens))


def pi_delta(ctx, V):
    """x_j -> x_j_1: the projection from the prolongation back to V."""
    return _rename_map(ctx, V.vars, lambda v: v.layered(1))


@dataclass
class PointProlongation:
    point: dict
    member: bool
    failing: list = field(default_factory=list)

    def to_json(self):
        return {
            "point": {v.name(): str(x) for v, x in sorted(self.point.items())},
            "member": self.member,
            "failing": self.failing,
        }


def _as_point(ctx, a):
    out = {}
    for v, x in a.items():
        v = parse_var(v) if isinstance(v, str) else v
        if isinstance(x, str):
            x = parse_ratfunc(ctx, x)
        elif isinstance(x, int):
            x = RatFunc.const(ctx, ctx.embed_int(x))
        elif isinstance(x, MultiPoly):
            x = RatFunc(x)
        out[v] = x
    return out


def _vanishes(g, point):
    value = g.subs(point)
    return value.is_zero()


def point_prolong(op, V, a):
    """The K-point d_V(a) of the prolongation of V, with a membership report."""
    ctx = op.ctx
    a = _as_point(ctx, a)
    missing = [v for v in V.vars if v not in a]
    if missing:
        raise NotOnVariety("point lacks coordinates", missing=[v.name() for v in missing])
    for g in V.gens:
        if not _vanishes(g, a):
            raise NotOnVariety("point does not satisfy the equations of V", generator=str(g))
    out = {}
    for v in V.vars:
        img = apply(op, a[v])
        for i, x in enumerate(img.coords, start=1):
            out[v.layered(i)] = x
    tau = prolongation_ideal(op, V)
    failing = [str(g) for g in tau.gens if not _vanishes(g, out)]
    return PointProlongation(out, not failing, failing)


def fiber_ideal(tau, a, ext_var=None, minpoly=None):
    """Substitute the layer-1 coordinates by a; keep the deeper layers free.

    With ``minpoly`` (monic in ``ext_var``) the point lives in K[u]/(minpoly)
    and each equation is reduced modulo it.
    """
    layer1 = {}
    for v, x in a.items():
        layer1[v.layered(1)] = x
    ambient = tuple(v for v in tau.vars if v not in layer1)
    gens = []
    for g in tau.gens:
        value = g.subs(layer1)
        num = value.num if isinstance(value, RatFunc) else value
        if minpoly is not None:
            num = reduce_by_monic(num, ext_var, minpoly)
        if not num.is_zero() and num not in gens:
            gens.append(num)
    return IdealPresentation(ambient, tuple(gens))


def rational_root(f, k, p=None):
    """f^(1/p^k) inside the rational function field, or None if it does not exist.

    A fraction N/D is a p-th power iff the polynomial N*D^(p-1) is, and a
    polynomial is a p-th power iff every exponent is divisible by p.
    """
    if not isinstance(f, RatFunc):
        f = RatFunc(f)
    p = f.ctx.p
    for _ in range(k):
        root = (f.num * f.den.pow(p - 1)).pth_root()
        if root is None:
            return None
        f = RatFunc(root, f.den)
    return f


def power_obstructions(fiber, substitution=None):
    """Equations s^(p^k) = c of the fiber whose right side has no p^k-th root.

    ``substitution`` rewrites K-parameters first, for example t1 -> t3^2 to
    present K(u) with u^2 = t1 as the rational function field F_q(t3, t2).
    Returns one certificate per obstructed equation.
    """
    out = []
    ctx = None
    for g in fiber.gens:
        ctx = g.ctx
        fiber_vars = [v for v in g.variables() if v in fiber.vars]
        if len(fiber_vars) != 1:
            continue
        (s,) = fiber_vars
        split = g.coefficients_in(s)
        if len(split) != 2 or 0 not in split:
            continue
        (deg,) = [d for d in split if d]
        lead, const = split[deg], split[0]
        if not lead.is_constant():
            continue
        k = 0
        n = deg
        while n % ctx.p == 0:
            n //= ctx.p
            k += 1
        if n != 1:
            continue
        c = RatFunc(-const).scale(ctx.inv(lead.constant_value()))
        if substitution:
            c = c.subs(substitution)
        if rational_root(c, k) is None:
            out.append({"generator": str(g), "variable": s.name(), "power": deg, "value": str(c)})
    return out


@dataclass
class Equalizer:
    ideal: IdealPresentation
    tau_w: IdealPresentation
    compat: tuple
    pi_e: AlgebraMap
    via_operator: AlgebraMap
    via_inclusion: AlgebraMap

    def to_json(self):
        return {
            "ideal": self.ideal.describe(),
            "compat": [str(g) for g in self.compat],
            "pi_e": self.pi_e.to_json(),
            "maps": [self.via_operator.to_json(), self.via_inclusion.to_json()],
        }


def _subset_witness(tau_v, W):
    G = buchberger(list(W.gens), variables=W.vars)
    for g in tau_v.gens:
        if not G.contains(g):
            return g
    return None


def equalizer_ideal(op, V, W):
    """Subscheme of the prolongation of W where the two operators on K[V] agree."""
    S = op.scheme
    ctx = S.ctx
    e = S.e
    tau_v = prolongation_ideal(op, V)
    if set(W.vars) != set(tau_v.vars):
        raise NotSubschemeOfProlongation(
            "W must live in the prolongation space of V",
            expected=[v.name() for v in tau_v.vars],
        )
    witness = _subset_witness(tau_v, W)
    if witness is not None:
        raise NotSubschemeOfProlongation(
            "an equation of the prolongation does not vanish on W", generator=str(witness)
        )
    tau_w = prolongation_ideal(op, W)
    compat = []
    for v in V.vars:
        for i in range(2, e + 1):
            compat.append(
                MultiPoly.var(ctx, v.layered(i).layered(1)) - MultiPoly.var(ctx, v.layered(1).layered(i))
            )
    gens = list(tau_w.gens)
    for g in compat:
        if g not in gens:
            gens.append(g)
    ideal = IdealPresentation(tau_w.vars, tuple(gens))
    pi_e = _rename_map(ctx, W.vars, lambda v: v.layered(1))
    via_operator = _rename_map(ctx, tau_v.vars, lambda v: VarId(v.j, (1,) + v.path))
    via_inclusion = _rename_map(ctx, tau_v.vars, lambda v: v.layered(1))
    return Equalizer(ideal, tau_w, tuple(compat), pi_e, via_operator, via_inclusion)


@dataclass
class AxiomReport:
    subset: bool
    w_dom_v: bool
    e_dom_w: bool
    witnesses: dict = field(default_factory=dict)

    def to_json(self):
        out = {"subset": self.subset, "w_dom_v": self.w_dom_v, "e_dom_w": self.e_dom_w}
        if self.witnesses:
            out["witnesses"] = self.witnesses
        return out


def _renamed(ideal, rule):
    mapping = {v: rule(v) for v in ideal.vars}
    gens = tuple(g.rename(mapping) for g in ideal.gens)
    return IdealPresentation(tuple(sorted(mapping.values())), gens)


def axiom_conditions(op, V, W, **budget):
    """Check W inside the prolongation of V, W -> V dominant, E -> W dominant."""
    tau_v = prolongation_ideal(op, V)
    witnesses = {}
    witness = _subset_witness(tau_v, W)
    subset = witness is None
    if not subset:
        witnesses["subset"] = str(witness)
    V1 = _renamed(V, lambda v: v.layered(1))
    w_dom_v = is_dominant(V1, W, **budget)
    e_dom_w = False
    if subset:
        E = equalizer_ideal(op, V, W)
        W1 = _renamed(W, lambda v: v.layered(1))
        e_dom_w = is_dominant(W1, E.ideal, **budget)
    return AxiomReport(subset, w_dom_v, e_dom_w, witnesses)


def operator_image_polys(op, V):
    """Coordinates of d(x_j) as polynomials in x_j, for operators on F_q itself."""
    S = op.scheme
    ctx = S.ctx
    if op.fq_part is not None or op.values:
        return None
    out = {}
    for v in V.vars:
        pt = SchemePoint.iota(S, MultiPoly.var(ctx, v))
        for i, f in enumerate(pt.coords, start=1):
            out[v.layered(i)] = f
    return out


def witness_search(op, V, W, budget=DEFAULT_BUDGET):
    """First F_q-point x of V (odometer order) whose prolongation lands in W."""
    ctx = op.ctx
    images = operator_image_polys(op, V)
    if images is not None:
        system = list(V.gens) + [h.subs(images) for h in W.gens]
        return first_zero(ctx, system, V.vars, budget)
    for pt in find_zeros(ctx, list(V.gens), V.vars, budget):
        prolonged = point_prolong(op, V, pt)
        if all(_vanishes(h, prolonged.point) for h in W.gens):
            return pt
    return None
