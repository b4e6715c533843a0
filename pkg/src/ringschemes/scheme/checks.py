"""Symbolic verification of the ring-scheme axioms and of morphisms."""
from dataclasses import dataclass, field

from ..arith.poly import MultiPoly, VarId
from ..errors import InvalidScheme
from .core import SchemePoint

CHECK_ORDER = (
    "projection",
    "iota_projection",
    "commutativity",
    "associativity",
    "distributivity",
    "unit",
    "iota_multiplicativity",
)


@dataclass
class CheckResult:
    name: str
    ok: bool
    coordinate: int = None
    witness: str = None
    note: str = None

    def to_json(self):
        out = {"name": self.name, "ok": self.ok}
        if self.coordinate is not None:
            out["coordinate"] = self.coordinate
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note is not None:
            out["note"] = self.note
        return out


@dataclass
class VerificationReport:
    checks: list = field(default_factory=list)

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    @property
    def first_failure(self):
        return next((c for c in self.checks if not c.ok), None)

    def to_json(self):
        out = {"ok": self.ok, "checks": [c.to_json() for c in self.checks]}
        fail = self.first_failure
        if fail is not None:
            out["failure"] = fail.to_json()
        return out

    def raise_if_failed(self):
        fail = self.first_failure
        if fail is not None:
            details = {"axiom": fail.name}
            if fail.coordinate is not None:
                details["coordinate"] = fail.coordinate
            if fail.witness is not None:
                details["witness"] = fail.witness
            raise InvalidScheme(f"scheme fails {fail.name}", **details)


def _compare(name, left, right):
    """Compare coordinate tuples; witness is the leading term of the difference."""
    for i, (a, b) in enumerate(zip(left, right)):
        diff = a - b
        if not diff.is_zero():
            mono, c = diff.leading_term()
            witness = str(MultiPoly(diff.ctx, {mono: c}, _trusted=True))
            return CheckResult(name, False, coordinate=i + 1, witness=witness)
    return CheckResult(name, True)


def _projection_check(S):
    first = S.mult[0]
    ok = len(first) == 1 and (first[0].j, first[0].k, first[0].r, first[0].s, first[0].c) == (0, 0, 0, 0, 1)
    if ok:
        return CheckResult("projection", True)
    witness = " + ".join(m.describe(S.ctx) for m in first) or "0"
    return CheckResult("projection", False, coordinate=1, witness=witness)


def _iota_projection_check(S):
    first = [t for t in S.iota.terms if t[1] == 0]
    if first == [(1, 0, 0, 0)]:
        return CheckResult("iota_projection", True)
    x = MultiPoly.var(S.ctx, VarId(1))
    img = SchemePoint.iota(S, x).coords[0]
    return CheckResult("iota_projection", False, coordinate=1, witness=str(img - x))


def _commutativity_check(S):
    for i, monos in enumerate(S.mult):
        mine = {(m.j, m.k, m.r, m.s): m.c for m in monos}
        swapped = {(m.k, m.j, m.s, m.r): m.c for m in monos}
        if mine != swapped:
            X, Y = S.generic_point(0), S.generic_point(S.e)
            return _compare("commutativity", (X * Y).coords, (Y * X).coords)
    return CheckResult("commutativity", True)


def verify_scheme(S):
    """Check every ring-scheme law symbolically and report each result."""
    report = VerificationReport()
    report.checks.append(_projection_check(S))
    report.checks.append(_iota_projection_check(S))
    report.checks.append(_commutativity_check(S))
    X, Y, Z = S.generic_point(0), S.generic_point(S.e), S.generic_point(2 * S.e)
    report.checks.append(_compare("associativity", ((X * Y) * Z).coords, (X * (Y * Z)).coords))
    report.checks.append(
        CheckResult("distributivity", True, note="structural: every coordinate is biadditive")
    )
    one = SchemePoint.iota(S, MultiPoly.const(S.ctx, 1))
    report.checks.append(_compare("unit", (one * Y).coords, Y.coords))
    a = MultiPoly.var(S.ctx, VarId(1))
    b = MultiPoly.var(S.ctx, VarId(2))
    left = SchemePoint.iota(S, a) * SchemePoint.iota(S, b)
    right = SchemePoint.iota(S, a * b)
    report.checks.append(_compare("iota_multiplicativity", left.coords, right.coords))
    return report


def check_kernel_nilpotent(S):
    """True when the product of e generic kernel points vanishes."""
    ctx = S.ctx
    e = S.e
    zero = MultiPoly.const(ctx, 0)
    prod = None
    for t in range(e):
        pt = SchemePoint(
            S, [zero] + [MultiPoly.var(ctx, VarId(t * e + i + 1)) for i in range(1, e)]
        )
        prod = pt if prod is None else prod * pt
        if prod.is_zero():
            return True
    return prod.is_zero()


def check_assumption2(S):
    """True when the scheme Frobenius kills the generic kernel point."""
    ctx = S.ctx
    zero = MultiPoly.const(ctx, 0)
    pt = SchemePoint(S, [zero] + [MultiPoly.var(ctx, VarId(i + 1)) for i in range(1, S.e)])
    return pt.pow_by_mul(ctx.p).is_zero()


@dataclass
class MorphismReport:
    multiplicative: CheckResult
    unital: CheckResult
    over_pi: bool

    @property
    def ok(self):
        return self.multiplicative.ok and self.unital.ok

    def to_json(self):
        return {
            "ok": self.ok,
            "over_pi": self.over_pi,
            "checks": [self.multiplicative.to_json(), self.unital.to_json()],
        }


def verify_morphism(A, B, phi):
    """Check that the additive map phi: A -> B is a ring-scheme morphism."""
    if A.e != B.e or phi.source != A.e or phi.target != B.e:
        raise ValueError("dimension mismatch between schemes and map")
    X, Y = A.generic_point(0), A.generic_point(A.e)
    left = phi.apply((X * Y).coords)
    right = (SchemePoint(B, phi.apply(X.coords)) * SchemePoint(B, phi.apply(Y.coords))).coords
    mult = _compare("multiplicative", left, right)
    unit_a = SchemePoint.iota(A, MultiPoly.const(A.ctx, 1))
    unit_b = SchemePoint.iota(B, MultiPoly.const(B.ctx, 1))
    unital = _compare("unital", phi.apply(unit_a.coords), unit_b.coords)
    over_pi = phi.coordinate(0) == [(1, 0, 0)]
    return MorphismReport(mult, unital, over_pi)
