"""Classification of coordinate schemes by the matrix Theta over k[fr]."""
from ..arith.poly import MultiPoly, VarId
from ..errors import InvalidScheme, NotClassifiable
from ..skew import ZERO, SkewMatrix, SkewPoly, diagonalize, is_frobenius_power
from .algebra import (
    DEFAULT_BUDGET,
    assumption2_pointwise,
    finite_algebra,
    is_local,
    is_separable,
    local_factor_count,
    nonzero_nilpotent_exists,
)
from .checks import check_assumption2
from .core import SchemePoint, p_log

YES_ASSUMPTION2 = "YES_ASSUMPTION2"
YES_SEPARABLE = "YES_SEPARABLE"
NO_PRODUCT_CASE = "NO_PRODUCT_CASE"
NO_UNIFORM_TWIST = "NO_UNIFORM_TWIST"
UNKNOWN_OPEN = "UNKNOWN_OPEN"


def _as_skew(ctx, f, coordinate):
    coeffs = {}
    for mono, c in f.terms.items():
        r = None
        if len(mono) == 1:
            r = p_log(mono[0][1], ctx.p)
        if r is None:
            raise InvalidScheme(
                "scalar action is not additive in the scalar",
                axiom="theta_extraction",
                coordinate=coordinate + 1,
            )
        coeffs[r] = c
    return SkewPoly(ctx, [coeffs.get(r, 0) for r in range(max(coeffs, default=-1) + 1)])


def theta_matrix(S):
    """Column i is r -> m(iota(r), eps_i), one skew polynomial per output coordinate."""
    ctx = S.ctx
    e = S.e
    r = MultiPoly.var(ctx, VarId(1))
    iota_r = SchemePoint.iota(S, r)
    columns = []
    for i in range(e):
        eps = SchemePoint(S, [MultiPoly.const(ctx, 1 if t == i else 0) for t in range(e)])
        prod = iota_r * eps
        column = [_as_skew(ctx, f, l) for l, f in enumerate(prod.coords)]
        if [s.eval(1) for s in column] != [1 if t == i else 0 for t in range(e)]:
            raise InvalidScheme(
                "Theta at r = 1 is not the identity (unit law fails)",
                axiom="theta_identity",
                coordinate=i + 1,
            )
        columns.append(column)
    return SkewMatrix(ctx, [[columns[j][i] for j in range(e)] for i in range(e)])


def classify(S):
    """Exponents (n_1, ..., n_e) with Theta diagonalizing to the fr^(n_i)."""
    diag = diagonalize(theta_matrix(S))
    exps = []
    for i, s in enumerate(diag.D.diagonal_entries()):
        n = is_frobenius_power(s)
        if n is None:
            raise NotClassifiable(
                "diagonal entry is not a Frobenius power",
                reason="not_frobenius_power",
                coordinate=i + 1,
                entry=str(s),
            )
        if n == ZERO:
            raise NotClassifiable("zero diagonal entry", reason="zero_entry", coordinate=i + 1)
        exps.append(n)
    if exps[0] != 0:
        raise NotClassifiable("first exponent is not 0", reason="first_exponent", coordinate=1)
    return tuple(exps)


def is_tensor_form(S):
    return all(n == 0 for n in classify(S))


def companionability_report(S, budget=DEFAULT_BUDGET):
    """Verdict plus the data it was derived from."""
    report = {"assumption2": check_assumption2(S)}
    if report["assumption2"]:
        report["verdict"] = YES_ASSUMPTION2
        return report
    A = finite_algebra(S)
    report["separable"] = is_separable(A)
    if report["separable"]:
        report["verdict"] = YES_SEPARABLE
        return report
    report["local"] = is_local(A)
    if not report["local"]:
        report["factors"] = local_factor_count(A, budget)
        report["reduced"] = not nonzero_nilpotent_exists(A, budget)
        if report["factors"] > 1 and not report["reduced"]:
            report["verdict"] = NO_PRODUCT_CASE
        else:
            report["verdict"] = UNKNOWN_OPEN
        return report
    exps = classify(S)
    report["exponents"] = list(exps)
    report["assumption2_pointwise"] = assumption2_pointwise(A)
    nonzero = {n for n in exps if n}
    if len(nonzero) <= 1 and not report["assumption2_pointwise"]:
        report["verdict"] = NO_UNIFORM_TWIST
    else:
        report["verdict"] = UNKNOWN_OPEN
    return report


def predict_companionability(S, budget=DEFAULT_BUDGET):
    return companionability_report(S, budget)["verdict"]
