"""Brute-force search for common zeros of polynomial systems over F_q.

The inner loop runs in the compiled ``_kernel`` extension when it is
available and in ``_kernel_py`` otherwise.  Set ``RINGSCHEMES_PURE_PYTHON=1``
to force the fallback.  ``BACKEND`` names the kernel in use.
"""
import os
from array import array

from .errors import BudgetExceeded, Unsupported

if os.environ.get("RINGSCHEMES_PURE_PYTHON") == "1":
    from ._kernel_py import common_zeros as _common_zeros

    BACKEND = "python"
else:
    try:
        from ._kernel import common_zeros as _common_zeros

        BACKEND = "compiled"
    except ImportError:
        from ._kernel_py import common_zeros as _common_zeros

        BACKEND = "python"

DEFAULT_BUDGET = 10 ** 6
MAX_TABLE_Q = 256

_TABLES = {}


def field_tables(ctx):
    """Flattened add, mul and power tables for F_q (cached per field)."""
    tables = _TABLES.get(ctx)
    if tables is None:
        q = ctx.q
        if q > MAX_TABLE_Q:
            raise Unsupported(f"enumeration tables need q <= {MAX_TABLE_Q}", q=q)
        add = array("i", [ctx.add(a, b) for a in range(q) for b in range(q)])
        mul = array("i", [ctx.mul(a, b) for a in range(q) for b in range(q)])
        powt = array("i", [ctx.pow(x, k) if (x or k) else 1 for x in range(q) for k in range(q)])
        tables = (add, mul, powt)
        _TABLES[ctx] = tables
    return tables


def reduce_exponent(e, q):
    """Exponent in 1..q-1 with x^e == x^reduced for every x in F_q (e >= 1)."""
    return (e - 1) % (q - 1) + 1


class CompiledSystem:
    """A polynomial system flattened into int arrays for the kernels."""

    def __init__(self, ctx, polys, variables):
        self.ctx = ctx
        self.variables = tuple(variables)
        index = {v: i for i, v in enumerate(self.variables)}
        q = ctx.q
        poly_start, term_coeff, term_start, fac_var, fac_exp = [0], [], [0], [], []
        for f in polys:
            for mono, c in f.terms.items():
                term_coeff.append(c)
                for v, e in mono:
                    if v not in index:
                        raise ValueError(f"variable {v.name()} is not in the search space")
                    fac_var.append(index[v])
                    fac_exp.append(reduce_exponent(e, q))
                term_start.append(len(fac_var))
            poly_start.append(len(term_coeff))
        self.arrays = tuple(
            array("i", data) for data in (poly_start, term_coeff, term_start, fac_var, fac_exp)
        )

    def run(self, max_hits=0, count_only=False, kernel=None):
        kernel = kernel or _common_zeros
        add, mul, powt = field_tables(self.ctx)
        return kernel(self.ctx.q, len(self.variables), add, mul, powt, *self.arrays,
                      max_hits=max_hits, count_only=count_only)


def _check_budget(ctx, nvars, budget):
    size = ctx.q ** nvars
    if size > budget:
        raise BudgetExceeded(
            f"searching {size} points exceeds the budget {budget}", points=size, budget=budget
        )


def find_zeros(ctx, polys, variables, budget=DEFAULT_BUDGET, first_only=False):
    """All common zeros (as dicts VarId -> int) in enumeration order."""
    variables = tuple(variables)
    _check_budget(ctx, len(variables), budget)
    system = CompiledSystem(ctx, polys, variables)
    _, hits = system.run(max_hits=1 if first_only else 0)
    return [dict(zip(variables, pt)) for pt in hits]


def count_zeros(ctx, polys, variables, budget=DEFAULT_BUDGET):
    variables = tuple(variables)
    _check_budget(ctx, len(variables), budget)
    count, _ = CompiledSystem(ctx, polys, variables).run(count_only=True)
    return count


def first_zero(ctx, polys, variables, budget=DEFAULT_BUDGET):
    hits = find_zeros(ctx, polys, variables, budget, first_only=True)
    return hits[0] if hits else None
