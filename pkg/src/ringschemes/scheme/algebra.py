"""The finite k-algebra B(k) of a coordinate scheme.

B(k) is a k-vector space through iota: ``c . v = iota(c) * v``.  The standard
vectors eps_1..eps_e form a k-basis for this action, so structure constants
are stored in those coordinates.  Converting raw coordinates to basis
coordinates inverts ``a -> sum_i iota(a_i) * eps_i``, which is F_p-linear;
over a prime field the two coordinate systems agree.
"""
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations_with_replacement, product

from ..arith.field import get_field
from ..arith import linalg
from ..errors import Unsupported

DEFAULT_BUDGET = 10 ** 6


def _basis(e, i):
    return tuple(1 if t == i else 0 for t in range(e))


@dataclass(frozen=True)
class FiniteAlgebra:
    scheme: object
    table: tuple  # table[i][j] = iota-basis coordinates of eps_i * eps_j
    unit: tuple

    @property
    def ctx(self):
        return self.scheme.ctx

    @property
    def e(self):
        return self.scheme.e

    def mul(self, a, b):
        """Multiply raw coordinate vectors."""
        return self.scheme.mul_values(a, b)

    def power(self, a, n):
        result = None
        for _ in range(n):
            result = a if result is None else self.mul(result, a)
        return result

    @cached_property
    def _theta_inverse(self):
        """F_p matrix sending raw coordinates (as digits) to basis coordinates."""
        S = self.scheme
        ctx = S.ctx
        p, d, e = ctx.p, ctx.d, S.e
        prime = get_field(p)
        columns = []
        for i in range(e):
            eps = _basis(e, i)
            for b in range(d):
                scalar = p ** b
                v = S.mul_values(S.iota_values(scalar), eps)
                columns.append([digit for x in v for digit in ctx.digits(x)])
        n = d * e
        matrix = [[columns[c][r] for c in range(n)] for r in range(n)]
        return linalg.inverse(prime, matrix)

    def to_basis(self, v):
        ctx = self.ctx
        prime = get_field(ctx.p)
        digits = [digit for x in v for digit in ctx.digits(x)]
        coords = linalg.mat_vec(prime, self._theta_inverse, digits)
        d = ctx.d
        return tuple(ctx.from_digits(coords[i * d:(i + 1) * d]) for i in range(self.e))

    def check_table(self):
        """Commutativity, associativity and unit law of the basis table."""
        e = self.e
        basis = [_basis(e, i) for i in range(e)]
        for a in basis:
            if self.mul(self.unit, a) != a:
                return False
            for b in basis:
                if self.mul(a, b) != self.mul(b, a):
                    return False
                for c in basis:
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                        return False
        return True

    def to_json(self):
        ctx = self.ctx
        return {
            "e": self.e,
            "table": [[[ctx.digits(x) for x in cell] for cell in row] for row in self.table],
            "unit": [ctx.digits(x) for x in self.unit],
        }


def finite_algebra(S):
    e = S.e
    alg = FiniteAlgebra(S, (), S.unit_values())
    table = tuple(
        tuple(alg.to_basis(S.mul_values(_basis(e, i), _basis(e, j))) for j in range(e))
        for i in range(e)
    )
    return FiniteAlgebra(S, table, S.unit_values())


def kernel_basis(A):
    return [_basis(A.e, i) for i in range(1, A.e)]


def is_local(A):
    """The kernel of the first projection is nilpotent (all e-fold products vanish)."""
    ker = kernel_basis(A)
    if not ker:
        return True
    zero = (0,) * A.e
    for combo in combinations_with_replacement(ker, A.e):
        prod = combo[0]
        for v in combo[1:]:
            prod = A.mul(prod, v)
            if prod == zero:
                break
        if prod != zero:
            return False
    return True


def assumption2_pointwise(A):
    """p-th powers of the kernel basis vanish, hence of the whole kernel."""
    zero = (0,) * A.e
    return all(A.power(v, A.ctx.p) == zero for v in kernel_basis(A))


def trace_form(A):
    ctx = A.ctx
    e = A.e
    traces = []
    for l in range(e):
        t = 0
        for m in range(e):
            t = ctx.add(t, A.table[l][m][m])
        traces.append(t)
    gram = []
    for i in range(e):
        row = []
        for j in range(e):
            acc = 0
            for l, c in enumerate(A.table[i][j]):
                if c:
                    acc = ctx.add(acc, ctx.mul(c, traces[l]))
            row.append(acc)
        gram.append(row)
    return gram


def is_separable(A):
    """Nondegenerate trace form."""
    return linalg.determinant(A.ctx, trace_form(A)) != 0


def _check_budget(A, budget):
    size = A.ctx.q ** A.e
    if size > budget:
        raise Unsupported(f"enumerating {size} points exceeds the budget {budget}", points=size, budget=budget)


def idempotents(A, budget=DEFAULT_BUDGET):
    _check_budget(A, budget)
    out = []
    for v in product(range(A.ctx.q), repeat=A.e):
        if A.mul(v, v) == v:
            out.append(v)
    return out


def nonzero_nilpotent_exists(A, budget=DEFAULT_BUDGET):
    _check_budget(A, budget)
    zero = (0,) * A.e
    for v in product(range(A.ctx.q), repeat=A.e):
        if v != zero and A.power(v, A.e) == zero:
            return True
    return False


def local_factor_count(A, budget=DEFAULT_BUDGET):
    """Number of local factors over F_q: idempotents come in 2^n."""
    count = len(idempotents(A, budget))
    n = count.bit_length() - 1
    if 1 << n != count:
        raise Unsupported("idempotent count is not a power of two")
    return n
