"""The ring k[fr] of additive (Frobenius) polynomials and matrices over it.

A :class:`SkewPoly` with coefficients ``(a_0, ..., a_n)`` stands for
``a_0 X + a_1 X^p + ... + a_n X^(p^n)``; multiplication is composition, so
``(a X^(p^i)) * (b X^(p^j)) = a b^(p^i) X^(p^(i+j))``.  The degree used by
the Euclidean algorithms is the Frobenius level ``n``.
"""
from dataclasses import dataclass, field

from .errors import DivisionByZero

ZERO = "ZERO"


class SkewPoly:
    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.ctx = ctx
        self.coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, ctx, c, n):
        """c * X^(p^n)."""
        return cls(ctx, [0] * n + [c])

    @classmethod
    def identity(cls, ctx):
        return cls(ctx, [1])

    @classmethod
    def zero_poly(cls, ctx):
        return cls(ctx, [])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        add = self.ctx.add
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return SkewPoly(self.ctx, [add(x, y) for x, y in zip(a, b)])

    def __neg__(self):
        return SkewPoly(self.ctx, [self.ctx.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Composition self(other(X))."""
        ctx = self.ctx
        if not self.coeffs or not other.coeffs:
            return SkewPoly(ctx)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = ctx.add(out[i + j], ctx.mul(a, ctx.frob(b, i)))
        return SkewPoly(ctx, out)

    def scale_left(self, c):
        """(cX) * self."""
        return SkewPoly(self.ctx, [self.ctx.mul(c, a) for a in self.coeffs])

    def scale_right(self, c):
        """self * (cX)."""
        ctx = self.ctx
        return SkewPoly(ctx, [ctx.mul(a, ctx.frob(c, i)) for i, a in enumerate(self.coeffs)])

    def eval(self, x):
        """Apply as an additive map F_q -> F_q."""
        ctx = self.ctx
        acc = 0
        for i, a in enumerate(self.coeffs):
            if a:
                acc = ctx.add(acc, ctx.mul(a, ctx.frob(x, i)))
        return acc

    def is_monic(self):
        return self.lc == 1

    def __eq__(self, other):
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        p = self.ctx.p
        parts = []
        for i, a in reversed(list(enumerate(self.coeffs))):
            if not a:
                continue
            mono = "X" if i == 0 else f"X^{p ** i}"
            parts.append(mono if a == 1 else f"{self.ctx.format_elem(a)}*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"SkewPoly({self})"

    def to_json(self):
        return [self.ctx.digits(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, ctx, data):
        return cls(ctx, [ctx.from_digits(c) if isinstance(c, list) else ctx.embed_int(c) for c in data])


def skew_mul(f, g):
    return f * g


def _check_divisor(g):
    if g.is_zero():
        raise DivisionByZero("division by the zero skew polynomial")


def right_divmod(f, g):
    """(q, r) with f = q*g + r and deg r < deg g."""
    _check_divisor(g)
    ctx = f.ctx
    m = g.degree
    q = [0] * max(f.degree - m + 1, 0)
    r = f
    while r.degree >= m:
        n = r.degree
        c = ctx.div(r.lc, ctx.frob(g.lc, n - m))
        q[n - m] = c
        r = r - SkewPoly.monomial(ctx, c, n - m) * g
    return SkewPoly(ctx, q), r


def left_divmod(f, g):
    """(q, r) with f = g*q + r and deg r < deg g (uses the inverse Frobenius)."""
    _check_divisor(g)
    ctx = f.ctx
    m = g.degree
    q = [0] * max(f.degree - m + 1, 0)
    r = f
    while r.degree >= m:
        n = r.degree
        c = ctx.frob(ctx.div(r.lc, g.lc), -m)
        q[n - m] = c
        r = r - g * SkewPoly.monomial(ctx, c, n - m)
    return SkewPoly(ctx, q), r


def is_frobenius_power(s):
    """n if s == X^(p^n), ZERO if s == 0, otherwise None."""
    if s.is_zero():
        return ZERO
    if s.lc == 1 and all(c == 0 for c in s.coeffs[:-1]):
        return s.degree
    return None


class SkewMatrix:
    __slots__ = ("ctx", "rows", "cols", "entries")

    def __init__(self, ctx, entries):
        entries = tuple(tuple(row) for row in entries)
        self.ctx = ctx
        self.rows = len(entries)
        self.cols = len(entries[0]) if entries else 0
        if any(len(row) != self.cols for row in entries):
            raise ValueError("ragged skew matrix")
        self.entries = entries

    @classmethod
    def identity(cls, ctx, n):
        one, zero = SkewPoly.identity(ctx), SkewPoly.zero_poly(ctx)
        return cls(ctx, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, ctx, diag, rows=None, cols=None):
        rows = len(diag) if rows is None else rows
        cols = len(diag) if cols is None else cols
        zero = SkewPoly.zero_poly(ctx)
        return cls(ctx, [[diag[i] if i == j and i < len(diag) else zero for j in range(cols)] for i in range(rows)])

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        zero = SkewPoly.zero_poly(self.ctx)
        out = []
        for i in range(self.rows):
            row = []
            for k in range(other.cols):
                acc = zero
                for j in range(self.cols):
                    a, b = self.entries[i][j], other.entries[j][k]
                    if a.coeffs and b.coeffs:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return SkewMatrix(self.ctx, out)

    def is_diagonal(self):
        return all(
            self.entries[i][j].is_zero()
            for i in range(self.rows)
            for j in range(self.cols)
            if i != j
        )

    def diagonal_entries(self):
        return [self.entries[i][i] for i in range(min(self.rows, self.cols))]

    def __eq__(self, other):
        if not isinstance(other, SkewMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __str__(self):
        return "[" + "; ".join(", ".join(str(x) for x in row) for row in self.entries) + "]"

    def to_json(self):
        return [[x.to_json() for x in row] for row in self.entries]

    @classmethod
    def from_json(cls, ctx, data):
        return cls(ctx, [[SkewPoly.from_json(ctx, x) for x in row] for row in data])


# --- elementary operations ------------------------------------------------
#
# Row operations act on the left, column operations on the right:
#   ("swap", i, j)          exchange rows (columns) i and j
#   ("add", t, s, q)        row_t += q * row_s   /   col_t += col_s * q
#   ("scale", t, u)         col_t = col_t * (uX),  u a nonzero field element

def elementary_matrix(ctx, n, op, side):
    m = [list(row) for row in SkewMatrix.identity(ctx, n).entries]
    kind = op[0]
    if kind == "swap":
        _, i, j = op
        m[i][i] = m[j][j] = SkewPoly.zero_poly(ctx)
        m[i][j] = m[j][i] = SkewPoly.identity(ctx)
    elif kind == "add":
        _, t, s, q = op
        if side == "row":
            m[t][s] = q
        else:
            m[s][t] = q
    elif kind == "scale":
        _, t, u = op
        m[t][t] = SkewPoly(ctx, [u])
    else:
        raise ValueError(f"unknown elementary op {kind!r}")
    return SkewMatrix(ctx, m)


def inverse_op(ctx, op):
    kind = op[0]
    if kind == "swap":
        return op
    if kind == "add":
        _, t, s, q = op
        return ("add", t, s, -q)
    _, t, u = op
    return ("scale", t, ctx.inv(u))


@dataclass
class Diagonalization:
    alpha: SkewMatrix
    beta: SkewMatrix
    D: SkewMatrix
    row_ops: list = field(default_factory=list)
    col_ops: list = field(default_factory=list)

    def __iter__(self):
        return iter((self.alpha, self.beta, self.D))

    def to_json(self):
        return {"alpha": self.alpha.to_json(), "beta": self.beta.to_json(), "D": self.D.to_json()}


def diagonalize(M):
    """Return alpha, beta, D with alpha*M*beta = D diagonal, entries monic or 0.

    Elimination follows the Euclidean degree-reduction argument: the pivot is
    a minimal-degree entry of the current row/column, everything else in that
    row and column is divided by it, and the loop repeats whenever a nonzero
    remainder (of strictly smaller degree) is left behind.  A pivot already
    sitting on the diagonal is kept, so diagonal inputs are never permuted.
    """
    ctx = M.ctx
    rows, cols = M.rows, M.cols
    a = [list(row) for row in M.entries]
    row_ops, col_ops = [], []

    def do_row(op):
        row_ops.append(op)
        kind = op[0]
        if kind == "swap":
            _, i, j = op
            a[i], a[j] = a[j], a[i]
        elif kind == "add":
            _, t, s, q = op
            a[t] = [x + q * y for x, y in zip(a[t], a[s])]

    def do_col(op):
        col_ops.append(op)
        kind = op[0]
        if kind == "swap":
            _, i, j = op
            for row in a:
                row[i], row[j] = row[j], row[i]
        elif kind == "add":
            _, t, s, q = op
            for row in a:
                row[t] = row[t] + row[s] * q
        elif kind == "scale":
            _, t, u = op
            for row in a:
                row[t] = row[t].scale_right(u)

    for t in range(min(rows, cols)):
        while True:
            cross = [(i, t) for i in range(t, rows) if not a[i][t].is_zero()]
            cross += [(t, j) for j in range(t + 1, cols) if not a[t][j].is_zero()]
            if not cross:
                cross = [
                    (i, j)
                    for i in range(t, rows)
                    for j in range(t, cols)
                    if not a[i][j].is_zero()
                ]
                if not cross:
                    break
            if cross == [(t, t)]:
                break
            pi, pj = min(cross, key=lambda ij: (a[ij[0]][ij[1]].degree, ij != (t, t), ij))
            if pi != t:
                do_row(("swap", t, pi))
            if pj != t:
                do_col(("swap", t, pj))
            pivot = a[t][t]
            for i in range(t + 1, rows):
                if not a[i][t].is_zero():
                    q, _ = right_divmod(a[i][t], pivot)
                    if not q.is_zero():
                        do_row(("add", i, t, -q))
            for j in range(t + 1, cols):
                if not a[t][j].is_zero():
                    q, _ = left_divmod(a[t][j], pivot)
                    if not q.is_zero():
                        do_col(("add", j, t, -q))
        if t < rows and t < cols and not a[t][t].is_zero() and a[t][t].lc != 1:
            s = a[t][t]
            do_col(("scale", t, ctx.frob(ctx.inv(s.lc), -s.degree)))

    alpha = SkewMatrix.identity(ctx, rows)
    for op in row_ops:
        alpha = elementary_matrix(ctx, rows, op, "row") @ alpha
    beta = SkewMatrix.identity(ctx, cols)
    for op in col_ops:
        beta = beta @ elementary_matrix(ctx, cols, op, "col")
    return Diagonalization(alpha, beta, SkewMatrix(ctx, a), row_ops, col_ops)
