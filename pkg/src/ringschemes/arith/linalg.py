"""Dense linear algebra over F_q (matrices as lists of lists of ints)."""
from ..errors import DivisionByZero


def _row_reduce(ctx, rows):
    """Reduced row echelon form in place; returns (pivot columns, det factor)."""
    m = rows
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    det = 1
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c]), None)
        if pivot is None:
            continue
        if pivot != r:
            m[r], m[pivot] = m[pivot], m[r]
            det = ctx.neg(det)
        lead = m[r][c]
        det = ctx.mul(det, lead)
        inv = ctx.inv(lead)
        m[r] = [ctx.mul(inv, x) for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [ctx.sub(a, ctx.mul(f, b)) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots, det


def determinant(ctx, matrix):
    n = len(matrix)
    if n == 0:
        return 1
    rows = [list(row) for row in matrix]
    pivots, det = _row_reduce(ctx, rows)
    return det if len(pivots) == n else 0


def rank(ctx, matrix):
    if not matrix:
        return 0
    rows = [list(row) for row in matrix]
    pivots, _ = _row_reduce(ctx, rows)
    return len(pivots)


def inverse(ctx, matrix):
    n = len(matrix)
    rows = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(matrix)]
    pivots, _ = _row_reduce(ctx, rows)
    if pivots[:n] != list(range(n)):
        raise DivisionByZero("singular matrix")
    return [row[n:] for row in rows]


def mat_vec(ctx, matrix, vec):
    out = []
    for row in matrix:
        acc = 0
        for a, b in zip(row, vec):
            if a and b:
                acc = ctx.add(acc, ctx.mul(a, b))
        out.append(acc)
    return out
