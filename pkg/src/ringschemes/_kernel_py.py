"""Pure-Python common-zero enumeration over F_q^n.

Points are visited in odometer order: the last variable changes fastest.
Polynomials arrive flattened into int arrays (see ``search.CompiledSystem``):
``poly_start[i]:poly_start[i+1]`` are the term indices of poly i, each term has
a coefficient and ``term_start[t]:term_start[t+1]`` factor indices, and a
factor is a variable index with an exponent already reduced into 1..q-1.
Tables are flattened q-by-q arrays; ``powt[x*q + k] = x^k``.

Returns ``(count, hits)``; ``hits`` lists the zeros as tuples unless
``count_only``.  ``max_hits > 0`` stops after that many zeros.
"""


def common_zeros(q, nvars, add, mul, powt, poly_start, term_coeff, term_start,
                 fac_var, fac_exp, max_hits=0, count_only=False):
    pt = [0] * nvars
    npolys = len(poly_start) - 1
    polys = []
    for pi in range(npolys):
        terms = []
        for ti in range(poly_start[pi], poly_start[pi + 1]):
            factors = [(fac_var[fi], fac_exp[fi]) for fi in range(term_start[ti], term_start[ti + 1])]
            terms.append((term_coeff[ti], factors))
        polys.append(terms)
    count = 0
    hits = []
    while True:
        ok = True
        for terms in polys:
            acc = 0
            for v, factors in terms:
                for var, k in factors:
                    v = mul[v * q + powt[pt[var] * q + k]]
                    if v == 0:
                        break
                acc = add[acc * q + v]
            if acc:
                ok = False
                break
        if ok:
            count += 1
            if not count_only:
                hits.append(tuple(pt))
            if max_hits > 0 and count >= max_hits:
                break
        i = nvars - 1
        while i >= 0:
            pt[i] += 1
            if pt[i] < q:
                break
            pt[i] = 0
            i -= 1
        if i < 0:
            break
    return count, hits
