"""Independent reference computations used by the tests.

Nothing here calls the symbolic machinery under test: field arithmetic is
redone on digit lists, scheme points are multiplied with the raw tables, and
prolongation questions are answered by exhaustive enumeration.
"""
import itertools

from ringschemes.arith.poly import MultiPoly


# --- fields -----------------------------------------------------------------

def digits_mul(p, modulus, a, b):
    """Multiply two digit lists modulo the monic modulus (coefficients low to high)."""
    d = len(modulus) - 1
    prod = [0] * (len(a) + len(b))
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, d - 1, -1):
        c = prod[k]
        if c:
            for t in range(d + 1):
                prod[k - d + t] = (prod[k - d + t] - c * modulus[t]) % p
    out = prod[:d] + [0] * max(0, d - len(prod))
    return out


def to_digits(v, p, d):
    out = []
    for _ in range(d):
        out.append(v % p)
        v //= p
    return out


def from_digits(ds, p):
    return sum(c * p ** i for i, c in enumerate(ds))


def naive_mul(ctx, a, b):
    p, d = ctx.p, ctx.d
    return from_digits(digits_mul(p, list(ctx.modulus), to_digits(a, p, d), to_digits(b, p, d)), p)


def naive_add(ctx, a, b):
    p, d = ctx.p, ctx.d
    return from_digits([(x + y) % p for x, y in zip(to_digits(a, p, d), to_digits(b, p, d))], p)


def naive_pow(ctx, a, n):
    out = 1
    for _ in range(n):
        out = naive_mul(ctx, out, a)
    return out


# --- scheme points from the raw tables --------------------------------------

def point_mul(S, a, b):
    return S.mul_values(tuple(a), tuple(b))


def point_add(ctx, a, b):
    return tuple(ctx.add(x, y) for x, y in zip(a, b))


def eval_at_points(S, f, assignment, coeff_image=None):
    """Evaluate a polynomial with F_q coefficients at B(F_q)-points.

    ``assignment`` maps each variable to a tuple of e field values;
    coefficients go through iota (the zero operator) unless ``coeff_image``
    says otherwise.
    """
    ctx = S.ctx
    coeff_image = coeff_image or S.iota_values
    total = (0,) * S.e
    for mono, c in f.terms.items():
        term = coeff_image(c)
        for v, e in mono:
            for _ in range(e):
                term = point_mul(S, term, assignment[v])
        total = point_add(ctx, total, term)
    return total


def all_points(ctx, e):
    return list(itertools.product(range(ctx.q), repeat=e))


def homomorphisms(S, V):
    """All ring maps K[V] -> B(F_q) over iota, by brute force.

    A map is an assignment of B(F_q)-points to the variables of V under which
    every generator evaluates to zero in B(F_q).
    """
    ctx = S.ctx
    pts = all_points(ctx, S.e)
    out = []
    for choice in itertools.product(pts, repeat=len(V.vars)):
        assignment = dict(zip(V.vars, choice))
        if all(not any(eval_at_points(S, g, assignment)) for g in V.gens):
            out.append(assignment)
    return out


def layered(assignment):
    """Pair a map K[V] -> B(F_q) with its point of the prolongation."""
    out = {}
    for v, coords in assignment.items():
        for i, x in enumerate(coords, start=1):
            out[v.layered(i)] = x
    return out


def zeros_by_evaluation(ctx, polys, variables):
    """Common zeros by plain evaluation with MultiPoly.evaluate."""
    variables = tuple(variables)
    out = []
    for values in itertools.product(range(ctx.q), repeat=len(variables)):
        point = dict(zip(variables, values))
        if all(f.evaluate(point) == 0 for f in polys):
            out.append(point)
    return out


def freeze(point):
    return tuple(sorted(point.items()))


def random_poly(ctx, rng, variables, max_terms=4, max_exp=3):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        chosen = rng.sample(list(variables), rng.randint(0, len(variables)))
        mono = tuple(sorted((v, rng.randint(1, max_exp)) for v in chosen))
        terms[mono] = ctx.add(terms.get(mono, 0), rng.randrange(1, ctx.q))
    return MultiPoly(ctx, terms)
