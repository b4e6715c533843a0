"""Buchberger's algorithm over F_q for membership, elimination and dominance.

Plain Buchberger with the normal selection strategy and the coprime leading
monomial criterion.  Polynomials are converted to dense exponent tuples over a
fixed variable list; the variable list is sorted so the first variable is the
largest, matching the grevlex convention of :mod:`ringschemes.arith.poly`.

Parameters of K = F_q(t) that appear in coefficients are treated as ordinary
polynomial variables here (placed after any eliminated block).
"""
from dataclasses import dataclass

from .arith.poly import MultiPoly
from .errors import BudgetExceeded

DEFAULT_MAX_PAIRS = 20000
DEFAULT_MAX_DEGREE = 1024


def _grevlex(exps):
    return (sum(exps), tuple(-e for e in reversed(exps)))


@dataclass(frozen=True)
class MonomialOrder:
    kind: str = "grevlex"
    front: frozenset = frozenset()

    @classmethod
    def grevlex(cls):
        return cls("grevlex")

    @classmethod
    def block(cls, front):
        return cls("block", frozenset(front))

    def key_function(self, variables):
        if self.kind == "grevlex":
            return _grevlex
        front_idx = [i for i, v in enumerate(variables) if v in self.front]
        rest_idx = [i for i, v in enumerate(variables) if v not in self.front]

        def key(exps):
            return (_grevlex([exps[i] for i in front_idx]), _grevlex([exps[i] for i in rest_idx]))

        return key

    def arrange(self, variables):
        """Variable list with the eliminated block first."""
        variables = sorted(set(variables))
        if self.kind == "grevlex":
            return tuple(variables)
        return tuple([v for v in variables if v in self.front] + [v for v in variables if v not in self.front])


class _Ring:
    def __init__(self, ctx, variables, order):
        self.ctx = ctx
        self.variables = tuple(variables)
        self.index = {v: i for i, v in enumerate(self.variables)}
        self.n = len(self.variables)
        self.key = order.key_function(self.variables)

    def dense(self, f):
        out = {}
        for mono, c in f.terms.items():
            exps = [0] * self.n
            for v, e in mono:
                exps[self.index[v]] = e
            out[tuple(exps)] = c
        return out

    def sparse(self, d):
        terms = {}
        for exps, c in d.items():
            terms[tuple((self.variables[i], e) for i, e in enumerate(exps) if e)] = c
        return MultiPoly(self.ctx, terms, _trusted=True)

    def lead(self, d):
        return max(d, key=self.key)


class _Elem:
    __slots__ = ("terms", "lm", "lc")

    def __init__(self, terms, lm, lc):
        self.terms = terms
        self.lm = lm
        self.lc = lc


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _reduce(ring, f, basis, full=True):
    """Remainder of dense f by the basis elements (each monic)."""
    ctx = ring.ctx
    add, mul, neg = ctx.add, ctx.mul, ctx.neg
    f = dict(f)
    rem = {}
    while f:
        lt = ring.lead(f)
        c = f[lt]
        for g in basis:
            if _divides(g.lm, lt):
                shift = tuple(x - y for x, y in zip(lt, g.lm))
                factor = neg(c)  # g is monic
                for m, gc in g.terms.items():
                    mm = tuple(x + y for x, y in zip(m, shift))
                    v = add(f.get(mm, 0), mul(factor, gc))
                    if v:
                        f[mm] = v
                    else:
                        f.pop(mm, None)
                break
        else:
            if not full:
                rem.update(f)
                return rem
            rem[lt] = c
            del f[lt]
    return rem


def _monic(ring, d):
    lm = ring.lead(d)
    inv = ring.ctx.inv(d[lm])
    mul = ring.ctx.mul
    terms = {m: mul(c, inv) for m, c in d.items()}
    return _Elem(terms, lm, 1)


def _spoly(ring, f, g):
    ctx = ring.ctx
    lcm = tuple(max(x, y) for x, y in zip(f.lm, g.lm))
    out = {}
    for elem, sign in ((f, 1), (g, -1)):
        shift = tuple(x - y for x, y in zip(lcm, elem.lm))
        for m, c in elem.terms.items():
            mm = tuple(x + y for x, y in zip(m, shift))
            v = c if sign == 1 else ctx.neg(c)
            s = ctx.add(out.get(mm, 0), v)
            if s:
                out[mm] = s
            else:
                out.pop(mm, None)
    return out


class GroebnerBasis:
    """Reduced Groebner basis; ``polys`` are monic and sorted by leading monomial."""

    def __init__(self, ring, order, elems):
        self._ring = ring
        self.order = order
        self.variables = ring.variables
        elems = sorted(elems, key=lambda e: ring.key(e.lm), reverse=True)
        self._elems = elems
        self.polys = tuple(ring.sparse(e.terms) for e in elems)

    @property
    def ctx(self):
        return self._ring.ctx

    def is_unit_ideal(self):
        return any(not any(e.lm) for e in self._elems)

    def normal_form(self, f):
        if not self._elems:
            return f
        ring = self._ring
        extra = set(f.variables()) - set(ring.index)
        if extra:
            # variables outside the basis ring: extend the ring on the fly
            ring = _Ring(ring.ctx, ring.variables + tuple(sorted(extra)), self.order)
            elems = [_Elem(ring.dense(p), None, 1) for p in self.polys]
            for e in elems:
                e.lm = ring.lead(e.terms)
            return ring.sparse(_reduce(ring, ring.dense(f), elems))
        return ring.sparse(_reduce(ring, ring.dense(f), self._elems))

    def contains(self, f):
        return self.normal_form(f).is_zero()

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def to_json(self):
        return [f.to_json() for f in self.polys]


def buchberger(gens, order=None, variables=None, max_pairs=DEFAULT_MAX_PAIRS, max_degree=DEFAULT_MAX_DEGREE):
    gens = [g for g in gens if not g.is_zero()]
    order = order or MonomialOrder.grevlex()
    all_vars = set(variables or ())
    for g in gens:
        all_vars.update(g.variables())
    if not gens:
        return GroebnerBasis(_Ring(None, order.arrange(all_vars), order), order, [])
    ctx = gens[0].ctx
    ring = _Ring(ctx, order.arrange(all_vars), order)
    basis = []
    for g in gens:
        h = _reduce(ring, ring.dense(g), basis)
        if h:
            basis.append(_monic(ring, h))
    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
    processed = 0
    while pairs:
        best = min(
            range(len(pairs)),
            key=lambda t: (ring.key(tuple(max(x, y) for x, y in zip(basis[pairs[t][0]].lm, basis[pairs[t][1]].lm))), pairs[t]),
        )
        i, j = pairs.pop(best)
        f, g = basis[i], basis[j]
        if all(x == 0 or y == 0 for x, y in zip(f.lm, g.lm)):
            continue  # coprime leading monomials
        processed += 1
        if processed > max_pairs:
            raise BudgetExceeded("S-pair budget exhausted", budget="pairs", limit=max_pairs)
        h = _reduce(ring, _spoly(ring, f, g), basis)
        if h:
            new = _monic(ring, h)
            if sum(new.lm) > max_degree:
                raise BudgetExceeded("degree budget exhausted", budget="degree", limit=max_degree)
            basis.append(new)
            k = len(basis) - 1
            pairs.extend((t, k) for t in range(k))
    # minimal basis: drop elements whose leading monomial is divisible by another's
    minimal = []
    for idx, f in enumerate(basis):
        redundant = False
        for jdx, g in enumerate(basis):
            if jdx == idx:
                continue
            if _divides(g.lm, f.lm) and (g.lm != f.lm or jdx < idx):
                redundant = True
                break
        if not redundant:
            minimal.append(f)
    reduced = []
    for idx, f in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        tail = dict(f.terms)
        del tail[f.lm]
        rest = _reduce(ring, tail, others)
        terms = dict(rest)
        terms[f.lm] = 1
        reduced.append(_Elem(terms, f.lm, 1))
    return GroebnerBasis(ring, order, reduced)


def normal_form(f, G):
    return G.normal_form(f)


def elimination_ideal(gens, keep, variables=None, **budget):
    """Generators of the ideal intersected with the subring in the ``keep`` variables."""
    keep = set(keep)
    all_vars = set(variables or ())
    for g in gens:
        all_vars.update(g.variables())
    front = all_vars - keep
    if not front:
        return list(buchberger(gens, MonomialOrder.grevlex(), all_vars, **budget).polys)
    G = buchberger(gens, MonomialOrder.block(front), all_vars, **budget)
    return [f for f in G.polys if not (set(f.variables()) & front)]


def is_dominant(lower, upper, **budget):
    """Is the projection from ``upper`` onto the variables of ``lower`` dominant?

    Tested as: every element of the elimination ideal of ``upper`` lies in the
    ideal of ``lower`` (the caller vouches for primality of ``lower``).
    Parameters of K are never eliminated.
    """
    keep = set(lower.vars)
    for g in upper.gens:
        keep.update(v for v in g.variables() if v.is_param)
    elim = elimination_ideal(list(upper.gens), keep, variables=upper.vars, **budget)
    if not elim:
        return True
    G = buchberger(list(lower.gens), MonomialOrder.grevlex(), lower.vars, **budget)
    return all(G.contains(f) for f in elim)
