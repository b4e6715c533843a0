"""Finite fields F_{p^d}.

Elements are plain ints ``v = c_0 + c_1 p + ... + c_{d-1} p^{d-1}`` where the
``c_i`` are the power-basis coordinates with respect to a root ``w`` of the
modulus.  The context object does all arithmetic; :class:`FieldElem` is a thin
value wrapper used at API boundaries.
"""
from functools import lru_cache
from itertools import product

from ..errors import DivisionByZero


def is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _prime_factors(n):
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# Dense polynomials over F_p as coefficient lists, low degree first.

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, m, p):
    """Remainder of ``a`` by the polynomial ``m`` over F_p."""
    a = _trim(list(a))
    lead_inv = pow(m[-1], p - 2, p)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        c = a[-1] * lead_inv % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def _pmulmod(a, b, m, p):
    out = [0] * (len(a) + len(b))
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pmod(out, m, p)


def is_irreducible(modulus, p):
    """Trial division by every monic polynomial of degree 1..d//2."""
    d = len(modulus) - 1
    if d < 1 or modulus[-1] % p == 0:
        return False
    if d == 1:
        return True
    for deg in range(1, d // 2 + 1):
        for low in product(range(p), repeat=deg):
            divisor = list(low) + [1]
            if not _pmod(modulus, divisor, p):
                return False
    return True


def default_modulus(p, d):
    """Smallest monic irreducible of degree d, ordered by digit value."""
    if d == 1:
        return (0, 1)
    for v in range(p ** d):
        low = [(v // p ** i) % p for i in range(d)]
        cand = tuple(low) + (1,)
        if is_irreducible(cand, p):
            return cand
    raise ValueError(f"no irreducible polynomial of degree {d} over F_{p}")


class FieldCtx:
    """Arithmetic context for F_{p^d} with elements encoded as ints in [0, q)."""

    MAX_Q = 1 << 16

    def __init__(self, p, d=1, modulus=None):
        if not is_prime(p):
            raise ValueError(f"p={p} is not prime")
        if d < 1:
            raise ValueError("extension degree must be >= 1")
        if modulus is None:
            modulus = default_modulus(p, d)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != d + 1:
            raise ValueError(f"modulus must have {d + 1} coefficients")
        if modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        if d > 1 and not is_irreducible(modulus, p):
            raise ValueError(f"modulus {list(modulus)} is reducible over F_{p}")
        self.p = p
        self.d = d
        self.q = p ** d
        self.modulus = modulus
        if d > 1:
            if self.q > self.MAX_Q:
                raise ValueError(f"field of size {self.q} is too large")
            self._build_tables()

    def _build_tables(self):
        p, d, q = self.p, self.d, self.q
        mod = list(self.modulus)
        digits = [self._digits(v) for v in range(q)]
        order = q - 1
        factors = _prime_factors(order)

        def poly_pow(a, n):
            result, base = [1], list(a)
            while n:
                if n & 1:
                    result = _pmulmod(result, base, mod, p)
                base = _pmulmod(base, base, mod, p)
                n >>= 1
            return result

        gen = None
        for g in range(1, q):
            a = _trim(list(digits[g]))
            if all(poly_pow(a, order // f) != [1] for f in factors):
                gen = g
                break
        exp = [0] * (2 * order)
        log = [0] * q
        cur = [1]
        gpoly = _trim(list(digits[gen]))
        for i in range(order):
            v = self._from_digits(cur)
            exp[i] = v
            log[v] = i
            cur = _pmulmod(cur, gpoly, mod, p)
        for i in range(order, 2 * order):
            exp[i] = exp[i - order]
        self._exp = exp
        self._log = log
        self.generator = gen
        if p == 2:
            self._add_table = None
        elif q <= 256:
            self._add_table = [
                [self._add_digits(a, b) for b in range(q)] for a in range(q)
            ]
        else:
            self._add_table = None

    # --- encoding -----------------------------------------------------
    def _digits(self, v):
        p = self.p
        out = []
        for _ in range(self.d):
            out.append(v % p)
            v //= p
        return out

    def _from_digits(self, digits):
        v = 0
        for c in reversed(list(digits)):
            v = v * self.p + (c % self.p)
        return v

    def _add_digits(self, a, b):
        p = self.p
        v, scale = 0, 1
        while a or b:
            v += ((a % p + b % p) % p) * scale
            a //= p
            b //= p
            scale *= p
        return v

    def digits(self, v):
        """Power-basis coordinates of element v, low to high (length d)."""
        return self._digits(v)

    def from_digits(self, digits):
        digits = list(digits)
        if len(digits) > self.d:
            raise ValueError("too many digits for this field")
        return self._from_digits(digits)

    def elements(self):
        return range(self.q)

    @property
    def omega(self):
        """Encoding of the root w of the modulus (digits [0, 1, 0, ...])."""
        return self.p if self.d > 1 else 0

    # --- arithmetic ---------------------------------------------------
    def add(self, a, b):
        if self.d == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._add_digits(a, b)

    def neg(self, a):
        if self.d == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        p = self.p
        return self._from_digits([(-c) % p for c in self._digits(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.d == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero in F_q")
        if self.d == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if a == 0:
            if n > 0:
                return 0
            if n == 0:
                return 1
            raise DivisionByZero("negative power of zero")
        if self.d == 1:
            return pow(a, n % (self.p - 1), self.p) if self.p > 2 else 1
        return self._exp[(self._log[a] * n) % (self.q - 1)]

    def frob(self, a, k=1):
        """a^(p^k); k may be negative since finite fields are perfect."""
        if self.d == 1 or a == 0:
            return a
        k %= self.d
        if k == 0:
            return a
        return self._exp[(self._log[a] * self.p ** k) % (self.q - 1)]

    def in_prime_field(self, a):
        return a < self.p

    def embed_int(self, n):
        return n % self.p

    # --- identity -----------------------------------------------------
    def __eq__(self, other):
        return (
            isinstance(other, FieldCtx)
            and self.p == other.p
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        if self.d == 1:
            return f"FieldCtx(p={self.p})"
        return f"FieldCtx(p={self.p}, d={self.d}, modulus={list(self.modulus)})"

    def format_elem(self, a):
        """Human-readable element: an integer for F_p, else a polynomial in w."""
        if self.d == 1 or a < self.p:
            return str(a)
        parts = []
        for i, c in reversed(list(enumerate(self._digits(a)))):
            if c == 0:
                continue
            mono = "" if i == 0 else ("w" if i == 1 else f"w^{i}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return "(" + "+".join(parts) + ")"

    def to_json(self):
        return {"p": self.p, "field": {"deg": self.d, "modulus": list(self.modulus)}}


@lru_cache(maxsize=None)
def get_field(p, d=1, modulus=None):
    """Cached field constructor; ``modulus`` must be a tuple if given."""
    return FieldCtx(p, d, modulus)


def parse_field_spec(text):
    """Parse '4', '2^2', '9' or '3^2' into a field context."""
    text = text.strip()
    if "^" in text:
        base, exp = text.split("^", 1)
        p, d = int(base), int(exp)
    else:
        q = int(text)
        p = None
        for cand in range(2, q + 1):
            if q % cand == 0:
                p = cand
                break
        if p is None:
            raise ValueError(f"bad field size {text!r}")
        d, rest = 0, q
        while rest % p == 0:
            rest //= p
            d += 1
        if rest != 1:
            raise ValueError(f"{q} is not a prime power")
    return get_field(p, d)


class FieldElem:
    """An element of a finite field, wrapping the integer encoding."""

    __slots__ = ("ctx", "value")

    def __init__(self, ctx, value):
        if not 0 <= value < ctx.q:
            raise ValueError(f"{value} is out of range for F_{ctx.q}")
        self.ctx = ctx
        self.value = value

    @property
    def coeffs(self):
        return self.ctx.digits(self.value)

    def _wrap(self, v):
        return FieldElem(self.ctx, v)

    def _val(self, other):
        if isinstance(other, FieldElem):
            return other.value
        return self.ctx.embed_int(other)

    def __add__(self, other):
        return self._wrap(self.ctx.add(self.value, self._val(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.ctx.sub(self.value, self._val(other)))

    def __rsub__(self, other):
        return self._wrap(self.ctx.sub(self._val(other), self.value))

    def __neg__(self):
        return self._wrap(self.ctx.neg(self.value))

    def __mul__(self, other):
        return self._wrap(self.ctx.mul(self.value, self._val(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._wrap(self.ctx.div(self.value, self._val(other)))

    def __pow__(self, n):
        return self._wrap(self.ctx.pow(self.value, n))

    def inverse(self):
        return self._wrap(self.ctx.inv(self.value))

    # shared element protocol used by scheme point arithmetic
    def scale(self, c):
        return self._wrap(self.ctx.mul(self.value, c))

    def frob_pow(self, r):
        return self._wrap(self.ctx.frob(self.value, r))

    def zero(self):
        return self._wrap(0)

    def one(self):
        return self._wrap(1)

    def constant(self, c):
        return self._wrap(c)

    def is_zero(self):
        return self.value == 0

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.ctx == other.ctx and self.value == other.value
        if isinstance(other, int):
            return self.value == self.ctx.embed_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.value))

    def __repr__(self):
        return f"FieldElem({self.ctx.format_elem(self.value)} in F_{self.ctx.q})"

    def to_json(self):
        return self.ctx.digits(self.value)


def frobenius(x, k):
    """Return x^(p^k); negative k applies the inverse Frobenius."""
    return x.frob_pow(k)
