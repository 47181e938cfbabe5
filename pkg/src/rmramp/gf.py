"""Exact arithmetic over GF(q), q = p^e <= 2^16.

Elements are canonically encoded as integers 0..q-1: the base-p digits of
the encoding are the coefficients of the element on 1, x, x^2, ... where x
is the residue of the reduction polynomial's variable.  The canonical
enumeration gamma_0, ..., gamma_{q-1} is exactly this integer order, so
gamma_0 = 0 and gamma_1 = 1 always.  Share indices, evaluation-point order
and the extremal subspace construction all rely on this enumeration, which
makes it part of the package's external contract.

Multiplication, inversion and powers go through log/antilog tables built at
construction; addition is XOR in characteristic 2 and digitwise otherwise.

Unless a reduction polynomial is supplied, the Conway polynomial for (p, e)
is computed on demand (and cached): the first monic polynomial, in the
alternating-sign word order, that is primitive and whose root is
norm-compatible with the Conway polynomials of all proper subfields.  This
gives every implementation that follows the same convention the identical
field presentation.
"""

from functools import lru_cache

from .errors import (DivisionByZero, MixedFields, NonPrimeCharacteristic,
                     ReduciblePolynomial, UnsupportedSize)

MAX_ORDER = 1 << 16


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factor(n):
    """Prime factorization as a dict p -> multiplicity (n <= 2^32ish)."""
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def split_prime_power(q):
    """q -> (p, e) with q = p^e, or raise NonPrimeCharacteristic."""
    if q < 2:
        raise NonPrimeCharacteristic(f"{q} is not a prime power")
    fs = factor(q)
    if len(fs) != 1:
        raise NonPrimeCharacteristic(f"{q} is not a prime power")
    (p, e), = fs.items()
    return p, e


# ---------------------------------------------------------------------------
# polynomials over GF(p), coefficient tuples in ascending powers


def _ptrim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _pmul(u, v, p):
    if not u or not v:
        return ()
    out = [0] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                out[i + j] = (out[i + j] + a * b) % p
    return _ptrim(out)


def _pmod(u, f, p):
    """u mod f, f monic."""
    r = list(u)
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(r) - 1 >= df and len(r) > 0:
        c = (r[-1] * inv_lead) % p
        shift = len(r) - 1 - df
        if c:
            for i, b in enumerate(f):
                r[shift + i] = (r[shift + i] - c * b) % p
        del r[-1]
        while r and r[-1] == 0:
            del r[-1]
    return tuple(r)


def _pmulmod(u, v, f, p):
    return _pmod(_pmul(u, v, p), f, p)


def _ppowmod(u, k, f, p):
    out = (1,)
    base = _pmod(u, f, p)
    while k:
        if k & 1:
            out = _pmulmod(out, base, f, p)
        base = _pmulmod(base, base, f, p)
        k >>= 1
    return out


def _pgcd(u, v, p):
    u, v = _ptrim(u), _ptrim(v)
    while v:
        inv_lead = pow(v[-1], p - 2, p)
        vm = tuple((c * inv_lead) % p for c in v)
        u, v = v, _pmod(u, vm, p)
    return u


def _psub(u, v, p):
    m = max(len(u), len(v))
    return _ptrim(tuple(((u[i] if i < len(u) else 0) -
                         (v[i] if i < len(v) else 0)) % p for i in range(m)))


def _padd(u, v, p):
    m = max(len(u), len(v))
    return _ptrim(tuple(((u[i] if i < len(u) else 0) +
                         (v[i] if i < len(v) else 0)) % p for i in range(m)))


def is_irreducible(poly, p):
    """Rabin's test for a monic polynomial over GF(p)."""
    poly = _ptrim(poly)
    e = len(poly) - 1
    if e < 1:
        return False
    if e == 1:
        return True
    x = (0, 1)
    for r in factor(e):
        h = _ppowmod(x, p ** (e // r), poly, p)
        if len(_pgcd(poly, _psub(h, x, p), p)) > 1:
            return False
    h = _ppowmod(x, p ** e, poly, p)
    return not _psub(h, x, p)


def _x_has_full_order(f, p, e, prime_factors):
    """True when x generates the multiplicative group mod f (implies f irreducible)."""
    x = (0, 1)
    n = p ** e - 1
    if _ppowmod(x, n, f, p) != (1,):
        return False
    for r in prime_factors:
        if _ppowmod(x, n // r, f, p) == (1,):
            return False
    return True


@lru_cache(maxsize=None)
def conway_polynomial(p, e):
    """Coefficient tuple (c_0, ..., c_e) of the Conway polynomial for GF(p^e)."""
    n = p ** e - 1
    prime_factors = tuple(factor(n))
    subs = [(d, conway_polynomial(p, d), (p ** e - 1) // (p ** d - 1))
            for d in range(1, e) if e % d == 0]

    def candidates():
        # words (w_{e-1}, ..., w_0) in ascending lexicographic order;
        # coefficient a_i = (-1)^(e-i) w_i mod p
        word = [0] * e
        while True:
            coeffs = [0] * (e + 1)
            coeffs[e] = 1
            for idx, w in enumerate(word):       # idx 0 -> degree e-1
                i = e - 1 - idx
                coeffs[i] = w if (e - i) % 2 == 0 else (-w) % p
            yield tuple(coeffs)
            j = e - 1
            while j >= 0 and word[j] == p - 1:
                word[j] = 0
                j -= 1
            if j < 0:
                return
            word[j] += 1

    for f in candidates():
        if not _x_has_full_order(f, p, e, prime_factors):
            continue
        ok = True
        for _d, cp, exp in subs:
            y = _ppowmod((0, 1), exp, f, p)
            acc = ()
            for c in reversed(cp):               # Horner on y
                acc = _padd(_pmulmod(acc, y, f, p), (c,), p)
            if acc:
                ok = False
                break
        if ok:
            return f
    raise AssertionError(f"no Conway polynomial found for ({p},{e})")


# ---------------------------------------------------------------------------


class FieldElement:
    """An element of a Field, identified by its canonical integer encoding."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    def _coerce(self, other):
        if not isinstance(other, FieldElement):
            raise MixedFields(f"cannot combine {other!r} with a field element")
        if other.field is not self.field and other.field.key != self.field.key:
            raise MixedFields(f"mixed fields GF({self.field.q}) and GF({other.field.q})")
        return other.value

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._coerce(other)))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._coerce(other)))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._coerce(other)))

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._coerce(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, k):
        return FieldElement(self.field, self.field.pow(self.value, k))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        return (isinstance(other, FieldElement) and other.field.key == self.field.key
                and other.value == self.value)

    def __hash__(self):
        return hash((self.field.key, self.value))

    def __repr__(self):
        return f"F{self.field.q}({self.value})"


class Field:
    """GF(p^e) with the canonical integer encoding of elements."""

    def __init__(self, p, e, reduction=None):
        if not is_prime(p):
            raise NonPrimeCharacteristic(f"characteristic {p} is not prime")
        if e < 1:
            raise UnsupportedSize("extension degree must be >= 1")
        q = p ** e
        if q > MAX_ORDER:
            raise UnsupportedSize(f"field size {q} exceeds 2^16")
        self.p = p
        self.e = e
        self.q = q
        if reduction is None:
            reduction = (0, 1) if e == 1 else conway_polynomial(p, e)
        else:
            reduction = _ptrim(tuple(c % p for c in reduction))
            if len(reduction) - 1 != e or reduction[-1] != 1:
                raise ReduciblePolynomial(
                    f"reduction polynomial must be monic of degree {e}")
            if e > 1 and not is_irreducible(reduction, p):
                raise ReduciblePolynomial("reduction polynomial is reducible")
        self.reduction = reduction
        self.key = (p, e, reduction)
        self._build_tables()
        if p == 2:
            # hot path: addition is XOR and every element is its own negative
            self.add = self.sub = int.__xor__
            self.neg = lambda a: a

    # encoding <-> coefficient tuple
    def _digits(self, v):
        out = []
        for _ in range(self.e):
            out.append(v % self.p)
            v //= self.p
        return tuple(out)

    def _undigits(self, c):
        v = 0
        for d in reversed(c[:self.e]):
            v = v * self.p + d
        return v

    def _raw_mul(self, a, b):
        prod = _pmulmod(_ptrim(self._digits(a)), _ptrim(self._digits(b)),
                        self.reduction, self.p)
        return self._undigits(prod + (0,) * self.e)

    def _order_is_full(self, g, prime_factors):
        n = self.q - 1
        for r in prime_factors:
            if self._raw_pow(g, n // r) == 1:
                return False
        return True

    def _raw_pow(self, a, k):
        out, base = 1, a
        while k:
            if k & 1:
                out = self._raw_mul(out, base)
            base = self._raw_mul(base, base)
            k >>= 1
        return out

    def _build_tables(self):
        q = self.q
        if q == 2:
            self._exp = [1, 1]
            self._log = [0, 0]
            self.generator = 1
            return
        prime_factors = tuple(factor(q - 1))
        gen = None
        for cand in range(2, q):
            if self._order_is_full(cand, prime_factors):
                gen = cand
                break
        assert gen is not None, "a finite field always has a generator"
        self.generator = gen
        exp = [0] * (2 * (q - 1))
        log = [0] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            exp[i + q - 1] = x
            log[x] = i
            x = self._raw_mul(x, gen)
        assert x == 1, "generator order mismatch"
        self._exp = exp
        self._log = log

    # --- element arithmetic on canonical encodings -------------------------

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        if self.e == 1:
            return (a + b) % self.p
        p = self.p
        out, mult = 0, 1
        for _ in range(self.e):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a):
        if self.p == 2:
            return a
        if self.e == 1:
            return (-a) % self.p
        p = self.p
        out, mult = 0, 1
        for _ in range(self.e):
            out += ((-a) % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by zero")
        if a == 0:
            return 0
        return self._exp[(self._log[a] - self._log[b]) % (self.q - 1)]

    def pow(self, a, k):
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise DivisionByZero("negative power of zero")
            return 0
        return self._exp[(self._log[a] * k) % (self.q - 1)]

    # --- public element views ----------------------------------------------

    def element(self, value):
        if not 0 <= value < self.q:
            raise MixedFields(f"encoding {value} outside 0..{self.q - 1}")
        return FieldElement(self, value)

    def elements(self):
        """The canonical enumeration gamma_0, ..., gamma_{q-1}."""
        return [FieldElement(self, v) for v in range(self.q)]

    def __eq__(self, other):
        return isinstance(other, Field) and other.key == self.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def _field_cached(p, e, reduction):
    return Field(p, e, None if reduction is None else reduction)


def field_new(p, e, reduction=None):
    """Construct (or fetch the cached) GF(p^e)."""
    if reduction is not None:
        reduction = tuple(int(c) for c in reduction)
    return _field_cached(int(p), int(e), reduction)


def field_from_order(q, reduction=None):
    """Construct GF(q), factoring q = p^e internally."""
    p, e = split_prime_power(q)
    return _field_cached(p, e, None if reduction is None
                         else tuple(int(c) for c in reduction))


def enumerate_elements(field):
    """The canonical enumeration gamma_0, ..., gamma_{q-1} of a field."""
    return field.elements()
