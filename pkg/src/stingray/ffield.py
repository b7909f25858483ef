"""Exact arithmetic in GF(p^a) for word-sized primes p.

Elements are canonically encoded as integers sum c_i p^i with coefficient
vector (c_0, ..., c_{a-1}); the encoding is the on-disk and in-matrix
representation throughout the package.  Extension fields up to q <= 2^20
get exp/log tables (built once per field and shared through an interning
cache), which is what the matrix kernels consume; larger extension fields
fall back to direct polynomial arithmetic per operation.

The modulus, when not supplied, is the lexicographically smallest monic
irreducible of degree a over F_p, comparing ascending coefficient lists as
integer tuples.  Embeddings GF(p^a) -> GF(p^b) (a | b) send the canonical
generator to the smallest-encoding root of the source modulus in the
target, so they are deterministic for a fixed field pair.
"""

import math

import numpy as np

from . import _kernels
from ._intmath import factorize, is_prime, factorization_order_descend
from .errors import (DegreeMismatch, DivisionByZero, FieldMismatch, NoEmbedding,
                     NotPrime, ReducibleModulus)

TABLE_CAP = 1 << 20

_registry = {}


# --- bootstrap polynomial arithmetic over F_p (coefficient lists, ascending) ---

def _ptrim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmulmod(f, g, mod, p):
    res = [0] * (len(f) + len(g) - 1) if f and g else []
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                res[i + j] = (res[i + j] + fi * gj) % p
    # reduce mod the monic modulus
    dm = len(mod) - 1
    for i in range(len(res) - 1, dm - 1, -1):
        c = res[i]
        if c:
            res[i] = 0
            for j in range(dm):
                res[i - dm + j] = (res[i - dm + j] - c * mod[j]) % p
    return _ptrim(res)


def _ppowmod(f, e, mod, p):
    result = [1]
    base = list(f)
    while e:
        if e & 1:
            result = _pmulmod(result, base, mod, p)
        base = _pmulmod(base, base, mod, p)
        e >>= 1
    return result


def _pgcd(f, g, p):
    f, g = list(f), list(g)
    while g:
        # f mod g
        dg = len(g) - 1
        inv = pow(g[-1], p - 2, p)
        while len(f) - 1 >= dg and f:
            c = f[-1] * inv % p
            shift = len(f) - 1 - dg
            for j in range(len(g)):
                f[shift + j] = (f[shift + j] - c * g[j]) % p
            _ptrim(f)
        f, g = g, f
    return f


def _irreducible_mod_p(mod, p):
    """Rabin's test for a monic polynomial over F_p."""
    a = len(mod) - 1
    if a == 1:
        return True
    x = [0, 1]
    xq = _ppowmod(x, p ** a, mod, p)
    diff = _ptrim([(xi - yi) % p for xi, yi in
                   zip(xq + [0] * (2 - len(xq)), x + [0] * max(0, len(xq) - 2))])
    # xq - x must be 0 mod the modulus
    if diff:
        return False
    for ell in factorize(a)[0]:
        xe = _ppowmod(x, p ** (a // ell), mod, p)
        d = [(c - (1 if i == 1 else 0)) % p for i, c in
             enumerate(xe + [0] * (2 - len(xe)))]
        g = _pgcd(list(mod), _ptrim(d), p)
        if len(g) - 1 >= 1:
            return False
    return True


def _smallest_irreducible(p, a):
    for m in range(p ** a):
        coeffs = tuple((m // p ** (a - 1 - i)) % p for i in range(a))
        cand = list(coeffs) + [1]
        if _irreducible_mod_p(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible of degree %d over F_%d" % (a, p))


class FieldSpec:
    """The field GF(p^a).  Immutable; instances are interned by make_field."""

    __slots__ = ("p", "a", "q", "modulus", "ctx", "_exp", "_log",
                 "_q1_factors", "_gen_enc", "_embeddings")

    def __init__(self, p, a, modulus):
        self.p = p
        self.a = a
        self.q = p ** a
        self.modulus = modulus  # tuple of a+1 ints, ascending, or None for a == 1
        self._q1_factors = None
        self._gen_enc = None
        self._embeddings = {}
        if a == 1:
            self.ctx = _kernels.prime_ctx(p)
            self._exp = self._log = None
        elif self.q <= TABLE_CAP:
            exp, log, gen = self._build_tables()
            self._exp, self._log, self._gen_enc = exp, log, gen
            self.ctx = _kernels.ext_ctx(p, a, self.q, exp, log)
        else:
            self.ctx = None
            self._exp = self._log = None

    # -- construction helpers --

    def _mul_raw(self, x, y):
        """Encoding product by polynomial arithmetic (no tables)."""
        f = self._decode(x)
        g = self._decode(y)
        return self._encode(_pmulmod(f, g, list(self.modulus), self.p))

    def _decode(self, enc):
        p = self.p
        out = []
        for _ in range(self.a):
            out.append(enc % p)
            enc //= p
        return _ptrim(out)

    def _encode(self, coeffs):
        enc = 0
        for c in reversed(coeffs):
            enc = enc * self.p + c
        return enc

    def q1_factors(self):
        if self._q1_factors is None:
            self._q1_factors = factorize(self.q - 1)[0]
        return self._q1_factors

    def _build_tables(self):
        q = self.q
        gen = self._find_generator_raw()
        exp = np.zeros(2 * (q - 1), dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        x = 1
        for i in range(q - 1):
            exp[i] = x
            exp[i + q - 1] = x
            log[x] = i
            x = self._mul_raw(x, gen)
        assert x == 1, "generator order wrong"
        return exp, log, gen

    def _find_generator_raw(self):
        q1 = self.q - 1
        fac = self.q1_factors()
        cofs = [q1 // ell for ell in fac]

        def powr(x, e):
            r = 1
            b = x
            while e:
                if e & 1:
                    r = self._mul_raw(r, b)
                b = self._mul_raw(b, b)
                e >>= 1
            return r

        for cand in range(2, self.q):
            if all(powr(cand, c) != 1 for c in cofs):
                return cand
        raise AssertionError("no generator found")

    # -- scalar encoding arithmetic --

    def add_enc(self, x, y):
        p = self.p
        if self.a == 1:
            return (x + y) % p
        if p == 2:
            return x ^ y
        s = 0
        mult = 1
        for _ in range(self.a):
            s += ((x + y) % p) * mult
            x //= p
            y //= p
            mult *= p
        return s

    def sub_enc(self, x, y):
        return self.add_enc(x, self.neg_enc(y))

    def neg_enc(self, x):
        p = self.p
        if self.a == 1:
            return (-x) % p
        if p == 2:
            return x
        s = 0
        mult = 1
        for _ in range(self.a):
            s += ((-x) % p) * mult
            x //= p
            mult *= p
        return s

    def mul_enc(self, x, y):
        if self.a == 1:
            return x * y % self.p
        if x == 0 or y == 0:
            return 0
        if self._log is not None:
            return int(self._exp[self._log[x] + self._log[y]])
        return self._mul_raw(x, y)

    def inv_enc(self, x):
        if x == 0:
            raise DivisionByZero("0 has no inverse in GF(%d)" % self.q)
        if self.a == 1:
            return pow(x, self.p - 2, self.p)
        if self._log is not None:
            qm1 = self.q - 1
            return int(self._exp[(qm1 - self._log[x]) % qm1])
        return self.pow_enc(x, self.q - 2)

    def pow_enc(self, x, n):
        if n < 0:
            raise ValueError("pow_enc takes nonnegative exponents")
        if x == 0:
            return 0 if n else 1
        if self._log is not None and self.a > 1:
            return int(self._exp[(self._log[x] * (n % (self.q - 1))) % (self.q - 1)])
        r = 1
        b = x
        while n:
            if n & 1:
                r = self.mul_enc(r, b)
            b = self.mul_enc(b, b)
            n >>= 1
        return r

    def frob_enc(self, x, k):
        k %= self.a
        if k == 0 or x == 0:
            return x
        return self.pow_enc(x, self.p ** k)

    def order_enc(self, x):
        if x == 0:
            raise DivisionByZero("0 has no multiplicative order")
        return factorization_order_descend(
            self.q - 1, self.q1_factors(), lambda m: self.pow_enc(x, m) == 1)

    def generator_enc(self):
        """Smallest-encoding generator of the multiplicative group."""
        if self._gen_enc is None:
            if self.q == 2:
                self._gen_enc = 1
            else:
                fac = self.q1_factors()
                cofs = [(self.q - 1) // ell for ell in fac]
                for cand in range(2, self.q):
                    if all(self.pow_enc(cand, c) != 1 for c in cofs):
                        self._gen_enc = cand
                        break
        return self._gen_enc

    # -- element factory and dunder plumbing --

    def element(self, value):
        """FqElem from an integer encoding or an ascending coefficient list."""
        if isinstance(value, (list, tuple)):
            if len(value) > self.a:
                raise DegreeMismatch("coefficient vector longer than degree")
            enc = 0
            for c in reversed(value):
                enc = enc * self.p + c % self.p
            return FqElem(self, enc)
        value = int(value)
        if not 0 <= value < self.q:
            raise ValueError("encoding out of range [0, %d)" % self.q)
        return FqElem(self, value)

    @property
    def zero(self):
        return FqElem(self, 0)

    @property
    def one(self):
        return FqElem(self, 1)

    @property
    def gen(self):
        return FqElem(self, self.generator_enc())

    def elements(self):
        for enc in range(self.q):
            yield FqElem(self, enc)

    def __eq__(self, other):
        return (isinstance(other, FieldSpec) and self.p == other.p
                and self.a == other.a and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.a, self.modulus))

    def __repr__(self):
        if self.a == 1:
            return "GF(%d)" % self.p
        return "GF(%d^%d; %s)" % (self.p, self.a, list(self.modulus))


class FqElem:
    """An element of a FieldSpec, stored by its integer encoding."""

    __slots__ = ("field", "enc")

    def __init__(self, field, enc):
        self.field = field
        self.enc = enc

    @property
    def coeffs(self):
        p = self.field.p
        e = self.enc
        out = []
        for _ in range(self.field.a):
            out.append(e % p)
            e //= p
        return tuple(out)

    @property
    def encoding(self):
        return self.enc

    def _check(self, other):
        if not isinstance(other, FqElem) or other.field != self.field:
            raise FieldMismatch("operands belong to different fields")

    def __add__(self, other):
        self._check(other)
        return FqElem(self.field, self.field.add_enc(self.enc, other.enc))

    def __sub__(self, other):
        self._check(other)
        return FqElem(self.field, self.field.sub_enc(self.enc, other.enc))

    def __neg__(self):
        return FqElem(self.field, self.field.neg_enc(self.enc))

    def __mul__(self, other):
        self._check(other)
        return FqElem(self.field, self.field.mul_enc(self.enc, other.enc))

    def __pow__(self, n):
        return FqElem(self.field, self.field.pow_enc(self.enc, n))

    def inverse(self):
        return FqElem(self.field, self.field.inv_enc(self.enc))

    def __eq__(self, other):
        return (isinstance(other, FqElem) and other.field == self.field
                and other.enc == self.enc)

    def __hash__(self):
        return hash((self.field, self.enc))

    def __bool__(self):
        return self.enc != 0

    def __repr__(self):
        return "FqElem(%r, %d)" % (self.field, self.enc)


def make_field(p, a=1, modulus=None):
    """Validated, interned FieldSpec for GF(p^a).

    `modulus` is an ascending coefficient list of length a+1 (monic); when
    omitted and a > 1 the lexicographically smallest monic irreducible of
    degree a is selected.
    """
    p = int(p)
    a = int(a)
    if not is_prime(p):
        raise NotPrime("%d is not prime" % p)
    if p >= 1 << 31:
        raise NotPrime("p must be below 2^31")
    if a < 1:
        raise DegreeMismatch("extension degree must be >= 1")
    if a == 1:
        if modulus is not None:
            raise DegreeMismatch("prime fields take no modulus")
        key = (p, 1, None)
    else:
        if modulus is None:
            key0 = (p, a, "default")
            if key0 in _registry:
                return _registry[key0]
            modulus = _smallest_irreducible(p, a)
            got = make_field(p, a, modulus)
            _registry[key0] = got
            return got
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != a + 1:
            raise DegreeMismatch("modulus must have degree %d" % a)
        if modulus[-1] != 1:
            raise ReducibleModulus("modulus must be monic")
        if not _irreducible_mod_p(list(modulus), p):
            raise ReducibleModulus("modulus %s is reducible over F_%d"
                                   % (list(modulus), p))
        key = (p, a, modulus)
    if key not in _registry:
        _registry[key] = FieldSpec(p, a, modulus if a > 1 else None)
    return _registry[key]


def field_from_q(q):
    """GF(q) with the default modulus, from a prime power q."""
    from ._intmath import is_prime_power
    pp = is_prime_power(q)
    if pp is None:
        from .errors import CompositeQ
        raise CompositeQ("%d is not a prime power" % q)
    return make_field(pp[0], pp[1])


# --- the spec's operation surface ---

def add(x, y):
    return x + y


def sub(x, y):
    return x - y


def mul(x, y):
    return x * y


def inv(x):
    return x.inverse()


def powe(x, n):
    return x ** n


def frobenius(x, k=1):
    """x^(p^k); frobenius(., a) is the identity."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return FqElem(x.field, x.field.frob_enc(x.enc, k))


def element_order(x):
    """Least n >= 1 with x^n = 1 (x nonzero)."""
    return x.field.order_enc(x.enc)


def _roots_in_target(modulus, target):
    """Encodings of the roots of a prime-coefficient polynomial in target."""
    roots = []
    if target.q <= (1 << 16):
        for cand in range(target.q):
            acc = 0
            for c in reversed(modulus):
                acc = target.add_enc(target.mul_enc(acc, cand), c % target.p)
            if acc == 0:
                roots.append(cand)
    else:
        from . import fpoly
        f = fpoly.DensePoly(target, [c % target.p for c in modulus])
        for g, _ in fpoly.factor(f).factors:
            if g.degree == 1:
                roots.append(target.neg_enc(g.coeffs[0]))
    return sorted(roots)


def embed(x, target):
    """Image of x under the fixed embedding of its field into target.

    The embedding sends the source generator (the class of the variable) to
    the smallest-encoding root of the source modulus in the target; it is a
    ring homomorphism, computed once per field pair and cached.
    """
    source = x.field
    if source == target:
        return x
    if source.p != target.p or target.a % source.a != 0:
        raise NoEmbedding("no embedding GF(%d^%d) -> GF(%d^%d)"
                          % (source.p, source.a, target.p, target.a))
    if source.a == 1:
        return FqElem(target, x.enc)
    beta = source._embeddings.get((target.p, target.a, target.modulus))
    if beta is None:
        roots = _roots_in_target(source.modulus, target)
        if not roots:
            raise NoEmbedding("source modulus has no root in target")
        beta = roots[0]
        source._embeddings[(target.p, target.a, target.modulus)] = beta
    acc = 0
    for c in reversed(x.coeffs):
        acc = target.add_enc(target.mul_enc(acc, beta), c)
    return FqElem(target, acc)
