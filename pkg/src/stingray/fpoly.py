"""Dense univariate polynomials over GF(q), with exact factorization.

Coefficients are stored ascending as integer encodings with no trailing
zeros; the zero polynomial is the empty list (degree -1).  Factorization
is squarefree decomposition, then distinct-degree splitting, then
Cantor-Zassenhaus equal-degree splitting (the trace-map variant in
characteristic 2).  The randomness is a fixed-seed splitmix64 stream, so
factor() is deterministic, and the factor list is sorted by (degree,
ascending coefficient tuple) to make the output canonical.
"""

from ._intmath import SplitMix64, factorize, factorization_order_descend
from .errors import (CharacteristicDividesR, DivisionByZero, FieldMismatch,
                     ZeroPolynomial)


class DensePoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            if not 0 <= c < field.q:
                raise ValueError("coefficient encoding out of range")
        self.coeffs = cs

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return self.coeffs == [1]

    def _check(self, other):
        if not isinstance(other, DensePoly) or other.field != self.field:
            raise FieldMismatch("polynomials over different fields")

    def __add__(self, other):
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add_enc(out[i], c)
        return DensePoly(F, out)

    def __sub__(self, other):
        self._check(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for i in range(n):
            x = self.coeffs[i] if i < len(self.coeffs) else 0
            y = other.coeffs[i] if i < len(other.coeffs) else 0
            out.append(F.sub_enc(x, y))
        return DensePoly(F, out)

    def __neg__(self):
        F = self.field
        return DensePoly(F, [F.neg_enc(c) for c in self.coeffs])

    def __mul__(self, other):
        self._check(other)
        F = self.field
        if self.is_zero() or other.is_zero():
            return DensePoly(F, [])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if ci:
                for j, cj in enumerate(other.coeffs):
                    if cj:
                        out[i + j] = F.add_enc(out[i + j], F.mul_enc(ci, cj))
        return DensePoly(F, out)

    def scale(self, c):
        """Multiply by the scalar encoding c."""
        F = self.field
        return DensePoly(F, [F.mul_enc(c, x) for x in self.coeffs])

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return DensePoly(F, []), DensePoly(F, rem)
        quo = [0] * (dq + 1)
        inv_lead = F.inv_enc(other.coeffs[-1])
        for i in range(dq, -1, -1):
            top = rem[i + other.degree]
            if top:
                c = F.mul_enc(top, inv_lead)
                quo[i] = c
                for j, oc in enumerate(other.coeffs):
                    rem[i + j] = F.sub_enc(rem[i + j], F.mul_enc(c, oc))
        return DensePoly(F, quo), DensePoly(F, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = DensePoly(self.field, [1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def monic(self):
        if self.is_zero():
            raise ZeroPolynomial("zero polynomial has no monic associate")
        if self.coeffs[-1] == 1:
            return self
        return self.scale(self.field.inv_enc(self.coeffs[-1]))

    def derivative(self):
        F = self.field
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(F.mul_enc(i % F.p, self.coeffs[i]))
        return DensePoly(F, out)

    def eval_enc(self, x):
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add_enc(F.mul_enc(acc, x), c)
        return acc

    def evaluate(self, x):
        if x.field != self.field:
            raise FieldMismatch("evaluation point in a different field")
        return self.field.element(self.eval_enc(x.enc))

    def map_field(self, target, send):
        """Apply the coefficient map send: enc -> enc into target."""
        return DensePoly(target, [send(c) for c in self.coeffs])

    def __eq__(self, other):
        return (isinstance(other, DensePoly) and other.field == self.field
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((self.field, tuple(self.coeffs)))

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("t" if c == 1 else "%d*t" % c)
            else:
                terms.append("t^%d" % i if c == 1 else "%d*t^%d" % (c, i))
        return "Poly(%s)" % " + ".join(terms)


def constant(field, c):
    return DensePoly(field, [c])


def x_poly(field):
    return DensePoly(field, [0, 1])


def from_roots(field, encs):
    f = DensePoly(field, [1])
    for r in encs:
        f = f * DensePoly(field, [field.neg_enc(r), 1])
    return f


def gcd(f, g):
    """Monic greatest common divisor."""
    f._check(g)
    while not g.is_zero():
        f, g = g, f % g
    if f.is_zero():
        return f
    return f.monic()


def lcm(f, g):
    if f.is_zero() or g.is_zero():
        return DensePoly(f.field, [])
    return ((f * g) // gcd(f, g)).monic()


def powmod(f, e, mod):
    """f^e mod `mod`, square-and-multiply; e may be a big integer."""
    result = DensePoly(f.field, [1]) % mod
    base = f % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def is_irreducible(f):
    """Rabin's criterion over GF(q)."""
    n = f.degree
    if n <= 0:
        return False
    if n == 1:
        return True
    F = f.field
    q = F.q
    f = f.monic()
    x = x_poly(F)
    if (powmod(x, q ** n, f) - x % f).is_zero():
        for ell in factorize(n)[0]:
            g = gcd(powmod(x, q ** (n // ell), f) - x % f, f)
            if g.degree >= 1:
                return False
        return True
    return False


def _pth_root(f):
    """g with g^p = f, for f whose exponents are all multiples of p."""
    F = f.field
    out = []
    # c^(p^(a-1)) is the p-th root of c in GF(p^a)
    e = F.p ** (F.a - 1)
    for i in range(0, len(f.coeffs), F.p):
        out.append(F.pow_enc(f.coeffs[i], e))
    return DensePoly(F, out)


def squarefree_decomposition(f):
    """List of (monic squarefree poly, multiplicity), unsorted."""
    F = f.field
    p = F.p
    out = []
    f = f.monic()
    c = gcd(f, f.derivative())
    w = f // c
    i = 1
    while not w.is_one():
        y = gcd(w, c)
        fac = w // y
        if not fac.is_one():
            out.append((fac, i))
        w = y
        c = c // y
        i += 1
    if not c.is_one():
        for g, m in squarefree_decomposition(_pth_root(c)):
            out.append((g, m * p))
    return out


def _distinct_degree(f):
    """Split squarefree monic f into (product-of-degree-d-factors, d) parts."""
    F = f.field
    q = F.q
    out = []
    x = x_poly(F)
    h = x % f
    d = 0
    rest = f
    while rest.degree > 2 * d + 1:
        d += 1
        h = powmod(h, q, rest)
        g = gcd(h - x % rest, rest)
        if g.degree > 0:
            out.append((g, d))
            rest = rest // g
            h = h % rest
    if rest.degree > 0:
        out.append((rest, rest.degree))
    return out


def _random_poly(F, deg_bound, rng):
    return DensePoly(F, [rng.randrange(F.q) for _ in range(deg_bound)])


def _equal_degree(f, d, rng):
    """All monic irreducible factors of f, every one of degree d."""
    if f.degree == d:
        return [f]
    F = f.field
    q = F.q
    while True:
        h = _random_poly(F, f.degree, rng)
        if h.degree < 1:
            continue
        if q % 2 == 1:
            g = gcd(h, f)
            if 0 < g.degree < f.degree:
                pass
            else:
                w = powmod(h, (q ** d - 1) // 2, f)
                g = gcd(w - constant(F, 1), f)
        else:
            # trace map sum h^(2^i), i < k*d, over GF(2^k)
            t = h % f
            acc = t
            for _ in range(F.a * d - 1):
                t = powmod(t, 2, f)
                acc = acc + t
            g = gcd(acc, f)
        if 0 < g.degree < f.degree:
            return _equal_degree(g, d, rng) + _equal_degree(f // g, d, rng)


class Factorization:
    """unit * product of factors[i][0] ** factors[i][1]."""

    __slots__ = ("unit", "factors")

    def __init__(self, unit, factors):
        self.unit = unit
        self.factors = factors

    def expand(self, field):
        f = constant(field, self.unit)
        for g, m in self.factors:
            f = f * g ** m
        return f

    def __repr__(self):
        return "Factorization(unit=%d, %r)" % (self.unit, self.factors)


def factor(f):
    """Complete factorization into monic irreducibles, canonically ordered."""
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    F = f.field
    unit = f.coeffs[-1]
    if f.degree == 0:
        return Factorization(unit, [])
    rng = SplitMix64(0x5EEDFACE)
    pieces = []
    for g, mult in squarefree_decomposition(f.monic()):
        for part, d in _distinct_degree(g):
            for irr in _equal_degree(part, d, rng):
                pieces.append((irr, mult))
    pieces.sort(key=lambda gm: (gm[0].degree, tuple(gm[0].coeffs)))
    return Factorization(unit, pieces)


_factor_cache = {}


def factor_cached(f):
    """factor() with memoization keyed by field and coefficients.

    Classification sweeps hit the same few characteristic and minimal
    polynomials thousands of times; Factorization objects are immutable
    in practice, so sharing them is safe.
    """
    key = (f.field.p, f.field.a, f.field.modulus, tuple(f.coeffs))
    got = _factor_cache.get(key)
    if got is None:
        got = factor(f)
        _factor_cache[key] = got
    return got


def roots(f):
    """Encodings of the roots of f in its own coefficient field, sorted."""
    out = []
    for g, _ in factor(f).factors:
        if g.degree == 1:
            out.append(f.field.neg_enc(g.coeffs[0]))
    return sorted(out)


def cyclotomic_quotient(field, r):
    """(t^r - 1)/(t - 1) = 1 + t + ... + t^(r-1) over the field."""
    if r < 2:
        raise ValueError("r must be >= 2")
    if r % field.p == 0:
        raise CharacteristicDividesR(
            "r = %d is divisible by the characteristic %d" % (r, field.p))
    return DensePoly(field, [1] * r)


_root_order_cache = {}


def root_order_in_quotient(f):
    """Multiplicative order of t in GF(q)[t]/(f), f irreducible, f(0) != 0.

    This is the common order of the roots of f in its splitting field.
    """
    F = f.field
    if f.coeffs and f.coeffs[0] == 0:
        raise ZeroPolynomial("t is not a unit modulo f when f(0) = 0")
    key = (F.p, F.a, F.modulus, tuple(f.coeffs))
    got = _root_order_cache.get(key)
    if got is not None:
        return got
    n = F.q ** f.degree - 1
    from .ppd import factor_qe_minus_one
    fac = factor_qe_minus_one(F.q, f.degree)[0]
    x = x_poly(F)
    got = factorization_order_descend(
        n, fac, lambda m: powmod(x, m, f).is_one())
    _root_order_cache[key] = got
    return got
