"""Primitive prime divisors of q^e - 1.

A prime r is an e-ppd for q when r divides q^e - 1 but none of q^i - 1
for 1 <= i < e; equivalently the order of q mod r is exactly e.  Every
such r satisfies r = 1 (mod e).

q^e - 1 is factored through its cyclotomic split q^e - 1 = prod_{k | e}
Phi_k(q), with each Phi_k(q) computed exactly by Moebius inversion and
factored once per (q, k) pair; the per-pair cache is what keeps sweeps
over many e for the same q cheap, since divisors k of different e repeat.
"""

from dataclasses import dataclass

from ._intmath import factorize, is_prime, is_probable_prime, is_prime_power
from .errors import (CompositeQ, NotCoprime, NotPrime, StingrayUsageError,
                     TooLarge)

_BIT_CAP = 512

_phi_cache = {}        # (q, k) -> (factor dict, certified)
_ppd_cache = {}        # (q, e) -> PpdResult


def _mobius_divisor_data(k):
    """List of (d, mu(k/d)) over divisors d of k, mu nonzero only."""
    fac = factorize(k)[0]
    primes = list(fac)
    out = []
    for mask in range(1 << len(primes)):
        m = 1
        for i, p in enumerate(primes):
            if mask >> i & 1:
                m *= p
        # d = k/m, mu(m) = (-1)^popcount
        out.append((k // m, -1 if bin(mask).count("1") % 2 else 1))
    return out


def cyclotomic_value(k, q):
    """Phi_k(q) as an exact integer, via Phi_k(q) = prod (q^d-1)^mu(k/d)."""
    num = 1
    den = 1
    for d, mu in _mobius_divisor_data(k):
        term = q ** d - 1
        if mu == 1:
            num *= term
        else:
            den *= term
    assert num % den == 0
    return num // den


def _factor_phi(q, k):
    got = _phi_cache.get((q, k))
    if got is None:
        got = factorize(cyclotomic_value(k, q))
        _phi_cache[(q, k)] = got
    return got


def factor_qe_minus_one(q, e):
    """(prime -> multiplicity, certified) for q^e - 1, via cyclotomic parts."""
    if q ** e - 1 >= 1 << _BIT_CAP:
        raise TooLarge("q^e - 1 exceeds %d bits" % _BIT_CAP)
    total = {}
    certified = True
    for k in _divisors(e):
        fac, cert = _factor_phi(q, k)
        certified = certified and cert
        for r, m in fac.items():
            total[r] = total.get(r, 0) + m
    return total, certified


def _divisors(n):
    fac = factorize(n)[0]
    divs = [1]
    for p, m in fac.items():
        divs = [d * p ** i for d in divs for i in range(m + 1)]
    return sorted(divs)


def multiplicative_order(r, q):
    """Order of q modulo the prime r."""
    if not is_prime(r):
        raise NotPrime("%d is not prime" % r)
    if q % r == 0:
        raise NotCoprime("%d divides %d" % (r, q))
    n = r - 1
    fac = factorize(n)[0]
    order = n
    for p in fac:
        while order % p == 0 and pow(q, order // p, r) == 1:
            order //= p
    return order


def is_eppd_prime(r, q, e):
    """True when the prime r divides q^e - 1 and no earlier q^i - 1."""
    if not is_prime(r):
        raise NotPrime("%d is not prime" % r)
    if e < 1:
        raise StingrayUsageError("e must be >= 1")
    if q % r == 0:
        return False
    if pow(q, e, r) != 1:
        return False
    for ell in factorize(e)[0]:
        if pow(q, e // ell, r) == 1:
            return False
    return True


@dataclass(frozen=True)
class PpdResult:
    q: int
    e: int
    primes: tuple        # ((r, multiplicity in q^e - 1), ...) sorted by r
    certified: bool

    @property
    def is_empty(self):
        return not self.primes

    @property
    def ppd_part(self):
        out = 1
        for r, m in self.primes:
            out *= r ** m
        return out

    def prime_list(self):
        return [r for r, _ in self.primes]


_TRIAL_STEPS = 50000


def _factor_ppd_part(q, e):
    """(dict r -> multiplicity in q^e - 1, certified) over e-ppd primes.

    Every e-ppd prime divides Phi_e(q) at its full multiplicity in
    q^e - 1, and every prime factor of Phi_e(q) is either an e-ppd prime
    or divides e, so stripping the primes of e isolates the ppd part
    without factoring the rest of q^e - 1.  The remaining factors all lie
    in the residue class 1 mod e, which makes class-restricted trial
    division effective; a rho fallback covers rare large composites.
    """
    val = cyclotomic_value(e, q)
    for ell in factorize(e)[0]:
        while val % ell == 0:
            val //= ell
    out = {}
    certified = True
    c = e + 1
    steps = 0
    while val > 1:
        prime, cert = is_probable_prime(val)
        if prime:
            certified = certified and cert
            out[val] = out.get(val, 0) + 1
            break
        advanced = False
        while steps < _TRIAL_STEPS and c * c <= val:
            steps += 1
            if val % c == 0:
                m = 0
                while val % c == 0:
                    val //= c
                    m += 1
                out[c] = m
                advanced = True
                break
            c += e
        if advanced:
            continue
        if c * c > val:
            # the class was swept exhaustively below sqrt, so val is prime
            out[val] = out.get(val, 0) + 1
            break
        fac, cert = factorize(val, trial=False)
        certified = certified and cert
        for r, m in fac.items():
            out[r] = out.get(r, 0) + m
        break
    return out, certified


def primitive_prime_divisors(q, e):
    """All e-ppd primes of q^e - 1 with their multiplicities.

    q must be a prime power, and q^e - 1 must fit under the factoring cap.
    """
    if e < 1:
        raise StingrayUsageError("e must be >= 1")
    if q < 2 or is_prime_power(q) is None:
        raise CompositeQ("%d is not a prime power" % q)
    got = _ppd_cache.get((q, e))
    if got is not None:
        return got
    if q ** e - 1 >= 1 << _BIT_CAP:
        raise TooLarge("q^e - 1 exceeds %d bits" % _BIT_CAP)
    if e == 1:
        factors, certified = factor_qe_minus_one(q, 1)
        primes = [(r, factors[r]) for r in sorted(factors)]
    else:
        factors, certified = _factor_ppd_part(q, e)
        primes = []
        for r in sorted(factors):
            assert r % e == 1
            primes.append((r, factors[r]))
    res = PpdResult(q=q, e=e, primes=tuple(primes), certified=certified)
    _ppd_cache[(q, e)] = res
    return res


def smallest_ppd_prime(q, e):
    """Least e-ppd prime of q^e - 1, or None."""
    res = primitive_prime_divisors(q, e)
    return res.primes[0][0] if res.primes else None
