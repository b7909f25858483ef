"""Big-integer number theory: primality, factoring, prime powers.

Factoring stack: trial division by all primes up to 10^6 (realized as gcds
against precomputed primorial segments, which tests the identical prime set
far faster on 100-bit inputs), then Brent's variant of Pollard rho, with
Miller-Rabin primality on the cofactors.  Miller-Rabin is deterministic for
n < 3.317e24 via the standard 12-base set; beyond that it falls back to 64
pseudo-random rounds and the result is flagged uncertified.
"""

import math

# Deterministic Miller-Rabin base set, valid for all n < 3,317,044,064,679,887,385,961,981.
_MR_DETERMINISTIC_BOUND = 3317044064679887385961981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_RANDOM_ROUNDS = 64

_SMALL_PRIME_LIMIT = 10 ** 6
_small_primes = None          # sieve of primes < _SMALL_PRIME_LIMIT
_primorial_segments = None    # list of (product, primes-slice) blocks


class SplitMix64:
    """Tiny deterministic 64-bit generator (splitmix64).

    Used everywhere a seeded RNG is needed so that results do not depend on
    Python or numpy RNG implementation details.
    """

    _MASK = (1 << 64) - 1

    def __init__(self, seed):
        self.state = seed & self._MASK

    def next64(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & self._MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self._MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self._MASK
        return z ^ (z >> 31)

    def randrange(self, n):
        if n <= 0:
            raise ValueError("randrange needs n >= 1")
        if n <= 1 << 64:
            # rejection sampling; unbiased for any n <= 2^64
            lim = (1 << 64) - ((1 << 64) % n)
            while True:
                x = self.next64()
                if x < lim:
                    return x % n
        # wide values: stitch 64-bit words, mask to bit length, reject
        nbits = n.bit_length()
        words = (nbits + 63) // 64
        while True:
            x = 0
            for _ in range(words):
                x = x << 64 | self.next64()
            x &= (1 << nbits) - 1
            if x < n:
                return x

    def randint(self, lo, hi):
        return lo + self.randrange(hi - lo + 1)

    def choice(self, seq):
        return seq[self.randrange(len(seq))]

    def shuffle(self, seq):
        for i in range(len(seq) - 1, 0, -1):
            j = self.randrange(i + 1)
            seq[i], seq[j] = seq[j], seq[i]


def _sieve(limit):
    flags = bytearray([1]) * limit
    flags[0:2] = b"\x00\x00"
    for i in range(2, int(limit ** 0.5) + 1):
        if flags[i]:
            flags[i * i::i] = bytearray(len(flags[i * i::i]))
    return [i for i in range(limit) if flags[i]]


def _ensure_tables():
    global _small_primes, _primorial_segments
    if _small_primes is not None:
        return
    _small_primes = _sieve(_SMALL_PRIME_LIMIT)
    segments = []
    block = 512
    for i in range(0, len(_small_primes), block):
        chunk = _small_primes[i:i + block]
        prod = 1
        for p in chunk:
            prod *= p
        segments.append((prod, chunk))
    _primorial_segments = segments


def is_probable_prime(n):
    """Miller-Rabin.  Returns (is_prime, certified)."""
    if n < 2:
        return False, True
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p, True
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1

    def witness(a):
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            return False
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                return False
        return True

    if n < _MR_DETERMINISTIC_BOUND:
        for a in _MR_BASES:
            if witness(a):
                return False, True
        return True, True
    rng = SplitMix64(n & ((1 << 64) - 1))
    for _ in range(_MR_RANDOM_ROUNDS):
        a = rng.randint(2, n - 2)
        if witness(a):
            return False, True
    return True, False


def is_prime(n):
    return is_probable_prime(n)[0]


def iroot(n, k):
    """Integer k-th root: largest r with r^k <= n."""
    if n < 0:
        raise ValueError("negative radicand")
    if n < 2 or k == 1:
        return n
    r = int(round(n ** (1.0 / k)))
    # float seed may be off by a little; fix up exactly
    while r > 0 and r ** k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def is_prime_power(n):
    """Return (p, a) with n = p^a and p prime, or None."""
    if n < 2:
        return None
    for a in range(n.bit_length(), 0, -1):
        p = iroot(n, a)
        if p < 2:
            continue
        if p ** a == n and is_prime(p):
            return p, a
    return None


def _brent_rho(n, rng):
    """One nontrivial factor of composite n (not necessarily prime)."""
    if n % 2 == 0:
        return 2
    while True:
        y = rng.randint(1, n - 1)
        c = rng.randint(1, n - 1)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            y = ys
            while g == 1:
                y = (y * y + c) % n
                g = math.gcd(abs(x - y), n)
        if g != n:
            return g
        # cycle collapsed; retry with new parameters


def factorize(n, trial=True):
    """Complete factorization of n >= 1.

    Returns (factors, certified): factors is a dict prime -> exponent, and
    certified is False only if some prime passed just the probabilistic
    Miller-Rabin rounds (inputs beyond the deterministic base-set range).
    trial=False skips the small-prime sweep for callers that have already
    stripped small factors.
    """
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    _ensure_tables()
    factors = {}
    certified = True
    if n == 1:
        return factors, certified

    # Trial stage: gcd against primorial segments covers every prime < 10^6.
    if trial:
        for prod, chunk in _primorial_segments:
            if n == 1 or chunk[0] * chunk[0] > n:
                break
            g = math.gcd(n, prod)
            if g == 1:
                continue
            for p in chunk:
                if g % p == 0:
                    e = 0
                    while n % p == 0:
                        n //= p
                        e += 1
                    factors[p] = e
                    g //= p
                    while g % p == 0:
                        g //= p
                    if g == 1:
                        break

    # Rho stage on what survives.
    stack = [n] if n > 1 else []
    rng = SplitMix64(0xC0FFEE ^ n & ((1 << 64) - 1))
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        prime, cert = is_probable_prime(m)
        if prime:
            certified = certified and cert
            factors[m] = factors.get(m, 0) + 1
            continue
        # perfect powers make rho needlessly slow; peel them first
        handled = False
        for k in range(2, m.bit_length()):
            r = iroot(m, k)
            if r > 1 and r ** k == m:
                stack.extend([r] * k)
                handled = True
                break
        if handled:
            continue
        d = _brent_rho(m, rng)
        stack.append(d)
        stack.append(m // d)
    return factors, certified


def factorization_order_descend(n, factors, power):
    """Least m dividing n with power(m) trivial, given n's factored form.

    `power(m)` must return True iff x^m is the identity for the element x
    whose order is being computed; n must be a valid exponent (power(n)
    True).  Standard descent: strip each prime while the power stays
    trivial.
    """
    order = n
    for p in factors:
        while order % p == 0 and power(order // p):
            order //= p
    return order
