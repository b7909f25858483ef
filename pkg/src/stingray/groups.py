"""Finitely generated matrix groups over GF(q) and the explicit modules
used throughout: deleted permutation modules of alternating groups, the
SL2(q) family (natural, symmetric cube, twisted tensor), and classical
generator sets, plus the group-level algorithms (spinning, a Norton-style
irreducibility test, product-replacement random elements, and a
deterministic Schreier-Sims order computation on vector orbits).

Permutations are tuples of 0-indexed images; perm_mul(s, t) applies s
first, so all module maps satisfy map(perm_mul(s, t)) = map(s) * map(t)
under the package's row-vector action.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import ffield, fmatrix
from ._intmath import SplitMix64
from .errors import (ActionTooLarge, BadTwist, CharTooSmallForSymcube,
                     DegreeTooSmall, DimensionMismatch, OddDimensionSymplectic,
                     Singular, ZeroVector)

DEFAULT_SEED = 0xC0FFEE


class MatrixGroup:
    """Immutable bundle of invertible same-shape generators."""

    __slots__ = ("field", "dim", "generators", "label")

    def __init__(self, field, dim, generators, label=""):
        if not generators:
            raise DimensionMismatch("a matrix group needs at least one generator")
        for i, g in enumerate(generators):
            if g.field != field or g.nrows != dim or g.ncols != dim:
                raise DimensionMismatch("generator %d has the wrong shape" % i)
            if g.rank() != dim:
                raise Singular("generator %d is singular" % i)
        self.field = field
        self.dim = dim
        self.generators = tuple(generators)
        self.label = label

    def transpose_group(self):
        return MatrixGroup(self.field, self.dim,
                           [g.transpose() for g in self.generators],
                           label=self.label + " (transpose)")

    def __repr__(self):
        return "MatrixGroup(%r, dim=%d, %d gens, %r)" % (
            self.field, self.dim, len(self.generators), self.label)


# --- permutation plumbing ---

def perm_identity(n):
    return tuple(range(n))

def perm_from_cycles(n, cycles):
    """Permutation from 1-indexed cycles, e.g. (14, [(1,2,3)])."""
    img = list(range(n))
    for cyc in cycles:
        for i, a in enumerate(cyc):
            b = cyc[(i + 1) % len(cyc)]
            if not 1 <= a <= n:
                raise ValueError("cycle point %d outside 1..%d" % (a, n))
            img[a - 1] = b - 1
    return tuple(img)


def perm_mul(s, t):
    """Apply s, then t."""
    return tuple(t[s[i]] for i in range(len(s)))


def perm_order(s):
    n = len(s)
    seen = [False] * n
    order = 1
    for i in range(n):
        if not seen[i]:
            ln = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = s[j]
                ln += 1
            order = order * ln // math.gcd(order, ln)
    return order


@dataclass(frozen=True)
class CycleType:
    n: int
    cycles: tuple    # sorted descending, includes fixed points as 1s

    def __post_init__(self):
        if sum(self.cycles) != self.n:
            raise ValueError("cycle lengths must sum to n")


def cycle_type(s):
    n = len(s)
    seen = [False] * n
    lens = []
    for i in range(n):
        if not seen[i]:
            ln = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = s[j]
                ln += 1
            lens.append(ln)
    return CycleType(n=n, cycles=tuple(sorted(lens, reverse=True)))


# --- deleted permutation module ---

@dataclass(frozen=True)
class DeletedPermModule:
    group: MatrixGroup
    to_matrix: object      # permutation tuple -> DenseMatrix
    dim: int
    n: int
    p: int


def deleted_perm_module(n, p):
    """The fully deleted permutation module of A_n over F_p.

    Dimension n-1 when p does not divide n, n-2 when it does.  The basis
    is the image of w_i = y_{i+1} - y_i (0-indexed, i < n-1); when p | n
    the all-ones vector e lies in the sum-zero space W and w_{n-2}, the
    highest-index basis vector, is eliminated through the relation
    e = sum (n-1-i) w_i = 0 in the quotient.
    """
    if n < 5:
        raise DegreeTooSmall("deleted permutation module needs n >= 5")
    F = ffield.make_field(p)
    delta = 2 if n % p == 0 else 1
    d = n - delta

    # reduction row: w_{n-2} = sum_{i<n-2} (i+1) w_i in the quotient
    if delta == 2:
        red = np.array([(i + 1) % p for i in range(d)], dtype=np.int64)

    def wcoords(a, b):
        """y_b - y_a in w-coordinates (length n-1 integer row)."""
        row = np.zeros(n - 1, dtype=np.int64)
        if a < b:
            row[a:b] = 1
        elif b < a:
            row[b:a] = p - 1
        return row

    def to_matrix(perm):
        if len(perm) != n or sorted(perm) != list(range(n)):
            raise ValueError("not a permutation of 0..%d" % (n - 1))
        rows = np.zeros((d, d), dtype=np.int64)
        for i in range(d):
            full = wcoords(perm[i], perm[i + 1]) % p
            if delta == 2 and full[n - 2]:
                c = full[n - 2]
                full = (full[:d] + c * red) % p
            else:
                full = full[:d]
            rows[i] = full
        return fmatrix.DenseMatrix(F, rows)

    g1 = perm_from_cycles(n, [(1, 2, 3)])
    if n % 2 == 1:
        g2 = perm_from_cycles(n, [tuple(range(1, n + 1))])
    else:
        g2 = perm_from_cycles(n, [tuple(range(2, n + 1))])
    grp = MatrixGroup(F, d, [to_matrix(g1), to_matrix(g2)],
                      label="A%d deleted permutation module over GF(%d)" % (n, p))
    return DeletedPermModule(group=grp, to_matrix=to_matrix, dim=d, n=n, p=p)


# --- SL2(q) modules ---

NATURAL = "natural"
SYMCUBE = "symcube"


def twist(s, t):
    return ("twist", s, t)


@dataclass(frozen=True)
class Sl2Module:
    group: MatrixGroup
    to_matrix: object      # 2x2 DenseMatrix over GF(q) -> DenseMatrix
    dim: int
    q: int
    spec: object


def natural_generators(F):
    """Generators of SL2(q).

    The two opposite transvections [[1,1],[0,1]] and [[1,0],[w,1]] suffice
    for prime q; for proper extension fields they cannot generate (over
    even q > 2 both are involutions, so they only span a dihedral group)
    and the torus element diag(w, w^-1) is added.
    """
    w = F.generator_enc()
    gens = [fmatrix.DenseMatrix(F, [[1, 1], [0, 1]]),
            fmatrix.DenseMatrix(F, [[1, 0], [w, 1]])]
    if F.a > 1:
        gens.append(fmatrix.diagonal(F, [w, F.inv_enc(w)]))
    return gens


def _form_image(F, m, i):
    """Coefficients of (aX+bY)^(3-i) (cX+dY)^i on X^3, X^2Y, XY^2, Y^3."""
    a, b = int(m.arr[0, 0]), int(m.arr[0, 1])
    c, d = int(m.arr[1, 0]), int(m.arr[1, 1])
    coeffs = [1]
    for _ in range(3 - i):
        nxt = [0] * (len(coeffs) + 1)
        for j, cf in enumerate(coeffs):
            nxt[j] = F.add_enc(nxt[j], F.mul_enc(a, cf))
            nxt[j + 1] = F.add_enc(nxt[j + 1], F.mul_enc(b, cf))
        coeffs = nxt
    for _ in range(i):
        nxt = [0] * (len(coeffs) + 1)
        for j, cf in enumerate(coeffs):
            nxt[j] = F.add_enc(nxt[j], F.mul_enc(c, cf))
            nxt[j + 1] = F.add_enc(nxt[j + 1], F.mul_enc(d, cf))
        coeffs = nxt
    return coeffs


def symcube_gram(field):
    """The invariant alternating form on the symmetric cube, normalized so
    its first nonzero entry is 1: <X^3, Y^3> = 1 and <X^2 Y, X Y^2> = -3.
    The solution space of g^T J g = J over alternating J is 1-dimensional
    for these modules, so this is the canonical choice.
    """
    if field.p < 5:
        raise CharTooSmallForSymcube(
            "symmetric cube needs p >= 5, got p=%d" % field.p)
    arr = np.zeros((4, 4), dtype=np.int64)
    arr[0, 3] = 1
    arr[3, 0] = field.neg_enc(1)
    arr[1, 2] = field.neg_enc(3 % field.p)
    arr[2, 1] = 3 % field.p
    return fmatrix.DenseMatrix(field, arr)


def _kron2(F, A, B):
    out = np.zeros((4, 4), dtype=np.int64)
    for i in range(2):
        for j in range(2):
            aij = int(A.arr[i, j])
            if aij:
                for k in range(2):
                    for l in range(2):
                        out[2 * i + k, 2 * j + l] = F.mul_enc(aij, int(B.arr[k, l]))
    return fmatrix.DenseMatrix(F, out)


def _frob_matrix(m, k):
    F = m.field
    out = np.zeros_like(m.arr)
    for i in range(m.nrows):
        for j in range(m.ncols):
            out[i, j] = F.frob_enc(int(m.arr[i, j]), k)
    return fmatrix.DenseMatrix(F, out)


def sl2_module(q, spec):
    """SL2(q) acting on one of its small modules.

    spec is NATURAL, SYMCUBE, or twist(s, t); the returned to_matrix sends
    any 2x2 matrix over GF(q) to its action, and is a homomorphism for the
    row-vector convention.
    """
    F = ffield.field_from_q(q)
    gens2 = natural_generators(F)
    if spec == NATURAL:
        def to_matrix(m):
            return m
        dim = 2
    elif spec == SYMCUBE:
        if F.p < 5:
            raise CharTooSmallForSymcube(
                "symmetric cube needs p >= 5, got p=%d" % F.p)

        def to_matrix(m):
            rows = [_form_image(F, m, i) for i in range(4)]
            return fmatrix.DenseMatrix(F, rows)
        dim = 4
    elif isinstance(spec, tuple) and len(spec) == 3 and spec[0] == "twist":
        s, t = spec[1], spec[2]
        if not (0 <= s < t < F.a):
            raise BadTwist("twist needs 0 <= s < t < a, got s=%d t=%d a=%d"
                           % (s, t, F.a))

        def to_matrix(m):
            return _kron2(F, _frob_matrix(m, s), _frob_matrix(m, t))
        dim = 4
    else:
        raise ValueError("unknown module spec %r" % (spec,))
    grp = MatrixGroup(F, dim, [to_matrix(g) for g in gens2],
                      label="SL2(%d) module %s" % (q, spec))
    return Sl2Module(group=grp, to_matrix=to_matrix, dim=dim, q=q, spec=spec)


# --- classical generators ---

def _cycle_matrix(F, d, det_fix=False):
    arr = np.zeros((d, d), dtype=np.int64)
    for i in range(d - 1):
        arr[i, i + 1] = 1
    arr[d - 1, 0] = 1
    m = fmatrix.DenseMatrix(F, arr)
    if det_fix and m.det() != 1:
        arr = arr.copy()
        arr[d - 1, 0] = F.neg_enc(1)
        m = fmatrix.DenseMatrix(F, arr)
    return m


def _transvection(F, d, i, j, lam=1):
    arr = fmatrix.identity(F, d).arr.copy()
    arr[i, j] = lam
    return fmatrix.DenseMatrix(F, arr)


def symplectic_gram(F, d):
    """J with J[i, d-1-i] = 1 for the first half, -1 for the second."""
    arr = np.zeros((d, d), dtype=np.int64)
    for i in range(d // 2):
        arr[i, d - 1 - i] = 1
    for i in range(d // 2, d):
        arr[i, d - 1 - i] = F.neg_enc(1)
    return fmatrix.DenseMatrix(F, arr)


def preserves_form(g, J):
    return g.transpose() * J * g == J


def _symplectic_transvection(F, J, v, lam=1):
    """x -> x + lam B(x, v) v with B(x, v) = x J v^T; always symplectic."""
    d = J.nrows
    # B(e_i, v) = e_i J v^T = (J v^T)_i, i.e. v acted on by J^T
    u = fmatrix.apply_row(np.asarray(v, dtype=np.int64), J.transpose())
    arr = fmatrix.identity(F, d).arr.copy()
    for i in range(d):
        c = F.mul_enc(lam, int(u[i]))
        if c:
            for j in range(d):
                arr[i, j] = F.add_enc(int(arr[i, j]), F.mul_enc(c, int(v[j])))
    m = fmatrix.DenseMatrix(F, arr)
    return m


def classical_generators(family, d, q):
    """Standard generating sets for GL, SL and SP in dimension d over GF(q).

    SP generators are symplectic transvections for the fixed Gram matrix
    of symplectic_gram plus a block permutation of the hyperbolic pairs;
    every SP generator is checked against the form at construction.
    """
    F = ffield.field_from_q(q)
    if d < 2:
        raise DimensionMismatch("classical groups here need d >= 2")
    w = F.generator_enc()
    family = family.upper()
    if family == "GL":
        gens = [_transvection(F, d, 0, 1), _cycle_matrix(F, d)]
        if q > 2:
            gens.append(fmatrix.diagonal(F, [w] + [1] * (d - 1)))
        return MatrixGroup(F, d, gens, label="GL(%d,%d)" % (d, q))
    if family == "SL":
        if d == 2:
            return MatrixGroup(F, 2, natural_generators(F),
                               label="SL(2,%d)" % q)
        gens = [_transvection(F, d, 0, 1), _cycle_matrix(F, d, det_fix=True)]
        if q > 3:
            diag = [w, F.inv_enc(w)] + [1] * (d - 2)
            gens.append(fmatrix.diagonal(F, diag))
        return MatrixGroup(F, d, gens, label="SL(%d,%d)" % (d, q))
    if family == "SP":
        if d % 2:
            raise OddDimensionSymplectic("SP needs even dimension, got %d" % d)
        if d == 2:
            grp = MatrixGroup(F, 2, natural_generators(F), label="SP(2,%d)" % q)
            J = symplectic_gram(F, 2)
            assert all(preserves_form(g, J) for g in grp.generators)
            return grp
        J = symplectic_gram(F, d)
        m = d // 2
        vs = []
        for i in range(d):
            e = np.zeros(d, dtype=np.int64)
            e[i] = 1
            vs.append(e)
        for i in range(d - 1):
            e = np.zeros(d, dtype=np.int64)
            e[i] = 1
            e[i + 1] = 1
            vs.append(e)
        lams = [1] if q == 2 else [1, w]
        gens = [_symplectic_transvection(F, J, v, lam) for v in vs for lam in
                lams]
        # cycle the hyperbolic pairs (e_i, e_{d-1-i})
        arr = np.zeros((d, d), dtype=np.int64)
        for i in range(m - 1):
            arr[i, i + 1] = 1
            arr[d - 1 - i, d - 2 - i] = 1
        arr[m - 1, 0] = 1
        arr[m, d - 1] = 1
        gens.append(fmatrix.DenseMatrix(F, arr))
        gens = [g for g in gens if g != fmatrix.identity(F, d)]
        grp = MatrixGroup(F, d, gens, label="SP(%d,%d)" % (d, q))
        for i, g in enumerate(grp.generators):
            if not preserves_form(g, J):
                raise AssertionError("SP generator %d breaks the form" % i)
        return grp
    raise ValueError("family must be GL, SL or SP, got %r" % family)


# --- random elements (product replacement with an accumulator) ---

@dataclass
class RandomWalkState:
    group: MatrixGroup
    slots: list
    acc: object
    rng: SplitMix64
    burn_in_done: bool = False


def new_walk_state(grp, seed=DEFAULT_SEED, nslots=12, burn_in=50):
    slots = [grp.generators[i % len(grp.generators)] for i in range(nslots)]
    state = RandomWalkState(group=grp, slots=slots,
                            acc=fmatrix.identity(grp.field, grp.dim),
                            rng=SplitMix64(seed))
    for _ in range(burn_in):
        _walk_step(state)
    state.burn_in_done = True
    return state


def _walk_step(state):
    k = len(state.slots)
    i = state.rng.randrange(k)
    j = state.rng.randrange(k - 1)
    if j >= i:
        j += 1
    if state.rng.randrange(2):
        state.slots[i] = state.slots[i] * state.slots[j]
    else:
        state.slots[i] = state.slots[j] * state.slots[i]
    state.acc = state.acc * state.slots[i]
    return state.acc


def random_element(grp, state):
    if state.group is not grp:
        raise ValueError("walk state belongs to a different group")
    return _walk_step(state)


# --- spinning and irreducibility ---

def spin(vectors, grp):
    """Smallest grp-invariant subspace containing the given row vectors."""
    F = grp.field
    d = grp.dim
    rows = []
    for v in vectors:
        vv = np.asarray(v, dtype=np.int64).reshape(-1)
        if vv.shape[0] != d:
            raise DimensionMismatch("vector length %d, module dimension %d"
                                    % (vv.shape[0], d))
        if not np.any(vv):
            raise ZeroVector("cannot spin the zero vector")
        rows.append(vv)
    space = fmatrix.Subspace.from_rows(F, rows, ambient_dim=d)
    while True:
        images = [fmatrix.apply_row(space.basis[i], g)
                  for i in range(space.dim) for g in grp.generators]
        grown = fmatrix.Subspace.from_rows(
            F, list(space.basis) + images, ambient_dim=d)
        if grown.dim == space.dim:
            return grown
        space = grown


@dataclass(frozen=True)
class IrreducibilityResult:
    status: str            # "YES" | "NO" | "INCONCLUSIVE"
    witness: object        # proper invariant Subspace for NO
    rounds: int


def _random_algebra_element(grp, rng):
    F = grp.field
    d = grp.dim
    total = fmatrix.zeros(F, d, d)
    nwords = 1 + rng.randrange(3)
    for _ in range(nwords):
        word = fmatrix.identity(F, d)
        for _ in range(1 + rng.randrange(3)):
            word = word * grp.generators[rng.randrange(len(grp.generators))]
        c = 1 + rng.randrange(F.q - 1) if F.q > 2 else 1
        total = total + word.scale(c)
    if rng.randrange(2):
        total = total + fmatrix.identity(F, d).scale(rng.randrange(F.q))
    return total


def is_irreducible(grp, seed=DEFAULT_SEED, max_rounds=64):
    """Norton-style randomized irreducibility test.

    A singular algebra element a is sampled; a kernel vector that spins to
    a proper subspace is a NO witness, and so is (after dualizing) a
    cokernel vector spinning properly in the transpose module.  When a has
    nullity 1 and both spins fill the space, irreducibility is proven.
    Rounds with nullity > 1 only ever contribute NO evidence.
    """
    F = grp.field
    d = grp.dim
    if d == 1:
        return IrreducibilityResult(status="YES", witness=None, rounds=0)
    rng = SplitMix64(seed)
    tgrp = grp.transpose_group()
    for rounds in range(1, max_rounds + 1):
        a = _random_algebra_element(grp, rng)
        null = fmatrix.kernel(a)
        if null.dim == 0 or null.dim == d:
            continue
        u = spin([null.basis[0]], grp)
        if u.dim < d:
            return IrreducibilityResult(status="NO", witness=u, rounds=rounds)
        conull = fmatrix.kernel(a.transpose())
        if null.dim == 1:
            udual = spin([conull.basis[0]], tgrp)
            if udual.dim < d:
                # the annihilator of a proper invariant subspace of the
                # transpose module is proper and invariant here
                wit = fmatrix.kernel(
                    fmatrix.DenseMatrix(F, np.ascontiguousarray(udual.basis.T)))
                assert 0 < wit.dim < d
                assert all(wit.is_invariant(g) for g in grp.generators)
                return IrreducibilityResult(status="NO", witness=wit,
                                            rounds=rounds)
            return IrreducibilityResult(status="YES", witness=None,
                                        rounds=rounds)
        else:
            for i in range(conull.dim):
                udual = spin([conull.basis[i]], tgrp)
                if udual.dim < d:
                    wit = fmatrix.kernel(
                        fmatrix.DenseMatrix(F,
                                            np.ascontiguousarray(udual.basis.T)))
                    assert 0 < wit.dim < d
                    assert all(wit.is_invariant(g) for g in grp.generators)
                    return IrreducibilityResult(status="NO", witness=wit,
                                                rounds=rounds)
    return IrreducibilityResult(status="INCONCLUSIVE", witness=None,
                                rounds=max_rounds)


# --- group order via a stabilizer chain on vector orbits ---

VECTORS = "vectors"
PROJECTIVE = "projective"


def _make_action(grp, action):
    F = grp.field
    q = F.q
    d = grp.dim

    def decode(enc):
        v = np.zeros(d, dtype=np.int64)
        for i in range(d):
            v[i] = enc % q
            enc //= q
        return v

    def encode(v):
        enc = 0
        for i in range(d - 1, -1, -1):
            enc = enc * q + int(v[i])
        return enc

    if action == VECTORS:
        def act(enc, g):
            return encode(fmatrix.apply_row(decode(enc), g))
        return act, encode, decode
    if action == PROJECTIVE:
        def normalize(v):
            for i in range(d):
                if v[i]:
                    c = F.inv_enc(int(v[i]))
                    if c != 1:
                        for j in range(d):
                            v[j] = F.mul_enc(c, int(v[j]))
                    return v
            return v

        def act(enc, g):
            return encode(normalize(fmatrix.apply_row(decode(enc), g)))
        return act, lambda v: encode(normalize(v)), decode
    raise ValueError("action must be %r or %r" % (VECTORS, PROJECTIVE))


class _Level:
    __slots__ = ("beta", "gens", "tr")

    def __init__(self, beta):
        self.beta = beta
        self.gens = []
        self.tr = {}


def _sgens(levels, i):
    """Strong generators fixing the first i base points: those inserted at
    level i or deeper."""
    return [g for lvl in levels[i:] for g in lvl.gens]


def _rebuild_orbit(level, act, identity, gens):
    level.tr = {level.beta: identity}
    queue = [level.beta]
    while queue:
        pt = queue.pop()
        u = level.tr[pt]
        for s in gens:
            p2 = act(pt, s)
            if p2 not in level.tr:
                level.tr[p2] = u * s
                queue.append(p2)


def _sift(levels, g, act, start=0):
    for i in range(start, len(levels)):
        lvl = levels[i]
        p = act(lvl.beta, g)
        u = lvl.tr.get(p)
        if u is None:
            return g, i
        g = g * u.inverse()
    return g, len(levels)


def group_order(grp, action=VECTORS, seed=DEFAULT_SEED):
    """Exact order by an incremental Schreier-Sims on the vector action.

    Every Schreier generator at every level is verified to sift to the
    identity before the chain is trusted, so the returned order is exact
    and deterministic; the seed only influences internal processing order.
    """
    F = grp.field
    d = grp.dim
    if F.q ** d > 1 << 24:
        raise ActionTooLarge("q^d = %d exceeds the 2^24 action cap" % F.q ** d)
    act, encode, decode = _make_action(grp, action)
    ident = fmatrix.identity(F, d)
    levels = []

    def moved_point(g):
        for enc in range(1, F.q ** d):
            v = decode(enc)
            if action == PROJECTIVE:
                if encode(v.copy()) != enc:
                    continue
            if act(enc, g) != enc:
                return enc
        return None

    def insert(g, k):
        if g == ident:
            return False
        if k == len(levels):
            beta = moved_point(g)
            if beta is None:
                # acts trivially on every point (a scalar under PROJECTIVE);
                # it contributes nothing to the induced permutation group
                return False
            levels.append(_Level(beta))
        levels[k].gens.append(g)
        # orbits at level j <= k all use this generator
        for j in range(k + 1):
            _rebuild_orbit(levels[j], act, ident, _sgens(levels, j))
        return True

    for g in grp.generators:
        residue, k = _sift(levels, g, act)
        insert(residue, k)

    i = len(levels) - 1
    while i >= 0:
        lvl = levels[i]
        clean = True
        for pt in list(lvl.tr):
            u = lvl.tr[pt]
            for s in _sgens(levels, i):
                p2 = act(pt, s)
                sg = u * s * lvl.tr[p2].inverse()
                if sg == ident:
                    continue
                residue, k = _sift(levels, sg, act, i + 1)
                if residue != ident and insert(residue, k):
                    clean = False
                    i = k
                    break
            if not clean:
                break
        if clean:
            i -= 1

    order = 1
    for lvl in levels:
        order *= len(lvl.tr)
    return order


def brute_force_closure(grp, cap=10 ** 5):
    """All elements by BFS over generator products; raises past the cap."""
    gens = grp.generators
    ident = fmatrix.identity(grp.field, grp.dim)
    seen = {ident.key(): ident}
    queue = [ident]
    while queue:
        m = queue.pop()
        for g in gens:
            nxt = m * g
            kk = nxt.key()
            if kk not in seen:
                if len(seen) >= cap:
                    raise ActionTooLarge("closure exceeded %d elements" % cap)
                seen[kk] = nxt
                queue.append(nxt)
    return list(seen.values())
