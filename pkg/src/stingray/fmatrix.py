"""Exact matrices over GF(q) with a row-vector right action.

A matrix g acts on row vectors by v |-> v g, so the image of g is its row
space and the kernel is the left null space {v : v g = 0}.  Entries are
integer encodings in an int64 numpy array; the heavy loops (multiply,
echelon, characteristic polynomial) run through the kernels module, which
picks the numba or numpy implementation at import time.

Fields larger than the table cap still work through a plain-Python path,
as long as encodings fit in int64.
"""

import math

import numpy as np

from . import _kernels, fpoly
from ._intmath import factorize
from .errors import (DimensionMismatch, NotInvariant, NotSquare, Singular,
                     TooLarge)


def _as_array(field, data):
    arr = np.asarray(data, dtype=np.int64)
    if arr.ndim != 2:
        raise DimensionMismatch("matrix data must be two-dimensional")
    if arr.size and (arr.min() < 0 or arr.max() >= field.q):
        raise ValueError("entry encoding out of range [0, %d)" % field.q)
    return np.ascontiguousarray(arr)


class DenseMatrix:
    __slots__ = ("field", "arr")

    def __init__(self, field, data):
        if field.q >= 1 << 62:
            raise TooLarge("matrix entries need q < 2^62")
        self.field = field
        self.arr = _as_array(field, data)

    @property
    def nrows(self):
        return self.arr.shape[0]

    @property
    def ncols(self):
        return self.arr.shape[1]

    def _check(self, other):
        if not isinstance(other, DenseMatrix) or other.field != self.field:
            raise DimensionMismatch("matrices over different fields")

    def _square(self):
        if self.nrows != self.ncols:
            raise NotSquare("need a square matrix, got %dx%d"
                            % (self.nrows, self.ncols))
        return self.nrows

    def __mul__(self, other):
        self._check(other)
        if self.ncols != other.nrows:
            raise DimensionMismatch("inner dimensions %d and %d differ"
                                    % (self.ncols, other.nrows))
        F = self.field
        if F.ctx is not None:
            return DenseMatrix(F, _kernels.matmul(F.ctx, self.arr, other.arr))
        return DenseMatrix(F, _py_matmul(F, self.arr, other.arr))

    def __add__(self, other):
        self._check(other)
        if self.arr.shape != other.arr.shape:
            raise DimensionMismatch("shape mismatch")
        F = self.field
        if F.a == 1:
            return DenseMatrix(F, (self.arr + other.arr) % F.p)
        if F.p == 2:
            return DenseMatrix(F, self.arr ^ other.arr)
        out = np.empty_like(self.arr)
        flat_a, flat_b, flat_o = self.arr.ravel(), other.arr.ravel(), out.ravel()
        for i in range(flat_a.size):
            flat_o[i] = F.add_enc(int(flat_a[i]), int(flat_b[i]))
        return DenseMatrix(F, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        F = self.field
        if F.a == 1:
            return DenseMatrix(F, (-self.arr) % F.p)
        if F.p == 2:
            return DenseMatrix(F, self.arr.copy())
        out = np.empty_like(self.arr)
        flat_a, flat_o = self.arr.ravel(), out.ravel()
        for i in range(flat_a.size):
            flat_o[i] = F.neg_enc(int(flat_a[i]))
        return DenseMatrix(F, out)

    def scale(self, c):
        F = self.field
        out = np.empty_like(self.arr)
        flat_a, flat_o = self.arr.ravel(), out.ravel()
        for i in range(flat_a.size):
            flat_o[i] = F.mul_enc(c, int(flat_a[i]))
        return DenseMatrix(F, out)

    def __pow__(self, n):
        d = self._square()
        if n < 0:
            return self.inverse() ** (-n)
        result = identity(self.field, d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def transpose(self):
        return DenseMatrix(self.field, np.ascontiguousarray(self.arr.T))

    def row(self, i):
        return self.arr[i].copy()

    def __eq__(self, other):
        return (isinstance(other, DenseMatrix) and other.field == self.field
                and self.arr.shape == other.arr.shape
                and bool(np.array_equal(self.arr, other.arr)))

    def __hash__(self):
        return hash((self.field, self.arr.shape, self.arr.tobytes()))

    def key(self):
        """Bytes key for closure sets and caches."""
        return self.arr.tobytes()

    def copy(self):
        return DenseMatrix(self.field, self.arr.copy())

    def rref(self):
        R, piv, rank = _rref(self.field, self.arr)
        return DenseMatrix(self.field, R), piv, rank

    def rank(self):
        return self.rref()[2]

    def det(self):
        """Determinant encoding, via the characteristic polynomial."""
        d = self._square()
        cp = char_poly(self)
        c0 = cp.coeffs[0] if cp.coeffs else 0
        return self.field.neg_enc(c0) if d % 2 else c0

    def is_invertible(self):
        return self.rank() == self._square()

    def inverse(self):
        d = self._square()
        F = self.field
        aug = np.hstack([self.arr, identity(F, d).arr])
        R, piv, rank = _rref(F, aug, limit=d)
        if rank < d:
            raise Singular("matrix is singular")
        return DenseMatrix(F, np.ascontiguousarray(R[:, d:]))

    def trace(self):
        d = self._square()
        t = 0
        for i in range(d):
            t = self.field.add_enc(t, int(self.arr[i, i]))
        return t

    def __repr__(self):
        return "DenseMatrix(%r,\n%r)" % (self.field, self.arr)


def _rref(field, arr, limit=None):
    if field.ctx is not None:
        return _kernels.rref(field.ctx, arr, limit)
    return _py_rref(field, arr, limit)


def _py_matmul(F, A, B):
    n, k = A.shape
    m = B.shape[1]
    C = np.zeros((n, m), dtype=np.int64)
    for i in range(n):
        for j in range(m):
            s = 0
            for t in range(k):
                s = F.add_enc(s, F.mul_enc(int(A[i, t]), int(B[t, j])))
            C[i, j] = s
    return C


def _py_rref(F, M, limit=None):
    R = np.array(M, dtype=np.int64)
    rows, cols = R.shape
    if limit is None:
        limit = cols
    pivots = []
    rank = 0
    for col in range(limit):
        sel = -1
        for r in range(rank, rows):
            if R[r, col]:
                sel = r
                break
        if sel < 0:
            continue
        if sel != rank:
            R[[rank, sel]] = R[[sel, rank]]
        inv = F.inv_enc(int(R[rank, col]))
        for j in range(cols):
            R[rank, j] = F.mul_enc(inv, int(R[rank, j]))
        for r in range(rows):
            if r != rank and R[r, col]:
                f = int(R[r, col])
                for j in range(cols):
                    R[r, j] = F.sub_enc(int(R[r, j]),
                                        F.mul_enc(f, int(R[rank, j])))
        pivots.append(col)
        rank += 1
        if rank == rows:
            break
    return R, pivots, rank


def identity(field, d):
    arr = np.zeros((d, d), dtype=np.int64)
    np.fill_diagonal(arr, 1)
    return DenseMatrix(field, arr)


def zeros(field, rows, cols=None):
    return DenseMatrix(field, np.zeros((rows, cols if cols is not None else rows),
                                       dtype=np.int64))


def scalar_matrix(field, d, c):
    arr = np.zeros((d, d), dtype=np.int64)
    np.fill_diagonal(arr, c)
    return DenseMatrix(field, arr)


def diagonal(field, encs):
    arr = np.zeros((len(encs), len(encs)), dtype=np.int64)
    for i, c in enumerate(encs):
        arr[i, i] = c
    return DenseMatrix(field, arr)


def companion(f):
    """Companion matrix of a monic polynomial, acting on row vectors.

    e_i maps to e_{i+1} for i < k-1 and e_{k-1} maps to -sum c_j e_j, so
    the characteristic and minimal polynomials both equal f.
    """
    F = f.field
    k = f.degree
    if k < 1:
        raise DimensionMismatch("companion matrix needs degree >= 1")
    if f.coeffs[-1] != 1:
        raise ValueError("companion matrix needs a monic polynomial")
    arr = np.zeros((k, k), dtype=np.int64)
    for i in range(k - 1):
        arr[i, i + 1] = 1
    for j in range(k):
        arr[k - 1, j] = F.neg_enc(f.coeffs[j])
    return DenseMatrix(F, arr)


def block_diagonal(blocks):
    F = blocks[0].field
    d = sum(b._square() for b in blocks)
    arr = np.zeros((d, d), dtype=np.int64)
    at = 0
    for b in blocks:
        k = b.nrows
        arr[at:at + k, at:at + k] = b.arr
        at += k
    return DenseMatrix(F, arr)


def apply_row(v, g):
    """Row vector image v g, as an int64 array of encodings."""
    F = g.field
    vv = np.asarray(v, dtype=np.int64).reshape(1, -1)
    if F.ctx is not None:
        return _kernels.matmul(F.ctx, vv, g.arr)[0]
    return _py_matmul(F, vv, g.arr)[0]


def solve_row(A, b):
    """One row vector x with x A = b, or None when inconsistent."""
    F = A.field
    bb = np.asarray(b, dtype=np.int64).reshape(-1)
    if bb.shape[0] != A.ncols:
        raise DimensionMismatch("length of b must match columns of A")
    aug = np.ascontiguousarray(np.hstack([A.arr.T, bb.reshape(-1, 1)]))
    R, piv, rank = _rref(F, aug, limit=A.nrows)
    x = np.zeros(A.nrows, dtype=np.int64)
    for r in range(rank):
        x[piv[r]] = R[r, -1]
    # consistency: rows past the pivots must leave zero in the last column
    for r in range(rank, R.shape[0]):
        if R[r, -1]:
            return None
    return x


class Subspace:
    """Row space in RREF; dimension-0 subspaces keep a (0, d) basis."""

    __slots__ = ("field", "basis", "pivots")

    def __init__(self, field, basis, pivots):
        self.field = field
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def from_rows(cls, field, rows, ambient_dim=None):
        arr = np.asarray(rows, dtype=np.int64)
        if arr.size == 0:
            if ambient_dim is None:
                raise DimensionMismatch("empty row list needs ambient_dim")
            return cls(field, np.zeros((0, ambient_dim), dtype=np.int64), [])
        arr = arr.reshape(len(rows), -1)
        R, piv, rank = _rref(field, arr)
        return cls(field, np.ascontiguousarray(R[:rank]), piv)

    @classmethod
    def full(cls, field, d):
        return cls(field, identity(field, d).arr, list(range(d)))

    @property
    def dim(self):
        return self.basis.shape[0]

    @property
    def ambient_dim(self):
        return self.basis.shape[1]

    def coordinates(self, v):
        """Coefficients of v in the RREF basis, or None if v is outside."""
        F = self.field
        w = np.array(v, dtype=np.int64).reshape(-1)
        coeffs = []
        for r, pc in enumerate(self.pivots):
            c = int(w[pc])
            coeffs.append(c)
            if c:
                row = self.basis[r]
                for j in range(w.shape[0]):
                    w[j] = F.sub_enc(int(w[j]), F.mul_enc(c, int(row[j])))
        if np.any(w):
            return None
        return np.array(coeffs, dtype=np.int64)

    def contains_vector(self, v):
        return self.coordinates(v) is not None

    def contains(self, other):
        return all(self.contains_vector(other.basis[i])
                   for i in range(other.dim))

    def __eq__(self, other):
        return (isinstance(other, Subspace) and other.field == self.field
                and self.basis.shape == other.basis.shape
                and bool(np.array_equal(self.basis, other.basis)))

    def sum(self, other):
        stacked = np.vstack([self.basis, other.basis])
        return Subspace.from_rows(self.field, stacked,
                                  ambient_dim=self.ambient_dim)

    def intersect(self, other):
        """Zassenhaus: rref [F|F; W|0], rows with zero left half."""
        d = self.ambient_dim
        top = np.hstack([self.basis, self.basis])
        bot = np.hstack([other.basis, np.zeros_like(other.basis)])
        stacked = np.vstack([top, bot])
        if stacked.shape[0] == 0:
            return Subspace.from_rows(self.field, [], ambient_dim=d)
        R, piv, rank = _rref(self.field, stacked)
        rows = [R[r, d:] for r in range(rank) if not np.any(R[r, :d])]
        return Subspace.from_rows(self.field, rows, ambient_dim=d)

    def is_invariant(self, g):
        for i in range(self.dim):
            if self.coordinates(apply_row(self.basis[i], g)) is None:
                return False
        return True

    def __repr__(self):
        return "Subspace(dim=%d of %d over %r)" % (
            self.dim, self.ambient_dim, self.field)


def kernel(g):
    """Left null space {v : v g = 0} as a Subspace."""
    F = g.field
    R, piv, rank = _rref(F, np.ascontiguousarray(g.arr.T))
    n = g.nrows
    free = [j for j in range(n) if j not in set(piv)]
    rows = []
    for fc in free:
        v = np.zeros(n, dtype=np.int64)
        v[fc] = 1
        for r, pc in enumerate(piv):
            v[pc] = F.neg_enc(int(R[r, fc]))
        rows.append(v)
    return Subspace.from_rows(F, rows, ambient_dim=n)


def image(g):
    """Row space of g as a Subspace."""
    return Subspace.from_rows(g.field, g.arr, ambient_dim=g.ncols)


def fixed_space(g):
    """Eigenspace of 1: kernel of g - I."""
    return kernel(g - identity(g.field, g._square()))


def restrict(g, space):
    """Matrix of the action of g on the basis of an invariant subspace.

    Raises NotInvariant when some basis image leaves the space.
    """
    k = space.dim
    out = np.zeros((k, k), dtype=np.int64)
    for i in range(k):
        w = apply_row(space.basis[i], g)
        c = space.coordinates(w)
        if c is None:
            raise NotInvariant("subspace is not invariant under the matrix")
        out[i] = c
    return DenseMatrix(g.field, out)


def char_poly(g):
    """det(tI - g) as a monic DensePoly."""
    d = g._square()
    F = g.field
    if d == 0:
        return fpoly.DensePoly(F, [1])
    if F.ctx is not None:
        coeffs = _kernels.charpoly(F.ctx, g.arr)
        return fpoly.DensePoly(F, [int(c) for c in coeffs])
    return _py_charpoly(F, g.arr)


def _py_charpoly(F, M):
    """Hessenberg reduction and block recurrence, generic scalar path."""
    d = M.shape[0]
    H = [[int(M[i, j]) for j in range(d)] for i in range(d)]
    for j in range(d - 1):
        pr = -1
        for i in range(j + 1, d):
            if H[i][j]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != j + 1:
            H[j + 1], H[pr] = H[pr], H[j + 1]
            for i in range(d):
                H[i][j + 1], H[i][pr] = H[i][pr], H[i][j + 1]
        inv = F.inv_enc(H[j + 1][j])
        for i in range(j + 2, d):
            if H[i][j]:
                f = F.mul_enc(H[i][j], inv)
                for t in range(d):
                    H[i][t] = F.sub_enc(H[i][t], F.mul_enc(f, H[j + 1][t]))
                for t in range(d):
                    H[t][j + 1] = F.add_enc(H[t][j + 1], F.mul_enc(f, H[t][i]))
    polys = [[1]]
    for k in range(1, d + 1):
        prev = polys[k - 1]
        cur = [0] * (k + 1)
        akk = H[k - 1][k - 1]
        for i, c in enumerate(prev):
            cur[i + 1] = F.add_enc(cur[i + 1], c)
            cur[i] = F.sub_enc(cur[i], F.mul_enc(akk, c))
        run = 1
        for i in range(1, k):
            run = F.mul_enc(run, H[k - i][k - i - 1])
            coef = F.mul_enc(run, H[k - 1 - i][k - 1])
            if coef:
                below = polys[k - 1 - i]
                for t, c in enumerate(below):
                    cur[t] = F.sub_enc(cur[t], F.mul_enc(coef, c))
        polys.append(cur)
    return fpoly.DensePoly(F, polys[d])


def min_poly(g):
    """Minimal polynomial via Krylov chains and least common multiples."""
    d = g._square()
    F = g.field
    m = fpoly.constant(F, 1)
    seen = Subspace.from_rows(F, [], ambient_dim=d)
    for i in range(d):
        if m.degree == d:
            break
        e = np.zeros(d, dtype=np.int64)
        e[i] = 1
        if seen.contains_vector(e):
            continue
        # echelonized Krylov chain with coefficient tracking
        chain_rows = []      # reduced vectors paired with combo coefficients
        v = e
        combo = [1]
        while True:
            w = np.array(v, dtype=np.int64)
            cc = list(combo) + [0] * (d + 1 - len(combo))
            for red, redc in chain_rows:
                pivcol = int(np.nonzero(red)[0][0])
                c = int(w[pivcol])
                if c:
                    for j in range(d):
                        w[j] = F.sub_enc(int(w[j]), F.mul_enc(c, int(red[j])))
                    for j in range(d + 1):
                        cc[j] = F.sub_enc(cc[j], F.mul_enc(c, redc[j]))
            if not np.any(w):
                local = fpoly.DensePoly(F, cc).monic()
                m = fpoly.lcm(m, local)
                break
            pivcol = int(np.nonzero(w)[0][0])
            inv = F.inv_enc(int(w[pivcol]))
            for j in range(d):
                w[j] = F.mul_enc(inv, int(w[j]))
            cc = [F.mul_enc(inv, c) for c in cc]
            chain_rows.append((w, cc))
            v = apply_row(v, g)
            combo = [0] + combo
        seen = seen.sum(Subspace.from_rows(
            F, [row for row, _ in chain_rows], ambient_dim=d))
    return m


def order_from_min_poly(mp):
    """Multiplicative order of any matrix with minimal polynomial mp.

    Splits as s * p^k: s is the lcm of the root orders of the distinct
    irreducible factors of mp, and p^k covers the largest multiplicity.
    """
    F = mp.field
    if not mp.coeffs or mp.coeffs[0] == 0:
        raise Singular("matrix is singular")
    s = 1
    max_mult = 1
    tm1 = fpoly.DensePoly(F, [F.neg_enc(1), 1])
    for f, mult in fpoly.factor_cached(mp).factors:
        max_mult = max(max_mult, mult)
        if f == tm1:
            continue
        ro = fpoly.root_order_in_quotient(f)
        s = s * ro // math.gcd(s, ro)
    pk = 1
    while pk < max_mult:
        pk *= F.p
    return s * pk


def matrix_order(g):
    """Multiplicative order of an invertible matrix."""
    g._square()
    return order_from_min_poly(min_poly(g))
