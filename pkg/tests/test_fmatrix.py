import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stingray import ffield, fmatrix, fpoly
from stingray._intmath import SplitMix64
from stingray.errors import NotInvariant, Singular

import oracles

F2 = ffield.make_field(2)
F3 = ffield.make_field(3)
F4 = ffield.make_field(2, 2)
F5 = ffield.make_field(5)


def M(F, rows):
    return fmatrix.DenseMatrix(F, rows)


def _random_matrix(F, rng, d):
    return M(F, [[rng.randrange(F.q) for _ in range(d)] for _ in range(d)])


def _random_invertible(F, rng, d):
    while True:
        m = _random_matrix(F, rng, d)
        if m.rank() == d:
            return m


def test_char_poly_matches_leibniz_oracle():
    rng = SplitMix64(314)
    for F, p in ((F2, 2), (F3, 3), (F5, 5)):
        for _ in range(60):
            d = rng.randrange(4) + 1
            m = _random_matrix(F, rng, d)
            rows = tuple(tuple(int(x) for x in m.arr[i]) for i in range(d))
            want = oracles.char_poly_leibniz(rows, p)
            assert tuple(fmatrix.char_poly(m).coeffs) == want


def test_companion_char_and_min_poly():
    f = fpoly.DensePoly(F2, [1, 1, 1, 1, 1])
    c = fmatrix.companion(f)
    assert fmatrix.char_poly(c) == f
    assert fmatrix.min_poly(c) == f
    assert fmatrix.matrix_order(c) == 5


def test_order_three_companion_inverse_is_square():
    c = fmatrix.companion(fpoly.DensePoly(F2, [1, 1, 1]))
    assert c.inverse() == c * c
    assert fmatrix.matrix_order(c) == 3


def test_matrix_order_matches_brute_force():
    rng = SplitMix64(55)
    for F, p in ((F2, 2), (F3, 3)):
        for _ in range(40):
            d = rng.randrange(3) + 2
            m = _random_invertible(F, rng, d)
            rows = tuple(tuple(int(x) for x in m.arr[i]) for i in range(d))
            assert fmatrix.matrix_order(m) == oracles.mat_order(rows, p)


def test_matrix_order_is_exact():
    rng = SplitMix64(77)
    for _ in range(25):
        m = _random_invertible(F4, rng, 3)
        n = fmatrix.matrix_order(m)
        assert m ** n == fmatrix.identity(F4, 3)
        for r in oracles.trial_factor(n):
            assert m ** (n // r) != fmatrix.identity(F4, 3)


def test_min_poly_divides_char_poly_same_support():
    rng = SplitMix64(123)
    for F in (F2, F3, F4):
        for _ in range(30):
            m = _random_matrix(F, rng, rng.randrange(4) + 2)
            cp = fmatrix.char_poly(m)
            mp = fmatrix.min_poly(m)
            assert (cp % mp).is_zero()
            cp_supp = {tuple(g.coeffs) for g, _ in fpoly.factor(cp).factors}
            mp_supp = {tuple(g.coeffs) for g, _ in fpoly.factor(mp).factors}
            assert cp_supp == mp_supp


@settings(max_examples=60, deadline=None)
@given(F=st.sampled_from([F2, F3, F5]), seed=st.integers(0, 2 ** 32))
def test_det_is_multiplicative_and_rank_nullity(F, seed):
    rng = SplitMix64(seed)
    d = rng.randrange(4) + 1
    a = _random_matrix(F, rng, d)
    b = _random_matrix(F, rng, d)
    assert (a * b).det() == F.mul_enc(a.det(), b.det())
    assert a.rank() + fmatrix.kernel(a).dim == d


def test_inverse_and_singular():
    m = M(F3, [[1, 1], [1, 2]])
    inv = m.inverse()
    assert m * inv == fmatrix.identity(F3, 2)
    with pytest.raises(Singular):
        M(F3, [[1, 2], [2, 1]]).inverse()


def test_fixed_space_is_kernel_of_g_minus_one():
    g = M(F2, [[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    fs = fmatrix.fixed_space(g)
    assert fs.dim == 2
    for i in range(fs.dim):
        v = list(fs.basis[i])
        assert list(fmatrix.apply_row(v, g)) == v


def test_restrict_to_invariant_subspace():
    f = fpoly.DensePoly(F2, [1, 1, 1])
    g = fmatrix.block_diagonal([fmatrix.companion(f), fmatrix.identity(F2, 2)])
    w = fmatrix.image(g - fmatrix.identity(F2, 4))
    assert w.dim == 2
    r = fmatrix.restrict(g, w)
    assert fmatrix.char_poly(r) == f
    not_invariant = fmatrix.Subspace.from_rows(F2, [[0, 1, 0, 0]], 4)
    with pytest.raises(NotInvariant):
        fmatrix.restrict(g, not_invariant)


def test_block_diagonal_char_poly_is_product():
    f = fpoly.DensePoly(F3, [1, 0, 1])
    g = fpoly.DensePoly(F3, [2, 1])
    b = fmatrix.block_diagonal([fmatrix.companion(f), fmatrix.companion(g)])
    assert fmatrix.char_poly(b) == (f * g).monic()


def test_solve_row():
    a = M(F5, [[1, 2], [3, 4]])
    b = [4, 0]
    x = fmatrix.solve_row(a, b)
    assert list(fmatrix.apply_row(list(x), a)) == b
    singular = M(F5, [[1, 2], [2, 4]])
    assert fmatrix.solve_row(singular, [0, 1]) is None


def test_apply_row_matches_product():
    rng = SplitMix64(4)
    for _ in range(20):
        m = _random_matrix(F3, rng, 3)
        v = [rng.randrange(3) for _ in range(3)]
        row = fmatrix.apply_row(v, m)
        prod = M(F3, [v]) .arr @ m.arr
        assert list(row) == [int(x) % 3 for x in
                             (prod[0] % 3)]


def test_subspace_dimension_formula():
    rng = SplitMix64(99)
    for _ in range(40):
        rows_u = [[rng.randrange(2) for _ in range(5)]
                  for _ in range(rng.randrange(4) + 1)]
        rows_w = [[rng.randrange(2) for _ in range(5)]
                  for _ in range(rng.randrange(4) + 1)]
        u = fmatrix.Subspace.from_rows(F2, rows_u, 5)
        w = fmatrix.Subspace.from_rows(F2, rows_w, 5)
        s = u.sum(w)
        i = u.intersect(w)
        assert s.dim + i.dim == u.dim + w.dim
        assert s.contains(u) and s.contains(w)
        assert u.contains(i) and w.contains(i)


def test_subspace_coordinates_and_membership():
    u = fmatrix.Subspace.from_rows(F3, [[1, 0, 2], [0, 1, 1]], 3)
    assert u.dim == 2
    v = [1, 1, 0]                          # row0 + row1
    assert u.contains_vector(v)
    coords = u.coordinates(v)
    assert list(coords) == [1, 1]
    assert not u.contains_vector([0, 0, 1])
    assert u.coordinates([0, 0, 1]) is None


def test_subspace_invariance():
    g = M(F2, [[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    swap_plane = fmatrix.Subspace.from_rows(F2, [[1, 1, 0], [0, 0, 1]], 3)
    assert swap_plane.is_invariant(g)
    line = fmatrix.Subspace.from_rows(F2, [[1, 0, 0]], 3)
    assert not line.is_invariant(g)


def test_full_and_identity_helpers():
    full = fmatrix.Subspace.full(F2, 4)
    assert full.dim == 4
    assert fmatrix.scalar_matrix(F3, 2, 2) == M(F3, [[2, 0], [0, 2]])
    assert fmatrix.diagonal(F3, [1, 2]) == M(F3, [[1, 0], [0, 2]])
    assert fmatrix.zeros(F3, 2).rank() == 0
