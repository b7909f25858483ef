from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stingray import cyclo
from stingray.errors import MismatchedR, NoSolution, NotRational


def C(r, *coeffs):
    return cyclo.CyclotomicInt(r, list(coeffs))


def test_zeta_relations():
    z = cyclo.CyclotomicInt.zeta(5)
    acc = cyclo.CyclotomicInt.from_int(5, 1)
    for _ in range(5):
        acc = acc * z
    assert acc == cyclo.CyclotomicInt.from_int(5, 1)
    total = cyclo.CyclotomicInt.from_int(5, 1)
    for k in range(1, 5):
        total = total + cyclo.CyclotomicInt.zeta(5, k)
    assert total.is_zero()


@settings(max_examples=100, deadline=None)
@given(r=st.sampled_from([3, 5, 7, 13]), data=st.data())
def test_ring_laws(r, data):
    ints = st.integers(-6, 6)
    x = C(r, *data.draw(st.lists(ints, min_size=r, max_size=r)))
    y = C(r, *data.draw(st.lists(ints, min_size=r, max_size=r)))
    z = C(r, *data.draw(st.lists(ints, min_size=r, max_size=r)))
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == cyclo.CyclotomicInt.from_int(r, 0)


@settings(max_examples=60, deadline=None)
@given(r=st.sampled_from([5, 7, 13]), j=st.integers(1, 12), data=st.data())
def test_galois_is_ring_automorphism(r, j, data):
    if j % r == 0:
        j += 1
    ints = st.integers(-5, 5)
    x = C(r, *data.draw(st.lists(ints, min_size=r, max_size=r)))
    y = C(r, *data.draw(st.lists(ints, min_size=r, max_size=r)))
    assert (x + y).galois(j) == x.galois(j) + y.galois(j)
    assert (x * y).galois(j) == x.galois(j) * y.galois(j)
    assert x.galois(1) == x


def test_int_mixing():
    x = C(5, 0, 1, 0, 0, 0)
    assert (-1 - x) + x == cyclo.CyclotomicInt.from_int(5, -1)
    assert 2 * x == x + x
    assert (x - 3) + 3 == x


def test_rationality():
    five = cyclo.CyclotomicInt.from_int(7, 5)
    assert five.is_rational()
    assert five.rational_value() == 5
    z = cyclo.CyclotomicInt.zeta(7)
    assert not z.is_rational()
    with pytest.raises(NotRational):
        z.rational_value()
    # 1 + z + ... + z^6 = 0 is rational in disguise
    allsum = C(7, *([1] * 7))
    assert allsum.is_rational()
    assert allsum.rational_value() == 0


def test_mismatched_r():
    with pytest.raises(MismatchedR):
        C(5, 1, 0, 0, 0, 0) + C(7, 1, 0, 0, 0, 0, 0, 0)


def test_b5_satisfies_golden_quadratic():
    b = cyclo.b5()
    assert b == cyclo.sum_of_zeta_powers(5, (1, 4))
    assert (b * b + b - 1).is_zero()


def test_c13_is_quartic_gauss_period():
    c = cyclo.c13()
    assert c == cyclo.sum_of_zeta_powers(13, (1, 5, 8, 12))
    # the three 4-term periods mod 13 are the roots of x^3 + x^2 - 4x + 1
    assert (c * c * c + c * c - 4 * c + 1).is_zero()


def test_solve_multiplicities_frozen():
    sol = cyclo.solve_multiplicities(-cyclo.b5(), 8, 5)
    assert sol.mults == (2, 1, 2, 2, 1)
    assert sol.r == 5 and sol.d == 8


def test_solve_multiplicities_trivial_cases():
    sol = cyclo.solve_multiplicities(cyclo.CyclotomicInt.from_int(5, 8), 8, 5)
    assert sol.mults == (8, 0, 0, 0, 0)
    # stingray shape: fixed space of dim 4, each nontrivial root once
    chi = cyclo.CyclotomicInt.from_int(5, 4) + \
        cyclo.sum_of_zeta_powers(5, (1, 2, 3, 4))
    assert cyclo.solve_multiplicities(chi, 8, 5).mults == (4, 1, 1, 1, 1)


def test_solve_multiplicities_round_trip():
    import itertools
    for mults in itertools.product(range(3), repeat=5):
        chi = cyclo.from_multiplicities(5, mults)
        sol = cyclo.solve_multiplicities(chi, sum(mults), 5)
        assert sol.mults == mults


def test_solve_multiplicities_no_solution():
    with pytest.raises(NoSolution):
        cyclo.solve_multiplicities(cyclo.CyclotomicInt.from_int(5, 1), 8, 5)
    with pytest.raises(NoSolution):
        # negative multiplicities required
        cyclo.solve_multiplicities(cyclo.CyclotomicInt.from_int(5, -9), 8, 5)


def test_multiplicity_solution_views():
    sol = cyclo.solve_multiplicities(-cyclo.b5(), 8, 5)
    assert sol.fixed_dim() == 2
    assert cyclo.from_multiplicities(5, sol.mults) == -cyclo.b5()


def test_trivial_multiplicity_section6_value():
    chi = -1 - cyclo.c13()
    pairs = ((chi, 4), (chi.galois(2), 4), (chi.galois(4), 4))
    assert cyclo.trivial_multiplicity(pairs, 8, 13) == Fraction(0)


def test_trivial_multiplicity_regular_character():
    # cyclic group of order 5: regular character contains the trivial once
    zero = cyclo.CyclotomicInt.from_int(5, 0)
    assert cyclo.trivial_multiplicity(((zero, 4),), 5, 5) == Fraction(1)
    one = cyclo.CyclotomicInt.from_int(5, 1)
    assert cyclo.trivial_multiplicity(((one, 4),), 1, 5) == Fraction(1)


def test_stingray_criterion_frozen():
    assert cyclo.stingray_criterion(5, 8, 3) == cyclo.STINGRAY
    assert cyclo.stingray_criterion(5, 8, -2) == cyclo.TYPE_2II
    assert cyclo.stingray_criterion(3, 4, 1) == cyclo.STINGRAY


def test_stingray_criterion_other_values():
    # in the r = d/2 + 1 regime only two character values are possible
    assert cyclo.stingray_criterion(5, 8, 8) == cyclo.INCONSISTENT
    assert cyclo.stingray_criterion(5, 8, 100) == cyclo.INCONSISTENT
    # r = d + 1 regime: chi = -1 pins type (2.i)
    assert cyclo.stingray_criterion(5, 4, -1) == cyclo.TYPE_2I
    # multiplicities (1, 2, 1, 0, 0) match none of the three shapes
    odd = C(5, 1, 2, 1, 0, 0)
    assert cyclo.stingray_criterion(5, 4, odd) == cyclo.OTHER


def test_stingray_criterion_galois_invariance():
    chi = cyclo.CyclotomicInt.from_int(5, 4) + \
        cyclo.sum_of_zeta_powers(5, (1, 2, 3, 4))
    tags = {cyclo.stingray_criterion(5, 8, chi.galois(j))
            for j in (1, 2, 3, 4)}
    assert tags == {cyclo.STINGRAY}
