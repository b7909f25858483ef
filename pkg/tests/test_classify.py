import pytest

from stingray import classify, cyclo, ffield, fmatrix, fpoly, groups
from stingray._intmath import SplitMix64
from stingray.errors import (NoPpdPrime, NoUnimodularFactor, Singular,
                             StingrayUsageError, UnsupportedR)

F2 = ffield.make_field(2)
F3 = ffield.make_field(3)


def _phi5_companion():
    return fmatrix.companion(fpoly.DensePoly(F2, [1, 1, 1, 1, 1]))


def test_constructed_stingray_shape():
    g = fmatrix.block_diagonal([_phi5_companion(), fmatrix.identity(F2, 4)])
    cls = classify.classify_element(g, 4)
    assert cls.tag == classify.STINGRAY
    assert cls.e == 4
    assert cls.order == 5
    assert cls.fixed_dim == 4
    assert cls.semisimple
    assert cls.order_is_eppd
    assert cls.summary().startswith("STINGRAY(4)")
    assert classify.is_stingray_oracle(g, 4)


def test_type_2i_from_phi17_octics():
    f = fpoly.cyclotomic_quotient(F2, 17)
    fac = fpoly.factor(f).factors
    assert [g.degree for g, _ in fac] == [8, 8]
    c1, c2 = fmatrix.companion(fac[0][0]), fmatrix.companion(fac[1][0])
    g = fmatrix.block_diagonal([c1, c2])
    cls = classify.classify_element(g, 8)
    assert cls.tag == classify.TYPE_2I
    assert cls.order == 17
    assert not classify.is_stingray_oracle(g, 8)


def test_type_2ii_repeated_block():
    c = _phi5_companion()
    g = fmatrix.block_diagonal([c, c])
    cls = classify.classify_element(g, 4)
    assert cls.tag == classify.TYPE_2II
    assert cls.order == 5
    assert cls.fixed_dim == 0
    assert not classify.is_stingray_oracle(g, 4)


def test_nonsemisimple_repeated_factor_is_not_ppd():
    f = fpoly.DensePoly(F2, [1, 1, 1, 1, 1])
    g = fmatrix.companion((f * f).monic())
    cls = classify.classify_element(g, 4)
    assert cls.tag == classify.NOT_PPD
    assert not cls.semisimple
    assert cls.order == 10


def test_identity_and_unipotent_are_not_ppd():
    assert classify.classify_element(fmatrix.identity(F2, 4), 2).tag == \
        classify.NOT_PPD
    u = fmatrix.DenseMatrix(F2, [[1, 1], [0, 1]])
    g = fmatrix.block_diagonal([u, fmatrix.identity(F2, 2)])
    assert classify.classify_element(g, 2).tag == classify.NOT_PPD


def test_ppd_general_two_distinct_blocks():
    # order-5 element of GL6(2) with two inequivalent quartic... use
    # Phi_5 block plus Phi_3 block: order 15, a 4-ppd element on a
    # 6-space with extra structure
    c5 = _phi5_companion()
    c3 = fmatrix.companion(fpoly.DensePoly(F2, [1, 1, 1]))
    g = fmatrix.block_diagonal([c5, c3])
    cls = classify.classify_element(g, 4)
    assert cls.tag in (classify.PPD_GENERAL, classify.NOT_PPD)
    assert cls.order == 15


def test_classify_matches_oracle_on_random_walks():
    for d, q in ((4, 2), (4, 3), (4, 4), (6, 2)):
        grp = groups.classical_generators("GL", d, q)
        state = groups.new_walk_state(grp, seed=333)
        for _ in range(120):
            g = groups.random_element(grp, state)
            cls = classify.classify_element(g, d // 2)
            assert (cls.tag == classify.STINGRAY and cls.e == d // 2) == \
                classify.is_stingray_oracle(g, d // 2)


def test_construct_stingray_canonical_cases():
    for d, q in ((4, 4), (8, 2), (8, 3), (10, 3)):
        g = classify.construct_stingray(q, d)
        cls = classify.classify_element(g, d // 2)
        assert cls.tag == classify.STINGRAY and cls.e == d // 2
        assert classify.is_stingray_oracle(g, d // 2)
        assert cls.fixed_dim == d // 2


def test_construct_stingray_det_one():
    for d, q in ((8, 3), (10, 3), (4, 5)):
        g = classify.construct_stingray(q, d, det_one=True)
        assert g.det() == 1
        assert classify.is_stingray_oracle(g, d // 2)


def test_construct_stingray_explicit_r():
    g = classify.construct_stingray(2, 8, r=5)
    assert fmatrix.matrix_order(g) == 5
    cls = classify.classify_element(g, 4)
    assert cls.tag == classify.STINGRAY
    with pytest.raises(NoPpdPrime):
        classify.construct_stingray(2, 8, r=7)   # ord_7(2)=3, not 4


def test_construct_stingray_no_ppd_prime():
    with pytest.raises(NoPpdPrime) as info:
        classify.construct_stingray(2, 12)
    assert "63" in str(info.value)


def test_construct_stingray_validation():
    with pytest.raises(StingrayUsageError):
        classify.construct_stingray(2, 7)


def test_order_nine_prime_power_at_2_6():
    # 9 divides 2^6-1 and o_9(2) = 6: the paper's prime-power remark
    phi9 = fpoly.DensePoly(F2, [1, 0, 0, 1, 0, 0, 1])
    assert fpoly.is_irreducible(phi9)
    g = fmatrix.block_diagonal([fmatrix.companion(phi9),
                                fmatrix.identity(F2, 6)])
    cls = classify.classify_element(g, 6)
    assert cls.order == 9
    assert cls.tag == classify.STINGRAY
    assert cls.e == 6
    assert cls.order_is_eppd              # prime power accepted here
    assert "prime-power" in cls.notes
    assert classify.is_stingray_oracle(g, 6)


def test_eigenvalue_multiplicities_stingray_element():
    g = classify.construct_stingray(2, 8, r=5)
    sol = classify.eigenvalue_multiplicities(g, 5)
    assert sol.mults[0] == 4
    assert sorted(sol.mults[1:]) == [0, 0, 1, 1] or \
        sorted(sol.mults[1:]) == [1, 1, 1, 1]
    assert sum(sol.mults) == 8 - 4 + sol.mults[0]


def test_eigenvalue_multiplicities_symcube_order3():
    mod = groups.sl2_module(5, groups.SYMCUBE)
    state = groups.new_walk_state(mod.group, seed=11)
    found = None
    for _ in range(500):
        g = groups.random_element(mod.group, state)
        n = fmatrix.matrix_order(g)
        if n % 3 == 0:
            found = g ** (n // 3)
            break
    assert found is not None
    sol = classify.eigenvalue_multiplicities(found, 3)
    assert sorted(sol.mults) == [1, 1, 2]
    assert sol.mults[0] == 2


def test_eigenvalue_multiplicities_validation():
    g = classify.construct_stingray(2, 8, r=5)
    with pytest.raises(Exception):
        classify.eigenvalue_multiplicities(g, 3)   # wrong order


def test_classify_rejects_singular():
    with pytest.raises(Singular):
        classify.classify_element(fmatrix.zeros(F2, 4), 2)


def test_classification_agrees_with_character_criterion():
    # brauer character value of a (d/2)-ppd element determines the tag
    g = classify.construct_stingray(3, 8, r=5)
    sol = classify.eigenvalue_multiplicities(g, 5)
    chi = cyclo.from_multiplicities(5, sol.mults)
    assert cyclo.stingray_criterion(5, 8, chi) == cyclo.STINGRAY
    h = fmatrix.block_diagonal([_phi5_companion(), _phi5_companion()])
    sol = classify.eigenvalue_multiplicities(h, 5)
    chi = cyclo.from_multiplicities(5, sol.mults)
    assert cyclo.stingray_criterion(5, 8, chi) == cyclo.TYPE_2II
