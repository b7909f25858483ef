"""Acceptance gate: eight desk-scale criteria, one test and one printed
PASS/FAIL line each.

Run with `pytest -s tests/test_acceptance.py` to see the ACCEPTANCE lines
as they complete; each line carries the measured wall time.  A criterion
with a runtime budget fails outright when the budget is exceeded.
"""

import contextlib
import io
import math
import time
from fractions import Fraction

import numpy as np

import oracles
from stingray import classify, cyclo, ffield, fmatrix, fpoly, groups, harness
from stingray.cli import main as cli_main
from stingray.errors import NoPpdPrime
from stingray import ppd


@contextlib.contextmanager
def criterion(num, title, budget=None):
    t0 = time.monotonic()
    try:
        yield
        dt = time.monotonic() - t0
        if budget is not None:
            assert dt < budget, ("criterion %d took %.2fs, budget %.0fs"
                                 % (num, dt, budget))
    except BaseException:
        print("ACCEPTANCE %d FAIL %s" % (num, title))
        raise
    print("ACCEPTANCE %d PASS %s (%.2fs)" % (num, title, dt))


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = cli_main(list(argv))
    return code, out.getvalue()


def test_criterion_1_ppd_facts():
    with criterion(1, "ppd point facts and congruence sweep", budget=5.0):
        code, out = run_cli("ppd", "--q", "2", "--e", "6")
        assert code == 3 and out == ""
        code, out = run_cli("ppd", "--q", "2", "--e", "4")
        assert code == 0 and out.split() == ["5"]
        for q in range(2, 33):
            if len(oracles.trial_factor(q)) != 1:
                continue
            for e in range(2, 21):
                for r, _mult in ppd.primitive_prime_divisors(q, e).primes:
                    assert r % e == 1, (q, e, r)
                    assert r > e


def _closed_form_char(F, n, cycles, delta):
    """Characteristic polynomial on the deleted module, per the closed
    forms: divide the product of t^len - 1 over the cycles (times (t-1)
    per fixed point) by (t-1)^delta."""
    t = fpoly.x_poly(F)
    one = fpoly.constant(F, 1)
    acc = one
    moved = 0
    for c in cycles:
        acc = acc * (t ** len(c) - one)
        moved += len(c)
    acc = acc * (t - one) ** (n - moved)
    for _ in range(delta):
        acc, rem = divmod(acc, t - one)
        assert rem.is_zero()
    return acc


def test_criterion_2_table_verdicts_and_charpolys():
    with criterion(2, "deleted-module stingray verdicts and char polys",
                   budget=10.0):
        report = harness.verify_suite("PERMMOD")
        assert report.passed
        by_id = {c.check_id: c for c in report.checks}

        # the five tabulated verdicts: x, x, check, check, x
        expected = ["no", "no", "yes", "yes", "no"]
        for k, want in enumerate(expected, 1):
            chk = by_id["PERMMOD-%d-STINGRAY" % k]
            assert chk.passed and chk.observed == want

        # closed-form characteristic polynomials, rebuilt independently
        F2 = ffield.make_field(2)
        t = fpoly.x_poly(F2)
        one = fpoly.constant(F2, 1)
        f5 = (t ** 5 - one) // (t - one)
        cases = [
            (9, ((tuple(range(1, 10)),)), 1, (t ** 9 - one) // (t - one)),
            (10, ((tuple(range(1, 10)),)), 2, (t ** 9 - one) // (t - one)),
            (9, (((1, 2, 3, 4, 5),)), 1, f5 * (t - one) ** 4),
            (10, (((1, 2, 3, 4, 5),)), 2, f5 * (t - one) ** 4),
            (10, (((1, 2, 3, 4, 5), (6, 7, 8, 9, 10))), 2, f5 * f5),
        ]
        for n, cycles, delta, want in cases:
            mod = groups.deleted_perm_module(n, 2)
            img = mod.to_matrix(groups.perm_from_cycles(n, cycles))
            got = fmatrix.char_poly(img)
            assert got == want
            assert got == _closed_form_char(F2, n, cycles, delta)

        # the doubled 5-cycle reads (t^5-1)^2 on the full permutation space
        perm = groups.perm_from_cycles(10, ((1, 2, 3, 4, 5),
                                            (6, 7, 8, 9, 10)))
        arr = np.zeros((10, 10), dtype=np.int64)
        for i in range(10):
            arr[i, perm[i]] = 1
        full = fmatrix.DenseMatrix(F2, arr)
        assert fmatrix.char_poly(full) == (t ** 5 - one) ** 2


def test_criterion_3_sl2_module_dichotomy():
    with criterion(3, "cubic and twisted SL2 module dichotomy", budget=30.0):
        report = harness.verify_suite("PSL2")
        assert report.passed
        by_id = {c.check_id: c for c in report.checks}
        for cid in ("PSL2-SYMCUBE-Q5-FOUND", "PSL2-SYMCUBE-Q11-FOUND",
                    "PSL2-TWIST01-Q8-FOUND"):
            assert by_id[cid].observed == "found"
        for cid in ("PSL2-SYMCUBE-Q7-NONE", "PSL2-SYMCUBE-Q7-DIAG",
                    "PSL2-TWIST01-Q16-NONE", "PSL2-TWIST01-Q16-DIAG"):
            assert str(by_id[cid].observed) == "0"

        # the certificate behind the q=7 and q=16 failures: cube roots of
        # unity live in the field, so order-3 elements split there
        for q in (7, 16):
            F = ffield.field_from_q(q)
            t = fpoly.x_poly(F)
            one = fpoly.constant(F, 1)
            assert len(fpoly.roots(t * t + t + one)) == 2
        # and they do not live in F8, which is why q=8 can host one
        F8 = ffield.field_from_q(8)
        t = fpoly.x_poly(F8)
        one = fpoly.constant(F8, 1)
        assert len(fpoly.roots(t * t + t + one)) == 0


def test_criterion_4_order9_images_rejected():
    with criterion(4, "order-9 images in the 12-dim deleted module",
                   budget=5.0):
        mod = groups.deleted_perm_module(14, 2)
        assert mod.dim == 12
        for cycles in ((tuple(range(1, 10)),),
                       (tuple(range(1, 10)), (10, 11, 12))):
            img = mod.to_matrix(groups.perm_from_cycles(14, cycles))
            assert fmatrix.matrix_order(img) == 9
            assert fmatrix.fixed_space(img).dim <= 4
            assert not classify.is_stingray_oracle(img, 6)
            cls = classify.classify_element(img, 6)
            assert cls.tag != classify.STINGRAY


def test_criterion_5_character_machinery():
    with criterion(5, "exact character computations"):
        sol = cyclo.solve_multiplicities(-cyclo.b5(), 8, 5)
        assert sol.mults == (2, 1, 2, 2, 1)

        chi = -1 - cyclo.c13()
        pairs = ((chi, 4), (chi.galois(2), 4), (chi.galois(4), 4))
        assert cyclo.trivial_multiplicity(pairs, 8, 13) == Fraction(0)

        assert cyclo.stingray_criterion(5, 8, 3) == cyclo.STINGRAY
        assert cyclo.stingray_criterion(5, 8, -2) == cyclo.TYPE_2II
        assert cyclo.stingray_criterion(3, 4, 1) == cyclo.STINGRAY


def test_criterion_6_exhaustive_small_group_oracle():
    with criterion(6, "exhaustive 4-dim binary classification", budget=60.0):
        grp = groups.classical_generators("GL", 4, 2)
        gens = [tuple(tuple(int(x) for x in row) for row in g.arr)
                for g in grp.generators]
        elements = oracles.brute_closure(gens, 2, cap=25000)
        assert len(elements) == 20160

        F2 = grp.field
        tags_order3 = {classify.STINGRAY: 0, classify.TYPE_2I: 0,
                       classify.TYPE_2II: 0}
        for M in elements:
            m = fmatrix.DenseMatrix(F2, np.array(M, dtype=np.int64))
            cls = classify.classify_element(m, 2)
            verdict = cls.tag == classify.STINGRAY and cls.e == 2
            assert verdict == classify.is_stingray_oracle(m, 2)
            if cls.order == 3:
                assert cls.tag in tags_order3, cls.tag
                tags_order3[cls.tag] += 1
        assert tags_order3[classify.TYPE_2I] == 0
        assert tags_order3[classify.STINGRAY] > 0
        assert tags_order3[classify.TYPE_2II] > 0


def test_criterion_7_group_orders():
    with criterion(7, "permutation-backed matrix group orders"):
        gl42 = groups.classical_generators("GL", 4, 2)
        assert groups.group_order(gl42) == oracles.gl_order(4, 2) == 20160

        sl27 = groups.classical_generators("SL", 2, 7)
        assert groups.group_order(sl27) == oracles.sl_order(2, 7) == 336

        a7 = groups.deleted_perm_module(7, 2).group
        assert groups.group_order(a7) == math.factorial(7) // 2 == 2520


def test_criterion_8_construction_and_exception():
    with criterion(8, "stingray construction witnesses and the 12,2 gap"):
        for d, q in ((4, 4), (8, 2), (8, 3), (10, 3)):
            g = classify.construct_stingray(q, d)
            cls = classify.classify_element(g, d // 2)
            assert cls.tag == classify.STINGRAY and cls.e == d // 2
            assert classify.is_stingray_oracle(g, d // 2)
        try:
            classify.construct_stingray(2, 12)
        except NoPpdPrime as exc:
            assert "63" in str(exc)
        else:
            raise AssertionError("construct_stingray(2, 12) should fail")
