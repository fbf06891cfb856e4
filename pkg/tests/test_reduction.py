from __future__ import annotations

from fractions import Fraction

import mpmath as mp
import pytest

from cmmcert.reduction import (CLAIMED_THRESHOLD, _consts, error_budget_E, exponent_gap,
                               exponent_gap_report, final_reduction_check, threshold_scan)
from cmmcert.reports import Verdict

mp.mp.dps = 60


def mpf(q: Fraction):
    return mp.mpf(q.numerator) / q.denominator


def E_mp(n):
    n = mp.mpf(n)
    pi, s3 = mp.pi, mp.sqrt(3)
    t1 = 21 * pi ** 2 / (40 * mp.sqrt(3 * n)) * mp.exp((pi / (4 * s3) + 4 * s3 / (5 * pi)) * mp.sqrt(n))
    t2 = mp.mpf(567) / 200 / n ** (mp.mpf(5) / 8) * mp.exp(
        pi * mp.sqrt(n) / (2 * s3) + pi * mp.sqrt(901) / (8 * mp.sqrt(3 * n)) + 217 * pi ** 2 / (240 * n))
    return t1 + t2


def margin_mp(n):
    n = mp.mpf(n)
    x = mp.pi / 2 * mp.sqrt(n / 3)
    return mp.besseli(mp.mpf(-3) / 4, x) - E_mp(n) - mp.exp(x) / (5 * n ** (mp.mpf(7) / 8))


@pytest.mark.parametrize("n", [1, 50, 2322, 10**5])
def test_error_budget_against_mpmath(n):
    E = error_budget_E(n)
    assert mpf(E.lo) <= E_mp(n) <= mpf(E.hi)
    assert E.width / E.lo < Fraction(1, 10**30)


def test_exponent_constants():
    c = _consts(128)
    assert abs(float(c.c_bessel.mid) - 0.906900) < 1e-6
    assert abs(float(c.c_first.mid) - 0.894513) < 1e-6


def test_exponent_gap():
    g = exponent_gap()
    # 0.01238672..., i.e. 0.012386 to six truncated digits
    assert Fraction(12386, 10**6) < g.lo and g.hi < Fraction(12387, 10**6)
    r = exponent_gap_report()
    assert r.verdict is Verdict.VERIFIED and r.advisory


@pytest.mark.parametrize("n", [2329, 2400, 4801, 100000])
def test_reduction_holds(n):
    r = final_reduction_check(n)
    assert r.verdict is Verdict.VERIFIED
    assert margin_mp(n) > 0


@pytest.mark.parametrize("n", [1000, 2322, 2328])
def test_reduction_fails_below_threshold(n):
    assert final_reduction_check(n).verdict is Verdict.FAILED
    assert margin_mp(n) < 0


def test_low_start_precision_escalates():
    r = final_reduction_check(2329, prec=53)
    assert r.verdict is Verdict.VERIFIED


def test_rejects_nonpositive():
    with pytest.raises(ValueError):
        final_reduction_check(0)
    with pytest.raises(ValueError):
        threshold_scan(10, 10)


@pytest.fixture(scope="module")
def scan_2000_3000():
    return threshold_scan(2000, 3000)


def test_scan_threshold_is_2328(scan_2000_3000):
    res = scan_2000_3000
    assert res.threshold == 2328
    assert res.failures == list(range(2000, 2329))
    assert res.indeterminate == []
    assert res.verified_above(2328) and not res.verified_above(2322)


@pytest.mark.xfail(strict=True, reason="2323..2328 fail; the margin first turns positive at 2329")
def test_scan_threshold_is_claimed_value(scan_2000_3000):
    assert scan_2000_3000.threshold == CLAIMED_THRESHOLD


def test_scan_clean_range():
    res = threshold_scan(5000, 5400)
    assert res.threshold is None and res.verdict is Verdict.VERIFIED and res.checked == 401


def test_scan_is_independent_of_jobs_and_chunking():
    a = threshold_scan(2300, 2360, jobs=1, chunk=1000)
    b = threshold_scan(2300, 2360, jobs=2, chunk=7)
    assert (a.failures, a.indeterminate, a.threshold) == (b.failures, b.indeterminate, b.threshold)
