from __future__ import annotations

import math
from fractions import Fraction

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cmmcert.interval import Interval
from cmmcert.reports import Verdict
from cmmcert.special import (NonPositiveArgument, UnsupportedArgument, bernoulli_number,
                             bernoulli_polynomial, bessel_I_m34, digamma_at, h_a_identity_check,
                             hurwitz_zeta, hurwitz_zeta2, lehmer_bound, lehmer_majorant)

from oracles import bernoulli_from_generating_function

mp.mp.dps = 60


def mpf(q: Fraction):
    return mp.mpf(q.numerator) / q.denominator


def inside(I: Interval, x) -> bool:
    return mpf(I.lo) <= x <= mpf(I.hi)


@pytest.mark.parametrize("n", range(0, 31))
def test_bernoulli_numbers_against_generating_function(n):
    assert bernoulli_number(n) == bernoulli_from_generating_function(n)


def test_bernoulli_known_values():
    assert bernoulli_number(1) == Fraction(-1, 2)
    assert bernoulli_number(12) == Fraction(-691, 2730)
    with pytest.raises(ValueError):
        bernoulli_number(-1)


@given(st.integers(0, 20), st.fractions(min_value=-3, max_value=3, max_denominator=50))
def test_bernoulli_polynomial_difference_identity(n, x):
    # B_n(x + 1) - B_n(x) = n x^(n-1)
    lhs = bernoulli_polynomial(n, x + 1) - bernoulli_polynomial(n, x)
    assert lhs == (n * x ** (n - 1) if n else 0)


@given(st.integers(0, 20), st.fractions(min_value=0, max_value=1, max_denominator=50))
def test_bernoulli_polynomial_reflection(n, x):
    assert bernoulli_polynomial(n, 1 - x) == (-1) ** n * bernoulli_polynomial(n, x)


@pytest.mark.parametrize("n", range(2, 13))
def test_lehmer_domination_grid(n):
    bound = lehmer_bound(n)
    for k in range(41):
        v = abs(bernoulli_polynomial(n, Fraction(k, 40)))
        assert v <= bound.hi
    assert bound.hi <= lehmer_majorant(n)


@pytest.mark.parametrize("s,a", [(2, 1), (2, Fraction(1, 2)), (3, Fraction(1, 4)), (5, Fraction(3, 4))])
def test_hurwitz_zeta_against_mpmath(s, a):
    z = hurwitz_zeta(s, a)
    assert inside(z, mp.zeta(s, mpf(Fraction(a))))
    assert z.width < Fraction(1, 2 ** 100)


def test_zeta2_closed_forms():
    assert inside(hurwitz_zeta2(1), mp.pi ** 2 / 6)
    assert inside(hurwitz_zeta2(Fraction(1, 2)), mp.pi ** 2 / 2)
    assert hurwitz_zeta2(1).overlaps(hurwitz_zeta(2, 1))


def test_digamma_values():
    assert inside(digamma_at(1), mp.digamma(1))
    assert inside(digamma_at(Fraction(1, 2)), mp.digamma(0.5))
    with pytest.raises(UnsupportedArgument):
        digamma_at(Fraction(1, 3))


@pytest.mark.parametrize("x", ["0.1", "1", "5", "40", "300", "140"])
def test_bessel_against_mpmath(x):
    X = Interval(Fraction(x))
    ref = mp.besseli(mp.mpf(-3) / 4, mp.mpf(x))
    I = bessel_I_m34(X)
    assert inside(I, ref)
    assert I.width / I.lo < Fraction(1, 10**35)


def test_bessel_at_one():
    assert abs(float(bessel_I_m34(Interval(1)).mid) - 0.975867537) < 1e-9


@settings(max_examples=40)
@given(st.fractions(min_value=Fraction(1, 100), max_value=200, max_denominator=1000),
       st.fractions(min_value=0, max_value=Fraction(1, 10), max_denominator=1000))
def test_bessel_wide_interval_contains_endpoint_values(c, w):
    X = Interval(c, c + w)
    I = bessel_I_m34(X)
    for t in (c, c + w):
        assert inside(I, mp.besseli(mp.mpf(-3) / 4, mpf(t)))


def test_bessel_fixed_truncation_is_still_an_enclosure():
    I = bessel_I_m34(Interval(2), K=40)
    assert inside(I, mp.besseli(-0.75, 2))


def test_bessel_rejects_nonpositive():
    with pytest.raises(NonPositiveArgument):
        bessel_I_m34(Interval(-1, 1))


@pytest.mark.parametrize("a", [1, Fraction(1, 2)])
@pytest.mark.parametrize("x", [Fraction(1, 10), Fraction(1, 2), 1, 2, 3])
def test_h_a_identity(a, x):
    r = h_a_identity_check(a, x)
    assert r.verdict is Verdict.VERIFIED
    assert r.lhs.width < Fraction(1, 10**30)


def test_h_a_identity_detects_a_wrong_right_side():
    # shifting the argument breaks the identity by far more than the width
    r = h_a_identity_check(1, Fraction(1, 2))
    assert not r.lhs.overlaps(r.rhs + Fraction(1, 10**20))


def test_lehmer_bound_needs_n_at_least_two():
    with pytest.raises(ValueError):
        lehmer_bound(1)
    assert math.isclose(float(lehmer_bound(2).mid), 1 / 6, rel_tol=1e-15)
