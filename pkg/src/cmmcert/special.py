"""Bernoulli numbers and polynomials, plus rigorous enclosures of the few
special-function values the circle-method bounds need."""

from __future__ import annotations

import math
import threading
from fractions import Fraction

from . import interval as iv
from .interval import DEFAULT_PREC, Interval
from .reports import BoundReport, Verdict

__all__ = [
    "UnsupportedArgument", "NonPositiveArgument",
    "bernoulli_number", "bernoulli_polynomial", "lehmer_bound",
    "hurwitz_zeta", "hurwitz_zeta2", "digamma_at", "bessel_I_m34",
    "h_a_identity_check",
]


class UnsupportedArgument(ValueError):
    pass


class NonPositiveArgument(ValueError):
    pass


# -- Bernoulli ----------------------------------------------------------------

_bern: list[Fraction] = [Fraction(1)]
_bern_lock = threading.Lock()


def bernoulli_number(n: int) -> Fraction:
    """B_n with the convention B_1 = -1/2."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n < len(_bern):
        return _bern[n]
    with _bern_lock:
        # sum_{k<m+1} C(m+1, k) B_k = 0
        for m in range(len(_bern), n + 1):
            if m > 1 and m % 2 == 1:
                _bern.append(Fraction(0))
                continue
            s = Fraction(0)
            c = 1
            for k in range(m):
                s += c * _bern[k]
                c = c * (m + 1 - k) // (k + 1)
            _bern.append(-s / (m + 1))
    return _bern[n]


def bernoulli_polynomial(n: int, x) -> Fraction:
    """Exact B_n(x) = sum_k C(n,k) B_k x^(n-k) for rational x."""
    if n < 0:
        raise ValueError("n must be non-negative")
    x = Fraction(x)
    total = Fraction(0)
    for k in range(n + 1):
        bk = bernoulli_number(k)
        if bk:
            total += math.comb(n, k) * bk * x ** (n - k)
    return total


# -- zeta ---------------------------------------------------------------------

def _rising(s: int, r: int) -> int:
    out = 1
    for i in range(r):
        out *= s + i
    return out


def hurwitz_zeta(s: int, a, prec: int = DEFAULT_PREC) -> Interval:
    """Enclosure of sum_{m>=0} (m+a)^-s for integer s >= 2, 0 < a <= 1.

    Euler-Maclaurin from M onward; after k correction terms the remainder
    is at most twice the first omitted term, because every derivative of
    (x+a)^-s keeps one sign on [M, inf).
    """
    if s < 2:
        raise ValueError("s must be at least 2")
    a = Fraction(a)
    if not 0 < a <= 1:
        raise ValueError("need 0 < a <= 1")
    M = 24 + prec // 8
    head = sum((Fraction(1) / (m + a) ** s for m in range(M)), Fraction(0))
    X = M + a
    tail = X ** (1 - s) / (s - 1) + X ** (-s) / 2
    eps = Fraction(1, 2 ** (prec + 8))
    j = 1
    while True:
        term = bernoulli_number(2 * j) * _rising(s, 2 * j - 1) / (math.factorial(2 * j) * X ** (s + 2 * j - 1))
        if abs(term) < eps:
            rem = 2 * abs(term)
            break
        tail += term
        j += 1
    total = head + tail
    return Interval(total - rem, total + rem, prec)


def hurwitz_zeta2(a, prec: int = DEFAULT_PREC) -> Interval:
    """zeta(2, a); closed forms at a = 1 and a = 1/2."""
    a = Fraction(a)
    if not 0 < a <= 1:
        raise ValueError("need 0 < a <= 1")
    if a == 1:
        return iv.pi(prec).sqr() / 6
    if a == Fraction(1, 2):
        return iv.pi(prec).sqr() / 2
    return hurwitz_zeta(2, a, prec)


def lehmer_bound(n: int, prec: int = DEFAULT_PREC) -> Interval:
    """Enclosure of 2 zeta(n) n! / (2 pi)^n, which dominates |B_n(x)| on [0, 1]."""
    if n < 2:
        raise ValueError("n must be at least 2")
    z = hurwitz_zeta(n, 1, prec)
    return 2 * z * math.factorial(n) / (2 * iv.pi(prec)) ** n


def lehmer_majorant(n: int) -> Fraction:
    """Cheap rational upper bound for the Lehmer bound: 2 zeta(2) n!/(2 pi)^n
    with pi^2 < 10 and 2 pi > 6.28."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return Fraction(10, 3) * math.factorial(n) / Fraction(628, 100) ** n


# -- digamma ------------------------------------------------------------------

def digamma_at(a, prec: int = DEFAULT_PREC) -> Interval:
    a = Fraction(a)
    g = iv.euler_gamma(prec)
    if a == 1:
        return -g
    if a == Fraction(1, 2):
        return -2 * iv.log2(prec) - g
    raise UnsupportedArgument(f"digamma is only provided at 1 and 1/2, not {a}")


# -- Bessel I_{-3/4} ------------------------------------------------------------

def _inv_gamma_quarter_fixed(w: int) -> tuple[int, int]:
    g = iv.gamma_quarter(w + 16)
    lo = (1 << w) * g.hi.denominator // g.hi.numerator
    hi = -((-(1 << w) * g.lo.denominator) // g.lo.numerator)
    return lo, hi


def _bessel_sum_fixed(V: int, w: int, up: bool, K: int | None, start: int, rel: int) -> int:
    """sum_k v^k / (k! Gamma(k+1/4)) in w-bit fixed point, V = 4v scaled by 2^w.

    Successive terms have ratio 4v / (k (4k - 3)).  Without an explicit
    order ``K`` the loop stops once the ratio is below 1/2 and the last
    term is below 2^-rel of the running sum.

    The tail after the last computed term t_K is bounded by
    t_K * r / (1 - r) with r the (decreasing) next term ratio.
    """
    t = start
    s = t
    k = 0
    while True:
        k += 1
        den = k * (4 * k - 3)
        if up:
            t = -((-t * V) // (den << w))
        else:
            t = (t * V) // (den << w)
        s += t
        if K is not None:
            if k >= K:
                break
        elif V < den << (w - 1) and t << rel < s and k >= 32:
            break
    if not up:
        return s
    # next ratio r = V / ((k+1)(4k+1)); tail <= t * r / (1 - r)
    den = (k + 1) * (4 * k + 1)
    if V >= den << w:
        raise ValueError("truncation order too small for a geometric tail bound")
    num = t * V
    tail = -((-num) // ((den << w) - V))
    return s + tail + 1


def bessel_I_m34(x: Interval, K: int | None = None) -> Interval:
    """Enclosure of I_{-3/4}(x) = sum_k (x/2)^(2k - 3/4) / (k! Gamma(k + 1/4)).

    All terms are positive, so a partial sum is a lower bound.  The sum
    S(v) over v = (x/2)^2 is increasing in x while (x/2)^(-3/4) is
    decreasing, so lower and upper bounds pair opposite endpoints.  ``K``
    fixes the truncation order; by default the series runs until the terms
    are negligible.
    """
    if not isinstance(x, Interval):
        x = Interval(x)
    if x.lm <= 0:
        raise NonPositiveArgument("Bessel argument must be positive")
    p = x.prec
    xlo = Interval.from_dyadic((x.lm, x.le), (x.lm, x.le), p)
    xhi = Interval.from_dyadic((x.hm, x.he), (x.hm, x.he), p)
    w = p + 32 + max(0, int(x.mid).bit_length())
    g_lo, g_hi = _inv_gamma_quarter_fixed(w)
    v_lo = xlo.sqr()  # 4 * (x/2)^2
    v_hi = xhi.sqr()
    V_lo = math.floor(v_lo.lo * (1 << w))
    V_hi = math.ceil(v_hi.hi * (1 << w))
    s_lo = _bessel_sum_fixed(V_lo, w, False, K, g_lo, p + 8)
    s_hi = _bessel_sum_fixed(V_hi, w, True, K, g_hi, p + 8)
    S = Interval(Fraction(s_lo, 1 << w), Fraction(s_hi, 1 << w), p)
    # (x/2)^(-3/4) = 1 / sqrt(sqrt((x/2)^3)), decreasing in x
    pre_hi = 1 / iv.sqrt(iv.sqrt((xlo.scale2(-1)) ** 3))
    pre_lo = 1 / iv.sqrt(iv.sqrt((xhi.scale2(-1)) ** 3))
    lo = pre_lo * Interval(S.lo, S.lo, p)
    hi = pre_hi * Interval(S.hi, S.hi, p)
    return Interval.from_dyadic((lo.lm, lo.le), (hi.hm, hi.he), p)


# -- the H_a identity ------------------------------------------------------------

def h_a_identity_check(a, x, prec: int = DEFAULT_PREC) -> BoundReport:
    """Check sum_m e^{-(m+a)x}/(m+a) + sum_n B_{n+1}(a)/((n+1)(n+1)!) (-x)^{n+1}
    against -log x - gamma - psi(a).

    Both series are evaluated with explicit tails; the verdict is Verified
    when the left enclosure overlaps the right one.
    """
    a = Fraction(a)
    x = Fraction(x)
    if not 0 < x < 6:
        raise ValueError("need 0 < x < 2 pi")
    X = Interval(x, prec=prec)
    q = iv.exp(-X)
    # exponential sum to M - 1 with geometric tail
    M = max(8, math.ceil((prec + 10) * math.log(2) / float(x)) + 1)
    s = Interval(0, prec=prec)
    qa = iv.exp(-X * a)
    qm = qa
    for m in range(M):
        s = s + qm / (m + a)
        qm = qm * q
    tail_exp = qm / ((M + a) * (1 - q))
    # Bernoulli sum with Lehmer tail: |B_{n+1}(a)| <= lehmer(n+1)
    r = x / Fraction(628, 100)
    N = 2
    while r ** (N + 2) / (N + 2) > Fraction(1, 2 ** (prec + 10)):
        N += 1
    b = Fraction(0)
    for n in range(N + 1):
        b += bernoulli_polynomial(n + 1, a) / ((n + 1) * math.factorial(n + 1)) * (-x) ** (n + 1)
    tail_b = Fraction(10, 3) * r ** (N + 2) / ((N + 2) * (1 - r))
    err = tail_exp + tail_b
    lhs = s + b
    lhs = Interval(lhs.lo - err.hi, lhs.hi + err.hi, prec)
    rhs = -iv.log(X) - iv.euler_gamma(prec) - digamma_at(a, prec)
    ok = lhs.overlaps(rhs)
    return BoundReport(
        claim_id=f"h_a_identity[a={a},x={x}]",
        lhs=lhs, rhs=rhs,
        verdict=Verdict.VERIFIED if ok else Verdict.FAILED,
        metadata={"a": str(a), "x": str(x), "exp_terms": M, "bernoulli_terms": N + 1},
        relation="contains",
    )
