"""The integrals J_{g,2} = int_0^inf |g''_{r,t}(x)| dx for
g_{r,t}(x) = B_{r,t}(x) - 1/x^2 - (1/2 - r/t) e^{-(r/t) x} / x.

Sign information turns the integral into endpoint values of g':
if g'' > 0 on (0, alpha) and g'' < 0 on (alpha, inf) then
J = 2 g'(alpha) - g'(0), and g'(0) = b_1 exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import interval as iv
from .interval import DEFAULT_PREC, Interval
from .laurent import J_CONSTANTS, SUPPORTED, UnsupportedArguments, brt_laurent
from .reports import BoundReport, Verdict


@dataclass(frozen=True)
class Jet:
    """Value with first and second derivative, over any field-like type."""
    v: object
    d1: object
    d2: object

    def __add__(self, o):
        if isinstance(o, Jet):
            return Jet(self.v + o.v, self.d1 + o.d1, self.d2 + o.d2)
        return Jet(self.v + o, self.d1, self.d2)

    __radd__ = __add__

    def __neg__(self):
        return Jet(-self.v, -self.d1, -self.d2)

    def __sub__(self, o):
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        if isinstance(o, Jet):
            return Jet(self.v * o.v,
                       self.d1 * o.v + self.v * o.d1,
                       self.d2 * o.v + 2 * (self.d1 * o.d1) + self.v * o.d2)
        return Jet(self.v * o, self.d1 * o, self.d2 * o)

    __rmul__ = __mul__

    def __truediv__(self, o):
        if not isinstance(o, Jet):
            return Jet(self.v / o, self.d1 / o, self.d2 / o)
        w = self.v / o.v
        w1 = (self.d1 - w * o.d1) / o.v
        w2 = (self.d2 - 2 * (w1 * o.d1) - w * o.d2) / o.v
        return Jet(w, w1, w2)

    def __rtruediv__(self, o):
        return Jet(o, 0 * self.v, 0 * self.v) / self


def jet_exp(u: Jet, exp) -> Jet:
    e = exp(u.v)
    return Jet(e, e * u.d1, e * (u.d2 + u.d1 * u.d1))


def g_jet(r: int, t: int, x, exp) -> Jet:
    """(g, g', g'') of g_{r,t} at x; ``exp`` matches the type of x."""
    A = Fraction(r, t)
    c = Fraction(1, 2) - A
    X = Jet(x, 1 + 0 * x, 0 * x)
    eA = jet_exp(X * (-A), exp)
    e1 = jet_exp(-X, exp)
    return eA / (X * (1 - e1)) - 1 / (X * X) - eA * c / X


def _g2_series(r: int, t: int, x: Interval, K: int = 30) -> Interval:
    """g'' on a small interval [0, x1] from the Taylor series sum n(n-1) b_n x^(n-2).

    |b_n| <= (10/3)/6.28^(n+2) + A^(n+1)/(2 (n+1)!) bounds the tail.
    """
    L = brt_laurent(r, t, K)
    A = Fraction(r, t)
    acc = Interval(0, prec=x.prec)
    for n in range(K, 1, -1):
        acc = acc * x + n * (n - 1) * L.b[n]
    xh = abs(x).hi
    rho = xh / Fraction(628, 100)
    assert rho < Fraction(1, 2)
    # sum_{n>K} n^2 x^(n-2) * majorant
    tail = Fraction(0)
    for n in range(K + 1, K + 200):
        tail += n * n * (Fraction(10, 3) / Fraction(628, 100) ** (n + 2)
                         + A ** (n + 1) / (2 * math.factorial(n + 1))) * xh ** (n - 2)
    # geometric remainder past K + 200 is far below the precision in use
    tail *= 2
    return acc + Interval(-tail, tail, x.prec)


def g2_enclosure(r: int, t: int, x: Interval) -> Interval:
    """Enclosure of g''_{r,t} over the interval x (x.lo >= 0)."""
    if x.hi <= 1:
        return _g2_series(r, t, x)
    if x.lo < 1:
        one = Fraction(1)
        return _g2_series(r, t, Interval(x.lo, one, x.prec)).hull(
            g_jet(r, t, Interval(one, x.hi, x.prec), iv.exp).d2)
    return g_jet(r, t, x, iv.exp).d2


def g1_enclosure(r: int, t: int, x: Interval) -> Interval:
    return g_jet(r, t, x, iv.exp).d1


def _sign_on(r: int, t: int, lo: Fraction, hi: Fraction, sign: int, prec: int,
             depth: int = 0) -> bool:
    """Certify sign(g'') == sign on [lo, hi] by bisection."""
    x = Interval(lo, hi, prec)
    e = g2_enclosure(r, t, x)
    if (sign > 0 and e.is_positive()) or (sign < 0 and e.is_negative()):
        return True
    if depth > 40:
        return False
    mid = (lo + hi) / 2
    return (_sign_on(r, t, lo, mid, sign, prec, depth + 1)
            and _sign_on(r, t, mid, hi, sign, prec, depth + 1))


def _tail_negative(r: int, t: int, X: Fraction, prec: int) -> bool:
    """g'' < 0 on [X, inf) for X >= 10.

    There g = -1/x^2 + e^{-Ax} phi(x) with |A^2 phi - 2A phi' + phi''| < 1,
    so g'' <= -6/x^4 + e^{-Ax}.  The function x^4 e^{-Ax} decreases for
    x > 4/A, so checking 6 > X^4 e^{-AX} at X settles the whole ray.
    """
    A = Fraction(r, t)
    if X < 10 or X <= 4 / A:
        return False
    Xi = Interval(X, prec=prec)
    val = Xi ** 4 * iv.exp(-Xi * A)
    return val.hi < 6


def _quadrature(r: int, t: int, alpha: float | None) -> float:
    """Non-rigorous cross-check of J by tanh-sinh quadrature of |g''|.

    Below x = 1 the Taylor series of g'' is used to avoid the cancellation
    between the 1/x^4 terms of the closed form.
    """
    import mpmath as mp

    L = brt_laurent(r, t, 40)
    with mp.workdps(40):
        b = [mp.mpf(L.b[n].numerator) / L.b[n].denominator for n in range(41)]

        def g2(x):
            if x < 1:
                return mp.fsum(n * (n - 1) * b[n] * x ** (n - 2) for n in range(2, 41))
            return g_jet(r, t, x, mp.exp).d2

        pts = [0, 1, 5]
        if alpha is not None:
            pts.append(mp.mpf(alpha))
        pts += [40, 160, mp.inf]
        pts = sorted(set(pts), key=lambda v: float(v))
        return float(mp.quad(lambda x: abs(g2(x)), pts))


def _bracket_zero(prec: int, tol: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink [15.45, 15.46] around the sign change of g''_{1,4} by point bisection."""
    lo, hi = Fraction(1545, 100), Fraction(1546, 100)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        e = g2_enclosure(1, 4, Interval(mid, prec=prec))
        if e.is_positive():
            lo = mid
        elif e.is_negative():
            hi = mid
        else:
            break
    return lo, hi


SWEEP_PREC = 64


def j_g_quadrature(r: int, t: int, prec: int = DEFAULT_PREC) -> BoundReport:
    """Certify J_{g_{r,t},2} from the sign pattern of g''.

    (3,4): g'' < 0 on (0, inf), so J = g'(0) = b_1 = 5/64.
    (1,4): g'' > 0 on (0, a) and < 0 on (b, inf) for a tight bracket
    [a, b] of the zero alpha, so
    J <= g'(a) - g'(0) + g'(b) + (b - a) sup |g''| on [a, b].
    """
    if (r, t) not in SUPPORTED:
        raise UnsupportedArguments(f"J is only provided for {SUPPORTED}")
    L = brt_laurent(r, t, 2)
    b1 = L.b[1]  # g'(0)
    sp = min(prec, SWEEP_PREC)
    if (r, t) == (3, 4):
        X = Fraction(40)
        neg = _sign_on(r, t, Fraction(0), X, -1, sp) and _tail_negative(r, t, X, sp)
        J = Interval(b1, prec=prec)
        quad = _quadrature(r, t, None)
        ok = neg and b1 == J_CONSTANTS[(3, 4)] and abs(quad - float(b1)) < 1e-6
        return BoundReport(
            claim_id="J[g_3,4]", lhs=J, rhs=Interval(J_CONSTANTS[(3, 4)], prec=prec),
            verdict=Verdict.VERIFIED if ok else Verdict.FAILED, relation="==",
            metadata={"g2_negative": neg, "b1": str(b1), "quadrature": quad},
        )
    X = Fraction(80)
    coarse = (_sign_on(r, t, Fraction(0), Fraction(1545, 100), 1, sp)
              and _sign_on(r, t, Fraction(1546, 100), X, -1, sp)
              and _tail_negative(r, t, X, sp))
    a, b = _bracket_zero(prec, Fraction(1, 10**9))
    fine = _sign_on(r, t, Fraction(1545, 100), a, 1, prec) and _sign_on(r, t, b, Fraction(1546, 100), -1, prec)
    alpha = Interval(a, b, prec)
    g1a = g1_enclosure(r, t, Interval(a, prec=prec))
    g1b = g1_enclosure(r, t, Interval(b, prec=prec))
    mid = abs(g2_enclosure(r, t, alpha)) * (b - a)
    J = g1a + g1b - b1 + Interval(0, mid.hi, prec)
    g1_alpha = g1_enclosure(r, t, alpha)
    bound = Interval(J_CONSTANTS[(1, 4)], prec=prec)
    quad = _quadrature(r, t, float(a))
    signs = coarse and fine
    ok = signs and J.hi < bound.lo and g1_alpha.hi < Fraction(3, 10000)
    verdict = Verdict.VERIFIED if ok else (Verdict.FAILED if signs else Verdict.INDETERMINATE)
    return BoundReport(
        claim_id="J[g_1,4]", lhs=J, rhs=bound, verdict=verdict,
        metadata={"alpha": alpha, "g1_at_alpha": g1_alpha, "sign_pattern": signs,
                  "b1": str(b1), "quadrature": quad},
    )


def g2_zero(prec: int = DEFAULT_PREC, tol: Fraction = Fraction(1, 10**8)) -> Interval:
    """Enclosure of the sign change of g''_{1,4} inside [15.45, 15.46]."""
    return Interval(*_bracket_zero(prec, tol), prec)
