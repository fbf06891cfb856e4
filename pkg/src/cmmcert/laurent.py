"""Laurent data of B_{r,t}(z) = e^{-(r/t) z} / (z (1 - e^{-z})) and the
main-term / error-term functions F_a^{r,t}, E_a^{r,t} built from it.

F_a^{r,t}(z) = zeta(2,a)/z^2 + beta_{r,t}/z - (1/z)(1/2 - r/t)(log z + gamma + psi(a))
               - sum_n c*_n B_{n+1}(a)/(n+1) z^n

The minus sign on the series is the one produced by Euler-Maclaurin
summation of the regular part; it is what makes sum_m B_{r,t}((m+a)z)
agree with F to O(|z|).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import interval as iv
from .complexbox import ComplexBox, clog
from .interval import DEFAULT_PREC, Interval
from .reports import BoundReport, Verdict, verdict_less
from .special import (bernoulli_polynomial, digamma_at, hurwitz_zeta2,
                      lehmer_majorant)

SUPPORTED = ((1, 4), (3, 4))

# upper bound and exact value for the integral of |g''_{r,t}| over (0, inf)
J_CONSTANTS = {(1, 4): Fraction(649, 40000), (3, 4): Fraction(5, 64)}

# 6.28 < 2 pi; every disk condition below is checked against this
TWO_PI_LO = Fraction(628, 100)


class UnsupportedArguments(ValueError):
    pass


class OutOfDisk(ValueError):
    pass


@dataclass(frozen=True)
class LaurentCoeffs:
    r: int
    t: int
    max_n: int
    c: dict[int, Fraction] = field(repr=False)
    c_star: dict[int, Fraction] = field(repr=False)
    b: dict[int, Fraction] = field(repr=False)

    @property
    def A(self) -> Fraction:
        return Fraction(self.r, self.t)


def _c_star(n: int, A: Fraction, c: dict[int, Fraction]) -> Fraction:
    # splitting index N = 1
    if n <= 0:
        return c[n]
    return (-A) ** (n + 1) * c[-1] / math.factorial(n + 1)


def brt_laurent(r: int, t: int, max_n: int) -> LaurentCoeffs:
    """Exact c_n = B_{n+2}(1 - r/t)/(n+2)! for -2 <= n <= max_n, with c*_n and b_n."""
    if not 0 < r <= t:
        raise ValueError("need 0 < r <= t")
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    A = Fraction(r, t)
    c = {n: bernoulli_polynomial(n + 2, 1 - A) / math.factorial(n + 2) for n in range(-2, max_n + 1)}
    cs = {n: _c_star(n, A, c) for n in range(0, max_n + 1)}
    b = {n: c[n] - (-A) ** (n + 1) * c[-1] / math.factorial(n + 1) for n in range(0, max_n + 1)}
    return LaurentCoeffs(r, t, max_n, c, cs, b)


def laurent_division(r: int, t: int, order: int) -> list[Fraction]:
    """Coefficients of z^-2 .. z^(order-2) of B_{r,t} by direct series division.

    z^2 B(z) = e^{-Az} * z / (1 - e^{-z}); the second factor is the
    reciprocal of (1 - e^{-z}) / z = sum_k (-1)^k z^k / (k+1)!.
    """
    A = Fraction(r, t)
    d = [Fraction((-1) ** k, math.factorial(k + 1)) for k in range(order + 1)]
    inv = [Fraction(0)] * (order + 1)
    inv[0] = 1 / d[0]
    for n in range(1, order + 1):
        inv[n] = -sum(d[k] * inv[n - k] for k in range(1, n + 1)) / d[0]
    e = [(-A) ** k / math.factorial(k) for k in range(order + 1)]
    return [sum(e[k] * inv[n - k] for k in range(n + 1)) for n in range(order + 1)]


def beta_rt(r: int, t: int, prec: int = DEFAULT_PREC) -> Interval:
    """log Gamma(r/t) - log(2 pi)/2 for r/t in {1/4, 3/4}."""
    if (r, t) not in SUPPORTED:
        raise UnsupportedArguments(f"beta is only provided for {SUPPORTED}")
    g = iv.gamma_quarter(prec)
    pi = iv.pi(prec)
    if r == 1:
        lg = iv.log(g)
    else:
        # Gamma(1/4) Gamma(3/4) = pi sqrt(2)
        lg = iv.log(pi * iv.sqrt(Interval(2, prec=prec)) / g)
    return lg - iv.log(2 * pi).scale2(-1)


# -- F --------------------------------------------------------------------------

def _series_tail(A: Fraction, absz: Fraction, K: int) -> Fraction:
    """Bound on sum_{n>K} |c*_n B_{n+1}(a)/(n+1)| |z|^n.

    |c*_n| <= A^(n+1) / (2 (n+1)!) and |B_{n+1}(a)| <= (10/3)(n+1)!/6.28^(n+1),
    so each term is at most (5/3) (A/6.28)^(n+1) |z|^n.
    """
    rho = A * absz / TWO_PI_LO
    if rho >= 1:
        raise OutOfDisk("series majorant diverges")
    return Fraction(5, 3) * (A / TWO_PI_LO) * rho ** (K + 1) / (1 - rho)


def _abs_upper(z: ComplexBox) -> Fraction:
    return z.abs().hi


def eval_F(a, r: int, t: int, z, K: int = 40, prec: int | None = None) -> ComplexBox:
    """Enclosure of F_a^{r,t}(z) for Re z > 0, 0 < |z| < 2 pi."""
    a = Fraction(a)
    z = ComplexBox.of(z, prec or DEFAULT_PREC)
    p = prec or z.prec
    absz = _abs_upper(z)
    A = Fraction(r, t)
    if absz >= TWO_PI_LO:
        raise OutOfDisk(f"|z| must be below 2 pi, got about {float(absz):.4g}")
    L = brt_laurent(r, t, max(K, 1))
    c_m1 = L.c[-1]
    out = hurwitz_zeta2(a, p) / (z * z) + beta_rt(r, t, p) / z
    if c_m1:
        g = iv.euler_gamma(p) + digamma_at(a, p)
        out = out - (clog(z) + g) * c_m1 / z
    # Horner on the polynomial part, then widen by the tail
    coeffs = [L.c_star[n] * bernoulli_polynomial(n + 1, a) / (n + 1) for n in range(K + 1)]
    acc = ComplexBox.of(coeffs[K], p)
    for n in range(K - 1, -1, -1):
        acc = acc * z + coeffs[n]
    tail = _series_tail(A, absz, K)
    out = out - acc
    return ComplexBox(out.re + Interval(-tail, tail, p), out.im + Interval(-tail, tail, p))


def F_combo(z, K: int = 40, prec: int | None = None) -> ComplexBox:
    """F(z) = 4z (F_1^{1,4}(4z) + F_1^{3,4}(8z) - F_{1/2}^{3,4}(8z))."""
    z = ComplexBox.of(z, prec or DEFAULT_PREC)
    z4, z8 = z * 4, z * 8
    s = (eval_F(1, 1, 4, z4, K, prec) + eval_F(1, 3, 4, z8, K, prec)
         - eval_F(Fraction(1, 2), 3, 4, z8, K, prec))
    return z * 4 * s


# -- E --------------------------------------------------------------------------

def e_coefficients(r: int, t: int, K: int) -> list[Fraction]:
    """|B_{n+2}(1-r/t)/(n+2)! - (-r)^(n+1) B_1(1-r/t)/(t^(n+1) (n+1)!)| for n = 0..K."""
    L = brt_laurent(r, t, max(K, 1))
    return [abs(L.b[n]) for n in range(K + 1)]


def eval_E(a, r: int, t: int, z, K: int = 60, prec: int | None = None) -> Interval:
    """Upper enclosure of E_a^{r,t}(z) (depends only on |z|)."""
    if (r, t) not in SUPPORTED:
        raise UnsupportedArguments(f"E is only provided for {SUPPORTED}")
    a = Fraction(a)
    if isinstance(z, ComplexBox):
        absz_iv = z.abs()
    else:
        absz_iv = ComplexBox.of(z, prec or DEFAULT_PREC).abs()
    p = prec or absz_iv.prec
    u = absz_iv * a
    if u.hi >= TWO_PI_LO:
        raise OutOfDisk("|a z| must be below 2 pi")
    d = e_coefficients(r, t, K)
    acc = Interval(0, prec=p)
    for n in range(K, 0, -1):
        acc = (acc + n * d[n]) * u
    # tail: |d_n| <= (10/3)/6.28^(n+2) + A^(n+1)/(2 (n+1)!)
    A = Fraction(r, t)
    uh = u.hi
    rho = uh / TWO_PI_LO
    s1 = Fraction(10, 3) / TWO_PI_LO ** 2 * (K + 1) * rho ** (K + 1) / (1 - rho) ** 2
    Au = A * uh
    if Au >= K + 2:
        raise OutOfDisk("E tail bound needs a larger K")
    s2 = A / 2 * Au ** (K + 1) / math.factorial(K + 1) / (1 - Au / (K + 2))
    tail = s1 + s2
    total = J_CONSTANTS[(r, t)] / 12 * absz_iv + Fraction(3, 5) * (acc + Interval(0, tail, p))
    return total


def e_bound_closed_form(a, r: int, t: int, absz) -> Fraction:
    """The closed-form majorants (649/480000 + 99a/5000)|z| and
    (5/768 + 186a/5000)|z|, valid for |az| < pi/6."""
    a = Fraction(a)
    absz = Fraction(absz)
    if (r, t) == (1, 4):
        return (Fraction(649, 480000) + Fraction(99, 5000) * a) * absz
    if (r, t) == (3, 4):
        return (Fraction(5, 768) + Fraction(186, 5000) * a) * absz
    raise UnsupportedArguments(f"closed form only for {SUPPORTED}")


# -- sum_m B_{r,t}((m+a) z) on the positive real axis ------------------------------

def brt_sum_real(r: int, t: int, a, z, prec: int = DEFAULT_PREC) -> Interval:
    """Enclosure of sum_{m>=0} B_{r,t}((m+a) z) for real z > 0."""
    a = Fraction(a)
    z = Fraction(z)
    A = Fraction(r, t)
    Z = Interval(z, prec=prec)
    q = iv.exp(-Z)
    qA = iv.exp(-Z * A)
    w0 = Z * a
    e1 = iv.exp(-w0)          # e^{-(m+a) z}
    eA = iv.exp(-w0 * A)      # e^{-A (m+a) z}
    M = math.ceil((prec + 10) * math.log(2) / float(A * z)) + 1
    s = Interval(0, prec=prec)
    for m in range(M):
        w = Z * (m + a)
        s = s + eA / (w * (1 - e1))
        e1 = e1 * q
        eA = eA * qA
    # remaining terms: e^{-A w}/(w (1 - e^{-w})) with w >= (M+a) z
    wM = Z * (M + a)
    tail = eA / (wM * (1 - e1) * (1 - qA))
    return s + Interval(0, tail.hi, prec)


def brt_instance_check(r: int, t: int, a, z, prec: int = DEFAULT_PREC) -> BoundReport:
    """|sum_m B_{r,t}((m+a)z) - F_a^{r,t}(z)| <= E_a^{r,t}(z) at a real point."""
    a, z = Fraction(a), Fraction(z)
    lhs_sum = brt_sum_real(r, t, a, z, prec)
    F = eval_F(a, r, t, z, prec=prec)
    diff = abs(lhs_sum - F.re)
    E = eval_E(a, r, t, z, prec=prec)
    return BoundReport(
        claim_id=f"brt_bound[r={r},t={t},a={a},z={z}]",
        lhs=diff, rhs=E, verdict=verdict_less(diff, E),
        metadata={"r": r, "t": t, "a": str(a), "z": str(z)},
    )


# -- the combination F(z) and its expansion ---------------------------------------

@dataclass(frozen=True)
class FExpansion:
    """F(z) = alpha_m1 / z + alpha_log log z + sum_n alpha_n z^n near 0."""
    alpha_m1: Interval
    alpha_log: Fraction
    alpha0: Interval
    alpha: dict[int, Fraction]  # n >= 1


def f_expansion(max_n: int = 12, prec: int = DEFAULT_PREC) -> FExpansion:
    L14 = brt_laurent(1, 4, max_n)
    L34 = brt_laurent(3, 4, max_n)
    # pole: 4z * [zeta(2,1)/(16 z^2) + (zeta(2,1) - zeta(2,1/2))/(64 z^2)]
    alpha_m1 = (hurwitz_zeta2(1, prec) / 4
                + (hurwitz_zeta2(1, prec) - hurwitz_zeta2(Fraction(1, 2), prec)) / 16)
    # log terms: -c_{-1}(1,4) from the 4z piece; the 8z pieces cancel
    alpha_log = -L14.c[-1]
    # constant: beta_{1,4} - c_{-1}(1,4) (log 4 + gamma + psi(1))
    #           - c_{-1}(3,4)/2 (psi(1) - psi(1/2))
    g = iv.euler_gamma(prec)
    alpha0 = (beta_rt(1, 4, prec)
              - L14.c[-1] * (2 * iv.log2(prec) + g + digamma_at(1, prec))
              - L34.c[-1] / 2 * (digamma_at(1, prec) - digamma_at(Fraction(1, 2), prec)))
    alpha = {}
    half = Fraction(1, 2)
    for n in range(0, max_n):
        k = n + 1
        alpha[k] = -4 * (L14.c_star[n] * bernoulli_polynomial(k, 1) * 4 ** n
                         + L34.c_star[n] * (bernoulli_polynomial(k, 1) - bernoulli_polynomial(k, half)) * 8 ** n) / k
    return FExpansion(alpha_m1, alpha_log, alpha0, alpha)


def alpha_printed(n: int) -> Fraction:
    """The closed form ((-1)^n/(4n n!)) (B_n(1) + 6^(n-1)(B_n(1/2) - B_n(1))) for comparison."""
    b1 = bernoulli_polynomial(n, 1)
    bh = bernoulli_polynomial(n, Fraction(1, 2))
    return Fraction((-1) ** n, 4 * n * math.factorial(n)) * (b1 + Fraction(6) ** (n - 1) * (bh - b1))


def alpha0_printed(prec: int = DEFAULT_PREC) -> Interval:
    """beta_{1,4} - (log 2 + gamma)/4: the closed form quoted for the constant term."""
    return beta_rt(1, 4, prec) - (iv.log2(prec) + iv.euler_gamma(prec)).scale2(-2)


def lemma_F_check(z_samples, prec: int = DEFAULT_PREC, quoted: bool = False) -> list[BoundReport]:
    """|F(z) - alpha_m1/z - alpha_log log z - alpha_0| <= |z|/2 at each sample.

    By default the constants are those of the expansion of F itself (see
    f_expansion).  With ``quoted=True`` the quoted closed forms
    alpha_log = 1/4 and alpha_0 = beta_{1,4} - (log 2 + gamma)/4 are used.
    """
    ex = f_expansion(4, prec)
    if quoted:
        ex = FExpansion(ex.alpha_m1, Fraction(1, 4), alpha0_printed(prec), ex.alpha)
    tag = "lemma_F_quoted" if quoted else "lemma_F"
    out = []
    for z in z_samples:
        zb = ComplexBox.of(z, prec)
        absz = zb.abs()
        if not absz.hi < Fraction(3141, 6000):
            raise OutOfDisk("lemma F samples need |z| < pi/6")
        F = F_combo(zb, prec=prec)
        main = ex.alpha_m1 / zb + clog(zb) * ex.alpha_log + ComplexBox(ex.alpha0, Interval(0, prec=prec))
        lhs = (F - main).abs()
        rhs = absz.scale2(-1)
        out.append(BoundReport(
            claim_id=f"{tag}[z={_fmt(z)}]", lhs=lhs, rhs=rhs,
            verdict=verdict_less(lhs, rhs), metadata={"z": _fmt(z)},
        ))
    return out


def lemma_F_constants_report(prec: int = DEFAULT_PREC) -> list[BoundReport]:
    """Compare the quoted closed forms of alpha_0, alpha_log and alpha_1
    with the constants read off the expansion of F."""
    ex = f_expansion(6, prec)
    reports = []
    quoted0 = alpha0_printed(prec)
    reports.append(BoundReport(
        claim_id="lemma_F_constant.alpha0_closed_form", lhs=ex.alpha0, rhs=quoted0,
        verdict=Verdict.VERIFIED if ex.alpha0.overlaps(quoted0) else Verdict.FAILED,
        relation="==",
        metadata={"expansion_alpha0": float(ex.alpha0.mid), "quoted_alpha0": float(quoted0.mid)},
    ))
    for name, ours, quoted in (("alpha_log", ex.alpha_log, Fraction(1, 4)),
                               ("alpha1", ex.alpha[1], Fraction(-1, 96))):
        reports.append(BoundReport(
            claim_id=f"lemma_F_constant.{name}", lhs=Interval(ours, prec=prec),
            rhs=Interval(quoted, prec=prec),
            verdict=Verdict.VERIFIED if ours == quoted else Verdict.FAILED,
            relation="==",
            metadata={"expansion": str(ours), "quoted": str(quoted)},
        ))
    return reports


def _fmt(z) -> str:
    if isinstance(z, ComplexBox):
        return f"{z.re.mid:.6g}{z.im.mid:+.6g}i"
    if isinstance(z, tuple):
        return f"{float(z[0]):.6g}{float(z[1]):+.6g}i"
    z = complex(z)
    return f"{z.real:.6g}{z.imag:+.6g}i"
