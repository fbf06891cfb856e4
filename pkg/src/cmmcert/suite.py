"""The lemma suite: every report-producing analytic check in one ordered list."""

from __future__ import annotations

import random
from fractions import Fraction

from . import arcs, jconst, laurent
from .interval import DEFAULT_PREC, Interval
from .reports import BoundReport, Verdict, combine, verdict_less
from .special import bernoulli_polynomial, h_a_identity_check, lehmer_bound

BRT_POINTS = [(r, t, a, z) for (r, t) in laurent.SUPPORTED
              for a in (Fraction(1), Fraction(1, 2))
              for z in (Fraction(1, 20), Fraction(1, 10), Fraction(1, 2))]
H_A_POINTS = [(a, x) for a in (Fraction(1), Fraction(1, 2))
              for x in (Fraction(1, 10), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3))]
F_SAMPLES = [Fraction(1, 10), (Fraction(1, 20), Fraction(1, 5)), (Fraction(1, 10), Fraction(3, 10))]
# 20 points of the cone 0 < |y| < 30x, given as (x, y/x)
MAJOR_SAMPLES = ([(Fraction(1, 500), k) for k in (1, 4, 8, 12, 16, 20, 24)]
                 + [(Fraction(1, 200), k) for k in (1, 4, 8, 12, 16, 20, 24)]
                 + [(Fraction(1, 100), k) for k in (2, 6, 10, 15, 22, 28)])
ETA_SAMPLES = [Fraction(6545, 1000000) * k / 10 for k in range(1, 11)]
MINOR_SAMPLES = ([(Fraction(1, 200), y) for y in (Fraction(4, 25), Fraction(1, 2), Fraction(1),
                                                   Fraction(2), Fraction(3))]
                 # close to q = -1, where G grows like exp(pi^2/(48x))
                 + [(Fraction(1, 1000), Fraction(31415, 10000))])


def lehmer_grid_report(max_n: int = 12, steps: int = 40, prec: int = DEFAULT_PREC) -> BoundReport:
    """|B_n(x)| <= 2 zeta(n) n!/(2 pi)^n on a rational grid of [0, 1], 2 <= n <= max_n."""
    worst = None
    verdicts = []
    for n in range(2, max_n + 1):
        bound = lehmer_bound(n, prec)
        for k in range(steps + 1):
            v = abs(bernoulli_polynomial(n, Fraction(k, steps)))
            # equality holds at the endpoints for even n (Euler's formula for zeta(n))
            exact = n % 2 == 0 and k in (0, steps) and bound.contains(v)
            verdicts.append(Verdict.VERIFIED if v <= bound.lo or exact else
                            (Verdict.FAILED if v > bound.hi else Verdict.INDETERMINATE))
            ratio = v / bound.hi
            worst = ratio if worst is None else max(worst, ratio)
    return BoundReport(
        claim_id="lehmer_grid", lhs=Interval(worst, prec=prec), rhs=Interval(1, prec=prec),
        verdict=combine(verdicts), relation="<=",
        metadata={"max_n": max_n, "grid_points": steps + 1, "max_ratio": float(worst)},
    )


def e_closed_form_report(r: int, t: int, a, samples: int = 50, seed: int = 0,
                         prec: int = DEFAULT_PREC) -> BoundReport:
    """E_a^{r,t}(z) <= closed-form majorant for ``samples`` radii with |az| < pi/6."""
    a = Fraction(a)
    rng = random.Random(seed * 1009 + r * 31 + t * 7 + a.denominator)
    cap = Fraction(3141, 6000) / a  # below pi/(6a)
    verdicts, worst_ratio, worst_z = [], Fraction(0), None
    for _ in range(samples):
        absz = cap * Fraction(rng.randrange(1, 10**6), 10**6)
        E = laurent.eval_E(a, r, t, absz, prec=prec)
        cf = laurent.e_bound_closed_form(a, r, t, absz)
        verdicts.append(verdict_less(E, cf) if E.hi != cf else Verdict.VERIFIED)
        ratio = E.lo / cf
        if ratio > worst_ratio:
            worst_ratio, worst_z = ratio, absz
    return BoundReport(
        claim_id=f"lemma_E_closed_form[r={r},t={t},a={a}]",
        lhs=Interval(worst_ratio, prec=prec), rhs=Interval(1, prec=prec),
        verdict=combine(verdicts), relation="E/closed form <",
        metadata={"samples": samples, "worst_abs_z": float(worst_z),
                  "worst_ratio": float(worst_ratio)},
    )


def lemma_suite(prec: int = DEFAULT_PREC, major: bool = True) -> list[BoundReport]:
    """All analytic checks, in a fixed order."""
    out: list[BoundReport] = []
    out += [laurent.brt_instance_check(r, t, a, z, prec) for r, t, a, z in BRT_POINTS]
    out += [h_a_identity_check(a, x, prec) for a, x in H_A_POINTS]
    out.append(lehmer_grid_report(prec=prec))
    for r, t in laurent.SUPPORTED:
        for a in (Fraction(1), Fraction(1, 2)):
            out.append(e_closed_form_report(r, t, a, prec=prec))
    out += [jconst.j_g_quadrature(3, 4, prec), jconst.j_g_quadrature(1, 4, prec)]
    out += laurent.lemma_F_check(F_SAMPLES, prec)
    out += laurent.lemma_F_check(F_SAMPLES[:1], prec, quoted=True)
    out += laurent.lemma_F_constants_report(prec)
    out += [arcs.alpha_m_verify(m, arcs.ALPHA_SQ[m]) for m in range(1, 6)]
    out.append(arcs.minor_arc_final_constant(prec))
    out += [arcs.eta_transform_bound(x, prec) for x in ETA_SAMPLES]
    out += [arcs.minor_arc_sample(x, y, prec) for x, y in MINOR_SAMPLES]
    if major:
        out += [arcs.major_arc_check((x, x * k), prec) for x, k in MAJOR_SAMPLES]
    return out


def count_verdicts(reports: list[BoundReport]) -> dict[str, int]:
    counts = {v.value: 0 for v in Verdict}
    for r in reports:
        counts[r.verdict.value] += 1
    return counts


def overall(reports: list[BoundReport]) -> Verdict:
    return combine(r.verdict for r in reports if not r.advisory)

