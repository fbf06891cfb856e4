"""The final Bessel inequality that reduces non-negativity of a(n) to a finite check:

    I_{-3/4}((pi/2) sqrt(n/3)) > E(n) + exp((pi/2) sqrt(n/3)) / (5 n^(7/8)).
"""

from __future__ import annotations

import multiprocessing as mp
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import interval as iv
from .interval import DEFAULT_PREC, Interval
from .reports import BoundReport, Verdict, verdict_greater
from .special import bessel_I_m34

MAX_PREC = 1024
CLAIMED_THRESHOLD = 2322
FINITE_CHECK_LIMIT = 4800


@dataclass(frozen=True)
class _Consts:
    pi: Interval
    sqrt3: Interval
    c_bessel: Interval   # pi / (2 sqrt 3)
    c_first: Interval    # pi/(4 sqrt 3) + 4 sqrt 3/(5 pi)
    k_first: Interval    # 21 pi^2 / (40 sqrt 3)
    k_shift: Interval    # pi sqrt 901 / (8 sqrt 3)
    k_inv: Interval      # 217 pi^2 / 240


@lru_cache(maxsize=None)
def _consts(prec: int) -> _Consts:
    pi = iv.pi(prec)
    s3 = iv.sqrt(Interval(3, prec=prec))
    return _Consts(
        pi=pi, sqrt3=s3,
        c_bessel=pi / (2 * s3),
        c_first=pi / (4 * s3) + 4 * s3 / (5 * pi),
        k_first=21 * pi.sqr() / (40 * s3),
        k_shift=pi * iv.sqrt(Interval(901, prec=prec)) / (8 * s3),
        k_inv=217 * pi.sqr() / 240,
    )


def _powers(n: int, prec: int) -> tuple[Interval, Interval]:
    N = Interval(n, prec=prec)
    rn = iv.sqrt(N)
    eighth = iv.sqrt(iv.sqrt(rn))
    return rn, eighth


def error_budget_E(n: int, prec: int = DEFAULT_PREC) -> Interval:
    """E(n) = 21 pi^2/(40 sqrt(3n)) exp((pi/(4 sqrt 3) + 4 sqrt 3/(5 pi)) sqrt n)
    + 567/(200 n^(5/8)) exp(pi sqrt n/(2 sqrt 3) + pi sqrt 901/(8 sqrt(3n)) + 217 pi^2/(240 n))."""
    if n < 1:
        raise ValueError("n must be positive")
    c = _consts(prec)
    rn, eighth = _powers(n, prec)
    t1 = c.k_first / rn * iv.exp(c.c_first * rn)
    t2 = Fraction(567, 200) / (rn * eighth) * iv.exp(c.c_bessel * rn + c.k_shift / rn + c.k_inv / n)
    return t1 + t2


def _check_at(n: int, prec: int) -> tuple[Verdict, Interval, Interval]:
    c = _consts(prec)
    rn, eighth = _powers(n, prec)
    arg = c.pi * rn / (2 * c.sqrt3)
    lhs = bessel_I_m34(arg)
    rhs = error_budget_E(n, prec) + iv.exp(c.c_bessel * rn) * eighth / (5 * n)
    return verdict_greater(lhs, rhs), lhs, rhs


def final_reduction_check(n: int, prec: int = DEFAULT_PREC, max_prec: int = MAX_PREC) -> BoundReport:
    """Decide the Bessel inequality at n, doubling precision while Indeterminate."""
    if n < 1:
        raise ValueError("n must be positive")
    p = prec
    while True:
        verdict, lhs, rhs = _check_at(n, p)
        if verdict is not Verdict.INDETERMINATE or p >= max_prec:
            break
        p = min(2 * p, max_prec)
    return BoundReport(
        claim_id=f"final_reduction[n={n}]", lhs=lhs, rhs=rhs, verdict=verdict, relation=">",
        metadata={"n": n, "precision": p},
    )


@dataclass
class ScanResult:
    lo: int
    hi: int
    threshold: int | None           # largest failing n, None if none failed
    failures: list[int] = field(default_factory=list)
    indeterminate: list[int] = field(default_factory=list)
    checked: int = 0

    @property
    def verdict(self) -> Verdict:
        if self.indeterminate:
            return Verdict.INDETERMINATE
        return Verdict.FAILED if self.failures else Verdict.VERIFIED

    def verified_above(self, n: int) -> bool:
        """True when every m in (n, hi] was checked and Verified."""
        return all(m <= n for m in self.failures + self.indeterminate)


def _scan_chunk(args: tuple[int, int, int]) -> tuple[list[int], list[int]]:
    lo, hi, prec = args
    fail, und = [], []
    for n in range(lo, hi + 1):
        v = final_reduction_check(n, prec).verdict
        if v is Verdict.FAILED:
            fail.append(n)
        elif v is Verdict.INDETERMINATE:
            und.append(n)
    return fail, und


def threshold_scan(lo: int, hi: int, jobs: int = 1, start_prec: int = 64,
                   chunk: int = 2000) -> ScanResult:
    """Check every n in [lo, hi]; chunks go to a process pool when jobs > 1.

    Merging is by chunk order, so the result does not depend on scheduling.
    """
    if not 1 <= lo < hi:
        raise ValueError("need 1 <= lo < hi")
    tasks = [(a, min(a + chunk - 1, hi), start_prec) for a in range(lo, hi + 1, chunk)]
    if jobs > 1 and len(tasks) > 1:
        with mp.get_context("spawn").Pool(jobs) as pool:
            parts = pool.map(_scan_chunk, tasks)
    else:
        parts = [_scan_chunk(t) for t in tasks]
    fails = sorted(n for f, _ in parts for n in f)
    und = sorted(n for _, u in parts for n in u)
    return ScanResult(lo=lo, hi=hi, threshold=fails[-1] if fails else None,
                      failures=fails, indeterminate=und, checked=hi - lo + 1)


def exponent_gap(prec: int = DEFAULT_PREC) -> Interval:
    c = _consts(prec)
    return c.c_bessel - c.c_first


def exponent_gap_report(prec: int = DEFAULT_PREC) -> BoundReport:
    """pi/(2 sqrt 3) - pi/(4 sqrt 3) - 4 sqrt 3/(5 pi) > 1/100.

    Advisory: the positive gap only says the Bessel growth eventually
    dominates E(n); it is not a proof for any particular n.
    """
    gap = exponent_gap(prec)
    c = _consts(prec)
    return BoundReport(
        claim_id="exponent_gap", lhs=gap, rhs=Interval(Fraction(1, 100), prec=prec),
        verdict=verdict_greater(gap, Fraction(1, 100)), relation=">", advisory=True,
        metadata={"bessel_exponent": c.c_bessel, "budget_exponent": c.c_first,
                  "note": "asymptotic heuristic, not a certificate for any finite n"},
    )
