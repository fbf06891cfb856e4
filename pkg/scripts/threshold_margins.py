"""Print the margin of the final Bessel inequality around the threshold.

For each n the certified enclosure of I_{-3/4}(x) - rhs(n) is shown next
to an mpmath float evaluation, so the sign change can be read off directly.

    python3 scripts/threshold_margins.py 2315 2335
"""

from __future__ import annotations

import argparse

import mpmath as mp

from cmmcert.reduction import final_reduction_check


def margin_mpmath(n: int):
    n = mp.mpf(n)
    pi, s3 = mp.pi, mp.sqrt(3)
    x = pi / 2 * mp.sqrt(n / 3)
    E = (21 * pi ** 2 / (40 * mp.sqrt(3 * n)) * mp.exp((pi / (4 * s3) + 4 * s3 / (5 * pi)) * mp.sqrt(n))
         + mp.mpf(567) / 200 / n ** (mp.mpf(5) / 8)
         * mp.exp(x + pi * mp.sqrt(901) / (8 * mp.sqrt(3 * n)) + 217 * pi ** 2 / (240 * n)))
    return mp.besseli(mp.mpf(-3) / 4, x) - E - mp.exp(x) / (5 * n ** (mp.mpf(7) / 8))


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("lo", type=int)
    p.add_argument("hi", type=int)
    p.add_argument("--dps", type=int, default=30)
    args = p.parse_args()
    mp.mp.dps = args.dps
    print(f"{'n':>7} {'verdict':>13} {'relative margin (certified)':>30} {'mpmath':>14}")
    for n in range(args.lo, args.hi + 1):
        r = final_reduction_check(n)
        rel = (r.lhs - r.rhs) / r.lhs
        ref = margin_mpmath(n) / mp.besseli(mp.mpf(-3) / 4, mp.pi / 2 * mp.sqrt(mp.mpf(n) / 3))
        print(f"{n:>7} {r.verdict.value:>13} {str(rel):>30} {mp.nstr(ref, 6):>14}")


if __name__ == "__main__":
    main()
