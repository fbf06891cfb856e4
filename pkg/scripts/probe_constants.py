"""Print every analytic constant the checks rely on, with its enclosure.

Useful for auditing: each line is a certified interval, and where a
quoted decimal exists it is printed alongside.

    python3 scripts/probe_constants.py
"""

from __future__ import annotations

from fractions import Fraction

from cmmcert import arcs, laurent, reduction
from cmmcert.jconst import j_g_quadrature
from cmmcert.special import bessel_I_m34
from cmmcert.interval import Interval


def show(name: str, value, quoted: str = "") -> None:
    tail = f"   (quoted {quoted})" if quoted else ""
    print(f"{name:<34} {value}{tail}")


def main() -> None:
    ex = laurent.f_expansion(6)
    show("beta_{1,4}", laurent.beta_rt(1, 4), "0.369084")
    show("beta_{3,4}", laurent.beta_rt(3, 4), "-0.713344")
    show("alpha_{-1} = pi^2/48", ex.alpha_m1)
    show("alpha_log", ex.alpha_log, "1/4")
    show("alpha_0", ex.alpha0, "0.051493")
    show("alpha_0 (quoted closed form)", laurent.alpha0_printed())
    show("alpha_1", ex.alpha[1], "-1/96")
    show("alpha_2", ex.alpha[2])
    j34, j14 = j_g_quadrature(3, 4), j_g_quadrature(1, 4)
    show("J_{g_{3,4},2}", j34.lhs, "5/64")
    show("J_{g_{1,4},2}", j14.lhs, "< 649/40000")
    show("zero of g''_{1,4}", j14.metadata["alpha"], "15.4523")
    show("minor-arc constant", arcs.minor_arc_final_constant().lhs, "0.199")
    for m in range(1, 6):
        r = arcs.alpha_m_verify(m, arcs.ALPHA_SQ[m])
        show(f"min h_{m}(x)/x^2 on (0, pi/480]", r.rhs, f"alpha_{m}^2 = {arcs.ALPHA_SQ[m]}")
    show("exponent gap", reduction.exponent_gap(), "0.012386")
    show("I_{-3/4}(1)", bessel_I_m34(Interval(1)))
    show("E(2322)", reduction.error_budget_E(2322))
    show("E(2329)", reduction.error_budget_E(2329))
    show("E closed form ratio (3,4), a=1/2",
         laurent.eval_E(Fraction(1, 2), 3, 4, Fraction(1, 10)) / laurent.e_bound_closed_form(
             Fraction(1, 2), 3, 4, Fraction(1, 10)))


if __name__ == "__main__":
    main()
