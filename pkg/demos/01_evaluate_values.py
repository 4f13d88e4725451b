"""Evaluate a few flagship constants with the series engine.

Run:  python3 demos/01_evaluate_values.py
"""

import mpmath as mp

from hzeta.finite_sums import ShiftVector
from hzeta.precision import PrecisionConfig
from hzeta.series_engine import apery_I, htmzv, htmzsv, htmtv, kta, mpl

PREC = PrecisionConfig(bits=256)
TOL = mp.mpf(10) ** -40


def show(label, got, ref=None):
    with mp.workprec(PREC.bits):
        line = f"{label:44s} = {mp.nstr(got.value, 30)}"
        if ref is not None:
            line += f"   |err vs closed form| = {mp.nstr(abs(got.value - ref), 3)}"
        print(line)


def main():
    with mp.workprec(PREC.bits + 32):
        show("zeta(2,1)", htmzv((2, 1), None, TOL, None, PREC), mp.zeta(3))
        show("zeta*(2,2)", htmzsv((2, 2), None, TOL, None, PREC),
             7 * mp.pi ** 4 / 360)
        show("zeta(2; shift 1/3)  [Hurwitz]",
             htmzv((2,), mp.mpf(1) / 3, TOL, None, PREC),
             mp.zeta(2, mp.mpf(1) / 3))
        show("zeta(3,1; shifts (0.25, 0.75))",
             htmzv((3, 1), ShiftVector((mp.mpf("0.25"), mp.mpf("0.75"))),
                   TOL, None, PREC))
        show("T(2)  [odd-slot double-parity value]",
             htmtv((2,), 1, TOL, None, PREC), mp.pi ** 2 / 4)
        show("T(2,1)", htmtv((2, 1), 1, TOL, None, PREC))
        show("Li_{2,1}(1/2)", mpl((2, 1), mp.mpf("0.5"), TOL, None, PREC))
        show("A(2,1; 0.9)  [level-two polylog frame]",
             kta((2, 1), mp.mpf("0.9"), TOL, None, PREC))
        show("sum 4^n/(n^3 binom(2n,n))  [central binomial]",
             apery_I((2,), 0, mp.mpf("0.5"), TOL, None, PREC))


if __name__ == "__main__":
    main()
