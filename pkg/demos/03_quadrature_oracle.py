"""Cross-check the series engine against the quadrature oracle.

The weighted polylogarithm integral

    integral_0^1 Li_{2,2}(x) log(1-x) / (x (1-x)^alpha) dx

equals a three-term combination of shifted multiple zeta values with
shift 1 - alpha.  Both sides are computed independently here.

Run:  python3 demos/03_quadrature_oracle.py
"""

import mpmath as mp

from hzeta.precision import PrecisionConfig
from hzeta.quadrature import WeightedIntegrand, de_quad
from hzeta.series_engine import htmzv

PREC = PrecisionConfig(bits=192)


def main():
    with mp.workprec(PREC.bits + 32):
        alpha = mp.mpf(1) / 4
        shift = 1 - alpha

        f = WeightedIntegrand(core=("mpl", (2, 2)), x_exp=-1,
                              omx_exp=-alpha, logomx_pow=1)
        lhs = de_quad(f, mp.mpf(10) ** -30, PREC)

        tol = mp.mpf(10) ** -30
        rhs = (-2 * htmzv((3, 2, 1), shift, tol, None, PREC).value
               - 2 * htmzv((2, 3, 1), shift, tol, None, PREC).value
               - htmzv((2, 2, 2), shift, tol, None, PREC).value)

        print("alpha                =", mp.nstr(alpha, 10))
        print("quadrature (LHS)     =", mp.nstr(lhs.value, 40))
        print("series engine (RHS)  =", mp.nstr(rhs, 40))
        print("residual             =", mp.nstr(abs(lhs.value - rhs), 3))
        print("quadrature bound     =", mp.nstr(lhs.abs_error, 3))


if __name__ == "__main__":
    main()
