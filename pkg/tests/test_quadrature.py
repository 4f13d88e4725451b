import random

import mpmath as mp
import pytest

from hzeta.compositions import Composition, theorem_dual
from hzeta.errors import DomainError
from hzeta.finite_sums import ShiftVector, mhss
from hzeta.precision import PrecisionConfig
from hzeta.quadrature import (
    WeightedIntegrand,
    de_quad,
    int_kta_weighted,
    int_mpl_weighted,
)
from hzeta.series_engine import htmzsv
from hzeta.specfun import gen_binom

PREC = PrecisionConfig(bits=160)
QTOL = mp.mpf(10) ** -16


@pytest.fixture(autouse=True)
def _workprec():
    with mp.workprec(192):
        yield


class TestBetaReproduction:
    def test_twenty_random_beta_integrals(self):
        rng = random.Random(20240817)
        for _ in range(20):
            a = mp.mpf(f"{rng.uniform(0.2, 3.0):.6f}")
            b = mp.mpf(f"{rng.uniform(0.2, 3.0):.6f}")
            f = WeightedIntegrand(x_exp=a - 1, omx_exp=b - 1)
            got = de_quad(f, QTOL, PREC)
            assert abs(got.value - mp.beta(a, b)) < mp.mpf(10) ** -10

    def test_log_weighted_beta(self):
        # d/db at b=1: integral of x^(a-1) log(1-x)
        a = mp.mpf("1.5")
        f = WeightedIntegrand(x_exp=a - 1, logomx_pow=1)
        got = de_quad(f, QTOL, PREC)
        h = mp.mpf("1e-20")
        ref = mp.diff(lambda b: mp.beta(a, b), mp.mpf(1), 1, h=h,
                      method="step")
        assert abs(got.value - ref) < mp.mpf(10) ** -10


class TestConvergence:
    def test_level_deltas_shrink(self):
        # the reported error bound is far smaller than the first deltas
        f = WeightedIntegrand(x_exp=mp.mpf("-0.5"))
        got = de_quad(f, QTOL, PREC)
        assert got.abs_error < mp.mpf(10) ** -15
        assert abs(got.value - 2) < mp.mpf(10) ** -15

    def test_non_integrable_rejected(self):
        f = WeightedIntegrand(x_exp=mp.mpf(-1))
        with pytest.raises(DomainError):
            de_quad(f, QTOL, PREC)


class TestPolylogCores:
    @pytest.mark.parametrize("k", [(1,), (2,), (2, 1)])
    def test_landen_integral_equals_star_value(self, k):
        # integral of Li_k(x/(x-1))/x = (-1)^dep zeta*(raised dual)
        k = Composition(k)
        got = int_mpl_weighted(k, 1, 0, 0, 0, QTOL, PREC, core="mpl_landen")
        ref = htmzsv(theorem_dual(k), None, QTOL, None, PREC)
        sign = -1 if k.depth() % 2 else 1
        assert abs(got.value - sign * ref.value) < mp.mpf(10) ** -6

    def test_monomial_core_beta_derivative(self):
        # integral x^(n-1) log^kk(1-x) (1-x)^(-alpha) against the exact
        # finite star sum at (n, kk, alpha) = (3, 2, 1/3)
        n, kk = 3, 2
        alpha = mp.mpf(1) / 3
        f = WeightedIntegrand(core=("monomial", n), omx_exp=-alpha,
                              logomx_pow=kk)
        got = de_quad(f, QTOL, PREC)
        star = mhss(n, (1, 1), 1 - alpha, PREC)
        ref = mp.factorial(kk) * star / (n * gen_binom(n - alpha, n))
        assert abs(got.value - ref) < mp.mpf(10) ** -10

    def test_mpl_core_dilog(self):
        # integral Li_2(x)/x = zeta(3)
        got = int_mpl_weighted((2,), 1, 0, 0, 0, QTOL, PREC)
        assert abs(got.value - mp.zeta(3)) < mp.mpf(10) ** -12

    def test_kta_frame_depth1(self):
        # integral A(2; x)/x dx equals the weight-3 T-value of the
        # raised dual index
        got = int_kta_weighted((2,), 0, 0, QTOL, PREC)
        from hzeta.series_engine import arakawa_kaneko
        ref = arakawa_kaneko("psi", 1, (2,), QTOL, None, PREC)
        assert abs(got.value - ref.value) < mp.mpf(10) ** -10
