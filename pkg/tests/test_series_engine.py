import mpmath as mp
import pytest
from hypothesis import given, settings, strategies as st

from hzeta.compositions import Composition, contractions, ones
from hzeta.errors import DomainError, NonAdmissible
from hzeta.finite_sums import ShiftVector
from hzeta.precision import PrecisionConfig
from hzeta.series_engine import (
    ValueWithBound,
    apery_I,
    apery_II,
    apery_III,
    arakawa_kaneko,
    htmtv,
    htmzsv,
    htmzv,
    htmzv_pbc,
    kta,
    mpl,
    mpl_landen,
    param_euler_pow,
    param_euler_sum,
    term_spec,
    weighted_sum,
)
from hzeta.specfun import beta, digamma, euler_gamma

PREC = PrecisionConfig(bits=192)
TOL = mp.mpf(10) ** -24


def close(v, ref, tol=mp.mpf(10) ** -20):
    return abs(v.value - ref) <= tol + v.abs_error


@pytest.fixture(autouse=True)
def _workprec():
    with mp.workprec(224):
        yield


class TestDepthOne:
    def test_zeta_2(self):
        assert close(htmzv((2,), None, TOL, None, PREC), mp.zeta(2))

    @pytest.mark.parametrize("s", [2, 3, 4])
    @pytest.mark.parametrize("a", ["1", "0.5", "0.7"])
    def test_hurwitz_consistency(self, s, a):
        a = mp.mpf(a)
        v = htmzv((s,), a, TOL, None, PREC)
        assert close(v, mp.zeta(s, a))

    def test_t_value(self):
        # T(2) = pi^2 / 4
        v = htmtv((2,), 1, TOL, None, PREC)
        assert close(v, mp.pi ** 2 / 4)


class TestNested:
    def test_zeta_21_equals_zeta_3(self):
        v = htmzv((2, 1), None, TOL, None, PREC)
        assert close(v, mp.zeta(3))

    def test_star_22(self):
        # zeta*(2,2) = 7 pi^4 / 360
        v = htmzsv((2, 2), None, TOL, None, PREC)
        assert close(v, 7 * mp.pi ** 4 / 360)

    @pytest.mark.parametrize("k", [(2,), (2, 1), (3, 1), (2, 1, 1)])
    def test_star_equals_contraction_sum(self, k):
        star = htmzsv(k, None, TOL, None, PREC)
        total = mp.mpf(0)
        for part in contractions(Composition(k)):
            total += htmzv(part, None, TOL, None, PREC).value
        assert abs(star.value - total) < mp.mpf(10) ** -10

    def test_vector_shift(self):
        # depth-2 with distinct shifts vs a slow double sum
        a = ShiftVector((mp.mpf("1.25"), mp.mpf("0.75")))
        v = htmzv((3, 2), a, TOL, None, PREC)
        brute = mp.mpf(0)
        for n1 in range(2, 400):
            inner = mp.fsum((n2 - mp.mpf("0.25")) ** -2
                            for n2 in range(1, n1))
            brute += inner / (n1 + mp.mpf("0.25")) ** 3
        assert abs(v.value - brute) < mp.mpf(10) ** -5

    def test_non_admissible_rejected(self):
        with pytest.raises((NonAdmissible, DomainError)):
            htmzv((1, 2), None, TOL, None, PREC)


class TestTBridge:
    def test_t_21_bridge(self):
        # cross-check against the parity-constrained double sum
        # 4 sum_{even n1 > odd n2} n1^-2 n2^-1
        v = htmtv((2, 1), 1, TOL, None, PREC)
        brute = mp.mpf(0)
        inner = mp.mpf(0)
        for m in range(1, 20000):
            inner += mp.mpf(1) / (2 * m - 1)
            brute += 4 * inner / mp.mpf(2 * m) ** 2
        # the direct sum carries a log-weighted 1/N truncation tail
        assert abs(v.value - brute) < mp.mpf(10) ** -3


class TestPolylogs:
    def test_mpl_log(self):
        v = mpl((1,), mp.mpf("0.5"), TOL, None, PREC)
        assert close(v, mp.log(2))

    def test_mpl_ones_closed_form(self):
        x = mp.mpf("0.3")
        v = mpl((1, 1, 1), x, TOL, None, PREC)
        assert close(v, -mp.log(1 - x) ** 3 / 6)

    def test_mpl_dilog(self):
        x = mp.mpf("0.7")
        assert close(mpl((2,), x, TOL, None, PREC), mp.polylog(2, x))

    @pytest.mark.parametrize("k", [(1,), (2,), (1, 1), (2, 1)])
    @pytest.mark.parametrize("x", ["0.2", "0.45"])
    def test_landen(self, k, x):
        x = mp.mpf(x)
        v = mpl_landen(k, x, TOL, None, PREC)
        if len(k) == 1:
            ref = mp.polylog(k[0], x / (x - 1))
            assert abs(v.value - ref) < mp.mpf(10) ** -12

    def test_kta_at_one_is_t(self):
        v = kta((2, 1), 1, TOL, None, PREC)
        ref = htmtv((2, 1), 1, TOL, None, PREC)
        assert abs(v.value - ref.value) < mp.mpf(10) ** -12


class TestAperyFamilies:
    def test_apery_I_pi4(self):
        # sum zeta*_n(1; 1) / (n^3 C(2n,n)/..) at alpha=0 collapses to
        # the classical pi^4/72 evaluation
        v = apery_I((2,), 1, 0, TOL, None, PREC)
        assert close(v, mp.pi ** 4 / 72)

    def test_central_binomial_log(self):
        # sum C(2n,n) / (n 4^n) = 2 log 2 after the half-shift binomial
        half = mp.mpf("0.5")
        v = apery_II(0, None, 1, half, TOL, None, PREC)
        assert close(v, 2 * mp.log(2))

    def test_central_binomial_square(self):
        half = mp.mpf("0.5")
        v = apery_II(0, None, 2, half, TOL, None, PREC)
        assert close(v, mp.pi ** 2 / 6 - 2 * mp.log(2) ** 2)

    @pytest.mark.parametrize("eps", ["1e-4", "1e-5", "1e-6"])
    def test_apery_II_small_alpha_limit(self, eps):
        # binom(n+a-1, n) zeta_n(1; a) -> 1/n as a -> 0, so the sum
        # tends to zeta(4) with a defect linear in alpha
        alpha = mp.mpf(eps)
        v = apery_II(1, None, 3, alpha, TOL, None, PREC)
        assert abs(v.value - mp.zeta(4)) < 10 * alpha

    def test_apery_III_reduces(self):
        # beta = 0 removes the lower binomial
        v = apery_III(None, None, 1, mp.mpf("0.3"), 0, TOL, None, PREC)
        w = apery_II(0, None, 3, mp.mpf("0.3"), TOL, None, PREC)
        assert abs(v.value - w.value) < mp.mpf(10) ** -20


class TestEulerSums:
    def test_param_euler_sum_harmonic(self):
        alpha = mp.mpf("0.3")
        v = param_euler_sum(1, 0, alpha, TOL, None, PREC)
        g = euler_gamma(PREC)
        ref = (mp.zeta(2) - mp.zeta(2, 1 + alpha)) / (2 * alpha) \
            + (digamma(1 + alpha, PREC) + g) ** 2 / (2 * alpha)
        assert close(v, ref)

    def test_param_euler_pow_classical(self):
        # sum zeta_{n-1}(1)/n^2 = zeta(3)
        v = param_euler_pow(1, 1, 0, TOL, None, PREC)
        assert close(v, mp.zeta(3))


class TestArakawaKaneko:
    def test_xi_1(self):
        # xi(1; k) is the plain zeta value of the raised dual
        v = arakawa_kaneko("xi", 1, (2,), TOL, None, PREC)
        assert close(v, mp.zeta(3))

    def test_xi_2_depth1(self):
        v = arakawa_kaneko("xi", 2, (1,), TOL, None, PREC)
        # sum over j with |j| = 1 on base (2): 2 zeta(3)
        assert close(v, 2 * mp.zeta(3))


class TestPbc:
    def test_beta_value(self):
        a = mp.mpf(1) / 3
        b = mp.mpf(1) / 4
        v = htmzv_pbc(a, (1,), 1 - b, TOL, None, PREC)
        assert close(v, beta(1 - a, 1 - b, PREC))

    def test_alpha_zero_collapse(self):
        # alpha = 0 leaves only n_r = 1, so depth-2 collapses to a
        # shifted depth-1 tail over the outer index
        shift = mp.mpf("0.6")
        v = htmzv_pbc(0, (2, 1), shift, TOL, None, PREC)
        ref = mp.zeta(2, 1 + shift) / shift
        assert close(v, ref)

    def test_closed_form_depth2(self):
        # zeta^(a)(2; 1-b) = -B(1-a,1-b) (psi(1-b) - psi(2-a-b))
        a = mp.mpf("0.3")
        b = mp.mpf("0.25")
        v = htmzv_pbc(a, (2,), 1 - b, TOL, None, PREC)
        ref = -beta(1 - a, 1 - b, PREC) \
            * (digamma(1 - b, PREC) - digamma(2 - a - b, PREC))
        assert close(v, ref)


class TestErrorModel:
    def test_precision_monotone(self):
        lo = htmzv((2, 1), None, mp.mpf(10) ** -10, None,
                   PrecisionConfig(bits=128))
        hi = htmzv((2, 1), None, mp.mpf(10) ** -30, None,
                   PrecisionConfig(bits=256))
        assert hi.abs_error < lo.abs_error
        assert abs(lo.value - hi.value) <= lo.abs_error + hi.abs_error \
            + mp.mpf(10) ** -10

    def test_bound_arithmetic(self):
        a = ValueWithBound(mp.mpf(2), mp.mpf("1e-20"), True)
        b = ValueWithBound(mp.mpf(3), mp.mpf("1e-21"), True)
        s = a + b
        p = a * b
        assert s.value == 5 and p.value == 6
        assert s.abs_error >= mp.mpf("1e-20")
        assert p.abs_error >= 3 * mp.mpf("1e-20")


@settings(max_examples=20, deadline=None)
@given(st.integers(2, 5), st.sampled_from(["1", "0.5", "0.7"]))
def test_depth_one_property(s, a):
    a = mp.mpf(a)
    v = htmzv((s,), a, TOL, None, PREC)
    with mp.workprec(224):
        assert abs(v.value - mp.zeta(s, a)) < mp.mpf(10) ** -20


@settings(max_examples=12, deadline=None)
@given(st.sampled_from([(2,), (3,), (2, 1), (2, 2), (3, 1)]))
def test_star_contraction_property(k):
    star = htmzsv(k, None, TOL, None, PREC)
    total = mp.mpf(0)
    for part in contractions(Composition(k)):
        total += htmzv(part, None, TOL, None, PREC).value
    assert abs(star.value - total) < mp.mpf(10) ** -10
