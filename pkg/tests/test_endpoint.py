import mpmath as mp
import pytest

from hzeta.endpoint import kta_endpoint, mpl_endpoint
from hzeta.precision import PrecisionConfig
from hzeta.series_engine import kta, mpl

PREC = PrecisionConfig(bits=192)
TOL = mp.mpf(10) ** -30


@pytest.fixture(autouse=True)
def _workprec():
    with mp.workprec(224):
        yield


@pytest.mark.parametrize("k", [(1,), (2,), (1, 1), (2, 1), (2, 2), (2, 1, 1)])
@pytest.mark.parametrize("u", ["0.25", "0.1", "0.01"])
def test_mpl_endpoint_matches_series(k, u):
    u = mp.mpf(u)
    f = mpl_endpoint(k, PREC)
    direct = mpl(k, 1 - u, TOL, None, PREC)
    assert abs(f(u) - direct.value) < mp.mpf(10) ** -25


def test_mpl_endpoint_log_singularity():
    # Li_1(1 - u) = -log u exactly
    f = mpl_endpoint((1,), PREC)
    u = mp.mpf("1e-12")
    assert abs(f(u) + mp.log(u)) < mp.mpf(10) ** -25


def test_mpl_endpoint_limit_value():
    # Li_2 tends to zeta(2) at the endpoint
    f = mpl_endpoint((2,), PREC)
    assert abs(f(mp.mpf("1e-30")) - mp.zeta(2)) < mp.mpf(10) ** -25


@pytest.mark.parametrize("k", [(1,), (2,), (2, 1)])
@pytest.mark.parametrize("u", ["0.25", "0.05"])
def test_kta_endpoint_matches_series(k, u):
    u = mp.mpf(u)
    x = (1 - u) / (1 + u)
    f = kta_endpoint(k, PREC)
    direct = kta(k, x, TOL, None, PREC)
    assert abs(f(u) - direct.value) < mp.mpf(10) ** -25


def test_kta_endpoint_tiny_u():
    # A(2; x) tends to T(2) = pi^2/4 as x -> 1 (u -> 0)
    f = kta_endpoint((2,), PREC)
    assert abs(f(mp.mpf("1e-25")) - mp.pi ** 2 / 4) < mp.mpf(10) ** -22
