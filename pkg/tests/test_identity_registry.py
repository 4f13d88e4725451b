import mpmath as mp
import pytest

from hzeta.errors import UnknownIdentity
from hzeta.identity_registry import (
    identity_ids,
    run_check,
    run_suite,
)
from hzeta.precision import PrecisionConfig

PREC = PrecisionConfig(bits=160)
TOL = "1e-8"

REQUIRED_IDS = [
    "thm-2.1a", "thm-2.1b", "thm-2.2", "cor-2.3-xi", "cor-2.3-psi",
    "eq-eta", "thm-3.1", "thm-3.2", "thm-3.4", "thm-3.5", "thm-3.6a",
    "thm-3.6b", "eq-harmonic-N", "conj-3.7", "thm-4.2", "thm-4.3",
    "thm-4.4", "eq-4.4-limit", "thm-5.2", "cor-5.3", "thm-5.4",
    "cor-5.5", "cor-5.6", "thm-5.7", "thm-5.8", "cor-5.9", "cor-5.10",
    "cor-5.11", "thm-6.1-zeta", "thm-6.1-T", "cor-6.2", "eq-7-ideas-4",
    "eq-7-ideas-5", "eq-7-ideas-6", "eq-7-depth1", "thm-7.2", "cor-7.3",
    "cor-7.4", "thm-7.5",
]


def test_registry_covers_required_ids():
    ids = set(identity_ids())
    missing = [i for i in REQUIRED_IDS if i not in ids]
    assert not missing, f"missing required identities: {missing}"
    for n in range(1, 5):
        assert f"thm-3.4-display-{n}" in ids
    for n in range(1, 8):
        assert f"thm-3.6-display-{n}" in ids


def test_unknown_identity():
    with pytest.raises(UnknownIdentity):
        run_check("nope-0.0", None, TOL, PREC)


def test_run_check_thm_34():
    c = run_check("thm-3.4", {"k": (2,), "kk": 1, "alpha": "1/4"},
                  TOL, PREC)
    assert c.passed
    assert c.residual < mp.mpf(TOL)


def test_run_check_thm_61():
    c = run_check("thm-6.1-zeta", {"p": 2, "q": 1, "m": 2}, TOL, PREC)
    assert c.passed


def test_run_check_ideas_five_tight():
    c = run_check("eq-7-ideas-5", {"alpha": "1/3", "beta": "1/4"},
                  "1e-10", PREC)
    assert c.passed


def test_cor_53_parameter_sweep():
    for m in range(0, 4):
        c = run_check("cor-5.3", {"m": m}, TOL, PREC)
        assert c.passed, f"m={m}: residual {c.residual}"
        if m % 2 == 1:
            # odd m: the zeta term carries the vanishing parity factor
            assert abs(c.lhs.value) < mp.mpf(TOL)


def test_suite_filter_and_determinism():
    r1 = run_suite("thm-3.6*", 1, TOL, seed=7, prec=PREC)
    r2 = run_suite("thm-3.6*", 1, TOL, seed=7, prec=PREC)
    assert r1.all_passed
    assert r1.table() == r2.table()
    assert [c.params for c in r1.checks] == [c.params for c in r2.checks]


def test_suite_seed_changes_samples():
    r1 = run_suite("thm-3.4", 3, TOL, seed=1, prec=PREC)
    r2 = run_suite("thm-3.4", 3, TOL, seed=2, prec=PREC)
    assert r1.all_passed and r2.all_passed
    assert [c.params for c in r1.checks] != [c.params for c in r2.checks]


def test_suite_no_match():
    with pytest.raises(UnknownIdentity):
        run_suite("nope-*", 1, TOL, seed=0, prec=PREC)


def test_records_shape():
    r = run_suite("cor-5.3", 1, TOL, seed=0, prec=PREC)
    rec = r.to_records()[0]
    for field in ("id", "params", "lhs", "rhs", "residual", "tol",
                  "passed", "elapsed"):
        assert field in rec
    assert rec["id"] == "cor-5.3"
    assert rec["passed"] is True
