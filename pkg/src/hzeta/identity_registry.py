"""Registry of numerically verifiable identities between the series
families and their integral or closed-form counterparts.

Each entry evaluates both sides of one identity by independent routes
(nested-series engine on one side, tanh-sinh quadrature, finite sums,
gamma/polygamma closed forms or a structurally different series on the
other) and reports the residual.  A check passes when

    |lhs - rhs| <= tol + lhs.abs_error + rhs.abs_error.

Identity ids are stable strings such as ``"thm-2.1a"``; ``run_suite``
draws parameters deterministically from a seeded generator, so a report
is reproducible given (filter, samples, tol, seed).
"""

from __future__ import annotations

import fnmatch
import random
import time
from dataclasses import dataclass
from typing import Callable

import mpmath as mp

from . import quadrature as quad
from . import series_engine as se
from . import specfun as sf
from .compositions import (
    Composition,
    binom_weight,
    add as index_add,
    hoffman_dual,
    ones,
    theorem_dual,
    weak_compositions,
)
from .errors import DomainError, UnknownIdentity
from .finite_sums import ShiftVector, mhss
from .precision import PrecisionConfig, working
from .series_engine import ValueWithBound, term_spec, weighted_sum

DEFAULT_TOL = "1e-8"


def _num(s):
    """Parse a numeric parameter; fraction strings like "1/3" allowed."""
    if isinstance(s, str) and "/" in s:
        p, q = s.split("/")
        return mp.mpf(p) / mp.mpf(q)
    return mp.mpf(s)


def _closed(x) -> ValueWithBound:
    """Wrap a closed-form value, charging a few ulps of roundoff."""
    x = mp.mpf(x)
    return ValueWithBound(x, mp.ldexp(abs(x) + 1, -mp.mp.prec + 8), False)


def _fac(n: int):
    return mp.factorial(n)


def _binom(a, b) -> mp.mpf:
    return sf.gen_binom(a, b)


@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of evaluating one identity at one parameter point."""

    id: str
    params: dict
    lhs: ValueWithBound
    rhs: ValueWithBound
    residual: mp.mpf
    tol: mp.mpf
    passed: bool
    elapsed: float

    def record(self) -> dict:
        return {
            "id": self.id,
            "params": {k: str(v) for k, v in sorted(self.params.items())},
            "lhs": mp.nstr(self.lhs.value, 24),
            "rhs": mp.nstr(self.rhs.value, 24),
            "residual": mp.nstr(self.residual, 6),
            "tol": mp.nstr(self.tol, 6),
            "passed": self.passed,
            "elapsed": round(self.elapsed, 3),
        }


@dataclass(frozen=True)
class SuiteReport:
    """Deterministic report for a filtered run over the registry."""

    checks: tuple
    tol: str
    seed: int
    samples: int

    @property
    def n_passed(self) -> int:
        return sum(1 for c in self.checks if c.passed)

    @property
    def n_failed(self) -> int:
        return len(self.checks) - self.n_passed

    @property
    def all_passed(self) -> bool:
        return self.n_failed == 0

    def to_records(self) -> list:
        return [c.record() for c in self.checks]

    def table(self) -> str:
        """Aligned plain-text table; excludes timings so that repeated
        runs with the same seed produce identical bytes."""
        rows = [("id", "params", "residual", "tol", "status")]
        for c in self.checks:
            ps = ",".join(f"{k}={v}" for k, v in sorted(c.params.items()))
            rows.append((
                c.id,
                ps,
                mp.nstr(c.residual, 4),
                mp.nstr(c.tol, 4),
                "pass" if c.passed else "FAIL",
            ))
        widths = [max(len(r[i]) for r in rows) for i in range(5)]
        lines = [
            "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
            for row in rows
        ]
        lines.append(f"{self.n_passed} passed, {self.n_failed} failed "
                     f"(tol={self.tol}, seed={self.seed}, "
                     f"samples={self.samples})")
        return "\n".join(lines)


class _Identity:
    def __init__(self, id: str, evaluate: Callable, sample: Callable,
                 default: dict):
        self.id = id
        self.evaluate = evaluate
        self.sample = sample
        self.default = default


_REGISTRY: dict = {}


def _register(id: str, evaluate, sample, default):
    _REGISTRY[id] = _Identity(id, evaluate, sample, default)


def identity_ids() -> list:
    return sorted(_REGISTRY)


# ---------------------------------------------------------------------------
# shared evaluation helpers

def _zeta(idx, shift=1, tol=None, prec=None) -> ValueWithBound:
    """Multiple zeta value with a constant (or vector) denominator shift."""
    idx = Composition(idx)
    if idx.is_empty():
        return ValueWithBound(1, 0, True)
    if isinstance(shift, ShiftVector):
        a = shift
    else:
        a = ShiftVector.constant(_num(shift), idx.depth())
    return se.htmzv(idx, a, tol, None, prec)


def _zeta_star(idx, shift=1, tol=None, prec=None) -> ValueWithBound:
    idx = Composition(idx)
    if idx.is_empty():
        return ValueWithBound(1, 0, True)
    a = ShiftVector.constant(_num(shift), idx.depth())
    return se.htmzsv(idx, a, tol, None, prec)


def _tee(idx, alpha=1, tol=None, prec=None) -> ValueWithBound:
    return se.htmtv(Composition(idx), _num(alpha), tol, None, prec)


def _t_value(idx, tol=None, prec=None) -> ValueWithBound:
    """Odd-denominator multiple t-value 2^-|k| zeta(k; 1/2)."""
    idx = Composition(idx)
    v = _zeta(idx, mp.mpf("0.5"), tol, prec)
    return v * mp.ldexp(1, -idx.weight())


def _bsum(k, kk: int, shift, zfun, tol, prec) -> ValueWithBound:
    """sum over |j| = kk of B(b; j) Z(b + j; shift) with b the
    raised-dual index of k and Z supplied by ``zfun``."""
    base = theorem_dual(Composition(k))
    jlist = list(weak_compositions(kk, base.depth()))
    weights = [binom_weight(base, j) for j in jlist]
    sub = tol / (2 * sum(weights))
    total = ValueWithBound(0, 0, True)
    for j, w in zip(jlist, weights):
        total = total + zfun(index_add(base, j), shift, sub, prec) * w
    return total


def _product_rhs(mvec, k: int, shift, tol, prec) -> ValueWithBound:
    """sum over weak compositions i of k into depth(m) parts of
    prod C(m_j + i_j - 1, i_j) zeta(m_p + i_p, ..., m_1 + i_1; shift)."""
    mvec = tuple(mvec)
    p = len(mvec)
    terms = []
    for i in weak_compositions(k, p):
        w = mp.mpf(1)
        for mj, ij in zip(mvec, i.parts):
            w *= _binom(mj + ij - 1, ij)
        idx = tuple(mvec[j] + i[j] for j in reversed(range(p)))
        terms.append((w, idx))
    wsum = mp.fsum(abs(w) for w, _ in terms) + 1
    sub = tol / (2 * wsum)
    total = ValueWithBound(0, 0, True)
    for w, idx in terms:
        total = total + _zeta(idx, shift, sub, prec) * w
    return total


def _level_partitions(p: int):
    """All (c_1, ..., c_p) with nonnegative entries and sum j c_j = p."""
    def rec(j, remaining, acc):
        if j > p:
            if remaining == 0:
                yield tuple(acc)
            return
        top = remaining // j
        for c in range(top + 1):
            yield from rec(j + 1, remaining - j * c, acc + [c])
    yield from rec(1, p, [])


def _partition_rhs(m: int, p: int, k: int, shift, tol, prec) -> ValueWithBound:
    """Symmetric-function expansion of (1/k!) d^k/da^k zeta({m}_p; s)
    in depth-one values zeta(im + j; s)."""
    zc = {}

    def zv(s):
        if s not in zc:
            zc[s] = _zeta((s,), shift, tol / 64, prec)
        return zc[s]

    total = ValueWithBound(0, 0, True)
    for c in _level_partitions(p):
        pref = mp.mpf(1)
        for j, cj in enumerate(c, start=1):
            pref *= mp.mpf(-1) ** ((j - 1) * cj) / (_fac(cj) * mp.mpf(j) ** cj)
        levels = []
        for j, cj in enumerate(c, start=1):
            levels.extend([j] * cj)
        q = len(levels)
        for kvec in weak_compositions(k, q):
            term = ValueWithBound(pref, 0, True)
            for lev, kj in zip(levels, kvec.parts):
                term = term * (zv(lev * m + kj) * _binom(lev * m - 1 + kj, kj))
            total = total + term
    return total


def _pbc_deriv(order: int, beta, k, shift, tol, prec) -> mp.mpf:
    """order-th derivative in the binomial parameter of the nested sum
    with a parametric binomial coefficient, by central differences."""
    with working(prec) as cfg:
        if order == 0:
            return se.htmzv_pbc(beta, k, shift, tol, None, prec).value
        sub = mp.ldexp(1, -min(cfg.work_bits - 60, 400))
        h = mp.ldexp(1, -cfg.work_bits // 6)
        f = lambda b: se.htmzv_pbc(b, k, shift, sub, None, prec).value
        return mp.diff(f, _num(beta), order, h=h, method="step")


def _series_in_x(spec, x, tol, prec, extra=0) -> ValueWithBound:
    """sum_n a_n x^n for a TermSpec sequence a_n, with a geometric
    heuristic tail bound; ``extra`` is added to the total (n = 0 term)."""
    with working(prec):
        x = _num(x)
        if not 0 < x < 1:
            raise DomainError(f"x must lie in (0, 1), got {x}")
        state = se._SpecState(spec, prec)
        total = mp.mpf(extra)
        xn = mp.mpf(1)
        n = 0
        while True:
            n += 1
            xn *= x
            t = state.step(n) * xn
            total += t
            if n >= 40 and n % 8 == 0:
                tail = abs(t) * 2 * x / (1 - x)
                if tail <= tol:
                    return ValueWithBound(total, tail + tol / 4, False)
            if n > 2_000_000:
                raise DomainError("series in x did not reach tolerance")


# ---------------------------------------------------------------------------
# samplers

_ALPHAS = ["0.25", "0.3", "0.4", "0.6", "0.7"]
_SMALL_ALPHAS = ["0.15", "0.25", "0.35", "0.45"]
_INDICES = [(2,), (3,), (2, 1), (2, 2), (3, 1), (2, 1, 1)]
_SHORT_INDICES = [(2,), (2, 1), (1, 2), (2, 2)]


def _pick(rng, pool):
    return pool[rng.randrange(len(pool))]


# ---------------------------------------------------------------------------
# section 2: weighted integrals of polylogarithm cores

def _eval_thm_21a(p, tol, prec):
    k = tuple(p["k"])
    kk = int(p["log_pow"])
    alpha = _num(p["alpha"])
    lhs = quad.int_mpl_weighted(k, 1, alpha, 0, kk, tol / 16, prec)
    sign = mp.mpf(-1) ** kk * _fac(kk)
    rhs = _bsum(k, kk, 1 - alpha, _zeta, tol / 8, prec) * sign
    return lhs, rhs


_register(
    "thm-2.1a",
    _eval_thm_21a,
    lambda rng: {"k": _pick(rng, [(2,), (2, 2), (2, 1)]),
                 "log_pow": rng.randrange(3),
                 "alpha": _pick(rng, _ALPHAS)},
    {"k": (2, 2), "log_pow": 1, "alpha": "0.25"},
)


def _eval_thm_21b(p, tol, prec):
    k = tuple(p["k"])
    kk = int(p["log_pow"])
    alpha = _num(p["alpha"])
    lhs = quad.int_kta_weighted(k, alpha, kk, tol / 16, prec)
    sign = mp.mpf(-1) ** kk * _fac(kk)
    zfun = lambda idx, s, t, pr: _tee(idx, s, t, pr)
    rhs = _bsum(k, kk, 1 - alpha, zfun, tol / 8, prec) * sign
    return lhs, rhs


_register(
    "thm-2.1b",
    _eval_thm_21b,
    lambda rng: {"k": _pick(rng, [(2,), (2, 1), (1, 2)]),
                 "log_pow": rng.randrange(2),
                 "alpha": _pick(rng, _ALPHAS)},
    {"k": (2,), "log_pow": 1, "alpha": "0.3"},
)


def _eval_thm_22(p, tol, prec):
    k = Composition(tuple(p["k"]))
    alpha = _num(p["alpha"])
    lhs = quad.int_mpl_weighted(k, 1, alpha, 0, 0, tol / 16, prec,
                                core="mpl_landen")
    sign = mp.mpf(-1) ** k.depth()
    rhs = _zeta_star(theorem_dual(k), 1 - alpha, tol / 8, prec) * sign
    return lhs, rhs


_register(
    "thm-2.2",
    _eval_thm_22,
    lambda rng: {"k": _pick(rng, [(1,), (2,), (1, 1), (2, 1)]),
                 "alpha": _pick(rng, _ALPHAS)},
    {"k": (2, 1), "alpha": "0.3"},
)


def _eval_cor_23_xi(p, tol, prec):
    k = tuple(p["k"])
    s = int(p["s"])
    kk = s - 1
    lhs = se.arakawa_kaneko("xi", s, k, tol / 8, None, prec)
    sign = mp.mpf(-1) ** kk / _fac(kk)
    rhs = quad.int_mpl_weighted(k, 1, 0, 0, kk, tol / 16, prec) * sign
    return lhs, rhs


_register(
    "cor-2.3-xi",
    _eval_cor_23_xi,
    lambda rng: {"k": _pick(rng, [(1,), (2,), (2, 1), (1, 2)]),
                 "s": 1 + rng.randrange(3)},
    {"k": (2, 1), "s": 2},
)


def _eval_cor_23_psi(p, tol, prec):
    k = tuple(p["k"])
    s = int(p["s"])
    kk = s - 1
    lhs = se.arakawa_kaneko("psi", s, k, tol / 8, None, prec)
    sign = mp.mpf(-1) ** kk / _fac(kk)
    rhs = quad.int_kta_weighted(k, 0, kk, tol / 16, prec) * sign
    return lhs, rhs


_register(
    "cor-2.3-psi",
    _eval_cor_23_psi,
    lambda rng: {"k": _pick(rng, [(1,), (2,), (2, 1)]),
                 "s": 1 + rng.randrange(3)},
    {"k": (2,), "s": 2},
)


def _eval_eq_eta(p, tol, prec):
    k = tuple(p["k"])
    s = int(p["s"])
    kk = s - 1
    lhs = se.arakawa_kaneko("eta", s, k, tol / 8, None, prec)
    sign = mp.mpf(-1) ** (kk - 1) / _fac(kk)
    rhs = quad.int_mpl_weighted(k, 1, 0, 0, kk, tol / 16, prec,
                                core="mpl_landen") * sign
    return lhs, rhs


_register(
    "eq-eta",
    _eval_eq_eta,
    lambda rng: {"k": _pick(rng, [(1,), (2,), (2, 1)]),
                 "s": 1 + rng.randrange(3)},
    {"k": (2,), "s": 2},
)


# ---------------------------------------------------------------------------
# section 3: generating functions and one-binomial series

def _eval_thm_31(p, tol, prec):
    with working(prec):
        x = _num(p["x"])
        alpha = _num(p["alpha"])
        kk = int(p["log_pow"])
        v = mp.mpf(-1) ** kk / _fac(kk) * mp.log(1 - x) ** kk \
            / (1 - x) ** alpha
        lhs = _closed(v)
        spec = term_spec(strict=ones(kk), strict_shift=alpha,
                         binom_upper=((alpha, False),))
        rhs = _series_in_x(spec, x, tol / 8, prec,
                           extra=1 if kk == 0 else 0)
        return lhs, rhs


_register(
    "thm-3.1",
    _eval_thm_31,
    lambda rng: {"x": _pick(rng, ["0.2", "0.3", "0.5"]),
                 "alpha": _pick(rng, _ALPHAS),
                 "log_pow": rng.randrange(4)},
    {"x": "0.3", "alpha": "0.4", "log_pow": 2},
)


def _eval_thm_32(p, tol, prec):
    with working(prec):
        n = int(p["n"])
        kk = int(p["log_pow"])
        alpha = _num(p["alpha"])
        f = quad.WeightedIntegrand(core=("monomial", n), omx_exp=-alpha,
                                   logomx_pow=kk)
        lhs = quad.de_quad(f, tol / 16, prec)
        star = mhss(n, ones(kk), 1 - alpha, prec) if kk else mp.mpf(1)
        v = mp.mpf(-1) ** kk * _fac(kk) * star \
            / (n * _binom(n - alpha, n))
        rhs = _closed(v)
        return lhs, rhs


_register(
    "thm-3.2",
    _eval_thm_32,
    lambda rng: {"n": 1 + rng.randrange(5), "log_pow": rng.randrange(4),
                 "alpha": _pick(rng, _ALPHAS)},
    {"n": 3, "log_pow": 2, "alpha": "1/3"},
)


def _eval_thm_34(p, tol, prec):
    k = tuple(p["k"])
    kk = int(p["kk"])
    alpha = _num(p["alpha"])
    lhs = se.apery_I(k, kk, alpha, tol / 8, None, prec)
    rhs = _bsum(k, kk, 1 - alpha, _zeta, tol / 8, prec)
    return lhs, rhs


_register(
    "thm-3.4",
    _eval_thm_34,
    lambda rng: {"k": _pick(rng, _SHORT_INDICES), "kk": rng.randrange(3),
                 "alpha": _pick(rng, _ALPHAS)},
    {"k": (2, 1), "kk": 1, "alpha": "0.3"},
)


_THM34_DISPLAYS = {
    1: ((2,), [((3, 1), 2), ((2, 2), 1)]),
    2: ((2, 1), [((4, 1), 3), ((3, 2), 1)]),
    3: ((1, 2), [((3, 2), 2), ((2, 3), 2)]),
    4: ((2, 2), [((3, 2, 1), 2), ((2, 3, 1), 2), ((2, 2, 2), 1)]),
}


def _eval_thm_34_display(which):
    k, combo = _THM34_DISPLAYS[which]

    def ev(p, tol, prec):
        alpha = _num(p["alpha"])
        lhs = se.apery_I(k, 1, alpha, tol / 8, None, prec)
        rhs = ValueWithBound(0, 0, True)
        for idx, c in combo:
            rhs = rhs + _zeta(idx, 1 - alpha, tol / 16, prec) * c
        return lhs, rhs

    return ev


for _i in range(1, 5):
    _register(
        f"thm-3.4-display-{_i}",
        _eval_thm_34_display(_i),
        (lambda rng: {"alpha": _pick(rng, _ALPHAS)}),
        {"alpha": "0.3"},
    )


def _eval_thm_35(p, tol, prec):
    k = Composition(tuple(p["k"]))
    kk = int(p["kk"])
    alpha = _num(p["alpha"])
    r = k.depth()
    parts = k.parts + (2,)  # the final slot uses exponent 2 by convention
    sub = tol / 64
    total = ValueWithBound(0, 0, True)
    if kk == 0:
        total = total + _zeta((k[0] + 1,) + k.parts[1:], 1, sub, prec)
    for j in range(1, k[0]):
        zf = _zeta((k[0] + 1 - j,) + k.parts[1:], 1, sub, prec)
        sj = se.apery_II(kk, None, j, alpha, sub, None, prec)
        total = total + zf * sj * mp.mpf(-1) ** (j - 1)
    for l in range(1, r + 1):
        sign_l = mp.mpf(-1) ** (sum(parts[:l]) - l)
        for j in range(1, parts[l] if l < r else 2):
            if l < r:
                zf = _zeta((parts[l] + 1 - j,) + parts[l + 1:r], 1, sub, prec)
            else:
                zf = ValueWithBound(1, 0, True)
            star = k.parts[1:l] + (j,)
            tl = se.apery_II(kk, star, k[0], alpha, sub, None, prec)
            total = total + zf * tl * (sign_l * mp.mpf(-1) ** (j - 1))
    rhs = _bsum(k.parts, kk, 1 - alpha, _zeta, tol / 8, prec)
    return total, rhs


_register(
    "thm-3.5",
    _eval_thm_35,
    lambda rng: {"k": _pick(rng, _SHORT_INDICES), "kk": rng.randrange(3),
                 "alpha": _pick(rng, _ALPHAS)},
    {"k": (2, 1), "kk": 1, "alpha": "0.3"},
)


def _eval_thm_36a(p, tol, prec):
    m = int(p["m"])
    alpha = _num(p["alpha"])
    lhs = se.apery_II(0, None, m + 1, alpha, tol / 8, None, prec)
    rhs = se.param_euler_sum(m, 0, -alpha, tol / 8, None, prec) * alpha
    return lhs, rhs


_register(
    "thm-3.6a",
    _eval_thm_36a,
    lambda rng: {"m": 1 + rng.randrange(3), "alpha": _pick(rng, _ALPHAS)},
    {"m": 2, "alpha": "0.3"},
)


def _eval_thm_36b(p, tol, prec):
    m = int(p["m"])
    k = int(p["k"])
    alpha = _num(p["alpha"])
    lhs = se.apery_II(k, None, m + 1, alpha, tol / 8, None, prec)
    rhs = se.param_euler_pow(m, k, -alpha, tol / 8, None, prec)
    return lhs, rhs


_register(
    "thm-3.6b",
    _eval_thm_36b,
    lambda rng: {"m": 1 + rng.randrange(3), "k": 1 + rng.randrange(3),
                 "alpha": _pick(rng, _ALPHAS)},
    {"m": 1, "k": 2, "alpha": "0.3"},
)


def _eval_harmonic_n(p, tol, prec):
    with working(prec):
        alpha = _num(p["alpha"])
        lhs = se.param_euler_sum(1, 0, alpha, tol / 8, None, prec)
        g = sf.euler_gamma(prec)
        v = (mp.zeta(2) - mp.zeta(2, 1 + alpha)) / (2 * alpha) \
            + (sf.digamma(1 + alpha) + g) ** 2 / (2 * alpha)
        return lhs, _closed(v)


_register(
    "eq-harmonic-N",
    _eval_harmonic_n,
    lambda rng: {"alpha": _pick(rng, _ALPHAS)},
    {"alpha": "0.3"},
)


def _eval_binom_display(which):
    def ev(p, tol, prec):
        with working(prec):
            alpha = _num(p["alpha"])
            k = int(p.get("k", 1))
            g = sf.euler_gamma(prec)
            psi0 = sf.digamma(1 - alpha) + g
            sub = tol / 16
            if which == 1:
                lhs = se.apery_II(0, None, 1, alpha, sub, None, prec)
                return lhs, _closed(-psi0)
            if which == 2:
                lhs = se.apery_II(k, None, 1, alpha, sub, None, prec)
                return lhs, _closed(mp.zeta(k + 1, 1 - alpha))
            if which == 3:
                lhs = se.apery_II(0, None, 2, alpha, sub, None, prec)
                v = (mp.zeta(2, 1 - alpha) - mp.zeta(2)) / 2 - psi0 ** 2 / 2
                return lhs, _closed(v)
            if which == 4:
                lhs = se.apery_II(0, ones(k), 2, alpha, sub, None, prec)
                rhs = _zeta((k + 1, 1), 1, sub, prec) \
                    - _zeta((k + 1, 1), 1 - alpha, sub, prec) \
                    - _closed(mp.zeta(k + 1) * psi0)
                return lhs, rhs
            if which == 5:
                lhs = se.apery_II(1, (1,), 2, alpha, sub, None, prec)
                rhs = _closed(mp.zeta(2) * mp.zeta(2, 1 - alpha)) \
                    - _zeta((3, 1), 1 - alpha, sub, prec) * 2 \
                    - _zeta((2, 2), 1 - alpha, sub, prec)
                return lhs, rhs
            if which == 6:
                lhs = se.apery_II(1, (1, 1), 2, alpha, sub, None, prec)
                rhs = _closed(mp.zeta(3) * mp.zeta(2, 1 - alpha)) \
                    - _zeta((3, 2), 1 - alpha, sub, prec) \
                    - _zeta((4, 1), 1 - alpha, sub, prec) * 3
                return lhs, rhs
            lhs = se.apery_II(1, (2, 1), 2, alpha, sub, None, prec)
            rhs = _zeta((3, 2, 1), 1 - alpha, sub, prec) * 2 \
                + _zeta((2, 3, 1), 1 - alpha, sub, prec) * 2 \
                + _zeta((2, 2, 2), 1 - alpha, sub, prec) \
                + _closed(mp.mpf(7) / 4 * mp.zeta(4) * mp.zeta(2, 1 - alpha)) \
                - _zeta((3, 1), 1 - alpha, sub, prec) * (2 * mp.zeta(2)) \
                - _zeta((2, 2), 1 - alpha, sub, prec) * mp.zeta(2)
            return lhs, rhs

    return ev


for _i in range(1, 8):
    if _i in (2, 4):
        _sampler = (lambda rng: {"alpha": _pick(rng, _ALPHAS),
                                 "k": 1 + rng.randrange(3)})
        _default = {"alpha": "0.3", "k": 2}
    else:
        _sampler = (lambda rng: {"alpha": _pick(rng, _ALPHAS)})
        _default = {"alpha": "0.3"}
    _register(f"thm-3.6-display-{_i}", _eval_binom_display(_i),
              _sampler, _default)


def _eval_conj_37(p, tol, prec):
    """Exploratory entry: evaluates one of the conjectured parametric
    Euler sums and asserts nothing (no closed form is available)."""
    m = int(p["m"])
    k = int(p["k"])
    alpha = _num(p["alpha"])
    if k == 0:
        v = se.param_euler_sum(m, 0, alpha, tol / 8, None, prec)
    else:
        v = se.param_euler_pow(m, k, alpha, tol / 8, None, prec)
    return v, v


_register(
    "conj-3.7",
    _eval_conj_37,
    lambda rng: {"m": 1 + rng.randrange(3), "k": rng.randrange(3),
                 "alpha": _pick(rng, _ALPHAS)},
    {"m": 2, "k": 1, "alpha": "0.3"},
)


def _eval_ones_duality(p, tol, prec):
    with working(prec):
        k = int(p["k"])
        r = int(p["r"])
        alpha = _num(p["alpha"])
        spec = term_spec(strict=ones(k), strict_shift=alpha,
                         star=ones(r), binom_upper=((alpha, False),),
                         powers=((0, 1),))
        lhs = weighted_sum([spec], tol / 8, None, prec)
        v = _binom(k + r, k) * mp.zeta(k + r + 1, 1 - alpha)
        return lhs, _closed(v)


_register(
    "eq-ones-duality",
    _eval_ones_duality,
    lambda rng: {"k": 1 + rng.randrange(3), "r": 1 + rng.randrange(3),
                 "alpha": _pick(rng, _ALPHAS)},
    {"k": 1, "r": 2, "alpha": "0.3"},
)


# ---------------------------------------------------------------------------
# section 4: symmetric-function expansions

def _eval_thm_42(p, tol, prec):
    m = int(p["m"])
    pp = int(p["p"])
    k = int(p["k"])
    alpha = _num(p["alpha"])
    idx = (1,) + (1,) * (m - 2) + ((2,) + (1,) * (m - 2)) * (pp - 1)
    lhs = se.apery_I(idx, k, alpha, tol / 8, None, prec)
    rhs = _partition_rhs(m, pp, k, 1 - alpha, tol / 8, prec)
    return lhs, rhs


_register(
    "thm-4.2",
    _eval_thm_42,
    lambda rng: {"m": 2 + rng.randrange(2), "p": 1 + rng.randrange(2),
                 "k": rng.randrange(3), "alpha": _pick(rng, _ALPHAS)},
    {"m": 2, "p": 2, "k": 1, "alpha": "0.3"},
)


def _eval_thm_43(p, tol, prec):
    m = int(p["m"])
    pp = int(p["p"])
    k = int(p["k"])
    alpha = _num(p["alpha"])
    sub = tol / 32
    total = ValueWithBound(0, 0, True)
    if k == 0:
        total = total + _zeta((m,) * pp, 1, sub, prec)
    for l in range(1, pp + 1):
        zf = _zeta((m,) * (pp - l), 1, sub, prec)
        star = ((1,) * (m - 2) + (2,)) * (l - 1) + (1,) * (m - 1)
        s = se.apery_II(k, star, 1, alpha, sub, None, prec)
        total = total + zf * s * mp.mpf(-1) ** (l - 1)
    rhs = _partition_rhs(m, pp, k, 1 - alpha, tol / 8, prec)
    return total, rhs


_register(
    "thm-4.3",
    _eval_thm_43,
    lambda rng: {"m": 2 + rng.randrange(2), "p": 1 + rng.randrange(2),
                 "k": rng.randrange(3), "alpha": _pick(rng, _ALPHAS)},
    {"m": 2, "p": 2, "k": 1, "alpha": "0.3"},
)


def _eval_thm_44(p, tol, prec):
    mvec = tuple(p["m"])
    k = int(p["k"])
    alpha = _num(p["alpha"])
    pp = len(mvec)
    sub = tol / 32
    total = ValueWithBound(0, 0, True)
    for j in range(1, pp + 1):
        zf = _zeta(tuple(reversed(mvec[j:])), 1, sub, prec)
        star = hoffman_dual(Composition((mvec[0] - 1,) + mvec[1:j]))
        s = se.apery_II(k, star.parts, 1, alpha, sub, None, prec)
        total = total + zf * s * mp.mpf(-1) ** (j - 1)
    rhs = _product_rhs(mvec, k, 1 - alpha, tol / 8, prec)
    if k == 0:
        rhs = rhs - _zeta(tuple(reversed(mvec)), 1, sub, prec)
    return total, rhs


_register(
    "thm-4.4",
    _eval_thm_44,
    lambda rng: {"m": _pick(rng, [(2, 2), (3, 2), (2, 3), (2, 1, 2)]),
                 "k": rng.randrange(3), "alpha": _pick(rng, _ALPHAS)},
    {"m": (3, 2), "k": 1, "alpha": "0.3"},
)


def _eval_44_limit(p, tol, prec):
    mvec = tuple(p["m"])
    k = int(p["k"])
    pp = len(mvec)
    sub = tol / 32
    total = ValueWithBound(0, 0, True)
    for j in range(1, pp + 1):
        zf = _zeta(tuple(reversed(mvec[j:])), 1, sub, prec)
        star = hoffman_dual(Composition((mvec[0] - 1,) + mvec[1:j]))
        spec = term_spec(strict=ones(k - 1), strict_prev=True,
                         star=star.parts, powers=((0, 2),))
        s = weighted_sum([spec], sub, None, prec)
        total = total + zf * s * mp.mpf(-1) ** (j - 1)
    rhs = _product_rhs(mvec, k, 1, tol / 8, prec)
    return total, rhs


_register(
    "eq-4.4-limit",
    _eval_44_limit,
    lambda rng: {"m": _pick(rng, [(2, 2), (3, 2), (2, 3)]),
                 "k": 1 + rng.randrange(2)},
    {"m": (2, 2), "k": 1},
)


# ---------------------------------------------------------------------------
# section 5: two-binomial symmetry and reduction

def _eval_thm_52(p, tol, prec):
    with working(prec):
        m = int(p["m"])
        alpha = _num(p["alpha"])
        beta = _num(p["beta"])
        specs = [
            term_spec(binom_upper=((alpha, False),), binom_lower=(beta,),
                      powers=((0, m + 2),)),
            term_spec(binom_upper=((beta, False),), binom_lower=(alpha,),
                      powers=((0, m + 2),), coeff=mp.mpf(-1) ** m),
            term_spec(binom_upper=((alpha, False),),
                      powers=((0, m + 2),), coeff=-1),
            term_spec(binom_upper=((beta, False),),
                      powers=((0, m + 2),), coeff=-mp.mpf(-1) ** m),
        ]
        lhs = weighted_sum(specs, tol / 8, None, prec)
        rhs = ValueWithBound(0, 0, True)
        for i in range(1, m + 2):
            a = se.apery_II(0, None, i, beta, tol / 32, None, prec)
            b = se.apery_II(0, None, m + 2 - i, alpha, tol / 32, None, prec)
            rhs = rhs + a * b * mp.mpf(-1) ** (i - 1)
        return lhs, rhs


def _sample_thm_52(rng):
    m = _pick(rng, [-1, 0, 1, 2, 3])
    if m == -1:
        a = _pick(rng, _SMALL_ALPHAS)
        return {"m": m, "alpha": a, "beta": a}
    return {"m": m, "alpha": _pick(rng, _SMALL_ALPHAS),
            "beta": _pick(rng, _SMALL_ALPHAS)}


_register("thm-5.2", _eval_thm_52, _sample_thm_52,
          {"m": 1, "alpha": "0.5", "beta": "0.5"})


def _eval_cor_53(p, tol, prec):
    with working(prec):
        m = int(p["m"])
        half = mp.mpf("0.5")
        parity = 1 + mp.mpf(-1) ** m
        lhs = _closed(parity * mp.zeta(m + 2))
        c = {}
        for i in list(range(1, m + 2)) + [m + 2]:
            if i not in c:
                c[i] = se.apery_II(0, None, i, half, tol / 32, None, prec)
        rhs = c[m + 2] * parity
        for i in range(1, m + 2):
            rhs = rhs + c[i] * c[m + 2 - i] * mp.mpf(-1) ** (i - 1)
        return lhs, rhs


_register("cor-5.3", _eval_cor_53,
          lambda rng: {"m": rng.randrange(5)}, {"m": 2})


def _eval_thm_54(p, tol, prec):
    with working(prec):
        m = int(p["m"])
        k = int(p["k"])
        pp = int(p["p"])
        alpha = _num(p["alpha"])
        beta = _num(p["beta"])
        specs = [
            term_spec(strict=ones(k), strict_shift=alpha,
                      star=ones(pp), star_shift=1 - beta,
                      binom_upper=((alpha, False),), binom_lower=(beta,),
                      powers=((0, m + 2),)),
            term_spec(strict=ones(pp), strict_shift=beta,
                      star=ones(k), star_shift=1 - alpha,
                      binom_upper=((beta, False),), binom_lower=(alpha,),
                      powers=((0, m + 2),), coeff=mp.mpf(-1) ** m),
        ]
        if pp == 0:
            specs.append(term_spec(strict=ones(k), strict_shift=alpha,
                                   binom_upper=((alpha, False),),
                                   powers=((0, m + 2),), coeff=-1))
        if k == 0:
            specs.append(term_spec(strict=ones(pp), strict_shift=beta,
                                   binom_upper=((beta, False),),
                                   powers=((0, m + 2),),
                                   coeff=-mp.mpf(-1) ** m))
        lhs = weighted_sum(specs, tol / 8, None, prec)
        rhs = ValueWithBound(0, 0, True)
        for i in range(1, m + 2):
            a = se.apery_II(pp, None, i, beta, tol / 32, None, prec)
            b = se.apery_II(k, None, m + 2 - i, alpha, tol / 32, None, prec)
            rhs = rhs + a * b * mp.mpf(-1) ** (i - 1)
        return lhs, rhs


_register(
    "thm-5.4",
    _eval_thm_54,
    lambda rng: {"m": rng.randrange(3), "k": rng.randrange(3),
                 "p": rng.randrange(3),
                 "alpha": _pick(rng, _SMALL_ALPHAS),
                 "beta": _pick(rng, _SMALL_ALPHAS)},
    {"m": 1, "k": 1, "p": 1, "alpha": "0.25", "beta": "0.35"},
)


def _eval_cor_55(p, tol, prec):
    m = int(p["m"])
    k = int(p["k"])
    pp = int(p["p"])
    specs = [
        term_spec(strict=ones(k - 1), strict_prev=True, star=ones(pp),
                  powers=((0, m + 3),)),
        term_spec(strict=ones(pp - 1), strict_prev=True, star=ones(k),
                  powers=((0, m + 3),), coeff=mp.mpf(-1) ** m),
    ]
    lhs = weighted_sum(specs, tol / 8, None, prec)
    rhs = ValueWithBound(0, 0, True)
    sub = tol / 32
    for i in range(1, m + 2):
        a = _zeta((i + 1,) + (1,) * (pp - 1), 1, sub, prec)
        b = _zeta((m + 3 - i,) + (1,) * (k - 1), 1, sub, prec)
        rhs = rhs + a * b * mp.mpf(-1) ** (i - 1)
    return lhs, rhs


_register(
    "cor-5.5",
    _eval_cor_55,
    lambda rng: {"m": rng.randrange(3), "k": 1 + rng.randrange(3),
                 "p": 1 + rng.randrange(3)},
    {"m": 1, "k": 2, "p": 1},
)


def _eval_cor_56(p, tol, prec):
    with working(prec):
        m = int(p["m"])
        k = int(p["k"])
        pp = int(p["p"])
        half = mp.mpf("0.5")
        specs = [
            term_spec(strict=ones(k - 1), strict_prev=True,
                      star=ones(pp), star_shift=half,
                      binom_lower=(half,), powers=((0, m + 3),),
                      coeff=mp.ldexp(1, -pp)),
            term_spec(strict=ones(pp), strict_shift=half,
                      star=ones(k), binom_upper=((half, False),),
                      powers=((0, m + 2),),
                      coeff=mp.mpf(-1) ** m * mp.ldexp(1, -pp)),
        ]
        lhs = weighted_sum(specs, tol / 8, None, prec)
        sub = tol / 32
        if pp == 0:
            lhs = lhs - _zeta((m + 3,) + (1,) * (k - 1), 1, sub, prec)
        rhs = ValueWithBound(0, 0, True)
        for i in range(1, m + 2):
            tspec = term_spec(strict=ones(pp), strict_shift=half,
                              binom_upper=((half, False),),
                              powers=((0, i),), coeff=mp.ldexp(1, -pp))
            a = weighted_sum([tspec], sub, None, prec)
            b = _zeta((m + 3 - i,) + (1,) * (k - 1), 1, sub, prec)
            rhs = rhs + a * b * mp.mpf(-1) ** (i - 1)
        return lhs, rhs


_register(
    "cor-5.6",
    _eval_cor_56,
    lambda rng: {"m": rng.randrange(3), "k": 1 + rng.randrange(2),
                 "p": rng.randrange(3)},
    {"m": 1, "k": 1, "p": 1},
)


def _eval_thm_57(p, tol, prec):
    with working(prec):
        m = int(p["m"])
        alpha = _num(p["alpha"])
        beta = _num(p["beta"])
        lhs = se.apery_III(None, None, m, alpha, beta, tol / 8, None, prec)
        spec = term_spec(strict=ones(m + 1), strict_shift=1 - beta,
                         strict_prev=True,
                         powers=((-beta - alpha, 1), (-beta, 1)))
        rhs = weighted_sum([spec], tol / 8, None, prec) * alpha
        return lhs, rhs


_register(
    "thm-5.7",
    _eval_thm_57,
    lambda rng: {"m": _pick(rng, [-1, 0, 1, 2]),
                 "alpha": _pick(rng, _SMALL_ALPHAS),
                 "beta": _pick(rng, _SMALL_ALPHAS)},
    {"m": 0, "alpha": "0.25", "beta": "0.35"},
)


def _eval_thm_58(p, tol, prec):
    with working(prec):
        m = int(p["m"])
        k = int(p["k"])
        pp = int(p["p"])
        alpha = _num(p["alpha"])
        beta = _num(p["beta"])
        lhs = se.apery_III(ones(k), ones(pp), m, alpha, beta,
                           tol / 8, None, prec)
        sub = tol / 32
        rhs = ValueWithBound(0, 0, True)
        for i in weak_compositions(pp, m + 2):
            w = _binom(i[0] + k, k)
            idx = (i[0] + k + 1,) + tuple(ij + 1 for ij in i.parts[1:])
            if i[0] == 0 and k == 0:
                spec = term_spec(strict=idx[1:], strict_shift=1 - beta,
                                 strict_prev=True,
                                 powers=((-beta, 1), (-alpha - beta, 1)))
                bracket = weighted_sum([spec], sub, None, prec) * alpha
            else:
                shifts = ShiftVector((1 - alpha - beta,)
                                     + (1 - beta,) * (m + 1))
                bracket = _zeta(idx, shifts, sub, prec)
                if k == 0:
                    bracket = bracket - _zeta(idx, 1 - beta, sub, prec)
            rhs = rhs + bracket * w
        return lhs, rhs


_register(
    "thm-5.8",
    _eval_thm_58,
    lambda rng: {"m": _pick(rng, [-1, 0, 1]), "k": rng.randrange(3),
                 "p": rng.randrange(3),
                 "alpha": _pick(rng, _SMALL_ALPHAS),
                 "beta": _pick(rng, _SMALL_ALPHAS)},
    {"m": 0, "k": 1, "p": 1, "alpha": "0.25", "beta": "0.35"},
)


def _eval_cor_59(p, tol, prec):
    with working(prec):
        m = int(p["m"])
        k = int(p["k"])
        pp = int(p["p"])
        half = mp.mpf("0.5")
        spec = term_spec(strict=ones(k - 1), strict_prev=True,
                         star=ones(pp), star_shift=half,
                         binom_lower=(half,), powers=((0, m + 3),),
                         coeff=mp.ldexp(1, -pp))
        lhs = weighted_sum([spec], tol / 8, None, prec)
        sub = tol / 32
        rhs = ValueWithBound(0, 0, True)
        for i in weak_compositions(pp, m + 2):
            w = _binom(i[0] + k, k) * mp.ldexp(1, k + m + 2)
            idx = (i[0] + k + 1,) + tuple(ij + 1 for ij in i.parts[1:])
            rhs = rhs + _t_value(idx, sub, prec) * w
        return lhs, rhs


_register(
    "cor-5.9",
    _eval_cor_59,
    lambda rng: {"m": _pick(rng, [-1, 0, 1]), "k": 1 + rng.randrange(2),
                 "p": rng.randrange(3)},
    {"m": 0, "k": 1, "p": 1},
)


def _eval_cor_510(p, tol, prec):
    with working(prec):
        m = int(p["m"])
        k = int(p["k"])
        pp = int(p["p"])
        half = mp.mpf("0.5")
        spec = term_spec(strict=ones(k), strict_shift=half,
                         star=ones(pp), star_shift=half,
                         powers=((0, m + 2),))
        lhs = weighted_sum([spec], tol / 8, None, prec)
        sub = tol / 32
        rhs = ValueWithBound(0, 0, True)
        for i in weak_compositions(pp, m + 2):
            # the specialization forces weight 2^(p - i_1 + m + 1)
            w = mp.ldexp(_binom(i[0] + k, k), pp - i[0] + m + 1)
            tail = tuple(ij + 1 for ij in i.parts[1:])
            tw = mp.ldexp(1, -sum(tail))
            if k >= 1:
                specs = [term_spec(strict=tail, strict_shift=half,
                                   powers=((0, i[0] + k + 1),), coeff=tw)]
            else:
                # the subtracted sum carries the prefix strictly below n
                specs = [
                    term_spec(strict=tail, strict_shift=half,
                              powers=((0, i[0] + 1),), coeff=tw),
                    term_spec(strict=tail, strict_shift=half,
                              strict_prev=True,
                              powers=((-half, i[0] + 1),), coeff=-tw),
                ]
            rhs = rhs + weighted_sum(specs, sub, None, prec) * w
        return lhs, rhs


_register(
    "cor-5.10",
    _eval_cor_510,
    lambda rng: {"m": rng.randrange(3), "k": rng.randrange(3),
                 "p": rng.randrange(3)},
    {"m": 1, "k": 1, "p": 1},
)


def _eval_cor_511(p, tol, prec):
    with working(prec):
        m = int(p["m"])
        k = int(p["k"])
        pp = int(p["p"])
        half = mp.mpf("0.5")
        spec = term_spec(strict=ones(k), strict_shift=half,
                         star=ones(pp), binom_upper=((half, False),),
                         powers=((0, m + 2),))
        lhs = weighted_sum([spec], tol / 8, None, prec)
        sub = tol / 32
        rhs = ValueWithBound(0, 0, True)
        for i in weak_compositions(pp, m + 2):
            w = _binom(i[0] + k, k)
            tail = tuple(ij + 1 for ij in i.parts[1:])
            if k >= 1:
                specs = [term_spec(strict=tail, strict_prev=True,
                                   powers=((-half, i[0] + k + 1),))]
            else:
                specs = [
                    term_spec(strict=tail, strict_prev=True,
                              powers=((-half, i[0] + 1),)),
                    term_spec(strict=tail, strict_prev=True,
                              powers=((0, i[0] + 1),), coeff=-1),
                ]
            rhs = rhs + weighted_sum(specs, sub, None, prec) * w
        return lhs, rhs


_register(
    "cor-5.11",
    _eval_cor_511,
    lambda rng: {"m": _pick(rng, [-1, 0, 1]), "k": 1 + rng.randrange(2),
                 "p": rng.randrange(3)},
    {"m": 0, "k": 1, "p": 1},
)


# ---------------------------------------------------------------------------
# section 6: symmetric double-value formula

def _eval_thm_61(family):
    def ev(p, tol, prec):
        with working(prec):
            m = int(p["m"])
            pp = int(p["p"])
            q = int(p["q"])
            sub = tol / 64
            if family == "zeta":
                double = lambda a, b: _zeta((a, b), 1, sub, prec)
                single = lambda a: _closed(mp.zeta(a))
            else:
                double = lambda a, b: _tee((a, b), 1, sub, prec)
                single = lambda a: _tee((a,), 1, sub, prec)
            lhs = ValueWithBound(0, 0, True)
            for i in range(m):
                j = m - 1 - i
                w = _binom(pp + i - 1, i) * _binom(q + j - 1, j)
                lhs = lhs + double(pp + i, q + j) * w
            for i in range(pp):
                j = pp - 1 - i
                w = _binom(m + i - 1, i) * _binom(q + j - 1, j)
                lhs = lhs - double(m + i, q + j) * (w * mp.mpf(-1) ** q)
            rhs = ValueWithBound(0, 0, True)
            for i in range(q):
                j = q - 1 - i
                w = _binom(m + i - 1, i) * _binom(pp + j - 1, j) \
                    * mp.mpf(-1) ** j
                rhs = rhs + single(m + i) * single(pp + j) * w
            return lhs, rhs

    return ev


for _fam in ("zeta", "T"):
    _register(
        f"thm-6.1-{_fam}",
        _eval_thm_61(_fam),
        lambda rng: {"m": 2 + rng.randrange(3), "p": 2 + rng.randrange(3),
                     "q": 1 + rng.randrange(3)},
        {"m": 2, "p": 2, "q": 1},
    )


def _eval_cor_62(p, tol, prec):
    with working(prec):
        pp = int(p["p"])
        q = int(p["q"])
        family = p["family"]
        sub = tol / 64
        if family == "zeta":
            double = lambda a, b: _zeta((a, b), 1, sub, prec)
            single = lambda a: _closed(mp.zeta(a))
        else:
            double = lambda a, b: _tee((a, b), 1, sub, prec)
            single = lambda a: _tee((a,), 1, sub, prec)
        lhs = ValueWithBound(0, 0, True)
        for i in range(pp):
            j = pp - 1 - i
            w = _binom(pp + i - 1, i) * _binom(q + j - 1, j)
            lhs = lhs + double(pp + i, q + j) * w
        lhs = lhs * (1 - mp.mpf(-1) ** q)
        rhs = ValueWithBound(0, 0, True)
        for i in range(q):
            j = q - 1 - i
            w = _binom(pp + i - 1, i) * _binom(pp + j - 1, j) \
                * mp.mpf(-1) ** j
            rhs = rhs + single(pp + i) * single(pp + j) * w
        return lhs, rhs


_register(
    "cor-6.2",
    _eval_cor_62,
    lambda rng: {"p": 2 + rng.randrange(3), "q": 1 + rng.randrange(3),
                 "family": _pick(rng, ["zeta", "T"])},
    {"p": 2, "q": 1, "family": "T"},
)


# ---------------------------------------------------------------------------
# section 7: nested sums with a parametric binomial coefficient

def _eval_ideas_4(p, tol, prec):
    k = Composition(tuple(p["k"]))
    alpha = _num(p["alpha"])
    beta = _num(p["beta"])
    lhs = quad.int_mpl_weighted(k, alpha, beta, 0, 0, tol / 16, prec)
    rhs = se.htmzv_pbc(alpha, theorem_dual(k), 1 - beta, tol / 8, None, prec)
    return lhs, rhs


_register(
    "eq-7-ideas-4",
    _eval_ideas_4,
    lambda rng: {"k": _pick(rng, [(2,), (1, 1), (2, 1), (2, 1, 1)]),
                 "alpha": _pick(rng, _SMALL_ALPHAS),
                 "beta": _pick(rng, _SMALL_ALPHAS)},
    {"k": (2, 1), "alpha": "0.3", "beta": "0.25"},
)


def _eval_ideas_5(p, tol, prec):
    with working(prec):
        alpha = _num(p["alpha"])
        beta = _num(p["beta"])
        lhs = se.htmzv_pbc(alpha, (1,), 1 - beta, tol / 8, None, prec)
        rhs = _closed(sf.beta(1 - alpha, 1 - beta, prec))
        return lhs, rhs


_register(
    "eq-7-ideas-5",
    _eval_ideas_5,
    lambda rng: {"alpha": _pick(rng, _SMALL_ALPHAS),
                 "beta": _pick(rng, _SMALL_ALPHAS)},
    {"alpha": "1/3", "beta": "1/4"},
)


def _eval_ideas_6(p, tol, prec):
    with working(prec):
        k = int(p["k"])
        m = int(p["m"])
        alpha = _num(p["alpha"])
        beta = _num(p["beta"])
        spec = term_spec(strict=ones(k), strict_shift=alpha,
                         strict_prev=True, binom_upper=((alpha, True),),
                         powers=((-beta, m + 1),))
        lhs = weighted_sum([spec], tol / 8, None, prec)
        v = mp.mpf(-1) ** (k + m) / (_fac(k) * _fac(m)) \
            * sf.beta_partial(k, m, 1 - alpha, 1 - beta, prec)
        return lhs, _closed(v)


_register(
    "eq-7-ideas-6",
    _eval_ideas_6,
    lambda rng: {"k": rng.randrange(3), "m": rng.randrange(3),
                 "alpha": _pick(rng, _SMALL_ALPHAS),
                 "beta": _pick(rng, _SMALL_ALPHAS)},
    {"k": 1, "m": 2, "alpha": "0.3", "beta": "0.25"},
)


def _eval_depth1(p, tol, prec):
    with working(prec):
        m = int(p["m"])
        alpha = _num(p["alpha"])
        beta = _num(p["beta"])
        lhs = se.htmzv_pbc(alpha, (m + 1,), 1 - beta, tol / 8, None, prec)
        v = mp.mpf(-1) ** m / _fac(m) \
            * sf.beta_partial(0, m, 1 - alpha, 1 - beta, prec)
        return lhs, _closed(v)


_register(
    "eq-7-depth1",
    _eval_depth1,
    lambda rng: {"m": rng.randrange(4),
                 "alpha": _pick(rng, _SMALL_ALPHAS),
                 "beta": _pick(rng, _SMALL_ALPHAS)},
    {"m": 2, "alpha": "0.3", "beta": "0.25"},
)


def _eval_thm_72(p, tol, prec):
    with working(prec):
        k = int(p["k"])
        r = int(p["r"])
        alpha = _num(p["alpha"])
        beta = _num(p["beta"])
        idx = (k,) + (1,) * (r - 1)
        lhs = quad.int_mpl_weighted(idx, alpha, beta, 0, 0, tol / 16, prec)
        rhs = ValueWithBound(0, 0, True)
        sub = tol / 64
        for j in range(k - 1):
            zf = _zeta((k - j,) + (1,) * (r - 1), 1, sub, prec)
            pb = se.htmzv_pbc(beta, (j + 1,), 1 - alpha, sub, None, prec)
            rhs = rhs + zf * pb * mp.mpf(-1) ** j
        sign = -mp.mpf(-1) ** k

        # enumerate i_1 + ... + i_{k-1} + l = r + k - 1 with i_j >= 1
        def slots(remaining, count):
            if count == 0:
                yield ()
                return
            for first in range(1, remaining - count + 2):
                for rest in slots(remaining - first, count - 1):
                    yield (first,) + rest
        for i_parts in slots(r + k - 1, k - 1):
            l = r + k - 1 - sum(i_parts)
            if l < 0:
                continue
            dual = theorem_dual(Composition(i_parts))
            d = _pbc_deriv(l, beta, dual, 1 - alpha, sub, prec)
            rhs = rhs + _closed(d / _fac(l)) * sign
        return lhs, rhs


_register(
    "thm-7.2",
    _eval_thm_72,
    lambda rng: {"k": 2, "r": 2 + rng.randrange(2),
                 "alpha": _pick(rng, _SMALL_ALPHAS),
                 "beta": _pick(rng, _SMALL_ALPHAS)},
    {"k": 2, "r": 2, "alpha": "0.3", "beta": "0.25"},
)


def _eval_cor_73(p, tol, prec):
    with working(prec):
        alpha = _num(p["alpha"])
        beta = _num(p["beta"])
        lhs = se.htmzv_pbc(alpha, (2, 1), 1 - beta, tol / 8, None, prec) \
            + se.htmzv_pbc(beta, (2, 1), 1 - alpha, tol / 8, None, prec)
        b = sf.beta(1 - alpha, 1 - beta, prec)
        v = b * (mp.zeta(2) + sf.polygamma(1, 2 - alpha - beta, prec)
                 - (sf.digamma(1 - alpha, prec)
                    - sf.digamma(2 - alpha - beta, prec))
                 * (sf.digamma(1 - beta, prec)
                    - sf.digamma(2 - alpha - beta, prec)))
        return lhs, _closed(v)


_register(
    "cor-7.3",
    _eval_cor_73,
    lambda rng: {"alpha": _pick(rng, _SMALL_ALPHAS),
                 "beta": _pick(rng, _SMALL_ALPHAS)},
    {"alpha": "1/3", "beta": "1/4"},
)


def _eval_cor_74(p, tol, prec):
    with working(prec):
        alpha = _num(p["alpha"])
        beta = _num(p["beta"])
        sub = tol / 32
        lhs = se.htmzv_pbc(alpha, (3, 1), 1 - beta, sub, None, prec) \
            + se.htmzv_pbc(beta, (2, 1, 1), 1 - alpha, sub, None, prec)
        rhs = _zeta((2, 1), 1, sub, prec) \
            * se.htmzv_pbc(beta, (1,), 1 - alpha, sub, None, prec)
        d2 = _pbc_deriv(2, beta, (2,), 1 - alpha, sub, prec)
        d1 = _pbc_deriv(1, beta, (2, 1), 1 - alpha, sub, prec)
        rhs = rhs - _closed(d2 / 2) - _closed(d1)
        return lhs, rhs


_register(
    "cor-7.4",
    _eval_cor_74,
    lambda rng: {"alpha": _pick(rng, _SMALL_ALPHAS),
                 "beta": _pick(rng, _SMALL_ALPHAS)},
    {"alpha": "0.3", "beta": "0.25"},
)


def _eval_thm_75(p, tol, prec):
    with working(prec):
        k = Composition(tuple(p["k"]))
        alpha = _num(p["alpha"])
        beta = _num(p["beta"])
        if beta >= 0:
            raise DomainError("beta must be negative here")
        sub = tol / 16
        lhs = se.htmzv_pbc(alpha, theorem_dual(k), 1 - beta, sub, None, prec)
        kp = theorem_dual(Composition((k[0] + 1,) + k.parts[1:]))
        rhs = se.htmzv_pbc(alpha, kp, 1 - beta, sub, None, prec) \
            * (-(1 - alpha)) \
            - se.htmzv_pbc(alpha - 1, kp, -beta, sub, None, prec) * beta
        return lhs, rhs


_register(
    "thm-7.5",
    _eval_thm_75,
    lambda rng: {"k": _pick(rng, [(2,), (1, 1), (2, 1)]),
                 "alpha": _pick(rng, _SMALL_ALPHAS),
                 "beta": _pick(rng, ["-0.4", "-0.25", "-0.7"])},
    {"k": (2,), "alpha": "0.3", "beta": "-0.4"},
)


# ---------------------------------------------------------------------------
# runner

def run_check(id: str, params: dict | None = None, tol=None,
              prec: PrecisionConfig | None = None) -> IdentityCheck:
    """Evaluate both sides of one identity and compare."""
    try:
        ident = _REGISTRY[id]
    except KeyError:
        raise UnknownIdentity(f"no identity registered under {id!r}")
    if params is None:
        params = dict(ident.default)
    with working(prec):
        tol = mp.mpf(DEFAULT_TOL if tol is None else tol)
        start = time.monotonic()
        lhs, rhs = ident.evaluate(params, tol, prec)
        elapsed = time.monotonic() - start
        residual = abs(lhs.value - rhs.value)
        passed = bool(residual <= tol + lhs.abs_error + rhs.abs_error)
        return IdentityCheck(id, dict(params), lhs, rhs, residual, tol,
                             passed, elapsed)


def run_suite(filter: str = "*", samples_per_id: int = 1, tol=None,
              seed: int = 0,
              prec: PrecisionConfig | None = None) -> SuiteReport:
    """Run every matching identity at seeded sample points."""
    ids = [i for i in identity_ids() if fnmatch.fnmatch(i, filter)]
    if not ids:
        raise UnknownIdentity(f"no identity matches filter {filter!r}")
    checks = []
    for id in ids:
        ident = _REGISTRY[id]
        rng = random.Random(f"{seed}:{id}")
        seen = set()
        for _ in range(samples_per_id):
            params = ident.sample(rng)
            key = tuple(sorted((k, str(v)) for k, v in params.items()))
            if key in seen:
                continue
            seen.add(key)
            checks.append(run_check(id, params, tol, prec))
    return SuiteReport(
        checks=tuple(checks),
        tol=mp.nstr(mp.mpf(DEFAULT_TOL if tol is None else tol), 6),
        seed=seed,
        samples=samples_per_id,
    )
