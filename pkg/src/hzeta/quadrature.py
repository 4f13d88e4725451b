"""Tanh-sinh quadrature on (0, 1) for algebraic-logarithmic integrands.

Provides the integral side of the integral = series identities as an
independent oracle.  The substitution x = (1 + tanh((pi/2) sinh t)) / 2
maps the real line onto (0, 1) with doubly exponential endpoint decay,
so algebraic singularities x^a (1-x)^b with a, b > -1 and log factors
are integrated accurately; the error estimate is the last level-doubling
delta and is heuristic.

Both endpoint coordinates of every node are kept explicitly (x and
1 - x), and polylogarithm cores switch to the anchored endpoint
expansions of :mod:`hzeta.endpoint` once 1 - x < 1/4, so nodes
exponentially close to 1 stay cheap and fully accurate.

Integrals in the odd frame substitute u = (1 - x)/(1 + x) and integrate
in u, so the natural singular variable of the A-function weights sits at
an interval endpoint.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath as mp

from .compositions import Composition, refinements
from .endpoint import kta_endpoint, mpl_endpoint
from .errors import DomainError, NoConvergence
from .precision import PrecisionConfig, working
from .series_engine import ValueWithBound, kta as _kta_series, mpl as _mpl_series

MAX_LEVELS = 12

_node_cache = {}


def _nodes(level: int):
    """New abscissae at this level: (v, 1 - v, weight) triples.

    Level 0 holds the integer grid t = 0, +-1, ...; level l >= 1 the odd
    multiples of h = 2^-l.  Nodes are generated until 1 - v underflows
    the working precision by a wide margin.
    """
    key = (level, mp.mp.prec)
    hit = _node_cache.get(key)
    if hit is not None:
        return hit
    cutoff = mp.ldexp(1, -(mp.mp.prec + 40))
    h = mp.ldexp(1, -level)
    out = []
    j = 0
    while True:
        if level == 0:
            t = mp.mpf(j)
        else:
            t = (2 * j + 1) * h
        u = mp.pi / 2 * mp.sinh(t)
        e2 = mp.exp(-2 * u)
        v = 1 / (1 + e2)
        omv = e2 / (1 + e2)
        w = h * mp.pi / 4 * mp.cosh(t) / mp.cosh(u) ** 2
        if omv < cutoff or w < cutoff:
            break
        if t == 0:
            out.append((v, omv, w))
        else:
            out.append((v, omv, w))
            out.append((omv, v, w))  # the mirrored node t -> -t
        j += 1
    _node_cache[key] = out
    return out


@dataclass(frozen=True)
class WeightedIntegrand:
    """Integrand core times an algebraic-logarithmic weight on (0, 1).

    ``core`` is one of ("constant",), ("monomial", n), ("mpl", k),
    ("mpl_landen", k), ("kta", k).  The weight is
    x^x_exp (1-x)^omx_exp log^logx_pow x log^logomx_pow (1-x); with
    ``kta_frame`` the (1-x) pieces use u = (1-x)/(1+x) instead and the
    integral is carried out in u.
    """

    core: tuple = ("constant",)
    x_exp: object = 0
    omx_exp: object = 0
    logx_pow: int = 0
    logomx_pow: int = 0
    kta_frame: bool = False

    def core_order(self) -> int:
        """Vanishing order of the core at x = 0."""
        kind = self.core[0]
        if kind == "constant":
            return 0
        if kind == "monomial":
            return int(self.core[1]) - 1
        return Composition(self.core[1]).depth()


def _hybrid_mpl(k: Composition, prec):
    """Evaluator (x, omx) -> Li_k(x), switching representation at 1/4."""
    near = mpl_endpoint(k, prec)
    quarter = mp.mpf("0.25")

    def f(x, omx):
        if omx <= quarter:
            return near(omx)
        return _mpl_series(k, x, _core_tol(prec), None, prec).value

    return f


def _hybrid_kta(k: Composition, prec):
    near = kta_endpoint(k, prec)
    quarter = mp.mpf("0.25")

    def f(x, omx):
        u = omx / (1 + x)
        if u <= quarter:
            return near(u)
        return _kta_series(k, x, _core_tol(prec), None, prec).value

    return f


def _core_tol(prec):
    with working(prec) as cfg:
        return mp.ldexp(1, -(cfg.work_bits - 16))


def _core_evaluator(core, prec):
    kind = core[0]
    if kind == "constant":
        return lambda x, omx: mp.mpf(1)
    if kind == "monomial":
        n = int(core[1])
        return lambda x, omx: x ** (n - 1)
    if kind == "mpl":
        return _hybrid_mpl(Composition(core[1]), prec)
    if kind == "kta":
        return _hybrid_kta(Composition(core[1]), prec)
    if kind == "mpl_landen":
        k = Composition(core[1])
        parts = [_hybrid_mpl(l, prec) for l in sorted(refinements(k),
                                                     key=lambda l: l.parts)]
        sign = -1 if k.depth() % 2 else 1

        def f(x, omx):
            return sign * mp.fsum(p(x, omx) for p in parts)

        return f
    raise DomainError(f"unknown integrand core {core!r}")


def _build_pointwise(f: WeightedIntegrand, prec):
    """Map a node (v, 1-v) of the integration variable to the full
    integrand value, including the frame jacobian."""
    core = _core_evaluator(f.core, prec)
    a = mp.mpf(f.x_exp)
    b = mp.mpf(f.omx_exp)
    p = int(f.logx_pow)
    q = int(f.logomx_pow)

    if not f.kta_frame:

        def g(v, omv):
            val = core(v, omv)
            if a:
                val *= v ** a
            if b:
                val *= omv ** b
            if p:
                val *= mp.log(v) ** p
            if q:
                val *= mp.log(omv) ** q
            return val

        return g

    def g(v, omv):
        # integration variable is u = v; x = (1-u)/(1+u)
        x = omv / (1 + v)
        omx = 2 * v / (1 + v)
        val = core(x, omx) * 2 / (1 + v) ** 2
        if a:
            val *= x ** a
        if b:
            val *= v ** b
        if p:
            val *= mp.log(x) ** p
        if q:
            val *= mp.log(v) ** q
        return val

    return g


def _check_integrable(f: WeightedIntegrand):
    order0 = f.core_order()
    if f.kta_frame:
        # at u -> 0 (x -> 1) the core is log-bounded; at u -> 1, x -> 0
        if mp.mpf(f.omx_exp) <= -1:
            raise DomainError("u-exponent must exceed -1")
        if order0 + mp.mpf(f.x_exp) <= -1:
            raise DomainError("x-exponent too singular at x = 0")
    else:
        if order0 + mp.mpf(f.x_exp) <= -1:
            raise DomainError("x-exponent too singular at x = 0")
        if mp.mpf(f.omx_exp) <= -1:
            raise DomainError("(1-x)-exponent must exceed -1")


def de_quad(f: WeightedIntegrand, tol=None, prec: PrecisionConfig | None = None,
            max_levels: int = MAX_LEVELS) -> ValueWithBound:
    """Integrate a weighted core over (0, 1) by level-doubled tanh-sinh."""
    _check_integrable(f)
    with working(prec) as cfg:
        tol = mp.mpf(10) ** -20 if tol is None else mp.mpf(tol)
        g = _build_pointwise(f, prec)
        total = mp.mpf(0)
        prev = None
        delta = mp.inf
        for level in range(max_levels + 1):
            total = total / 2 if level else total
            total += mp.fsum(w * g(v, omv) for v, omv, w in _nodes(level))
            if prev is not None:
                delta = abs(total - prev)
                scale = max(mp.mpf(1), abs(total))
                if delta <= tol * scale / 4 and level >= 3:
                    err = delta + mp.ldexp(scale, -cfg.work_bits + 16)
                    return ValueWithBound(total, err, False)
            prev = total
        raise NoConvergence(
            f"level deltas stalled at {mp.nstr(delta, 6)} above tolerance "
            f"{mp.nstr(tol, 6)}"
        )


def int_mpl_weighted(k, alpha, beta, p: int = 0, q: int = 0, tol=None,
                     prec: PrecisionConfig | None = None,
                     core: str = "mpl") -> ValueWithBound:
    """integral_0^1 Li_k(x) x^(-alpha) (1-x)^(-beta) log^p x log^q (1-x) dx.

    ``core="mpl_landen"`` replaces Li_k(x) by Li_k(x/(x-1)).
    """
    k = Composition(k)
    f = WeightedIntegrand(
        core=(core, k.parts),
        x_exp=-mp.mpf(alpha),
        omx_exp=-mp.mpf(beta),
        logx_pow=p,
        logomx_pow=q,
    )
    return de_quad(f, tol, prec)


def int_kta_weighted(k, alpha, q: int = 0, tol=None,
                     prec: PrecisionConfig | None = None) -> ValueWithBound:
    """integral_0^1 A(k; x) u^(-alpha) log^q u dx / x with u = (1-x)/(1+x)."""
    k = Composition(k)
    f = WeightedIntegrand(
        core=("kta", k.parts),
        x_exp=-1,
        omx_exp=-mp.mpf(alpha),
        logomx_pow=q,
        kta_frame=True,
    )
    return de_quad(f, tol, prec)
