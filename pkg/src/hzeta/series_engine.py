"""Evaluation of the infinite series families with explicit error estimates.

Every evaluator returns a :class:`ValueWithBound`.  The families covered:

* Hurwitz-type multiple zeta and zeta-star values with vector shifts,
  ``zeta(k; a) = sum_{n_1 > ... > n_r} prod (n_j + a_j - 1)^(-k_j)``;
* Hurwitz-type multiple T-values (odd-denominator analogue with a 2^r
  numerator), reduced to shifted zeta values;
* single-variable multiple polylogarithms, their image under the Landen
  map ``x -> x/(x-1)``, and the associated even/odd A-functions;
* binomial-weighted Apery-type series combining strict and star prefix
  sums against ``C(n+a-1, n)`` and ``1/C(n-b, n)`` weights;
* parametric Euler sums ``sum zeta_{n-1}({1}_m) / ((n+a)(n+b))``;
* the zeta-function values of the three Arakawa-Kaneko-type functions
  (xi, psi, eta) at positive integers, through their finite expansions;
* nested zeta sums carrying a parametric binomial coefficient on the
  innermost index.

The generic driver accepts a list of :class:`TermSpec` product summands,
sums them exactly up to a crossover index, and replaces the tail by an
anchored asymptotic expansion summed in closed form (default), a direct
power bound, or Richardson extrapolation, per :class:`TailStrategy`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import mpmath as mp

from . import asymptotics as asym
from .asymptotics import AsymSeries, gamma_ratio, power_shift, prefix_expansion, reciprocal, tail_sum
from .compositions import (
    Composition,
    add as index_add,
    binom_weight,
    ones,
    refinements,
    theorem_dual,
    weak_compositions,
)
from .errors import (
    DomainError,
    NoConvergence,
    NonAdmissible,
    PoleError,
    ToleranceNotReached,
)
from .finite_sums import ShiftVector, _coerce, mhs_stream, mhss_stream
from .precision import PrecisionConfig, working


@dataclass(frozen=True)
class ValueWithBound:
    """A computed value with an absolute error estimate.

    ``rigorous`` is True when ``abs_error`` comes from a proven envelope
    bound on the discarded tail, False when it is a heuristic estimate
    (observed expansion defect or extrapolation delta).
    """

    value: mp.mpf
    abs_error: mp.mpf
    rigorous: bool = False

    def __post_init__(self):
        object.__setattr__(self, "value", mp.mpf(self.value))
        object.__setattr__(self, "abs_error", abs(mp.mpf(self.abs_error)))

    def __float__(self):
        return float(self.value)

    def _other(self, other):
        if isinstance(other, ValueWithBound):
            return other
        return ValueWithBound(other, 0, True)

    def __add__(self, other):
        o = self._other(other)
        return ValueWithBound(
            self.value + o.value,
            self.abs_error + o.abs_error,
            self.rigorous and o.rigorous,
        )

    __radd__ = __add__

    def __neg__(self):
        return ValueWithBound(-self.value, self.abs_error, self.rigorous)

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return (-self) + self._other(other)

    def __mul__(self, other):
        o = self._other(other)
        err = (
            abs(self.value) * o.abs_error
            + abs(o.value) * self.abs_error
            + self.abs_error * o.abs_error
        )
        return ValueWithBound(
            self.value * o.value, err, self.rigorous and o.rigorous
        )

    __rmul__ = __mul__


@dataclass(frozen=True)
class TailStrategy:
    """Outer-tail policy: how the remainder beyond the crossover is handled.

    ``euler_maclaurin`` (default) uses the anchored asymptotic expansion
    of the summand and closed-form Hurwitz tails; ``direct_bound`` sums
    until an explicit power-law envelope certifies the tolerance;
    ``richardson`` extrapolates partial sums.  ``N_max`` caps the number
    of exactly summed terms; ``em_order`` sets the base expansion order.
    """

    kind: str = "euler_maclaurin"
    N_max: int = 2_000_000
    em_order: int = 8

    def __post_init__(self):
        if self.kind not in ("euler_maclaurin", "direct_bound", "richardson"):
            raise ValueError(f"unknown tail strategy kind {self.kind!r}")
        if self.N_max < 1000:
            raise ValueError("N_max must be >= 1000")
        if self.em_order < 2:
            raise ValueError("em_order must be >= 2")


DEFAULT_TAIL = TailStrategy()

_LEVELS = 4


def _default_tol(cfg: PrecisionConfig):
    return mp.ldexp(1, -min(cfg.bits // 3, 120))


def _expansion_window(em_order: int, level: int) -> asym.TailStrategy:
    return asym.TailStrategy(
        order=em_order + 6 + 4 * level,
        n_anchor=160 + 110 * level,
        n_direct=400 * 2 ** level,
    )


@dataclass(frozen=True)
class TermSpec:
    """One product-form summand of an outer series over n = 1, 2, ...

        coeff * zeta_{n or n-1}(strict; a) * zeta*_n(star; b)
              * prod (n + c)^(-m)
              * prod C(n + alpha - 1, n)  [or C(n + alpha - 2, n - 1)]
              * prod 1 / C(n - beta, n)

    Build instances through :func:`term_spec`, which normalises shifts.
    """

    strict_index: Composition | None = None
    strict_shift: ShiftVector | None = None
    strict_prev: bool = False
    star_index: Composition | None = None
    star_shift: ShiftVector | None = None
    powers: tuple = ()
    binom_upper: tuple = ()
    binom_lower: tuple = ()
    coeff: mp.mpf = field(default_factory=lambda: mp.mpf(1))


def term_spec(
    strict=None,
    strict_shift=1,
    strict_prev=False,
    star=None,
    star_shift=1,
    powers=(),
    binom_upper=(),
    binom_lower=(),
    coeff=1,
) -> TermSpec:
    """Normalising constructor for :class:`TermSpec`.

    ``strict``/``star`` accept anything :class:`Composition` accepts;
    empty indices drop the factor (it is identically 1).  ``powers`` is a
    sequence of (offset, exponent) pairs; ``binom_upper`` of (alpha,
    at_prev) pairs; ``binom_lower`` of beta values.
    """
    sk = ss = tk = ts = None
    if strict is not None:
        sk, ss = _coerce(strict, strict_shift)
        if sk.is_empty():
            sk = ss = None
    if star is not None:
        tk, ts = _coerce(star, star_shift)
        if tk.is_empty():
            tk = ts = None
    return TermSpec(
        strict_index=sk,
        strict_shift=ss,
        strict_prev=bool(strict_prev),
        star_index=tk,
        star_shift=ts,
        powers=tuple((mp.mpf(c), int(m)) for c, m in powers),
        binom_upper=tuple((mp.mpf(a), bool(p)) for a, p in binom_upper),
        binom_lower=tuple(mp.mpf(b) for b in binom_lower),
        coeff=mp.mpf(coeff),
    )


class _SpecState:
    """Incremental evaluator of one TermSpec along n = 1, 2, ...

    Prefix sums advance through streams, binomials through first-order
    recurrences; each :meth:`step` costs O(total depth).
    """

    def __init__(self, spec: TermSpec, prec):
        self.spec = spec
        self.strict = None
        if spec.strict_index is not None:
            self.strict = mhs_stream(spec.strict_index, spec.strict_shift, prec)
            self.strict_prev_val = mp.mpf(0)
        self.star = None
        if spec.star_index is not None:
            self.star = mhss_stream(spec.star_index, spec.star_shift, prec)
        # binomial values at n = 1: C(a, 1) = a and C(a - 1, 0) = 1
        self.upper = [
            mp.mpf(1) if at_prev else mp.mpf(a) for a, at_prev in spec.binom_upper
        ]
        self.lower = [1 - b for b in spec.binom_lower]

    def step(self, n: int):
        spec = self.spec
        t = spec.coeff
        if self.strict is not None:
            if spec.strict_prev:
                v = self.strict_prev_val
                _, self.strict_prev_val = next(self.strict)
            else:
                _, v = next(self.strict)
            t *= v
        if self.star is not None:
            _, v = next(self.star)
            t *= v
        for i, (a, at_prev) in enumerate(spec.binom_upper):
            t *= self.upper[i]
            if at_prev:
                self.upper[i] *= (n + a - 1) / n
            else:
                self.upper[i] *= (n + a) / (n + 1)
        for i, b in enumerate(spec.binom_lower):
            w = self.lower[i]
            if w == 0:
                raise PoleError(f"binomial C(n - {b}, n) vanishes at n = {n}")
            t /= w
            self.lower[i] *= (n + 1 - b) / (n + 1)
        if t:
            for c, m in spec.powers:
                d = n + c
                if d == 0:
                    raise PoleError(f"denominator n + {c} vanishes at n = {n}")
                t *= d ** (-m)
        return t


def _spec_gen(specs, prec):
    states = [_SpecState(s, prec) for s in specs]
    n = 0
    while True:
        n += 1
        yield mp.fsum(st.step(n) for st in states)


def _spec_series(spec: TermSpec, window: asym.TailStrategy, prec) -> AsymSeries:
    emax = window.order
    S = AsymSeries.constant(spec.coeff, emax)
    if spec.strict_index is not None:
        E = prefix_expansion(spec.strict_index, spec.strict_shift, False, window, prec)
        if spec.strict_prev:
            E = E.shift_arg(-1)
        S = S * E
    if spec.star_index is not None:
        S = S * prefix_expansion(spec.star_index, spec.star_shift, True, window, prec)
    for a, at_prev in spec.binom_upper:
        G = gamma_ratio(a, emax)
        if at_prev:
            G = G.shift_arg(-1)
        S = S * G * (1 / mp.gamma(a))
    for b in spec.binom_lower:
        S = S * reciprocal(gamma_ratio(1 - b, emax)) * mp.gamma(1 - b)
    for c, m in spec.powers:
        S = S * power_shift(m, c, emax)
    return S


def _specs_series(specs, window, prec) -> AsymSeries:
    total = AsymSeries(emax=window.order)
    for s in specs:
        total = total + _spec_series(s, window, prec)
    return total.prune()


def _em_sum(builder, tol, strategy: TailStrategy, prec):
    """Escalating anchored-expansion summation.

    ``builder(window)`` must return (term generator, tail AsymSeries).
    The error estimate is driven by the observed expansion defect at the
    crossover; escalation raises the order and crossover until ``tol``
    holds or the level budget is spent.
    """
    with working(prec) as cfg:
        tol = _default_tol(cfg) if tol is None else mp.mpf(tol)
        best = None
        for level in range(_LEVELS):
            window = _expansion_window(strategy.em_order, level)
            N = max(min(window.n_direct, strategy.N_max), window.n_anchor)
            gen, series = builder(window)
            head = mp.mpf(0)
            last = mp.mpf(0)
            for _ in range(N):
                last = next(gen)
                head += last
            tail = tail_sum(series, N)
            defect = abs(last - series(N))
            err = 2 * N * defect + mp.ldexp(
                abs(head) + abs(tail) + 1, -cfg.work_bits + 12
            )
            val = ValueWithBound(head + tail, err, False)
            if best is None or err < best.abs_error:
                best = val
            if err <= tol:
                return val
        raise ToleranceNotReached(
            f"error estimate {mp.nstr(best.abs_error, 6)} exceeds tolerance "
            f"{mp.nstr(tol, 6)}",
            best=best,
        )


def _direct_bound_sum(specs, tol, strategy, prec):
    with working(prec) as cfg:
        tol = _default_tol(cfg) if tol is None else mp.mpf(tol)
        window = _expansion_window(strategy.em_order, 0)
        series = _specs_series(specs, window, prec)
        e0 = series.min_exponent()
        if e0 <= mp.mpf("1.01"):
            raise NoConvergence(
                f"leading tail exponent {mp.nstr(e0, 6)} too close to 1 for a "
                "direct bound"
            )
        gen = _spec_gen(specs, prec)
        head = mp.mpf(0)
        n = 0
        N = 2000
        best = None
        while True:
            envelope = mp.mpf(0)
            while n < N:
                n += 1
                t = next(gen)
                head += t
                if 2 * n >= N:
                    envelope = max(envelope, abs(t) * mp.mpf(n) ** e0)
            bound = mp.mpf("1.3") * envelope * mp.mpf(N) ** (1 - e0) / (e0 - 1)
            bound += mp.ldexp(abs(head) + 1, -cfg.work_bits + 12)
            val = ValueWithBound(head, bound, e0 >= 3)
            if best is None or bound < best.abs_error:
                best = val
            if bound <= tol:
                return val
            if 2 * N > strategy.N_max:
                raise ToleranceNotReached(
                    f"direct bound stalled at {mp.nstr(bound, 6)} after "
                    f"{N} terms",
                    best=best,
                )
            N *= 2


def _richardson_sum(specs, tol, strategy, prec):
    with working(prec) as cfg:
        tol = _default_tol(cfg) if tol is None else mp.mpf(tol)
        gen = _spec_gen(specs, prec)
        N = max(1000, strategy.N_max // 512)
        head = mp.mpf(0)
        n = 0
        snaps = []
        while len(snaps) < 4:
            while n < N:
                n += 1
                head += next(gen)
            snaps.append(head)
            N *= 2
        best = None
        while True:
            s1, s2, s3, s4 = snaps[-4:]
            d1, d2, d3 = s2 - s1, s3 - s2, s4 - s3
            if d2 == 0 or d1 == 0:
                return ValueWithBound(
                    s4, mp.ldexp(abs(s4) + 1, -cfg.work_bits + 12), False
                )
            r2, r3 = d2 / d1, d3 / d2
            ex2 = s3 + d2 * r2 / (1 - r2) if r2 != 1 else s3
            ex3 = s4 + d3 * r3 / (1 - r3) if r3 != 1 else s4
            err = 2 * abs(ex3 - ex2) + mp.ldexp(abs(s4) + 1, -cfg.work_bits + 12)
            val = ValueWithBound(ex3, err, False)
            if best is None or err < best.abs_error:
                best = val
            if err <= tol:
                return val
            if N > strategy.N_max:
                raise ToleranceNotReached(
                    f"extrapolation stalled at {mp.nstr(err, 6)}", best=best
                )
            while n < N:
                n += 1
                head += next(gen)
            snaps.append(head)
            N *= 2


def weighted_sum(specs, tol=None, strategy: TailStrategy | None = None,
                 prec: PrecisionConfig | None = None) -> ValueWithBound:
    """Sum over n >= 1 of the combined TermSpec summands."""
    specs = tuple(specs)
    if not specs:
        return ValueWithBound(0, 0, True)
    strategy = strategy or DEFAULT_TAIL
    if strategy.kind == "direct_bound":
        return _direct_bound_sum(specs, tol, strategy, prec)
    if strategy.kind == "richardson":
        return _richardson_sum(specs, tol, strategy, prec)
    return _em_sum(
        lambda w: (_spec_gen(specs, prec), _specs_series(specs, w, prec)),
        tol,
        strategy,
        prec,
    )


def _check_strict_shifts(k: Composition, a: ShiftVector):
    """Feasible denominators of the strict sum must stay positive.

    At slot i (0-based) the smallest index of a strictly decreasing chain
    is r - i, so the denominator is at least a_i + r - i - 1.
    """
    r = k.depth()
    for i in range(r):
        d = a[i] + r - i - 1
        if d == 0:
            raise PoleError(f"shift a_{i + 1} = {a[i]} puts a pole on the chain")
        if d < 0:
            raise DomainError(
                f"shift a_{i + 1} = {a[i]} makes a feasible denominator negative"
            )


def htmzv(k, a=None, tol=None, strategy=None,
          prec: PrecisionConfig | None = None) -> ValueWithBound:
    """Hurwitz-type multiple zeta value zeta(k; a) with vector shifts."""
    k, a = _coerce(k, a)
    if k.is_empty():
        return ValueWithBound(1, 0, True)
    if not k.admissible():
        raise NonAdmissible(f"leading exponent must be >= 2, got {k}")
    with working(prec):
        _check_strict_shifts(k, a)
        spec = term_spec(
            strict=Composition(k.parts[1:]),
            strict_shift=ShiftVector(a.shifts[1:]),
            strict_prev=True,
            powers=((a[0] - 1, k[0]),),
        )
        return weighted_sum([spec], tol, strategy, prec)


def htmzsv(k, a=None, tol=None, strategy=None,
           prec: PrecisionConfig | None = None) -> ValueWithBound:
    """Hurwitz-type multiple zeta-star value zeta*(k; a)."""
    k, a = _coerce(k, a)
    if k.is_empty():
        return ValueWithBound(1, 0, True)
    if not k.admissible():
        raise NonAdmissible(f"leading exponent must be >= 2, got {k}")
    with working(prec):
        for i in range(k.depth()):
            if a[i] == 0:
                raise PoleError(f"shift a_{i + 1} = 0 puts a pole at index 1")
            if a[i] < 0:
                raise DomainError(f"star shifts must be positive, got {a[i]}")
        spec = term_spec(
            star=Composition(k.parts[1:]),
            star_shift=ShiftVector(a.shifts[1:]),
            powers=((a[0] - 1, k[0]),),
        )
        return weighted_sum([spec], tol, strategy, prec)


def htmtv(k, alpha=1, tol=None, strategy=None,
          prec: PrecisionConfig | None = None) -> ValueWithBound:
    """Hurwitz-type multiple T-value T(k; alpha).

    Reduced to a shifted zeta value: T(k; alpha) = 2^(r - |k|)
    zeta(k; a) with a_j = (alpha + j - r) / 2, so T(k; 1) is the plain
    multiple T-value.
    """
    k = Composition(k)
    if k.is_empty():
        return ValueWithBound(1, 0, True)
    if not k.admissible():
        raise NonAdmissible(f"leading exponent must be >= 2, got {k}")
    with working(prec):
        alpha = mp.mpf(alpha)
        if alpha <= 0:
            raise DomainError(f"alpha must be positive, got {alpha}")
        r = k.depth()
        a = ShiftVector([(alpha + j - r) / 2 for j in range(1, r + 1)])
        spec = term_spec(
            strict=Composition(k.parts[1:]),
            strict_shift=ShiftVector(a.shifts[1:]),
            strict_prev=True,
            powers=((a[0] - 1, k[0]),),
            coeff=mp.ldexp(1, r - k.weight()),
        )
        return weighted_sum([spec], tol, strategy, prec)


def _geom_tail(env_next, q):
    """Tail bound env_next * (1 + q + q^2 + ...) for ratio bound q < 1."""
    if q >= 1:
        return mp.inf
    return env_next / (1 - q)


def mpl(k, x, tol=None, strategy=None,
        prec: PrecisionConfig | None = None) -> ValueWithBound:
    """Single-variable multiple polylogarithm Li_k(x) for 0 <= x <= 1.

    Direct summation with a rigorous log-majorant envelope on the tail;
    at x = 1 the admissible case delegates to :func:`htmzv`.
    """
    k = Composition(k)
    if k.is_empty():
        raise DomainError("mpl needs a nonempty index")
    strategy = strategy or DEFAULT_TAIL
    with working(prec) as cfg:
        x = mp.mpf(x)
        if not 0 <= x <= 1:
            raise DomainError(f"x must lie in [0, 1], got {x}")
        if x == 1:
            if not k.admissible():
                raise DomainError("Li_k(1) diverges for leading exponent 1")
            return htmzv(k, None, tol, strategy, prec)
        if x == 0:
            return ValueWithBound(0, 0, True)
        tol = _default_tol(cfg) if tol is None else mp.mpf(tol)
        r = k.depth()
        k1 = k[0]
        inner = mhs_stream(Composition(k.parts[1:]), None, prec)
        prev = mp.mpf(1) if r == 1 else mp.mpf(0)
        total = mp.mpf(0)
        xp = mp.mpf(1)
        n = 0
        while True:
            n += 1
            xp *= x
            if prev:
                total += xp * prev / mp.mpf(n) ** k1
            _, prev = next(inner)
            if n % 16 == 0 or n <= 32:
                # |coefficient of x^m| <= (2 + 2 log m)^(r-1) / m^(k1) and the
                # envelope ratio beyond n is at most x e^((r-1)/n)
                env = (
                    xp * x * (2 + 2 * mp.log(n + 1)) ** (r - 1)
                    / mp.mpf(n + 1) ** k1
                )
                q = x * mp.exp(mp.mpf(r - 1) / n)
                bound = _geom_tail(env, q)
                if bound <= tol:
                    fl = mp.ldexp(abs(total) + 1, -cfg.work_bits + 12)
                    return ValueWithBound(total, bound + fl, True)
            if n >= strategy.N_max:
                raise ToleranceNotReached(
                    f"Li tail bound not certified within {strategy.N_max} terms",
                    best=ValueWithBound(total, _geom_tail(
                        xp * x * (2 + 2 * mp.log(n + 1)) ** (r - 1)
                        / mp.mpf(n + 1) ** k1,
                        x * mp.exp(mp.mpf(r - 1) / n)), False),
                )


def mpl_landen(k, x, tol=None, strategy=None,
               prec: PrecisionConfig | None = None) -> ValueWithBound:
    """Li_k evaluated at x/(x-1) via the refinement expansion.

    The Landen map gives Li_k(x/(x-1)) = (-1)^r sum of Li_l(x) over all
    refinements l of k, valid for 0 <= x < 1.
    """
    k = Composition(k)
    if k.is_empty():
        raise DomainError("mpl_landen needs a nonempty index")
    with working(prec) as cfg:
        x = mp.mpf(x)
        if not 0 <= x < 1:
            raise DomainError(f"x must lie in [0, 1), got {x}")
        tol = _default_tol(cfg) if tol is None else mp.mpf(tol)
        terms = sorted(refinements(k), key=lambda l: l.parts)
        sub = tol / len(terms)
        total = ValueWithBound(0, 0, True)
        for l in terms:
            total = total + mpl(l, x, sub, strategy, prec)
        sign = -1 if k.depth() % 2 else 1
        return total * sign


def kta(k, x, tol=None, strategy=None,
        prec: PrecisionConfig | None = None) -> ValueWithBound:
    """The A-function A(k; x): the 2^r-weighted odd-frame analogue of Li.

        A(k; x) = 2^r sum_{m_1 > ... > m_r >= 1}
                  x^(2 m_1 - r) / prod_j (2 m_j - r + j - 1)^(k_j)

    for 0 <= x <= 1; at x = 1 it equals the multiple T-value T(k).
    """
    k = Composition(k)
    if k.is_empty():
        raise DomainError("kta needs a nonempty index")
    strategy = strategy or DEFAULT_TAIL
    with working(prec) as cfg:
        x = mp.mpf(x)
        if not 0 <= x <= 1:
            raise DomainError(f"x must lie in [0, 1], got {x}")
        if x == 1:
            if not k.admissible():
                raise DomainError("A(k; 1) diverges for leading exponent 1")
            return htmtv(k, 1, tol, strategy, prec)
        if x == 0:
            return ValueWithBound(0, 0, True)
        tol = _default_tol(cfg) if tol is None else mp.mpf(tol)
        r = k.depth()
        scale = mp.ldexp(1, r)
        x2 = x * x
        xp = x ** (2 - r)  # x^(2 m - r) at m = 1
        S = [mp.mpf(0)] * r + [mp.mpf(1)]
        total = mp.mpf(0)
        m = 0
        while True:
            m += 1
            # increasing-j update keeps S[j+1] at m-1, enforcing m_j > m_(j+1)
            delta = mp.mpf(0)
            for j in range(r):
                if S[j + 1]:
                    d = mp.mpf(2 * m - r + j)
                    inc = d ** (-k[j]) * S[j + 1]
                    S[j] += inc
                    if j == 0:
                        delta = inc
            if delta:
                total += scale * xp * delta
            xp *= x2
            if m % 16 == 0 or m <= 32:
                d1 = mp.mpf(max(2 * (m + 1) - r, 1))
                env = scale * xp * (2 + 2 * mp.log(2 * m + 2)) ** (r - 1) / d1 ** k[0]
                q = x2 * mp.exp(mp.mpf(r - 1) / m)
                bound = _geom_tail(env, q)
                if bound <= tol:
                    fl = mp.ldexp(abs(total) + 1, -cfg.work_bits + 12)
                    return ValueWithBound(total, bound + fl, True)
            if m >= strategy.N_max:
                raise ToleranceNotReached(
                    f"A-function tail bound not certified within "
                    f"{strategy.N_max} terms",
                    best=ValueWithBound(total, mp.mpf(1), False),
                )


def apery_I(k, kk: int, alpha, tol=None, strategy=None,
            prec: PrecisionConfig | None = None) -> ValueWithBound:
    """sum_n zeta_{n-1}(k_2..k_r) zeta*_n({1}_kk; 1-alpha)
    / (n^(k_1+1) C(n-alpha, n))."""
    k = Composition(k)
    if k.is_empty():
        raise DomainError("apery_I needs a nonempty index")
    if kk < 0:
        raise DomainError("kk must be >= 0")
    with working(prec):
        alpha = mp.mpf(alpha)
        if alpha >= 1:
            raise DomainError(f"alpha must be < 1, got {alpha}")
        spec = term_spec(
            strict=Composition(k.parts[1:]),
            strict_prev=True,
            star=ones(kk),
            star_shift=1 - alpha,
            powers=((0, k[0] + 1),),
            binom_lower=(alpha,),
        )
        return weighted_sum([spec], tol, strategy, prec)


def apery_II(k_head: int, star_tail, m: int, alpha, tol=None, strategy=None,
             prec: PrecisionConfig | None = None) -> ValueWithBound:
    """sum_n C(n+alpha-1, n) zeta_n({1}_k; alpha) zeta*_n(tail) / n^m."""
    if k_head < 0 or m < 1:
        raise DomainError("need k_head >= 0 and m >= 1")
    star_tail = Composition(star_tail if star_tail is not None else ())
    with working(prec):
        alpha = mp.mpf(alpha)
        if alpha >= 1 or (alpha <= 0 and alpha == mp.floor(alpha)):
            raise DomainError(f"alpha must be < 1 and not a nonpositive "
                              f"integer, got {alpha}")
        spec = term_spec(
            strict=ones(k_head),
            strict_shift=alpha,
            star=star_tail,
            powers=((0, m),),
            binom_upper=((alpha, False),),
        )
        return weighted_sum([spec], tol, strategy, prec)


def apery_III(k, l, m: int, alpha, beta, tol=None, strategy=None,
              prec: PrecisionConfig | None = None) -> ValueWithBound:
    """sum_n C(n+alpha-1, n)/C(n-beta, n) zeta_n(k; alpha)
    zeta*_n(l; 1-beta) / n^(m+2); the two-binomial family, m >= -1."""
    if m < -1:
        raise DomainError("need m >= -1")
    k = Composition(k if k is not None else ())
    l = Composition(l if l is not None else ())
    with working(prec):
        alpha = mp.mpf(alpha)
        beta = mp.mpf(beta)
        if alpha >= 1 or beta >= 1:
            raise DomainError("alpha and beta must be < 1")
        if alpha <= 0 and alpha == mp.floor(alpha):
            raise DomainError(f"alpha must not be a nonpositive integer, "
                              f"got {alpha}")
        spec = term_spec(
            strict=k,
            strict_shift=alpha,
            star=l,
            star_shift=1 - beta,
            powers=((0, m + 2),),
            binom_upper=((alpha, False),),
            binom_lower=(beta,),
        )
        return weighted_sum([spec], tol, strategy, prec)


def param_euler_sum(m: int, a, b, tol=None, strategy=None,
                    prec: PrecisionConfig | None = None) -> ValueWithBound:
    """sum_n zeta_{n-1}({1}_m) / ((n + a)(n + b))."""
    if m < 0:
        raise DomainError("m must be >= 0")
    with working(prec):
        a = mp.mpf(a)
        b = mp.mpf(b)
        for c in (a, b):
            if c <= -1 and c == mp.floor(c):
                raise DomainError(f"offset {c} puts a pole on the index set")
        powers = ((a, 2),) if a == b else ((a, 1), (b, 1))
        spec = term_spec(strict=ones(m), strict_prev=True, powers=powers)
        return weighted_sum([spec], tol, strategy, prec)


def param_euler_pow(m: int, k: int, alpha, tol=None, strategy=None,
                    prec: PrecisionConfig | None = None) -> ValueWithBound:
    """sum_n zeta_{n-1}({1}_m) / (n + alpha)^(k+1)."""
    if m < 0 or k < 1:
        raise DomainError("need m >= 0 and k >= 1")
    with working(prec):
        alpha = mp.mpf(alpha)
        if alpha <= -1 and alpha == mp.floor(alpha):
            raise DomainError(f"offset {alpha} puts a pole on the index set")
        spec = term_spec(strict=ones(m), strict_prev=True,
                         powers=((alpha, k + 1),))
        return weighted_sum([spec], tol, strategy, prec)


def arakawa_kaneko(kind: str, s: int, k, tol=None, strategy=None,
                   prec: PrecisionConfig | None = None) -> ValueWithBound:
    """Values of the xi / psi / eta zeta functions at integer s >= 1.

    Each is a finite combination over weak compositions j of s - 1 into
    the depth of the transformed index b = dual-reversed k with its first
    entry raised: sum_j B(b; j) Z(b + j) with Z a multiple zeta value
    (xi), multiple T-value (psi), or zeta-star value with the extra sign
    (-1)^(depth(k) - 1) (eta).
    """
    if kind not in ("xi", "psi", "eta"):
        raise DomainError(f"kind must be xi, psi or eta, got {kind!r}")
    if s < 1:
        raise DomainError("s must be >= 1")
    k = Composition(k)
    if k.is_empty():
        raise DomainError("needs a nonempty index")
    with working(prec) as cfg:
        tol = _default_tol(cfg) if tol is None else mp.mpf(tol)
        base = theorem_dual(k)
        jlist = list(weak_compositions(s - 1, base.depth()))
        weights = [binom_weight(base, j) for j in jlist]
        sub = tol / sum(weights)
        total = ValueWithBound(0, 0, True)
        for j, w in zip(jlist, weights):
            idx = index_add(base, j)
            if kind == "xi":
                v = htmzv(idx, None, sub, strategy, prec)
            elif kind == "psi":
                v = htmtv(idx, 1, sub, strategy, prec)
            else:
                v = htmzsv(idx, None, sub, strategy, prec)
            total = total + v * w
        if kind == "eta" and k.depth() % 2 == 0:
            total = -total
        return total


_pbc_cache = {}


def _pbc_stream(k_parts, shift, alpha, prec):
    """Yield the weighted strict prefix W_1, W_2, ... where the innermost
    index carries the factor C(n_r + alpha - 2, n_r - 1)."""
    r = len(k_parts)
    with working(prec):
        S = [mp.mpf(0)] * r + [mp.mpf(1)]
        b = mp.mpf(1)
        m = 0
        while True:
            m += 1
            for j in range(r):
                if S[j + 1]:
                    w = (m + shift - 1) ** (-k_parts[j])
                    if j == r - 1:
                        w *= b
                    S[j] += w * S[j + 1]
            b *= (m + alpha - 1) / m
            yield +S[0]


def _pbc_exact(n, k_parts, shift, alpha, prec):
    gen = _pbc_stream(k_parts, shift, alpha, prec)
    v = mp.mpf(0)
    for _ in range(n):
        v = next(gen)
    return v


def _pbc_prefix(k_parts, shift, alpha, window, prec) -> AsymSeries:
    """Anchored expansion of the binomial-weighted strict prefix."""
    with working(prec) as cfg:
        key = (k_parts, shift, alpha, window, cfg.work_bits)
        hit = _pbc_cache.get(key)
        if hit is not None:
            return hit
        emax = window.order
        if len(k_parts) == 1:
            T = (
                gamma_ratio(alpha, emax).shift_arg(-1)
                * (1 / mp.gamma(alpha))
                * power_shift(k_parts[0], shift - 1, emax)
            )
        else:
            inner = _pbc_prefix(k_parts[1:], shift, alpha, window, prec)
            T = power_shift(k_parts[0], shift - 1, emax) * inner.shift_arg(-1)
        V = asym.em_antidifference(T).prune()
        n0 = window.n_anchor
        exact = _pbc_exact(n0, k_parts, shift, alpha, prec)
        out = (V + (exact - V(n0))).prune()
        _pbc_cache[key] = out
        return out


def htmzv_pbc(alpha, k, shift, tol=None, strategy=None,
              prec: PrecisionConfig | None = None) -> ValueWithBound:
    """Nested zeta sum with a parametric binomial on the innermost index:

        sum_{n_1 > ... > n_r >= 1} C(n_r + alpha - 2, n_r - 1)
                                   / prod_j (n_j + shift - 1)^(k_j).

    ``shift`` is the full denominator shift (the depth-1 case with
    k = (1) equals the beta function B(1 - alpha, shift) when it
    converges).  At alpha = 0 the binomial pins n_r = 1 and the sum
    collapses to a lower-depth value.
    """
    k = Composition(k)
    if k.is_empty():
        raise DomainError("needs a nonempty index")
    strategy = strategy or DEFAULT_TAIL
    r = k.depth()
    with working(prec):
        alpha = mp.mpf(alpha)
        shift = mp.mpf(shift)
        if shift <= 0:
            raise DomainError(f"shift must be positive, got {shift}")
        if r >= 2 and k[0] < 2:
            raise NonAdmissible(f"leading exponent must be >= 2, got {k}")
        if alpha == 0:
            # C(n_r - 2, n_r - 1) vanishes except at n_r = 1
            w = shift ** (-k[r - 1])
            if r == 1:
                return ValueWithBound(w, 0, True)
            head = Composition(k.parts[:-1])
            inner = htmzv(head, ShiftVector.constant(shift + 1, r - 1),
                          tol, strategy, prec)
            return inner * w
        if alpha < 0 and alpha == mp.floor(alpha):
            raise DomainError(f"alpha must not be a negative integer, "
                              f"got {alpha}")
        if r == 1:
            if k[0] + 1 - alpha <= 1:
                raise NoConvergence(
                    f"depth-1 sum diverges for exponent {k[0]} at "
                    f"alpha = {alpha}"
                )
            spec = term_spec(
                binom_upper=((alpha, True),),
                powers=((shift - 1, k[0]),),
            )
            return weighted_sum([spec], tol, strategy, prec)

        def builder(window):
            inner_series = _pbc_prefix(k.parts[1:], shift, alpha, window, prec)
            series = (
                power_shift(k[0], shift - 1, window.order)
                * inner_series.shift_arg(-1)
            )

            def gen():
                stream = _pbc_stream(k.parts[1:], shift, alpha, prec)
                prev = mp.mpf(0)
                n = 0
                while True:
                    n += 1
                    yield prev * (n + shift - 1) ** (-k[0]) if prev else mp.mpf(0)
                    prev = next(stream)

            return gen(), series

        return _em_sum(builder, tol, strategy, prec)
