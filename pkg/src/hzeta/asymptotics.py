"""Anchored asymptotic expansions for slowly convergent tails.

The central object is :class:`AsymSeries`, a finite linear combination

    f(n) ~ sum_{(e, j)} c_{e,j} * n^(-e) * log(n)^j

with real exponents e (negative e means growth) and integer log powers
j >= 0, truncated at a maximal exponent ``emax``.  The algebra supports
products, argument shifts f(n+c), termwise antiderivatives, and the
Euler-Maclaurin antidifference V with V(n) - V(n-1) ~ t(n), which turns
a term expansion into a partial-sum expansion up to a constant.

That constant is anchored numerically: prefix expansions of the nested
harmonic sums are built recursively and pinned to an exact dynamic-program
evaluation at a moderate index.  Tails of outer series whose terms have
an AsymSeries expansion are then summed in closed form through s-derivatives
of the Hurwitz zeta function.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath as mp

from .compositions import Composition
from .errors import NoConvergence
from .finite_sums import ShiftVector, _coerce, mhs, mhss
from .precision import PrecisionConfig, working


@dataclass(frozen=True)
class TailStrategy:
    """Truncation controls for anchored expansions and tail summation.

    ``order``: largest kept exponent in n^(-e) (graded truncation degree).
    ``n_anchor``: index where expansion constants are pinned to exact sums.
    ``n_direct``: outer series are summed exactly up to this index, the
    remainder via the expansion.
    """

    order: int = 14
    n_anchor: int = 160
    n_direct: int = 400

    def __post_init__(self):
        if self.order < 4 or self.n_anchor < 8 or self.n_direct < self.n_anchor:
            raise ValueError("degenerate tail strategy")


DEFAULT_STRATEGY = TailStrategy()

_DROP = None  # per-context drop threshold, see _drop_tol


def _drop_tol():
    # far below any achievable accuracy at the working precision
    return mp.ldexp(1, -(mp.mp.prec + 60))


class AsymSeries:
    """Truncated combination of n^(-e) log(n)^j terms."""

    __slots__ = ("terms", "emax")

    def __init__(self, terms=None, emax=14):
        self.emax = mp.mpf(emax)
        self.terms = {}
        if terms:
            for (e, j), c in terms.items():
                self._accum(mp.mpf(e), int(j), mp.mpf(c))

    def _accum(self, e, j, c):
        if c == 0 or e > self.emax:
            return
        key = (e, j)
        cur = self.terms.get(key)
        new = c if cur is None else cur + c
        if new == 0:
            self.terms.pop(key, None)
        else:
            self.terms[key] = new

    @classmethod
    def constant(cls, c, emax):
        return cls({(mp.mpf(0), 0): mp.mpf(c)}, emax)

    @classmethod
    def monomial(cls, c, e, j, emax):
        return cls({(mp.mpf(e), int(j)): mp.mpf(c)}, emax)

    def copy(self):
        out = AsymSeries(emax=self.emax)
        out.terms = dict(self.terms)
        return out

    def __add__(self, other):
        out = self.copy()
        if isinstance(other, AsymSeries):
            for (e, j), c in other.terms.items():
                out._accum(e, j, c)
        else:
            out._accum(mp.mpf(0), 0, mp.mpf(other))
        return out

    __radd__ = __add__

    def __neg__(self):
        out = AsymSeries(emax=self.emax)
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other if isinstance(other, AsymSeries) else -mp.mpf(other))

    def __mul__(self, other):
        out = AsymSeries(emax=self.emax)
        if isinstance(other, AsymSeries):
            for (e1, j1), c1 in self.terms.items():
                for (e2, j2), c2 in other.terms.items():
                    out._accum(e1 + e2, j1 + j2, c1 * c2)
        else:
            other = mp.mpf(other)
            for (e, j), c in self.terms.items():
                out._accum(e, j, c * other)
        return out

    __rmul__ = __mul__

    def prune(self, tol=None):
        """Drop terms with negligible coefficients."""
        tol = tol if tol is not None else _drop_tol()
        out = AsymSeries(emax=self.emax)
        out.terms = {k: c for k, c in self.terms.items() if abs(c) > tol}
        return out

    def min_exponent(self):
        return min((e for (e, j) in self.terms), default=self.emax + 1)

    def coefficient(self, e, j):
        e = mp.mpf(e)
        for (ee, jj), c in self.terms.items():
            if jj == j and abs(ee - e) < mp.mpf("1e-20"):
                return c
        return mp.mpf(0)

    def drop_term(self, e, j):
        e = mp.mpf(e)
        out = AsymSeries(emax=self.emax)
        out.terms = {
            (ee, jj): c
            for (ee, jj), c in self.terms.items()
            if not (jj == j and abs(ee - e) < mp.mpf("1e-20"))
        }
        return out

    def __call__(self, n):
        n = mp.mpf(n)
        ln = mp.log(n)
        total = mp.mpf(0)
        for (e, j), c in self.terms.items():
            total += c * n ** (-e) * ln ** j
        return total

    def derivative(self):
        """Termwise d/dn."""
        out = AsymSeries(emax=self.emax)
        for (e, j), c in self.terms.items():
            out._accum(e + 1, j, -c * e)
            if j >= 1:
                out._accum(e + 1, j - 1, c * j)
        return out

    def antiderivative(self):
        """Termwise antiderivative in n (constants dropped).

        x^(-1) log^j -> log^(j+1)/(j+1); otherwise reduce the log power
        through integration by parts.
        """
        out = AsymSeries(emax=self.emax)
        for (e, j), c in self.terms.items():
            if abs(e - 1) < mp.mpf("1e-25"):
                out._accum(mp.mpf(0), j + 1, c / (j + 1))
            else:
                # int x^(-e) log^j = x^(1-e) sum_i a_i log^i with
                # a_j = 1/(1-e), a_(i-1) = -i a_i/(1-e)
                coef = c / (1 - e)
                jj = j
                while True:
                    out._accum(e - 1, jj, coef)
                    if jj == 0:
                        break
                    coef = -coef * jj / (1 - e)
                    jj -= 1
        return out

    def shift_arg(self, c):
        """The expansion of n -> f(n + c) re-expanded in n."""
        c = mp.mpf(c)
        if c == 0:
            return self.copy()
        out = AsymSeries(emax=self.emax)
        log_s = log_shift(c, self.emax)
        log_pows = {0: AsymSeries.constant(1, self.emax)}
        for (e, j), coeff in self.terms.items():
            if j not in log_pows:
                p = log_pows[max(log_pows)]
                for jj in range(max(log_pows) + 1, j + 1):
                    p = p * log_s
                    log_pows[jj] = p
            piece = power_shift(e, c, self.emax) * log_pows[j] * coeff
            for key, cc in piece.terms.items():
                out._accum(key[0], key[1], cc)
        return out


def power_shift(s, c, emax):
    """(n + c)^(-s) expanded in n: sum_i C(-s, i) c^i n^(-s-i)."""
    s = mp.mpf(s)
    c = mp.mpf(c)
    out = AsymSeries(emax=emax)
    coeff = mp.mpf(1)
    i = 0
    while s + i <= mp.mpf(emax):
        out._accum(s + i, 0, coeff)
        coeff *= (-s - i) / (i + 1) * c
        i += 1
        if coeff == 0:
            break
    return out


def log_shift(c, emax):
    """log(n + c) expanded in n: log n + sum_i (-1)^(i+1) (c/n)^i / i."""
    c = mp.mpf(c)
    out = AsymSeries(emax=emax)
    out._accum(mp.mpf(0), 1, mp.mpf(1))
    i = 1
    cp = c
    while i <= mp.mpf(emax):
        out._accum(mp.mpf(i), 0, -((-1) ** i) * cp / i)
        cp *= c
        i += 1
    return out


def exp_decaying(R):
    """exp(R) for a series whose every exponent is positive."""
    me = R.min_exponent()
    if me <= 0:
        raise ValueError("exp_decaying needs strictly decaying input")
    out = AsymSeries.constant(1, R.emax)
    power = AsymSeries.constant(1, R.emax)
    m = 1
    while (m - 1) * me <= mp.mpf(R.emax):
        power = power * R
        if not power.terms:
            break
        out = out + power * (1 / mp.factorial(m))
        m += 1
    return out


def inverse_one_plus(R):
    """1 / (1 + R) for a series whose every exponent is positive."""
    me = R.min_exponent()
    if me <= 0:
        raise ValueError("inverse_one_plus needs strictly decaying input")
    out = AsymSeries.constant(1, R.emax)
    power = AsymSeries.constant(1, R.emax)
    m = 1
    while (m - 1) * me <= mp.mpf(R.emax):
        power = power * R * (-1)
        if not power.terms:
            break
        out = out + power
        m += 1
    return out


def reciprocal(S):
    """1 / S for a series whose leading term is a pure power n^(-e0).

    Factors out the leading monomial and inverts the decaying remainder
    with :func:`inverse_one_plus`; exponents of the result start at -e0.
    """
    S = S.prune()
    if not S.terms:
        raise ValueError("reciprocal of an empty series")
    e0 = S.min_exponent()
    lead_logs = [j for (e, j) in S.terms if abs(e - e0) < mp.mpf("1e-20")]
    if lead_logs != [0]:
        raise ValueError("reciprocal needs a log-free leading term")
    c0 = S.coefficient(e0, 0)
    R = AsymSeries(emax=S.emax)
    for (e, j), c in S.terms.items():
        if j == 0 and abs(e - e0) < mp.mpf("1e-20"):
            continue
        R._accum(e - e0, j, c / c0)
    inv = inverse_one_plus(R)
    out = AsymSeries(emax=S.emax)
    for (e, j), c in inv.terms.items():
        out._accum(e - e0, j, c / c0)
    return out


def em_antidifference(T):
    """V with V(n) - V(n-1) ~ T(n), so sum_{m<=n} T(m) = const + V(n).

    Euler-Maclaurin: V = int T + T/2 + sum_k B_2k/(2k)! T^(2k-1), truncated
    by the series grading.
    """
    V = T.antiderivative() + T * mp.mpf("0.5")
    D = T.derivative()  # odd-order derivatives T^(2k-1)
    k = 1
    while D.terms:
        V = V + D * (mp.bernoulli(2 * k) / mp.factorial(2 * k))
        D = D.derivative().derivative()
        k += 1
        if k > 60:
            break
    return V


def _stirling_log_gamma(c, emax):
    """log Gamma(n + c) minus the constant log sqrt(2 pi), as an AsymSeries
    with growth terms (exponents -1 and 0)."""
    c = mp.mpf(c)
    lam = log_shift(c, emax)  # log(n + c)
    poly = AsymSeries(emax=emax)
    poly._accum(mp.mpf(-1), 0, mp.mpf(1))  # n
    poly._accum(mp.mpf(0), 0, c - mp.mpf("0.5"))
    out = poly * lam
    out._accum(mp.mpf(-1), 0, mp.mpf(-1))  # -n
    out._accum(mp.mpf(0), 0, -c)  # -(n + c), constant part
    k = 1
    while 2 * k - 1 <= mp.mpf(emax):
        out = out + power_shift(2 * k - 1, c, emax) * (
            mp.bernoulli(2 * k) / (2 * k * (2 * k - 1))
        )
        k += 1
    return out


def gamma_ratio(c, emax):
    """Gamma(n + c) / Gamma(n + 1) as an AsymSeries ~ n^(c-1) (1 + ...)."""
    c = mp.mpf(c)
    D = (_stirling_log_gamma(c, emax) - _stirling_log_gamma(mp.mpf(1), emax)).prune()
    # D = (c - 1) log n + kappa + decaying; kappa is analytically zero
    growth = [abs(coef) for (e, j), coef in D.terms.items() if e < 0]
    if growth and max(growth) > _drop_tol():
        raise AssertionError("Stirling difference kept a growth term")
    lead = D.coefficient(0, 1)
    kappa = D.coefficient(0, 0)
    R = D.drop_term(0, 1).drop_term(0, 0)
    R.terms = {k: v for k, v in R.terms.items() if k[0] > 0}
    out = exp_decaying(R) * mp.exp(kappa)
    shifted = AsymSeries(emax=out.emax)
    for (e, j), coef in out.terms.items():
        shifted._accum(e - lead, j, coef)
    return shifted


_prefix_cache = {}


def prefix_expansion(k, a=None, star=False, strategy=DEFAULT_STRATEGY,
                     prec: PrecisionConfig | None = None):
    """AsymSeries E with E(n) ~ zeta_n(k; a) (or the star sum) for large n.

    Built by the nested-sum recursion: the outermost summand is expanded,
    Euler-Maclaurin turns it into a partial-sum expansion, and the free
    constant is anchored against the exact dynamic program at
    ``strategy.n_anchor``.
    """
    k, a = _coerce(k, a)
    with working(prec) as cfg:
        key = (k.parts, a.shifts, bool(star), strategy, cfg.work_bits)
        hit = _prefix_cache.get(key)
        if hit is not None:
            return hit
        emax = strategy.order
        r = k.depth()
        if r == 0:
            out = AsymSeries.constant(1, emax)
        else:
            tail = prefix_expansion(
                Composition(k.parts[1:]), ShiftVector(a.shifts[1:]), star,
                strategy, prec,
            )
            inner = tail if star else tail.shift_arg(-1)
            T = power_shift(k[0], a[0] - 1, emax) * inner
            V = em_antidifference(T).prune()
            n0 = strategy.n_anchor
            exact = mhss(n0, k, a, prec) if star else mhs(n0, k, a, prec)
            out = V + (exact - V(n0))
            out = out.prune()
        _prefix_cache[key] = out
        return out


def tail_sum(series, n_start):
    """sum_{n > n_start} of the termwise expansion, in closed form.

    Each n^(-e) log^j n term sums to (-1)^j zeta^(j)(e, n_start + 1) in the
    s-derivative sense; exponents e <= 1 with non-negligible coefficients
    mean divergence and raise :class:`NoConvergence`.
    """
    a = mp.mpf(n_start + 1)
    total = mp.mpf(0)
    for (e, j), c in series.terms.items():
        if e <= 1:
            if abs(c) > _drop_tol() * mp.mpf(2) ** 40:
                raise NoConvergence(
                    f"tail term n^(-{e}) log^{j} with coefficient {c} diverges"
                )
            continue
        total += c * (-1) ** j * mp.zeta(e, a, j) if j else c * mp.zeta(e, a)
    return total


def outer_sum(exact_term, term_series, strategy=DEFAULT_STRATEGY,
              prec: PrecisionConfig | None = None):
    """Sum_{n>=1} exact_term(n), using ``term_series`` for the tail.

    ``exact_term(n)`` must be the exact summand; ``term_series`` its
    AsymSeries expansion, accurate for n beyond ``strategy.n_anchor``.
    Returns (value, error_estimate); the estimate is heuristic, driven by
    the observed expansion defect at the crossover index.
    """
    with working(prec):
        N = strategy.n_direct
        head = mp.mpf(0)
        for n in range(1, N + 1):
            head += exact_term(n)
        tail = tail_sum(term_series, N)
        defect = abs(exact_term(N) - term_series(N))
        err = 2 * N * defect + mp.ldexp(abs(head) + abs(tail) + 1, -mp.mp.prec + 10)
        return head + tail, err
