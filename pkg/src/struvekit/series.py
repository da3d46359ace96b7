"""Power-series route for I_nu, L_nu and their difference M_nu = L_nu - I_nu.

Both ascending series share the shape sum_n (x/2)^(2n+p) / (G1(n) G2(n)).
Terms are generated by closed-form term ratios (one multiply per term, no
per-term gamma calls) and accumulated with compensated summation.

M_nu is the cancellation-prone case: I_nu grows like e^x while M_nu decays
algebraically (or exponentially at nu = +-1/2), so the merged alternating
series has condition number ~ 2 I_nu(x) / |M_nu(x)|. The float64 pass
tracks that condition number; whenever it cannot certify 1e-12 relative
error the same algorithm is re-run on arbitrary-precision floats with the
working precision sized from the measured condition. Beyond ~80 working
digits the evaluation is refused (CancellationError) - the quadrature
route is the authoritative evaluator in that regime.
"""

from __future__ import annotations

import math

import mpmath as mp

from .core import SERIES_DEFAULTS, EvalPoint, FuncValue, Method, SeriesConfig
from .errors import CancellationError, DomainError, NonConvergenceError
from .gammafuncs import log_gamma

_EPS = 2.220446049250313e-16

#: Argument beyond which the auto router hands M_nu evaluation to the
#: quadrature route; the merged series escalates its working precision
#: around the same region.
X_CANCEL_MAX = 8.0

#: Working-digit ceiling for the escalated path.
_MAX_WORK_DIGITS = 80


class _Kahan:
    """Compensated accumulator: error stays O(eps) independent of length."""

    __slots__ = ("total", "carry")

    def __init__(self) -> None:
        self.total = 0.0
        self.carry = 0.0

    def add(self, value: float) -> None:
        y = value - self.carry
        t = self.total + y
        self.carry = (t - self.total) - y
        self.total = t


def _positive_series(p: EvalPoint, cfg: SeriesConfig, shift: float,
                     log_norm: float) -> tuple[float, float]:
    """Sum sum_n (x/2)^(2n+nu+shift) / (Gamma(n+1+a) Gamma(n+nu+1+a)) style
    series with all-positive terms.

    shift is 0 for I_nu (denominators Gamma(n+1) Gamma(n+nu+1)) and 1 for
    L_nu (denominators Gamma(n+3/2) Gamma(n+nu+3/2)). log_norm is the log
    of the first term. Returns (value, abs_err).
    """
    q = 0.25 * p.x * p.x
    off = 1.0 if shift == 0.0 else 1.5
    term = math.exp(log_norm)
    acc = _Kahan()
    for n in range(cfg.max_terms):
        acc.add(term)
        term *= q / ((n + off) * (n + p.nu + off))
        if term < cfg.rel_tol * acc.total and q / ((n + 1 + off) * (n + 1 + p.nu + off)) < 0.5:
            return acc.total, 2.0 * term + 4.0 * _EPS * acc.total
    raise NonConvergenceError(
        f"series for (nu={p.nu:g}, x={p.x:g}) did not settle in {cfg.max_terms} terms")


def bessel_i(p: EvalPoint, cfg: SeriesConfig = SERIES_DEFAULTS) -> FuncValue:
    """Modified Bessel function of the first kind I_nu(x), nu > -1, x >= 0.

    Ascending series, https://dlmf.nist.gov/10.25.E2. At x = 0 the limit
    is returned: 1 for nu = 0, 0 for nu > 0, +inf for nu in (-1, 0).
    """
    if p.nu <= -1.0:
        raise DomainError("bessel_i series requires nu > -1")
    if p.x < 0.0:
        raise DomainError("bessel_i requires x >= 0")
    if p.x == 0.0:
        if p.nu == 0.0:
            return FuncValue(1.0, 0.0, Method.SERIES)
        return FuncValue(0.0 if p.nu > 0 else math.inf, 0.0, Method.SERIES)
    log_first = p.nu * math.log(0.5 * p.x) - log_gamma(p.nu + 1.0)
    value, err = _positive_series(p, cfg, 0.0, log_first)
    return FuncValue(value, err, Method.SERIES)


def struve_l(p: EvalPoint, cfg: SeriesConfig = SERIES_DEFAULTS) -> FuncValue:
    """Modified Struve function of the first kind L_nu(x), nu > -3/2, x >= 0.

    Ascending series, https://dlmf.nist.gov/11.2.E2. At x = 0 the limit is
    returned: 0 for nu > -1, 2/pi for nu = -1, +inf for nu in (-3/2, -1).
    """
    if p.nu <= -1.5:
        raise DomainError("struve_l series requires nu > -3/2")
    if p.x < 0.0:
        raise DomainError("struve_l requires x >= 0")
    if p.x == 0.0:
        if p.nu > -1.0:
            return FuncValue(0.0, 0.0, Method.SERIES)
        if p.nu == -1.0:
            return FuncValue(2.0 / math.pi, 0.0, Method.SERIES)
        return FuncValue(math.inf, 0.0, Method.SERIES)
    log_first = (p.nu + 1.0) * math.log(0.5 * p.x) - log_gamma(1.5) - log_gamma(p.nu + 1.5)
    value, err = _positive_series(p, cfg, 1.0, log_first)
    return FuncValue(value, err, Method.SERIES)


def _merged_float(p: EvalPoint, cfg: SeriesConfig) -> tuple[float, float, float, int]:
    """One float64 pass over the merged M series.

    Terms are interleaved in increasing powers of x: -i_0, +l_0, -i_1, ...
    Returns (sum, magnitude_sum, truncation_bound, terms_used).
    """
    q = 0.25 * p.x * p.x
    lx = math.log(0.5 * p.x)
    i_term = math.exp(p.nu * lx - log_gamma(p.nu + 1.0))
    l_term = math.exp((p.nu + 1.0) * lx - log_gamma(1.5) - log_gamma(p.nu + 1.5))
    acc = _Kahan()
    smax = 0.0
    for n in range(cfg.max_terms):
        acc.add(-i_term)
        acc.add(l_term)
        smax += i_term + l_term
        if smax > 1e307:
            raise CancellationError(
                f"M series at (nu={p.nu:g}, x={p.x:g}) overflows float64; "
                "use the quadrature route")
        i_term *= q / ((n + 1.0) * (n + p.nu + 1.0))
        l_term *= q / ((n + 1.5) * (n + p.nu + 1.5))
        nxt = max(i_term, l_term)
        ratio_cap = q / ((n + 2.0) * (n + p.nu + 2.0))
        if nxt < cfg.rel_tol * abs(acc.total) and ratio_cap < 0.5:
            return acc.total, smax, 2.0 * (i_term + l_term), 2 * (n + 1)
    raise NonConvergenceError(
        f"merged series for (nu={p.nu:g}, x={p.x:g}) did not settle in {cfg.max_terms} terms")


def _merged_mp(p: EvalPoint, cfg: SeriesConfig, digits: int) -> tuple[float, float]:
    """Escalated-precision pass over the merged series. Returns (value, rel_trunc)."""
    with mp.workdps(digits):
        nu = mp.mpf(p.nu)
        x = mp.mpf(p.x)
        q = (x / 2) ** 2
        i_term = (x / 2) ** nu / mp.gamma(nu + 1)
        l_term = (x / 2) ** (nu + 1) / (mp.gamma(mp.mpf(1.5)) * mp.gamma(nu + mp.mpf(1.5)))
        total = mp.mpf(0)
        for n in range(cfg.max_terms):
            total += l_term - i_term
            i_term *= q / ((n + 1) * (n + nu + 1))
            l_term *= q / ((n + mp.mpf(1.5)) * (n + nu + mp.mpf(1.5)))
            nxt = max(i_term, l_term)
            if total and nxt < cfg.rel_tol * abs(total) and q / ((n + 2) * (n + nu + 2)) < 0.5:
                return float(total), float(2 * nxt / abs(total))
        raise NonConvergenceError(
            f"merged series for (nu={p.nu:g}, x={p.x:g}) did not settle in {cfg.max_terms} terms")


def struve_m_series(p: EvalPoint, cfg: SeriesConfig = SERIES_DEFAULTS) -> FuncValue:
    """Modified Struve function of the second kind M_nu(x) = L_nu(x) - I_nu(x).

    Merged termwise summation of the two ascending series in increasing
    powers of x, compensated; escalates internal precision when the
    measured condition number makes float64 untrustworthy. nu > -1, x >= 0.

    Raises CancellationError when even the escalated path would need more
    than 80 working digits (use the quadrature route there).
    """
    if p.nu <= -1.0:
        raise DomainError("struve_m_series requires nu > -1 (I-series domain)")
    if p.x < 0.0:
        raise DomainError("struve_m_series requires x >= 0")
    if p.x == 0.0:
        if p.nu > 0.0:
            return FuncValue(0.0, 0.0, Method.SERIES)
        if p.nu == 0.0:
            return FuncValue(-1.0, 0.0, Method.SERIES)
        return FuncValue(-math.inf, 0.0, Method.SERIES)

    value, smax, trunc, used = _merged_float(p, cfg)
    scale = max(abs(value), smax * 1e-18)
    cancel = used * _EPS * smax
    if (trunc + cancel) <= 1e-12 * scale:
        return FuncValue(value, trunc + cancel, Method.SERIES)

    # The float64 sum is cancellation noise at this point, so it cannot size
    # the escalated precision. Each arbitrary-precision pass is instead
    # checked against the value it actually produced: the rounding floor of
    # a pass at d digits is ~ smax * 10**-d, and the pass is only accepted
    # once that floor sits at least ten digits below |value|. A noise-level
    # result forces a strictly larger d, so the loop either certifies or
    # hits the digit ceiling and refuses.
    if not math.isfinite(smax):
        raise CancellationError(
            f"M series at (nu={p.nu:g}, x={p.x:g}) overflows the merged pass; "
            "use the quadrature route")
    digits = 16 + max(0, int(math.ceil(math.log10(smax / scale)))) + 10
    while True:
        if digits > _MAX_WORK_DIGITS:
            raise CancellationError(
                f"M series at (nu={p.nu:g}, x={p.x:g}) needs about {digits} "
                "working digits; use the quadrature route")
        mp_value, rel_trunc = _merged_mp(p, cfg, digits)
        needed = 16 + 10 + max(0, int(math.ceil(math.log10(
            smax / max(abs(mp_value), 1e-300)))))
        if needed <= digits:
            break
        digits = needed
    noise = smax * 10.0 ** (10 - digits)
    abs_err = abs(mp_value) * max(rel_trunc, 1e-14) + noise
    return FuncValue(mp_value, abs_err, Method.SERIES)


def _norm_log_factor(p: EvalPoint) -> float:
    """log of 2^nu gamma(nu+1/2) x^(-nu), the M -> normalized-form factor."""
    return p.nu * math.log(2.0 / p.x) + log_gamma(p.nu + 0.5)


def calm_from_m(p: EvalPoint, m: FuncValue) -> FuncValue:
    """Normalized form calM_nu(x) = -2^nu gamma(nu+1/2) x^(-nu) M_nu(x).

    Requires nu > -1/2 (gamma factor finite) and x > 0.
    """
    if p.nu <= -0.5:
        raise DomainError("the normalized form requires nu > -1/2")
    if p.x <= 0.0:
        raise DomainError("calm_from_m requires x > 0")
    factor = math.exp(_norm_log_factor(p))
    value = -m.value * factor
    return FuncValue(value, m.abs_err * factor + _EPS * abs(value), m.method)


def m_from_calm(p: EvalPoint, c: FuncValue) -> FuncValue:
    """Inverse of calm_from_m: M_nu(x) = -x^nu calM_nu(x) / (2^nu gamma(nu+1/2))."""
    if p.nu <= -0.5:
        raise DomainError("the normalized form requires nu > -1/2")
    if p.x <= 0.0:
        raise DomainError("m_from_calm requires x > 0")
    factor = math.exp(-_norm_log_factor(p))
    value = -c.value * factor
    return FuncValue(value, c.abs_err * factor + _EPS * abs(value), c.method)
