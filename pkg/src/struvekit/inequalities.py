"""Named inequality cases and the grid sweep that verifies them.

Every claim about the second-kind function, its normalized form, and the
associated gamma-function ratios is registered here as an
:class:`InequalityCase`: a domain predicate plus a margin evaluator
returning ``(margin, scale)`` oriented so that a positive margin means the
claim holds. The executor sweeps a grid, normalizes each margin by its
scale, and classifies points as satisfied, inconclusive (within
``+-1e-9`` of zero after normalization), or violations.

The catalog below (CATALOG) is the canonical set swept by ``run_all``.
One extra case, ``FX3_raw``, lives in EXTRA_CASES: it extends the
combined exponential/sinh bound down to orders in (-1, -1/2] where the
normalized form has no integral representation, working directly on the
series route. That extension is genuinely false - the sweep reports its
violations honestly - because the sinh lower bound it is built from
already fails for the first-kind companion on that order range.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field, replace
from typing import Callable, Optional

import numpy as np

from . import foxwright
from .core import QUAD_DEFAULTS, EvalPoint, QuadConfig
from .errors import DomainError, EmptyDomainError, StruveKitError
from .gammafuncs import (SQRT_PI, gamma_ratio, gamma_ratio_h,
                         gamma_ratio_h_prime, log_gamma)
from .quadrature import calm_dnu
from .quadrature import calm_dx as quad_calm_dx
from .routes import cached_calm, cached_calm_dx, cached_m, cached_m_prime
from .series import struve_m_series

#: Normalized margins within this band of zero are inconclusive, not
#: violations: numerical noise must not manufacture counterexamples.
INCONCLUSIVE_BAND = 1e-9

_TINY = 1e-300
_TWO_OVER_SQRT_PI = 2.0 / SQRT_PI


@dataclass(frozen=True)
class InequalityCase:
    """A named, domain-restricted claim with a margin evaluator.

    ``margin_fn(nu, x, y, cfg)`` returns ``(margin, scale)``; the margin
    is oriented so positive means the claim holds, and the executor
    reports ``margin/scale``. ``strict`` records whether the claim is a
    strict inequality (informational; the inconclusive band applies
    either way).
    """

    id: str
    domain: Callable[..., bool]
    margin_fn: Callable[..., tuple[float, float]]
    strict: bool = True
    needs_y: bool = False
    note: str = ""

    def flipped(self) -> "InequalityCase":
        """Self-test fixture: the same case claiming the opposite sign.

        Running a flipped case against a grid where the original passes
        must produce violations; that is how the harness proves it can
        fail (the executor is not trusted until it has rejected
        something).
        """
        orig = self.margin_fn

        def negated(*args, **kwargs):
            margin, scale = orig(*args, **kwargs)
            return -margin, scale

        return replace(self, id=self.id + "_flipped", margin_fn=negated)


@dataclass(frozen=True)
class GridSpec:
    """Evaluation grid: order values, argument values, optional second
    argument values for two-argument claims, and how they were spaced."""

    nu_values: tuple[float, ...]
    x_values: tuple[float, ...]
    y_values: Optional[tuple[float, ...]] = None
    spacing: str = "log"

    def __post_init__(self) -> None:
        if self.spacing not in ("linear", "log"):
            raise DomainError("spacing must be 'linear' or 'log'")
        if not self.nu_values or not self.x_values:
            raise DomainError("grid must have at least one nu and one x value")


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of sweeping one case over one grid.

    ``min_margin`` is the smallest normalized margin among tested points
    (None when nothing was tested); ``argmin`` is the point attaining it.
    ``violations`` and ``inconclusive`` hold (point, normalized margin)
    pairs. ``errors`` collects points whose evaluation raised; they count
    as skipped. Wall time and error details are excluded from equality
    comparison and from the JSON form.
    """

    case_id: str
    points_tested: int
    points_skipped: int
    min_margin: Optional[float]
    argmin: Optional[tuple[float, ...]]
    violations: tuple[tuple[tuple[float, ...], float], ...]
    inconclusive: tuple[tuple[tuple[float, ...], float], ...]
    errors: tuple[tuple[tuple[float, ...], str], ...] = field(default=(), compare=False)
    wall_time: float = field(default=0.0, compare=False)


def _point_dict(point: tuple[float, ...]) -> dict:
    d = {"nu": point[0], "x": point[1]}
    if len(point) > 2:
        d["y"] = point[2]
    return d


def report_to_json_dict(report: VerificationReport) -> dict:
    """Serializable form with exactly the published report fields."""
    return {
        "case_id": report.case_id,
        "points_tested": report.points_tested,
        "points_skipped": report.points_skipped,
        "min_margin": report.min_margin,
        "argmin": _point_dict(report.argmin) if report.argmin else None,
        "violations": [dict(_point_dict(pt), margin=m)
                       for pt, m in report.violations],
        "inconclusive": [dict(_point_dict(pt), margin=m)
                         for pt, m in report.inconclusive],
    }


def report_from_json_dict(data: dict) -> VerificationReport:
    """Inverse of report_to_json_dict (wall time and errors reset)."""

    def tup(d: dict) -> tuple[float, ...]:
        pt = (d["nu"], d["x"])
        return pt + ((d["y"],) if "y" in d else ())

    return VerificationReport(
        case_id=data["case_id"],
        points_tested=data["points_tested"],
        points_skipped=data["points_skipped"],
        min_margin=data["min_margin"],
        argmin=tup(data["argmin"]) if data["argmin"] else None,
        violations=tuple((tup(v), v["margin"]) for v in data["violations"]),
        inconclusive=tuple((tup(v), v["margin"]) for v in data["inconclusive"]),
    )


# ---------------------------------------------------------------------------
# margin evaluators
#
# Signature: fn(nu, x, y, cfg) -> (margin, scale). Plain function values
# come from the memoized automatic-route evaluators (default configs);
# cfg reaches the direct quadrature probes that have no memoized wrapper.
# ---------------------------------------------------------------------------


def _gr(nu: float) -> float:
    """gamma(nu+1/2)/gamma(nu+1), the x -> 0 value of the normalized form."""
    return gamma_ratio(nu + 0.5, nu + 1.0)


def _margin_bound0(nu, x, y, cfg):
    c = cached_calm(nu, x)
    g = _gr(nu)
    return g - c, max(g, abs(c), _TINY)


def _turanian_parts(nu, x):
    m_lo = cached_m(nu - 1.0, x)
    m_md = cached_m(nu, x)
    m_hi = cached_m(nu + 1.0, x)
    return m_md * m_md, m_lo * m_hi


def _margin_ineqturan_lower(nu, x, y, cfg):
    sq, prod = _turanian_parts(nu, x)
    return sq - prod, max(sq, abs(prod), _TINY)


def _margin_ineqturan_upper(nu, x, y, cfg):
    sq, prod = _turanian_parts(nu, x)
    cap = sq / (nu + 0.5)
    return cap - (sq - prod), max(cap, abs(sq - prod), _TINY)


def _ratio(nu, x):
    """x M_nu'(x) / M_nu(x); M_nu < 0 on the catalog domains."""
    return x * cached_m_prime(nu, x) / cached_m(nu, x)


def _margin_quot1(nu, x, y, cfg):
    r = _ratio(nu, x)
    return nu - r, max(abs(nu), abs(r), _TINY)


def _margin_quot2_left(nu, x, y, cfg):
    r = _ratio(nu, x)
    s = math.hypot(x, nu)
    return r + s, max(abs(r), s, _TINY)


def _margin_quot2_right(nu, x, y, cfg):
    r = _ratio(nu, x)
    s = math.hypot(x, nu)
    return s - r, max(abs(r), s, _TINY)


def _margin_fx1(nu, x, y, cfg):
    lhs = cached_calm(nu, x + y)
    rhs = cached_calm(nu, x) * cached_calm(nu, y) / _gr(nu)
    return lhs - rhs, max(abs(lhs), abs(rhs), _TINY)


def _margin_bound1(nu, x, y, cfg):
    c = cached_calm(nu, x)
    base = _gr(nu) * (-math.expm1(-x)) / x
    orient = 1.0 if nu >= 0.5 else -1.0
    return orient * (c - base), max(abs(c), abs(base), _TINY)


def _margin_fx2(nu, x, y, cfg):
    lhs = cached_calm(nu - 1.0, x) * cached_calm(nu + 1.0, x)
    rhs = cached_calm(0.5, x) * cached_calm(2.0 * nu - 0.5, x)
    orient = 1.0 if nu >= 1.5 else -1.0
    return orient * (rhs - lhs), max(abs(lhs), abs(rhs), _TINY)


def _margin_fx3(nu, x, y, cfg):
    expo = x * x / (4.0 * (nu + 1.0))
    if expo > 700.0:
        # the exponential side exceeds any normalized-form value by
        # hundreds of orders of magnitude; report a saturated margin
        # instead of overflowing
        return 1.0, 1.0
    lhs = cached_calm(nu, x)
    rhs = (_gr(nu) * math.exp(expo)
           - (4.0 / (SQRT_PI * (2.0 * nu + 1.0))) * math.sinh(x / (2.0 * nu + 3.0)))
    return rhs - lhs, max(abs(lhs), abs(rhs), _TINY)


def _margin_fx3_raw(nu, x, y, cfg):
    """Series-route form of the combined bound on -M_nu for orders in
    (-1, -1/2], where the normalized form has no integral
    representation. Genuinely violated; kept to document the failure."""
    expo = x * x / (4.0 * (nu + 1.0))
    if expo > 700.0:
        return 1.0, 1.0
    lhs = -struve_m_series(EvalPoint(nu, x)).value
    log_half_pow = nu * math.log(0.5 * x)
    i_bound = math.exp(expo + log_half_pow - log_gamma(nu + 1.0))
    l_bound = 2.0 * math.exp(log_half_pow - log_gamma(nu + 1.5)) \
        * math.sinh(x / (2.0 * nu + 3.0)) / SQRT_PI
    rhs = i_bound - l_bound
    return rhs - lhs, max(abs(lhs), abs(rhs), _TINY)


def _margin_quot3_left(nu, x, y, cfg):
    r = _ratio(nu, x)
    bound = 0.5 * (-1.0 - math.sqrt(1.0 + 4.0 * (x * x + nu * nu)))
    return r - bound, max(abs(r), abs(bound), _TINY)


def _margin_quot3_right(nu, x, y, cfg):
    r = _ratio(nu, x)
    bound = 0.5 * (-1.0 + math.sqrt(1.0 + 4.0 * (x * x + nu * nu)))
    return bound - r, max(abs(r), abs(bound), _TINY)


def _ratio_derivative_analytic(nu, x):
    """d/dx [x M'/M] through the quadratic identity for the Turanian:
    x [ (1 + nu^2/x^2) M^2 - (M')^2 + (nu+1/2) x^(nu-1) M
        / (sqrt(pi) 2^(nu-1) gamma(nu+3/2)) ] / M^2."""
    m = cached_m(nu, x)
    md = cached_m_prime(nu, x)
    coef = (nu + 0.5) * math.exp(
        (nu - 1.0) * math.log(0.5 * x) - log_gamma(nu + 1.5)) / SQRT_PI
    bracket = (1.0 + (nu / x) ** 2) * m * m - md * md + coef * m
    return x * bracket / (m * m)


def _margin_fx31(nu, x, y, cfg):
    d_an = _ratio_derivative_analytic(nu, x)
    h = 1e-5 * max(1.0, x)
    d_fd = (_ratio(nu, x + h) - _ratio(nu, x - h)) / (2.0 * h)
    deriv = max(d_an, d_fd)
    rhs = x / (nu + 0.5)
    return rhs - deriv, max(rhs, abs(d_an), abs(d_fd), _TINY)


def _margin_theorem4(nu, x, y, cfg):
    lower, upper = foxwright.bilateral_bounds(EvalPoint(nu, x))
    c = cached_calm(nu, x)
    n_lo = (c - lower) / max(abs(c), abs(lower), _TINY)
    n_up = (upper - c) / max(abs(c), abs(upper), _TINY)
    return min(n_lo, n_up), 1.0


def _margin_gammaineq_left(nu, x, y, cfg):
    ratio = gamma_ratio(nu + 1.5, nu + 2.0)
    return _TWO_OVER_SQRT_PI - ratio, max(_TWO_OVER_SQRT_PI, ratio, _TINY)


def _margin_gammaineq_right(nu, x, y, cfg):
    ratio = gamma_ratio(nu + 1.5, nu + 2.0)
    bound = math.sqrt(2.0 / (math.pi * (nu + 1.0)))
    return ratio - bound, max(ratio, bound, _TINY)


def _margin_remark1(nu, x, y, cfg):
    lhs = cached_m(nu - 1.0, x) * cached_m(nu + 1.0, x)
    log_coef = (0.5 * math.log(2.0) + log_gamma(2.0 * nu)
                - 0.5 * math.log(math.pi * x)
                - log_gamma(nu - 0.5) - log_gamma(nu + 1.5))
    coef = math.expm1(-x) * math.exp(log_coef)
    rhs = coef * cached_m(2.0 * nu - 0.5, x)
    orient = 1.0 if nu >= 1.5 else -1.0
    return orient * (rhs - lhs), max(abs(lhs), abs(rhs), _TINY)


def _margin_remark2_turan(nu, x, y, cfg):
    val = math.exp(2.0 * log_gamma(nu + 1.5)
                   - log_gamma(nu + 1.0) - log_gamma(nu + 2.0))
    bound = 2.0 / math.pi
    return val - bound, max(val, bound, _TINY)


def _margin_remark2_ratio(nu, x, y, cfg):
    g = _gr(nu)
    upper = _TWO_OVER_SQRT_PI * (nu + 1.0) / (nu + 0.5)
    lower = math.sqrt(2.0 / math.pi) * math.sqrt(nu + 1.0) / (nu + 0.5)
    n_up = (upper - g) / max(upper, g, _TINY)
    n_lo = (g - lower) / max(g, lower, _TINY)
    return min(n_up, n_lo), 1.0


def _margin_sign_m(nu, x, y, cfg):
    m = cached_m(nu, x)
    return -m, max(abs(m), _TINY)


def _sign_margin(value: float, abs_err: float) -> float:
    """Normalized margin of a single positivity claim: close to +-1 when
    the sign is numerically certain, and graded into the inconclusive
    band once the value drops below its reported error bar."""
    return value / max(abs(value), abs_err / INCONCLUSIVE_BAND, _TINY)


def _margin_cm_probe_x(nu, x, y, cfg):
    p = EvalPoint(nu, x)
    margins = []
    for n in range(7):
        fv = quad_calm_dx(p, n, cfg)
        margins.append(_sign_margin((-1.0) ** n * fv.value, fv.abs_err))
    return min(margins), 1.0


def _margin_cm_probe_nu(nu, x, y, cfg):
    p = EvalPoint(nu, x)
    margins = []
    for m in range(5):
        fv = calm_dnu(p, m, cfg)
        margins.append(_sign_margin((-1.0) ** m * fv.value, fv.abs_err))
    return min(margins), 1.0


def _margin_logconvex_x(nu, x, y, cfg):
    prod = cached_calm(nu, x) * cached_calm(nu, 1.5 * x)
    mid = cached_calm(nu, 1.25 * x)
    return prod - mid * mid, max(prod, mid * mid, _TINY)


def _margin_logconvex_nu(nu, x, y, cfg):
    prod = cached_calm(nu, x) * cached_calm(nu + 1.0, x)
    mid = cached_calm(nu + 0.5, x)
    return prod - mid * mid, max(prod, mid * mid, _TINY)


def _falling(nu: float, k: int) -> float:
    out = 1.0
    for i in range(k):
        out *= nu - i
    return out


def _rising_half(k: int) -> float:
    out = 1.0
    for i in range(k):
        out *= 0.5 + i
    return out


def _margin_neg_m_cm(nu, x, y, cfg):
    """Sign alternation of the first seven derivatives of -M_nu for
    nu in [-1/2, 0].

    At nu = -1/2 the derivatives of the elementary form
    sqrt(2/pi) x^(-1/2) e^(-x) expand into an all-positive sum; elsewhere
    the Leibniz rule on -M = x^nu calM_nu / (2^nu gamma(nu+1/2)) keeps
    every term positive as well (falling factorials of nu <= 0 alternate
    against the alternating normalized-form derivatives), so the
    evaluation is cancellation-free.
    """
    vals = []
    if nu == -0.5:
        front = math.sqrt(2.0 / math.pi) * math.exp(-x)
        for n in range(7):
            acc = 0.0
            for k in range(n + 1):
                acc += (math.comb(n, k) * _rising_half(k)
                        * x ** (-0.5 - k))
            vals.append(front * acc)
    else:
        front = math.exp(-nu * math.log(2.0) - log_gamma(nu + 0.5))
        for n in range(7):
            acc = 0.0
            for k in range(n + 1):
                acc += (math.comb(n, k) * _falling(nu, k)
                        * x ** (nu - k) * cached_calm_dx(nu, x, n - k))
            vals.append((-1.0) ** n * front * acc)
    # every summand above is positive by construction, so the sign of
    # each order is certain and a per-order +-1 margin is honest
    return min(v / max(abs(v), _TINY) for v in vals), 1.0


def _margin_h_negative_derivative(nu, x, y, cfg):
    hv = gamma_ratio_h(nu)
    hp = gamma_ratio_h_prime(nu)
    n_pos = hv / max(abs(hv), _TINY)
    n_dec = -hp / max(abs(hp), _TINY)
    return min(n_pos, n_dec), 1.0


# ---------------------------------------------------------------------------
# domains
# ---------------------------------------------------------------------------


def _dom_above_neg_half(nu, x, y=None):
    return nu > -0.5 and x > 0.0


def _dom_above_half(nu, x, y=None):
    return nu > 0.5 and x > 0.0


def _dom_ge_neg_half(nu, x, y=None):
    return nu >= -0.5 and x > 0.0


def _dom_ratio_band(nu, x, y=None):
    return -0.5 <= nu <= 0.0 and x > 0.0


def _dom_gamma_only(nu, x, y=None):
    return nu > -0.5


def _dom_fx1(nu, x, y=None):
    return nu > -0.5 and x > 0.0 and y is not None and y > 0.0


def _dom_h(nu, x, y=None):
    return -1.0 < nu <= 20.0


def _dom_fx3_raw(nu, x, y=None):
    return -1.0 < nu <= -0.5 and x > 0.0


def _case(id, domain, margin_fn, **kw) -> InequalityCase:
    return InequalityCase(id=id, domain=domain, margin_fn=margin_fn, **kw)


CATALOG: dict[str, InequalityCase] = {c.id: c for c in (
    _case("bound0", _dom_above_neg_half, _margin_bound0,
          note="normalized form stays below its value at zero argument"),
    _case("ineqturan_lower", _dom_above_half, _margin_ineqturan_lower,
          note="Turan-type difference is positive"),
    _case("ineqturan_upper", _dom_above_half, _margin_ineqturan_upper,
          note="Turan-type difference is below M^2/(nu+1/2)"),
    _case("quot1", _dom_above_neg_half, _margin_quot1,
          note="logarithmic-derivative ratio stays below nu"),
    _case("quot2_left", _dom_above_half, _margin_quot2_left,
          note="ratio above -sqrt(x^2+nu^2)"),
    _case("quot2_right", _dom_above_half, _margin_quot2_right,
          note="ratio below sqrt(x^2+nu^2)"),
    _case("FX1", _dom_fx1, _margin_fx1, needs_y=True,
          note="normalized form is super-multiplicative after rescaling"),
    _case("bound1", _dom_above_neg_half, _margin_bound1,
          note="comparison with the order-1/2 profile; reverses at nu=1/2"),
    _case("FX2", _dom_above_half, _margin_fx2,
          note="order-averaged product comparison; reverses at nu=3/2"),
    _case("FX3", _dom_above_neg_half, _margin_fx3,
          note="combined exponential/sinh upper bound"),
    _case("quot3_left", _dom_ratio_band, _margin_quot3_left,
          note="quadratic-root lower bound for the ratio"),
    _case("quot3_right", _dom_ratio_band, _margin_quot3_right,
          note="quadratic-root upper bound for the ratio"),
    _case("FX31", _dom_above_half, _margin_fx31,
          note="derivative of x M'/M stays below x/(nu+1/2)"),
    _case("theorem4_bilateral", _dom_above_neg_half, _margin_theorem4,
          note="exponential-decay bracket for the normalized form"),
    _case("gammaineq_left", _dom_gamma_only, _margin_gammaineq_left,
          note="gamma ratio below 2/sqrt(pi)"),
    _case("gammaineq_right", _dom_gamma_only, _margin_gammaineq_right,
          note="gamma ratio above sqrt(2/(pi(nu+1)))"),
    _case("remark1", _dom_above_half, _margin_remark1,
          note="second-kind product bound; reverses at nu=3/2"),
    _case("remark2_turan_gamma", _dom_gamma_only, _margin_remark2_turan,
          note="Turan-type gamma-function form of the ratio bound"),
    _case("remark2_ratio", _dom_gamma_only, _margin_remark2_ratio,
          note="two-sided bound on gamma(nu+1/2)/gamma(nu+1)"),
    _case("sign_m", _dom_ge_neg_half, _margin_sign_m,
          note="second-kind function is negative"),
    _case("cm_probe_x", _dom_above_neg_half, _margin_cm_probe_x,
          note="derivative signs alternate in x through order 6"),
    _case("cm_probe_nu", _dom_above_neg_half, _margin_cm_probe_nu,
          note="derivative signs alternate in nu through order 4"),
    _case("logconvex_x", _dom_above_neg_half, _margin_logconvex_x,
          note="midpoint log-convexity in x"),
    _case("logconvex_nu", _dom_above_neg_half, _margin_logconvex_nu,
          note="midpoint log-convexity in nu"),
    _case("neg_m_cm", _dom_ratio_band, _margin_neg_m_cm,
          note="-M derivative signs alternate for nu in [-1/2, 0]"),
    _case("h_negative_derivative", _dom_h, _margin_h_negative_derivative,
          note="digamma-difference witness is positive and decreasing"),
)}

EXTRA_CASES: dict[str, InequalityCase] = {c.id: c for c in (
    _case("FX3_raw", _dom_fx3_raw, _margin_fx3_raw,
          note="series-route extension of the combined bound to orders in "
               "(-1, -1/2]; violated - the underlying sinh lower bound "
               "fails there"),
)}


def lookup(case_id: str) -> InequalityCase:
    """Find a case by id in the catalog or the extras registry."""
    if case_id in CATALOG:
        return CATALOG[case_id]
    if case_id in EXTRA_CASES:
        return EXTRA_CASES[case_id]
    raise KeyError(case_id)


# ---------------------------------------------------------------------------
# grids
# ---------------------------------------------------------------------------


def _geo(lo: float, hi: float, n: int) -> tuple[float, ...]:
    return tuple(float(v) for v in np.geomspace(lo, hi, n))


def _edge_grid(lo: float, hi: float, n: int, closed_lo: bool) -> tuple[float, ...]:
    """Order grid for a domain with lower edge lo: open edges start at
    distance 1e-2, closed edges include the endpoint itself."""
    span = hi - lo
    if closed_lo:
        return (lo,) + tuple(lo + g for g in _geo(1e-2, span, n - 1))
    return tuple(lo + g for g in _geo(1e-2, span, n))


_X_DEFAULT = _geo(1e-3, 30.0, 25)

_NU_RANGES: dict[str, tuple[float, float, bool]] = {
    # case id -> (domain lower edge, grid upper end, lower edge closed)
    "bound0": (-0.5, 20.0, False),
    "ineqturan_lower": (0.5, 20.0, False),
    "ineqturan_upper": (0.5, 20.0, False),
    "quot1": (-0.5, 20.0, False),
    "quot2_left": (0.5, 20.0, False),
    "quot2_right": (0.5, 20.0, False),
    "FX1": (-0.5, 20.0, False),
    "bound1": (-0.5, 20.0, False),
    "FX2": (0.5, 20.0, False),
    "FX3": (-0.5, 20.0, False),
    "quot3_left": (-0.5, 0.0, True),
    "quot3_right": (-0.5, 0.0, True),
    "FX31": (0.5, 20.0, False),
    "theorem4_bilateral": (-0.5, 20.0, False),
    "gammaineq_left": (-0.5, 20.0, False),
    "gammaineq_right": (-0.5, 20.0, False),
    "remark1": (0.5, 20.0, False),
    "remark2_turan_gamma": (-0.5, 20.0, False),
    "remark2_ratio": (-0.5, 20.0, False),
    "sign_m": (-0.5, 20.0, True),
    "cm_probe_x": (-0.5, 20.0, False),
    "cm_probe_nu": (-0.5, 20.0, False),
    "logconvex_x": (-0.5, 20.0, False),
    "logconvex_nu": (-0.5, 20.0, False),
    "neg_m_cm": (-0.5, 0.0, True),
    "h_negative_derivative": (-1.0, 20.0, False),
    "FX3_raw": (-1.0, -0.5, False),
}


def default_grid(case_id: str) -> GridSpec:
    """The standard sweep grid for a case: 25 orders log-spaced across
    its domain (open edges approached to distance 1e-2, closed edges
    included), 25 arguments log-spaced in [1e-3, 30]; the two-argument
    case uses a 10 x 10 x 6 (x, y, nu) grid."""
    lo, hi, closed = _NU_RANGES[case_id]
    if case_id == "FX1":
        return GridSpec(nu_values=_edge_grid(lo, hi, 6, closed),
                        x_values=_geo(1e-3, 30.0, 10),
                        y_values=_geo(1e-3, 30.0, 10))
    return GridSpec(nu_values=_edge_grid(lo, hi, 25, closed),
                    x_values=_X_DEFAULT)


# ---------------------------------------------------------------------------
# executor
# ---------------------------------------------------------------------------


def _grid_points(case: InequalityCase, grid: GridSpec):
    if case.needs_y:
        if not grid.y_values:
            raise DomainError(f"case {case.id} needs a y grid")
        for nu in grid.nu_values:
            for x in grid.x_values:
                for y in grid.y_values:
                    yield (nu, x, y)
    else:
        for nu in grid.nu_values:
            for x in grid.x_values:
                yield (nu, x)


def run_case(case: InequalityCase, grid: GridSpec,
             cfg: QuadConfig = QUAD_DEFAULTS) -> VerificationReport:
    """Sweep one case over a grid and classify every point.

    Points outside the case domain are skipped and counted. Margin
    evaluations use the memoized automatic-route values (default
    configurations); cfg is handed to the direct quadrature probes that
    bypass the memoized layer. Evaluation failures are recorded per point
    and counted as skipped, never fatal. Raises EmptyDomainError when the
    domain filter leaves nothing to test.
    """
    start = time.perf_counter()
    tested = 0
    skipped = 0
    min_margin: Optional[float] = None
    argmin: Optional[tuple[float, ...]] = None
    violations: list[tuple[tuple[float, ...], float]] = []
    inconclusive: list[tuple[tuple[float, ...], float]] = []
    errors: list[tuple[tuple[float, ...], str]] = []
    for point in _grid_points(case, grid):
        if not case.domain(*point):
            skipped += 1
            continue
        nu, x = point[0], point[1]
        y = point[2] if len(point) > 2 else None
        try:
            margin, scale = case.margin_fn(nu, x, y, cfg)
        except (StruveKitError, OverflowError, ZeroDivisionError) as exc:
            errors.append((point, f"{type(exc).__name__}: {exc}"))
            skipped += 1
            continue
        tested += 1
        normalized = margin / max(scale, _TINY)
        if min_margin is None or normalized < min_margin:
            min_margin = normalized
            argmin = point
        if normalized < -INCONCLUSIVE_BAND:
            violations.append((point, normalized))
        elif abs(normalized) <= INCONCLUSIVE_BAND:
            inconclusive.append((point, normalized))
    if tested == 0:
        raise EmptyDomainError(
            f"no grid point satisfies the domain of case {case.id}")
    return VerificationReport(
        case_id=case.id,
        points_tested=tested,
        points_skipped=skipped,
        min_margin=min_margin,
        argmin=argmin,
        violations=tuple(violations),
        inconclusive=tuple(inconclusive),
        errors=tuple(errors),
        wall_time=time.perf_counter() - start,
    )


def run_all(grid: Optional[GridSpec] = None,
            cfg: QuadConfig = QUAD_DEFAULTS) -> list[VerificationReport]:
    """Run every catalog case, each on its own default grid unless an
    explicit grid is given. A case whose domain rejects the entire
    explicit grid yields an empty report (zero points tested) rather
    than aborting the run."""
    reports = []
    for case in CATALOG.values():
        case_grid = grid if grid is not None else default_grid(case.id)
        try:
            reports.append(run_case(case, case_grid, cfg))
        except EmptyDomainError:
            total = sum(1 for _ in _grid_points(case, case_grid)) \
                if not (case.needs_y and not case_grid.y_values) else 0
            reports.append(VerificationReport(
                case_id=case.id, points_tested=0, points_skipped=total,
                min_margin=None, argmin=None, violations=(), inconclusive=()))
        except DomainError:
            # two-argument case handed a grid without y values
            reports.append(VerificationReport(
                case_id=case.id, points_tested=0, points_skipped=0,
                min_margin=None, argmin=None, violations=(), inconclusive=()))
    return reports
