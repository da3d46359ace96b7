"""Fox-Wright generalized hypergeometric series and the bound machinery
built on it.

The general object is

    pPsi_q[(a_1,alpha_1),...,(a_p,alpha_p); (b_1,beta_1),...,(b_q,beta_q) | z]
        = sum_n  prod_l Gamma(a_l + alpha_l n) / prod_j Gamma(b_j + beta_j n)
                 * z^n / n!

convergent for all bounded z when the index
epsilon = 1 + sum(beta) - sum(alpha) is positive. The normalized form has
the third independent evaluation route

    calM_nu(x) = (Gamma(nu+1/2)/sqrt(pi)) * 1Psi1[(1/2,1/2);(nu+1,1/2) | -x]

and the leading coefficient ratios psi_0, psi_1, psi_2 drive a bilateral
exponential bound: when psi_1 > psi_2 and psi_1^2 < psi_2 psi_0,

    gr * exp(-Gamma(nu+1) x / (sqrt(pi) Gamma(nu+3/2)))
        <= calM_nu(x) <= gr - (1 - e^(-x)) / (sqrt(pi) (nu+1/2)),

with gr = Gamma(nu+1/2)/Gamma(nu+1). For the Struve parameterization the
two coefficient conditions reduce to the gamma-ratio inequalities
2/sqrt(pi) > Gamma(nu+3/2)/Gamma(nu+2) > sqrt(2/(pi(nu+1))), which hold
for all nu > -1/2 (monotonicity of the f and g ratio functions).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import SERIES_DEFAULTS, EvalPoint, FuncValue, Method, SeriesConfig
from .errors import (CancellationError, ConvergenceDomainError, DomainError,
                     NonConvergenceError, PoleError)
from .gammafuncs import SQRT_PI, gamma, gamma_ratio, log_gamma

_EPS = 2.220446049250313e-16

#: Alternating sums are refused when sum|term| / |sum term| exceeds this.
CONDITION_LIMIT = 1e8


@dataclass(frozen=True)
class FoxWrightParams:
    """Parameter list for pPsi_q: upper (a_l, alpha_l), lower (b_j, beta_j)."""

    upper: tuple[tuple[float, float], ...]
    lower: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        for a, alpha in self.upper:
            if not (math.isfinite(a) and math.isfinite(alpha)):
                raise DomainError("upper parameters must be finite")
        for b, beta in self.lower:
            if not (math.isfinite(b) and math.isfinite(beta)):
                raise DomainError("lower parameters must be finite")

    @property
    def convergence_index(self) -> float:
        """epsilon = 1 + sum(beta_j) - sum(alpha_l); series needs epsilon > 0."""
        return 1.0 + sum(b[1] for b in self.lower) - sum(a[1] for a in self.upper)


def norm_form_params(nu: float) -> FoxWrightParams:
    """The 1Psi1 parameterization whose value at z = -x gives
    sqrt(pi)/Gamma(nu+1/2) times the normalized form."""
    return FoxWrightParams(upper=((0.5, 0.5),), lower=((nu + 1.0, 0.5),))


def psi_m(params: FoxWrightParams, m: int) -> float:
    """Coefficient ratio prod Gamma(a_l + alpha_l m) / prod Gamma(b_j + beta_j m).

    psi_0 is the series' leading coefficient. Computed in log space when
    every gamma argument is positive (overflow safety for large orders);
    negative non-integer arguments fall back to direct gamma products.
    """
    if m < 0:
        raise DomainError("psi_m requires m >= 0")
    args_up = [a + alpha * m for a, alpha in params.upper]
    args_lo = [b + beta * m for b, beta in params.lower]
    for z in args_up + args_lo:
        if z <= 0.0 and z == math.floor(z):
            raise PoleError(f"gamma argument {z:g} is a non-positive integer")
    if all(z > 0.0 for z in args_up + args_lo):
        lg = sum(log_gamma(z) for z in args_up) - sum(log_gamma(z) for z in args_lo)
        return math.exp(lg)
    val = 1.0
    for z in args_up:
        val *= gamma(z)
    for z in args_lo:
        val /= gamma(z)
    return val


def fox_wright_eval(params: FoxWrightParams, z: float,
                    cfg: SeriesConfig = SERIES_DEFAULTS) -> FuncValue:
    """Sum the series at argument z with a tail-term error estimate.

    Stops once the term magnitude falls below rel_tol times the running
    sum and keeps falling; term coefficients go through log-gamma so large
    parameters cannot overflow intermediate factors. For z < 0 the partial
    sums alternate, so the running peak-to-sum ratio is tracked and the
    evaluation refuses (CancellationError) when it passes CONDITION_LIMIT,
    the same pathology guard the merged series route uses.
    """
    eps_index = params.convergence_index
    if eps_index <= 0.0:
        raise ConvergenceDomainError(
            f"series requires convergence index > 0, got {eps_index:g}")
    total = 0.0
    carry = 0.0
    peak = 0.0
    term_abs = 0.0
    log_abs_z = math.log(abs(z)) if z != 0.0 else -math.inf
    sign_z = -1.0 if z < 0.0 else 1.0
    for n in range(cfg.max_terms):
        lg = -log_gamma(n + 1.0)
        sign = 1.0
        for a, alpha in params.upper:
            arg = a + alpha * n
            if arg <= 0.0:
                if arg == math.floor(arg):
                    raise PoleError(
                        f"gamma argument {arg:g} is a non-positive integer")
                g = gamma(arg)
                sign *= math.copysign(1.0, g)
                lg += math.log(abs(g))
            else:
                lg += log_gamma(arg)
        for b, beta in params.lower:
            arg = b + beta * n
            if arg <= 0.0:
                if arg == math.floor(arg):
                    raise PoleError(
                        f"gamma argument {arg:g} is a non-positive integer")
                g = gamma(arg)
                sign /= math.copysign(1.0, g)
                lg -= math.log(abs(g))
            else:
                lg -= log_gamma(arg)
        if n > 0 and log_abs_z == -math.inf:
            break
        term_abs = math.exp(lg) if n == 0 else math.exp(lg + n * log_abs_z)
        term = sign * (sign_z ** n) * term_abs
        y = term - carry
        t = total + y
        carry = (t - total) - y
        total = t
        peak = max(peak, abs(total), term_abs)
        if n >= 4 and term_abs <= cfg.rel_tol * max(abs(total), 1e-300):
            # superalgebraically decaying tail: bound it by a geometric
            # series with the observed ratio, conservatively 2x last term
            err = 2.0 * term_abs + 4.0 * _EPS * peak * (n + 1)
            if z < 0.0 and peak / max(abs(total), 1e-300) > CONDITION_LIMIT:
                raise CancellationError(
                    "alternating series loses more than 8 digits "
                    f"(condition {peak / abs(total):.3g})")
            return FuncValue(total, err, Method.FOX_WRIGHT)
    if log_abs_z == -math.inf:
        return FuncValue(total, _EPS * abs(total), Method.FOX_WRIGHT)
    raise NonConvergenceError(
        f"series did not settle within {cfg.max_terms} terms")


def calm_via_fox_wright(p: EvalPoint, cfg: SeriesConfig = SERIES_DEFAULTS) -> FuncValue:
    """Normalized form by the Fox-Wright route. nu > -1/2, x >= 0.

    Multiplies the 1Psi1 value at z = -x by Gamma(nu+1/2)/sqrt(pi). This
    is the third independent evaluation route; its cancellation guard
    inherits from fox_wright_eval.
    """
    if p.nu <= -0.5:
        raise DomainError("the normalized form requires nu > -1/2")
    if p.x < 0.0:
        raise DomainError("the series argument requires x >= 0")
    base = fox_wright_eval(norm_form_params(p.nu), -p.x, cfg)
    factor = math.exp(log_gamma(p.nu + 0.5)) / SQRT_PI
    value = factor * base.value
    return FuncValue(value, factor * base.abs_err + _EPS * abs(value),
                     Method.FOX_WRIGHT)


def fx4_conditions(params: FoxWrightParams) -> tuple[bool, bool]:
    """Truth values of the two coefficient conditions psi_1 > psi_2 and
    psi_1^2 < psi_2 psi_0 that gate the bilateral exponential bound."""
    m = fx4_margins(params)
    return m[0] > 0.0, m[1] > 0.0


def fx4_margins(params: FoxWrightParams) -> tuple[float, float]:
    """Signed, normalized margins of the two coefficient conditions
    (positive means the condition holds): (psi_1 - psi_2, psi_2 psi_0 - psi_1^2),
    each divided by the larger side's magnitude."""
    p0 = psi_m(params, 0)
    p1 = psi_m(params, 1)
    p2 = psi_m(params, 2)
    first = (p1 - p2) / max(abs(p1), abs(p2), 1e-300)
    second = (p2 * p0 - p1 * p1) / max(abs(p2 * p0), p1 * p1, 1e-300)
    return first, second


def bilateral_bounds(p: EvalPoint) -> tuple[float, float]:
    """Lower and upper exponential-decay bounds on the normalized form:

        lower = gr * exp(-Gamma(nu+1) x / (sqrt(pi) Gamma(nu+3/2)))
        upper = gr - (1 - e^(-x)) / (sqrt(pi) (nu+1/2))

    with gr = Gamma(nu+1/2)/Gamma(nu+1). Both collapse to gr as x -> 0+.
    nu > -1/2, x >= 0.
    """
    if p.nu <= -0.5:
        raise DomainError("the bilateral bounds require nu > -1/2")
    if p.x < 0.0:
        raise DomainError("the bilateral bounds require x >= 0")
    gr = gamma_ratio(p.nu + 0.5, p.nu + 1.0)
    rate = gamma_ratio(p.nu + 1.0, p.nu + 1.5) / SQRT_PI
    lower = gr * math.exp(-rate * p.x)
    upper = gr - (-math.expm1(-p.x)) / (SQRT_PI * (p.nu + 0.5))
    return lower, upper
