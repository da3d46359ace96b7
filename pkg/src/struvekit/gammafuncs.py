"""Gamma-family primitives used by every other module.

gamma/log_gamma wrap the platform libm implementations (Lanczos/Stirling
class accuracy, verified against the functional equation in the test
suite) behind explicit domain contracts. digamma and trigamma are
implemented here directly: recurrence shift into the asymptotic region
followed by the Bernoulli-number tail. Ratios of gamma values are always
formed in log space so they stay finite long after gamma itself would
overflow.
"""

from __future__ import annotations

import math

from .errors import DomainError, PoleError

#: Euler-Mascheroni constant, gamma = lim (H_n - ln n).
EULER_GAMMA = 0.5772156649015328606

SQRT_PI = math.sqrt(math.pi)

# Asymptotic digamma tail: psi(z) ~ ln z - 1/(2z) - sum c_k z^(-2k),
# c_k = B_{2k}/(2k). Terms through B_14 keep the truncation error below
# machine precision once z >= _ASYMPTOTIC_Z.
_DIGAMMA_TAIL = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
)

# Trigamma tail coefficients B_{2k} for psi'(z) ~ 1/z + 1/(2z^2)
# + sum B_{2k} z^(-2k-1).
_TRIGAMMA_TAIL = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
)

_ASYMPTOTIC_Z = 10.0


def gamma(z: float) -> float:
    """Gamma function for real z, z not a non-positive integer."""
    if z <= 0.0 and z == math.floor(z):
        raise PoleError(f"gamma has a pole at z = {z:g}")
    return math.gamma(z)


def log_gamma(z: float) -> float:
    """Natural log of gamma(z) for z > 0."""
    if z <= 0.0:
        raise DomainError("log_gamma requires z > 0")
    return math.lgamma(z)


def gamma_ratio(a: float, b: float) -> float:
    """gamma(a) / gamma(b) for a, b > 0, formed in log space."""
    return math.exp(log_gamma(a) - log_gamma(b))


def digamma(z: float) -> float:
    """Logarithmic derivative of gamma, psi(z) = gamma'(z)/gamma(z), z > 0."""
    if z <= 0.0:
        raise DomainError("digamma requires z > 0")
    acc = 0.0
    while z < _ASYMPTOTIC_Z:
        acc -= 1.0 / z
        z += 1.0
    w = 1.0 / (z * z)
    tail = 0.0
    for c in reversed(_DIGAMMA_TAIL):
        tail = (tail + c) * w
    return acc + math.log(z) - 0.5 / z - tail


def trigamma(z: float) -> float:
    """Derivative of digamma, psi'(z), z > 0."""
    if z <= 0.0:
        raise DomainError("trigamma requires z > 0")
    acc = 0.0
    while z < _ASYMPTOTIC_Z:
        acc += 1.0 / (z * z)
        z += 1.0
    w = 1.0 / (z * z)
    tail = 0.0
    for c in reversed(_TRIGAMMA_TAIL):
        tail = (tail + c) * w
    tail *= 1.0 / z
    return acc + 1.0 / z + 0.5 * w + tail


def _require_above_minus_one(nu: float) -> None:
    if nu <= -1.0:
        raise DomainError("gamma-ratio witnesses require nu > -1")


def gamma_ratio_f(nu: float) -> float:
    """(sqrt(pi)/2) * gamma(nu+3/2) / gamma(nu+2).

    Strictly decreasing witness for the upper gamma-ratio bound
    gamma(nu+3/2)/gamma(nu+2) < 2/sqrt(pi); equals 1 at nu = -1/2.
    """
    _require_above_minus_one(nu)
    return 0.5 * SQRT_PI * gamma_ratio(nu + 1.5, nu + 2.0)


def gamma_ratio_g(nu: float) -> float:
    """sqrt(pi/2) * sqrt(nu+1) * gamma(nu+3/2) / gamma(nu+2).

    Strictly increasing witness for the lower gamma-ratio bound
    gamma(nu+3/2)/gamma(nu+2) > sqrt(2/(pi (nu+1))); equals 1 at nu = -1/2.
    """
    _require_above_minus_one(nu)
    return math.sqrt(0.5 * math.pi * (nu + 1.0)) * gamma_ratio(nu + 1.5, nu + 2.0)


def gamma_ratio_h(nu: float) -> float:
    """Logarithmic derivative of gamma_ratio_g.

    h(nu) = psi(nu+3/2) - psi(nu+2) + 1/(2(nu+1)). Positive and strictly
    decreasing on nu > -1, which is what makes gamma_ratio_g increasing.
    """
    _require_above_minus_one(nu)
    return digamma(nu + 1.5) - digamma(nu + 2.0) + 0.5 / (nu + 1.0)


def gamma_ratio_h_prime(nu: float) -> float:
    """Derivative of gamma_ratio_h: trigamma difference minus 1/(2(nu+1)^2)."""
    _require_above_minus_one(nu)
    return trigamma(nu + 1.5) - trigamma(nu + 2.0) - 0.5 / ((nu + 1.0) ** 2)
