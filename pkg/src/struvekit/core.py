"""Shared value types and evaluation configs."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError


class Method(enum.Enum):
    """Which route produced a function value."""

    SERIES = "series"
    QUADRATURE = "quadrature"
    FOX_WRIGHT = "foxwright"
    CLOSED_FORM = "closedform"


@dataclass(frozen=True)
class EvalPoint:
    """An (order, argument) pair at which the Struve family is evaluated."""

    nu: float
    x: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.nu) and math.isfinite(self.x)):
            raise DomainError("evaluation point must be finite")

    def domain_tags(self) -> frozenset[str]:
        """Names of the structural domains this point belongs to.

        Tags are used by the verification harness to route evaluations:
        ``integral-rep`` marks nu > -1/2 (integral representation valid),
        ``turanian`` marks nu > 1/2 (all three orders nu-1, nu, nu+1 have
        integral representations), ``ratio-band`` marks -1/2 <= nu <= 0,
        ``series-i`` / ``series-l`` mark convergent power series for the
        first-kind companions.
        """
        tags = set()
        if self.nu > -0.5:
            tags.add("integral-rep")
        if self.nu > 0.5:
            tags.add("turanian")
        if -0.5 <= self.nu <= 0.0:
            tags.add("ratio-band")
        if self.nu > -1.0:
            tags.add("series-i")
        if self.nu > -1.5:
            tags.add("series-l")
        if self.x > 0.0:
            tags.add("positive-x")
        return frozenset(tags)


@dataclass(frozen=True)
class FuncValue:
    """A computed value with an honest absolute-error estimate."""

    value: float
    abs_err: float
    method: Method

    def agrees_with(self, other: "FuncValue") -> bool:
        """True when the two values overlap within combined error bars."""
        return abs(self.value - other.value) <= self.abs_err + other.abs_err


@dataclass(frozen=True)
class SeriesConfig:
    """Stopping control for the power-series route.

    rel_tol is the next-term / partial-sum stopping ratio and must lie in
    (0, 1e-6]; max_terms must allow at least 30 terms so the stopping test
    is meaningful for every supported argument.
    """

    rel_tol: float = 1e-15
    max_terms: int = 500

    def __post_init__(self) -> None:
        if not (0.0 < self.rel_tol <= 1e-6):
            raise DomainError("rel_tol must lie in (0, 1e-6]")
        if self.max_terms < 30:
            raise DomainError("max_terms must be at least 30")


@dataclass(frozen=True)
class QuadConfig:
    """Refinement control for the tanh-sinh quadrature route.

    abs_tol is the target absolute error of the returned value, in
    (0, 1e-6]. max_level caps dyadic step refinements and must lie in
    [3, 12]. oracle_mode tightens both knobs for use as a reference
    evaluator inside cross-checks.
    """

    abs_tol: float = 1e-12
    max_level: int = 10
    oracle_mode: bool = False

    def __post_init__(self) -> None:
        if not (0.0 < self.abs_tol <= 1e-6):
            raise DomainError("abs_tol must lie in (0, 1e-6]")
        if not (3 <= self.max_level <= 12):
            raise DomainError("max_level must lie in [3, 12]")

    def effective(self) -> tuple[float, int]:
        """(abs_tol, max_level) actually used, after oracle tightening."""
        if self.oracle_mode:
            return min(self.abs_tol, 1e-13), 12
        return self.abs_tol, self.max_level


SERIES_DEFAULTS = SeriesConfig()
QUAD_DEFAULTS = QuadConfig()
