"""Fox-Wright series route: reference values, guard rails, bound machinery."""

import math

import pytest

from struvekit.core import EvalPoint, SeriesConfig
from struvekit.errors import (CancellationError, ConvergenceDomainError,
                              DomainError, PoleError)
from struvekit.foxwright import (FoxWrightParams, bilateral_bounds,
                                 calm_via_fox_wright, fox_wright_eval,
                                 fx4_conditions, fx4_margins,
                                 norm_form_params, psi_m)
from struvekit.gammafuncs import gamma, gamma_ratio

from conftest import rel_err
from oracles import CALM_TABLE, FOX_WRIGHT_TABLE


def test_series_matches_reference_values():
    """The 1Psi1 sum agrees with high-precision references, both signs of z."""
    for (nu, z), want in FOX_WRIGHT_TABLE.items():
        got = fox_wright_eval(norm_form_params(nu), z)
        assert rel_err(got.value, want) < 1e-12, (nu, z)
        assert abs(got.value - want) <= max(got.abs_err, 1e-13 * abs(want))


def test_normalized_form_matches_reference_at_moderate_x():
    checked = 0
    for (nu, x), want in CALM_TABLE.items():
        if x > 6.0:
            continue
        got = calm_via_fox_wright(EvalPoint(nu, x))
        assert rel_err(got.value, want) < 1e-10, (nu, x)
        checked += 1
    assert checked >= 8


def test_argument_zero_returns_leading_coefficient():
    params = norm_form_params(1.5)
    got = fox_wright_eval(params, 0.0)
    assert got.value == pytest.approx(psi_m(params, 0), rel=1e-15)
    assert got.abs_err <= 1e-14


def test_convergence_index_gate():
    """Series with epsilon <= 0 must be refused, not summed divergently."""
    bad = FoxWrightParams(upper=((1.0, 2.0),), lower=((1.0, 0.5),))
    assert bad.convergence_index == pytest.approx(-0.5)
    with pytest.raises(ConvergenceDomainError):
        fox_wright_eval(bad, 0.5)
    good = norm_form_params(0.0)
    assert good.convergence_index == pytest.approx(1.0)


def test_gamma_pole_in_parameters_raises():
    with pytest.raises(PoleError):
        fox_wright_eval(FoxWrightParams(upper=((0.0, 0.5),),
                                        lower=((1.0, 0.5),)), 0.5)
    with pytest.raises(PoleError):
        psi_m(FoxWrightParams(upper=((-1.0, 1.0),), lower=((1.0, 1.0),)), 0)


def test_alternating_cancellation_refused_at_large_x():
    """At large x the alternating sum loses too many digits and must refuse
    rather than return a polluted value."""
    with pytest.raises(CancellationError):
        calm_via_fox_wright(EvalPoint(1.0, 30.0))


def test_nonfinite_parameters_rejected():
    with pytest.raises(DomainError):
        FoxWrightParams(upper=((math.inf, 0.5),), lower=((1.0, 0.5),))
    with pytest.raises(DomainError):
        FoxWrightParams(upper=((0.5, 0.5),), lower=((1.0, math.nan),))


def test_normalized_form_domain():
    with pytest.raises(DomainError):
        calm_via_fox_wright(EvalPoint(-0.5, 1.0))
    with pytest.raises(DomainError):
        calm_via_fox_wright(EvalPoint(1.0, -0.1))
    with pytest.raises(DomainError):
        psi_m(norm_form_params(1.0), -1)


def test_psi_m_negative_noninteger_arguments():
    """Coefficients with negative non-integer gamma arguments use the direct
    product path and keep the sign."""
    params = FoxWrightParams(upper=((-0.3, 0.25),), lower=((1.0, 1.0),))
    assert psi_m(params, 0) == pytest.approx(gamma(-0.3), rel=1e-13)
    assert psi_m(params, 0) < 0.0


def test_psi_m_log_space_matches_direct_products():
    params = norm_form_params(2.5)
    for m in range(4):
        direct = gamma(0.5 + 0.5 * m) / gamma(3.5 + 0.5 * m)
        assert psi_m(params, m) == pytest.approx(direct, rel=1e-13)


def test_coefficient_conditions_hold_across_order_range():
    """Both gate conditions for the bilateral bound hold on the whole
    admissible order range, with strictly positive margins."""
    lo = -0.49
    for i in range(40):
        nu = lo + (100.0 - lo) * i / 39.0
        params = norm_form_params(nu)
        first, second = fx4_margins(params)
        assert first > 0.0, nu
        assert second > 0.0, nu
        assert fx4_conditions(params) == (True, True)


def test_bilateral_bounds_collapse_at_zero():
    for nu in (-0.45, 0.0, 1.0, 7.5):
        gr = gamma_ratio(nu + 0.5, nu + 1.0)
        lower, upper = bilateral_bounds(EvalPoint(nu, 0.0))
        assert lower == pytest.approx(gr, rel=1e-14)
        assert upper == pytest.approx(gr, rel=1e-14)


def test_bilateral_bounds_bracket_reference_values():
    for (nu, x), want in CALM_TABLE.items():
        lower, upper = bilateral_bounds(EvalPoint(nu, x))
        assert lower <= want * (1.0 + 1e-12), (nu, x)
        assert want <= upper * (1.0 + 1e-12) + 1e-12, (nu, x)


def test_bilateral_bounds_domain():
    with pytest.raises(DomainError):
        bilateral_bounds(EvalPoint(-0.5, 1.0))
    with pytest.raises(DomainError):
        bilateral_bounds(EvalPoint(1.0, -1.0))


def test_tight_tolerance_config_shrinks_error_bar():
    loose = fox_wright_eval(norm_form_params(1.0), -2.0,
                            SeriesConfig(rel_tol=1e-8))
    tight = fox_wright_eval(norm_form_params(1.0), -2.0,
                            SeriesConfig(rel_tol=1e-14))
    assert tight.abs_err <= loose.abs_err
    assert rel_err(tight.value, FOX_WRIGHT_TABLE[(1.0, -2.0)]) < 1e-13
