"""Double-exponential quadrature route: the normalized form, both
derivative families, the unnormalized function, and the cross-term
double integral."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from struvekit.core import EvalPoint, QuadConfig
from struvekit.errors import DomainError
from struvekit.gammafuncs import gamma_ratio
from struvekit.quadrature import (calm, calm_dnu, calm_dx, m_deriv,
                                  m_from_quadrature,
                                  turanian_il_double_integral)

from conftest import rel_err
from oracles import (CALM_DNU_TABLE, CALM_DX_TABLE, CALM_TABLE,
                     DOUBLE_INTEGRAL_TABLE, MPRIME_TABLE, M_TABLE)


@pytest.mark.parametrize("key,want", sorted(CALM_TABLE.items()))
def test_calm_table(key, want):
    fv = calm(EvalPoint(*key))
    assert rel_err(fv.value, want) < 1e-12
    assert abs(fv.value - want) <= max(fv.abs_err, 1e-12 * abs(want))


def test_calm_at_zero_is_gamma_ratio():
    for nu in (-0.49, -0.2, 0.0, 0.5, 3.0, 17.5):
        fv = calm(EvalPoint(nu, 0.0))
        assert rel_err(fv.value, gamma_ratio(nu + 0.5, nu + 1.0)) < 1e-13


@pytest.mark.parametrize("key,want", sorted(CALM_DX_TABLE.items()))
def test_calm_dx_table(key, want):
    nu, x, n = key
    fv = calm_dx(EvalPoint(nu, x), n)
    assert rel_err(fv.value, want) < 1e-10


@pytest.mark.parametrize("key,want", sorted(CALM_DNU_TABLE.items()))
def test_calm_dnu_table(key, want):
    nu, x, m = key
    fv = calm_dnu(EvalPoint(nu, x), m)
    assert rel_err(fv.value, want) < 1e-9


def test_calm_dx_order_zero_is_calm():
    p = EvalPoint(1.3, 2.7)
    assert calm_dx(p, 0).value == pytest.approx(calm(p).value, rel=1e-13)


@pytest.mark.parametrize("key,want", sorted(M_TABLE.items()))
def test_m_from_quadrature_table(key, want):
    nu, x = key
    if nu <= -0.5 or x <= 0.0:
        return
    fv = m_from_quadrature(EvalPoint(nu, x))
    assert rel_err(fv.value, want) < 1e-11


@pytest.mark.parametrize("key,want", sorted(MPRIME_TABLE.items()))
def test_m_deriv_table(key, want):
    fv = m_deriv(EvalPoint(*key))
    assert rel_err(fv.value, want) < 1e-10


@pytest.mark.parametrize("key,want", sorted(DOUBLE_INTEGRAL_TABLE.items()))
def test_double_integral_table(key, want):
    fv = turanian_il_double_integral(EvalPoint(*key))
    assert rel_err(fv.value, want) < 1e-9
    assert fv.value > 0.0


def test_domain_rejections():
    with pytest.raises(DomainError):
        calm(EvalPoint(-0.5, 1.0))
    with pytest.raises(DomainError):
        calm(EvalPoint(1.0, -0.1))
    with pytest.raises(DomainError):
        m_from_quadrature(EvalPoint(1.0, 0.0))
    with pytest.raises(DomainError):
        turanian_il_double_integral(EvalPoint(0.5, 1.0))
    with pytest.raises(DomainError):
        calm_dx(EvalPoint(1.0, 1.0), 11)
    with pytest.raises(DomainError):
        calm_dnu(EvalPoint(1.0, 1.0), 7)


def test_oracle_mode_tightens():
    p = EvalPoint(0.7, 1.3)
    loose = calm(p, QuadConfig(abs_tol=1e-8))
    tight = calm(p, QuadConfig(abs_tol=1e-8, oracle_mode=True))
    assert tight.abs_err <= loose.abs_err
    assert rel_err(tight.value, loose.value) < 1e-7


@given(st.floats(min_value=-0.45, max_value=15.0),
       st.floats(min_value=1e-3, max_value=30.0))
def test_reported_error_bound_is_honest_vs_tight_rerun(nu, x):
    p = EvalPoint(nu, x)
    fv = calm(p)
    ref = calm(p, QuadConfig(abs_tol=1e-13, oracle_mode=True))
    assert abs(fv.value - ref.value) <= fv.abs_err + ref.abs_err + 1e-14


@given(st.floats(min_value=-0.45, max_value=10.0),
       st.floats(min_value=1e-2, max_value=20.0))
def test_first_derivative_matches_finite_difference(nu, x):
    p = EvalPoint(nu, x)
    h = 1e-5
    fd = (calm(EvalPoint(nu, x + h)).value
          - calm(EvalPoint(nu, x - h)).value) / (2.0 * h)
    assert abs(calm_dx(p, 1).value - fd) < 1e-6
