"""Gamma-function helpers against frozen mpmath references."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from struvekit.gammafuncs import (EULER_GAMMA, SQRT_PI, digamma, gamma,
                                  gamma_ratio, gamma_ratio_f, gamma_ratio_g,
                                  gamma_ratio_h, gamma_ratio_h_prime,
                                  log_gamma, trigamma)

from conftest import rel_err
from oracles import DIGAMMA_TABLE, GAMMA_TABLE, TRIGAMMA_TABLE


def test_constants():
    assert SQRT_PI == pytest.approx(math.sqrt(math.pi), rel=1e-15)
    assert EULER_GAMMA == pytest.approx(0.5772156649015328606065, rel=1e-15)


@pytest.mark.parametrize("a,want", sorted(GAMMA_TABLE.items()))
def test_gamma_table(a, want):
    assert rel_err(gamma(a), want) < 1e-13
    assert rel_err(log_gamma(a), math.log(want)) < 1e-12


@pytest.mark.parametrize("a,want", sorted(DIGAMMA_TABLE.items()))
def test_digamma_table(a, want):
    assert rel_err(digamma(a), want) < 1e-12


@pytest.mark.parametrize("a,want", sorted(TRIGAMMA_TABLE.items()))
def test_trigamma_table(a, want):
    assert rel_err(trigamma(a), want) < 1e-11


@given(st.floats(min_value=0.05, max_value=30.0),
       st.floats(min_value=0.05, max_value=30.0))
def test_gamma_ratio_matches_quotient(a, b):
    assert rel_err(gamma_ratio(a, b), gamma(a) / gamma(b)) < 1e-12


def test_gamma_ratio_handles_large_arguments():
    # direct quotient would overflow near a ~ 180
    assert gamma_ratio(200.5, 201.0) == pytest.approx(
        math.exp(log_gamma(200.5) - log_gamma(201.0)), rel=1e-13)


def test_ratio_f_and_g_pinned_at_minus_half():
    assert gamma_ratio_f(-0.5) == pytest.approx(1.0, rel=1e-14)
    assert gamma_ratio_g(-0.5) == pytest.approx(1.0, rel=1e-14)


@given(st.floats(min_value=-0.45, max_value=20.0))
def test_ratio_f_decreasing_g_increasing(nu):
    h = 1e-3
    assert gamma_ratio_f(nu + h) < gamma_ratio_f(nu)
    assert gamma_ratio_g(nu + h) > gamma_ratio_g(nu)


def test_h_matches_definition():
    for nu in (-0.9, -0.3, 0.0, 1.7, 12.0):
        want = (digamma(nu + 1.5) - digamma(nu + 2.0)
                + 0.5 / (nu + 1.0))
        assert gamma_ratio_h(nu) == pytest.approx(want, rel=1e-13)


def test_h_prime_matches_finite_difference():
    for nu in (-0.5, 0.4, 3.0, 15.0):
        h = 1e-5
        fd = (gamma_ratio_h(nu + h) - gamma_ratio_h(nu - h)) / (2 * h)
        assert gamma_ratio_h_prime(nu) == pytest.approx(fd, abs=1e-7)


def test_domain_rejection():
    from struvekit.errors import DomainError
    with pytest.raises(DomainError):
        gamma_ratio_h(-1.0)
    with pytest.raises(DomainError):
        gamma_ratio_f(-1.2)
