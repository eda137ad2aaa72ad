import math

import pytest
from hypothesis import given, settings, strategies as st

from umbralhyp import oracles
from umbralhyp.errors import DomainError
from umbralhyp.hyperseries import HypergeometricParams, pfq
from umbralhyp.integrals import (bessel_squared_fox_wright, bessel_squared_gaussian_integral,
                                 euler_integral_1f1, euler_integral_2f1, fox_wright_gaussian_form,
                                 gaussian_cosine_integral, gaussian_integral_pfq,
                                 gaussian_integral_value, gaussian_quadratic_arg_integral,
                                 geometric_gaussian_integral, kummer_gauss_series,
                                 kummer_gauss_transform, mellin_integral, mellin_power_integral,
                                 weighted_exp_integral)
from umbralhyp.pochhammer import pochhammer

# frozen quadrature-oracle values (adaptive GK15 at rel 1e-11, mpmath integrand where needed)
GAUSSIAN_1F1 = 1.931928983008214  # int e^(-x^2) 1F1(1; 2; x) dx
GAUSSIAN_COS = 1.809412949489707  # int e^(-x^2) cos(sqrt x) dx
WEIGHTED_EXP = 0.452068324018337  # int_0^0.5 e^(-t) (-log(1-t)/t) dt
POWER_MELLIN = 0.942477796076938  # int_0^inf 2F1(2, 3; 4; -t^2) dt
BESSEL_SQ_1 = 1.856170134408911
BESSEL_SQ_2 = 1.282800372290294

MELLIN_GRID = [(2, 3, 4, 1), (3, 5, 2, 0.5), (2.5, 4, 3, 1.5), (4, 6, 5, 2), (2, 2, 3, 0.75)]


def test_mellin_examples():
    assert mellin_integral(2, 3, 4, 1) == pytest.approx(1.5, rel=1e-14)
    with pytest.raises(DomainError):
        mellin_integral(2, 3, 4, 2.5)
    with pytest.raises(DomainError):
        mellin_integral(2, 3, 4, 0)
    want = math.gamma(0.5) * pochhammer(3, -0.5) * pochhammer(5, -0.5) / pochhammer(2, -0.5)
    assert mellin_integral(3, 5, 2, 0.5) == pytest.approx(want, rel=1e-14)


@pytest.mark.parametrize("a,b,c,nu", MELLIN_GRID)
def test_mellin_vs_quadrature(a, b, c, nu):
    assert mellin_integral(a, b, c, nu) == pytest.approx(oracles.mellin_lhs(a, b, c, nu), rel=1e-9)


def test_power_mellin_examples():
    assert mellin_power_integral(2, 3, 4, 2, 1) == pytest.approx(POWER_MELLIN, rel=1e-12)
    assert oracles.mellin_lhs(2, 3, 4, 1, 2) == pytest.approx(POWER_MELLIN, rel=1e-9)
    with pytest.raises(DomainError):
        mellin_power_integral(2, 3, 4, 2, 0)
    with pytest.raises(DomainError):
        mellin_power_integral(2, 3, 4, 0, 1)


@pytest.mark.parametrize("a,b,c,nu", MELLIN_GRID)
def test_power_mellin_mu_one_is_bitwise(a, b, c, nu):
    assert mellin_power_integral(a, b, c, 1.0, nu) == mellin_integral(a, b, c, nu)


def test_gaussian_pfq_examples():
    closed, pref, arg = gaussian_integral_pfq(HypergeometricParams([1], [2]), 1.0, 1.0)
    assert closed == HypergeometricParams([0.5, 1.0], [1.0, 1.5])
    assert pref == pytest.approx(math.sqrt(math.pi), rel=1e-15)
    assert arg == 0.25
    assert gaussian_integral_value(HypergeometricParams([1], [2]), 1, 1) == pytest.approx(
        GAUSSIAN_1F1, rel=1e-12)
    closed, _, arg = gaussian_integral_pfq(HypergeometricParams([1.3], [2, 3]), 2.0, 1.5)
    assert closed.p == 2 and closed.q == 4
    assert arg == pytest.approx(1.5 ** 2 / 32, rel=1e-15)
    closed, _, arg = gaussian_integral_pfq(HypergeometricParams([], [1]), 1.0, 1.0)
    assert closed == HypergeometricParams([], [0.5, 1.0])
    assert arg == pytest.approx(1 / 16, rel=1e-15)


def test_gaussian_pfq_domain():
    with pytest.raises(DomainError):
        gaussian_integral_pfq(HypergeometricParams([1, 1, 1], [2]), 1, 1)
    with pytest.raises(DomainError):
        gaussian_integral_pfq(HypergeometricParams([1], [2]), 0, 1)
    # 2F1: the 4F2 closed form only converges for |beta^2/alpha| < 1
    with pytest.raises(DomainError):
        gaussian_integral_pfq(HypergeometricParams([1, 1], [2]), 1, 1)


@pytest.mark.parametrize("params", [([1], [2]), ([1.5], [2, 3]), ([], [1]), ([1, 2], [3, 4])])
@pytest.mark.parametrize("alpha,beta", [(1, 1), (2, -1.5), (0.7, 0.4)])
def test_gaussian_pfq_vs_quadrature(params, alpha, beta):
    params = HypergeometricParams(*params)
    assert gaussian_integral_value(params, alpha, beta) == pytest.approx(
        oracles.gaussian_pfq_lhs(params, alpha, beta), rel=1e-8)


@pytest.mark.parametrize("alpha", [0.5, 1, 3.7])
def test_gaussian_pfq_beta_zero(alpha):
    params = HypergeometricParams([1.5], [2, 3])
    assert gaussian_integral_value(params, alpha, 0.0) == pytest.approx(
        math.sqrt(math.pi / alpha), rel=1e-15)


@settings(max_examples=60, deadline=None)
@given(alpha=st.floats(0.1, 5), beta=st.floats(-4, 4))
def test_gaussian_pfq_even_in_beta(alpha, beta):
    params = HypergeometricParams([1.5], [2, 0.7])
    assert gaussian_integral_pfq(params, alpha, beta) == gaussian_integral_pfq(
        params, alpha, -beta)


def test_gaussian_cosine_examples():
    assert gaussian_cosine_integral(1, 1) == pytest.approx(GAUSSIAN_COS, rel=1e-12)
    assert gaussian_cosine_integral(1, 0) == pytest.approx(math.sqrt(math.pi), rel=1e-15)
    want = math.sqrt(math.pi / 4) * pfq([], [0.25, 0.75], 1 / 1024)
    assert gaussian_cosine_integral(4, 1) == pytest.approx(want, rel=1e-14)
    with pytest.raises(DomainError):
        gaussian_cosine_integral(0, 1)


@pytest.mark.parametrize("alpha,beta", [(1, 1), (4, 1), (0.5, 3), (2, -2), (1, 10)])
def test_gaussian_cosine_vs_quadrature(alpha, beta):
    assert gaussian_cosine_integral(alpha, beta) == pytest.approx(
        oracles.gaussian_cosine_lhs(alpha, beta), rel=1e-8)


def test_quadratic_arg_examples():
    want = math.sqrt(math.pi / 2) * pochhammer(1.5, -0.5) / (pochhammer(2, -0.5)
                                                              * pochhammer(3, -0.5))
    assert gaussian_quadratic_arg_integral(1.5, 2, 3, 2, 0.0) == pytest.approx(want, rel=1e-14)
    # a = b = c = 1: moment(r - 1/2) = 1/Gamma(r + 1/2) and the series sums to a cosh
    for alpha, beta in [(1, 1), (2, 0.7), (0.5, -2)]:
        assert gaussian_quadratic_arg_integral(1, 1, 1, alpha, beta) == pytest.approx(
            math.cosh(beta / math.sqrt(alpha)) / math.sqrt(alpha), rel=1e-13)
    with pytest.raises(DomainError):
        gaussian_quadratic_arg_integral(1, 2, 2, 0, 1)


@pytest.mark.parametrize("a,b,c,alpha,beta", [(1, 3, 3, 1, 1), (1.5, 3, 4, 2, 1),
                                              (1, 2, 2, 1, 1), (2, 2.5, 3, 1.5, -1.2),
                                              (0.8, 1.5, 2, 1, 2)])
def test_quadratic_arg_vs_quadrature(a, b, c, alpha, beta):
    params = HypergeometricParams([a], [b, c])
    assert gaussian_quadratic_arg_integral(a, b, c, alpha, beta) == pytest.approx(
        oracles.quadratic_arg_lhs(params, alpha, beta), rel=1e-8)


def test_quadratic_arg_cancelling_is_gaussian_shift():
    from umbralhyp.integrals import quadratic_arg_integral
    for a, alpha, beta in [(1.5, 1, 1), (2.5, 2, -1), (0.75, 0.5, 1.4)]:
        got = quadratic_arg_integral(HypergeometricParams([a], [a]), alpha, beta).value
        want = math.sqrt(math.pi / alpha) * math.exp(beta * beta / (4 * alpha))
        assert got == pytest.approx(want, rel=1e-12)


def test_geometric_examples():
    assert geometric_gaussian_integral(1, 0) == math.pi
    assert geometric_gaussian_integral(1, 1) == pytest.approx(math.pi / math.sqrt(0.75),
                                                              rel=1e-15)
    with pytest.raises(DomainError):
        geometric_gaussian_integral(1, 2)
    with pytest.raises(DomainError):
        geometric_gaussian_integral(1, -3)
    with pytest.raises(DomainError):
        geometric_gaussian_integral(0, 0)


@pytest.mark.parametrize("alpha", [0.25, 1.0, 2.0, 9.0, 0.1])
def test_geometric_beta_zero_exact(alpha):
    assert geometric_gaussian_integral(alpha, 0.0) == math.pi / math.sqrt(alpha)


@pytest.mark.parametrize("alpha,beta", [(1, 0), (1, 1), (2, -2), (0.5, 1.2), (5, 4)])
def test_geometric_vs_quadrature(alpha, beta):
    assert geometric_gaussian_integral(alpha, beta) == pytest.approx(
        oracles.geometric_lhs(alpha, beta), rel=1e-10)


def test_weighted_exp_examples():
    assert weighted_exp_integral(1, 1, 2, 0, 0.5) == pytest.approx(WEIGHTED_EXP, rel=1e-12)
    # 2F1(1, 2; 2; t) = 1/(1 - t)
    assert weighted_exp_integral(1, 2, 2, 1, 0.3) == pytest.approx(
        oracles.weighted_exp_lhs(1, 2, 2, 1, 0.3), rel=1e-10)
    assert weighted_exp_integral(1, 1, 2, 0, 0.0) == 0.0
    x = 1e-8
    assert weighted_exp_integral(1.5, 2, 3, 0.5, x) == pytest.approx(x ** 1.5 / 1.5, rel=1e-7)
    with pytest.raises(DomainError):
        weighted_exp_integral(1, 1, 2, -1, 0.5)
    with pytest.raises(DomainError):
        weighted_exp_integral(1, 1, 2, 0, 1.0)
    with pytest.raises(DomainError):
        weighted_exp_integral(1, 1, -2, 0, 0.5)


@pytest.mark.parametrize("a,b,c,alpha,x", [(1, 1, 2, 0, 0.5), (0.5, 1.5, 2.5, 1, 0.8),
                                           (2, 3, 4, -0.5, 0.6), (-1.5, 2, 1.2, 2, 0.9),
                                           (3, 1, 0.6, 0.3, 0.2)])
def test_weighted_exp_vs_quadrature(a, b, c, alpha, x):
    assert weighted_exp_integral(a, b, c, alpha, x) == pytest.approx(
        oracles.weighted_exp_lhs(a, b, c, alpha, x), rel=1e-9)


def test_bessel_squared_examples():
    assert bessel_squared_gaussian_integral(1) == pytest.approx(BESSEL_SQ_1, rel=1e-12)
    assert bessel_squared_gaussian_integral(2) == pytest.approx(BESSEL_SQ_2, rel=1e-12)
    big = 1e8
    assert bessel_squared_gaussian_integral(big) == pytest.approx(
        math.sqrt(math.pi / big), rel=1e-8)
    with pytest.raises(DomainError):
        bessel_squared_gaussian_integral(-1)


@pytest.mark.parametrize("alpha", [0.3, 1, 2, 5, 20])
def test_bessel_squared_vs_quadrature(alpha):
    assert bessel_squared_gaussian_integral(alpha) == pytest.approx(
        oracles.bessel_squared_lhs(alpha), rel=1e-8)
    assert bessel_squared_fox_wright(alpha) == pytest.approx(
        bessel_squared_gaussian_integral(alpha), rel=1e-12)


def test_fox_wright_gaussian_examples():
    assert fox_wright_gaussian_form(1, 2, 3, 1, 0) == pytest.approx(math.sqrt(math.pi),
                                                                    rel=1e-14)
    closed = gaussian_integral_value(HypergeometricParams([1], [2, 3]), 1, 2)
    assert fox_wright_gaussian_form(1, 2, 3, 1, 2) == pytest.approx(closed, rel=1e-10)


@settings(max_examples=50, deadline=None)
@given(a=st.floats(0.2, 5), b=st.floats(0.2, 5), c=st.floats(0.2, 5), alpha=st.floats(0.2, 5),
       beta=st.floats(-5, 5))
def test_fox_wright_gaussian_matches_pfq(a, b, c, alpha, beta):
    closed = gaussian_integral_value(HypergeometricParams([a], [b, c]), alpha, beta)
    assert fox_wright_gaussian_form(a, b, c, alpha, beta) == pytest.approx(closed, rel=1e-10)


def test_euler_examples():
    assert euler_integral_1f1(1, 2, 1) == pytest.approx(math.e - 1, rel=1e-12)
    assert euler_integral_1f1(1.3, 2.9, 0) == pytest.approx(1.0, rel=1e-12)
    assert euler_integral_1f1(0.5, 1.5, -2) == pytest.approx(pfq([0.5], [1.5], -2), rel=1e-9)
    assert euler_integral_2f1(1, 1, 2, 0.5) == pytest.approx(2 * math.log(2), rel=1e-12)
    assert euler_integral_2f1(0.4, 1.1, 2.2, 0) == pytest.approx(1.0, rel=1e-12)
    assert euler_integral_2f1(0.7, 2.1, 3.3, -0.8) == pytest.approx(
        pfq([0.7, 2.1], [3.3], -0.8), rel=1e-9)
    with pytest.raises(DomainError):
        euler_integral_1f1(2, 1, 0.5)
    with pytest.raises(DomainError):
        euler_integral_2f1(1, 1, 2, 1.0)


def test_kummer_gauss_examples():
    assert kummer_gauss_transform(1.2, 3, 2, 0) == pytest.approx(1.0, rel=1e-12)
    for a, b, alpha, beta in [(1, 2, 1, 1), (0.5, 2.5, 2, 3)]:
        assert kummer_gauss_transform(a, b, alpha, beta) == pytest.approx(
            kummer_gauss_series(a, b, alpha, beta), rel=1e-9)
    with pytest.raises(DomainError):
        kummer_gauss_transform(2, 2, 1, 1)
    with pytest.raises(DomainError):
        kummer_gauss_transform(1, 2, -1, 1)
