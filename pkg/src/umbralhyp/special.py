"""Named special functions as views over the hypergeometric series."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, NoConvergence
from .hyperseries import (DEFAULT_CONTROL, EvalResult, FoxWrightParams, SeriesControl,
                          eval_fox_wright, pfq)
from .pochhammer import lgamma_signed, nearest_integer, rgamma


def bessel_j0(x: float, control: SeriesControl = DEFAULT_CONTROL) -> float:
    """J_0(x) = 0F1(; 1; -x^2/4)."""
    return pfq((), (1.0,), -0.25 * x * x, control)


def tricomi_c(nu: float, x: float, control: SeriesControl = DEFAULT_CONTROL) -> float:
    """Tricomi function C_nu(x) = sum_r (-x)^r / (r! Gamma(nu + r + 1)).

    Terms where Gamma(nu + r + 1) has a pole count as zero, so for integer
    nu = -k the series starts at r = k and C_{-k}(x) = (-x)^k C_k(x).
    """
    k = nearest_integer(nu)
    if k is not None and k <= -1:
        return (-x) ** (-k) * tricomi_c(float(-k), x, control)
    return rgamma(nu + 1.0) * pfq((), (nu + 1.0,), -x, control)


def cos_hyp(x: float, control: SeriesControl = DEFAULT_CONTROL) -> float:
    return pfq((), (0.5,), -0.25 * x * x, control)


def sin_hyp(x: float, control: SeriesControl = DEFAULT_CONTROL) -> float:
    return x * pfq((), (1.5,), -0.25 * x * x, control)


def cos_half(x: float, control: SeriesControl = DEFAULT_CONTROL) -> float:
    """sum_r Gamma(r/2 + 1) / (r!)^2 x^r, i.e. the Fox-Wright 1Psi1[(1, 1/2); (1, 1); x]."""
    params = FoxWrightParams(upper=[(1.0, 0.5)], lower=[(1.0, 1.0)])
    return eval_fox_wright(params, x, control).value


def gauss_transform_cos_half(x: float, control: SeriesControl = DEFAULT_CONTROL) -> float:
    """Average of cos_{1/2}(2 i xi x) against exp(-xi^2)/sqrt(pi), term by term.

    Odd Gaussian moments vanish; the even ones are Gamma(k + 1/2)/sqrt(pi), and
    the surviving coefficients are Gamma(k + 1)/((2k)!)^2 (2 i x)^{2k}. The
    result is cos(x).
    """
    if x == 0.0:
        return 1.0
    log4x2 = math.log(4.0 * x * x)
    half_log_pi = 0.5 * math.log(math.pi)
    total = 1.0
    small = 0
    for k in range(1, control.max_terms):
        moment = math.lgamma(k + 0.5) - half_log_pi
        coeff = math.lgamma(k + 1.0) - 2.0 * math.lgamma(2.0 * k + 1.0)
        term = math.exp(moment + coeff + k * log4x2)
        if k % 2:
            term = -term
        total += term
        small = small + 1 if abs(term) <= control.rel_tol * abs(total) else 0
        if small >= 2 and k + 1 >= control.min_terms:
            return total
    raise NoConvergence("Gaussian transform of cos_1/2 did not converge",
                        EvalResult(total, control.max_terms, abs(term), False))


def j0_squared(x: float, control: SeriesControl = DEFAULT_CONTROL) -> float:
    """J_0(x)^2 = 1F2(1/2; 1, 1; -x^2)."""
    return pfq((0.5,), (1.0, 1.0), -x * x, control)


@dataclass(frozen=True)
class LandauParams:
    lam: float
    m_l: float

    @property
    def a(self) -> float:
        return -self.lam + (abs(self.m_l) + 1.0) / 2.0

    @property
    def b(self) -> float:
        return 1.0 + abs(self.m_l)


def landau_radial(params: LandauParams, xi: float,
                  control: SeriesControl = DEFAULT_CONTROL) -> float:
    """exp(-xi/2) xi^{|m_l|/2} 1F1(a; b; xi) with a = -lambda + (|m_l| + 1)/2, b = 1 + |m_l|."""
    if xi < 0.0:
        raise DomainError("the Landau radial variable must be non-negative")
    return (math.exp(-0.5 * xi) * xi ** (0.5 * abs(params.m_l))
            * pfq((params.a,), (params.b,), xi, control))


def gamma_ratio(num, den) -> float:
    """prod Gamma(num) / prod Gamma(den) with signs, through log-gamma."""
    la, sg = 0.0, 1.0
    for v in num:
        g, s = lgamma_signed(v)
        la += g
        sg *= s
    for v in den:
        g, s = lgamma_signed(v)
        la -= g
        sg *= s
    return sg * math.exp(la)
