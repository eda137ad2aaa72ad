"""Residuals of the differential relations satisfied by the series.

Derivatives are taken term by term (exact up to truncation): the k-th
derivative of a pFq is moment(k) times the series with every parameter
raised by k. Each residual function also takes an optional ``trial``
callable x -> (F, F', F'') so that non-solutions can be fed through the
same operator as negative controls.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import DomainError
from .hyperseries import (DEFAULT_CONTROL, HypergeometricParams, SeriesControl, _as_params,
                          _check_domain, pfq, sum_shifted_series)
from .special import tricomi_c

Jet = Callable[[float], tuple]


@dataclass(frozen=True)
class OdeResidualReport:
    relation_id: str
    x: float
    residual: float
    scale: float
    normalized_residual: float


def _report(relation_id, x, terms) -> OdeResidualReport:
    residual = sum(terms)
    scale = max(abs(t) for t in terms)
    normalized = abs(residual) / scale if scale > 0.0 else abs(residual)
    return OdeResidualReport(relation_id, x, residual, scale, normalized)


def series_derivative_pfq(params, x: float, order: int,
                          control: SeriesControl = DEFAULT_CONTROL) -> float:
    """k-th derivative, sum_{r>=k} moment(r) x^(r-k) / (r-k)!, for k in {0, 1, 2}."""
    params = _as_params(params)
    if order not in (0, 1, 2):
        raise DomainError("order must be 0, 1 or 2")
    _check_domain(params, x)
    coef = params.moment(order)
    return sum_shifted_series(params.shifted(float(order)), x, coef, control).value


def pfq_jet(params, x: float, control: SeriesControl = DEFAULT_CONTROL) -> tuple:
    """(F, F', F'') of a pFq at x."""
    return tuple(series_derivative_pfq(params, x, k, control) for k in (0, 1, 2))


def tricomi_eigen_residual(nu: float, lam: float, x: float, trial: Jet | None = None,
                           control: SeriesControl = DEFAULT_CONTROL) -> OdeResidualReport:
    """(d/dx x d/dx + nu d/dx) g + lam g with g(x) = C_nu(lam x).

    Uses C_nu' = -C_{nu+1} and C_nu'' = C_{nu+2}, the termwise derivatives.
    """
    if x <= 0.0:
        raise DomainError("the Tricomi eigen-relation is checked for x > 0")
    if trial is None:
        u = lam * x
        g = tricomi_c(nu, u, control)
        g1 = -lam * tricomi_c(nu + 1.0, u, control)
        g2 = lam * lam * tricomi_c(nu + 2.0, u, control)
    else:
        g, g1, g2 = trial(x)
    return _report("tricomi_eigen", x, [g1, x * g2, nu * g1, lam * g])


def kummer_ode_residual(a: float, b: float, x: float, trial: Jet | None = None,
                        control: SeriesControl = DEFAULT_CONTROL) -> OdeResidualReport:
    """(x d/dx - x + b) d/dx F - a F with F = 1F1(a; b; x)."""
    F, F1, F2 = trial(x) if trial else pfq_jet(HypergeometricParams((a,), (b,)), x, control)
    return _report("kummer_ode", x, [x * F2, b * F1, -x * F1, -a * F])


def kummer_contiguous_residual(a: float, b: float, x: float, epsilon: float = 0.0,
                               trial: Jet | None = None,
                               control: SeriesControl = DEFAULT_CONTROL) -> OdeResidualReport:
    """(x d/dx + b) d/dx 1F1(a; b; x) - a' 1F1(a' + 1; b; x) with a' = a + epsilon."""
    F, F1, F2 = trial(x) if trial else pfq_jet(HypergeometricParams((a,), (b,)), x, control)
    ap = a + epsilon
    rhs = ap * pfq((ap + 1.0,), (b,), x, control)
    return _report("kummer_contiguous", x, [x * F2, b * F1, -rhs])


def gauss_ode_residual(a: float, b: float, c: float, x: float, trial: Jet | None = None,
                       control: SeriesControl = DEFAULT_CONTROL) -> OdeResidualReport:
    """x(1 - x) F'' + [c - (a + b + 1) x] F' - a b F with F = 2F1(a, b; c; x)."""
    if not abs(x) < 1.0:
        raise DomainError("the Gauss equation is checked inside |x| < 1")
    F, F1, F2 = trial(x) if trial else pfq_jet(HypergeometricParams((a, b), (c,)), x, control)
    return _report("gauss_ode", x, [x * (1.0 - x) * F2, c * F1, -(a + b + 1.0) * x * F1, -a * b * F])


def gauss_factor_form(a: float, b: float, c: float, x: float, trial: Jet | None = None,
                      control: SeriesControl = DEFAULT_CONTROL) -> float:
    """(x D + a)(x D + b) F - (x D + c) D F, the operator-factor form.

    Expanded, this is the negative of the canonical Gauss residual.
    """
    F, F1, F2 = trial(x) if trial else pfq_jet(HypergeometricParams((a, b), (c,)), x, control)
    left = x * x * F2 + (1.0 + a + b) * x * F1 + a * b * F
    right = x * F2 + c * F1
    return left - right


def cosine_jet(x: float, control: SeriesControl = DEFAULT_CONTROL) -> tuple:
    """(F, F', F'') of F(x) = 0F1(; 1/2; -x^2/4), by the chain rule through y = -x^2/4."""
    y = -0.25 * x * x
    G, G1, G2 = pfq_jet(HypergeometricParams((), (0.5,)), y, control)
    return G, -0.5 * x * G1, 0.25 * x * x * G2 - 0.5 * G1


def cosine_ode_residual(x: float, trial: Jet | None = None,
                        control: SeriesControl = DEFAULT_CONTROL) -> OdeResidualReport:
    """F'' + F with F(x) = 0F1(; 1/2; -x^2/4)."""
    F, _, F2 = trial(x) if trial else cosine_jet(x, control)
    return _report("cosine_ode", x, [F2, F])
