"""Closed forms for integrals of hypergeometric functions.

Each function returns the right-hand side of an integral identity. The
left-hand sides are computed independently (by quadrature) in ``oracles``.
"""

from __future__ import annotations

import math

from .errors import DomainError, NoConvergence
from .hyperseries import (DEFAULT_CONTROL, EvalResult, FoxWrightParams, HypergeometricParams,
                          SeriesControl, _as_params, eval_fox_wright, eval_pfq, pfq)
from .pochhammer import is_nonpositive_integer
from .quadrature import Finite, integrate
from .special import gamma_ratio


def _mellin_symbol(a, b, c):
    return HypergeometricParams((a, b), (c,))


def mellin_integral(a: float, b: float, c: float, nu: float) -> float:
    """int_0^inf t^(nu-1) 2F1(a, b; c; -t) dt = Gamma(nu) (a)_{-nu} (b)_{-nu} / (c)_{-nu}."""
    if not 0.0 < nu < min(a, b):
        raise DomainError(f"need 0 < nu < min(a, b), got nu={nu}, a={a}, b={b}")
    return math.gamma(nu) * _mellin_symbol(a, b, c).moment(-nu)


def mellin_power_integral(a: float, b: float, c: float, mu: float, nu: float) -> float:
    """int_0^inf t^(nu-1) 2F1(a, b; c; -t^mu) dt, by t^mu = s."""
    if not mu > 0.0:
        raise DomainError("mu must be positive")
    s = nu / mu
    if not 0.0 < s < min(a, b):
        raise DomainError(f"need 0 < nu/mu < min(a, b), got nu/mu={s}")
    return mellin_integral(a, b, c, s) / mu


def _halved(values):
    out = []
    for v in values:
        out += [0.5 * v, 0.5 * (v + 1.0)]
    return tuple(out)


def gaussian_integral_pfq(params, alpha: float, beta: float
                          ) -> tuple[HypergeometricParams, float, float]:
    """int e^(-alpha x^2) pFq(a; b; beta x) dx over the real line.

    Only even powers survive, and (a)_{2k} = 4^k (a/2)_k ((a+1)/2)_k turns the
    result into sqrt(pi/alpha) * 2pF2q(a/2, (a+1)/2; b/2, (b+1)/2; X) with
    X = 4^(p-q) beta^2 / (4 alpha). Returns (closed params, prefactor, X).
    """
    params = _as_params(params)
    if not alpha > 0.0:
        raise DomainError("alpha must be positive")
    if params.p > params.q + 1:
        raise DomainError(f"{params.p}F{params.q} grows too fast for a Gaussian weight")
    closed = HypergeometricParams(_halved(params.upper), _halved(params.lower))
    argument = 4.0 ** (params.p - params.q) * beta * beta / (4.0 * alpha)
    if (closed.p > closed.q + 1 and argument != 0.0
            and not any(is_nonpositive_integer(a) for a in closed.upper)):
        raise DomainError(f"the closed form {closed.p}F{closed.q} diverges at {argument}")
    return closed, math.sqrt(math.pi / alpha), argument


def gaussian_integral_value(params, alpha: float, beta: float,
                            control: SeriesControl = DEFAULT_CONTROL) -> float:
    closed, prefactor, argument = gaussian_integral_pfq(params, alpha, beta)
    return prefactor * eval_pfq(closed, argument, control).value


def gaussian_cosine_integral(alpha: float, beta: float,
                             control: SeriesControl = DEFAULT_CONTROL) -> float:
    """int e^(-alpha x^2) cos(sqrt(beta x)) dx with cos(sqrt(y)) = 0F1(; 1/2; -y/4).

    Equals sqrt(pi/alpha) 0F2(; 1/4, 3/4; beta^2 / (256 alpha)).
    """
    if not alpha > 0.0:
        raise DomainError("alpha must be positive")
    return gaussian_integral_value(((), (0.5,)), alpha, -0.25 * beta, control)


def quadratic_arg_integral(params, alpha: float, beta: float,
                           control: SeriesControl = DEFAULT_CONTROL) -> EvalResult:
    """int pFq(a; b; -alpha x^2 + beta x) dx over the real line.

    Termwise, the Gaussian e^{-c alpha x^2 + c beta x} integrates to
    sqrt(pi/(c alpha)) e^{c X}, X = beta^2/(4 alpha), so the result is
    sqrt(pi/alpha) sum_r moment(r - 1/2) X^r / r!
      = sqrt(pi/alpha) moment(-1/2) pFq(a - 1/2; b - 1/2; X).
    """
    params = _as_params(params)
    if not alpha > 0.0:
        raise DomainError("alpha must be positive")
    m0 = params.moment(-0.5)
    X = beta * beta / (4.0 * alpha)
    shifted = params.shifted(-0.5)
    res = eval_pfq(shifted, X, control)
    scale = math.sqrt(math.pi / alpha) * m0
    return EvalResult(scale * res.value, res.terms_used, abs(scale) * res.tail_estimate,
                      res.converged)


def gaussian_quadratic_arg_integral(a: float, b: float, c: float, alpha: float, beta: float,
                                    control: SeriesControl = DEFAULT_CONTROL) -> float:
    """The 1F2(a; b, c; -alpha x^2 + beta x) case of ``quadratic_arg_integral``."""
    return quadratic_arg_integral(((a,), (b, c)), alpha, beta, control).value


def geometric_gaussian_integral(alpha: float, beta: float) -> float:
    """int dz / (1 + alpha z^2 - beta z) = pi / sqrt(alpha (1 - beta^2/(4 alpha)))."""
    if not alpha > 0.0:
        raise DomainError("alpha must be positive")
    disc = 1.0 - beta * beta / (4.0 * alpha)
    if disc <= 0.0:
        raise DomainError("beta^2 >= 4 alpha puts real poles on the integration path")
    return math.pi / math.sqrt(alpha * disc)


def weighted_exp_integral(a: float, b: float, c: float, alpha: float, x: float,
                          control: SeriesControl = DEFAULT_CONTROL) -> float:
    """int_0^x t^alpha e^(-t) 2F1(a, b; c; t) dt for 0 <= x < 1.

    Expanding e^{-t} and collecting powers gives
    x^(alpha+1)/(alpha+1) sum_r (-1)^r (alpha+1)_r x^r / ((alpha+2)_r r!) S_r,
    where S_r is the terminating sum_s (-r)_s (a)_s (b)_s / ((c)_s s!).
    S_r grows like r!, so it is carried as (-1)^r S_r / r!
    = sum_s (-1)^(r-s) u_s / (r-s)!, u_s = (a)_s (b)_s / ((c)_s s!),
    whose summands stay of moderate size.
    """
    if not alpha > -1.0:
        raise DomainError("alpha must exceed -1")
    if not 0.0 <= x < 1.0:
        raise DomainError("x must lie in [0, 1)")
    if is_nonpositive_integer(c):
        raise DomainError("c is a non-positive integer")
    if x == 0.0:
        return 0.0
    u = [1.0]
    inv_fact = [1.0]
    terms = []
    power = 1.0  # (alpha+1)_r x^r / (alpha+2)_r without the r-independent factor
    total = 0.0
    small = 0
    for r in range(control.max_terms):
        if r:
            s = r - 1
            u.append(u[-1] * (a + s) * (b + s) / ((c + s) * (s + 1)))
            inv_fact.append(inv_fact[-1] / r)
            power *= x
        inner = math.fsum(u[s] * inv_fact[r - s] * (-1.0 if (r - s) % 2 else 1.0)
                          for s in range(r + 1))
        term = power * (alpha + 1.0) / (alpha + 1.0 + r) * inner
        terms.append(term)
        total = math.fsum(terms)
        small = small + 1 if abs(term) <= control.rel_tol * abs(total) else 0
        if small >= 2 and r + 1 >= control.min_terms:
            return x ** (alpha + 1.0) / (alpha + 1.0) * total
    raise NoConvergence("weighted exponential series did not converge",
                        EvalResult(total, control.max_terms, abs(terms[-1]), False))


def bessel_squared_gaussian_integral(alpha: float,
                                     control: SeriesControl = DEFAULT_CONTROL) -> float:
    """int e^(-alpha x^2) J_0(sqrt x)^2 dx over the real line, with J_0(sqrt x)^2 read
    as 1F2(1/2; 1, 1; -x).

    Equals alpha^(-1/2) sum_r Gamma(1/2 + 2r) / ((2r)!^2 r!) (4 alpha)^(-r).
    """
    if not alpha > 0.0:
        raise DomainError("alpha must be positive")
    lx = -math.log(4.0 * alpha)
    total = 0.0
    small = 0
    term = 0.0
    for r in range(control.max_terms):
        term = math.exp(math.lgamma(0.5 + 2 * r) - 2.0 * math.lgamma(2 * r + 1.0)
                        - math.lgamma(r + 1.0) + r * lx)
        total += term
        small = small + 1 if term <= control.rel_tol * total else 0
        if small >= 2 and r + 1 >= control.min_terms:
            return total / math.sqrt(alpha)
    raise NoConvergence("Bessel-squared series did not converge",
                        EvalResult(total, control.max_terms, term, False))


def bessel_squared_fox_wright(alpha: float, control: SeriesControl = DEFAULT_CONTROL) -> float:
    """The same series as 1Psi2[(1/2, 2); (1, 2), (1, 2); 1/(4 alpha)] / sqrt(alpha)."""
    if not alpha > 0.0:
        raise DomainError("alpha must be positive")
    fw = FoxWrightParams(upper=[(0.5, 2.0)], lower=[(1.0, 2.0), (1.0, 2.0)])
    return eval_fox_wright(fw, 0.25 / alpha, control).value / math.sqrt(alpha)


def fox_wright_gaussian_form(a: float, b: float, c: float, alpha: float, beta: float,
                             control: SeriesControl = DEFAULT_CONTROL) -> float:
    """sqrt(pi/alpha) Gamma(b) Gamma(c) / Gamma(a) 1Psi2[(a, 2); (b, 2), (c, 2); beta^2/(4 alpha)].

    Same integral as ``gaussian_integral_value(([a], [b, c]), alpha, beta)``.
    """
    if not alpha > 0.0:
        raise DomainError("alpha must be positive")
    fw = FoxWrightParams(upper=[(a, 2.0)], lower=[(b, 2.0), (c, 2.0)])
    psi = eval_fox_wright(fw, beta * beta / (4.0 * alpha), control).value
    return math.sqrt(math.pi / alpha) * gamma_ratio((b, c), (a,)) * psi


def _beta_weighted(g, p: float, q: float, rel_tol: float) -> float:
    """int_0^1 t^(p-1) (1-t)^(q-1) g(t) dt.

    The endpoint powers are absorbed by t = u^(1/p) on [0, 1/2] and
    1 - t = v^(1/q) on [1/2, 1], which leaves smooth integrands.
    """
    left = integrate(lambda u: g(u ** (1.0 / p)) * (1.0 - u ** (1.0 / p)) ** (q - 1.0),
                     Finite(0.0, 0.5 ** p), rel_tol).value / p
    right = integrate(lambda v: g(1.0 - v ** (1.0 / q)) * (1.0 - v ** (1.0 / q)) ** (p - 1.0),
                      Finite(0.0, 0.5 ** q), rel_tol).value / q
    return left + right


def _beta_norm(a: float, b: float) -> float:
    # Gamma(b) / (Gamma(a) Gamma(b - a))
    return gamma_ratio((b,), (a, b - a))


def euler_integral_1f1(a: float, b: float, x: float, rel_tol: float = 1e-12) -> float:
    """1F1(a; b; x) from Gamma(b)/(Gamma(a)Gamma(b-a)) int_0^1 t^(a-1) (1-t)^(b-a-1) e^(xt) dt."""
    if not 0.0 < a < b:
        raise DomainError("need 0 < a < b")
    return _beta_norm(a, b) * _beta_weighted(lambda t: math.exp(x * t), a, b - a, rel_tol)


def euler_integral_2f1(a: float, b: float, c: float, x: float, rel_tol: float = 1e-12) -> float:
    """2F1(a, b; c; x) from its Euler integral, (1 - x t)^(-b) being 1F0(b; ; x t)."""
    if not 0.0 < a < c:
        raise DomainError("need 0 < a < c")
    if not abs(x) < 1.0:
        raise DomainError("need |x| < 1")
    return _beta_norm(a, c) * _beta_weighted(lambda t: (1.0 - x * t) ** (-b), a, c - a, rel_tol)


def kummer_gauss_transform(a: float, b: float, alpha: float, beta: float,
                           rel_tol: float = 1e-12) -> float:
    """Gamma(b)/(Gamma(a)Gamma(b-a)) int_0^1 t^(a-1) (1-t)^(b-a-1) e^(X t^2) dt, X = beta^2/(4 alpha)."""
    if not 0.0 < a < b:
        raise DomainError("need 0 < a < b")
    if not alpha > 0.0:
        raise DomainError("alpha must be positive")
    X = beta * beta / (4.0 * alpha)
    return _beta_norm(a, b) * _beta_weighted(lambda t: math.exp(X * t * t), a, b - a, rel_tol)


def kummer_gauss_series(a: float, b: float, alpha: float, beta: float,
                        control: SeriesControl = DEFAULT_CONTROL) -> float:
    """2F2(a/2, (a+1)/2; b/2, (b+1)/2; beta^2/(4 alpha))."""
    if not alpha > 0.0:
        raise DomainError("alpha must be positive")
    return pfq(_halved((a,)), _halved((b,)), beta * beta / (4.0 * alpha), control)
