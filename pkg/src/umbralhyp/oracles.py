"""Left-hand sides of the integral identities, by direct quadrature.

These never touch the closed forms in ``integrals``. Integrands are
evaluated with the float64 series where it is accurate and with mpmath
where it is not: 2F1 beyond the unit disk (after a Pfaff transformation
when that stays cheap), and pFq at large negative arguments, where the
alternating series cancels.
"""

from __future__ import annotations

import math

import mpmath

from .errors import DomainError
from .hyperseries import HypergeometricParams, _as_params, pfq
from .pochhammer import is_nonpositive_integer
from .quadrature import Finite, HalfLine, RealLine, integrate, integrate_pieces

# beyond this |z| the float64 series of a non-terminating pFq at negative z
# loses too many digits to cancellation
SERIES_LIMIT = 25.0
RTOL = 1e-11


def pfq_any(upper, lower, z: float) -> float:
    """pFq(a; b; z) for any real z where the function is real and entire or
    terminating; mpmath takes over where the series cancels badly."""
    terminating = any(is_nonpositive_integer(a) for a in upper)
    # with p >= q the function decays exponentially for z -> -inf while the
    # terms grow, so even moderate |z| cancels away every digit
    limit = SERIES_LIMIT if len(upper) < len(lower) else 1.0
    if terminating or z > -limit or len(upper) > len(lower):
        return pfq(upper, lower, z)
    return float(mpmath.hyper(list(upper), list(lower), z))


def hyp2f1_neg(a: float, b: float, c: float, t: float) -> float:
    """2F1(a, b; c; -t) for t >= 0."""
    if t <= 0.5:
        return pfq((a, b), (c,), -t)
    z = t / (1.0 + t)
    for p, q in ((a, b), (b, a)):
        # Pfaff: 2F1(p, q; c; -t) = (1 + t)^(-p) 2F1(p, c - q; c; t/(1 + t))
        if is_nonpositive_integer(c - q) or is_nonpositive_integer(p) or z <= 0.9:
            return (1.0 + t) ** (-p) * pfq((p, c - q), (c,), z)
    return float(mpmath.hyp2f1(a, b, c, -t))


def mellin_lhs(a: float, b: float, c: float, nu: float, mu: float = 1.0,
               rel_tol: float = RTOL) -> float:
    """int_0^inf t^(nu-1) 2F1(a, b; c; -t^mu) dt by quadrature.

    On [0, 1] t = u^(1/nu) removes the t^(nu-1) singularity. On [1, inf)
    t = 1/u and then u = w^(1/k), k = mu min(a, b) - nu, which makes the
    algebraic tail decay into a bounded integrand on [0, 1].
    """
    head = integrate(lambda u: hyp2f1_neg(a, b, c, u ** (mu / nu)),
                     Finite(0.0, 1.0), rel_tol).value / nu
    k = mu * min(a, b) - nu
    m = mu * min(a, b)

    def tail(w):
        if w == 0.0:
            return 0.0
        u = w ** (1.0 / k)
        return u ** (-m) * hyp2f1_neg(a, b, c, u ** (-mu))

    return head + integrate(tail, Finite(0.0, 1.0), rel_tol).value / k


def _gaussian_window(alpha: float, center: float = 0.0, width: float = 45.0):
    # e^{-alpha x^2} < e^{-45} ~ 3e-20 outside; the integrands here grow at most
    # like e^{|beta x|}, which the shift |beta|/(2 alpha) absorbs
    half = math.sqrt(width / alpha)
    return center - half, center + half


def gaussian_pfq_lhs(params, alpha: float, beta: float, rel_tol: float = RTOL) -> float:
    """int e^(-alpha x^2) pFq(a; b; beta x) dx over the real line."""
    params = _as_params(params)
    shift = abs(beta) / (2.0 * alpha)
    lo, hi = _gaussian_window(alpha)
    lo, hi = lo - shift, hi + shift

    def f(x):
        return math.exp(-alpha * x * x) * pfq_any(params.upper, params.lower, beta * x)

    return integrate(f, Finite(lo, hi), rel_tol).value


def gaussian_cosine_lhs(alpha: float, beta: float, rel_tol: float = RTOL) -> float:
    """int e^(-alpha x^2) cos(sqrt(beta x)) dx, cos(sqrt(y)) taken as 0F1(; 1/2; -y/4)
    so that it is cosh for y < 0."""
    return gaussian_pfq_lhs(HypergeometricParams((), (0.5,)), alpha, -0.25 * beta, rel_tol)


def _algebraic_1f2(a, b, c, z, terms: int = 10):
    """Non-oscillating large-z part of 1F2(a; b, c; -z): a Gamma ratio times
    z^(-a) 3F0(a, 1+a-b, 1+a-c; ; -1/z), truncated."""
    k_ratio = mpmath.gamma(b) * mpmath.gamma(c) * mpmath.rgamma(b - a) * mpmath.rgamma(c - a)
    total, term = mpmath.mpf(0), mpmath.mpf(1)
    for k in range(terms):
        total += term
        term *= (a + k) * (1 + a - b + k) * (1 + a - c + k) / (k + 1) * (-1 / z)
    return k_ratio * z ** (-a) * total


def _oscillating_1f2_tails(a, b, c, alpha, beta, half):
    """Both tails of int 1F2(a; b, c; -alpha x^2 + beta x) dx outside the core
    |x - x0| <= half, x0 = beta/(2 alpha).

    With u = x - x0 the argument is -(alpha u^2 - beta^2/(4 alpha)), even in u,
    so the two tails are equal. The smooth algebraic part is integrated on its
    own; what remains oscillates like cos(2 sqrt(alpha) u) and is summed period
    by period."""
    shift = beta * beta / (4.0 * alpha)
    with mpmath.workdps(20):
        def z(u):
            return alpha * u * u - shift

        def smooth(u):
            return _algebraic_1f2(a, b, c, z(u))

        def rest(u):
            # mpmath's own asymptotic branch can hand back a zero imaginary part
            return mpmath.re(mpmath.hyp1f2(a, b, c, -z(u))) - smooth(u)

        # smooth(u) ~ u^(-2a) decays too slowly for tanh-sinh on [half, inf)
        # when a is near 1/2; u = half v^(-1/(2a-1)) makes it bounded on (0, 1]
        k = 1.0 / (2.0 * a - 1.0)

        def smooth_v(v):
            return smooth(half * v ** -k) * half * k * v ** (-k - 1)

        one = mpmath.quad(smooth_v, [0, 1])
        one += mpmath.quadosc(rest, [half, mpmath.inf], omega=2.0 * math.sqrt(alpha))
        return 2.0 * float(one)


def quadratic_arg_lhs(params, alpha: float, beta: float, rel_tol: float = RTOL,
                      core_width: float = 12.0) -> float:
    """int pFq(a; b; -alpha x^2 + beta x) dx over the real line.

    A finite core around the vertex x0 = beta/(2 alpha) plus two tails; the
    integrand must decay algebraically or faster. 1F2 tails oscillate and decay
    slowly, so they go through ``_oscillating_1f2_tails``.
    """
    params = _as_params(params)
    x0 = beta / (2.0 * alpha)
    half = core_width / math.sqrt(alpha)

    def f(x):
        return pfq_any(params.upper, params.lower, -alpha * x * x + beta * x)

    core = integrate(f, Finite(x0 - half, x0 + half), rel_tol).value
    if params.p == 1 and params.q == 2:
        (a,), (b, c) = params.upper, params.lower
        if a <= 0.5:
            raise DomainError(f"the integral diverges unless a > 1/2, got a={a}")
        return core + _oscillating_1f2_tails(a, b, c, alpha, beta, half)
    # Tails are measured against the core: they may be negligible.
    tails = integrate_pieces(f, [HalfLine(x0 + half), ("left", x0 - half)], rel_tol,
                             abs_tol=10.0 * rel_tol * abs(core))
    return core + tails.value


def geometric_lhs(alpha: float, beta: float, rel_tol: float = RTOL) -> float:
    """int dz / (1 + alpha z^2 - beta z) over the real line."""
    if not (alpha > 0.0 and beta * beta < 4.0 * alpha):
        raise DomainError("the integrand has real poles unless beta^2 < 4 alpha")
    return integrate(lambda z: 1.0 / (1.0 + alpha * z * z - beta * z), RealLine(), rel_tol).value


def weighted_exp_lhs(a: float, b: float, c: float, alpha: float, x: float,
                     rel_tol: float = RTOL) -> float:
    """int_0^x t^alpha e^(-t) 2F1(a, b; c; t) dt with t = u^(1/(alpha+1))."""
    k = alpha + 1.0

    def f(u):
        t = u ** (1.0 / k)
        F = pfq((a, b), (c,), t) if t <= 0.9 else float(mpmath.hyp2f1(a, b, c, t))
        return math.exp(-t) * F

    return integrate(f, Finite(0.0, x ** k), rel_tol).value / k


def bessel_squared_lhs(alpha: float, rel_tol: float = RTOL) -> float:
    """int e^(-alpha x^2) 1F2(1/2; 1, 1; -x) dx over the real line.

    For x > 0 the integrand is J_0(sqrt x)^2, for x < 0 it is I_0(sqrt|x|)^2.
    """
    lo, hi = _gaussian_window(alpha)
    lo -= 2.0 / alpha  # I_0^2 grows like e^{2 sqrt|x|}

    def f(x):
        return math.exp(-alpha * x * x) * pfq_any((0.5,), (1.0, 1.0), -x)

    return integrate(f, Finite(lo, hi), rel_tol).value
