"""Umbral images of hypergeometric series.

An umbral symbol acting on its vacuum is represented by its moment map
nu -> prod (a_i)_nu / prod (b_j)_nu, defined for any real index nu. The
pFq is then the umbral exponential sum_r moment(r) x^r / r!, and the
parameter-shift rules for derivatives and antiderivatives fall out of
moment(r + 1) and moment(r - 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import DomainError, NoConvergence, NonFinite, PoleError
from .hyperseries import (DEFAULT_CONTROL, EvalResult, HypergeometricParams, SeriesControl,
                          _check_domain)
from .pochhammer import is_nonpositive_integer, lgamma_signed, pochhammer


@dataclass(frozen=True)
class UmbralSymbol:
    upper: tuple = ()
    lower: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(float(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(float(b) for b in self.lower))

    @classmethod
    def from_params(cls, params: HypergeometricParams) -> UmbralSymbol:
        return cls(params.upper, params.lower)

    def params(self) -> HypergeometricParams:
        return HypergeometricParams(self.upper, self.lower)

    def moment(self, nu: float) -> float:
        return vacuum_moment(self, nu)

    def __mul__(self, other: UmbralSymbol) -> UmbralSymbol:
        # independent vacua evaluated at a common index multiply factorwise
        return UmbralSymbol(self.upper + other.upper, self.lower + other.lower)


def log_moment(symbol: UmbralSymbol, nu: float) -> tuple[float, float]:
    """(log|moment(nu)|, sign); survives factors that overflow on their own.

    A zero moment gives (-inf, 0.0).
    """
    la, sg = 0.0, 1.0
    for vals, sign in ((symbol.upper, 1.0), (symbol.lower, -1.0)):
        for d in vals:
            if is_nonpositive_integer(d) or is_nonpositive_integer(d + nu):
                v = pochhammer(d, nu)  # finite here: zero, or a pole raised above
                if v == 0.0:
                    if sign < 0.0:
                        raise PoleError(f"lower moment product vanishes at nu={nu}")
                    return -math.inf, 0.0
                la += sign * math.log(abs(v))
                sg *= math.copysign(1.0, v)
                continue
            l1, s1 = lgamma_signed(d + nu)
            l0, s0 = lgamma_signed(d)
            la += sign * (l1 - l0)
            sg *= s1 * s0
    return la, sg


def vacuum_moment(symbol: UmbralSymbol, nu: float) -> float:
    """prod (a_i)_nu / prod (b_j)_nu; nu may be negative or fractional."""
    try:
        num = 1.0
        for a in symbol.upper:
            num *= pochhammer(a, nu)
        den = 1.0
        for b in symbol.lower:
            den *= pochhammer(b, nu)
        finite = not (math.isinf(num) or math.isinf(den))
    except NonFinite:
        finite = False
    if finite:
        if den == 0.0:
            raise PoleError(f"lower moment product vanishes at nu={nu}")
        return num / den
    # a single factor overflowed; the ratio may still be representable
    la, sg = log_moment(symbol, nu)
    try:
        return sg * math.exp(la)
    except OverflowError:
        raise NonFinite(f"moment at nu={nu} overflows") from None


def umbral_exp_eval(symbol: UmbralSymbol, x: float,
                    control: SeriesControl = DEFAULT_CONTROL) -> EvalResult:
    """sum_r moment(r) x^r / r!, each moment computed afresh from Pochhammer
    symbols (in log space) rather than by term recursion."""
    x = float(x)
    params = symbol.params()
    _check_domain(params, x)
    total = 1.0
    if x == 0.0:
        return EvalResult(1.0, 1, 0.0, True)
    log_abs_x = math.log(abs(x))
    small = 0
    prev = 1.0
    for r in range(1, control.max_terms):
        log_power = r * log_abs_x - math.lgamma(r + 1.0)
        try:
            m = vacuum_moment(symbol, r)
            term = m * math.exp(log_power)
        except NonFinite:
            m = None
        if m is None or math.isinf(m):
            # moment(r) alone can pass 1e308 long before moment(r) x^r / r! does
            lm, sm = log_moment(symbol, r)
            m = sm
            term = sm * math.exp(lm + log_power)
        if m == 0.0:
            return EvalResult(total, r, 0.0, True)
        if x < 0.0 and r % 2:
            term = -term
        total += term
        at, as_ = abs(term), abs(total)
        if at <= control.rel_tol * as_:
            small += 1
        else:
            small = 0
        if small >= 2 and r + 1 >= control.min_terms:
            rho = at / abs(prev) if prev else 0.0
            if rho < 1.0:
                tail = at * rho / (1.0 - rho)
                if tail <= control.rel_tol * as_:
                    return EvalResult(total, r + 1, tail, True)
        prev = term
    raise NoConvergence("umbral exponential did not converge",
                        EvalResult(total, control.max_terms, abs(prev), False))


def differentiate_pfq(params: HypergeometricParams) -> tuple[float, HypergeometricParams]:
    """d/dx pFq(a; b; x) = prefactor * pFq(a + 1; b + 1; x), prefactor = prod a / prod b."""
    if any(b == 0.0 for b in params.lower):
        raise PoleError("a zero lower parameter has no derivative rule")
    prefactor = math.prod(params.upper) / math.prod(params.lower)
    return prefactor, params.shifted(1.0)


def antidifferentiate_pfq(params: HypergeometricParams) -> tuple[float, HypergeometricParams]:
    """Primitive of pFq(a; b; x) is prefactor * pFq(a - 1; b - 1; x) + const,
    prefactor = prod (b - 1) / prod (a - 1)."""
    if any(a == 1.0 for a in params.upper):
        raise PoleError("an upper parameter equal to 1 makes the primitive singular")
    prefactor = math.prod(b - 1.0 for b in params.lower) / math.prod(a - 1.0 for a in params.upper)
    return prefactor, params.shifted(-1.0)


def power_weighted_antiderivative(params: HypergeometricParams, alpha: float
                                  ) -> tuple[Callable[[float], float], HypergeometricParams]:
    """int_0^x t^alpha 2F1(a, b; c; t) dt = x^(alpha+1)/(alpha+1) 3F2(a, b, alpha+1; c, alpha+2; x).

    Returns the prefactor rule x -> x^(alpha+1)/(alpha+1) and the extended
    parameters. Any p, q is accepted; the rule is the same.
    """
    if alpha == -1.0:
        raise DomainError("alpha = -1 has a logarithmic primitive")
    if is_nonpositive_integer(alpha + 2.0):
        raise DomainError("alpha + 2 is a non-positive integer")
    extended = HypergeometricParams(params.upper + (alpha + 1.0,), params.lower + (alpha + 2.0,))

    def prefactor(x: float) -> float:
        return x ** (alpha + 1.0) / (alpha + 1.0)

    return prefactor, extended
