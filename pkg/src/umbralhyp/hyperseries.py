"""Truncated-series evaluation of pFq, Fox-Wright Psi and the two-variable
Appell-Kampe de Feriet series."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

from ._backend import core
from .errors import DomainError, NoConvergence, PoleError
from .pochhammer import is_nonpositive_integer, pochhammer


@dataclass(frozen=True)
class SeriesControl:
    rel_tol: float = 1e-14
    min_terms: int = 8
    max_terms: int = 10000

    def __post_init__(self):
        if not 0.0 < self.rel_tol < 1.0:
            raise ValueError("rel_tol must lie in (0, 1)")
        if not 1 <= self.min_terms <= self.max_terms:
            raise ValueError("need 1 <= min_terms <= max_terms")


DEFAULT_CONTROL = SeriesControl()


@dataclass(frozen=True)
class EvalResult:
    value: float
    terms_used: int
    tail_estimate: float
    converged: bool

    def __float__(self):
        return self.value


@dataclass(frozen=True)
class HypergeometricParams:
    """Upper parameters a_1..a_p and lower parameters b_1..b_q of a pFq."""

    upper: tuple = ()
    lower: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(float(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(float(b) for b in self.lower))
        # raises PoleError for a lower pole that the series reaches
        core._termination_index(self.upper, self.lower)

    @property
    def p(self) -> int:
        return len(self.upper)

    @property
    def q(self) -> int:
        return len(self.lower)

    def shifted(self, k: float) -> HypergeometricParams:
        return HypergeometricParams(tuple(a + k for a in self.upper),
                                    tuple(b + k for b in self.lower))

    def moment(self, r: float) -> float:
        """prod (a_i)_r / prod (b_j)_r."""
        num = 1.0
        for a in self.upper:
            num *= pochhammer(a, r)
        den = 1.0
        for b in self.lower:
            den *= pochhammer(b, r)
        if den == 0.0:
            raise PoleError(f"lower Pochhammer product vanishes at index {r}")
        return num / den


@dataclass(frozen=True)
class FoxWrightParams:
    """Pairs (a_k, A_k) upstairs and (b_s, B_s) downstairs; all steps > 0."""

    upper: tuple = ()
    lower: tuple = ()

    def __post_init__(self):
        up = tuple((float(a), float(A)) for a, A in self.upper)
        lo = tuple((float(b), float(B)) for b, B in self.lower)
        if any(A <= 0.0 for _, A in up) or any(B <= 0.0 for _, B in lo):
            raise DomainError("Fox-Wright steps A_k, B_s must be strictly positive")
        object.__setattr__(self, "upper", up)
        object.__setattr__(self, "lower", lo)


class SeriesKind(enum.Enum):
    ENTIRE = "entire"
    UNIT_DISK = "unit_disk"
    TERMINATING = "terminating"
    DIVERGENT = "divergent"


@dataclass(frozen=True)
class Convergence:
    kind: SeriesKind
    degree: int | None = None

    def __str__(self):
        if self.kind is SeriesKind.TERMINATING:
            return f"Terminating({self.degree})"
        return {SeriesKind.ENTIRE: "Entire", SeriesKind.UNIT_DISK: "UnitDisk",
                SeriesKind.DIVERGENT: "Divergent"}[self.kind]


def classify_convergence(params: HypergeometricParams) -> Convergence:
    degrees = [-round(a) for a in params.upper if is_nonpositive_integer(a)]
    if degrees:
        return Convergence(SeriesKind.TERMINATING, min(degrees))
    if params.p <= params.q:
        return Convergence(SeriesKind.ENTIRE)
    if params.p == params.q + 1:
        return Convergence(SeriesKind.UNIT_DISK)
    return Convergence(SeriesKind.DIVERGENT)


def _as_params(params) -> HypergeometricParams:
    if isinstance(params, HypergeometricParams):
        return params
    upper, lower = params
    return HypergeometricParams(upper, lower)


def _check_domain(params: HypergeometricParams, x: float) -> None:
    kind = classify_convergence(params).kind
    if kind is SeriesKind.DIVERGENT:
        raise DomainError(f"{params.p}F{params.q} diverges for every x != 0")
    if kind is SeriesKind.UNIT_DISK and abs(x) >= 1.0:
        raise DomainError(f"{params.p}F{params.q} is only summed for |x| < 1, got {x}")


def _finish(raw, what: str) -> EvalResult:
    value, terms_used, tail, status = raw
    result = EvalResult(value, terms_used, tail, status != core.EXHAUSTED)
    if not result.converged:
        raise NoConvergence(f"{what}: no convergence after {terms_used} terms", result)
    return result


def sum_shifted_series(params: HypergeometricParams, x: float, coef: float,
                       control: SeriesControl = DEFAULT_CONTROL) -> EvalResult:
    """coef * pFq(params; x) without the domain check; the derivative helpers
    build on this."""
    raw = core.pfq_series(params.upper, params.lower, float(x), float(coef),
                          control.rel_tol, control.min_terms, control.max_terms)
    return _finish(raw, f"{params.p}F{params.q}")


def eval_pfq(params, x: float, control: SeriesControl = DEFAULT_CONTROL) -> EvalResult:
    """Sum pFq(a; b; x) with the recursion
    term_{r+1} = term_r * prod(a + r) / prod(b + r) * x / (r + 1).

    Summation stops once two consecutive terms fall below rel_tol times the
    partial sum (after ``min_terms``) and a geometric tail bound agrees.
    """
    params = _as_params(params)
    x = float(x)
    _check_domain(params, x)
    return sum_shifted_series(params, x, 1.0, control)


def pfq(upper: Sequence[float], lower: Sequence[float], x: float,
        control: SeriesControl = DEFAULT_CONTROL) -> float:
    """Shorthand returning only the value."""
    return eval_pfq(HypergeometricParams(upper, lower), x, control).value


def fox_wright_radius(params: FoxWrightParams) -> tuple[float, float]:
    """(excess, radius): excess = sum B - sum A + 1, radius = prod B^B / prod A^A."""
    excess = 1.0 + sum(B for _, B in params.lower) - sum(A for _, A in params.upper)
    log_rho = sum(B * math.log(B) for _, B in params.lower) - sum(
        A * math.log(A) for _, A in params.upper)
    return excess, math.exp(log_rho)


def eval_fox_wright(params: FoxWrightParams, x: float,
                    control: SeriesControl = DEFAULT_CONTROL) -> EvalResult:
    """Sum prod Gamma(a_k + r A_k) / prod Gamma(b_s + r B_s) x^r / r!.

    Terms are built in log space. A Gamma pole among the lower arguments
    zeroes that term; one among the upper arguments raises PoleError.
    """
    x = float(x)
    excess, radius = fox_wright_radius(params)
    if excess < -1e-12 or (abs(excess) <= 1e-12 and abs(x) >= radius):
        raise DomainError(f"Fox-Wright series diverges at x={x} "
                          f"(excess {excess:g}, radius {radius:g})")
    raw = core.fox_wright_series([a for a, _ in params.upper], [A for _, A in params.upper],
                                 [b for b, _ in params.lower], [B for _, B in params.lower],
                                 x, control.rel_tol, control.min_terms, control.max_terms)
    return _finish(raw, "Fox-Wright Psi")


def eval_appell(alpha: float, gamma: float, beta: float, beta_prime: float,
                x: float, y: float, control: SeriesControl = DEFAULT_CONTROL) -> EvalResult:
    """Double series sum_{m,n} (alpha)_{m+n} (beta)_m x^m y^n
    / ((gamma)_{m+n} (beta')_n m! n!), summed by wavefronts m + n = k.

    Accepted domain is |x| + |y| < 1. ``terms_used`` counts wavefronts.
    """
    if not abs(x) + abs(y) < 1.0:
        raise DomainError("Appell series is only summed for |x| + |y| < 1")
    for name, v in (("gamma", gamma), ("beta'", beta_prime)):
        if is_nonpositive_integer(v):
            raise PoleError(f"{name} = {v} puts a pole in the series")
    xs = [1.0]  # (beta)_m x^m / m!
    ys = [1.0]  # y^n / ((beta')_n n!)
    coef = 1.0  # (alpha)_k / (gamma)_k
    total = 1.0
    small = 0
    prev = 1.0
    k = 0
    while True:
        if k + 1 >= control.max_terms:
            result = EvalResult(total, k + 1, abs(prev), False)
            raise NoConvergence(f"Appell series: no convergence after {k + 1} wavefronts", result)
        coef *= (alpha + k) / (gamma + k)
        xs.append(xs[-1] * (beta + k) * x / (k + 1))
        ys.append(ys[-1] * y / ((beta_prime + k) * (k + 1)))
        k += 1
        wave = coef * math.fsum(xs[m] * ys[k - m] for m in range(k + 1))
        total += wave
        aw, at = abs(wave), abs(total)
        if aw <= control.rel_tol * at or (at < 1e-300 and aw < 1e-300):
            small += 1
        else:
            small = 0
        if small >= 2 and k + 1 >= control.min_terms:
            if wave == 0.0:
                return EvalResult(total, k + 1, 0.0, True)
            if prev != 0.0:
                rho = aw / abs(prev)
                if rho < 1.0:
                    tail = aw * rho / (1.0 - rho)
                    if tail <= control.rel_tol * at:
                        return EvalResult(total, k + 1, tail, True)
        prev = wave
