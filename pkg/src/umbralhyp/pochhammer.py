"""Pochhammer symbol (d)_r = Gamma(d + r) / Gamma(d) for real shifts.

Integer shifts with |r| <= 50 go through finite products; everything else
goes through log-gamma with the sign of Gamma tracked separately, using the
reflection formula below 1/2. Arguments within 1e-12 of a non-positive
integer are treated as Gamma poles.
"""

import math
import warnings

from ._backend import core
from .errors import DomainError, PochhammerDomainWarning, PoleError

POLE_TOL = core.POLE_TOL
PRODUCT_CUTOFF = core.PRODUCT_CUTOFF

is_nonpositive_integer = core.is_nonpositive_integer
nearest_integer = core.nearest_integer
lgamma_signed = core.lgamma_signed
rgamma = core.rgamma


def pochhammer(d: float, r: float) -> float:
    """Rising factorial (d)_r for real ``d`` and real ``r``.

    Raises PoleError when Gamma(d + r) is infinite and nothing cancels it.
    When only Gamma(d) is infinite the ratio is 0.
    """
    return core.pochhammer(float(d), float(r))


def pochhammer_product(d: float, n: int) -> float:
    """(d)_n by the finite product d(d+1)...(d+n-1); ``n >= 0``."""
    if n < 0:
        raise DomainError("product path needs a non-negative integer shift")
    return core.pochhammer_product(float(d), int(n))


def pochhammer_lgamma(d: float, r: float) -> float:
    """(d)_r through signed log-gamma, whatever the shift."""
    return core.pochhammer_lgamma(float(d), float(r))


def pochhammer_split(d: float, m: int, n: int) -> float:
    """(d)_m (d + m)_n, which equals (d)_{m+n}."""
    return pochhammer(d, m) * pochhammer(d + m, n)


def pochhammer_negate(d: float, r: int) -> float:
    """(d)_{-r} written as (-1)^r / (1 - d)_r."""
    r = int(r)
    if r < 0:
        raise DomainError("pochhammer_negate needs r >= 0")
    # same pole tolerance as ``pochhammer``: a factor within POLE_TOL of zero
    if any(abs(1.0 - d + k) <= POLE_TOL for k in range(r)):
        raise PoleError(f"(1 - {d})_{r} vanishes")
    den = pochhammer(1.0 - d, r)
    return (-1.0) ** r / den


def pochhammer_duplicate(d: float, r: int) -> float:
    """(d)_{2r} written as 4^r (d/2)_r ((d+1)/2)_r."""
    r = int(r)
    if r < 0:
        raise DomainError("pochhammer_duplicate needs r >= 0")
    return 4.0**r * pochhammer(d / 2.0, r) * pochhammer((d + 1.0) / 2.0, r)


def pochhammer_falling(r: int, s: int) -> float:
    """(-r)_s = (-1)^s r! / (r - s)! for integers 0 <= s <= r.

    For s > r the product passes through zero; 0 is returned with a
    PochhammerDomainWarning.
    """
    r, s = int(r), int(s)
    if r < 0 or s < 0:
        raise DomainError("pochhammer_falling needs non-negative integers")
    if s > r:
        warnings.warn(f"(-{r})_{s} with s > r is identically zero", PochhammerDomainWarning,
                      stacklevel=2)
        return 0.0
    sign = -1.0 if s % 2 else 1.0
    return sign * float(math.perm(r, s))
