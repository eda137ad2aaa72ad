"""Pure-Python hot kernels.

Mirrors ``_core.pyx`` function for function; ``_backend`` picks whichever is
importable. Keep the two files in lockstep.
"""

import math

from .errors import NonFinite, PoleError

POLE_TOL = 1e-12
PRODUCT_CUTOFF = 50
ABS_FLOOR = 1e-300

# status codes returned by the series kernels
CONVERGED = 0
TERMINATED = 1
EXHAUSTED = 2

BACKEND = "python"


def nearest_integer(x):
    """Return ``round(x)`` when ``x`` is within POLE_TOL of an integer, else None."""
    n = round(x)
    if abs(x - n) <= POLE_TOL:
        return int(n)
    return None


def is_nonpositive_integer(x):
    return x < 0.5 and abs(x - round(x)) <= POLE_TOL


def sinpi(x):
    y = math.fmod(x, 2.0)
    if y < 0.0:
        y += 2.0
    if y <= 0.5:
        return math.sin(math.pi * y)
    if y <= 1.5:
        return -math.sin(math.pi * (y - 1.0))
    return math.sin(math.pi * (y - 2.0))


def lgamma_signed(x):
    """log|Gamma(x)| and sign(Gamma(x)); reflection below 1/2."""
    if is_nonpositive_integer(x):
        raise PoleError(f"Gamma has a pole at {x!r}")
    if x >= 0.5:
        return math.lgamma(x), 1.0
    s = sinpi(x)
    la = math.log(math.pi) - math.log(abs(s)) - math.lgamma(1.0 - x)
    return la, (1.0 if s > 0.0 else -1.0)


def rgamma(x):
    """1/Gamma(x), zero at the poles."""
    if is_nonpositive_integer(x):
        return 0.0
    la, sg = lgamma_signed(x)
    return sg * math.exp(-la)


def pochhammer_product(d, n):
    p = 1.0
    for k in range(n):
        p *= d + k
    return p


GAMMA_DIRECT_MAX = 170.0


def pochhammer_lgamma(d, r):
    if 0.0 < d < GAMMA_DIRECT_MAX and 0.0 < d + r < GAMMA_DIRECT_MAX:
        # both Gammas fit in a double; the direct ratio avoids exp(l1 - l0) amplifying rounding
        return math.gamma(d + r) / math.gamma(d)
    l1, s1 = lgamma_signed(d + r)
    l0, s0 = lgamma_signed(d)
    try:
        return s1 * s0 * math.exp(l1 - l0)
    except OverflowError:
        raise NonFinite(f"({d})_{r} overflows") from None


def _pole_base_integer_shift(m, n):
    # (-m)_n for integer n, as the limit of Gamma(d + n) / Gamma(d) at d = -m
    if n >= 0:
        if n > m:
            return 0.0
        mag = math.exp(math.lgamma(m + 1) - math.lgamma(m - n + 1))
        return -mag if n % 2 else mag
    k = -n
    mag = math.exp(math.lgamma(m + 1) - math.lgamma(m + k + 1))
    return -mag if k % 2 else mag


def pochhammer(d, r):
    n = nearest_integer(r)
    if n is not None:
        if 0 <= n <= PRODUCT_CUTOFF:
            return pochhammer_product(d, n)
        if -PRODUCT_CUTOFF <= n < 0:
            den = 1.0
            for k in range(1, -n + 1):
                f = d - k
                if abs(f) <= POLE_TOL:
                    raise PoleError(f"({d})_{r} is infinite")
                den *= f
            return 1.0 / den
        if is_nonpositive_integer(d):
            return _pole_base_integer_shift(-round(d), n)
        if is_nonpositive_integer(d + n):
            raise PoleError(f"({d})_{r} is infinite")
        return pochhammer_lgamma(d, n)
    if is_nonpositive_integer(d):
        return 0.0
    if is_nonpositive_integer(d + r):
        raise PoleError(f"({d})_{r} is infinite")
    return pochhammer_lgamma(d, r)


def _termination_index(upper, lower):
    nterm = -1
    for a in upper:
        if is_nonpositive_integer(a):
            m = -round(a)
            if nterm < 0 or m < nterm:
                nterm = m
    for b in lower:
        if is_nonpositive_integer(b):
            m = -round(b)
            if nterm < 0 or m < nterm:
                raise PoleError(f"lower parameter {b} makes a series term infinite")
    return nterm


def pfq_series(upper, lower, x, coef, rel_tol, min_terms, max_terms):
    """Sum coef * sum_r prod(a)_r / prod(b)_r x^r / r! by term recursion.

    Returns (value, terms_used, tail_estimate, status).
    """
    nterm = _termination_index(upper, lower)
    s = term = float(coef)
    terms_used = 1
    if x == 0.0 or coef == 0.0 or nterm == 0:
        return s, terms_used, 0.0, (TERMINATED if nterm == 0 else CONVERGED)
    small = 0
    r = 0
    while True:
        if r == nterm:
            return s, terms_used, 0.0, TERMINATED
        if terms_used >= max_terms:
            return s, terms_used, abs(term), EXHAUSTED
        ratio = x / (r + 1)
        for a in upper:
            ratio *= a + r
        for b in lower:
            ratio /= b + r
        term *= ratio
        s += term
        terms_used += 1
        r += 1
        if not (math.isfinite(term) and math.isfinite(s)):
            raise NonFinite("series term overflowed")
        at = abs(term)
        as_ = abs(s)
        if at <= rel_tol * as_ or (as_ < ABS_FLOOR and at < ABS_FLOOR):
            small += 1
        else:
            small = 0
        # polynomials are always summed to their last term
        if small >= 2 and terms_used >= min_terms and nterm < 0:
            rho = abs(x) / (r + 1)
            for a in upper:
                rho *= abs(a + r)
            for b in lower:
                rho /= abs(b + r)
            if rho < 1.0:
                tail = at * rho / (1.0 - rho)
                if tail <= rel_tol * as_ or as_ < ABS_FLOOR:
                    return s, terms_used, tail, CONVERGED


def fox_wright_series(ua, uA, lb, lB, x, rel_tol, min_terms, max_terms):
    """Sum prod Gamma(a + rA) / prod Gamma(b + rB) x^r / r! with log-space terms.

    Reciprocal-Gamma convention on the lower side: a pole there zeroes the term.
    Returns (value, terms_used, tail_estimate, status).
    """
    if x != 0.0:
        lx = math.log(abs(x))
        sx = -1.0 if x < 0.0 else 1.0
    s = 0.0
    terms_used = 0
    small = 0
    prev = 0.0
    r = 0
    while True:
        if terms_used >= max_terms:
            return s, terms_used, abs(prev), EXHAUSTED
        la = 0.0
        sg = 1.0
        for a, A in zip(ua, uA):
            g, gs = lgamma_signed(a + r * A)
            la += g
            sg *= gs
        zero = False
        for b, B in zip(lb, lB):
            if is_nonpositive_integer(b + r * B):
                zero = True
                break
            g, gs = lgamma_signed(b + r * B)
            la -= g
            sg *= gs
        if r > 0:
            la += r * lx - math.lgamma(r + 1.0)
            if sx < 0.0 and r % 2:
                sg = -sg
        terms_used += 1
        if zero:
            term = 0.0
        else:
            try:
                term = sg * math.exp(la)
            except OverflowError:
                raise NonFinite("Fox-Wright term overflowed") from None
        s += term
        if not math.isfinite(s):
            raise NonFinite("Fox-Wright sum overflowed")
        if x == 0.0:
            return s, terms_used, 0.0, CONVERGED
        r += 1
        if zero:
            continue
        at = abs(term)
        as_ = abs(s)
        if at <= rel_tol * as_ or (as_ < ABS_FLOOR and at < ABS_FLOOR):
            small += 1
        else:
            small = 0
        if small >= 2 and terms_used >= min_terms and at == 0.0:
            # log-space terms underflowed to zero
            return s, terms_used, 0.0, CONVERGED
        if small >= 2 and terms_used >= min_terms and prev != 0.0:
            rho = at / abs(prev)
            if rho < 1.0:
                tail = at * rho / (1.0 - rho)
                if tail <= rel_tol * as_ or as_ < ABS_FLOOR:
                    return s, terms_used, tail, CONVERGED
        prev = term
