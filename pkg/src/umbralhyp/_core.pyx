# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels. Same contracts as ``_core_py``."""

from libc.math cimport (exp, fabs, floor, fmod, isfinite, lgamma, log, round, tgamma,
                        sin, M_PI)
from libc.stdlib cimport free, malloc

from .errors import NonFinite, PoleError

POLE_TOL = 1e-12
PRODUCT_CUTOFF = 50
ABS_FLOOR = 1e-300

cdef enum:
    _CONVERGED = 0
    _TERMINATED = 1
    _EXHAUSTED = 2

CONVERGED = _CONVERGED
TERMINATED = _TERMINATED
EXHAUSTED = _EXHAUSTED

BACKEND = "cython"

cdef double _POLE_TOL = 1e-12
cdef int _CUTOFF = 50
cdef double _FLOOR = 1e-300


cdef inline bint _is_npi(double x) nogil:
    return x < 0.5 and fabs(x - round(x)) <= _POLE_TOL


cdef inline bint _near_int(double x, long *n) nogil:
    cdef double k = round(x)
    if fabs(x - k) <= _POLE_TOL:
        n[0] = <long>k
        return True
    return False


def nearest_integer(double x):
    cdef long n
    if _near_int(x, &n):
        return n
    return None


def is_nonpositive_integer(double x):
    return _is_npi(x)


cdef double _sinpi(double x) nogil:
    cdef double y = fmod(x, 2.0)
    if y < 0.0:
        y += 2.0
    if y <= 0.5:
        return sin(M_PI * y)
    if y <= 1.5:
        return -sin(M_PI * (y - 1.0))
    return sin(M_PI * (y - 2.0))


def sinpi(double x):
    return _sinpi(x)


cdef int _lgamma_signed(double x, double *la, double *sg) nogil:
    # returns -1 on a pole
    cdef double s
    if _is_npi(x):
        return -1
    if x >= 0.5:
        la[0] = lgamma(x)
        sg[0] = 1.0
        return 0
    s = _sinpi(x)
    la[0] = log(M_PI) - log(fabs(s)) - lgamma(1.0 - x)
    sg[0] = 1.0 if s > 0.0 else -1.0
    return 0


def lgamma_signed(double x):
    cdef double la, sg
    if _lgamma_signed(x, &la, &sg) < 0:
        raise PoleError(f"Gamma has a pole at {x!r}")
    return la, sg


def rgamma(double x):
    cdef double la, sg
    if _is_npi(x):
        return 0.0
    _lgamma_signed(x, &la, &sg)
    return sg * exp(-la)


cdef double _product(double d, long n) nogil:
    cdef double p = 1.0
    cdef long k
    for k in range(n):
        p *= d + k
    return p


def pochhammer_product(double d, long n):
    return _product(d, n)


cdef double GAMMA_DIRECT_MAX = 170.0


def pochhammer_lgamma(double d, double r):
    cdef double l1, s1, l0, s0, v
    if 0.0 < d < GAMMA_DIRECT_MAX and 0.0 < d + r < GAMMA_DIRECT_MAX:
        # both Gammas fit in a double; the direct ratio avoids exp(l1 - l0) amplifying rounding
        return tgamma(d + r) / tgamma(d)
    if _lgamma_signed(d + r, &l1, &s1) < 0 or _lgamma_signed(d, &l0, &s0) < 0:
        raise PoleError(f"Gamma has a pole in ({d})_{r}")
    v = s1 * s0 * exp(l1 - l0)
    if not isfinite(v):
        raise NonFinite(f"({d})_{r} overflows")
    return v


cdef double _pole_base(long m, long n):
    cdef double mag
    cdef long k
    if n >= 0:
        if n > m:
            return 0.0
        mag = exp(lgamma(m + 1.0) - lgamma(m - n + 1.0))
        return -mag if n % 2 else mag
    k = -n
    mag = exp(lgamma(m + 1.0) - lgamma(m + k + 1.0))
    return -mag if k % 2 else mag


def pochhammer(double d, double r):
    cdef long n, k
    cdef double den, f
    if _near_int(r, &n):
        if 0 <= n <= _CUTOFF:
            return _product(d, n)
        if -_CUTOFF <= n < 0:
            den = 1.0
            for k in range(1, -n + 1):
                f = d - k
                if fabs(f) <= _POLE_TOL:
                    raise PoleError(f"({d})_{r} is infinite")
                den *= f
            return 1.0 / den
        if _is_npi(d):
            return _pole_base(<long>(-round(d)), n)
        if _is_npi(d + n):
            raise PoleError(f"({d})_{r} is infinite")
        return pochhammer_lgamma(d, <double>n)
    if _is_npi(d):
        return 0.0
    if _is_npi(d + r):
        raise PoleError(f"({d})_{r} is infinite")
    return pochhammer_lgamma(d, r)


cdef double *_to_c(seq, Py_ssize_t *n) except NULL:
    cdef Py_ssize_t i, m = len(seq)
    cdef double *buf = <double *>malloc((m + 1) * sizeof(double))
    if buf == NULL:
        raise MemoryError()
    for i in range(m):
        buf[i] = seq[i]
    n[0] = m
    return buf


def _termination_index(upper, lower):
    cdef long nterm = -1, m
    for a in upper:
        if _is_npi(a):
            m = <long>(-round(a))
            if nterm < 0 or m < nterm:
                nterm = m
    for b in lower:
        if _is_npi(b):
            m = <long>(-round(b))
            if nterm < 0 or m < nterm:
                raise PoleError(f"lower parameter {b} makes a series term infinite")
    return nterm


def pfq_series(upper, lower, double x, double coef, double rel_tol,
               long min_terms, long max_terms):
    cdef long nterm = _termination_index(upper, lower)
    cdef Py_ssize_t p, q, i
    cdef double *A
    cdef double *B
    cdef double s = coef, term = coef, ratio, rho, at, as_, tail = 0.0
    cdef long terms_used = 1, small = 0, r = 0
    cdef int status = -1
    if x == 0.0 or coef == 0.0 or nterm == 0:
        return s, terms_used, 0.0, (TERMINATED if nterm == 0 else CONVERGED)
    A = _to_c(upper, &p)
    try:
        B = _to_c(lower, &q)
    except MemoryError:
        free(A)
        raise
    with nogil:
        while True:
            if r == nterm:
                status = _TERMINATED
                tail = 0.0
                break
            if terms_used >= max_terms:
                status = _EXHAUSTED
                tail = fabs(term)
                break
            ratio = x / (r + 1)
            for i in range(p):
                ratio *= A[i] + r
            for i in range(q):
                ratio /= B[i] + r
            term *= ratio
            s += term
            terms_used += 1
            r += 1
            if not (isfinite(term) and isfinite(s)):
                status = -2
                break
            at = fabs(term)
            as_ = fabs(s)
            if at <= rel_tol * as_ or (as_ < _FLOOR and at < _FLOOR):
                small += 1
            else:
                small = 0
            # polynomials are always summed to their last term
            if small >= 2 and terms_used >= min_terms and nterm < 0:
                rho = fabs(x) / (r + 1)
                for i in range(p):
                    rho *= fabs(A[i] + r)
                for i in range(q):
                    rho /= fabs(B[i] + r)
                if rho < 1.0:
                    tail = at * rho / (1.0 - rho)
                    if tail <= rel_tol * as_ or as_ < _FLOOR:
                        status = _CONVERGED
                        break
    free(A)
    free(B)
    if status == -2:
        raise NonFinite("series term overflowed")
    return s, terms_used, tail, status


def fox_wright_series(ua, uA, lb, lB, double x, double rel_tol,
                      long min_terms, long max_terms):
    cdef Py_ssize_t p, q, p2, q2, i
    cdef double *a
    cdef double *Aa
    cdef double *b
    cdef double *Bb
    cdef double lx = 0.0, sx = 1.0, s = 0.0, prev = 0.0, la, sg, g, gs
    cdef double term, at, as_, rho, tail = 0.0
    cdef long terms_used = 0, small = 0, r = 0
    cdef int status = -1
    cdef bint zero
    if x != 0.0:
        lx = log(fabs(x))
        sx = -1.0 if x < 0.0 else 1.0
    a = _to_c(ua, &p)
    Aa = _to_c(uA, &p2)
    b = _to_c(lb, &q)
    Bb = _to_c(lB, &q2)
    with nogil:
        while True:
            if terms_used >= max_terms:
                status = _EXHAUSTED
                tail = fabs(prev)
                break
            la = 0.0
            sg = 1.0
            for i in range(p):
                if _lgamma_signed(a[i] + r * Aa[i], &g, &gs) < 0:
                    status = -3
                    break
                la += g
                sg *= gs
            if status == -3:
                break
            zero = False
            for i in range(q):
                if _is_npi(b[i] + r * Bb[i]):
                    zero = True
                    break
                _lgamma_signed(b[i] + r * Bb[i], &g, &gs)
                la -= g
                sg *= gs
            if r > 0:
                la += r * lx - lgamma(r + 1.0)
                if sx < 0.0 and r % 2:
                    sg = -sg
            terms_used += 1
            if zero:
                term = 0.0
            else:
                term = sg * exp(la)
                if not isfinite(term):
                    status = -2
                    break
            s += term
            if not isfinite(s):
                status = -2
                break
            if x == 0.0:
                status = _CONVERGED
                tail = 0.0
                break
            r += 1
            if zero:
                continue
            at = fabs(term)
            as_ = fabs(s)
            if at <= rel_tol * as_ or (as_ < _FLOOR and at < _FLOOR):
                small += 1
            else:
                small = 0
            if small >= 2 and terms_used >= min_terms and at == 0.0:
                # log-space terms underflowed to zero
                status = _CONVERGED
                tail = 0.0
                break
            if small >= 2 and terms_used >= min_terms and prev != 0.0:
                rho = at / fabs(prev)
                if rho < 1.0:
                    tail = at * rho / (1.0 - rho)
                    if tail <= rel_tol * as_ or as_ < _FLOOR:
                        status = _CONVERGED
                        break
            prev = term
    free(a)
    free(Aa)
    free(b)
    free(Bb)
    if status == -2:
        raise NonFinite("Fox-Wright term overflowed")
    if status == -3:
        raise PoleError("Fox-Wright upper Gamma argument hits a pole")
    return s, terms_used, tail, status
