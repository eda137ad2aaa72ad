"""Identity suite: closed forms against independent left-hand sides.

A suite is JSON of the form
``{"identities": [{"id": ..., "grid": [{param: value}, ...], "tolerance": ...}]}``.
Each grid point yields one ``IdentityReport``; reports serialize to CSV.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from importlib import resources
from typing import Callable

from . import integrals as I
from . import odes, oracles, special
from .errors import UmbralHypError
from .hyperseries import HypergeometricParams, pfq
from .odes import series_derivative_pfq
from .pochhammer import pochhammer

ABS_SWITCH = 1e-12


class SuiteError(UmbralHypError, ValueError):
    """Malformed identity-suite document."""


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    lhs: float
    rhs: float
    abs_diff: float
    rel_diff: float
    tolerance: float
    passed: bool
    lhs_source: str
    params: dict = field(default_factory=dict)
    error: str = ""


def compare(identity_id, lhs, rhs, tolerance, lhs_source, params) -> IdentityReport:
    abs_diff = abs(lhs - rhs)
    if abs(rhs) < ABS_SWITCH:
        rel_diff = abs_diff
    else:
        rel_diff = abs_diff / abs(rhs)
    passed = math.isfinite(rel_diff) and rel_diff <= tolerance
    return IdentityReport(identity_id, lhs, rhs, abs_diff, rel_diff, tolerance, passed,
                          lhs_source, dict(params))


# Each identity maps a parameter record to (lhs, rhs, lhs_source).
REGISTRY: dict[str, Callable[..., tuple]] = {}
PARAM_KEYS: dict[str, tuple] = {}


def identity(name, *keys):
    def deco(fn):
        REGISTRY[name] = fn
        PARAM_KEYS[name] = keys
        return fn
    return deco


@identity("mellin", "a", "b", "c", "nu")
def _mellin(a, b, c, nu):
    return oracles.mellin_lhs(a, b, c, nu), I.mellin_integral(a, b, c, nu), "quadrature"


@identity("mellin_power", "a", "b", "c", "mu", "nu")
def _mellin_power(a, b, c, mu, nu):
    return (oracles.mellin_lhs(a, b, c, nu, mu), I.mellin_power_integral(a, b, c, mu, nu),
            "quadrature")


@identity("gaussian_pfq", "upper", "lower", "alpha", "beta")
def _gaussian_pfq(upper, lower, alpha, beta):
    params = HypergeometricParams(upper, lower)
    return (oracles.gaussian_pfq_lhs(params, alpha, beta),
            I.gaussian_integral_value(params, alpha, beta), "quadrature")


@identity("gaussian_cosine", "alpha", "beta")
def _gaussian_cosine(alpha, beta):
    return (oracles.gaussian_cosine_lhs(alpha, beta), I.gaussian_cosine_integral(alpha, beta),
            "quadrature")


@identity("quadratic_arg", "a", "b", "c", "alpha", "beta")
def _quadratic_arg(a, b, c, alpha, beta):
    return (oracles.quadratic_arg_lhs(((a,), (b, c)), alpha, beta),
            I.gaussian_quadratic_arg_integral(a, b, c, alpha, beta), "quadrature")


@identity("gaussian_shift", "a", "alpha", "beta")
def _gaussian_shift(a, alpha, beta):
    # upper and lower parameter equal: the integrand is exp(-alpha x^2 + beta x)
    exact = math.sqrt(math.pi / alpha) * math.exp(beta * beta / (4.0 * alpha))
    return exact, I.quadratic_arg_integral(((a,), (a,)), alpha, beta).value, "series"


@identity("geometric", "alpha", "beta")
def _geometric(alpha, beta):
    return oracles.geometric_lhs(alpha, beta), I.geometric_gaussian_integral(alpha, beta), \
        "quadrature"


@identity("weighted_exp", "a", "b", "c", "alpha", "x")
def _weighted_exp(a, b, c, alpha, x):
    return (oracles.weighted_exp_lhs(a, b, c, alpha, x),
            I.weighted_exp_integral(a, b, c, alpha, x), "quadrature")


@identity("power_antiderivative", "a", "b", "c", "alpha", "x")
def _power_antiderivative(a, b, c, alpha, x):
    # d/dx [x^(alpha+1)/(alpha+1) 3F2(a, b, alpha+1; c, alpha+2; x)] against the integrand
    ext = HypergeometricParams((a, b, alpha + 1.0), (c, alpha + 2.0))
    F = series_derivative_pfq(ext, x, 0)
    dF = series_derivative_pfq(ext, x, 1)
    lhs = x ** alpha * F + x ** (alpha + 1.0) / (alpha + 1.0) * dF
    return lhs, x ** alpha * pfq((a, b), (c,), x), "series"


@identity("bessel_squared", "alpha")
def _bessel_squared(alpha):
    return oracles.bessel_squared_lhs(alpha), I.bessel_squared_gaussian_integral(alpha), \
        "quadrature"


@identity("bessel_squared_fox_wright", "alpha")
def _bessel_squared_fw(alpha):
    return I.bessel_squared_fox_wright(alpha), I.bessel_squared_gaussian_integral(alpha), "series"


@identity("fox_wright_gaussian", "a", "b", "c", "alpha", "beta")
def _fox_wright_gaussian(a, b, c, alpha, beta):
    return (I.fox_wright_gaussian_form(a, b, c, alpha, beta),
            I.gaussian_integral_value(((a,), (b, c)), alpha, beta), "series")


@identity("euler_1f1", "a", "b", "x")
def _euler_1f1(a, b, x):
    return I.euler_integral_1f1(a, b, x), pfq((a,), (b,), x), "quadrature"


@identity("euler_2f1", "a", "b", "c", "x")
def _euler_2f1(a, b, c, x):
    return I.euler_integral_2f1(a, b, c, x), pfq((a, b), (c,), x), "quadrature"


@identity("kummer_gauss", "a", "b", "alpha", "beta")
def _kummer_gauss(a, b, alpha, beta):
    return (I.kummer_gauss_transform(a, b, alpha, beta), I.kummer_gauss_series(a, b, alpha, beta),
            "quadrature")


def _residual(report):
    return report.normalized_residual, 0.0, "series"


@identity("tricomi_ode", "nu", "lam", "x")
def _tricomi_ode(nu, lam, x):
    return _residual(odes.tricomi_eigen_residual(nu, lam, x))


@identity("kummer_ode", "a", "b", "x")
def _kummer_ode(a, b, x):
    return _residual(odes.kummer_ode_residual(a, b, x))


@identity("kummer_contiguous", "a", "b", "x")
def _kummer_contiguous(a, b, x):
    return _residual(odes.kummer_contiguous_residual(a, b, x))


@identity("gauss_ode", "a", "b", "c", "x")
def _gauss_ode(a, b, c, x):
    return _residual(odes.gauss_ode_residual(a, b, c, x))


@identity("cosine_ode", "x")
def _cosine_ode(x):
    return _residual(odes.cosine_ode_residual(x))


@identity("tricomi_bessel", "x")
def _tricomi_bessel(x):
    return special.tricomi_c(0.0, x), special.bessel_j0(2.0 * math.sqrt(x)), "series"


@identity("j0_squared", "x")
def _j0_squared(x):
    return special.j0_squared(x), special.bessel_j0(x) ** 2, "series"


@identity("cos_transform", "x")
def _cos_transform(x):
    return special.gauss_transform_cos_half(x), special.cos_hyp(x), "series"


@identity("pythagoras", "x")
def _pythagoras(x):
    return special.cos_hyp(x) ** 2 + special.sin_hyp(x) ** 2, 1.0, "series"


@identity("pochhammer_addition", "k", "d", "r")
def _pochhammer_addition(k, d, r):
    r = int(r)
    terms = [math.comb(r, s) * pochhammer(d, r - s) * pochhammer(k, s) for s in range(r + 1)]
    return math.fsum(terms), pochhammer(k + d, r), "series"


@identity("half_shift", "r")
def _half_shift(r):
    return pochhammer(1.0, r - 0.5), math.sqrt(math.pi) * pochhammer(0.5, r), "series"


def evaluate(identity_id: str, params: dict, tolerance: float) -> IdentityReport:
    fn = REGISTRY[identity_id]
    args = [params[k] for k in PARAM_KEYS[identity_id]]
    try:
        lhs, rhs, source = fn(*args)
    except UmbralHypError as exc:
        nan = float("nan")
        return IdentityReport(identity_id, nan, nan, nan, nan, tolerance, False, "series",
                              dict(params), f"{type(exc).__name__}: {exc}")
    return compare(identity_id, lhs, rhs, tolerance, source, params)


def _number(v):
    return isinstance(v, (int, float)) and not isinstance(v, bool) and math.isfinite(v)


def validate_suite(doc) -> list[tuple[str, list[dict], float]]:
    """Check a parsed suite document; return (id, grid, tolerance) triples."""
    if not isinstance(doc, dict) or not isinstance(doc.get("identities"), list):
        raise SuiteError('suite must be an object with an "identities" list')
    out = []
    for n, entry in enumerate(doc["identities"]):
        where = f"identities[{n}]"
        if not isinstance(entry, dict):
            raise SuiteError(f"{where} is not an object")
        ident = entry.get("id")
        if ident not in REGISTRY:
            raise SuiteError(f"{where}: unknown identity id {ident!r}")
        tol = entry.get("tolerance")
        if not _number(tol) or tol <= 0.0:
            raise SuiteError(f"{where}: tolerance must be a positive number")
        grid = entry.get("grid")
        if not isinstance(grid, list):
            raise SuiteError(f"{where}: grid must be a list")
        for m, point in enumerate(grid):
            if not isinstance(point, dict):
                raise SuiteError(f"{where}.grid[{m}] is not an object")
            missing = [k for k in PARAM_KEYS[ident] if k not in point]
            if missing:
                raise SuiteError(f"{where}.grid[{m}] lacks {', '.join(missing)}")
            for k, v in point.items():
                ok = _number(v) or (isinstance(v, list) and all(_number(u) for u in v))
                if not ok:
                    raise SuiteError(f"{where}.grid[{m}].{k} is not numeric")
        out.append((ident, grid, float(tol)))
    return out


def load_suite(path=None) -> list[tuple[str, list[dict], float]]:
    """Read and validate a suite file; ``None`` loads the bundled default."""
    try:
        if path is None:
            text = resources.files("umbralhyp").joinpath("data/default_suite.json").read_text()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        doc = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise SuiteError(f"cannot read suite: {exc}") from exc
    return validate_suite(doc)


def run_suite(suite) -> list[IdentityReport]:
    return [evaluate(ident, point, tol) for ident, grid, tol in suite for point in grid]


def format_number(v) -> str:
    return f"{v:.15g}"


def format_params(params: dict) -> str:
    parts = []
    for k in sorted(params):
        v = params[k]
        if isinstance(v, list):
            parts.append(f"{k}=[{' '.join(format_number(u) for u in v)}]")
        else:
            parts.append(f"{k}={format_number(v)}")
    return ";".join(parts)


CSV_COLUMNS = ("identity_id", "params", "lhs", "rhs", "rel_diff", "passed")


def reports_to_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        w.writerow([r.identity_id, format_params(r.params), format_number(r.lhs),
                     format_number(r.rhs), format_number(r.rel_diff),
                     "true" if r.passed else "false"])
    return buf.getvalue()
