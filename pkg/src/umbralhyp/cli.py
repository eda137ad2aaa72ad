"""Command-line front end: ``eval``, ``verify`` and ``table``.

Exit codes: 0 success, 2 bad input, 3 domain or pole error, 4 no
convergence, 5 identity verification failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import integrals as I
from . import special
from .errors import DomainError, NoConvergence, NonFinite
from .hyperseries import EvalResult, FoxWrightParams, eval_appell, eval_fox_wright, eval_pfq
from .identities import SuiteError, format_number, load_suite, reports_to_csv, run_suite
from .pochhammer import pochhammer

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_NOCONV, EXIT_VERIFY = 0, 2, 3, 4, 5

LIST_KEYS = ("upper", "lower")


class CliError(ValueError):
    pass


def _plain(value) -> EvalResult:
    return EvalResult(float(value), 0, 0.0, True)


def _scaled(res: EvalResult, factor: float) -> EvalResult:
    return EvalResult(factor * res.value, res.terms_used, abs(factor) * res.tail_estimate,
                      res.converged)


def _pairs(values):
    # fox-wright parameters arrive flattened: a1,A1,a2,A2,...
    if len(values) % 2:
        raise CliError("Fox-Wright parameters need (value, step) pairs")
    return [(values[i], values[i + 1]) for i in range(0, len(values), 2)]


# name -> (required keys, evaluator(params) -> EvalResult); "x" is a key like any other
FUNCTIONS = {
    "pfq": (("upper", "lower", "x"), lambda p: eval_pfq((p["upper"], p["lower"]), p["x"])),
    "fox_wright": (("upper", "lower", "x"), lambda p: eval_fox_wright(
        FoxWrightParams(_pairs(p["upper"]), _pairs(p["lower"])), p["x"])),
    "appell": (("alpha", "gamma", "beta", "beta_prime", "x", "y"), lambda p: eval_appell(
        p["alpha"], p["gamma"], p["beta"], p["beta_prime"], p["x"], p["y"])),
    "pochhammer": (("d", "r"), lambda p: _plain(pochhammer(p["d"], p["r"]))),
    "mellin": (("a", "b", "c", "nu"), lambda p: _plain(
        I.mellin_integral(p["a"], p["b"], p["c"], p["nu"]))),
    "mellin_power": (("a", "b", "c", "mu", "nu"), lambda p: _plain(
        I.mellin_power_integral(p["a"], p["b"], p["c"], p["mu"], p["nu"]))),
    "gaussian": (("upper", "lower", "alpha", "beta"), lambda p: _plain(
        I.gaussian_integral_value((p["upper"], p["lower"]), p["alpha"], p["beta"]))),
    "gaussian_cosine": (("alpha", "beta"), lambda p: _plain(
        I.gaussian_cosine_integral(p["alpha"], p["beta"]))),
    "quadratic_arg": (("upper", "lower", "alpha", "beta"), lambda p: I.quadratic_arg_integral(
        (p["upper"], p["lower"]), p["alpha"], p["beta"])),
    "geometric": (("alpha", "beta"), lambda p: _plain(
        I.geometric_gaussian_integral(p["alpha"], p["beta"]))),
    "weighted_exp": (("a", "b", "c", "alpha", "x"), lambda p: _plain(
        I.weighted_exp_integral(p["a"], p["b"], p["c"], p["alpha"], p["x"]))),
    "bessel_squared": (("alpha",), lambda p: _plain(I.bessel_squared_gaussian_integral(p["alpha"]))),
    "fox_wright_gaussian": (("a", "b", "c", "alpha", "beta"), lambda p: _plain(
        I.fox_wright_gaussian_form(p["a"], p["b"], p["c"], p["alpha"], p["beta"]))),
    "euler_1f1": (("a", "b", "x"), lambda p: _plain(I.euler_integral_1f1(p["a"], p["b"], p["x"]))),
    "euler_2f1": (("a", "b", "c", "x"), lambda p: _plain(
        I.euler_integral_2f1(p["a"], p["b"], p["c"], p["x"]))),
    "kummer_gauss": (("a", "b", "alpha", "beta"), lambda p: _plain(
        I.kummer_gauss_transform(p["a"], p["b"], p["alpha"], p["beta"]))),
    "bessel_j0": (("x",), lambda p: eval_pfq(((), (1.0,)), -0.25 * p["x"] ** 2)),
    "tricomi": (("nu", "x"), lambda p: _plain(special.tricomi_c(p["nu"], p["x"]))),
    "cos_hyp": (("x",), lambda p: eval_pfq(((), (0.5,)), -0.25 * p["x"] ** 2)),
    "sin_hyp": (("x",), lambda p: _scaled(eval_pfq(((), (1.5,)), -0.25 * p["x"] ** 2), p["x"])),
    "cos_half": (("x",), lambda p: eval_fox_wright(
        FoxWrightParams([(1.0, 0.5)], [(1.0, 1.0)]), p["x"])),
    "cos_transform": (("x",), lambda p: _plain(special.gauss_transform_cos_half(p["x"]))),
    "j0_squared": (("x",), lambda p: eval_pfq(((0.5,), (1.0, 1.0)), -p["x"] ** 2)),
    "landau": (("lam", "m_l", "x"), lambda p: _plain(
        special.landau_radial(special.LandauParams(p["lam"], p["m_l"]), p["x"]))),
}


def _parse_value(key, text):
    try:
        if key in LIST_KEYS:
            return [float(v) for v in text.split(",") if v.strip()]
        v = float(text)
    except ValueError:
        raise CliError(f"--{key}: cannot parse {text!r} as a number") from None
    if not math.isfinite(v):
        raise CliError(f"--{key} must be finite")
    return v


def _parse_extra(tokens) -> dict:
    """Turn leftover ``--key value`` tokens into a parameter record."""
    params = {}
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if not tok.startswith("--") or len(tok) < 3:
            raise CliError(f"unexpected argument {tok!r}")
        key, eq, val = tok[2:].partition("=")
        key = key.replace("-", "_")
        if not eq:
            if i + 1 >= len(tokens):
                raise CliError(f"--{key} needs a value")
            i += 1
            val = tokens[i]
        params[key] = _parse_value(key, val)
        i += 1
    return params


def _build_parser():
    parser = argparse.ArgumentParser(prog="umbralhyp",
                                     description="Hypergeometric series and integral identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a function at one point")
    p_eval.add_argument("function", choices=sorted(FUNCTIONS))
    p_eval.add_argument("--format", choices=("csv", "json"), default="csv")
    p_eval.add_argument("--output")

    p_ver = sub.add_parser("verify", help="run an identity suite")
    p_ver.add_argument("suite", nargs="?", help="suite JSON (default: the bundled suite)")
    p_ver.add_argument("--tolerance", type=float, help="override every tolerance")
    p_ver.add_argument("--format", choices=("csv", "json"), default="csv")
    p_ver.add_argument("--output")

    p_tab = sub.add_parser("table", help="tabulate a function of x over a range")
    p_tab.add_argument("function", choices=sorted(FUNCTIONS))
    p_tab.add_argument("--from", dest="start", type=float, required=True)
    p_tab.add_argument("--to", dest="stop", type=float, required=True)
    p_tab.add_argument("--step", type=float, required=True)
    p_tab.add_argument("--format", choices=("csv", "json"), default="csv")
    p_tab.add_argument("--output")
    return parser


def _evaluate(name, params) -> EvalResult:
    keys, fn = FUNCTIONS[name]
    missing = [k for k in keys if k not in params]
    if missing:
        raise CliError(f"{name} needs --{', --'.join(missing)}")
    for k in LIST_KEYS:
        if k in keys and not isinstance(params[k], list):
            params[k] = [params[k]]
    return fn(params)


def _emit(text, output):
    if output:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run_eval(args, params) -> int:
    res = _evaluate(args.function, params)
    if args.format == "json":
        text = json.dumps({"function": args.function, "value": float(format_number(res.value)),
                           "terms_used": res.terms_used,
                           "tail_estimate": float(format_number(res.tail_estimate))}) + "\n"
    else:
        text = (f"{format_number(res.value)}\n"
                f"# terms_used={res.terms_used} tail_estimate={format_number(res.tail_estimate)}\n")
    _emit(text, args.output)
    return EXIT_OK


def table_grid(start, stop, step):
    if not (math.isfinite(start) and math.isfinite(stop) and math.isfinite(step)):
        raise CliError("range bounds must be finite")
    if not start < stop or not step > 0.0:
        raise CliError("need --from < --to and --step > 0")
    n = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [float(format_number(start + i * step)) for i in range(n)]


def run_table(args, params) -> int:
    if "x" in params:
        raise CliError("table takes its x values from --from/--to/--step")
    rows = []
    for x in table_grid(args.start, args.stop, args.step):
        res = _evaluate(args.function, dict(params, x=x))
        rows.append((x, res.value, res.terms_used))
    if args.format == "json":
        text = json.dumps([{"x": x, "value": float(format_number(v)), "terms_used": n}
                           for x, v, n in rows]) + "\n"
    else:
        lines = ["x,value,terms_used"]
        lines += [f"{format_number(x)},{format_number(v)},{n}" for x, v, n in rows]
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return EXIT_OK


def run_verify(args, params) -> int:
    if params:
        raise CliError(f"verify takes no parameters, got {sorted(params)}")
    suite = load_suite(args.suite)
    if args.tolerance is not None:
        if not args.tolerance > 0.0:
            raise CliError("--tolerance must be positive")
        suite = [(ident, grid, args.tolerance) for ident, grid, _ in suite]
    reports = run_suite(suite)
    if args.format == "json":
        text = json.dumps([{"identity_id": r.identity_id, "params": r.params,
                            "lhs": format_number(r.lhs), "rhs": format_number(r.rhs),
                            "rel_diff": format_number(r.rel_diff), "passed": r.passed,
                            "lhs_source": r.lhs_source, "error": r.error}
                           for r in reports], sort_keys=True) + "\n"
    else:
        text = reports_to_csv(reports)
    _emit(text, args.output)
    passed = sum(r.passed for r in reports)
    print(f"{passed} passed / {len(reports)} total", file=sys.stderr)
    return EXIT_OK if passed == len(reports) else EXIT_VERIFY


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args, extra = parser.parse_known_args(argv)
    except SystemExit as exc:  # argparse reports its own errors with code 2
        return int(exc.code or 0)
    try:
        params = _parse_extra(extra)
        runner = {"eval": run_eval, "table": run_table, "verify": run_verify}[args.command]
        return runner(args, params)
    except (CliError, SuiteError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DomainError, NonFinite) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except NoConvergence as exc:
        print(f"no convergence: {exc}", file=sys.stderr)
        return EXIT_NOCONV


if __name__ == "__main__":
    sys.exit(main())
