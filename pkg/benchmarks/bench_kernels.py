"""Compare the compiled series kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Both backends are imported directly, so the result does not depend on
UMBRALHYP_PURE_PYTHON.
"""

import argparse
import timeit

from umbralhyp import _core_py

try:
    from umbralhyp import _core
except ImportError:
    _core = None

CASES = {
    "pochhammer(3.7, 0.5)": lambda k: k.pochhammer(3.7, 0.5),
    "pochhammer(0.3, 40)": lambda k: k.pochhammer(0.3, 40.0),
    "2F1(1,1;2;0.9)": lambda k: k.pfq_series((1.0, 1.0), (2.0,), 0.9, 1.0, 1e-14, 8, 10000),
    "1F2(0.5;1,1;-30)": lambda k: k.pfq_series((0.5,), (1.0, 1.0), -30.0, 1.0, 1e-14, 8, 10000),
    "1F1(-40;1;3)": lambda k: k.pfq_series((-40.0,), (1.0,), 3.0, 1.0, 1e-14, 8, 10000),
    "1Psi2 Bessel^2": lambda k: k.fox_wright_series([0.5], [2.0], [1.0, 1.0], [2.0, 2.0],
                                                    0.25, 1e-14, 8, 10000),
}


def _value(out):
    return out[0] if isinstance(out, tuple) else out


def bench(kernel, fn, repeat):
    timer = timeit.Timer(lambda: fn(kernel))
    n, _ = timer.autorange()
    best = min(timer.repeat(repeat, n))
    return best / n


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _core is None:
        print("compiled extension not built; only the Python kernels are timed")
    print(f"{'case':<22}{'python (us)':>14}{'compiled (us)':>16}{'speedup':>10}")
    for name, fn in CASES.items():
        t_py = bench(_core_py, fn, args.repeat) * 1e6
        if _core is None:
            print(f"{name:<22}{t_py:>14.2f}{'-':>16}{'-':>10}")
            continue
        a, b = _value(fn(_core)), _value(fn(_core_py))
        assert abs(a - b) <= 1e-13 * abs(b), f"{name}: backends disagree ({a!r} vs {b!r})"
        t_c = bench(_core, fn, args.repeat) * 1e6
        print(f"{name:<22}{t_py:>14.2f}{t_c:>16.2f}{t_py / t_c:>9.1f}x")


if __name__ == "__main__":
    main()
