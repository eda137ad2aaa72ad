import math

import pytest
from hypothesis import given, settings, strategies as st

from umbralhyp.errors import NoConvergence, NonFinite
from umbralhyp.quadrature import Finite, HalfLine, RealLine, integrate, integrate_pieces


def test_examples():
    assert integrate(lambda x: math.exp(-x * x), RealLine(), 1e-10).value == pytest.approx(
        math.sqrt(math.pi), rel=1e-10)
    assert integrate(lambda z: 1 / (1 + z * z), RealLine(), 1e-10).value == pytest.approx(
        math.pi, rel=1e-10)
    beta = integrate(lambda t: math.sqrt(t * (1 - t)), Finite(0, 1), 1e-10).value
    assert beta == pytest.approx(math.pi / 8, rel=1e-10)


def test_endpoint_singularity():
    r = integrate(lambda t: t ** -0.5, Finite(0, 1), 1e-9)
    assert r.converged
    assert r.value == pytest.approx(2.0, rel=1e-9)


def test_converged_invariant():
    r = integrate(lambda x: math.exp(-x), HalfLine(0.0), 1e-12)
    assert r.converged
    assert r.abs_error_estimate <= 1e-12 * abs(r.value)
    assert r.value == pytest.approx(1.0, rel=1e-12)
    assert r.evaluations > 0


def test_half_line_offset():
    assert integrate(lambda x: math.exp(-x), HalfLine(2.0)).value == pytest.approx(
        math.exp(-2.0), rel=1e-10)


def test_left_half_line_piece():
    r = integrate_pieces(lambda x: math.exp(x), [("left", 1.0)])
    assert r.value == pytest.approx(math.e, rel=1e-10)


def test_nonfinite_integrand():
    with pytest.raises(NonFinite):
        integrate(lambda x: float("nan"), Finite(0, 1))
    with pytest.raises(NonFinite):
        integrate(lambda x: 1.0 / (x - 0.5) if x != 0.5 else math.inf, Finite(0, 1))


def test_no_convergence():
    f = lambda x: math.sin(1.0 / x) / x  # noqa: E731
    with pytest.raises(NoConvergence) as info:
        integrate(f, Finite(0, 1), 1e-12, max_panels=50)
    assert not info.value.result.converged
    r = integrate(f, Finite(0, 1), 1e-12, max_panels=50, raise_on_failure=False)
    assert not r.converged


def test_unknown_domain():
    with pytest.raises(TypeError):
        integrate(math.exp, (0, 1))


@settings(max_examples=30, deadline=None)
@given(al=st.floats(-3, 3), be=st.floats(-3, 3), s=st.floats(0.3, 3))
def test_linearity(al, be, s):
    f = lambda x: math.exp(-s * x * x)  # noqa: E731
    g = lambda x: 1.0 / (1.0 + x * x) ** 2  # noqa: E731
    rf = integrate(f, RealLine())
    rg = integrate(g, RealLine())
    rh = integrate(lambda x: al * f(x) + be * g(x), RealLine(), abs_tol=1e-12)
    err = rh.abs_error_estimate + abs(al) * rf.abs_error_estimate + abs(be) * rg.abs_error_estimate
    assert abs(rh.value - (al * rf.value + be * rg.value)) <= err + 1e-13


@pytest.mark.parametrize("f", [lambda x: math.exp(-x * x), lambda x: 1 / (1 + x ** 4),
                               lambda x: math.cos(x) * math.exp(-abs(x))])
def test_reflection(f):
    full = integrate(f, RealLine(), 1e-12).value
    half = integrate(f, HalfLine(0.0), 1e-12).value
    assert full == pytest.approx(2 * half, rel=1e-9)


def test_division_by_zero_is_nonfinite():
    with pytest.raises(NonFinite):
        integrate(lambda x: 1.0 / (x - 0.5), Finite(0, 1))
