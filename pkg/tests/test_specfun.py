import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import special
from scipy.integrate import quad

from hulthen_dirac.errors import InvalidParameterError, PoleError
from hulthen_dirac.specfun import (hyp2f1_derivative, hyp2f1_terminating, jacobi_p,
                                   jacobi_poly, pochhammer)

params_ab = st.floats(-0.9, 6.0)


def jacobi_recurrence(n, a, b, x):
    # three-term recurrence, used only as an oracle
    p0, p1 = 1.0, 0.5 * (a - b + (a + b + 2.0) * x)
    if n == 0:
        return p0
    for k in range(2, n + 1):
        c1 = 2 * k * (k + a + b) * (2 * k + a + b - 2)
        c2 = (2 * k + a + b - 1) * (a * a - b * b)
        c3 = (2 * k + a + b - 2) * (2 * k + a + b - 1) * (2 * k + a + b)
        c4 = 2 * (k + a - 1) * (k + b - 1) * (2 * k + a + b)
        p0, p1 = p1, ((c2 + c3 * x) * p1 - c4 * p0) / c1
    return p1


@pytest.mark.parametrize("x, n, expected", [(3.7, 0, 1.0), (1.0, 5, 120.0), (0.5, 3, 1.875),
                                            (-2.0, 3, -0.0)])
def test_pochhammer(x, n, expected):
    assert pochhammer(x, n) == expected


def test_hyp2f1_low_orders():
    assert hyp2f1_terminating(0, 2.3, -0.7, 0.9) == 1.0
    b, c, x = 2.3, 1.7, 0.4
    assert hyp2f1_terminating(1, b, c, x) == pytest.approx(1 - b / c * x, rel=1e-15)


def test_hyp2f1_pole():
    with pytest.raises(PoleError):
        hyp2f1_terminating(3, 1.0, -1.0, 0.2)
    # c = -n is allowed: the series stops before the vanishing denominator
    assert math.isfinite(hyp2f1_terminating(2, 1.0, -2.0, 0.2))


@given(st.integers(0, 8), st.floats(0.1, 12.0), st.floats(0.5, 12.0), st.floats(0.0, 1.0))
def test_hyp2f1_matches_scipy(n, b, c, x):
    ours = hyp2f1_terminating(n, b, c, x)
    ref = special.hyp2f1(-n, b, c, x)
    assert ours == pytest.approx(ref, rel=1e-10, abs=1e-12 * max(1.0, abs(ref)))


@given(st.integers(0, 6), st.floats(0.1, 8.0), st.floats(0.5, 8.0))
def test_hyp2f1_at_zero(n, b, c):
    assert hyp2f1_terminating(n, b, c, 0.0) == 1.0


@settings(max_examples=20)
@given(st.integers(1, 7), st.floats(0.2, 8.0), st.floats(0.5, 8.0))
def test_derivative_identity_vs_central_difference(n, b, c):
    x, h = 0.3, 1e-5
    fd = (hyp2f1_terminating(n, b, c, x + h) - hyp2f1_terminating(n, b, c, x - h)) / (2 * h)
    an = hyp2f1_derivative(n, b, c, x)
    assert abs(fd - an) <= 1e-7 * max(1.0, abs(an))


def test_array_input():
    x = np.linspace(0, 1, 7)
    out = hyp2f1_terminating(3, 2.5, 1.5, x)
    assert out.shape == x.shape
    assert np.allclose(out, special.hyp2f1(-3, 2.5, 1.5, x), rtol=1e-13)


@given(st.integers(0, 8), params_ab, params_ab, st.floats(-1.0, 1.0))
def test_jacobi_matches_scipy_and_recurrence(n, a, b, x):
    ours = jacobi_p(n, a, b, x)
    for ref in (special.eval_jacobi(n, a, b, x), jacobi_recurrence(n, a, b, x)):
        assert ours == pytest.approx(ref, rel=1e-9, abs=1e-10 * max(1.0, abs(ref)))


@pytest.mark.parametrize("x", np.linspace(-1, 1, 9))
def test_legendre_special_case(x):
    assert abs(jacobi_p(2, 0.0, 0.0, x) - (3 * x * x - 1) / 2) <= 1e-12
    assert abs(jacobi_p(3, 0.0, 0.0, x) - special.eval_legendre(3, x)) <= 1e-12
    assert jacobi_p(0, 0.3, 1.7, x) == 1.0


@pytest.mark.parametrize("a, b", [(0.0, 0.0), (0.7, 3.0)])
def test_orthogonality(a, b):
    w = lambda x: (1 - x) ** a * (1 + x) ** b
    val, _ = quad(lambda x: jacobi_p(1, a, b, x) * jacobi_p(2, a, b, x) * w(x), -1, 1,
                  epsabs=1e-13)
    assert abs(val) <= 1e-8
    # Gauss-Jacobi rule is exact for the product
    nodes, weights = special.roots_jacobi(6, a, b)
    assert abs(np.sum(weights * jacobi_p(2, a, b, nodes) * jacobi_p(4, a, b, nodes))) <= 1e-8


@pytest.mark.parametrize("n", range(0, 7))
@pytest.mark.parametrize("a, b", [(0.0, 0.0), (0.7, 3.0), (-0.5, 2.5), (4.2, 1.0)])
def test_jacobi_zero_count(n, a, b):
    x = np.linspace(-1 + 1e-9, 1 - 1e-9, 20000)
    v = jacobi_p(n, a, b, x)
    assert np.count_nonzero(np.sign(v[1:]) != np.sign(v[:-1])) == n


@given(st.integers(0, 5), st.floats(0.05, 6.0), st.integers(0, 4))
def test_jacobi_hypergeometric_proportionality(n, th_over_d, lt):
    # P_n^(2t, 2l+1)(1-2s) is a fixed multiple of 2F1(-n, n+2(t+l+1); 1+2t; s)
    s = np.linspace(0.01, 0.99, 25)
    p = jacobi_p(n, 2 * th_over_d, 2 * lt + 1.0, 1 - 2 * s)
    f = hyp2f1_terminating(n, n + 2 * (th_over_d + lt + 1), 1 + 2 * th_over_d, s)
    ratio = pochhammer(1 + 2 * th_over_d, n) / math.factorial(n)
    assert np.allclose(p, ratio * f, rtol=1e-10, atol=1e-12 * ratio)


def test_jacobi_domain():
    with pytest.raises(InvalidParameterError):
        jacobi_p(2, -1.0, 0.0, 0.1)
    with pytest.raises(InvalidParameterError):
        jacobi_p(2, 0.0, -1.5, 0.1)


def test_jacobi_poly_power_basis():
    poly = jacobi_poly(3, 0.7, 3.0)
    x = np.linspace(-1, 1, 11)
    assert poly.degree == 3
    assert np.allclose(poly(x), jacobi_p(3, 0.7, 3.0, x), rtol=1e-12, atol=1e-12)
