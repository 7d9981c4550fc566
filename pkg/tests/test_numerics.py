import math

import pytest

from owakit.errors import ConvergenceError, DomainError, ValidationError
from owakit.numerics import QuadratureSpec, integrate


class TestIntegrate:
    def test_linear_exact(self):
        assert integrate(lambda x: x, 0.0, 1.0) == pytest.approx(0.5, abs=1e-15)

    def test_square(self):
        assert abs(integrate(lambda x: x * x, 0.0, 1.0) - 1.0 / 3.0) < 1e-10

    def test_exponential(self):
        expected = 1.0 - math.exp(-1.0)
        assert abs(integrate(lambda x: math.exp(-x), 0.0, 1.0) - expected) < 1e-8

    def test_empty_interval(self):
        assert integrate(math.exp, 0.3, 0.3) == 0.0

    def test_reversed_bounds(self):
        with pytest.raises(DomainError):
            integrate(math.exp, 1.0, 0.0)

    @pytest.mark.parametrize("tol", [1e-6, 1e-8, 1e-10])
    def test_tolerance_respected_on_smooth_integrand(self, tol):
        spec = QuadratureSpec(tolerance=tol)
        got = integrate(lambda x: math.cos(3 * x) * math.exp(x), 0.0, 2.0, spec)
        # antiderivative of e^x cos 3x is e^x (cos 3x + 3 sin 3x) / 10
        F = lambda x: math.exp(x) * (math.cos(3 * x) + 3 * math.sin(3 * x)) / 10
        assert abs(got - (F(2.0) - F(0.0))) < tol

    def test_linearity(self):
        spec = QuadratureSpec(tolerance=1e-9)
        f = lambda x: math.sin(x)
        g = lambda x: x**3 - x
        lhs = integrate(lambda x: 2.5 * f(x) - 0.7 * g(x), 0.0, 1.5, spec)
        rhs = 2.5 * integrate(f, 0.0, 1.5, spec) - 0.7 * integrate(g, 0.0, 1.5, spec)
        assert abs(lhs - rhs) < 2 * spec.tolerance

    def test_additivity(self):
        spec = QuadratureSpec(tolerance=1e-9)
        f = lambda x: 1.0 / (1.0 + x * x)
        whole = integrate(f, 0.0, 2.0, spec)
        parts = integrate(f, 0.0, 0.7, spec) + integrate(f, 0.7, 2.0, spec)
        assert abs(whole - parts) < 2 * spec.tolerance

    def test_convergence_error_carries_estimate(self):
        step = lambda x: 1.0 if x >= 1.0 / 3.0 else 0.0
        spec = QuadratureSpec(tolerance=1e-12, max_depth=12)
        with pytest.raises(ConvergenceError) as info:
            integrate(step, 0.0, 1.0, spec)
        assert info.value.estimate == pytest.approx(2.0 / 3.0, abs=1e-3)
        assert info.value.error_bound > 0


class TestQuadratureSpec:
    def test_defaults(self):
        spec = QuadratureSpec()
        assert spec.tolerance == 1e-8
        assert spec.max_depth == 30

    @pytest.mark.parametrize("kwargs", [{"tolerance": 0.0}, {"tolerance": -1e-3}, {"max_depth": 0}])
    def test_invalid(self, kwargs):
        with pytest.raises(ValidationError):
            QuadratureSpec(**kwargs)
