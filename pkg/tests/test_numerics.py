"""
Tests for the adaptive quadrature rules and the complete elliptic
integrals they are built on.
"""

import numpy as np
import pytest

from ablab.core.elliptic import SINGULAR_MARGIN, complete_elliptic
from ablab.core.errors import ConvergenceError, EllipticDomainError, NearSingularError, NumericalError
from ablab.core.quadrature import integrate_1d, integrate_disk, integrate_periodic


class TestIntegrate1D:
    """Adaptive Gauss-Legendre bisection."""

    def test_smooth_integrand(self):
        result = integrate_1d(np.sin, 0.0, np.pi, 1e-12)
        assert result.value == pytest.approx(2.0, abs=1e-12)
        assert result.error <= 1e-12

    def test_vector_integrand_is_componentwise(self):
        result = integrate_1d(lambda x: np.stack([x, x**2], axis=-1), 0.0, 1.0)
        assert result.value == pytest.approx([0.5, 1.0 / 3.0], abs=1e-12)

    def test_breakpoint_handles_kink(self):
        result = integrate_1d(lambda x: np.abs(x - 0.3), 0.0, 1.0, 1e-12, breakpoints=(0.3,))
        assert result.value == pytest.approx(0.29, abs=1e-12)

    def test_linear_in_the_integrand(self):
        a, b = 2.5, -0.75
        first = integrate_1d(np.sin, 0.0, 3.0, 1e-13).value
        second = integrate_1d(np.exp, 0.0, 3.0, 1e-13).value
        combined = integrate_1d(lambda x: a * np.sin(x) + b * np.exp(x), 0.0, 3.0, 1e-13).value
        assert combined == pytest.approx(a * first + b * second, rel=1e-12)

    def test_steep_endpoint(self):
        result = integrate_1d(lambda x: 1.0 / np.sqrt(x), 1e-8, 1.0, 1e-12)
        assert result.value == pytest.approx(2.0 * (1.0 - 1e-4), rel=1e-10)

    def test_invalid_limits_rejected(self):
        with pytest.raises(ValueError, match="lo < hi"):
            integrate_1d(np.sin, 1.0, 1.0)
        with pytest.raises(ValueError, match="tolerance"):
            integrate_1d(np.sin, 0.0, 1.0, 0.0)

    def test_budget_exhaustion_keeps_best_estimate(self):
        with pytest.raises(ConvergenceError) as excinfo:
            integrate_1d(lambda x: 1.0 / np.sqrt(x), 0.0, 1.0, 1e-14, max_depth=2)
        assert excinfo.value.best_estimate == pytest.approx(2.0, rel=0.1)
        assert excinfo.value.error_estimate > 0
        assert isinstance(excinfo.value, NumericalError)


class TestPeriodicAndDisk:
    def test_periodic_trapezoid(self):
        result = integrate_periodic(lambda t: np.cos(t) ** 2, 1e-13)
        assert result.value == pytest.approx(np.pi, abs=1e-13)

    def test_periodic_vector(self):
        result = integrate_periodic(lambda t: np.stack([np.ones_like(t), np.sin(t)], axis=-1))
        assert result.value == pytest.approx([2.0 * np.pi, 0.0], abs=1e-12)

    def test_disk_area(self):
        result = integrate_disk(lambda r, t: np.ones(np.broadcast(r, t).shape), 2.0)
        assert result.value == pytest.approx(4.0 * np.pi, rel=1e-12)

    def test_disk_moment(self):
        result = integrate_disk(lambda r, t: r * r + 0.0 * t, 2.0)
        assert result.value == pytest.approx(8.0 * np.pi, rel=1e-12)

    def test_disk_radius_must_be_positive(self):
        with pytest.raises(ValueError, match="radius"):
            integrate_disk(lambda r, t: r + t, 0.0)


class TestCompleteElliptic:
    """K(m) and E(m) by the arithmetic-geometric mean."""

    def test_zero_parameter(self):
        k, e = complete_elliptic(0.0)
        assert k == pytest.approx(0.5 * np.pi, abs=1e-15)
        assert e == pytest.approx(0.5 * np.pi, abs=1e-15)

    def test_reference_values(self):
        k, e = complete_elliptic(0.5)
        assert k == pytest.approx(1.8540746773013719, rel=1e-14)
        assert e == pytest.approx(1.3506438810476755, rel=1e-14)

    def test_legendre_relation(self):
        m = np.array([0.1, 0.3, 0.7, 0.95])
        k, e = complete_elliptic(m)
        kc, ec = complete_elliptic(1.0 - m)
        assert e * kc + ec * k - k * kc == pytest.approx(np.full(4, 0.5 * np.pi), rel=1e-13)

    def test_array_shape_preserved(self):
        k, e = complete_elliptic(np.zeros((2, 3)))
        assert k.shape == (2, 3)
        assert e.shape == (2, 3)

    @pytest.mark.parametrize("m", [-0.1, 1.0, 1.5, float("nan")])
    def test_domain(self, m):
        with pytest.raises(EllipticDomainError, match=r"\[0, 1\)"):
            complete_elliptic(m)

    def test_near_singular(self):
        with pytest.raises(NearSingularError):
            complete_elliptic(1.0 - 0.1 * SINGULAR_MARGIN)

    def test_just_outside_margin_is_finite(self):
        k, _ = complete_elliptic(1.0 - 10.0 * SINGULAR_MARGIN)
        assert np.isfinite(k)
        assert k > 10.0

    def test_matches_scipy(self, rng):
        special = pytest.importorskip("scipy.special")
        m = np.concatenate([rng.uniform(0.0, 1.0, 200), [0.0, 0.999, 1.0 - 1e-9]])
        k, e = complete_elliptic(m)
        np.testing.assert_allclose(k, special.ellipk(m), rtol=2e-14, atol=0.0)
        np.testing.assert_allclose(e, special.ellipe(m), rtol=2e-14, atol=0.0)
