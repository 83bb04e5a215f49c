import math

import numpy as np
import pytest

from maxdens.constraints import Concentration, MeanCosineError, Variance
from maxdens.core.baselines import adaptive_sigma, adaptive_variance_method, constraint_curve, curve_parameter, \
    feasible_mean_interval, mean_method, mean_method_beta, mean_method_fixed_variance, median_adaptive_method, \
    median_method
from maxdens.core.distributions import beta_exists, beta_quantile, beta_variance, dirichlet_mean
from maxdens.core.exceptions import DomainError
from maxdens.schema.params import SimplexPoint


class TestMeanMethod:
    def test_dirichlet(self):
        p = mean_method(SimplexPoint(c=(0.2, 0.8)), 10.0)
        np.testing.assert_allclose(p.a, (2.0, 8.0))
        np.testing.assert_allclose(dirichlet_mean(p), (0.2, 0.8))

    def test_beta(self):
        p = mean_method_beta(0.001, 10.0)
        assert p.a == pytest.approx(0.01)
        assert p.b == pytest.approx(9.99)

    def test_fixed_variance(self):
        p = mean_method_fixed_variance(0.5, 0.1)
        assert p.a == pytest.approx(0.75)
        assert p.b == pytest.approx(0.75)
        assert beta_variance(p) == pytest.approx(0.1)

    def test_fixed_variance_does_not_exist(self):
        assert mean_method_fixed_variance(0.9, 0.1) is None

    def test_fixed_variance_near_quarter(self):
        p = mean_method_fixed_variance(0.5, 0.25 - 1e-9)
        assert p.concentration < 1e-7


class TestAdaptiveVariance:
    def test_interior_matches_fixed_variance(self):
        assert adaptive_sigma(0.5, 0.1) == pytest.approx(math.sqrt(0.1))
        p = adaptive_variance_method(0.5, 0.1)
        q = mean_method_fixed_variance(0.5, 0.1)
        assert p.a == pytest.approx(q.a)
        assert p.b == pytest.approx(q.b)

    def test_near_boundary(self):
        assert adaptive_sigma(0.001, 0.1) == 0.001
        assert beta_exists(0.001, 1e-6)
        p = adaptive_variance_method(0.001, 0.1)
        assert p.mean == pytest.approx(0.001, rel=1e-12)
        assert beta_variance(p) == pytest.approx(1e-6, rel=1e-9)

    def test_mean_is_target(self):
        rng = np.random.default_rng(0)
        for c in rng.uniform(1e-6, 1.0 - 1e-6, size=100):
            assert adaptive_variance_method(c, 0.1).mean == pytest.approx(c, abs=1e-12)

    def test_rejects_cap_of_a_quarter(self):
        with pytest.raises(DomainError):
            adaptive_variance_method(0.5, 0.25)


class TestFeasibleMeans:
    def test_interval_matches_existence(self):
        lower, upper = feasible_mean_interval(0.1)
        assert lower == pytest.approx(0.5 - 0.5 * math.sqrt(0.6))
        assert upper == pytest.approx(0.5 + 0.5 * math.sqrt(0.6))
        assert beta_exists(lower + 1e-9, 0.1)
        assert not beta_exists(lower - 1e-9, 0.1)

    def test_small_variance_is_accurate(self):
        lower, _ = feasible_mean_interval(1e-12)
        assert lower == pytest.approx(1e-12, rel=1e-9)


class TestMedianMethod:
    @pytest.mark.parametrize("alpha", [0.5, 2.0, 10.0])
    def test_symmetric_target(self, alpha):
        p = median_method(0.5, Concentration(alpha=alpha))
        assert p.a == pytest.approx(alpha / 2, rel=1e-8)
        assert p.b == pytest.approx(alpha / 2, rel=1e-8)

    @pytest.mark.parametrize("c", [1e-3, 0.2, 0.7])
    @pytest.mark.parametrize("alpha", [0.1, 1.0, 10.0, 50.0])
    def test_concentration(self, c, alpha):
        p = median_method(c, Concentration(alpha=alpha))
        assert p.concentration == pytest.approx(alpha, rel=1e-12)
        assert beta_quantile(p, 0.5) == pytest.approx(c, rel=1e-8, abs=1e-12)

    @pytest.mark.parametrize("c,v", [(0.2, 0.01), (0.001, 1e-6), (0.6, 0.05)])
    def test_variance(self, c, v):
        p = median_method(c, Variance(v=v))
        assert beta_variance(p) == pytest.approx(v, rel=1e-9)
        assert beta_quantile(p, 0.5) == pytest.approx(c, rel=1e-8, abs=1e-12)

    def test_variance_outside_the_feasible_means(self):
        # 0.9 is not an attainable mean at v = 0.1 but it is an attainable median
        p = median_method(0.9, Variance(v=0.1))
        assert beta_variance(p) == pytest.approx(0.1, rel=1e-9)
        assert beta_quantile(p, 0.5) == pytest.approx(0.9, abs=1e-6)

    def test_adaptive(self):
        p = median_adaptive_method(0.001, 0.1)
        assert beta_variance(p) == pytest.approx(1e-6, rel=1e-9)
        assert beta_quantile(p, 0.5) == pytest.approx(0.001, rel=1e-8)

    def test_rejects_cosine_constraint(self):
        with pytest.raises(DomainError):
            median_method(0.3, MeanCosineError(kappa=0.1))


class TestConstraintCurve:
    def test_concentration_members(self):
        a, b = constraint_curve(Concentration(alpha=7.0))(np.linspace(-30.0, 30.0, 61))
        np.testing.assert_allclose(a + b, 7.0, rtol=1e-12)
        assert np.all(np.diff(a) > 0.0)

    @pytest.mark.parametrize("v", [1e-6, 0.01, 0.2])
    def test_variance_members(self, v):
        a, b = constraint_curve(Variance(v=v))(np.linspace(-20.0, 20.0, 41))
        s = a + b
        np.testing.assert_allclose(a * b / (s * s * (s + 1.0)), v, rtol=1e-9)

    @pytest.mark.parametrize("c", [1e-3, 0.3, 0.9])
    def test_parameter_hits_the_mean(self, c):
        for constraint in (Concentration(alpha=3.0), Variance(v=1e-4)):
            a, b = constraint_curve(constraint)(curve_parameter(constraint, c))
            assert a / (a + b) == pytest.approx(c, rel=1e-9)

    def test_parameter_outside_the_feasible_means(self):
        assert curve_parameter(Variance(v=0.1), 0.05) is None

    def test_rejects_cosine_constraint(self):
        with pytest.raises(DomainError):
            constraint_curve(MeanCosineError(kappa=0.1))
