import math

import numpy as np
import pytest
from scipy import integrate, special as sp

from maxdens.core.exceptions import DomainError
from maxdens.core.special import digamma, inv_reg_inc_beta, log1p_exp, log_beta, log_binomial_pmf, log_gamma, \
    reg_inc_beta, trigamma

EULER_GAMMA = 0.5772156649015329
LOG_GRID = np.geomspace(1e-3, 1e3, 61)


class TestLogGamma:
    def test_known_values(self):
        assert log_gamma(1.0) == pytest.approx(0.0, abs=1e-15)
        assert log_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), rel=1e-13)
        assert log_gamma(10.0) == pytest.approx(math.log(362880.0), rel=1e-13)

    @pytest.mark.parametrize("x", [0.0, -1.0, math.inf, math.nan])
    def test_rejects_outside_domain(self, x):
        with pytest.raises(DomainError):
            log_gamma(x)

    def test_domain_error_is_value_error(self):
        with pytest.raises(ValueError):
            log_gamma(-2.0)


class TestDigamma:
    def test_known_values(self):
        assert digamma(1.0) == pytest.approx(-EULER_GAMMA, abs=1e-12)
        assert digamma(2.0) == pytest.approx(1.0 - EULER_GAMMA, abs=1e-12)

    def test_matches_scipy(self):
        ours = np.array([digamma(x) for x in LOG_GRID])
        np.testing.assert_allclose(ours, sp.digamma(LOG_GRID), rtol=1e-12, atol=1e-12)

    def test_tiny_argument(self):
        assert digamma(1e-6) == pytest.approx(sp.digamma(1e-6), rel=1e-13)

    def test_is_derivative_of_log_gamma(self):
        for x in LOG_GRID:
            h = 1e-6 * x
            numeric = (log_gamma(x + h) - log_gamma(x - h)) / (2 * h)
            assert digamma(x) == pytest.approx(numeric, abs=1e-5, rel=1e-6)

    def test_rejects_nonpositive(self):
        with pytest.raises(DomainError):
            digamma(0.0)

    def test_array_matches_scalar(self):
        np.testing.assert_allclose(digamma(LOG_GRID), [digamma(x) for x in LOG_GRID], rtol=1e-14, atol=1e-14)
        assert isinstance(digamma(2.0), float)

    @pytest.mark.parametrize("x", [1e-155, 1e-300])
    def test_near_zero_is_minus_reciprocal(self, x):
        assert digamma(x) == pytest.approx(-1.0 / x, rel=1e-12)

    def test_rejects_nonpositive_array_entry(self):
        with pytest.raises(DomainError):
            digamma(np.array([1.0, -1.0]))


class TestTrigamma:
    def test_known_values(self):
        assert trigamma(1.0) == pytest.approx(math.pi ** 2 / 6, abs=1e-10)
        assert trigamma(2.0) == pytest.approx(math.pi ** 2 / 6 - 1.0, abs=1e-10)

    def test_matches_scipy(self):
        ours = np.array([trigamma(x) for x in LOG_GRID])
        np.testing.assert_allclose(ours, sp.polygamma(1, LOG_GRID), rtol=1e-11)

    def test_is_derivative_of_digamma(self):
        for x in LOG_GRID:
            h = 1e-6 * x
            numeric = (digamma(x + h) - digamma(x - h)) / (2 * h)
            assert trigamma(x) == pytest.approx(numeric, rel=1e-5)

    def test_array_matches_scalar(self):
        np.testing.assert_allclose(trigamma(LOG_GRID), [trigamma(x) for x in LOG_GRID], rtol=1e-14)

    def test_overflows_instead_of_raising(self):
        assert trigamma(1e-300) == math.inf
        assert trigamma(5e-324) == math.inf
        assert trigamma(1e-150) == pytest.approx(1e300, rel=1e-12)
        values = trigamma(np.array([1e-300, 1.0]))
        assert values[0] == math.inf
        assert values[1] == pytest.approx(math.pi ** 2 / 6, abs=1e-10)


class TestLogBeta:
    def test_known_values(self):
        assert log_beta(1.0, 1.0) == pytest.approx(0.0, abs=1e-15)
        assert log_beta(2.0, 3.0) == pytest.approx(math.log(1.0 / 12.0), rel=1e-13)
        assert log_beta(0.5, 0.5) == pytest.approx(math.log(math.pi), rel=1e-13)

    def test_rejects_nonpositive(self):
        with pytest.raises(DomainError):
            log_beta(0.0, 1.0)


class TestRegIncBeta:
    def test_closed_forms(self):
        assert reg_inc_beta(0.5, 1.0, 1.0) == pytest.approx(0.5, abs=1e-14)
        assert reg_inc_beta(0.2, 1.0, 3.0) == pytest.approx(0.488, abs=1e-12)

    def test_matches_quadrature(self):
        a, b = 2.5, 4.2
        mass, _ = integrate.quad(lambda t: t ** (a - 1) * (1 - t) ** (b - 1), 0.0, 0.3, epsabs=1e-14, epsrel=1e-13)
        assert reg_inc_beta(0.3, a, b) == pytest.approx(mass / math.exp(log_beta(a, b)), abs=1e-9)

    def test_matches_scipy_on_random_triples(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            a, b = rng.uniform(0.1, 50.0, size=2)
            x = rng.uniform()
            assert reg_inc_beta(x, a, b) == pytest.approx(sp.betainc(a, b, x), abs=1e-11)

    def test_extreme_shapes(self):
        assert reg_inc_beta(0.01, 1.0, 1000.0) == pytest.approx(sp.betainc(1.0, 1000.0, 0.01), abs=1e-12)

    def test_endpoints_and_monotone(self):
        assert reg_inc_beta(0.0, 2.0, 3.0) == 0.0
        assert reg_inc_beta(1.0, 2.0, 3.0) == 1.0
        values = [reg_inc_beta(x, 0.7, 3.3) for x in np.linspace(0.0, 1.0, 101)]
        assert all(lo <= hi for lo, hi in zip(values, values[1:]))

    def test_rejects_x_outside_unit_interval(self):
        with pytest.raises(DomainError):
            reg_inc_beta(1.5, 1.0, 1.0)


class TestInvRegIncBeta:
    def test_uniform(self):
        assert inv_reg_inc_beta(0.5, 1.0, 1.0) == pytest.approx(0.5, abs=1e-12)

    def test_matches_scipy(self):
        assert inv_reg_inc_beta(0.25, 2.0, 2.0) == pytest.approx(sp.betaincinv(2.0, 2.0, 0.25), abs=1e-10)

    def test_round_trip(self):
        rng = np.random.default_rng(11)
        for _ in range(100):
            a, b = rng.uniform(0.5, 20.0, size=2)
            p = rng.uniform(0.01, 0.99)
            assert reg_inc_beta(inv_reg_inc_beta(p, a, b), a, b) == pytest.approx(p, abs=1e-9)

    def test_boundary_spike(self):
        # Beta(0.0001, 0.0999) puts almost all of its mass in a spike at zero
        x = inv_reg_inc_beta(0.5, 1e-4, 0.0999)
        assert 0.0 < x < 1e-100

    def test_rejects_p_outside_open_interval(self):
        with pytest.raises(DomainError):
            inv_reg_inc_beta(1.0, 2.0, 2.0)


class TestLogBinomialPmf:
    def test_closed_forms(self):
        assert log_binomial_pmf(0, 1, 0.5) == pytest.approx(math.log(0.5), abs=1e-15)
        assert log_binomial_pmf(0, 100, 1e-3) == pytest.approx(100 * math.log1p(-1e-3), rel=1e-13)

    def test_matches_exact_integer_arithmetic(self):
        exact = math.log(math.comb(100, 50)) - 100 * math.log(2.0)
        assert log_binomial_pmf(50, 100, 0.5) == pytest.approx(exact, abs=1e-10)

    @pytest.mark.parametrize("n,theta", [(1, 0.3), (37, 0.01), (200, 0.5), (200, 1e-4)])
    def test_sums_to_one(self, n, theta):
        total = math.fsum(math.exp(log_binomial_pmf(y, n, theta)) for y in range(n + 1))
        assert total == pytest.approx(1.0, abs=1e-10)

    def test_rejects_y_above_n(self):
        with pytest.raises(DomainError):
            log_binomial_pmf(5, 4, 0.5)


class TestLog1pExp:
    def test_matches_logaddexp(self):
        x = np.linspace(-800.0, 800.0, 161)
        np.testing.assert_allclose(log1p_exp(x), np.logaddexp(0.0, x), rtol=1e-14, atol=0.0)

    def test_scalar_in_scalar_out(self):
        assert isinstance(log1p_exp(0.0), float)
        assert log1p_exp(0.0) == pytest.approx(math.log(2.0))
