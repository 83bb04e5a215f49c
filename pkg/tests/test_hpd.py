import numpy as np
import pytest
from scipy import optimize, stats

from maxdens.core.exceptions import DomainError
from maxdens.experiments.hpd import hpd_contains, hpd_interval
from maxdens.schema.params import BetaParams


def equal_density_oracle(a: float, b: float, level: float) -> tuple[float, float]:
    dist = stats.beta(a, b)

    def gap(t):
        return dist.logpdf(dist.ppf(t)) - dist.logpdf(dist.ppf(t + level))

    t = optimize.brentq(gap, 1e-14, 1.0 - level - 1e-14, xtol=1e-15)
    return float(dist.ppf(t)), float(dist.ppf(t + level))


class TestHpdInterval:
    def test_flat_density_ties_to_lower_interval(self):
        lo, hi = hpd_interval(BetaParams(a=1.0, b=1.0), 0.95)
        assert lo == 0.0
        assert hi == pytest.approx(0.95, abs=1e-10)

    def test_symmetric_unimodal(self):
        lo, hi = hpd_interval(BetaParams(a=2.0, b=2.0), 0.95)
        assert lo + hi == pytest.approx(1.0, abs=1e-6)
        mass = stats.beta.cdf(hi, 2, 2) - stats.beta.cdf(lo, 2, 2)
        assert mass == pytest.approx(0.95, abs=1e-8)

    @pytest.mark.parametrize("a,b", [(3.0, 10.0), (1.5, 40.0), (25.0, 3.0), (2.0, 200.0)])
    def test_matches_equal_density_oracle(self, a, b):
        lo, hi = hpd_interval(BetaParams(a=a, b=b), 0.95)
        expected = equal_density_oracle(a, b, 0.95)
        assert lo == pytest.approx(expected[0], abs=1e-7)
        assert hi == pytest.approx(expected[1], abs=1e-7)
        assert stats.beta.cdf(hi, a, b) - stats.beta.cdf(lo, a, b) == pytest.approx(0.95, abs=1e-8)

    def test_decreasing_density(self):
        lo, hi = hpd_interval(BetaParams(a=1.0, b=101.0), 0.95)
        assert lo == 0.0
        assert hi == pytest.approx(1.0 - 0.05 ** (1.0 / 101.0), abs=1e-10)

    def test_increasing_density(self):
        lo, hi = hpd_interval(BetaParams(a=3.0, b=0.5), 0.9)
        assert hi == 1.0
        assert lo == pytest.approx(stats.beta.ppf(0.1, 3.0, 0.5), abs=1e-9)

    def test_u_shaped_takes_shorter_side(self):
        p = BetaParams(a=0.3, b=0.8)
        lo, hi = hpd_interval(p, 0.8)
        lower_length = stats.beta.ppf(0.8, 0.3, 0.8)
        upper_length = 1.0 - stats.beta.ppf(0.2, 0.3, 0.8)
        assert hi - lo == pytest.approx(min(lower_length, upper_length), abs=1e-9)

    def test_u_shaped_symmetric_ties_to_lower(self):
        lo, _ = hpd_interval(BetaParams(a=0.5, b=0.5), 0.5)
        assert lo == 0.0

    def test_rejects_level(self):
        with pytest.raises(DomainError):
            hpd_interval(BetaParams(a=2.0, b=2.0), 1.0)


class TestHpdContains:
    @pytest.mark.parametrize("a,b", [(0.01, 110.0), (1.01, 109.99), (3.0, 10.0), (50.0, 60.0), (4.0, 0.7),
                                     (0.4, 0.6)])
    def test_agrees_with_interval(self, a, b):
        p = BetaParams(a=a, b=b)
        lo, hi = hpd_interval(p, 0.95)
        for theta in np.geomspace(1e-8, 0.999, 300):
            if min(abs(theta - lo), abs(theta - hi)) < 1e-6 * max(theta, 1e-6):
                continue
            assert hpd_contains(p, 0.95, theta) == (lo <= theta <= hi)

    def test_mode_is_always_inside(self):
        p = BetaParams(a=5.0, b=9.0)
        assert hpd_contains(p, 0.01, 4.0 / 12.0)

    def test_rejects_theta_on_boundary(self):
        with pytest.raises(DomainError):
            hpd_contains(BetaParams(a=2.0, b=2.0), 0.95, 0.0)
