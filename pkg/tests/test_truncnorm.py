"""Truncated-normal sampling: signs, moments, and deep-tail stability."""

import numpy as np

from swingdecision.truncnorm import sample_probit_latents, sample_std_lower, std_lower_mean
from swingdecision.util import rng_from_seed


def test_signs_match_labels():
    rng = rng_from_seed(0)
    mean = rng.normal(0, 2, 5000)
    y = (rng.random(5000) < 0.5).astype(float)
    z = sample_probit_latents(rng, mean, y)
    assert (z[y == 1] > 0).all()
    assert (z[y == 0] <= 0).all()


def test_half_normal_mean():
    # centered predictor, positive label: E[z] = sqrt(2/pi) ~ 0.7979
    rng = rng_from_seed(1)
    z = sample_probit_latents(rng, np.zeros(100_000), np.ones(100_000))
    assert abs(z.mean() - np.sqrt(2.0 / np.pi)) < 0.01


def test_deep_tail_no_hang_and_mean():
    # g = -8 with y = 1 forces draws from an 8-sigma tail
    rng = rng_from_seed(2)
    g = np.full(50_000, -8.0)
    z = sample_probit_latents(rng, g, np.ones(50_000))
    assert np.isfinite(z).all()
    assert (z > 0).all()
    analytic = -8.0 + std_lower_mean(8.0)
    assert abs(z.mean() - analytic) / analytic < 0.05


def test_extreme_tail_still_finite():
    rng = rng_from_seed(3)
    z = sample_std_lower(rng, np.array([40.0, 100.0, 300.0]))
    assert np.isfinite(z).all()
    assert (z >= np.array([40.0, 100.0, 300.0])).all()


def test_mills_ratio_asymptote():
    # E[T | T > a] -> a + 1/a for large a
    a = np.array([10.0, 50.0, 200.0])
    m = std_lower_mean(a)
    assert np.allclose(m, a + 1.0 / a, rtol=1e-3)
