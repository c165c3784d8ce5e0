"""One-sided truncated-normal sampling that stays exact far into the tails.

Draws use the inverse-CDF in log space (``ndtri_exp`` composed with
``log_ndtr``), so there are no rejection loops that can stall when the
truncation point sits many standard deviations from the mean.
"""

import numpy as np
from scipy.special import log_ndtr, ndtri_exp


def sample_std_lower(rng: np.random.Generator, a: np.ndarray) -> np.ndarray:
    """Draw from a standard normal truncated to (a, inf), elementwise."""
    a = np.asarray(a, dtype=np.float64)
    u = rng.random(a.shape)
    # P(T <= t | T > a) = u  =>  Phi(-t) = (1-u) * Phi(-a)
    return -ndtri_exp(np.log1p(-u) + log_ndtr(-a))


def sample_probit_latents(
    rng: np.random.Generator, mean: np.ndarray, y: np.ndarray
) -> np.ndarray:
    """Latent z ~ N(mean, 1) truncated to (0, inf) if y=1, (-inf, 0] if y=0."""
    mean = np.asarray(mean, dtype=np.float64)
    y = np.asarray(y)
    # z > 0 given y=1: shift a standard draw truncated at -mean.
    # z <= 0 given y=0: reflect, truncating the reflected draw at +mean.
    a = np.where(y == 1, -mean, mean)
    t = sample_std_lower(rng, a)
    return np.where(y == 1, mean + t, mean - t)


def std_lower_mean(a) -> np.ndarray:
    """E[T | T > a] for a standard normal, via the Mills ratio in log space."""
    a = np.asarray(a, dtype=np.float64)
    log_phi = -0.5 * a * a - 0.5 * np.log(2.0 * np.pi)
    return np.exp(log_phi - log_ndtr(-a))
