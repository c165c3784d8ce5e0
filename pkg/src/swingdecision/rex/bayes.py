"""Hierarchical partial-pooling run expectancy fit by Gibbs sampling.

Bin means beta_g receive a common normal prior N(beta_bar, tau_beta^2); the
grand mean gets a wide normal; the noise variance an inverse gamma; and
tau_beta a half-t with 7 degrees of freedom, handled through the standard
inverse-gamma parameter expansion so every full conditional stays conjugate.
The response is standardized to mean zero / variance one before sampling and
predictions are mapped back to runs.
"""

import math
from dataclasses import asdict, dataclass

import numpy as np
from scipy import stats

from ..util import rng_from_seed
from .bins import BinSpec, assign_bin, assign_bins


def calibrate_sigma_prior(nu: float, q: float) -> float:
    """lam such that P(sigma < 1) = q under sigma^2 ~ IG(nu/2, nu*lam/2).

    Equivalent to nu*lam/sigma^2 ~ chi-square(nu), so the requirement is
    P(chi2_nu > nu*lam) = q, i.e. lam is the (1-q) chi-square quantile over nu.
    """
    if nu <= 0:
        raise ValueError("nu must be positive")
    if not 0.0 < q < 1.0:
        raise ValueError("q must be in (0, 1)")
    return float(stats.chi2.ppf(1.0 - q, nu) / nu)


@dataclass
class RexPriorConfig:
    tau_bar_sq: float = 100.0
    half_t_df: float = 7.0
    half_t_scale: float = 1.0
    nu: float = 3.0
    lam: float | None = None  # None: calibrated so P(sigma < 1) = sigma_prior_q
    sigma_prior_q: float = 0.9
    burn_in: int = 1000
    n_draws: int = 1000
    seed: int = 0

    def __post_init__(self):
        for name in ("tau_bar_sq", "half_t_df", "half_t_scale", "nu"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.lam is not None and self.lam <= 0:
            raise ValueError("lam must be positive")

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, payload: dict) -> "RexPriorConfig":
        return cls(**payload)


@dataclass
class BayesRexState:
    """One Gibbs draw on the standardized scale, plus the mapping to runs."""

    beta: np.ndarray
    beta_bar: float
    tau_beta: float
    sigma: float
    r_mean: float
    r_sd: float

    def runs_for_bin(self, bin_id: int) -> float:
        return float(self.beta[bin_id] * self.r_sd + self.r_mean)


class PooledRexModel:
    """Sequence of BayesRexState draws with vectorized prediction."""

    def __init__(self, spec: BinSpec, prior: RexPriorConfig, beta, beta_bar,
                 tau_beta, sigma, r_mean: float, r_sd: float):
        self.spec = spec
        self.prior = prior
        self.beta = np.asarray(beta)  # (n_draws, n_bins)
        self.beta_bar = np.asarray(beta_bar)
        self.tau_beta = np.asarray(tau_beta)
        self.sigma = np.asarray(sigma)
        self.r_mean = r_mean
        self.r_sd = r_sd

    def __len__(self) -> int:
        return self.beta.shape[0]

    def __getitem__(self, i: int) -> BayesRexState:
        return BayesRexState(
            beta=self.beta[i],
            beta_bar=float(self.beta_bar[i]),
            tau_beta=float(self.tau_beta[i]),
            sigma=float(self.sigma[i]),
            r_mean=self.r_mean,
            r_sd=self.r_sd,
        )

    def predict_draws(self, game_state) -> np.ndarray:
        """Per-draw run expectancy for one game state, on the runs scale."""
        g = assign_bin(game_state, self.spec)
        return self.beta[:, g] * self.r_sd + self.r_mean

    def predict_mean(self, game_state) -> float:
        return float(self.predict_draws(game_state).mean())

    def predict_mean_many(self, game_states) -> np.ndarray:
        bins = assign_bins(game_states, self.spec)
        bin_means = self.beta.mean(axis=0) * self.r_sd + self.r_mean
        return bin_means[bins]

    def to_payload(self) -> dict:
        return {
            "spec": self.spec.to_payload(),
            "prior": self.prior.to_dict(),
            "beta": self.beta.tolist(),
            "beta_bar": self.beta_bar.tolist(),
            "tau_beta": self.tau_beta.tolist(),
            "sigma": self.sigma.tolist(),
            "r_mean": self.r_mean,
            "r_sd": self.r_sd,
        }

    @classmethod
    def from_payload(cls, payload: dict) -> "PooledRexModel":
        return cls(
            spec=BinSpec.from_payload(payload["spec"]),
            prior=RexPriorConfig.from_dict(payload["prior"]),
            beta=np.asarray(payload["beta"], dtype=np.float64),
            beta_bar=np.asarray(payload["beta_bar"], dtype=np.float64),
            tau_beta=np.asarray(payload["tau_beta"], dtype=np.float64),
            sigma=np.asarray(payload["sigma"], dtype=np.float64),
            r_mean=float(payload["r_mean"]),
            r_sd=float(payload["r_sd"]),
        )


def _inverse_gamma(rng: np.random.Generator, shape: float, rate: float) -> float:
    return rate / rng.gamma(shape)


def sample_bin_means(counts, sums, sigma_sq: float, tau_sq: float, beta_bar: float,
                     rng: np.random.Generator) -> np.ndarray:
    """Conjugate draw of every bin mean given the hyperparameters.

    Empty bins (count 0) draw from N(beta_bar, tau_sq); occupied bins from
    the precision-weighted combination of their data mean and beta_bar.
    """
    counts = np.asarray(counts, dtype=np.float64)
    sums = np.asarray(sums, dtype=np.float64)
    prec = counts / sigma_sq + 1.0 / tau_sq
    mean = (sums / sigma_sq + beta_bar / tau_sq) / prec
    return mean + np.sqrt(1.0 / prec) * rng.standard_normal(counts.shape[0])


def fit_bayes_rex(records, spec: BinSpec, prior: RexPriorConfig | None = None) -> PooledRexModel:
    """Gibbs sampler for the partial-pooling model.

    Sweep order per iteration: beta (all bins jointly, conjugate normal),
    beta_bar, sigma^2, then tau_beta^2 and its expansion auxiliary. Bins with
    no data are still sampled (from N(beta_bar, tau_beta^2)), so shrinkage
    supplies predictions for them.
    """
    if not records:
        raise ValueError("cannot fit run expectancy on zero records")
    if prior is None:
        prior = RexPriorConfig()
    lam = prior.lam if prior.lam is not None else calibrate_sigma_prior(
        prior.nu, prior.sigma_prior_q)

    runs = np.array([r.runs_rest_of_inning for r in records], dtype=np.float64)
    r_mean = float(runs.mean())
    r_sd = float(runs.std())
    if r_sd == 0.0:
        # Constant response: keep the affine map well-defined.
        r_sd = 1.0
    y = (runs - r_mean) / r_sd

    bins = assign_bins([r.game_state for r in records], spec)
    n_bins = spec.n_bins
    n = y.size
    counts = np.bincount(bins, minlength=n_bins).astype(np.float64)
    sums = np.bincount(bins, weights=y, minlength=n_bins)

    rng = rng_from_seed(prior.seed)
    nu_t = prior.half_t_df
    a_sq = prior.half_t_scale ** 2

    beta = np.where(counts > 0, sums / np.maximum(counts, 1.0), 0.0)
    beta_bar = 0.0
    tau_sq = 1.0
    sigma_sq = 1.0
    aux = 1.0

    kept_beta = np.empty((prior.n_draws, n_bins), dtype=np.float64)
    kept_bar = np.empty(prior.n_draws, dtype=np.float64)
    kept_tau = np.empty(prior.n_draws, dtype=np.float64)
    kept_sigma = np.empty(prior.n_draws, dtype=np.float64)

    total = prior.burn_in + prior.n_draws
    for it in range(total):
        beta = sample_bin_means(counts, sums, sigma_sq, tau_sq, beta_bar, rng)

        bar_prec = n_bins / tau_sq + 1.0 / prior.tau_bar_sq
        bar_mean = beta.sum() / tau_sq / bar_prec
        beta_bar = bar_mean + math.sqrt(1.0 / bar_prec) * rng.standard_normal()

        ssr = float(((y - beta[bins]) ** 2).sum())
        sigma_sq = _inverse_gamma(rng, 0.5 * (prior.nu + n), 0.5 * (prior.nu * lam + ssr))

        dev = float(((beta - beta_bar) ** 2).sum())
        tau_sq = _inverse_gamma(rng, 0.5 * (nu_t + n_bins), nu_t / aux + 0.5 * dev)
        aux = _inverse_gamma(rng, 0.5 * (nu_t + 1.0), nu_t / tau_sq + 1.0 / a_sq)

        if it >= prior.burn_in:
            k = it - prior.burn_in
            kept_beta[k] = beta
            kept_bar[k] = beta_bar
            kept_tau[k] = np.sqrt(tau_sq)
            kept_sigma[k] = np.sqrt(sigma_sq)

    return PooledRexModel(
        spec=spec, prior=prior, beta=kept_beta, beta_bar=kept_bar,
        tau_beta=kept_tau, sigma=kept_sigma, r_mean=r_mean, r_sd=r_sd,
    )
