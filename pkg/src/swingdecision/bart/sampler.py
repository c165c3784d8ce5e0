"""Sum-of-trees posterior sampler.

Continuous responses are standardized internally and fit with a conjugate
normal leaf prior and inverse-gamma noise variance; binary responses use a
probit link via truncated-normal data augmentation. One chain is strictly
sequential; identical data, config, and seed give bit-identical kept draws.
"""

import math
from dataclasses import asdict, dataclass

import numpy as np
from scipy.special import ndtri

from ..features import Design
from ..truncnorm import sample_probit_latents
from ..util import rng_from_seed
from .forest import ForestBuilder, PosteriorEnsemble
from .moves import TreePrior, apply_proposal, propose_tree_move
from .trees import Tree


class DegenerateDataError(ValueError):
    """Raised when a response carries no information to fit."""


@dataclass
class EnsembleConfig:
    n_trees: int = 200
    alpha_split: float = 0.95
    beta_split: float = 2.0
    leaf_scale: float | None = None  # None: derived from mode (see fit)
    nu: float = 3.0
    lam: float | None = None  # None: calibrated so P(sigma < 1) = sigma_prior_q
    sigma_prior_q: float = 0.9
    probit_offset: float | None = None  # None: Phi^{-1}(training base rate)
    burn_in: int = 1000
    n_draws: int = 1000
    thin: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.n_trees < 1:
            raise ValueError("n_trees must be >= 1")
        if not 0.0 < self.alpha_split < 1.0:
            raise ValueError("alpha_split must be in (0, 1)")
        if self.beta_split < 0.0:
            raise ValueError("beta_split must be >= 0")
        if self.nu <= 0.0 or (self.lam is not None and self.lam <= 0.0):
            raise ValueError("nu and lam must be positive")
        if self.n_draws < 1 or self.burn_in < 0 or self.thin < 1:
            raise ValueError("invalid iteration counts")

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, payload: dict) -> "EnsembleConfig":
        return cls(**payload)


def default_config(mode: str, **overrides) -> EnsembleConfig:
    """Mode defaults: 200 trees for regression, 50 for probit."""
    base = {"n_trees": 200} if mode == "regression" else {"n_trees": 50}
    base.update(overrides)
    return EnsembleConfig(**base)


def sample_leaf_means(tree: Tree, resid: np.ndarray, sigma2: float, leaf_var: float,
                      rng: np.random.Generator) -> np.ndarray:
    """Conjugate refresh of every leaf mean; empty leaves draw from the prior."""
    n_leaves = tree.n_leaves
    counts = np.bincount(tree.assign, minlength=n_leaves).astype(np.float64)
    sums = np.bincount(tree.assign, weights=resid, minlength=n_leaves)
    prec = counts / sigma2 + 1.0 / leaf_var
    mean = (sums / sigma2) / prec
    sd = np.sqrt(1.0 / prec)
    mus = mean + sd * rng.standard_normal(n_leaves)
    for slot, leaf in enumerate(tree.leaves):
        leaf.mu = float(mus[slot])
    return mus


def sample_sigma(resid: np.ndarray, nu: float, lam: float,
                 rng: np.random.Generator) -> float:
    """Noise scale draw: sigma^2 ~ IG((nu+n)/2, (nu*lam + sum r^2)/2)."""
    n = resid.size
    shape = 0.5 * (nu + n)
    rate = 0.5 * (nu * lam + float(resid @ resid))
    return math.sqrt(rate / rng.gamma(shape))


def _calibrated_lam(nu: float, q: float) -> float:
    from ..rex.bayes import calibrate_sigma_prior

    return calibrate_sigma_prior(nu, q)


def fit(design: Design, y, config: EnsembleConfig | None = None,
        mode: str = "regression") -> PosteriorEnsemble:
    """Run one chain and return the kept draws.

    mode "regression": response standardized internally, draws reported on
    the original scale. mode "probit": binary response, predictions are
    Phi(tree sum + offset).
    """
    if mode not in ("regression", "probit"):
        raise ValueError(f"unknown mode {mode!r}")
    y = np.asarray(y, dtype=np.float64)
    n = y.size
    if n == 0:
        raise ValueError("cannot fit on zero rows")
    if design.n_rows != n:
        raise ValueError("design and response row counts differ")
    if config is None:
        config = default_config(mode)

    m = config.n_trees
    rng = rng_from_seed(config.seed)
    prior = TreePrior(config.alpha_split, config.beta_split)

    if mode == "probit":
        uniq = np.unique(y)
        if not np.isin(uniq, (0.0, 1.0)).all():
            raise TypeError("probit mode requires a binary 0/1 response")
        base_rate = min(max(float(y.mean()), 1e-6), 1.0 - 1e-6)
        offset = (config.probit_offset if config.probit_offset is not None
                  else float(ndtri(base_rate)))
        y_mean, y_sd = 0.0, 1.0
        leaf_scale = (config.leaf_scale if config.leaf_scale is not None
                      else 1.0 / math.sqrt(m))
        sigma2 = 1.0
        lam = config.lam
    else:
        y_mean = float(y.mean())
        y_sd = float(y.std())
        if y_sd == 0.0:
            if n > 1:
                raise DegenerateDataError("constant response in regression mode")
            y_sd = 1.0  # single row: center only, no meaningful spread
        offset = 0.0
        y_std = (y - y_mean) / y_sd
        spread = float(y_std.max() - y_std.min()) or 1.0
        leaf_scale = (config.leaf_scale if config.leaf_scale is not None
                      else spread / (6.0 * math.sqrt(m)))
        sigma2 = 1.0
        lam = config.lam if config.lam is not None else _calibrated_lam(
            config.nu, config.sigma_prior_q)

    leaf_var = leaf_scale * leaf_scale
    trees = [Tree(n) for _ in range(m)]
    fit_matrix = np.zeros((m, n), dtype=np.float64)
    total_fit = np.zeros(n, dtype=np.float64)
    builder = ForestBuilder(
        m, [design.meta.n_levels(j) for j in range(len(design.meta.categorical_names))]
    )
    sigma_draws: list[float] = []
    counters = {"grow_accept": 0, "prune_accept": 0, "proposed": 0, "skipped": 0}

    total_iters = config.burn_in + config.n_draws * config.thin
    for it in range(total_iters):
        if mode == "probit":
            z = sample_probit_latents(rng, total_fit + offset, y)
            y_work = z - offset
        else:
            y_work = y_std
        for t in range(m):
            tree = trees[t]
            resid = y_work - total_fit + fit_matrix[t]
            prop = propose_tree_move(tree, design, resid, sigma2, leaf_var, prior, rng)
            if prop is None:
                counters["skipped"] += 1
            else:
                counters["proposed"] += 1
                if rng.random() < math.exp(min(prop.log_accept, 0.0)):
                    apply_proposal(tree, prop)
                    counters[f"{prop.kind}_accept"] += 1
            sample_leaf_means(tree, resid, sigma2, leaf_var, rng)
            new_fit = tree.fitted()
            total_fit += new_fit - fit_matrix[t]
            fit_matrix[t] = new_fit
        if mode == "regression":
            sigma2 = sample_sigma(y_work - total_fit, config.nu, lam, rng) ** 2
        if it >= config.burn_in and (it - config.burn_in) % config.thin == 0:
            builder.add_draw(trees)
            if mode == "regression":
                sigma_draws.append(math.sqrt(sigma2))

    return PosteriorEnsemble(
        mode=mode,
        config=config,
        meta=design.meta,
        forest=builder.build(),
        y_mean=y_mean,
        y_sd=y_sd,
        offset=offset,
        sigma=np.asarray(sigma_draws) if mode == "regression" else None,
        extras={
            "counters": counters,
            "leaf_scale": leaf_scale,
            "lam": lam,
        },
    )
