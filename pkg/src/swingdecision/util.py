"""Shared numerical helpers: seeding, quantile convention, stable hashing."""

import hashlib
import json

import numpy as np

# Convention used for every credible interval in the package: empirical
# quantiles are taken as order statistics (inverted CDF, "type 1"), so the
# reported endpoints are always actual draws.
QUANTILE_METHOD = "inverted_cdf"


def rng_from_seed(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def spawn_seeds(seed: int, n: int) -> list[int]:
    """Derive n independent child seeds from a root seed."""
    ss = np.random.SeedSequence(seed)
    return [int(child.generate_state(1)[0]) for child in ss.spawn(n)]


def credible_interval(draws: np.ndarray, level: float = 0.90) -> tuple[float, float]:
    """Equal-tailed interval from order statistics of the draw vector."""
    draws = np.asarray(draws, dtype=np.float64)
    if draws.size == 0:
        raise ValueError("credible_interval requires at least one draw")
    tail = (1.0 - level) / 2.0
    lo, hi = np.quantile(draws, [tail, 1.0 - tail], method=QUANTILE_METHOD)
    return float(lo), float(hi)


def stable_uhash(text: str) -> int:
    """Platform-stable 64-bit hash of a string (blake2b, not salted)."""
    digest = hashlib.blake2b(text.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "little")


def config_hash(obj) -> str:
    """Hex digest of a JSON-canonicalized configuration object."""
    blob = json.dumps(obj, sort_keys=True, separators=(",", ":"), default=str)
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def sha256_bytes(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def even_subsample(n: int, k: int) -> np.ndarray:
    """k indices spread evenly over range(n); identity when k == n."""
    if k > n:
        raise ValueError(f"cannot subsample {k} draws from {n}")
    return (np.arange(k, dtype=np.int64) * n) // k
