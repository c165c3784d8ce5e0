"""Compare the compiled tree kernels against the NumPy fallback.

Usage: python benchmarks/bench_backends.py [--rows 20000] [--draws 200]

Times the forest-prediction kernel (the hot path when scoring pitches and
rendering what-if grids) on both backends and checks the outputs are
bit-identical.
"""

import argparse
import time

import numpy as np

from swingdecision import _kernels
from swingdecision.bart import EnsembleConfig, fit
from swingdecision.features import build_metadata, encode_design
from swingdecision.util import rng_from_seed


def build_model(n_train: int, n_draws: int, seed: int):
    rng = rng_from_seed(seed)
    num = {
        "x": rng.uniform(-2, 2, n_train),
        "z": rng.uniform(0, 5, n_train),
        "q": rng.uniform(0.2, 0.5, n_train),
    }
    cat = {"pid": rng.choice([f"p{i:03d}" for i in range(100)], n_train)}
    meta = build_metadata(list(num), cat)
    design = encode_design(meta, num, cat)
    y = (
        np.sin(num["x"]) * np.cos(num["z"])
        + 0.3 * (design.x_cat[:, 0] % 5)
        + rng.normal(0, 0.3, n_train)
    )
    config = EnsembleConfig(n_trees=50, burn_in=100, n_draws=n_draws, seed=seed)
    return fit(design, y, config, "regression"), meta


def query_design(meta, n_rows: int, seed: int):
    rng = rng_from_seed(seed)
    num = {
        "x": rng.uniform(-2, 2, n_rows),
        "z": rng.uniform(0, 5, n_rows),
        "q": rng.uniform(0.2, 0.5, n_rows),
    }
    cat = {"pid": rng.choice([f"p{i:03d}" for i in range(120)], n_rows)}
    return encode_design(meta, num, cat)


def time_predict(forest, design, backend, repeats: int = 3):
    best = np.inf
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = forest.predict_sums(design, backend=backend)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rows", type=int, default=20_000)
    parser.add_argument("--train-rows", type=int, default=4_000)
    parser.add_argument("--draws", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    backends = _kernels.available_backends()
    print(f"available backends: {backends}")
    print(f"fitting 50-tree model on {args.train_rows} rows, {args.draws} kept draws ...")
    t0 = time.perf_counter()
    model, meta = build_model(args.train_rows, args.draws, args.seed)
    print(f"  fit wall time: {time.perf_counter() - t0:.1f}s (backend-independent)")
    design = query_design(meta, args.rows, args.seed + 1)

    n_ops = args.rows * args.draws * model.forest.trees_per_draw
    results = {}
    print(f"\npredicting {args.rows} rows x {args.draws} draws x "
          f"{model.forest.trees_per_draw} trees ({n_ops / 1e6:.0f}M traversals)")
    print(f"{'backend':<10} {'seconds':>9} {'traversals/s':>14}")
    for name in backends:
        secs, out = time_predict(model.forest, design, _kernels.get_backend(name))
        results[name] = (secs, out)
        print(f"{name:<10} {secs:>9.3f} {n_ops / secs:>14.2e}")

    if len(results) == 2:
        a = results["python"][1]
        b = results["compiled"][1]
        identical = np.array_equal(a, b)
        speedup = results["python"][0] / results["compiled"][0]
        print(f"\nbit-identical outputs: {identical}")
        print(f"compiled speedup: {speedup:.1f}x")
        return 0 if identical else 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
