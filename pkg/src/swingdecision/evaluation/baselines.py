"""Location-only and constant baselines for the CV comparison."""

from dataclasses import dataclass

import numpy as np


@dataclass
class ConstantBaseline:
    mean: float = 0.0

    def fit(self, y) -> "ConstantBaseline":
        self.mean = float(np.asarray(y, dtype=np.float64).mean())
        return self

    def predict(self, n: int) -> np.ndarray:
        return np.full(n, self.mean)


@dataclass
class LocationGridBaseline:
    """Cell-mean probabilities over a fixed grid of the plate region.

    Replaces a smooth location-only competitor: out-of-range pitches clamp
    into edge cells and empty cells fall back to the global training mean.
    """

    nx: int = 20
    nz: int = 20
    x_range: tuple = (-2.5, 2.5)
    z_range: tuple = (0.0, 5.0)
    means: np.ndarray | None = None
    global_mean: float = 0.0

    def _cells(self, x, z) -> tuple:
        x = np.asarray(x, dtype=np.float64)
        z = np.asarray(z, dtype=np.float64)
        ix = np.clip(
            ((x - self.x_range[0]) / (self.x_range[1] - self.x_range[0]) * self.nx).astype(int),
            0, self.nx - 1,
        )
        iz = np.clip(
            ((z - self.z_range[0]) / (self.z_range[1] - self.z_range[0]) * self.nz).astype(int),
            0, self.nz - 1,
        )
        return ix, iz

    def fit(self, x, z, y) -> "LocationGridBaseline":
        y = np.asarray(y, dtype=np.float64)
        ix, iz = self._cells(x, z)
        flat = ix * self.nz + iz
        counts = np.bincount(flat, minlength=self.nx * self.nz)
        sums = np.bincount(flat, weights=y, minlength=self.nx * self.nz)
        with np.errstate(invalid="ignore"):
            self.means = np.where(counts > 0, sums / counts, np.nan)
        self.global_mean = float(y.mean())
        return self

    def predict(self, x, z) -> np.ndarray:
        ix, iz = self._cells(x, z)
        out = self.means[ix * self.nz + iz]
        return np.where(np.isnan(out), self.global_mean, out)
