from dataclasses import dataclass
from typing import Callable, Tuple
import numpy as np
from Utils.errors import ArgumentError

# Width of the truncated integration window in standard deviations.
GAUSSIAN_WINDOW = 10.0


@dataclass(frozen=True)
class GaussianPrior:
    r"""Gaussian prior over theta on the whole real line.

    The physical parameter lives in [0, pi] but the prior is not truncated or
    renormalized; every closed form for b and chi assumes the full Gaussian.
    """
    mu: float
    sigma: float

    def __post_init__(self):
        if not self.sigma > 0:
            raise ArgumentError("sigma must be positive, got {}".format(self.sigma))

    def pdf(self, theta):
        z = (np.asarray(theta, dtype=float) - self.mu) / self.sigma
        return np.exp(-0.5 * z**2) / (self.sigma * np.sqrt(2 * np.pi))

    def support(self):
        return (self.mu - GAUSSIAN_WINDOW * self.sigma, self.mu + GAUSSIAN_WINDOW * self.sigma)

    @property
    def mean(self):
        return self.mu

    @property
    def variance(self):
        return self.sigma**2


@dataclass(frozen=True)
class QuadraturePrior:
    r"""Arbitrary prior given by its density on a finite support.

    Mean and variance are computed by quadrature when needed.
    """
    density: Callable
    interval: Tuple[float, float]

    def __post_init__(self):
        a, b = self.interval
        if not b > a:
            raise ArgumentError("empty support {}".format(self.interval))

    def pdf(self, theta):
        return np.asarray(self.density(np.asarray(theta, dtype=float)), dtype=float)

    def support(self):
        return tuple(self.interval)
