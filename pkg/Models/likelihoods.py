import numpy as np
from Circuits import logical
from Utils.errors import ArgumentError, InvariantViolation


class DiscreteLikelihood:
    r"""Likelihood L(theta; d) over a finite outcome set.
    """
    def __init__(self, probability, outcomes=(0, 1)):
        self.probability = probability
        self.outcomes = tuple(outcomes)
        if not self.outcomes:
            raise ArgumentError("likelihood needs at least one outcome")

    def __call__(self, theta, d):
        return self.probability(theta, d)

    def check_normalized(self, thetas=None, atol=1e-12):
        if thetas is None:
            thetas = np.linspace(-np.pi, np.pi, 65)
        total = sum(np.asarray(self.probability(thetas, d), dtype=float) for d in self.outcomes)
        error = float(np.max(np.abs(total - 1.0)))
        if error > atol:
            raise InvariantViolation("likelihood sums to 1 only within {:.3e}".format(error))
        return error


def two_outcome(bias):
    r"""Two-outcome likelihood 1/2 (1 + (-1)^d bias(theta)).
    """
    def probability(theta, d):
        if d not in (0, 1):
            raise ArgumentError("outcome must be 0 or 1, got {!r}".format(d))
        p0 = 0.5 * (1.0 + np.asarray(bias(theta), dtype=float))
        return p0 if d == 0 else 1.0 - p0
    likelihood = DiscreteLikelihood(probability, (0, 1))
    likelihood.bias = bias
    return likelihood


def engineered(x, fidelity=1.0):
    if not 0.0 <= fidelity <= 1.0:
        raise ArgumentError("fidelity must lie in [0, 1], got {}".format(fidelity))
    if fidelity == 1.0:
        return two_outcome(lambda theta: logical.bias_direct(x.scheme, theta, x))
    return two_outcome(lambda theta: logical.bias_noisy(x.scheme, theta, x, fidelity))


def cosine(poly, fidelity=1.0):
    return two_outcome(lambda theta: fidelity * poly.evaluate(theta))


def chebyshev(spec):
    return two_outcome(lambda theta: spec.sign * np.cos(spec.q * np.asarray(theta, dtype=float)))


def constant(p):
    if not 0.0 <= p <= 1.0:
        raise ArgumentError("probability must lie in [0, 1], got {}".format(p))
    return two_outcome(lambda theta: (2.0 * p - 1.0) * np.ones_like(np.asarray(theta, dtype=float)))
