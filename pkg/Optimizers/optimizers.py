from dataclasses import dataclass
import math
import numpy as np
from scipy.optimize import minimize_scalar
from Expansions import series
from Inference import bayes, chebyshev
from Models.params import ClfSpec, Scheme, TunableParams, wrap
from Utils.errors import ArgumentError, CapacityError

GRID_POINTS = 720
REFINE_TOL = 1e-12
ACCEPT_TOL = 1e-14
DEGENERATE_TOL = 1e-15
GRADIENT_STEP = 1e-6
MAX_GRID = 2**26
GRID_CHUNK = 2**16


def objective(scheme, L, prior, x, fidelity=1.0):
    r"""Variance reduction factor V(mu, sigma; x).
    """
    if x.scheme is not scheme or x.L != L:
        raise ArgumentError("parameters {!r} do not match scheme {} with L = {}".format(x, scheme, L))
    b, chi = bayes.b_chi_gaussian(series.fourier(x), prior)
    return bayes.vrf_noisy(b, chi, fidelity)


def vrf_array(b, chi):
    b, chi = np.asarray(b, dtype=float), np.asarray(chi, dtype=float)
    safe = np.abs(b) < 1 - bayes.UNIT_BIAS_TOL
    return np.where(safe, chi**2 / np.where(safe, 1 - b**2, 1.0), 0.0)


@dataclass(frozen=True)
class CoordinateProfile:
    r"""V as a function of a single angle t = x_j.

    b(t) = bC cos(wt) + bS sin(wt) + bB and likewise chi, with w = 1 for AB
    and w = 2 for AF.
    """
    b: tuple
    chi: tuple
    frequency: int

    def __call__(self, t):
        if np.ndim(t) == 0:
            cos, sin = math.cos(self.frequency * t), math.sin(self.frequency * t)
            b = self.b[0] * cos + self.b[1] * sin + self.b[2]
            chi = self.chi[0] * cos + self.chi[1] * sin + self.chi[2]
            return 0.0 if abs(b) >= 1 - bayes.UNIT_BIAS_TOL else chi * chi / (1 - b * b)
        t = np.asarray(t, dtype=float)
        cos, sin = np.cos(self.frequency * t), np.sin(self.frequency * t)
        b = self.b[0] * cos + self.b[1] * sin + self.b[2]
        chi = self.chi[0] * cos + self.chi[1] * sin + self.chi[2]
        return vrf_array(b, chi)

    @property
    def degenerate(self):
        amplitudes = np.abs([self.b[0], self.b[1], self.chi[0], self.chi[1]])
        return bool(np.all(amplitudes <= DEGENERATE_TOL))


def coordinate_profile(x, j, prior, fidelity=1.0):
    if x.scheme is Scheme.AB:
        pair = series.csd_ab(x, j)
        parts, frequency = (pair.C, pair.S), 1
        constant = (0.0, 0.0)
    else:
        triple = series.csbd_af(x, j)
        parts, frequency = (triple.C, triple.S), 2
        constant = bayes.b_chi_gaussian(triple.B, prior)
    (bC, chiC), (bS, chiS) = [bayes.b_chi_gaussian(part, prior) for part in parts]
    b = tuple(fidelity * v for v in (bC, bS, constant[0]))
    chi = tuple(fidelity * v for v in (chiC, chiS, constant[1]))
    return CoordinateProfile(b, chi, frequency)


def _maximize(profile, points=GRID_POINTS):
    step = 2 * np.pi / points
    grid = -np.pi + (np.arange(points) + 1) * step
    values = profile(grid)
    i = int(np.argmax(values))
    best_t, best_v = float(grid[i]), float(values[i])
    result = minimize_scalar(lambda t: -profile(float(t)), bounds=(best_t - step, best_t + step),
                             method='bounded', options={'xatol': REFINE_TOL})
    if -result.fun > best_v:
        best_t, best_v = float(result.x), float(-result.fun)
    return float(wrap(best_t)), best_v


def coordinate_sweep(x, prior, fidelity=1.0):
    r"""One pass of exact per-coordinate maximization over j = 1..2L.

    A move is kept only if the profile value beats the current V by
    ACCEPT_TOL relative to max(1, V).
    """
    current = objective(x.scheme, x.L, prior, x, fidelity)
    for j in range(1, x.angles.size + 1):
        profile = coordinate_profile(x, j, prior, fidelity)
        if profile.degenerate:
            continue
        t, value = _maximize(profile)
        if value >= current + ACCEPT_TOL * max(1.0, current):
            x, current = x.with_angle(j, t), value
    return x


def gradient(scheme, L, prior, x, fidelity=1.0, h=GRADIENT_STEP):
    r"""Central-difference gradient of the objective.
    """
    grad = np.zeros(x.angles.size)
    for j in range(1, x.angles.size + 1):
        forward = objective(scheme, L, prior, x.with_angle(j, x.angles[j - 1] + h), fidelity)
        backward = objective(scheme, L, prior, x.with_angle(j, x.angles[j - 1] - h), fidelity)
        grad[j - 1] = (forward - backward) / (2 * h)
    return grad


def ab_l1_ceiling(mu, sigma):
    r"""Upper bound t^2 / (1 - s^2) of the AB objective at L = 1.
    """
    damping = np.exp(-0.5 * sigma**2)
    s, t = damping * np.cos(mu), damping * np.sin(mu)
    return t**2 / (1 - s**2)


class Optimizer:
    def __init__(self, scheme, L, prior, fidelity=1.0):
        self.scheme = scheme
        self.L = L
        self.prior = prior
        self.fidelity = fidelity
        self.trace = []

    def objective(self, x):
        return objective(self.scheme, self.L, self.prior, x, self.fidelity)

    def step(self, x):
        raise NotImplementedError

    def run(self, x, sweeps, tol=1e-12):
        r"""Applies steps until V improves by less than ``tol`` or ``sweeps`` is spent.
        """
        value = self.objective(x)
        self.trace = [value]
        for _ in range(sweeps):
            x = self.step(x)
            improved = self.objective(x)
            self.trace.append(improved)
            if improved - value < tol:
                break
            value = improved
        return x, self.trace[-1]

    def stats(self):
        r"""Returns the best value reached and the number of steps taken.
        """
        return max(self.trace), len(self.trace) - 1


class CoordinateAscent(Optimizer):
    def __init__(self, scheme, L, prior, fidelity=1.0):
        super(CoordinateAscent, self).__init__(scheme, L, prior, fidelity)

    def step(self, x):
        return coordinate_sweep(x, self.prior, self.fidelity)


class Chebyshev(Optimizer):
    def __init__(self, scheme, L, prior, fidelity=1.0):
        super(Chebyshev, self).__init__(scheme, L, prior, fidelity)
        self.spec = ClfSpec(scheme, L)

    def step(self, x):
        return chebyshev.clf_point(self.spec)


class GridSearch(Optimizer):
    r"""Exhaustive search over a uniform grid of (-pi, pi]^{2L}.
    """
    def __init__(self, scheme, L, prior, fidelity=1.0, points=400):
        super(GridSearch, self).__init__(scheme, L, prior, fidelity)
        if points**(2 * L) > MAX_GRID:
            raise CapacityError("grid of {}^{} points is too large".format(points, 2 * L))
        self.points = points

    def step(self, x):
        axis = -np.pi + (np.arange(self.points) + 1) * 2 * np.pi / self.points
        total = self.points**(2 * self.L)
        l = np.arange(self.scheme.degree(self.L) + 1)
        damping = np.exp(-0.5 * (l * self.prior.sigma)**2)
        cos, sin = damping * np.cos(l * self.prior.mu), -l * damping * np.sin(l * self.prior.mu)
        best_v, best_index = -np.inf, 0
        for start in range(0, total, GRID_CHUNK):
            index = np.arange(start, min(start + GRID_CHUNK, total))
            digits = np.stack(np.unravel_index(index, (self.points,) * (2 * self.L)), axis=1)
            mu = series.fourier_batch(self.scheme, axis[digits])
            values = vrf_array(self.fidelity * (mu @ cos), self.fidelity * (mu @ sin))
            i = int(np.argmax(values))
            if values[i] > best_v:
                best_v, best_index = values[i], index[i]
        digits = np.unravel_index(best_index, (self.points,) * (2 * self.L))
        return TunableParams(axis[list(digits)], self.scheme)
