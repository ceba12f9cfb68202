from dataclasses import dataclass, field
from typing import List, Optional
from tqdm import tqdm
import numpy as np
import torch
from Inference import chebyshev
from Models.params import ClfSpec, TunableParams, wrap
from Models.priors import GaussianPrior
from Optimizers import optimizers
from Utils.errors import ArgumentError

TIE_TOL = 1e-12
CONVERGENCE_TOL = 1e-12
CERTIFICATE_TOL = 1e-5
DEAD_SPOT_TOL = 1e-20
BASELINE_TOL = 1e-9


@dataclass(frozen=True)
class OptProblem:
    scheme: object
    L: int
    prior: GaussianPrior
    restarts: int = 4
    sweeps: int = 50
    seed: int = 1
    fidelity: float = 1.0
    perturbation: float = 0.1
    warm_start: Optional[TunableParams] = None

    def __post_init__(self):
        if not self.prior.sigma > 0:
            raise ArgumentError("prior sigma must be positive")
        if self.L < 1 or self.restarts < 0 or self.sweeps < 1:
            raise ArgumentError("need L >= 1, restarts >= 0 and sweeps >= 1")
        if not 0.0 <= self.fidelity <= 1.0:
            raise ArgumentError("fidelity must lie in [0, 1], got {}".format(self.fidelity))


@dataclass
class OptResult:
    x_star: TunableParams
    V_star: float
    V_clf: float
    trace: List[float] = field(default_factory=list)
    grad_norm: float = 0.0
    certified: bool = False
    dead_spot: bool = False

    @property
    def below_clf(self):
        return self.V_star < self.V_clf - BASELINE_TOL


def starts(problem):
    r"""CLF point, CLF +/- a seeded perturbation, seeded uniform points and
    the optional warm start.
    """
    generator = torch.Generator().manual_seed(problem.seed)
    clf = chebyshev.clf_point(ClfSpec(problem.scheme, problem.L))
    n = 2 * problem.L
    delta = problem.perturbation * torch.randn(n, generator=generator, dtype=torch.float64).numpy()
    points = [clf,
              TunableParams(wrap(clf.angles + delta), problem.scheme),
              TunableParams(wrap(clf.angles - delta), problem.scheme)]
    for _ in range(problem.restarts):
        uniform = torch.rand(n, generator=generator, dtype=torch.float64).numpy()
        points.append(TunableParams(np.pi - 2 * np.pi * uniform, problem.scheme))
    if problem.warm_start is not None:
        points.append(problem.warm_start)
    return points


def optimize(problem, verbose=False):
    r"""Multi-start coordinate ascent on the variance reduction factor.
    """
    ascent = optimizers.CoordinateAscent(problem.scheme, problem.L, problem.prior, problem.fidelity)
    clf = chebyshev.clf_point(ClfSpec(problem.scheme, problem.L))
    V_clf = ascent.objective(clf)

    best = None
    for start in tqdm(starts(problem), disable=not verbose, leave=False):
        x, value = ascent.run(start, problem.sweeps, CONVERGENCE_TOL)
        x = x.wrapped()
        candidate = (value, x, list(ascent.trace))
        if best is None or value > best[0] + TIE_TOL:
            best = candidate
        elif abs(value - best[0]) <= TIE_TOL and x.distance(clf) < best[1].distance(clf):
            best = candidate

    V_star, x_star, trace = best
    grad = optimizers.gradient(problem.scheme, problem.L, problem.prior, x_star, problem.fidelity)
    grad_norm = float(np.max(np.abs(grad)))
    dead_spot = V_star <= DEAD_SPOT_TOL
    return OptResult(x_star, V_star, V_clf, trace, grad_norm,
                     grad_norm < CERTIFICATE_TOL or dead_spot, dead_spot)
