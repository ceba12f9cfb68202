import time
import numpy as np
from Inference import chebyshev
from Models.params import ClfSpec, Scheme
from Models.priors import GaussianPrior
from Optimizers import optimizers
from Utils import generator
from Utils import load
from Utils import metrics
from optimize import OptProblem, optimize

SUITE = 'optimality'
CURVE_SIGMAS = (0.5, 0.2, 0.1, 0.05)
CURVE_MU_POINTS = 201
CURVE_BUDGET = 600.0
LEVELS = {
    'fast' : {'mu': 5, 'sigmas': (0.2, 0.05), 'restarts': 1, 'grid': 400, 'dominance_L': (1,), 'dominance_mu': 3, 'timing_mu': 3},
    'full' : {'mu': 21, 'sigmas': (0.5, 0.2, 0.1, 0.05), 'restarts': 4, 'grid': 2000, 'dominance_L': (1, 2), 'dominance_mu': 9, 'timing_mu': 9},
}


def run(level):
    config = LEVELS[level]
    rows = []

    ## AB at L = 1: the Chebyshev point is optimal ##
    spec = ClfSpec(Scheme.AB, 1)
    to_clf, to_ceiling, uncertified = 0.0, 0.0, 0
    for sigma in config['sigmas']:
        for mu in generator.mu_grid(config['mu']):
            result = optimize(OptProblem(Scheme.AB, 1, GaussianPrior(mu, sigma), restarts=config['restarts']))
            to_clf = max(to_clf, abs(result.V_star - chebyshev.clf_vrf(spec, mu, sigma)))
            to_ceiling = max(to_ceiling, abs(result.V_star - optimizers.ab_l1_ceiling(mu, sigma)))
            uncertified += not result.certified
    rows.append(metrics.check(SUITE, 'AB L=1 optimum equals CLF', to_clf, 1e-9))
    rows.append(metrics.check(SUITE, 'AB L=1 optimum equals ceiling', to_ceiling, 1e-9))
    rows.append(metrics.check(SUITE, 'gradient certificate', uncertified, 0))

    ## AF at L = 1 near a dead spot ##
    prior = GaussianPrior(np.pi / 3, 0.2)
    result = optimize(OptProblem(Scheme.AF, 1, prior, restarts=config['restarts']))
    searcher = load.optimizer('grid')(Scheme.AF, 1, prior, points=config['grid'])
    oracle = searcher.objective(searcher.step(None))
    gain = result.V_star - result.V_clf
    rows.append(metrics.check(SUITE, 'AF L=1 beats CLF at a dead spot', 0.0 if gain > 1e-9 else 1.0, 0.0,
                              'gain {:.6g}'.format(gain)))
    rows.append(metrics.check(SUITE, 'AF L=1 reaches grid oracle', max(0.0, oracle - result.V_star), 1e-9,
                              'oracle {:.6g}'.format(oracle)))

    ## ELF dominates CLF ##
    worst = 0.0
    for scheme in Scheme:
        for L in config['dominance_L']:
            for sigma in config['sigmas']:
                for mu in generator.mu_grid(config['dominance_mu']):
                    result = optimize(OptProblem(scheme, L, GaussianPrior(mu, sigma), restarts=config['restarts']))
                    worst = max(worst, result.V_clf - result.V_star)
    rows.append(metrics.check(SUITE, 'ELF dominates CLF', worst, 1e-9))

    ## Runtime of the default curve grid, L <= 2 ##
    start = time.perf_counter()
    for scheme in Scheme:
        for L in (1, 2):
            for mu in generator.mu_grid(config['timing_mu']):
                optimize(OptProblem(scheme, L, GaussianPrior(mu, 0.1)))
    per_point = (time.perf_counter() - start) / config['timing_mu']
    projected = per_point * len(CURVE_SIGMAS) * CURVE_MU_POINTS
    rows.append(metrics.check(SUITE, 'projected curve runtime (s)', projected, CURVE_BUDGET,
                              '{:.3g} s per (sigma, mu) point over AF/AB and L = 1, 2'.format(per_point)))
    return rows
