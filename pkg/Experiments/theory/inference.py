import numpy as np
import torch
from Expansions import series
from Inference import bayes, chebyshev
from Models import likelihoods
from Models.params import ClfSpec, Scheme
from Utils import generator
from Utils import load
from Utils import metrics

SUITE = 'inference'
LEVELS = {
    'fast' : {'L': (1, 2), 'samples': 5, 'noise': 20, 'limits': 20},
    'full' : {'L': (1, 2, 3), 'samples': 50, 'noise': 100, 'limits': 20},
}


def uniform(rng, low, high):
    return float(low + (high - low) * torch.rand(1, generator=rng, dtype=torch.float64))


def run(level):
    config = LEVELS[level]
    rng = torch.Generator().manual_seed(2)
    Prior = load.prior('gaussian')
    rows = []

    ## Quadrature against the closed forms ##
    for scheme in Scheme:
        error, slope, spread = 0.0, 0.0, 0.0
        for L in config['L']:
            for x in generator.random_params(scheme, L, config['samples'], rng):
                prior = Prior(uniform(rng, 0.0, np.pi), uniform(rng, 0.01, 1.0))
                poly = series.fourier(x)
                b, chi = bayes.b_chi_gaussian(poly, prior)
                bq, chiq = bayes.b_chi_quadrature(likelihoods.engineered(x), prior)
                error = max(error, abs(b - bq), abs(chi - chiq))
                h = 1e-6
                forward, _ = bayes.b_chi_gaussian(poly, Prior(prior.mu + h, prior.sigma))
                backward, _ = bayes.b_chi_gaussian(poly, Prior(prior.mu - h, prior.sigma))
                slope = max(slope, abs((forward - backward) / (2 * h) - chi) / max(1.0, abs(chi)))
                V = bayes.vrf(b, chi)
                spread = max(spread, max(0.0, -bayes.epv(V, prior.sigma)), max(0.0, bayes.epv(V, prior.sigma) - prior.sigma**2))
        rows.append(metrics.check(SUITE, 'quadrature equals closed form', error, 1e-8, str(scheme)))
        rows.append(metrics.check(SUITE, 'chi is the mu-derivative of b', slope, 1e-6, str(scheme)))
        rows.append(metrics.check(SUITE, 'epv within [0, sigma^2]', spread, 1e-12, str(scheme)))

    ## General expected posterior variance ##
    error = 0.0
    for x in generator.random_params(Scheme.AB, 1, 3, rng):
        prior = Prior(uniform(rng, 0.5, 2.5), uniform(rng, 0.05, 0.5))
        lik = likelihoods.engineered(x)
        I0, I1 = bayes.moment_Ik(prior, lik, 0, 0), bayes.moment_Ik(prior, lik, 1, 0)
        error = max(error, abs(bayes.epv_general(prior, lik) - bayes.epv_two_outcome(I0, I1, prior.mu, prior.sigma)))
    rows.append(metrics.check(SUITE, 'general epv equals two-outcome epv', error, 1e-10))

    ## Fidelity scaling ##
    error, monotone = 0.0, 0
    fidelities = np.array([0.0, 0.25, 0.5, 0.75, 0.9, 0.99])
    for i in range(config['noise']):
        scheme = (Scheme.AF, Scheme.AB)[i % 2]
        x = next(generator.random_params(scheme, 1, 1, rng))
        prior = Prior(uniform(rng, 0.0, np.pi), uniform(rng, 0.01, 1.0))
        b, chi = bayes.b_chi_gaussian(series.fourier(x), prior)
        values = []
        for f in fidelities:
            bf, chif = bayes.b_chi_gaussian(series.fourier(x) * f, prior)
            values.append(bayes.vrf(bf, chif))
            error = max(error, abs(values[-1] - f**2 * chi**2 / (1 - f**2 * b**2)))
        monotone += int(np.any(np.diff(values) < -1e-15))
    rows.append(metrics.check(SUITE, 'fidelity scaling', error, 1e-12))
    rows.append(metrics.check(SUITE, 'V nondecreasing in fidelity', monotone, 0))

    ## Small-sigma limits ##
    worst, tried = 0.0, 0
    while tried < config['limits']:
        scheme = (Scheme.AF, Scheme.AB)[tried % 2]
        poly = series.fourier(next(generator.random_params(scheme, 1 + tried % 2, 1, rng)))
        mu = uniform(rng, 0.0, np.pi)
        if abs(poly.evaluate(mu)) > 0.9 or abs(poly.derivative(mu, 1)) < 0.3:
            continue
        tried += 1
        limit = bayes.vrf_limit_sigma0(poly, mu)
        V = bayes.vrf(*bayes.b_chi_gaussian(poly, Prior(mu, 1e-3)))
        worst = max(worst, abs(V - limit) / max(limit, 1e-6))
    rows.append(metrics.check(SUITE, 'small-sigma limit is Fisher information', worst, 5e-3))
    error = 0.0
    for scheme in Scheme:
        for L in (1, 2, 3, 40, 64):
            spec = ClfSpec(scheme, L)
            poly = chebyshev.clf_poly(spec)
            error = max(error, bayes.vrf_limit_sigma0(poly, np.pi / spec.q),
                        abs(bayes.vrf_limit_sigma0(poly, np.pi / (2 * spec.q)) - spec.q**2) / spec.q**2)
    rows.append(metrics.check(SUITE, 'chebyshev small-sigma limits', error, 1e-12))

    ## Taylor series in sigma ##
    error = 0.0
    for mu in np.linspace(0.1, 3.0, 7):
        derivs = [np.cos(mu), -np.sin(mu), -np.cos(mu), np.sin(mu)] * 2
        for sigma in (0.05, 0.1, 0.3):
            b, chi, _ = bayes.b_chi_taylor(derivs, sigma)
            error = max(error, abs(b - np.exp(-sigma**2 / 2) * np.cos(mu)), abs(chi + np.exp(-sigma**2 / 2) * np.sin(mu)))
    rows.append(metrics.check(SUITE, 'taylor expansion in sigma', error, 1e-6))
    return rows
