import numpy as np
from Circuits import logical
from Inference import chebyshev
from Models.params import ClfSpec, Scheme
from Models.priors import GaussianPrior
from Optimizers import optimizers
from Utils import generator
from Utils import metrics

SUITE = 'chebyshev'
SIGMAS = (0.5, 0.2, 0.1, 0.05)
LEVELS = {
    'fast' : {'L': (1, 2), 'grid': 1000, 'pipeline_mu': 9},
    'full' : {'L': (1, 2, 3), 'grid': 1000, 'pipeline_mu': 41},
}


def run(level):
    config = LEVELS[level]
    thetas = np.linspace(0.0, np.pi, 257)
    grid = np.linspace(-np.pi, np.pi, config['grid'])
    rows = []
    for scheme in Scheme:
        for L in config['L']:
            spec = ClfSpec(scheme, L)
            label = '{} L={}'.format(scheme, L)

            ## Closed-form properties ##
            for sigma in SIGMAS:
                frame = chebyshev.clf_properties_check(spec, sigma, grid)
                for _, row in frame.iterrows():
                    rows.append([SUITE, row['property'], bool(row['passed']), float(row['error']),
                                 '{} sigma={}'.format(label, sigma)])

            ## Bias and pipeline identities ##
            x = chebyshev.clf_point(spec)
            error = np.max(np.abs(chebyshev.clf_bias(spec, thetas) - logical.bias_direct(scheme, thetas, x)))
            rows.append(metrics.check(SUITE, 'bias equals circuit', error, 1e-12, label))
            error = 0.0
            for sigma in SIGMAS:
                for mu in generator.mu_grid(config['pipeline_mu']):
                    V = optimizers.objective(scheme, L, GaussianPrior(mu, sigma), x)
                    error = max(error, abs(V - chebyshev.clf_vrf(spec, mu, sigma)) / max(1.0, spec.q**2))
            rows.append(metrics.check(SUITE, 'pipeline equals closed form', error, 1e-10, label))

            ## Dead spots ##
            dead = np.arange(-spec.q, spec.q + 1) * np.pi / spec.q
            derivs = np.array([chebyshev.clf_derivatives(spec, mu, 2) for mu in dead])
            error = max(np.max(np.abs(derivs[:, 1])), np.max(np.abs(np.abs(derivs[:, 2]) - spec.q**2)) / spec.q**2)
            rows.append(metrics.check(SUITE, 'dead-spot derivatives', error, 1e-12, label))
    return rows
