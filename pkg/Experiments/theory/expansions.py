import numpy as np
import torch
from Circuits import logical
from Expansions import series
from Expansions import words
from Models.params import Scheme, TunableParams
from Utils import generator
from Utils import metrics

SUITE = 'expansions'
LEVELS = {
    'fast' : {'L': (1, 2), 'samples': 10, 'delta_L': 2, 'closed_form': 20, 'numeric_L': 2},
    'full' : {'L': (1, 2, 3), 'samples': 50, 'delta_L': 4, 'closed_form': 100, 'numeric_L': 3},
}


def af_l1(x1, x2):
    c1, s1, c2, s2 = np.cos(x1), np.sin(x1), np.cos(x2), np.sin(x2)
    return np.array([0.5 * np.sin(2 * x1) * np.sin(2 * x2),
                     c1**2 + s1**2 * c2**2,
                     -2 * c1 * c2 * s1 * s2,
                     s1**2 * s2**2])


def ab_l1(x1, x2):
    return np.array([np.cos(x1) * np.cos(x2), -np.sin(x1) * np.sin(x2)])


def ab_reference(x):
    r"""AB coefficients summed string by string.
    """
    n = x.angles.size
    mu = np.zeros(x.L + 1)
    for y in generator.bit_strings(n):
        mu[words.xi_class(y)] += series.nu(y.count('1')) * series.zeta(y, x.angles)
    return mu


def run(level):
    config = LEVELS[level]
    rng = torch.Generator().manual_seed(1)
    thetas = np.linspace(0.0, np.pi, 257)
    rows = []

    ## Series against the circuit ##
    for scheme in Scheme:
        for L in config['L']:
            error = max(np.max(np.abs(series.fourier(x).evaluate(thetas) - logical.bias_direct(scheme, thetas, x)))
                        for x in generator.random_params(scheme, L, config['samples'], rng))
            rows.append(metrics.check(SUITE, 'series equals circuit', error, 1e-10, '{} L={}'.format(scheme, L)))

    ## Chebyshev delta coefficients and leading terms ##
    for scheme in Scheme:
        for L in range(1, config['delta_L'] + 1):
            delta = np.zeros(scheme.degree(L) + 1)
            delta[-1] = (-1)**scheme.sign_power(L)
            error = np.max(np.abs(series.fourier(TunableParams.chebyshev(scheme, L)).coeffs - delta))
            rows.append(metrics.check(SUITE, 'chebyshev delta coefficients', error, 1e-12, '{} L={}'.format(scheme, L)))
            error = 0.0
            for x in generator.random_params(scheme, L, 5, rng):
                if scheme is Scheme.AF:
                    expected = np.prod(np.sin(x.angles)**2)
                else:
                    expected = (-1)**L * np.prod(np.sin(x.angles))
                error = max(error, abs(series.fourier(x).leading - expected))
            rows.append(metrics.check(SUITE, 'leading terms', error, 1e-12, '{} L={}'.format(scheme, L)))

    ## L = 1 closed forms ##
    error = 0.0
    for _ in range(config['closed_form']):
        x1, x2 = np.pi - 2 * np.pi * torch.rand(2, generator=rng, dtype=torch.float64).numpy()
        error = max(error, np.max(np.abs(series.fourier_af(TunableParams([x1, x2], Scheme.AF)).coeffs - af_l1(x1, x2))))
        error = max(error, np.max(np.abs(series.fourier_ab(TunableParams([x1, x2], Scheme.AB)).coeffs - ab_l1(x1, x2))))
    rows.append(metrics.check(SUITE, 'L=1 closed forms', error, 1e-12))

    ## String-by-string sum with nu and zeta ##
    error = max(np.max(np.abs(ab_reference(x) - series.fourier_ab(x).coeffs))
                for x in generator.random_params(Scheme.AB, 2, 5, rng))
    rows.append(metrics.check(SUITE, 'nu-weighted string sum', error, 1e-12))

    ## Numeric interpolation against the combinatorial sums ##
    for scheme in Scheme:
        error = 0.0
        for L in range(1, config['numeric_L'] + 1):
            for x in generator.random_params(scheme, L, config['samples'], rng):
                combinatorial = series.fourier_af(x) if scheme is Scheme.AF else series.fourier_ab(x)
                error = max(error, np.max(np.abs(series.fourier_numeric(scheme, x).coeffs - combinatorial.coeffs)))
        rows.append(metrics.check(SUITE, 'numeric coefficients', error, 1e-9, str(scheme)))

    ## Per-coordinate decompositions ##
    error = 0.0
    for scheme in Scheme:
        for x in generator.random_params(scheme, 2, 3, rng):
            for j in range(1, x.angles.size + 1):
                parts = series.csd_ab(x, j) if scheme is Scheme.AB else series.csbd_af(x, j)
                for t in np.pi - 2 * np.pi * torch.rand(4, generator=rng, dtype=torch.float64).numpy():
                    direct = series.fourier(x.with_angle(j, t))
                    error = max(error, np.max(np.abs((parts.evaluate(t) - direct).coeffs)))
    rows.append(metrics.check(SUITE, 'coordinate decompositions', error, 1e-12))

    ## Closure under products ##
    error = 0.0
    for L in (1, 2):
        x, y = generator.random_params(Scheme.AB, L, 2, rng)
        product = series.fourier(x) * series.fourier(y)
        recovered = series.interpolate(lambda theta: logical.bias_direct(Scheme.AB, theta, x)
                                       * logical.bias_direct(Scheme.AB, theta, y), 2 * L)
        error = max(error, np.max(np.abs((product - recovered).coeffs)))
    rows.append(metrics.check(SUITE, 'closure under products', error, 1e-9))

    ## Q00 expansion for odd and even lengths ##
    error = 0.0
    for alpha in range(1, 2 * max(config['L']) + 2):
        z = np.pi - 2 * np.pi * torch.rand(alpha, generator=rng, dtype=torch.float64).numpy()
        expansion = series.evaluate_q00(series.fourier_q00(z), thetas)
        error = max(error, np.max(np.abs(expansion - logical.q00(thetas, z))))
    rows.append(metrics.check(SUITE, 'q00 expansion equals circuit', error, 1e-10))
    return rows
