from tqdm import tqdm
import numpy as np
import pandas as pd
from Circuits import logical
from Expansions import series
from Inference import bayes, chebyshev
from Models.params import ClfSpec
from Models.priors import GaussianPrior
from optimize import OptProblem, optimize

CURVE_COLUMNS = ['scheme', 'variant', 'L', 'sigma', 'mu', 'V', 'epv', 'x_star']
BIAS_COLUMNS = ['theta', 'bias_direct', 'bias_series', 'abs_diff']


def format_angles(x):
    return ';'.join(format(float(a), '.17g') for a in x.angles)


def clf_row(spec, mu, sigma, fidelity):
    b, chi = chebyshev.clf_b_chi(spec, mu, sigma)
    V = bayes.vrf_noisy(b, chi, fidelity)
    return [spec.scheme.value, 'clf', spec.L, sigma, mu, V, bayes.epv(V, sigma), '']


def vrf_curve(schemes, L, sigmas, mus, restarts=4, sweeps=50, seed=1, fidelity=1.0, verbose=False):
    r"""ELF and CLF variance reduction factors over a (sigma, mu) grid.
    """
    rows = []
    for scheme in schemes:
        spec = ClfSpec(scheme, L)
        for sigma in sigmas:
            warm = None
            for mu in tqdm(mus, disable=not verbose, desc='{} sigma={}'.format(scheme, sigma)):
                problem = OptProblem(scheme, L, GaussianPrior(mu, sigma), restarts, sweeps, seed,
                                     fidelity, warm_start=warm)
                result = optimize(problem)
                warm = result.x_star
                rows.append([scheme.value, 'elf', L, sigma, mu, result.V_star,
                             bayes.epv(result.V_star, sigma), format_angles(result.x_star)])
                rows.append(clf_row(spec, mu, sigma, fidelity))
    frame = pd.DataFrame(rows, columns=CURVE_COLUMNS)
    return frame.sort_values(['scheme', 'variant', 'sigma', 'mu'], kind='mergesort').reset_index(drop=True)


def bias_curve(x, thetas, fidelity=1.0):
    r"""Circuit bias against its cosine expansion on a theta grid, with the
    largest discrepancy appended as a final 'max' row.
    """
    thetas = np.asarray(thetas, dtype=float)
    if fidelity < 1.0:
        direct = logical.bias_noisy(x.scheme, thetas, x, fidelity)
    else:
        direct = logical.bias_direct(x.scheme, thetas, x)
    expansion = fidelity * series.fourier(x).evaluate(thetas)
    diff = np.abs(direct - expansion)
    frame = pd.DataFrame({'theta': thetas, 'bias_direct': direct, 'bias_series': expansion, 'abs_diff': diff},
                         columns=BIAS_COLUMNS)
    summary = pd.DataFrame([['max', np.nan, np.nan, float(np.max(diff))]], columns=BIAS_COLUMNS)
    return pd.concat([frame.astype({'theta': object}), summary], ignore_index=True)
