import numpy as np
import pandas as pd

REPORT_COLUMNS = ['suite', 'check', 'passed', 'error', 'detail']


def check(suite, name, error, tol, detail=''):
    r"""One report row; passes when ``error`` does not exceed ``tol``.
    """
    error = float(error)
    return [suite, name, bool(error <= tol), error, detail]


def report(rows):
    return pd.DataFrame(rows, columns=REPORT_COLUMNS)


def failures(frame):
    return frame[~frame['passed']]


def curve_summary(curve):
    r"""Summary of a variance reduction factor curve per scheme and sigma.
    """
    rows = []
    for (scheme, sigma), group in curve.groupby(['scheme', 'sigma'], sort=True):
        elf = group[group['variant'] == 'elf'].sort_values('mu')['V'].to_numpy()
        clf = group[group['variant'] == 'clf'].sort_values('mu')['V'].to_numpy()
        gap = elf - clf
        rows.append([scheme, sigma, elf.mean(), elf.max(), clf.mean(), clf.max(),
                     gap.min(), gap.max(), int(np.count_nonzero(gap > 1e-9)),
                     int(np.count_nonzero(gap < -1e-9))])
    columns = ['scheme', 'sigma', 'elf mean', 'elf max', 'clf mean', 'clf max',
               'gap min', 'gap max', 'points improved', 'points below']
    return pd.DataFrame(rows, columns=columns)
