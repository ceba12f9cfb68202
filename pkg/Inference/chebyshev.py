r"""Chebyshev likelihood function (all tunable angles pi/2).

The bias is (-1)^r cos(q theta) with q = 2L+1, r = 0 (AF) or q = L, r = L (AB).
"""
import numpy as np
import pandas as pd
from Expansions.series import CosinePoly
from Models.params import TunableParams
from Utils.errors import ArgumentError

PROPERTY_TOL = 1e-12


def clf_point(spec):
    return TunableParams.chebyshev(spec.scheme, spec.L)


def clf_poly(spec):
    coeffs = np.zeros(spec.q + 1)
    coeffs[spec.q] = spec.sign
    return CosinePoly(coeffs)


def clf_bias(spec, theta):
    return spec.sign * np.cos(spec.q * np.asarray(theta, dtype=float))


def clf_b_chi(spec, mu, sigma):
    damping = spec.sign * np.exp(-0.5 * (spec.q * sigma)**2)
    return damping * np.cos(spec.q * mu), -spec.q * damping * np.sin(spec.q * mu)


def clf_vrf(spec, mu, sigma):
    if not sigma > 0:
        raise ArgumentError("sigma must be positive, got {}".format(sigma))
    q = spec.q
    s2 = np.sin(q * np.asarray(mu, dtype=float))**2
    return q**2 * s2 / (np.expm1((q * sigma)**2) + s2)


def on_dead_spot(spec, mu, atol=1e-12):
    r"""Whether mu lies in (pi/q) Z.
    """
    ratio = spec.q * np.asarray(mu, dtype=float) / np.pi
    return np.abs(ratio - np.round(ratio)) <= atol


def clf_limit_sigma0(spec, mu):
    return np.where(on_dead_spot(spec, mu), 0.0, float(spec.q**2))


def clf_derivatives(spec, mu, order):
    return clf_poly(spec).derivatives(mu, order)


def clf_properties_check(spec, sigma, grid):
    r"""Checks the closed-form CLF properties on a grid of prior means.
    """
    grid = np.asarray(grid, dtype=float)
    if grid.size == 0:
        raise ArgumentError("empty mu grid")
    q = spec.q
    scale = PROPERTY_TOL * max(1.0, q**2)
    V = clf_vrf(spec, grid, sigma)
    peak = q**2 * np.exp(-(q * sigma)**2)
    zeros = np.arange(-q, q + 1) * np.pi / q
    maxima = (2 * np.arange(-q, q) + 1) * np.pi / (2 * q)
    interior = np.abs(np.sin(q * grid)) > 1e-6
    tiny = 1e-7
    smooth = np.abs(np.sin(q * grid)) > 0.1
    limit_error = np.abs(clf_vrf(spec, grid[smooth], tiny) - clf_limit_sigma0(spec, grid[smooth])) / q**2

    checks = [
        ('periodicity', float(np.max(np.abs(clf_vrf(spec, grid + np.pi / q, sigma) - V))), scale),
        ('nonnegative', float(max(0.0, -np.min(V))), 0.0),
        ('zero set', float(np.max(clf_vrf(spec, zeros, sigma))), scale),
        ('positive off zero set', float(0.0 if np.all(V[interior] > 0) else 1.0), 0.0),
        ('maximum value', float(np.max(np.abs(clf_vrf(spec, maxima, sigma) - peak))), scale),
        ('maximum bound', float(max(0.0, np.max(V) - peak)), scale),
        ('global bound', float(max(0.0, np.max(V) - 1 / (np.e * sigma**2))), scale),
        ('bound saturation', float(abs(clf_vrf(spec, np.pi / (2 * q), 1.0 / q) - q**2 / np.e)), scale),
        ('sigma0 limit', float(np.max(limit_error, initial=0.0)), 1e-6),
    ]
    rows = [[str(spec.scheme), spec.L, sigma, name, error <= tol, error] for name, error, tol in checks]
    columns = ['scheme', 'L', 'sigma', 'property', 'passed', 'error']
    return pd.DataFrame(rows, columns=columns)
