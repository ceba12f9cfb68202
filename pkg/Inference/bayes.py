r"""Expected posterior variance and the variance reduction factor.

For a two-outcome likelihood 1/2 (1 + (-1)^d Lambda(theta)) and a Gaussian
prior N(mu, sigma^2):

    b   = E[Lambda]                 (expected bias)
    chi = d b / d mu                (chi function)
    V   = chi^2 / (1 - b^2)         (variance reduction factor)
    epv = sigma^2 (1 - sigma^2 V)   (expected posterior variance)
"""
from dataclasses import dataclass
from functools import lru_cache
import numpy as np
from scipy.special import factorial, factorial2
from Utils.errors import ArgumentError, DomainError, InvariantViolation, NumericError, UnresolvedLimitError

QUADRATURE_TOL = 1e-12
QUADRATURE_ORDER = 32
MAX_PANELS = 2**12
ZERO_MASS = 1e-14
UNIT_BIAS_TOL = 1e-12
OVERSHOOT_TOL = 1e-10
LIMIT_ZERO_TOL = 1e-9
LIMIT_MAX_ORDER = 6


@lru_cache(maxsize=8)
def _legendre(order):
    return np.polynomial.legendre.leggauss(order)


def gauss_legendre(integrand, a, b, order=QUADRATURE_ORDER, tol=QUADRATURE_TOL, panels=4):
    r"""Composite Gauss-Legendre quadrature of ``integrand`` over [a, b].

    The number of equal panels doubles until two successive estimates agree
    to ``tol`` in absolute value.
    """
    nodes, weights = _legendre(order)

    def estimate(count):
        edges = np.linspace(a, b, count + 1)
        half = 0.5 * np.diff(edges)
        mid = 0.5 * (edges[1:] + edges[:-1])
        points = mid[:, None] + half[:, None] * nodes[None, :]
        values = np.asarray(integrand(points.ravel()), dtype=float).reshape(points.shape)
        return float(np.sum(half * (values @ weights)))

    previous = estimate(panels)
    residual = np.inf
    while panels < MAX_PANELS:
        panels *= 2
        current = estimate(panels)
        residual = abs(current - previous)
        if residual < tol:
            return current
        previous = current
    raise NumericError("quadrature over [{:.6g}, {:.6g}] did not converge (residual {:.3e})".format(
        a, b, residual), residual=residual)


def _density(prior, support):
    pdf = prior.pdf if hasattr(prior, 'pdf') else prior
    if support is None:
        if not hasattr(prior, 'support'):
            raise ArgumentError("a bare density needs an explicit support")
        support = prior.support()
    return pdf, support


def moment_Ik(prior, lik, k, d, support=None):
    r"""I_k(d) = integral of theta^k L(theta; d) p(theta).
    """
    if k not in (0, 1):
        raise ArgumentError("moment order must be 0 or 1, got {}".format(k))
    pdf, (a, b) = _density(prior, support)
    return gauss_legendre(lambda theta: theta**k * np.asarray(lik(theta, d)) * pdf(theta), a, b)


def epv_general(prior, lik, support=None):
    r"""Expected posterior variance E[theta^2] - sum_d I_1(d)^2 / I_0(d),
    skipping outcomes of zero probability.
    """
    pdf, (a, b) = _density(prior, support)
    second = gauss_legendre(lambda theta: theta**2 * pdf(theta), a, b)
    total = 0.0
    for d in lik.outcomes:
        I0 = moment_Ik(pdf, lik, 0, d, (a, b))
        if I0 < ZERO_MASS:
            continue
        I1 = moment_Ik(pdf, lik, 1, d, (a, b))
        total += I1**2 / I0
    return second - total


def epv_two_outcome(I0, I1, mu, sigma):
    if not -ZERO_MASS <= I0 <= 1 + ZERO_MASS:
        raise ArgumentError("I0 must lie in [0, 1], got {}".format(I0))
    if I0 <= ZERO_MASS or I0 >= 1 - ZERO_MASS:
        return sigma**2
    return sigma**2 - (I1 - mu * I0)**2 / (I0 * (1 - I0))


def b_chi_fourier(c, d, prior):
    r"""b and chi of sum_l c_l cos(l theta) + d_l sin(l theta) under a
    Gaussian prior.
    """
    c = np.asarray(c, dtype=float)
    d = np.zeros_like(c) if d is None else np.asarray(d, dtype=float)
    l = np.arange(c.size)
    damping = np.exp(-0.5 * (l * prior.sigma)**2)
    cos, sin = np.cos(l * prior.mu), np.sin(l * prior.mu)
    b = np.sum(damping * (c * cos + d * sin))
    chi = np.sum(damping * l * (d * cos - c * sin))
    return float(b), float(chi)


def b_chi_gaussian(poly, prior):
    return b_chi_fourier(poly.coeffs, None, prior)


def b_chi_quadrature(lik, prior):
    r"""b and chi of a two-outcome likelihood by quadrature.
    """
    I0 = moment_Ik(prior, lik, 0, 0)
    I1 = moment_Ik(prior, lik, 1, 0)
    return 2 * I0 - 1, 2 * (I1 - prior.mu * I0) / prior.sigma**2


def vrf(b, chi):
    if abs(b) > 1 + OVERSHOOT_TOL:
        raise InvariantViolation("expected bias {} lies outside [-1, 1]".format(b))
    if abs(b) >= 1 - UNIT_BIAS_TOL:
        return 0.0
    return chi**2 / (1 - b**2)


def vrf_noisy(b, chi, f):
    if not 0.0 <= f <= 1.0:
        raise ArgumentError("fidelity must lie in [0, 1], got {}".format(f))
    return vrf(f * b, f * chi)


def epv(V, sigma):
    return sigma**2 * (1 - sigma**2 * V)


@dataclass(frozen=True)
class VrfReport:
    b: float
    chi: float
    V: float
    epv: float


def vrf_report(poly, prior, fidelity=1.0):
    b, chi = b_chi_gaussian(poly, prior)
    V = vrf_noisy(b, chi, fidelity)
    return VrfReport(fidelity * b, fidelity * chi, V, epv(V, prior.sigma))


def b_chi_taylor(derivs, sigma):
    r"""Truncated small-sigma series of b and chi from Lambda^(k)(mu).

    Returns (b, chi, tail), tail being the largest highest-order term kept.
    """
    derivs = np.asarray(derivs, dtype=float)
    K = derivs.size - 1
    if K < 2:
        raise ArgumentError("need derivatives up to at least order 2, got {}".format(K))
    b_terms = [derivs[2 * j] * sigma**(2 * j) / factorial2(2 * j, exact=True) for j in range(K // 2 + 1)]
    chi_terms = [derivs[2 * j + 1] * sigma**(2 * j) / factorial2(2 * j, exact=True) for j in range((K - 1) // 2 + 1)]
    tail = max(abs(b_terms[-1]), abs(chi_terms[-1]))
    return float(sum(b_terms)), float(sum(chi_terms)), float(tail)


def fisher_info(poly, mu):
    value = poly.evaluate(mu)
    if abs(value) >= 1 - UNIT_BIAS_TOL:
        raise DomainError("Fisher information is undefined where |Lambda| = 1; use vrf_limit_sigma0")
    return poly.derivative(mu, 1)**2 / (1 - value**2)


def _weight(n, k):
    return factorial(n, exact=True) / (factorial2(k, exact=True) * factorial2(n - k, exact=True))


def derivative_tables(derivs, max_order=LIMIT_MAX_ORDER):
    r"""sigma-derivatives at sigma = 0 of chi^2 and of 1 - b^2, even orders only.

    ``derivs`` holds Lambda^(0..max_order+1)(mu).
    """
    derivs = np.asarray(derivs, dtype=float)
    if derivs.size < max_order + 2:
        raise ArgumentError("need derivatives up to order {}".format(max_order + 1))
    numerator, denominator = {}, {}
    for n in range(0, max_order + 1, 2):
        ks = range(0, n + 1, 2)
        numerator[n] = sum(_weight(n, k) * derivs[n - k + 1] * derivs[k + 1] for k in ks)
        denominator[n] = (1.0 if n == 0 else 0.0) - sum(_weight(n, k) * derivs[n - k] * derivs[k] for k in ks)
    return numerator, denominator


def table_scales(poly, max_order=LIMIT_MAX_ORDER):
    r"""Magnitude of each table entry, from the bounds sum_l |mu_l| l^j on |Lambda^(j)|.

    A table entry counts as zero when it is below LIMIT_ZERO_TOL times its scale.
    """
    l = np.arange(poly.coeffs.size, dtype=float)
    bounds = np.array([np.sum(np.abs(poly.coeffs) * l**j) for j in range(max_order + 2)])
    numerator, denominator = {}, {}
    for n in range(0, max_order + 1, 2):
        ks = range(0, n + 1, 2)
        numerator[n] = sum(_weight(n, k) * bounds[n - k + 1] * bounds[k + 1] for k in ks)
        denominator[n] = (1.0 if n == 0 else 0.0) + sum(_weight(n, k) * bounds[n - k] * bounds[k] for k in ks)
    return numerator, denominator


def vrf_limit_sigma0(poly, mu):
    r"""Limit of V as sigma -> 0 at prior mean ``mu``.
    """
    derivs = poly.derivatives(mu, LIMIT_MAX_ORDER + 1)
    if abs(derivs[0]) < 1 - UNIT_BIAS_TOL:
        return fisher_info(poly, mu)
    if np.all(poly.coeffs[1:] == 0):
        return 0.0
    numerator, denominator = derivative_tables(derivs)
    num_scale, den_scale = table_scales(poly)
    orders = sorted(numerator)
    first_den = next((n for n in orders if abs(denominator[n]) > LIMIT_ZERO_TOL * den_scale[n]), None)
    first_num = next((n for n in orders if abs(numerator[n]) > LIMIT_ZERO_TOL * num_scale[n]), None)
    if first_den is None:
        raise UnresolvedLimitError("both tables vanish through order {}".format(LIMIT_MAX_ORDER),
                                   residual=max(abs(v) for v in denominator.values()))
    if first_num is None or first_num > first_den:
        return 0.0
    if first_num < first_den:
        raise UnresolvedLimitError("numerator vanishes at lower order than denominator",
                                   residual=abs(denominator[first_den]))
    return float(numerator[first_den] / denominator[first_den])
