r"""Cosine-polynomial expansions of the biases.

Lambda(theta; x) = sum_l mu_l(x) cos(l theta) with degree 2L+1 (ancilla-free)
or L (ancilla-based). Coefficients come either from the combinatorial sums
over bit strings or from exact interpolation of the circuit oracle.
"""
from dataclasses import dataclass
from functools import lru_cache
import numpy as np
from scipy import fft
from Circuits import logical
from Expansions import words
from Models.params import Scheme, TunableParams
from Utils.errors import ArgumentError, CapacityError, DomainError, NumericError

COMBINATORIAL_MAX = {Scheme.AF: 5, Scheme.AB: 12}
# Largest L for which fourier_batch builds the dense class-weight tensor.
BATCH_MAX = {Scheme.AF: 4, Scheme.AB: 8}
NUMERIC_MAX = 64
INTERPOLATION_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class CosinePoly:
    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = np.array(self.coeffs, dtype=float).reshape(-1)
        if coeffs.size == 0:
            raise ArgumentError("cosine polynomial needs at least one coefficient")
        coeffs.setflags(write=False)
        object.__setattr__(self, 'coeffs', coeffs)

    @property
    def degree(self):
        return self.coeffs.size - 1

    @property
    def leading(self):
        return float(self.coeffs[-1])

    def __len__(self):
        return self.coeffs.size

    def derivative(self, theta, k=0):
        r"""k-th theta-derivative, sum_l mu_l l^k cos(l theta + k pi/2).
        """
        theta = np.asarray(theta, dtype=float)
        l = np.arange(self.coeffs.size)
        phase = np.multiply.outer(theta, l)
        basis = (np.cos, lambda a: -np.sin(a), lambda a: -np.cos(a), np.sin)[k % 4](phase)
        values = basis @ (self.coeffs * l.astype(float)**k)
        return float(values) if values.ndim == 0 else values

    def evaluate(self, theta):
        return self.derivative(theta, 0)

    __call__ = evaluate

    def derivatives(self, theta, order):
        return np.array([self.derivative(theta, k) for k in range(order + 1)])

    def _padded(self, other):
        size = max(self.coeffs.size, other.coeffs.size)
        return np.pad(self.coeffs, (0, size - self.coeffs.size)), np.pad(other.coeffs, (0, size - other.coeffs.size))

    def __add__(self, other):
        a, b = self._padded(other)
        return CosinePoly(a + b)

    def __sub__(self, other):
        a, b = self._padded(other)
        return CosinePoly(a - b)

    def __mul__(self, other):
        if not isinstance(other, CosinePoly):
            return CosinePoly(self.coeffs * float(other))
        # cos(a) cos(b) = (cos(a + b) + cos(a - b)) / 2
        product = np.zeros(self.degree + other.degree + 1)
        for l, a in enumerate(self.coeffs):
            for m, b in enumerate(other.coeffs):
                product[l + m] += 0.5 * a * b
                product[abs(l - m)] += 0.5 * a * b
        return CosinePoly(product)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return CosinePoly(self.coeffs / float(scalar))

    def allclose(self, other, atol=1e-12):
        a, b = self._padded(other)
        return bool(np.allclose(a, b, rtol=0.0, atol=atol))

    def __repr__(self):
        return 'CosinePoly({})'.format(np.array2string(self.coeffs, precision=6))


@dataclass(frozen=True)
class CsdPair:
    r"""Lambda = C cos(x_j) + S sin(x_j).
    """
    C: CosinePoly
    S: CosinePoly

    def evaluate(self, xj):
        return self.C * np.cos(xj) + self.S * np.sin(xj)


@dataclass(frozen=True)
class CsbdTriple:
    r"""Lambda = C cos(2 x_j) + S sin(2 x_j) + B.
    """
    C: CosinePoly
    S: CosinePoly
    B: CosinePoly

    def evaluate(self, xj):
        return self.C * np.cos(2 * xj) + self.S * np.sin(2 * xj) + self.B


def nu(s):
    r"""Re(i^s).
    """
    s = int(s) % 4
    if s == 0:
        return 1
    if s == 2:
        return -1
    return 0


_NU = np.array([nu(s) for s in range(4)], dtype=float)


def zeta(y, x):
    bits = words.as_bits(y)
    x = np.asarray(x, dtype=float).reshape(-1)
    if bits.size != x.size:
        raise ArgumentError("zeta needs |y| == |x|, got {} and {}".format(bits.size, x.size))
    return float(np.prod(np.where(bits == 1, np.sin(x), np.cos(x))))


def zeta_table(x):
    r"""zeta_y(x) for every bit string y of length |x|, in class-table order.
    """
    x = np.asarray(x, dtype=float).reshape(-1)
    n = x.size
    indices = np.arange(2**n, dtype=np.int64)
    table = np.ones(2**n)
    cos, sin = np.cos(x), np.sin(x)
    for i in range(1, n + 1):
        table *= np.where(words.position_bit(indices, n, i) == 1, sin[i - 1], cos[i - 1])
    return table


def _check(x, scheme):
    if not isinstance(x, TunableParams) or x.scheme is not scheme:
        raise ArgumentError("expected {} parameters, got {!r}".format(scheme, x))
    if x.L > COMBINATORIAL_MAX[scheme]:
        raise CapacityError("combinatorial {} expansion supports L <= {}, got {}".format(
            scheme, COMBINATORIAL_MAX[scheme], x.L))


def fourier_ab(x):
    _check(x, Scheme.AB)
    n = x.angles.size
    terms = _NU[words.weights(n) % 4] * zeta_table(x.angles)
    mu = np.bincount(words.xi_classes(n), weights=terms, minlength=x.L + 1)
    return CosinePoly(mu[:x.L + 1])


def fourier_q00(z):
    r"""Complex coefficients a_l(z) of Q00[z](theta) = sum_l a_l(z) cos(l theta).

    a_l(z) = sum over y in Xi_l of (-i)^wt(y) zeta_y(z), for any length |z|.
    """
    z = np.asarray(z, dtype=float).reshape(-1)
    if z.size == 0:
        raise ArgumentError("fourier_q00 needs at least one angle")
    n = z.size
    degree = (n + 1) // 2
    wt = words.weights(n) % 4
    terms = zeta_table(z)
    classes = words.xi_classes(n)
    # Re (-i)^w = nu(w), Im (-i)^w = -Im i^w
    real = np.bincount(classes, weights=_NU[wt] * terms, minlength=degree + 1)
    imag = np.bincount(classes, weights=np.array([0.0, -1.0, 0.0, 1.0])[wt] * terms, minlength=degree + 1)
    return (real + 1j * imag)[:degree + 1]


def evaluate_q00(coeffs, theta):
    l = np.arange(len(coeffs))
    values = np.cos(np.multiply.outer(np.asarray(theta, dtype=float), l)) @ np.asarray(coeffs, dtype=complex)
    return complex(values) if values.ndim == 0 else values


def fourier_af(x):
    _check(x, Scheme.AF)
    half = x.angles.size
    z = zeta_table(x.angles)
    wt = words.weights(half)
    rev = words.reversed_indices(half)
    a = np.arange(2**half, dtype=np.int64)[:, None]
    c = np.arange(2**half, dtype=np.int64)[None, :]
    # y = a 1 c^R; only a middle 1 survives cos(pi/2) = 0
    classes = words.xi_classes(2 * half + 1)[(a << (half + 1)) | (1 << half) | rev[c]]
    terms = _NU[(wt[None, :] - wt[:, None]) % 4] * z[:, None] * z[None, :]
    mu = np.bincount(classes.ravel(), weights=terms.ravel(), minlength=2 * x.L + 2)
    return CosinePoly(mu[:2 * x.L + 2])


def interpolate(function, degree):
    r"""Exact coefficients of a degree-``degree`` cosine polynomial from its
    values at the Chebyshev-Gauss nodes (j + 1/2) pi / (degree + 1).
    """
    N = degree + 1
    nodes = (np.arange(N) + 0.5) * np.pi / N
    mu = fft.dct(np.asarray(function(nodes), dtype=float), type=2) / N
    mu[0] /= 2
    poly = CosinePoly(mu)
    checks = (np.arange(N) + 0.25) * np.pi / N
    residual = float(np.max(np.abs(poly.evaluate(checks) - np.asarray(function(checks), dtype=float))))
    if residual > INTERPOLATION_TOL:
        raise NumericError("function is not a cosine polynomial of degree {} (residual {:.3e})".format(
            degree, residual), residual=residual)
    return poly


def fourier_numeric(scheme, x):
    if x.L > NUMERIC_MAX:
        raise CapacityError("numeric expansion supports L <= {}, got {}".format(NUMERIC_MAX, x.L))
    return interpolate(lambda theta: logical.bias_direct(scheme, theta, x), scheme.degree(x.L))


def fourier(x):
    r"""Bias coefficients, combinatorial where supported and numeric past it.
    """
    if x.L > COMBINATORIAL_MAX[x.scheme]:
        return fourier_numeric(x.scheme, x)
    if x.scheme is Scheme.AF:
        return fourier_af(x)
    return fourier_ab(x)


def _fixed_angle(x, j, values):
    r"""Coefficient rows of x with coordinate j set to each of ``values``.
    """
    if not 1 <= j <= x.angles.size:
        raise ArgumentError("coordinate {} out of range 1..{}".format(j, x.angles.size))
    rows = np.repeat(x.angles[None, :], len(values), axis=0)
    rows[:, j - 1] = values
    if x.L <= BATCH_MAX[x.scheme]:
        return [CosinePoly(mu) for mu in fourier_batch(x.scheme, rows)]
    return [fourier(TunableParams(row, x.scheme)) for row in rows]


def csd_ab(x, j):
    if x.scheme is not Scheme.AB:
        raise ArgumentError("cosine-sine decomposition is defined for AB parameters")
    return CsdPair(*_fixed_angle(x, j, [0.0, np.pi / 2]))


def csbd_af(x, j):
    if x.scheme is not Scheme.AF:
        raise ArgumentError("cosine-sine-bias decomposition is defined for AF parameters")
    f0, f90, f45 = _fixed_angle(x, j, [0.0, np.pi / 2, np.pi / 4])
    B = (f0 + f90) / 2
    return CsbdTriple((f0 - f90) / 2, f45 - B, B)


def arg2(ypart, xpart):
    r"""Two-argument arctangent with values in (-pi, pi].
    """
    if ypart == 0 and xpart == 0:
        raise DomainError("arg2 is undefined at (0, 0)")
    if ypart == 0 and xpart < 0:
        return np.pi
    return float(np.arctan2(ypart, xpart))


def argmax_csd(C, S):
    r"""x_j maximizing C cos(x_j) + S sin(x_j).
    """
    return arg2(S, C)


def argmax_abs_csbd(C, S, B):
    r"""x_j maximizing |C cos(2 x_j) + S sin(2 x_j) + B|.
    """
    sign = -1.0 if B < 0 else 1.0
    return 0.5 * arg2(sign * S, sign * C)


@lru_cache(maxsize=16)
def _class_weights(scheme, L):
    n = 2 * L
    wt = words.weights(n)
    if scheme is Scheme.AB:
        W = np.zeros((2**n, L + 1))
        W[np.arange(2**n), words.xi_classes(n)] = _NU[wt % 4]
        return W
    rev = words.reversed_indices(n)
    a = np.arange(2**n, dtype=np.int64)[:, None]
    c = np.arange(2**n, dtype=np.int64)[None, :]
    classes = words.xi_classes(2 * n + 1)[(a << (n + 1)) | (1 << n) | rev[c]]
    W = np.zeros((2**n, 2**n, 2 * L + 2))
    np.put_along_axis(W, classes[..., None], _NU[(wt[None, :] - wt[:, None]) % 4][..., None], axis=2)
    return W


def fourier_batch(scheme, angles):
    r"""Combinatorial coefficients for a batch of angle vectors, one per row.
    """
    angles = np.atleast_2d(np.asarray(angles, dtype=float))
    n = angles.shape[1]
    if n < 2 or n % 2:
        raise ArgumentError("expected an even number (>= 2) of angles, got {}".format(n))
    L = n // 2
    if L > BATCH_MAX[scheme]:
        raise CapacityError("batched {} expansion supports L <= {}, got {}".format(scheme, BATCH_MAX[scheme], L))
    indices = np.arange(2**n, dtype=np.int64)
    z = np.ones((angles.shape[0], 2**n))
    for i in range(1, n + 1):
        bit = words.position_bit(indices, n, i) == 1
        z *= np.where(bit[None, :], np.sin(angles[:, i - 1:i]), np.cos(angles[:, i - 1:i]))
    W = _class_weights(scheme, L)
    if scheme is Scheme.AB:
        return z @ W
    return np.einsum('ba,bc,acl->bl', z, z, W)
