r"""Exact two-dimensional evaluation of the ancilla-free (AF) and
ancilla-based (AB) circuits.

Everything acts on span{|0>, |1>} of the logical qubit; operators are
2x2 complex128 torch tensors, batched over a leading theta axis when theta
is an array. At theta in {0, pi} the logical construction degenerates; the
formulas stay finite and are evaluated anyway.
"""
import math
import numpy as np
import torch
from Models.params import Scheme, TunableParams
from Utils.errors import ArgumentError, InvariantViolation

DTYPE = torch.complex128
IMAG_TOL = 1e-10
BIAS_TOL = 1e-10

I2 = torch.eye(2, dtype=DTYPE)
X2 = torch.tensor([[0, 1], [1, 0]], dtype=DTYPE)
Y2 = torch.tensor([[0, -1j], [1j, 0]], dtype=DTYPE)
Z2 = torch.tensor([[1, 0], [0, -1]], dtype=DTYPE)

Unitary2 = torch.Tensor


def _theta(theta):
    t = torch.as_tensor(np.asarray(theta, dtype=np.float64))
    return t, t.dim() == 0


def _out(values, scalar):
    values = values.detach().cpu()
    if scalar:
        return values.item()
    return values.numpy()


def expectation(theta):
    r"""<0|P|0> = cos(theta).
    """
    return np.cos(theta)


def theta_from_expectation(expectation_value):
    return np.arccos(expectation_value)


def p_matrix(theta):
    r"""P(theta) = cos(theta) Z + sin(theta) X.
    """
    t, _ = _theta(theta)
    c = torch.cos(t).to(DTYPE)[..., None, None]
    s = torch.sin(t).to(DTYPE)[..., None, None]
    return c * Z2 + s * X2


def _rotation(generator, alpha):
    alpha = float(alpha)
    return math.cos(alpha) * I2 - 1j * math.sin(alpha) * generator


def u_rot(theta, alpha):
    r"""U(theta; alpha) = exp(-i alpha P(theta)).
    """
    return _rotation(p_matrix(theta), float(alpha))


def v_rot(beta):
    r"""V(beta) = exp(-i beta Z) = diag(e^{-i beta}, e^{i beta}).
    """
    return _rotation(Z2, float(beta))


def _product(P, z):
    z = np.asarray(z, dtype=np.float64).reshape(-1)
    if z.size == 0:
        raise ArgumentError("q_product needs at least one angle")
    result = _rotation(P, z[0])
    for index, a in enumerate(z[1:], start=2):
        generator = Z2 if index % 2 == 0 else P
        result = torch.matmul(_rotation(generator, a), result)
    return result


def q_product(theta, z):
    r"""Alternating product ... V(z_2) U(theta; z_1), first factor U.
    """
    return _product(p_matrix(theta), z)


def _q00(theta, z):
    return _product(p_matrix(theta), z)[..., 0, 0]


def q00(theta, z):
    t, scalar = _theta(theta)
    return _out(_q00(t, z), scalar)


def is_unitary(matrix, atol=1e-12):
    eye = I2.expand_as(matrix)
    gram = torch.matmul(matrix.conj().transpose(-1, -2), matrix)
    return bool(torch.allclose(gram, eye, rtol=0.0, atol=atol))


def _clamp(values):
    overshoot = float((values.abs() - 1.0).max()) if values.numel() else 0.0
    if overshoot > BIAS_TOL:
        raise InvariantViolation("bias magnitude exceeds 1 by {:.3e}".format(overshoot))
    return values.clamp(-1.0, 1.0)


def af_angles(x):
    r"""Angle vector (x, pi/2, -x^R) of the ancilla-free circuit.
    """
    return np.concatenate([x.angles, [np.pi / 2], -x.angles[::-1]])


def _bias(scheme, t, x):
    if not isinstance(x, TunableParams) or x.scheme is not scheme:
        raise ArgumentError("parameters {!r} do not belong to scheme {}".format(x, scheme))
    if scheme is Scheme.AF:
        raw = 1j * _q00(t, af_angles(x))
        imag = float(raw.imag.abs().max())
        if imag > IMAG_TOL:
            raise InvariantViolation("ancilla-free bias has imaginary part {:.3e}".format(imag))
        return _clamp(raw.real)
    return _clamp(_q00(t, x.angles).real)


def bias_direct(scheme, theta, x):
    r"""Bias Lambda(theta; x) from the exact 2x2 product.
    """
    t, scalar = _theta(theta)
    return _out(_bias(scheme, t, x), scalar)


def likelihood(scheme, theta, d, x):
    if d not in (0, 1):
        raise ArgumentError("outcome must be 0 or 1, got {!r}".format(d))
    p0 = 0.5 * (1.0 + np.asarray(bias_direct(scheme, theta, x)))
    p = p0 if d == 0 else 1.0 - p0
    return float(p) if np.ndim(p) == 0 else p


def bias_noisy(scheme, theta, x, f):
    if not 0.0 <= f < 1.0:
        raise ArgumentError("fidelity must lie in [0, 1), got {}".format(f))
    values = f * np.asarray(bias_direct(scheme, theta, x))
    return float(values) if np.ndim(values) == 0 else values
