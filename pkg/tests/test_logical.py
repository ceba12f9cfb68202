import numpy as np
import pytest
import torch
from hypothesis import given, strategies as st
from Circuits import logical
from Models.params import Scheme, TunableParams
from Utils.errors import ArgumentError, InvariantViolation

angle = st.floats(min_value=-np.pi, max_value=np.pi, allow_nan=False)


def expm(generator, alpha):
    return torch.linalg.matrix_exp(-1j * alpha * generator)


def test_u_rot_zero_is_identity():
    assert torch.allclose(logical.u_rot(0.4, 0.0), logical.I2)


def test_u_rot_half_pi_is_minus_i_p():
    assert torch.allclose(logical.u_rot(0.9, np.pi / 2), -1j * logical.p_matrix(0.9), atol=1e-15)


def test_u_rot_matches_matrix_exponential():
    theta, alpha = np.pi / 3, 0.7
    assert torch.allclose(logical.u_rot(theta, alpha), expm(logical.p_matrix(theta), alpha), atol=1e-12)


def test_v_rot():
    assert torch.allclose(logical.v_rot(0.0), logical.I2)
    assert torch.allclose(logical.v_rot(np.pi / 2), -1j * logical.Z2, atol=1e-15)
    expected = torch.diag(torch.tensor([np.exp(-0.3j), np.exp(0.3j)], dtype=logical.DTYPE))
    assert torch.allclose(logical.v_rot(0.3), expected, atol=1e-15)


def test_q_product_rejects_empty_angles():
    with pytest.raises(ArgumentError):
        logical.q_product(0.3, [])


def test_q_product_of_zero_angles_is_identity():
    assert torch.allclose(logical.q_product(1.3, np.zeros(5)), logical.I2)


@pytest.mark.parametrize('L', [1, 2, 3])
def test_q_product_at_half_pi(L):
    theta = 0.45
    c, s = np.cos(L * theta), np.sin(L * theta)
    expected = (-1)**L * torch.tensor([[c, s], [-s, c]], dtype=logical.DTYPE)
    assert torch.allclose(logical.q_product(theta, np.full(2 * L, np.pi / 2)), expected, atol=1e-12)


def test_q_product_regrouping():
    theta, z = 1.1, (0.2, -0.4, 0.9)
    manual = logical.u_rot(theta, z[2]) @ (logical.v_rot(z[1]) @ logical.u_rot(theta, z[0]))
    assert torch.allclose(logical.q_product(theta, z), manual, atol=1e-14)


def test_q_product_unitary_up_to_41_factors():
    rng = torch.Generator().manual_seed(3)
    for n in (1, 2, 17, 41):
        z = torch.rand(n, generator=rng, dtype=torch.float64).numpy() * 2 * np.pi
        assert logical.is_unitary(logical.q_product(np.linspace(0, np.pi, 9), z))


def test_q00_examples():
    theta = 0.7
    assert logical.q00(theta, (0.0, 0.0)) == pytest.approx(1.0)
    assert logical.q00(theta, (np.pi / 2, np.pi / 2)).real == pytest.approx(-np.cos(theta), abs=1e-15)


def test_bias_direct_chebyshev():
    thetas = np.linspace(0, np.pi, 33)
    x = TunableParams.chebyshev(Scheme.AF, 1)
    assert np.allclose(logical.bias_direct(Scheme.AF, thetas, x), np.cos(3 * thetas), atol=1e-12)
    x = TunableParams.chebyshev(Scheme.AB, 1)
    assert np.allclose(logical.bias_direct(Scheme.AB, thetas, x), -np.cos(thetas), atol=1e-12)


def test_bias_direct_ab_l1_closed_form():
    x = TunableParams([0.3, 1.2], Scheme.AB)
    expected = np.cos(0.3) * np.cos(1.2) - np.sin(0.3) * np.sin(1.2) * np.cos(0.8)
    assert logical.bias_direct(Scheme.AB, 0.8, x) == pytest.approx(expected, abs=1e-14)


def test_bias_direct_returns_float_for_scalar_theta():
    assert isinstance(logical.bias_direct(Scheme.AB, 0.8, TunableParams([0.3, 1.2], Scheme.AB)), float)


def test_bias_direct_rejects_scheme_mismatch():
    with pytest.raises(ArgumentError):
        logical.bias_direct(Scheme.AF, 0.3, TunableParams([0.3, 1.2], Scheme.AB))


def test_likelihood():
    x = TunableParams.chebyshev(Scheme.AF, 1)
    assert logical.likelihood(Scheme.AF, np.pi / 6, 0, x) == pytest.approx(0.5, abs=1e-15)
    assert logical.likelihood(Scheme.AF, np.pi / 6, 1, x) == pytest.approx(0.5, abs=1e-15)
    assert logical.likelihood(Scheme.AF, np.pi / 3, 0, x) == pytest.approx(0.0, abs=1e-15)
    y = TunableParams([0.3, 1.2], Scheme.AB)
    assert logical.likelihood(Scheme.AB, 0.8, 1, y) == pytest.approx(0.5 * (1 - logical.bias_direct(Scheme.AB, 0.8, y)))
    with pytest.raises(ArgumentError):
        logical.likelihood(Scheme.AB, 0.8, 2, y)


def test_bias_noisy():
    x = TunableParams.chebyshev(Scheme.AF, 1)
    assert logical.bias_noisy(Scheme.AF, np.pi / 3, x, 0.9) == pytest.approx(-0.9)
    assert logical.bias_noisy(Scheme.AF, 0.4, x, 0.0) == 0.0
    eps = 1e-6
    assert abs(logical.bias_noisy(Scheme.AF, 0.4, x, 1 - eps) - logical.bias_direct(Scheme.AF, 0.4, x)) <= eps
    for f in (-0.1, 1.0):
        with pytest.raises(ArgumentError):
            logical.bias_noisy(Scheme.AF, 0.4, x, f)


@given(st.sampled_from(list(Scheme)), angle, st.lists(angle, min_size=2, max_size=6).filter(lambda a: len(a) % 2 == 0))
def test_bias_is_even_periodic_and_bounded(scheme, theta, angles):
    x = TunableParams(angles, scheme)
    value = logical.bias_direct(scheme, theta, x)
    assert abs(value) <= 1.0
    assert logical.bias_direct(scheme, -theta, x) == pytest.approx(value, abs=1e-12)
    assert logical.bias_direct(scheme, theta + 2 * np.pi, x) == pytest.approx(value, abs=1e-12)
    shifted = x.with_angle(1, x.angles[0] + 2 * np.pi)
    assert logical.bias_direct(scheme, theta, shifted) == pytest.approx(value, abs=1e-12)


def test_bias_bounded_on_random_batch():
    rng = torch.Generator().manual_seed(5)
    thetas = np.linspace(-np.pi, np.pi, 100)
    for scheme in Scheme:
        for _ in range(50):
            x = TunableParams(torch.rand(4, generator=rng, dtype=torch.float64).numpy() * 2 * np.pi, scheme)
            assert np.all(np.abs(logical.bias_direct(scheme, thetas, x)) <= 1.0)


def test_logical_paulis():
    assert torch.allclose(logical.X2 @ logical.Y2, 1j * logical.Z2)
    assert torch.allclose(logical.p_matrix(np.pi / 2), logical.X2, atol=1e-15)
    assert torch.allclose(logical.p_matrix(0.0), logical.Z2)
    assert logical.is_unitary(logical.Y2)


def test_expectation_round_trip():
    thetas = np.linspace(0.0, np.pi, 9)
    assert np.allclose(logical.expectation(thetas), logical.p_matrix(thetas)[:, 0, 0].real.numpy())
    assert np.allclose(logical.theta_from_expectation(logical.expectation(thetas)), thetas)


def test_af_bias_with_imaginary_part_is_rejected(monkeypatch):
    x = TunableParams([0.4, -0.9], Scheme.AF)
    # dropping the reversed half leaves a product whose (0, 0) entry is not purely imaginary
    monkeypatch.setattr(logical, 'af_angles', lambda params: np.concatenate([params.angles, [np.pi / 2]]))
    with pytest.raises(InvariantViolation):
        logical.bias_direct(Scheme.AF, np.linspace(0.1, 3.0, 7), x)
