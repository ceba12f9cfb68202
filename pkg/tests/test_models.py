import numpy as np
import pytest
from Circuits import logical
from Expansions.series import CosinePoly
from Models import likelihoods
from Models.params import ClfSpec, Scheme, TunableParams, wrap
from Models.priors import GaussianPrior, QuadraturePrior
from Utils import load
from Utils.errors import ArgumentError, InvariantViolation


def test_scheme_degrees():
    assert [Scheme.AF.degree(L) for L in (1, 2, 3)] == [3, 5, 7]
    assert [Scheme.AB.degree(L) for L in (1, 2, 3)] == [1, 2, 3]
    assert str(Scheme.AF) == 'AF'
    assert load.schemes('both') == [Scheme.AF, Scheme.AB]


def test_wrap():
    assert wrap(np.pi) == pytest.approx(np.pi)
    assert wrap(-np.pi) == pytest.approx(np.pi)
    assert np.allclose(wrap([0.5, 0.5 + 2 * np.pi, 0.5 - 4 * np.pi]), 0.5)


def test_tunable_params():
    x = TunableParams([0.1, 0.2, 0.3, 0.4], Scheme.AB)
    assert (x.L, x.degree) == (2, 2)
    y = x.with_angle(3, 1.0)
    assert y.angles[2] == 1.0 and x.angles[2] == 0.3
    assert x.distance(y) == pytest.approx(0.7)
    assert x.distance(TunableParams(x.angles + 2 * np.pi, Scheme.AB)) == pytest.approx(0.0, abs=1e-12)
    assert x != TunableParams(x.angles, Scheme.AF)
    with pytest.raises(ValueError):
        x.angles[0] = 1.0
    with pytest.raises(ArgumentError):
        x.with_angle(5, 0.0)
    with pytest.raises(ArgumentError):
        TunableParams([0.1, 0.2, 0.3], Scheme.AB)
    with pytest.raises(ArgumentError):
        TunableParams([0.1, 0.2], 'af')


def test_gaussian_prior():
    prior = GaussianPrior(0.4, 0.2)
    assert (prior.mean, prior.variance) == (0.4, pytest.approx(0.04))
    assert prior.pdf(0.4) == pytest.approx(1 / (0.2 * np.sqrt(2 * np.pi)))
    assert prior.support() == pytest.approx((-1.6, 2.4))
    with pytest.raises(ArgumentError):
        GaussianPrior(0.4, 0.0)


def test_quadrature_prior():
    prior = QuadraturePrior(lambda t: np.full_like(t, 1 / np.pi), (0.0, np.pi))
    assert prior.pdf(np.array([0.5, 1.0])) == pytest.approx([1 / np.pi, 1 / np.pi])
    with pytest.raises(ArgumentError):
        QuadraturePrior(lambda t: t, (1.0, 1.0))
    assert load.prior('quadrature') is QuadraturePrior


def test_engineered_likelihood():
    x = TunableParams([0.3, -1.1], Scheme.AF)
    lik = likelihoods.engineered(x)
    thetas = np.linspace(0, np.pi, 9)
    assert np.allclose(lik(thetas, 0), logical.likelihood(Scheme.AF, thetas, 0, x))
    assert lik.check_normalized() <= 1e-12
    noisy = likelihoods.engineered(x, 0.6)
    assert np.allclose(noisy.bias(thetas), 0.6 * lik.bias(thetas))
    with pytest.raises(ArgumentError):
        likelihoods.engineered(x, 1.2)
    with pytest.raises(ArgumentError):
        lik(0.3, 2)


def test_chebyshev_and_cosine_likelihoods():
    spec = ClfSpec(Scheme.AB, 2)
    thetas = np.linspace(0, np.pi, 7)
    assert np.allclose(likelihoods.chebyshev(spec)(thetas, 0), 0.5 * (1 + np.cos(2 * thetas)))
    poly = CosinePoly([0.0, 0.5, 0.0, 0.5])
    assert np.allclose(likelihoods.cosine(poly, 0.5)(thetas, 1), 0.5 * (1 - 0.5 * poly(thetas)))


def test_unnormalized_likelihood_is_rejected():
    lik = likelihoods.DiscreteLikelihood(lambda theta, d: np.full_like(np.asarray(theta, dtype=float), 0.6))
    with pytest.raises(InvariantViolation):
        lik.check_normalized()
    assert likelihoods.constant(0.25)(0.3, 0) == pytest.approx(0.25)
