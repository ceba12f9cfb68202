from Models.params import Scheme
from Models import priors
from Optimizers import optimizers


def schemes(name):
    scheme_names = {
        'af' : [Scheme.AF],
        'ab' : [Scheme.AB],
        'both' : [Scheme.AF, Scheme.AB],
    }
    return scheme_names[name]


def optimizer(method):
    optimize_methods = {
        'coordinate' : optimizers.CoordinateAscent,
        'grid' : optimizers.GridSearch,
        'chebyshev' : optimizers.Chebyshev,
    }
    return optimize_methods[method]


def prior(name):
    prior_types = {
        'gaussian' : priors.GaussianPrior,
        'quadrature' : priors.QuadraturePrior,
    }
    return prior_types[name]
