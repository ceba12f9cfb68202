import numpy as np
import torch
from Models.params import TunableParams


def bit_strings(n):
    r"""Returns an iterator over all n-bit strings, x_1 first.
    """
    for s in range(2**n):
        yield format(s, '0{}b'.format(n))


def random_bit_strings(n, count, generator):
    r"""Returns an iterator over ``count`` seeded random n-bit strings.
    """
    for _ in range(count):
        bits = torch.randint(0, 2, (n,), generator=generator)
        yield ''.join(str(int(b)) for b in bits)


def random_params(scheme, L, count, generator):
    r"""Returns an iterator over seeded random parameter vectors in (-pi, pi].
    """
    for _ in range(count):
        uniform = torch.rand(2 * L, generator=generator, dtype=torch.float64).numpy()
        yield TunableParams(np.pi - 2 * np.pi * uniform, scheme)


def mu_grid(points):
    r"""``points`` equally spaced prior means strictly inside (0, pi).
    """
    return np.pi * (np.arange(points) + 1) / (points + 1)


def theta_grid(points):
    return np.linspace(0.0, np.pi, points)
