import enum
from dataclasses import dataclass, field
import numpy as np
from Utils.errors import ArgumentError


class Scheme(enum.Enum):
    AF = 'af'
    AB = 'ab'

    def degree(self, L):
        r"""Degree of the cosine polynomial the bias is for this scheme.
        """
        return 2 * L + 1 if self is Scheme.AF else L

    def sign_power(self, L):
        return 0 if self is Scheme.AF else L

    def __str__(self):
        return self.name


def wrap(angles):
    r"""Maps angles into (-pi, pi].
    """
    wrapped = np.pi - np.mod(np.pi - np.asarray(angles, dtype=float), 2 * np.pi)
    return wrapped


@dataclass(frozen=True, eq=False)
class TunableParams:
    angles: np.ndarray
    scheme: Scheme

    def __post_init__(self):
        angles = np.array(self.angles, dtype=float).reshape(-1)
        if angles.size < 2 or angles.size % 2 != 0:
            raise ArgumentError("expected an even number (>= 2) of angles, got {}".format(angles.size))
        if not isinstance(self.scheme, Scheme):
            raise ArgumentError("unknown scheme {!r}".format(self.scheme))
        angles.setflags(write=False)
        object.__setattr__(self, 'angles', angles)

    @property
    def L(self):
        return self.angles.size // 2

    @property
    def degree(self):
        return self.scheme.degree(self.L)

    @classmethod
    def chebyshev(cls, scheme, L):
        return cls(np.full(2 * L, np.pi / 2), scheme)

    @classmethod
    def zeros(cls, scheme, L):
        return cls(np.zeros(2 * L), scheme)

    def with_angle(self, j, value):
        r"""Copy with the 1-based coordinate ``j`` replaced.
        """
        if not 1 <= j <= self.angles.size:
            raise ArgumentError("coordinate {} out of range 1..{}".format(j, self.angles.size))
        angles = self.angles.copy()
        angles[j - 1] = value
        return TunableParams(angles, self.scheme)

    def wrapped(self):
        return TunableParams(wrap(self.angles), self.scheme)

    def distance(self, other):
        r"""l-infinity distance modulo 2 pi.
        """
        diff = wrap(self.angles - other.angles)
        return float(np.max(np.abs(diff)))

    def __eq__(self, other):
        if not isinstance(other, TunableParams):
            return NotImplemented
        return self.scheme is other.scheme and np.array_equal(self.angles, other.angles)

    def __repr__(self):
        return 'TunableParams({}, {})'.format(self.scheme.name, np.array2string(self.angles, precision=6))


@dataclass(frozen=True)
class ClfSpec:
    scheme: Scheme
    L: int
    q: int = field(init=False)
    r: int = field(init=False)

    def __post_init__(self):
        if self.L < 1:
            raise ArgumentError("L must be positive, got {}".format(self.L))
        object.__setattr__(self, 'q', self.scheme.degree(self.L))
        object.__setattr__(self, 'r', self.scheme.sign_power(self.L))

    @property
    def sign(self):
        return -1.0 if self.r % 2 else 1.0
