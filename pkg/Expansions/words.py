r"""Words over the two involutions p and q.

A bit string x = x_1 x_2 ... x_n (written x_1 first) maps to the word
r^{x_n} ... p^{x_2} q^{x_1}: odd positions carry q, even positions carry p,
and the word is read from position n down to 1. Every word reduces to a
unique canonical form p^u (qp)^k q^v.
"""
from dataclasses import dataclass
from functools import lru_cache
import numpy as np
import torch
from scipy.special import comb
from Utils.errors import ArgumentError, CapacityError

MAX_ENUMERATION = 24


def as_bits(x):
    if isinstance(x, str):
        if x and set(x) - {'0', '1'}:
            raise ArgumentError("not a bit string: {!r}".format(x))
        return np.array([int(c) for c in x], dtype=np.int8)
    bits = np.asarray(x, dtype=np.int8).reshape(-1)
    if np.any((bits != 0) & (bits != 1)):
        raise ArgumentError("not a bit string: {!r}".format(x))
    return bits


def as_string(bits):
    return ''.join(str(int(b)) for b in bits)


def letters(x):
    r"""Letters of the word of ``x``, leftmost first.
    """
    bits = as_bits(x)
    return [('q' if i % 2 else 'p') for i in range(bits.size, 0, -1) if bits[i - 1]]


@dataclass(frozen=True)
class ReducedWord:
    u: int
    k: int
    v: int

    @property
    def xi(self):
        return self.k + self.v

    @property
    def length(self):
        return self.u + 2 * self.k + self.v

    def __iter__(self):
        return iter((self.u, self.k, self.v))


def _canonical(word):
    if not word:
        return ReducedWord(0, 0, 0)
    u = 1 if word[0] == 'p' else 0
    rest = len(word) - u
    return ReducedWord(u, rest // 2, rest % 2)


def reduce_word(x):
    r"""Canonical (u, k, v) of the word of ``x`` by stack cancellation.
    """
    stack = []
    for letter in letters(x):
        if stack and stack[-1] == letter:
            stack.pop()
        else:
            stack.append(letter)
    return _canonical(stack)


def reduce_word_randomized(x, generator=None):
    r"""Reduction deleting a randomly chosen pp or qq pair until none is left.
    """
    word = letters(x)
    while True:
        pairs = [i for i in range(len(word) - 1) if word[i] == word[i + 1]]
        if not pairs:
            return _canonical(word)
        i = pairs[int(torch.randint(len(pairs), (1,), generator=generator).item())]
        del word[i:i + 2]


def xi_class(x):
    return reduce_word(x).xi


def theta_cardinality(n, u, k, v):
    if n < 1:
        raise ArgumentError("string length must be positive, got {}".format(n))
    if u not in (0, 1) or v not in (0, 1) or k < 0:
        return 0
    m = n // 2
    if n % 2 == 0:
        return int(comb(2 * m - 1, m - 1 - k, exact=True))
    return int(comb(2 * m, m - u - k, exact=True))


def xi_cardinality(alpha, l):
    if alpha < 1:
        raise ArgumentError("string length must be positive, got {}".format(alpha))
    if l < 0:
        return 0
    m = alpha // 2
    if alpha % 2 == 0:
        if l == 0:
            return 2 * int(comb(2 * m - 1, m - 1, exact=True))
        return 2 * int(comb(2 * m, m - l, exact=True))
    if l == 0:
        return int(comb(2 * m + 1, m, exact=True))
    return int(comb(2 * m + 2, m - l + 1, exact=True))


# Vectorized tables over all 2^n strings. Index s encodes the string whose
# x_1 is the most significant bit, so format(s, '0nb') is the string itself.

def position_bit(indices, n, i):
    return (indices >> (n - i)) & 1


@lru_cache(maxsize=32)
def class_table(n):
    r"""(u, k, v) of every n-bit string, via x -> eps x + t in the infinite
    dihedral group where q(x) = -x and p(x) = 1 - x.
    """
    if n > MAX_ENUMERATION:
        raise CapacityError("class table for n = {} exceeds 2^{}".format(n, MAX_ENUMERATION))
    indices = np.arange(2**n, dtype=np.int32)
    eps = np.ones(2**n, dtype=np.int8)
    t = np.zeros(2**n, dtype=np.int8)
    for i in range(1, n + 1):
        flip = position_bit(indices, n, i) == 1
        c = 0 if i % 2 else 1
        eps = np.where(flip, -eps, eps).astype(np.int8)
        t = np.where(flip, c - t, t).astype(np.int8)
    high = t >= 1
    u = high.astype(np.int8)
    k = np.where(high, t - 1, -t).astype(np.int16)
    v = np.where(eps > 0, high, ~high).astype(np.int8)
    for table in (u, k, v):
        table.setflags(write=False)
    return u, k, v


@lru_cache(maxsize=32)
def xi_classes(n):
    _, k, v = class_table(n)
    classes = (k + v).astype(np.int64)
    classes.setflags(write=False)
    return classes


@lru_cache(maxsize=32)
def weights(n):
    indices = np.arange(2**n, dtype=np.int64)
    counts = np.zeros(2**n, dtype=np.int64)
    for i in range(1, n + 1):
        counts += position_bit(indices, n, i)
    counts.setflags(write=False)
    return counts


@lru_cache(maxsize=32)
def reversed_indices(n):
    indices = np.arange(2**n, dtype=np.int64)
    result = np.zeros(2**n, dtype=np.int64)
    for i in range(1, n + 1):
        result |= position_bit(indices, n, i) << (i - 1)
    result.setflags(write=False)
    return result


def enumerate_theta(n, u, k, v):
    if n < 1:
        raise ArgumentError("string length must be positive, got {}".format(n))
    if n > MAX_ENUMERATION:
        raise CapacityError("refusing to enumerate 2^{} strings".format(n))
    U, K, V = class_table(n)
    match = np.nonzero((U == u) & (K == k) & (V == v))[0]
    return {format(int(s), '0{}b'.format(n)) for s in match}


def reversal_closure_check(a, c):
    a, c = as_bits(a), as_bits(c)
    if a.size != c.size or a.size == 0 or a.size % 2:
        raise ArgumentError("expected two strings of equal even length, got {} and {}".format(a.size, c.size))
    one = np.ones(1, dtype=np.int8)
    return xi_class(np.concatenate([a, one, c[::-1]])) == xi_class(np.concatenate([c, one, a[::-1]]))


def reversal_closure_violations(L):
    r"""Number of pairs (a, c) of 2L-bit strings where the classes of a1c^R
    and c1a^R differ.
    """
    half = 2 * L
    classes = xi_classes(2 * half + 1)
    rev = reversed_indices(half)
    a = np.arange(2**half, dtype=np.int64)[:, None]
    c = np.arange(2**half, dtype=np.int64)[None, :]
    middle = 1 << half
    forward = classes[(a << (half + 1)) | middle | rev[c]]
    backward = classes[(c << (half + 1)) | middle | rev[a]]
    return int(np.count_nonzero(forward != backward))
