"""
Symmetric group elements, reduced words and the canonical factorization
w = w_1 ... w_{n-1} with w_j = s_j s_{j-1} ... s_{k_j} (or 1 when k_j = 0).

Permutations compose as functions: (v * w)(x) = v(w(x)).
"""

import itertools
import logging
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple

logger = logging.getLogger(__name__)

FactorVector = Tuple[int, ...]


class Perm:
    """Permutation of {1..n} in one-line notation (images of 1..n)."""

    __slots__ = ('_images', '_hash')

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"Not a permutation of 1..{len(images)}: {images}")
        self._images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, n: int) -> 'Perm':
        return cls(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self._images)

    @property
    def images(self) -> Tuple[int, ...]:
        return self._images

    def __call__(self, x: int) -> int:
        return self._images[x - 1]

    def __mul__(self, other: 'Perm') -> 'Perm':
        return compose(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Perm):
            return NotImplemented
        return self._images == other._images

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: 'Perm') -> bool:
        return self._images < other._images

    def is_identity(self) -> bool:
        return all(image == x for x, image in enumerate(self._images, start=1))

    def has_descent(self, i: int) -> bool:
        """True iff length(w * s_i) < length(w)."""
        return self._images[i - 1] > self._images[i]

    def times_generator(self, i: int) -> 'Perm':
        """w * s_i, i.e. swap positions i and i+1 of the one-line form."""
        images = list(self._images)
        images[i - 1], images[i] = images[i], images[i - 1]
        return Perm(images)

    def cycles(self) -> List[Tuple[int, ...]]:
        seen = set()
        result = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cycle = []
            x = start
            while x not in seen:
                seen.add(x)
                cycle.append(x)
                x = self(x)
            result.append(tuple(cycle))
        return result

    def __str__(self) -> str:
        return '[' + ','.join(map(str, self._images)) + ']'

    def __repr__(self) -> str:
        return f'Perm({list(self._images)})'


def _check_same_n(v: Perm, w: Perm) -> None:
    if v.n != w.n:
        raise ValueError(f"Permutations of different degrees: {v.n} and {w.n}")


def compose(v: Perm, w: Perm) -> Perm:
    _check_same_n(v, w)
    return Perm(v(w(x)) for x in range(1, w.n + 1))


def inverse(w: Perm) -> Perm:
    images = [0] * w.n
    for x, image in enumerate(w.images, start=1):
        images[image - 1] = x
    return Perm(images)


def length(w: Perm) -> int:
    """Coxeter length = number of inversions."""
    images = w.images
    return sum(1 for a, b in itertools.combinations(range(w.n), 2) if images[a] > images[b])


def transposition(i: int, n: int) -> Perm:
    """The simple transposition s_i of S_n."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"Generator index {i} out of range for S_{n}")
    return Perm.identity(n).times_generator(i)


def from_word(word: Sequence[int], n: int) -> Perm:
    """s_{i1} s_{i2} ... s_{ik} as a permutation."""
    result = Perm.identity(n)
    for i in word:
        if not 1 <= i <= n - 1:
            raise ValueError(f"Generator index {i} out of range for S_{n}")
        result = result.times_generator(i)
    return result


def theta(i: int, j: int, n: int) -> Perm:
    """s_i s_{i-1} ... s_j: sends j to i+1 and t to t-1 for j < t <= i+1."""
    if j > i:
        raise ValueError(f"theta({i}, {j}) needs j <= i")
    if j < 1 or i > n - 1:
        raise ValueError(f"theta({i}, {j}) out of range for S_{n}")
    return from_word(range(i, j - 1, -1), n)


def embed(w: Perm, m: int) -> Perm:
    """w viewed in S_m, fixing n+1..m."""
    if m < w.n:
        raise ValueError(f"Cannot embed S_{w.n} into S_{m}")
    return Perm(w.images + tuple(range(w.n + 1, m + 1)))


def restrict(w: Perm) -> Perm:
    """w in S_{n-1}; w must fix n."""
    if w.n < 2 or w(w.n) != w.n:
        raise ValueError(f"{w} does not fix its last point")
    return Perm(w.images[:-1])


@lru_cache(maxsize=65536)
def canonical_factor(w: Perm) -> FactorVector:
    """(k_1, ..., k_{n-1}) with w = theta_{1,k_1} ... theta_{n-1,k_{n-1}}."""
    ks = [0] * (w.n - 1)
    current = w
    for m in range(w.n, 1, -1):
        k = inverse(current)(m)
        if k != m:
            ks[m - 2] = k
            current = compose(current, inverse(theta(m - 1, k, current.n)))
        current = restrict(current)
    return tuple(ks)


def validate_factor_vector(ks: Sequence[int]) -> FactorVector:
    for j, k in enumerate(ks, start=1):
        if not 0 <= k <= j:
            raise ValueError(f"Factor entry k_{j}={k} outside 0..{j}")
    return tuple(ks)


def decode(ks: Sequence[int]) -> Perm:
    """Inverse of canonical_factor."""
    ks = validate_factor_vector(ks)
    return from_word(factor_word(ks), len(ks) + 1)


def factor_word(ks: Sequence[int]) -> List[int]:
    """Concatenated descent runs [j, j-1, ..., k_j] for every k_j > 0."""
    word: List[int] = []
    for j, k in enumerate(ks, start=1):
        if k:
            word.extend(range(j, k - 1, -1))
    return word


@lru_cache(maxsize=65536)
def reduced_word(w: Perm) -> Tuple[int, ...]:
    """Deterministic reduced word read off the canonical factorization."""
    if w.n == 1:
        return ()
    return tuple(factor_word(canonical_factor(w)))


def all_perms(n: int) -> Iterator[Perm]:
    for images in itertools.permutations(range(1, n + 1)):
        yield Perm(images)


def reduced_words(w: Perm) -> List[Tuple[int, ...]]:
    """Every reduced word of w, built from its right descents."""
    if w.is_identity():
        return [()]
    words: List[Tuple[int, ...]] = []
    for i in range(1, w.n):
        if w.has_descent(i):
            words.extend(prefix + (i,) for prefix in reduced_words(w.times_generator(i)))
    return words
