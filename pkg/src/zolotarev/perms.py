"""Dense permutations of {0, ..., N-1} and their parity.

A permutation is stored as its image sequence: ``image[x]`` is where ``x``
goes. Composition follows the functional convention, so
``compose(p, q)`` applies ``q`` first and then ``p``.

Parity is available three ways, which the test-suite plays off against
each other:

* ``count_inversions_naive``: the O(N^2) pair loop, used as an oracle;
* ``count_inversions_fast``: bottom-up merge counting, vectorised in numpy;
* ``sign_via_cycles``: ``(-1) ** (N - number_of_cycles)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

import numpy as np

from .errors import DegreeMismatch, NotAPermutation

Sign = Literal[1, -1]
Cycles = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Permutation:
    image: tuple[int, ...]

    def __init__(self, image: Iterable[int]):
        image = tuple(int(v) for v in image)
        n = len(image)
        seen = bytearray(n)
        for v in image:
            if not 0 <= v < n or seen[v]:
                raise NotAPermutation(f"image is not a bijection of range({n})")
            seen[v] = 1
        object.__setattr__(self, "image", image)

    @classmethod
    def _trusted(cls, image: tuple[int, ...]) -> Permutation:
        # internal constructor for images that are bijective by construction
        obj = object.__new__(cls)
        object.__setattr__(obj, "image", image)
        return obj

    @property
    def degree(self) -> int:
        return len(self.image)

    def __len__(self) -> int:
        return len(self.image)

    def __call__(self, x: int) -> int:
        return self.image[x]

    def __matmul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __repr__(self) -> str:
        if self.degree <= 20:
            return f"Permutation({list(self.image)})"
        return f"Permutation(<degree {self.degree}>)"


def identity(n: int) -> Permutation:
    if n < 0:
        raise ValueError("degree must be non-negative")
    return Permutation._trusted(tuple(range(n)))


def from_function(n: int, f) -> Permutation:
    """Tabulate ``f`` on ``range(n)``, checking that the result is a bijection."""
    return Permutation(f(x) for x in range(n))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return ``p o q``: apply ``q`` first, then ``p``."""
    if p.degree != q.degree:
        raise DegreeMismatch(f"cannot compose degree {p.degree} with degree {q.degree}")
    pi = p.image
    return Permutation._trusted(tuple(pi[y] for y in q.image))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for x, y in enumerate(p.image):
        inv[y] = x
    return Permutation._trusted(tuple(inv))


def random_permutation(n: int, rng: random.Random) -> Permutation:
    """Uniform permutation via ``rng.shuffle`` (Fisher-Yates)."""
    image = list(range(n))
    rng.shuffle(image)
    return Permutation._trusted(tuple(image))


def reversal(n: int) -> Permutation:
    return Permutation._trusted(tuple(range(n - 1, -1, -1)))


def transposition(n: int, i: int, j: int) -> Permutation:
    image = list(range(n))
    image[i], image[j] = image[j], image[i]
    return Permutation(image)


def count_inversions_naive(p: Permutation) -> int:
    image = p.image
    n = len(image)
    count = 0
    for x in range(n):
        # inner loop over y > x, pushed into C via map
        count += sum(map(image[x].__gt__, image[x + 1:]))
    return count


def count_inversions_fast(p: Permutation) -> int:
    """Inversion count by bottom-up merge sort, O(N log^2 N) inside numpy.

    At each level the array consists of sorted blocks of ``width``. For every
    adjacent (left, right) pair, each right element contributes the number of
    left elements exceeding it; those counts come from one ``searchsorted``
    over all blocks at once, made possible by lifting block ``k`` into the
    value band ``[k*size, (k+1)*size)``.
    """
    n = p.degree
    if n < 2:
        return 0
    size = 1 << (n - 1).bit_length()
    # padding values are larger than every label and already ascending,
    # so they add no inversions
    a = np.empty(size, dtype=np.int64)
    a[:n] = p.image
    a[n:] = np.arange(n, size)
    total = 0
    width = 1
    while width < size:
        blocks = a.reshape(-1, 2 * width)
        nblocks = blocks.shape[0]
        band = (np.arange(nblocks, dtype=np.int64) * size)[:, None]
        left = (blocks[:, :width] + band).ravel()
        right = (blocks[:, width:] + band).ravel()
        pos = np.searchsorted(left, right, side="right").reshape(nblocks, width)
        not_greater = pos - (np.arange(nblocks, dtype=np.int64) * width)[:, None]
        total += int(width * width * nblocks - not_greater.sum())
        a = np.sort(blocks, axis=1).ravel()
        width *= 2
    return total


def sign_via_inversions(p: Permutation) -> Sign:
    return -1 if count_inversions_fast(p) & 1 else 1


def cycle_decomposition(p: Permutation) -> Cycles:
    """Cycles in traversal order, each starting at its minimum, ordered by minimum.

    Fixed points appear as 1-cycles, so the cycles partition ``range(N)``.
    """
    image = p.image
    seen = bytearray(len(image))
    cycles = []
    for start in range(len(image)):
        if seen[start]:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = 1
            cycle.append(x)
            x = image[x]
        cycles.append(tuple(cycle))
    return tuple(cycles)


def count_cycles(image: Sequence[int]) -> int:
    seen = bytearray(len(image))
    cycles = 0
    for start in range(len(image)):
        if seen[start]:
            continue
        cycles += 1
        x = start
        while not seen[x]:
            seen[x] = 1
            x = image[x]
    return cycles


def sign_via_cycles(p: Permutation) -> Sign:
    return -1 if (p.degree - count_cycles(p.image)) & 1 else 1


def from_cycles(n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
    """Rebuild a permutation from cycles; points not mentioned are fixed."""
    image = list(range(n))
    for cycle in cycles:
        for k, x in enumerate(cycle):
            image[x] = cycle[(k + 1) % len(cycle)]
    return Permutation(image)


sign = sign_via_cycles
