"""Named exponent-matrix patterns and a seeded generator for random ones.

All randomness flows through SplitMix64 so that a single 64-bit seed fully
determines every generated set, independent of platform or interpreter.
"""

from __future__ import annotations

from typing import Sequence

from .errors import InvalidSetError
from .numtheory import small_primes
from .setmodel import ExponentMatrix, OrderedSet, reconstruct

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 pseudo-random generator with the standard constants.

    next_u64: state += 0x9E3779B97F4A7C15; z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
    return z ^ (z >> 31), all modulo 2**64.

    Derived draws are defined exactly so results are portable: below(n) is
    next_u64() % n, randint(a, b) is a + below(b - a + 1), and shuffle is a
    Fisher-Yates pass from the last index down using below.
    """

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform-ish draw in [0, n)."""
        if n < 1:
            raise ValueError(f"below() needs n >= 1, got {n}")
        return self.next_u64() % n

    def randint(self, a: int, b: int) -> int:
        """Draw in the closed range [a, b]."""
        if a > b:
            raise ValueError(f"empty range [{a}, {b}]")
        return a + self.below(b - a + 1)

    def choice(self, seq: Sequence):
        return seq[self.below(len(seq))]

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def first_primes(k: int) -> tuple[int, ...]:
    return small_primes()[:k]


def pascal_exponents(n: int) -> list[list[int]]:
    """Rows of the symmetric Pascal matrix: entry (i, j) = C(i+j, i)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    rows = [[1] * n]
    for _ in range(n - 1):
        prev = rows[-1]
        row = [1]
        for j in range(1, n):
            row.append(row[-1] + prev[j])
        rows.append(row)
    return rows


def vandermonde_exponents(bases: Sequence[int]) -> list[list[int]]:
    """Rows of the Vandermonde matrix: row i = (1, b_i, b_i**2, ...)."""
    if not bases:
        raise ValueError("need at least one base")
    if any(b < 1 for b in bases):
        raise ValueError(f"bases must be positive, got {list(bases)}")
    n = len(bases)
    return [[b**j for j in range(n)] for b in bases]


def pascal_set(n: int, primes: Sequence[int] | None = None) -> OrderedSet:
    """Ordered set whose exponent matrix is the symmetric Pascal matrix."""
    primes = tuple(primes) if primes is not None else first_primes(n)
    return reconstruct(ExponentMatrix(primes, pascal_exponents(n)))


def vandermonde_set(bases: Sequence[int], primes: Sequence[int] | None = None) -> OrderedSet:
    """Ordered set whose exponent matrix is the Vandermonde matrix of bases."""
    primes = tuple(primes) if primes is not None else first_primes(len(bases))
    return reconstruct(ExponentMatrix(primes, vandermonde_exponents(bases)))


_MAX_DRAW_ATTEMPTS = 10_000


def random_monotone_exponents(
    rng: SplitMix64, n: int, max_exp: int = 6, max_primes: int = 4
) -> ExponentMatrix:
    """Draw a random column-monotone exponent matrix over the first k primes.

    One draw: k = randint(1, max_primes); per column an up/down direction
    (below(2), 0 meaning up); per column n exponents below(max_exp + 1),
    sorted ascending and reversed for down columns. Draws with duplicate rows
    or an all-zero column are rejected and redrawn.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if max_exp < 1 or max_primes < 1:
        raise ValueError("max_exp and max_primes must be >= 1")
    for _ in range(_MAX_DRAW_ATTEMPTS):
        k = rng.randint(1, max_primes)
        columns = []
        for _ in range(k):
            down = rng.below(2) == 1
            col = sorted(rng.below(max_exp + 1) for _ in range(n))
            if down:
                col.reverse()
            columns.append(col)
        rows = [tuple(col[i] for col in columns) for i in range(n)]
        if len(set(rows)) != n:
            continue
        if any(all(row[j] == 0 for row in rows) for j in range(k)):
            continue
        return ExponentMatrix(first_primes(k), rows)
    raise InvalidSetError(
        f"could not draw {n} distinct rows with max_exp={max_exp}, max_primes={max_primes}"
    )


def random_monotone_set(
    rng: SplitMix64, n: int, max_exp: int = 6, max_primes: int = 4
) -> OrderedSet:
    """Random ordered set whose gcd matrix is totally nonnegative."""
    return reconstruct(random_monotone_exponents(rng, n, max_exp, max_primes))
