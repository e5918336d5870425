"""Seeded, cross-platform random streams.

All randomness in the package flows through numpy's PCG64 bit generator,
and every derived draw (subset selection, permutation shuffling,
Bernoulli trials) is implemented here on top of ``Generator.integers``
alone.  PCG64 produces an identical stream for a given seed on every
platform, and the algorithms below are fixed by this module, so a seed
pins all outputs bit-for-bit.

Stream splitting contract: parallel consumers must not share a
Generator.  ``spawn_streams(seed, count)`` derives ``count``
statistically independent child generators from one seed via
``numpy.random.SeedSequence.spawn``; the children depend only on
``(seed, index)``, never on how many workers consume them.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np


def generator(seed: int) -> np.random.Generator:
    """A fresh PCG64 generator for the given integer seed."""
    return np.random.Generator(np.random.PCG64(seed))


def spawn_streams(seed: int, count: int) -> list[np.random.Generator]:
    """``count`` independent child generators derived from one seed."""
    children = np.random.SeedSequence(seed).spawn(count)
    return [np.random.Generator(np.random.PCG64(c)) for c in children]


def sample_indices(rng: np.random.Generator, n: int, r: int) -> tuple[int, ...]:
    """A uniformly random r-subset of range(n), returned sorted.

    Partial Fisher-Yates: r swap steps on [0..n-1], each consuming one
    ``integers`` draw, then the first r slots sorted.  Fixed here rather
    than delegated to ``Generator.choice`` so the draw sequence is part
    of this package's contract.
    """
    if not 0 <= r <= n:
        raise ValueError(f"cannot sample {r} of {n} indices")
    pool = list(range(n))
    for i in range(r):
        j = int(rng.integers(i, n))
        pool[i], pool[j] = pool[j], pool[i]
    return tuple(sorted(pool[:r]))


def random_permutation_zero(rng: np.random.Generator, n: int) -> tuple[int, ...]:
    """A uniformly random permutation of range(n) (full Fisher-Yates)."""
    vals = list(range(n))
    for i in range(n - 1):
        j = int(rng.integers(i, n))
        vals[i], vals[j] = vals[j], vals[i]
    return tuple(vals)


def bernoulli_mask(rng: np.random.Generator, p: Fraction, count: int) -> np.ndarray:
    """``count`` exact Bernoulli(p) indicators for a rational p.

    Draws integers uniform on [0, denominator) and compares against the
    numerator, so the success probability is exactly p with no floating
    rounding even for p like 1/3.
    """
    if not 0 <= p <= 1:
        raise ValueError(f"probability {p} outside [0, 1]")
    if count == 0:
        return np.zeros(0, dtype=bool)
    if p == 0:
        return np.zeros(count, dtype=bool)
    if p == 1:
        return np.ones(count, dtype=bool)
    draws = rng.integers(0, p.denominator, size=count, dtype=np.uint64)
    return draws < p.numerator
