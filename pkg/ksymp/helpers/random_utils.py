"""Seeded random sampling shared by every sampled check

All randomness flows from numpy's PCG64 bit generator so that a (seed, samples)
pair always reproduces the same report.
"""

import numpy as np

from ksymp.models.scalar import Backend, Scalar, gaussian


def make_rng(seed: int) -> np.random.Generator:
    """PCG64-backed generator for a seed"""
    return np.random.Generator(np.random.PCG64(seed))


def random_integers(rng: np.random.Generator, count: int, bound: int = 9) -> list[int]:
    """`count` integers drawn uniformly from [-bound, bound]"""
    return [int(value) for value in rng.integers(-bound, bound + 1, size=count)]


def random_nonzero_integers(rng: np.random.Generator, count: int, bound: int = 9) -> list[int]:
    """Integers from [-bound, bound] redrawn until the vector is not all zero"""
    while True:
        values = random_integers(rng, count, bound)
        if any(values):
            return values


def random_gaussian_integers(
    rng: np.random.Generator, count: int, backend: Backend, bound: int = 9
) -> list[Scalar]:
    """Random Gaussian integers a + b*i as backend scalars"""
    real = random_integers(rng, count, bound)
    imag = random_integers(rng, count, bound)
    return [backend.coerce(gaussian(a, b)) for a, b in zip(real, imag)]
