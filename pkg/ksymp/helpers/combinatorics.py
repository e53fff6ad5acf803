"""Combinatorial utility functions"""

import functools
import math
from typing import Iterator

Exponents = tuple[int, ...]


@functools.lru_cache(maxsize=None)
def monomials(num_vars: int, degree: int) -> tuple[Exponents, ...]:
    """All exponent vectors of the given total degree, lexicographically descending

    (degree, 0, ..., 0) comes first and (0, ..., 0, degree) last.
    """
    if num_vars == 0:
        return ((),) if degree == 0 else ()
    if num_vars == 1:
        return ((degree,),)
    result: list[Exponents] = []
    for first in range(degree, -1, -1):
        for rest in monomials(num_vars - 1, degree - first):
            result.append((first,) + rest)
    return tuple(result)


def monomial_count(num_vars: int, degree: int) -> int:
    """Number of monomials of the given degree: C(num_vars + degree - 1, degree)"""
    if num_vars == 0:
        return 1 if degree == 0 else 0
    return math.comb(num_vars + degree - 1, degree)


def add_exponents(left: Exponents, right: Exponents) -> Exponents:
    """Exponent vector of a product of monomials"""
    return tuple(a + b for a, b in zip(left, right))


def unit_exponent(num_vars: int, index: int) -> Exponents:
    """Exponent vector of the variable t_index"""
    return tuple(1 if i == index else 0 for i in range(num_vars))


def popcount(value: int) -> int:
    """Number of set bits"""
    return bin(value).count("1")


def blade_indices(mask: int) -> list[int]:
    """Basis vector indices contained in a blade bitmask, ascending"""
    indices = []
    index = 0
    while mask:
        if mask & 1:
            indices.append(index)
        mask >>= 1
        index += 1
    return indices


def reorder_sign(left: int, right: int) -> int:
    """Sign from sorting the concatenation of two canonical blades

    Counts, for every basis vector of `left`, the vectors of `right` with a
    smaller index that it has to move past.
    """
    swaps = 0
    left >>= 1
    while left:
        swaps += popcount(left & right)
        left >>= 1
    return -1 if swaps & 1 else 1


def masks_by_grade(dimension: int) -> Iterator[int]:
    """All blade bitmasks of an algebra on `dimension` generators, grade by grade"""
    for grade in range(dimension + 1):
        for mask in range(1 << dimension):
            if popcount(mask) == grade:
                yield mask
