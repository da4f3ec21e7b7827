"""
Pool-adjacent-violators algorithm (unit weights).

Computes the Euclidean projection onto the monotone cone, i.e. isotonic
regression of ``y``.
"""

from typing import Tuple

import numpy as np

from ..value_objects.cone_descriptor import Direction
from ..value_objects.vector import Vector


def isotonic_nonincreasing(y: Vector) -> Tuple[Vector, int]:
    """
    Project onto {x : x_1 >= x_2 >= ... >= x_n}.

    Returns:
        (projection, number of pool merges)
    """
    sums: list[float] = []
    counts: list[int] = []
    merges = 0

    for value in y:
        sums.append(float(value))
        counts.append(1)
        # a block whose mean exceeds its predecessor's breaks the chain
        while len(sums) > 1 and sums[-2] * counts[-1] < sums[-1] * counts[-2]:
            block_sum = sums.pop()
            block_count = counts.pop()
            sums[-1] += block_sum
            counts[-1] += block_count
            merges += 1

    means = np.array([s / c for s, c in zip(sums, counts)], dtype=np.float64)
    return np.repeat(means, counts), merges


def project_monotone(x: Vector, direction: Direction) -> Tuple[Vector, int]:
    if direction == Direction.NONINCREASING:
        return isotonic_nonincreasing(x)
    reversed_fit, merges = isotonic_nonincreasing(x[::-1])
    return reversed_fit[::-1].copy(), merges


def project_monotone_nonneg(x: Vector, direction: Direction) -> Tuple[Vector, int]:
    """PAVA, then clamp at 0."""
    fit, merges = project_monotone(x, direction)
    return np.maximum(fit, 0.0), merges
