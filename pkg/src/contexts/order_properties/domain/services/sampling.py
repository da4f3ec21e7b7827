"""
Seeded samplers.

Every sample owns a generator derived from (seed, stream, index), so a check
evaluates the same inputs regardless of evaluation order or worker count.
"""

from enum import IntEnum

import numpy as np

from contexts.cone_geometry.domain.services import project
from contexts.cone_geometry.domain.value_objects import (
    ConeDescriptor,
    Direction,
    Dual,
    FinitelyGenerated,
    HalfspaceIntersection,
    Lorentz,
    Monotone,
    MonotoneNonneg,
    Orthant,
    Tolerance,
    Vector,
)

MIN_RADIUS = 1e-2
MAX_RADIUS = 1e2


class SampleStream(IntEnum):
    ISOTONE = 1
    SUBADDITIVE = 2
    CROSS_SUBADDITIVE = 3
    INVARIANCE = 4


def sample_rng(seed: int, stream: SampleStream, index: int) -> np.random.Generator:
    return np.random.default_rng([seed, int(stream), index])


def log_uniform_radius(rng: np.random.Generator) -> float:
    """Radius drawn log-uniformly in [1e-2, 1e2]."""
    return float(10.0 ** rng.uniform(np.log10(MIN_RADIUS), np.log10(MAX_RADIUS)))


def sample_gaussian(rng: np.random.Generator, dim: int) -> Vector:
    """Standard gaussian scaled by a log-uniform radius."""
    return log_uniform_radius(rng) * rng.standard_normal(dim)


def _sorted(values: Vector, direction: Direction) -> Vector:
    ascending = np.sort(values)
    return ascending[::-1].copy() if direction == Direction.NONINCREASING else ascending


def sample_cone(rng: np.random.Generator, cone: ConeDescriptor, tol: Tolerance) -> Vector:
    """
    A point of ``cone`` scaled by a log-uniform radius.

    Generated cones use sparse conic combinations so that boundary faces are
    hit; halfspace and dual cones project a gaussian.
    """
    radius = log_uniform_radius(rng)
    dim = cone.dim

    match cone:
        case Orthant():
            point = np.abs(rng.standard_normal(dim))
        case Lorentz():
            u = rng.standard_normal(dim - 1)
            point = np.append(u, np.linalg.norm(u) + abs(rng.standard_normal()))
        case Monotone(direction=direction):
            point = _sorted(rng.standard_normal(dim), direction)
        case MonotoneNonneg(direction=direction):
            point = _sorted(np.abs(rng.standard_normal(dim)), direction)
        case FinitelyGenerated():
            generators = cone.matrix()
            weights = np.abs(rng.standard_normal(generators.shape[1]))
            weights[rng.random(generators.shape[1]) < 0.5] = 0.0
            if not np.any(weights):
                weights[rng.integers(generators.shape[1])] = 1.0
            point = generators @ weights
        case HalfspaceIntersection() | Dual():
            point = project(rng.standard_normal(dim), cone, tol).point
        case _:
            raise TypeError(f"Unsupported cone descriptor: {type(cone).__name__}")

    return radius * point
