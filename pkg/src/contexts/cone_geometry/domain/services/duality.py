"""
Symbolic dual-cone construction.

dual() only rewrites descriptors; nothing numerical happens here. Variants
without a rewrite rule stay wrapped in Dual{} and are projected through the
Moreau identity.
"""

from typing import Optional, Tuple

from ..value_objects.cone_descriptor import (
    ConeDescriptor,
    Direction,
    Dual,
    FinitelyGenerated,
    HalfspaceIntersection,
    Lorentz,
    Monotone,
    MonotoneNonneg,
    Orthant,
)


def _unit(dim: int, index: int) -> Tuple[float, ...]:
    return tuple(1.0 if i == index else 0.0 for i in range(dim))


def monotone_normals(dim: int, direction: Direction) -> Tuple[Tuple[float, ...], ...]:
    """
    d_i = e_i - e_{i+1} for the nonincreasing cone, e_{i+1} - e_i otherwise;
    the monotone cone is {x : ⟨d_i, x⟩ >= 0}.
    """
    sign = 1.0 if direction == Direction.NONINCREASING else -1.0
    normals = []
    for i in range(dim - 1):
        row = [0.0] * dim
        row[i] = sign
        row[i + 1] = -sign
        normals.append(tuple(row))
    return tuple(normals)


def dual(cone: ConeDescriptor) -> ConeDescriptor:
    """
    Simplified descriptor of the dual cone.

    Orthant and Lorentz are self-dual; generators and halfspace normals swap
    roles; the monotone cone's dual is generated by its halfspace normals;
    Dual{inner} collapses to inner.
    """
    match cone:
        case Orthant() | Lorentz():
            return cone
        case FinitelyGenerated(dim=dim, generators=generators):
            return HalfspaceIntersection(dim=dim, normals=generators)
        case HalfspaceIntersection(dim=dim, normals=normals):
            return FinitelyGenerated(dim=dim, generators=normals)
        case Monotone(dim=dim, direction=direction):
            return FinitelyGenerated(dim=dim, generators=monotone_normals(dim, direction))
        case Dual(inner=inner):
            return inner
        case _:
            return Dual(inner=cone)


def polyhedral_form(cone: ConeDescriptor) -> Optional[HalfspaceIntersection]:
    """
    Halfspace representation of the same cone, when one is known without
    facet enumeration. Used to cross-check PAVA and the closed forms against
    Dykstra.
    """
    match cone:
        case HalfspaceIntersection():
            return cone
        case Orthant(dim=dim):
            return HalfspaceIntersection(
                dim=dim, normals=tuple(_unit(dim, i) for i in range(dim))
            )
        case Monotone(dim=dim, direction=direction):
            return HalfspaceIntersection(dim=dim, normals=monotone_normals(dim, direction))
        case MonotoneNonneg(dim=dim, direction=direction):
            # the last element of the chain carries the sign constraint
            anchor = dim - 1 if direction == Direction.NONINCREASING else 0
            return HalfspaceIntersection(
                dim=dim, normals=monotone_normals(dim, direction) + (_unit(dim, anchor),)
            )
        case Dual(inner=FinitelyGenerated() as inner):
            return dual(inner)  # type: ignore[return-value]
        case _:
            return None


def is_self_dual(cone: ConeDescriptor) -> bool:
    return dual(cone) == cone
