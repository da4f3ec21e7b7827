"""Cone Geometry domain services."""

from .catalog import (
    catalog_entries,
    example_cones,
    round_trips,
    variant_example,
    variant_schema,
)
from .duality import dual, is_self_dual, monotone_normals, polyhedral_form
from .lattice import lattice_op
from .membership import distance, leq, membership, relative_violation
from .projection import moreau_decompose, project, project_translated, projection_method

__all__ = [
    "catalog_entries",
    "variant_schema",
    "example_cones",
    "round_trips",
    "variant_example",
    "dual",
    "is_self_dual",
    "monotone_normals",
    "polyhedral_form",
    "lattice_op",
    "distance",
    "leq",
    "membership",
    "relative_violation",
    "moreau_decompose",
    "project",
    "project_translated",
    "projection_method",
]
