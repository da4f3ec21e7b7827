"""Representative instance of every descriptor variant."""

from typing import List, Tuple

from ..value_objects.cone_descriptor import (
    CONE_VARIANTS,
    ConeDescriptor,
    Direction,
    Dual,
    FinitelyGenerated,
    HalfspaceIntersection,
    Lorentz,
    Monotone,
    MonotoneNonneg,
    Orthant,
    dump_cone,
    parse_cone,
)


def example_cones() -> List[ConeDescriptor]:
    """
    One or more instances per variant, small enough for exhaustive oracles.
    """
    return [
        Orthant(dim=3),
        Lorentz(dim=3),
        Monotone(dim=4, direction=Direction.NONINCREASING),
        Monotone(dim=3, direction=Direction.NONDECREASING),
        MonotoneNonneg(dim=4, direction=Direction.NONINCREASING),
        FinitelyGenerated(dim=3, generators=((1.0, 0.0, 0.0), (1.0, 1.0, 0.0), (0.0, 1.0, 1.0))),
        HalfspaceIntersection(dim=3, normals=((1.0, 0.0, 0.0), (1.0, 1.0, 0.0), (0.0, -1.0, 1.0))),
        Dual(inner=FinitelyGenerated(dim=2, generators=((1.0, 0.0), (1.0, 1.0)))),
    ]


def variant_example(variant: type) -> ConeDescriptor:
    for cone in example_cones():
        if type(cone) is variant:
            return cone
    raise KeyError(variant.__name__)


def round_trips(cone: ConeDescriptor) -> bool:
    """parse(dump(cone)) == cone."""
    return parse_cone(dump_cone(cone)) == cone


def variant_schema(variant: type) -> dict:
    """
    JSON schema of one variant as an object schema. Recursive models come
    back from pydantic as a bare ``$ref``; it is resolved, and ``$defs`` stays
    alongside for the nested references.
    """
    schema = variant.model_json_schema()
    ref = schema.get("$ref")
    if ref is None:
        return schema
    definitions = schema["$defs"]
    return {**definitions[ref.rsplit("/", 1)[-1]], "$defs": definitions}


def catalog_entries() -> List[Tuple[str, dict, ConeDescriptor]]:
    """(type tag, JSON schema, example) for every variant, in declaration order."""
    entries = []
    for variant in CONE_VARIANTS:
        example = variant_example(variant)
        entries.append((example.type, variant_schema(variant), example))
    return entries
