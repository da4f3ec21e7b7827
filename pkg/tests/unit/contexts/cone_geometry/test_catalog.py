"""Test the descriptor catalog"""

import pytest

from contexts.cone_geometry.domain import Dual, Lorentz, Orthant
from contexts.cone_geometry.domain.services.catalog import (
    catalog_entries,
    example_cones,
    round_trips,
    variant_example,
    variant_schema,
)

TYPE_TAGS = ["orthant", "lorentz", "monotone", "monotone_nonneg", "generated", "halfspaces", "dual"]


class TestCatalog:
    """Test every variant has an example that survives a round trip"""

    def test_eight_examples(self):
        assert len(example_cones()) == 8

    def test_entries_follow_declaration_order(self):
        assert [tag for tag, _, _ in catalog_entries()] == TYPE_TAGS

    def test_every_example_round_trips(self):
        for cone in example_cones():
            assert round_trips(cone), cone

    def test_schema_names_the_type_tag(self):
        for tag, schema, example in catalog_entries():
            assert "type" in schema["properties"]
            assert example.type == tag

    def test_recursive_variant_schema_is_resolved(self):
        """Test the dual variant is an object schema with its definitions kept"""
        # Act
        schema = variant_schema(Dual)

        # Assert
        assert schema["type"] == "object"
        assert {"type", "inner"} <= set(schema["properties"])
        assert "Dual" in schema["$defs"]
        assert "$ref" not in schema

    def test_plain_variant_schema_unchanged(self):
        assert variant_schema(Orthant) == Orthant.model_json_schema()

    def test_variant_example_is_first_match(self):
        assert variant_example(Orthant) == Orthant(dim=3)
        assert variant_example(Lorentz) == Lorentz(dim=3)

    def test_unknown_variant(self):
        with pytest.raises(KeyError):
            variant_example(int)
