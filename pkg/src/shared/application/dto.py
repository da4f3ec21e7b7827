"""Read-model base: the JSON shape of a report."""

from pydantic import BaseModel, ConfigDict


class DTO(BaseModel):
    """Frozen; enums serialize as their values so reports stay plain JSON."""

    model_config = ConfigDict(frozen=True, use_enum_values=True)

    def to_report(self) -> dict:
        return self.model_dump(mode="json")
