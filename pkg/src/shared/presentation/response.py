"""
Command Response Model.

Every CLI command ends in exactly one CommandResponse: the JSON document
written to the output stream plus the process exit status.
"""

import json
from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, Field

from shared.errors.error_codes import ExitStatus


class CommandResponse(BaseModel):
    """
    Usage:
        # Success
        return CommandResponse.ok(report)

        # Falsified property report
        return CommandResponse.ok(report, status=ExitStatus.FALSIFIED)

        # Failure
        return CommandResponse.from_error("CONE_001", "Malformed cone", ExitStatus.INPUT_ERROR)
    """

    model_config = ConfigDict(frozen=True)

    document: Dict[str, Any] = Field(..., description="JSON document written to the output")
    status: ExitStatus = Field(default=ExitStatus.OK, description="Process exit status")

    @classmethod
    def ok(cls, document: Dict[str, Any], status: ExitStatus = ExitStatus.OK) -> "CommandResponse":
        return cls(document=document, status=status)

    @classmethod
    def from_error(
        cls,
        code: str,
        message: str,
        status: ExitStatus,
        details: Optional[Dict[str, Any]] = None,
    ) -> "CommandResponse":
        """Create an error response with the machine-readable error object."""
        return cls(
            document={
                "error": {
                    "code": code,
                    "message": message,
                    "details": details or {},
                }
            },
            status=status,
        )

    @property
    def exit_code(self) -> int:
        return int(self.status)

    def render(self) -> str:
        """Serialize deterministically: sorted keys, fixed indentation, trailing newline."""
        return json.dumps(self.document, sort_keys=True, indent=2) + "\n"

    def write(self, stream: Any, output_path: Optional[Path] = None) -> None:
        """Write to ``output_path`` when given, otherwise to ``stream``."""
        text = self.render()
        if output_path is None:
            stream.write(text)
            stream.flush()
            return
        output_path.write_text(text, encoding="utf-8")
