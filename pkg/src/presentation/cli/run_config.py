"""
Run configuration of one CLI invocation.

Flags and the optional ``--input`` document are merged into a single
RunConfig: input keys mirror the flag names (``proj-cone`` or ``proj_cone``)
and flags given on the command line win.
"""

import json
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from contexts.cone_geometry import Tolerance
from shared.errors.error_codes import ErrorCode
from shared.errors.exceptions import BadRequestException


class Command(str, Enum):
    PROJECT = "project"
    DECOMPOSE = "decompose"
    LATTICE = "lattice"
    DUAL = "dual"
    MEMBERSHIP = "membership"
    LEQ = "leq"
    CATALOG = "catalog"
    CHECK_ISOTONE = "check-isotone"
    CHECK_SUBADDITIVE = "check-subadditive"
    CHECK_CROSS_SUBADDITIVE = "check-cross-subadditive"
    CHECK_INVARIANCE = "check-invariance"
    CHECK_DUALITY = "check-duality"
    SOLVE_NCP = "solve-ncp"
    RESIDUALS = "residuals"

    @property
    def is_check(self) -> bool:
        return self.value.startswith("check-")


# Arguments carrying inline JSON documents.
JSON_ARGUMENTS = frozenset(
    {"cone", "proj_cone", "order_cone", "set_cone", "x", "y", "x0", "problem"}
)

# Literal keywords accepted in place of a JSON document.
JSON_KEYWORDS = {"order_cone": frozenset({"same"})}

_RUN_KEYS = frozenset(
    {
        "env",
        "output",
        "seed",
        "samples",
        "membership_tol",
        "solver_tol",
        "max_iter",
        "workers",
        "reverify",
    }
)


def decode_json_argument(name: str, raw: Any) -> Any:
    """
    Decode an inline JSON flag value; already-decoded values pass through.

    Raises:
        BadRequestException: MALFORMED_JSON when the text does not parse
    """
    if not isinstance(raw, str) or raw in JSON_KEYWORDS.get(name, ()):
        return raw
    try:
        return json.loads(raw)
    except json.JSONDecodeError as e:
        raise BadRequestException(
            f"--{name.replace('_', '-')} is not valid JSON: {e.msg}",
            details={"argument": name, "position": e.pos},
            error_code=ErrorCode.MALFORMED_JSON,
        )


def load_input_document(path: Path) -> Dict[str, Any]:
    """
    Read an ``--input`` file: a JSON object whose keys mirror the flags.

    Raises:
        BadRequestException: unreadable file, malformed JSON or a non-object document
    """
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise BadRequestException(
            f"Cannot read input file: {e.strerror}", details={"path": str(path)}
        )

    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise BadRequestException(
            f"Input file is not valid JSON: {e.msg}",
            details={"path": str(path), "line": e.lineno, "column": e.colno},
            error_code=ErrorCode.MALFORMED_JSON,
        )

    if not isinstance(document, dict):
        raise BadRequestException(
            "Input file must hold a JSON object", details={"path": str(path)}
        )
    return {str(key).replace("-", "_"): value for key, value in document.items()}


class RunConfig(BaseModel):
    """
    Attributes:
        command: The single command of this invocation
        env: Environment override (development, testing, ...)
        output: Report destination; stdout when None
        seed, samples: Mandatory for check-* commands
        membership_tol, solver_tol, max_iter: Per-run tolerance overrides
        workers: Worker threads of the property falsifiers
        reverify: Re-run falsifying witnesses at a tighter solver tolerance
        arguments: Decoded command arguments (cones, vectors, problems)
        tolerance_override: Configured tolerance with the per-run overrides
            applied; None when no override flag was given
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    command: Command
    env: Optional[str] = None
    output: Optional[Path] = None
    seed: Optional[int] = None
    samples: Optional[int] = None
    membership_tol: Optional[float] = Field(default=None, ge=0.0)
    solver_tol: Optional[float] = Field(default=None, ge=0.0)
    max_iter: Optional[int] = Field(default=None, ge=1)
    workers: Optional[int] = Field(default=None, ge=1)
    reverify: bool = False
    arguments: Dict[str, Any] = Field(default_factory=dict)
    tolerance_override: Optional[Tolerance] = None

    @model_validator(mode="after")
    def _check_sampling(self) -> "RunConfig":
        if self.command.is_check and (self.seed is None or self.samples is None):
            raise ValueError(f"{self.command.value} requires --seed and --samples")
        return self

    @classmethod
    def from_sources(
        cls,
        command: str,
        flags: Mapping[str, Any],
        document: Optional[Mapping[str, Any]] = None,
        defaults: Optional[Tolerance] = None,
    ) -> "RunConfig":
        """
        Merge the input document with the flags given on the command line.

        Raises:
            BadRequestException: MALFORMED_JSON for an unparseable inline document
            pydantic.ValidationError: schema violations of the run options
        """
        merged: Dict[str, Any] = dict(document or {})
        merged.update({key: value for key, value in flags.items() if value is not None})
        merged.pop("command", None)
        merged.pop("input", None)

        options = {key: merged.pop(key) for key in list(merged) if key in _RUN_KEYS}
        if options.get("reverify") is None:
            options.pop("reverify", None)
        arguments = {
            key: decode_json_argument(key, value) if key in JSON_ARGUMENTS else value
            for key, value in merged.items()
        }
        config = cls.model_validate({"command": command, **options, "arguments": arguments})
        if defaults is None:
            return config
        return config.model_copy(update={"tolerance_override": config.resolve_tolerance(defaults)})

    def resolve_tolerance(self, defaults: Tolerance) -> Optional[Tolerance]:
        """
        Tolerance with this run's overrides applied to ``defaults``; None when
        no override was given so handlers keep their configured default.
        """
        overrides = {
            key: value
            for key, value in (
                ("membership_tol", self.membership_tol),
                ("solver_tol", self.solver_tol),
                ("max_iter", self.max_iter),
            )
            if value is not None
        }
        if not overrides:
            return None
        return Tolerance(**{**defaults.model_dump(), **overrides})
