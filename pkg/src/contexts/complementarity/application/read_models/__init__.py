"""Complementarity read models."""

from .ncp_read_models import NCPDiagnosticsReadModel, NCPSolutionReadModel

__all__ = ["NCPDiagnosticsReadModel", "NCPSolutionReadModel"]
