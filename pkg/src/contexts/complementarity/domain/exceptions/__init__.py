"""Complementarity domain exceptions."""

from .ncp_exceptions import MalformedProblemException, NumericalBlowupException

__all__ = ["MalformedProblemException", "NumericalBlowupException"]
