"""Cone Geometry error codes."""

from .cone_error_codes import ConeErrorCode, register_cone_error_codes

__all__ = ["ConeErrorCode", "register_cone_error_codes"]
