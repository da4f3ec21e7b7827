"""Complementarity error codes."""

from .ncp_error_codes import NCPErrorCode, register_ncp_error_codes

__all__ = ["NCPErrorCode", "register_ncp_error_codes"]
