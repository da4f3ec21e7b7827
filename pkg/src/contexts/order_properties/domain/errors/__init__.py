"""Order Properties error codes."""

from .property_error_codes import PropertyErrorCode, register_property_error_codes

__all__ = ["PropertyErrorCode", "register_property_error_codes"]
