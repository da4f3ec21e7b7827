"""Property falsifier commands (check-*)."""

from .commands import ROUTES, register_commands
from .controller import OrderPropertiesController

__all__ = ["OrderPropertiesController", "ROUTES", "register_commands"]
