"""
Per-context CLI commands.

Each context module registers its subcommands and returns the routes that
map a Command to a controller method.
"""

from . import complementarity, cone_geometry, order_properties

CONTEXT_COMMANDS = (cone_geometry, order_properties, complementarity)

__all__ = ["CONTEXT_COMMANDS"]
