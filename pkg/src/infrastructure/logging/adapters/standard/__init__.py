from .adapter import StandardLoggerAdapter

__all__ = ["StandardLoggerAdapter"]
