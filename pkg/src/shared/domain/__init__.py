from .result import Error, Result

__all__ = [
    "Error",
    "Result",
]
