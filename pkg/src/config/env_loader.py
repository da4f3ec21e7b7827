"""
Environment selection and ``.env`` loading.

The environment comes from ``--env``, else the ``ENVIRONMENT`` variable, else
``development``. Files are read from the working directory, later ones
overriding earlier ones:

    .env  →  .env.{environment}  →  .env.local  →  .env.{environment}.local

Loading happens once per process; repeated CLI runs inside one interpreter
(the end-to-end tests) reuse the first load.
"""

import os
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv

DEFAULT_ENVIRONMENT = "development"

_env_loaded = False


def env_files(environment: str, root: Path = Path(".")) -> List[Path]:
    names = [".env", f".env.{environment}", ".env.local", f".env.{environment}.local"]
    return [root / name for name in names]


def detect_environment() -> str:
    return os.getenv("ENVIRONMENT") or DEFAULT_ENVIRONMENT


def is_env_loaded() -> bool:
    return _env_loaded


def load_env_files(environment: Optional[str] = None, force: bool = False) -> List[str]:
    """Returns the paths actually loaded; empty when already loaded and not forced."""
    global _env_loaded
    if _env_loaded and not force:
        return []

    loaded = []
    for path in env_files(environment or detect_environment()):
        if path.is_file():
            load_dotenv(path, override=True)
            loaded.append(str(path))

    _env_loaded = True
    return loaded


def reset_env_state() -> None:
    global _env_loaded
    _env_loaded = False
