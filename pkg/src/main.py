"""``conelab`` console script; ``python src/main.py <command> ...`` works too."""

import sys
from typing import Optional, Sequence

from presentation.cli import run


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
