"""
Bounded Context DI Containers - Composition Root.

Structure:
──────────
bootstrapper/containers/contexts/
├── __init__.py              # This file - exports all containers
├── cone_geometry.py         # ConeGeometryContainer
├── order_properties.py      # OrderPropertiesContainer
└── complementarity.py       # ComplementarityContainer
"""

from .complementarity import ComplementarityContainer
from .cone_geometry import ConeGeometryContainer
from .order_properties import OrderPropertiesContainer

__all__ = [
    "ComplementarityContainer",
    "ConeGeometryContainer",
    "OrderPropertiesContainer",
]
