"""
Pytest configuration and fixtures.
Contains shared fixtures for all tests.
"""

from typing import Generator, List

import numpy as np
import pytest
from hypothesis import settings

from bootstrapper import ApplicationContainer, create_application
from contexts.cone_geometry.domain import DEFAULT_TOLERANCE, ConeDescriptor, Tolerance
from contexts.cone_geometry.domain.services.catalog import example_cones
from shared.application.ports import IQueryBus
from shared.presentation import configure_logger

settings.register_profile("conelab", max_examples=60, deadline=None)
settings.load_profile("conelab")


@pytest.fixture
def tol() -> Tolerance:
    """Default numerical tolerances."""
    return DEFAULT_TOLERANCE


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator; every test gets the same stream."""
    return np.random.default_rng(20240611)


@pytest.fixture(scope="session")
def catalog() -> List[ConeDescriptor]:
    """One example cone per descriptor variant (8 cones)."""
    return example_cones()


@pytest.fixture
def application() -> Generator[ApplicationContainer, None, None]:
    """
    Fully wired container: error codes registered, handlers on the query bus.
    """
    container = create_application("testing")
    yield container
    configure_logger(None)


@pytest.fixture
def query_bus(application: ApplicationContainer) -> IQueryBus:
    return application.infrastructure.query_bus()
