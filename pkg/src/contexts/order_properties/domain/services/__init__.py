"""Order Properties domain services."""

from .checks import (
    LATTICIAL_NOTE,
    SUBADDITIVE_BUDGET_FACTOR,
    check_cross_subadditive,
    check_duality,
    check_invariance,
    check_isotone,
    check_subadditive,
)
from .reverify import reverify_witness
from .runner import WITNESS_TIGHTENING, SampleOutcome, SampleSummary, run_samples
from .sampling import (
    SampleStream,
    log_uniform_radius,
    sample_cone,
    sample_gaussian,
    sample_rng,
)
from .violations import (
    invariance_violation,
    isotone_violation,
    lattice_violation,
    subadditive_violation,
)

__all__ = [
    "LATTICIAL_NOTE",
    "SUBADDITIVE_BUDGET_FACTOR",
    "check_cross_subadditive",
    "check_duality",
    "check_invariance",
    "check_isotone",
    "check_subadditive",
    "reverify_witness",
    "WITNESS_TIGHTENING",
    "SampleOutcome",
    "SampleSummary",
    "run_samples",
    "SampleStream",
    "log_uniform_radius",
    "sample_cone",
    "sample_gaussian",
    "sample_rng",
    "invariance_violation",
    "isotone_violation",
    "lattice_violation",
    "subadditive_violation",
]
