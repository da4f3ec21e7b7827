"""Evaluates a check's samples, optionally across a thread pool."""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional


@dataclass(frozen=True)
class SampleOutcome:
    violation: float
    witness: Dict[str, Any]


Evaluate = Callable[[int], SampleOutcome]

# Candidate witnesses are re-measured with solver_tol divided by this factor.
WITNESS_TIGHTENING = 10.0


@dataclass(frozen=True)
class SampleSummary:
    max_violation: float
    witness: Optional[Dict[str, Any]]


def run_samples(
    evaluate: Evaluate,
    samples: int,
    membership_tol: float,
    workers: int = 1,
    confirm: Optional[Evaluate] = None,
) -> SampleSummary:
    """
    Evaluate every sample index and merge in index order.

    A sample exceeding ``membership_tol`` is re-evaluated with ``confirm``
    (the same sample at a tighter solver tolerance) and the confirmed outcome
    replaces it, so solver noise never becomes a witness. The witness is the
    lowest-index confirmed sample whose violation exceeds ``membership_tol``.
    The summary does not depend on ``workers``.
    """
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            outcomes = list(executor.map(evaluate, range(samples)))
    else:
        outcomes = [evaluate(index) for index in range(samples)]

    max_violation = 0.0
    witness = None
    for index, outcome in enumerate(outcomes):
        if confirm is not None and outcome.violation > membership_tol:
            outcome = confirm(index)
        max_violation = max(max_violation, outcome.violation)
        if witness is None and outcome.violation > membership_tol:
            witness = outcome.witness
    return SampleSummary(max_violation=max_violation, witness=witness)
