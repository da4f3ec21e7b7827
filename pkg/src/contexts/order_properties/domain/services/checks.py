"""
Randomized falsifiers for isotonicity, subadditivity and invariance, and the
duality checker that runs two of them side by side.

An unfalsified verdict only means no sample violated the property.
"""

from typing import Callable, Tuple

from contexts.cone_geometry.domain.services import dual
from contexts.cone_geometry.domain.value_objects import (
    DEFAULT_TOLERANCE,
    ConeDescriptor,
    Tolerance,
)

from ..exceptions import ConeDimensionsDifferException, InvalidSamplingException
from ..value_objects import EVIDENCE_NOTE, PropertyKind, PropertyReport, Verdict
from .runner import WITNESS_TIGHTENING, Evaluate, SampleOutcome, SampleSummary, run_samples
from .sampling import SampleStream, sample_cone, sample_gaussian, sample_rng
from .violations import invariance_violation, isotone_violation, subadditive_violation

SUBADDITIVE_BUDGET_FACTOR = 4

LATTICIAL_NOTE = (
    "if the cone is pointed and generating, an isotone projection forces it to be "
    "latticial; latticiality itself is not tested"
)


def _validate(seed: int, samples: int, *cones: ConeDescriptor) -> None:
    if seed < 0 or samples < 1:
        raise InvalidSamplingException(seed, samples)
    dims = {cone.dim for cone in cones}
    if len(dims) > 1:
        raise ConeDimensionsDifferException(cones[0].dim, cones[-1].dim)


def _sample(
    evaluate_at: Callable[[Tolerance], Evaluate], samples: int, tol: Tolerance, workers: int
) -> SampleSummary:
    """Samples are drawn with ``tol``; candidate witnesses are re-measured at the tightened one."""
    return run_samples(
        evaluate_at(tol),
        samples,
        tol.membership_tol,
        workers,
        confirm=evaluate_at(tol.tightened(WITNESS_TIGHTENING)),
    )


def _report(
    kind: PropertyKind,
    summary: SampleSummary,
    samples: int,
    seed: int,
    projection_cone: ConeDescriptor,
    order_cone: ConeDescriptor,
    notes: Tuple[str, ...] = (EVIDENCE_NOTE,),
) -> PropertyReport:
    verdict = Verdict.FALSIFIED if summary.witness is not None else Verdict.UNFALSIFIED
    return PropertyReport(
        property=kind,
        verdict=verdict,
        samples=samples,
        seed=seed,
        max_violation=summary.max_violation,
        witness=summary.witness,
        projection_cone=projection_cone,
        order_cone=order_cone,
        notes=notes if verdict == Verdict.UNFALSIFIED else (),
    )


def _pair_check(
    kind: PropertyKind,
    stream: SampleStream,
    projection_cone: ConeDescriptor,
    order_cone: ConeDescriptor,
    samples: int,
    seed: int,
    tol: Tolerance,
    workers: int,
) -> PropertyReport:
    _validate(seed, samples, projection_cone, order_cone)
    dim = projection_cone.dim

    def evaluate_at(measure: Tolerance) -> Evaluate:
        def evaluate(index: int) -> SampleOutcome:
            rng = sample_rng(seed, stream, index)
            u = sample_gaussian(rng, dim)
            v = sample_gaussian(rng, dim)
            return subadditive_violation(u, v, projection_cone, order_cone, measure)

        return evaluate

    summary = _sample(evaluate_at, samples, tol, workers)
    return _report(kind, summary, samples, seed, projection_cone, order_cone)


def check_isotone(
    projection_cone: ConeDescriptor,
    order_cone: ConeDescriptor,
    samples: int,
    seed: int,
    tol: Tolerance = DEFAULT_TOLERANCE,
    workers: int = 1,
) -> PropertyReport:
    """
    Searches for u <=_K v with P_C v - P_C u outside K.

    u is a scaled gaussian and v = u + k with k drawn from the order cone K.
    """
    _validate(seed, samples, projection_cone, order_cone)
    dim = projection_cone.dim

    def evaluate_at(measure: Tolerance) -> Evaluate:
        def evaluate(index: int) -> SampleOutcome:
            rng = sample_rng(seed, SampleStream.ISOTONE, index)
            u = sample_gaussian(rng, dim)
            k = sample_cone(rng, order_cone, tol)
            return isotone_violation(u, k, projection_cone, order_cone, measure)

        return evaluate

    summary = _sample(evaluate_at, samples, tol, workers)
    notes: Tuple[str, ...] = (EVIDENCE_NOTE,)
    if projection_cone == order_cone:
        notes = (EVIDENCE_NOTE, LATTICIAL_NOTE)
    return _report(
        PropertyKind.ISOTONE, summary, samples, seed, projection_cone, order_cone, notes
    )


def check_subadditive(
    projection_cone: ConeDescriptor,
    order_cone: ConeDescriptor,
    samples: int,
    seed: int,
    tol: Tolerance = DEFAULT_TOLERANCE,
    workers: int = 1,
) -> PropertyReport:
    """Searches for gaussian pairs with P_C u + P_C v - P_C(u + v) outside K."""
    return _pair_check(
        PropertyKind.SUBADDITIVE,
        SampleStream.SUBADDITIVE,
        projection_cone,
        order_cone,
        samples,
        seed,
        tol,
        workers,
    )


def check_cross_subadditive(
    cone: ConeDescriptor,
    samples: int,
    seed: int,
    tol: Tolerance = DEFAULT_TOLERANCE,
    workers: int = 1,
) -> PropertyReport:
    """Subadditivity of P_K with respect to the order of L = dual(K)."""
    return _pair_check(
        PropertyKind.CROSS_SUBADDITIVE,
        SampleStream.CROSS_SUBADDITIVE,
        cone,
        dual(cone),
        samples,
        seed,
        tol,
        workers,
    )


def check_invariance(
    set_cone: ConeDescriptor,
    cone: ConeDescriptor,
    samples: int,
    seed: int,
    tol: Tolerance = DEFAULT_TOLERANCE,
    workers: int = 1,
) -> PropertyReport:
    """
    Draws pairs from ``set_cone`` and applies meet_K, join_K, meet_L, join_L;
    falsified when a result leaves ``set_cone``.
    """
    _validate(seed, samples, set_cone, cone)

    def evaluate_at(measure: Tolerance) -> Evaluate:
        def evaluate(index: int) -> SampleOutcome:
            rng = sample_rng(seed, SampleStream.INVARIANCE, index)
            x = sample_cone(rng, set_cone, tol)
            y = sample_cone(rng, set_cone, tol)
            return invariance_violation(x, y, set_cone, cone, measure)

        return evaluate

    summary = _sample(evaluate_at, samples, tol, workers)
    return _report(PropertyKind.INVARIANCE, summary, samples, seed, set_cone, cone)


def check_duality(
    cone: ConeDescriptor,
    samples: int,
    seed: int,
    tol: Tolerance = DEFAULT_TOLERANCE,
    workers: int = 1,
) -> PropertyReport:
    """
    Runs check_isotone(K, K) with ``samples`` and check_subadditive(L, L) with
    four times as many, L = dual(K).

    Agreeing sub-verdicts (both unfalsified or both falsified) give an
    unfalsified report. Disagreement is falsified and carries the falsified
    sub-report's witness under ``source``.
    """
    _validate(seed, samples, cone)
    dual_cone = dual(cone)

    isotone = check_isotone(cone, cone, samples, seed, tol, workers)
    subadditive = check_subadditive(
        dual_cone, dual_cone, SUBADDITIVE_BUDGET_FACTOR * samples, seed, tol, workers
    )

    if isotone.verdict == subadditive.verdict:
        verdict, max_violation, witness = Verdict.UNFALSIFIED, 0.0, None
        notes: Tuple[str, ...] = (EVIDENCE_NOTE,)
    else:
        falsified = isotone if isotone.falsified else subadditive
        verdict = Verdict.FALSIFIED
        max_violation = falsified.max_violation
        witness = {"source": falsified.property.value, **(falsified.witness or {})}
        notes = ("sub-verdicts disagree: a projection routine or tolerance is off",)

    return PropertyReport(
        property=PropertyKind.DUALITY,
        verdict=verdict,
        samples=samples,
        seed=seed,
        max_violation=max_violation,
        witness=witness,
        projection_cone=cone,
        order_cone=dual_cone,
        sub_reports=(isotone, subadditive),
        notes=notes,
    )
