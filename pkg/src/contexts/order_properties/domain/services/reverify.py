"""Replays a falsified report's witness at a tighter solver tolerance."""

from contexts.cone_geometry.domain.value_objects import (
    DEFAULT_TOLERANCE,
    OpKind,
    Tolerance,
    as_vector,
)

from ..exceptions import NotFalsifiedException
from ..value_objects import PropertyKind, PropertyReport
from .runner import WITNESS_TIGHTENING
from .violations import isotone_violation, lattice_violation, subadditive_violation


def reverify_witness(
    report: PropertyReport, tol: Tolerance = DEFAULT_TOLERANCE, factor: float = WITNESS_TIGHTENING
) -> float:
    """
    Recompute the witness from its recorded inputs with solver_tol divided by
    ``factor`` and return the fresh relative violation.

    Raises:
        NotFalsifiedException: the report has no witness
    """
    if not report.falsified or report.witness is None:
        raise NotFalsifiedException(PropertyKind(report.property).value)

    tight = tol.tightened(factor)
    witness = report.witness
    dim = report.projection_cone.dim

    match PropertyKind(report.property):
        case PropertyKind.DUALITY:
            source = next(sub for sub in report.sub_reports if sub.falsified)
            return reverify_witness(source, tol, factor)
        case PropertyKind.ISOTONE:
            outcome = isotone_violation(
                as_vector(witness["u"], dim, "u"),
                as_vector(witness["k"], dim, "k"),
                report.projection_cone,
                report.order_cone,
                tight,
            )
        case PropertyKind.SUBADDITIVE | PropertyKind.CROSS_SUBADDITIVE:
            outcome = subadditive_violation(
                as_vector(witness["u"], dim, "u"),
                as_vector(witness["v"], dim, "v"),
                report.projection_cone,
                report.order_cone,
                tight,
            )
        case PropertyKind.INVARIANCE:
            outcome = lattice_violation(
                as_vector(witness["x"], dim, "x"),
                as_vector(witness["y"], dim, "y"),
                OpKind(witness["op"]),
                report.projection_cone,
                report.order_cone,
                tight,
            )
    return outcome.violation
