"""Shared plumbing of the property-check handlers."""

from typing import Callable, Optional

from contexts.cone_geometry.domain.value_objects import Tolerance
from shared.application.base_query import Query
from shared.application.ports.logger import ILogger
from shared.domain.result import Result
from shared.errors.exceptions import DomainException

from ...domain.services import reverify_witness
from ...domain.value_objects import PropertyReport
from ..read_models import PropertyReportReadModel


class PropertyCheckQuery(Query):
    """
    Attributes:
        samples: Sample budget (>= 1)
        seed: PRNG seed (>= 0); identical seeds reproduce identical reports
        tolerance: Overrides the configured tolerance when given
        workers: Overrides the configured worker count when given
        reverify: Replay a falsified witness at 10x tighter solver_tol
    """

    samples: int
    seed: int
    tolerance: Optional[Tolerance] = None
    workers: Optional[int] = None
    reverify: bool = False


class PropertyCheckHandlerBase:
    def __init__(self, logger: ILogger, default_tolerance: Tolerance, default_workers: int = 1):
        self._logger = logger
        self._default_tolerance = default_tolerance
        self._default_workers = default_workers

    def _run(
        self,
        query: PropertyCheckQuery,
        check: Callable[[Tolerance, int], PropertyReport],
    ) -> Result[PropertyReportReadModel]:
        tol = query.tolerance or self._default_tolerance
        workers = query.workers or self._default_workers
        self._logger.set_context(seed=query.seed, samples=query.samples)
        try:
            report = check(tol, workers)
            reverified = None
            if query.reverify and report.falsified:
                reverified = reverify_witness(report, tol)
            self._logger.debug(
                "Property check finished",
                extra={
                    "property": report.property.value,
                    "verdict": report.verdict.value,
                    "max_violation": report.max_violation,
                    "workers": workers,
                },
            )
        except DomainException as e:
            self._logger.warning("Property check failed", extra={"code": e.error_code})
            return Result.from_exception(e)
        finally:
            self._logger.unbind_context("seed", "samples")

        return Result.ok(PropertyReportReadModel.from_domain(report, reverified))
