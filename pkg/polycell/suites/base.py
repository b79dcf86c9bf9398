"""
Base class for all verification suites.
Each suite builds its instances up front and checks them one at a time,
concurrently, merging results back in instance order.
"""

import asyncio
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Union

from polycell.core.config import settings
from polycell.core.errors import BudgetExceeded, TooLarge
from polycell.formats.pcc import dumps
from polycell.models.multigraph import MultiGraph
from polycell.models.polycomplex import Complex
from polycell.schemas.report import InstanceResult, InstanceStatus, VerificationReport
from polycell.services.complex_products import as_complex

logger = logging.getLogger(__name__)

Item = Union[Complex, MultiGraph]


@dataclass
class SuiteInstance:
    name: str
    construction: str
    inputs: Dict[str, Item] = field(default_factory=dict)
    params: Dict[str, Any] = field(default_factory=dict)


@dataclass
class CheckOutcome:
    passed: bool
    detail: Optional[str] = None
    witnesses: Dict[str, Item] = field(default_factory=dict)


def documents_for(items: Dict[str, Item]) -> Dict[str, str]:
    """Self-contained ``.pcc`` reproductions of the given complexes and graphs."""
    return {name: dumps(as_complex(item)) for name, item in sorted(items.items())}


class BaseSuite(ABC):
    """Base class for all verification suites."""

    suite_id: str = ""
    title: str = ""

    def __init__(self, seed: Optional[int] = None, trials: Optional[int] = None):
        self.seed = settings.DEFAULT_SEED if seed is None else seed
        self.trials = settings.DEFAULT_TRIALS if trials is None else trials
        self.stats = {"passed": 0, "failed": 0, "skipped": 0, "errors": 0}

    @abstractmethod
    def instances(self) -> List[SuiteInstance]:
        """
        Build the fixture and seeded random instances of this suite.

        Returns:
            Instances in canonical order
        """
        pass

    @abstractmethod
    def check(self, instance: SuiteInstance) -> CheckOutcome:
        """
        Check the suite's property on one instance.

        Args:
            instance: One of the instances built by ``instances``

        Returns:
            Outcome with a failure detail and witness complexes when it fails
        """
        pass

    def run_instance(self, index: int, instance: SuiteInstance) -> InstanceResult:
        """Check one instance; budget overruns skip it and other errors are recorded."""
        base = dict(index=index, name=instance.name, construction=instance.construction)
        try:
            outcome = self.check(instance)
        except (BudgetExceeded, TooLarge) as e:
            logger.warning(f"{self.suite_id}: skipped {instance.name}: {e}")
            return InstanceResult(**base, status=InstanceStatus.SKIPPED, detail=str(e))
        except Exception as e:
            logger.error(f"{self.suite_id}: error on {instance.name}: {e}")
            return InstanceResult(
                **base,
                status=InstanceStatus.ERROR,
                detail=f"{type(e).__name__}: {e}",
                documents=documents_for(instance.inputs),
            )
        if outcome.passed:
            return InstanceResult(**base, status=InstanceStatus.PASS, detail=outcome.detail)
        logger.warning(f"{self.suite_id}: {instance.name} failed: {outcome.detail}")
        return InstanceResult(
            **base,
            status=InstanceStatus.FAIL,
            detail=outcome.detail,
            documents=documents_for({**instance.inputs, **outcome.witnesses}),
        )

    def record(self, result: InstanceResult) -> None:
        key = {
            InstanceStatus.PASS: "passed",
            InstanceStatus.FAIL: "failed",
            InstanceStatus.SKIPPED: "skipped",
            InstanceStatus.ERROR: "errors",
        }[result.status]
        self.stats[key] += 1

    async def _guarded(
        self, semaphore: asyncio.Semaphore, index: int, instance: SuiteInstance
    ) -> InstanceResult:
        async with semaphore:
            return await asyncio.to_thread(self.run_instance, index, instance)

    async def run(self, workers: Optional[int] = None) -> VerificationReport:
        """
        Run the suite.

        Args:
            workers: Concurrent instance checks, defaults to SUITE_WORKERS

        Returns:
            Report with one result per instance, in instance order
        """
        logger.info(f"Starting suite {self.suite_id} (seed={self.seed}, trials={self.trials})")
        instances = self.instances()
        semaphore = asyncio.Semaphore(workers or settings.SUITE_WORKERS)
        outcomes = await asyncio.gather(
            *(self._guarded(semaphore, i, inst) for i, inst in enumerate(instances)),
            return_exceptions=True,
        )

        results = []
        for index, (instance, outcome) in enumerate(zip(instances, outcomes)):
            if isinstance(outcome, BaseException):
                logger.error(f"{self.suite_id}: worker failed on {instance.name}: {outcome}")
                outcome = InstanceResult(
                    index=index,
                    name=instance.name,
                    construction=instance.construction,
                    status=InstanceStatus.ERROR,
                    detail=str(outcome),
                )
            self.record(outcome)
            results.append(outcome)

        logger.info(f"Suite {self.suite_id} finished: {self.stats}")
        return VerificationReport(
            suite=self.suite_id,
            title=self.title,
            seed=self.seed,
            trials=self.trials,
            instances=results,
            **self.stats,
        )
