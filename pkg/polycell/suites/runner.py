"""
Synchronous entry points that drive the asynchronous suite runs.
"""

import asyncio
import logging
import time
from typing import Optional

from polycell.core.errors import BadParameter
from polycell.schemas.report import VerificationReport
from polycell.suites.registry import SUITES, get_suite

logger = logging.getLogger(__name__)


def run_suite(
    suite_id: str,
    seed: Optional[int] = None,
    trials: Optional[int] = None,
    workers: Optional[int] = None,
    timing: bool = False,
) -> VerificationReport:
    """Run one registered suite; wall-clock time is reported only with ``timing``."""
    suite = get_suite(suite_id, seed=seed, trials=trials)
    if suite is None:
        raise BadParameter(f"unknown suite {suite_id!r}; known: {', '.join(SUITES)}")
    started = time.perf_counter()
    report = asyncio.run(suite.run(workers))
    if timing:
        report.wall_clock = round(time.perf_counter() - started, 3)
    return report
