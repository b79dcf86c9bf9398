"""
Bounded counterexample search for the Cartesian automorphism conjectures on
products of elementary ordinary complexes with even faces of length >= 6.

``h11`` asks for bipartite factor skeletons, ``h12`` for factors with surface
structure. Absence of a counterexample is evidence within the family only.
"""

import asyncio
import itertools
import logging
import time
from typing import Callable, Dict, List, Optional

from polycell.core.config import settings
from polycell.core.errors import BadParameter, BudgetExceeded
from polycell.corpus import builders
from polycell.corpus.instances import make_rng, relabeled
from polycell.models.multigraph import is_bipartite
from polycell.models.polycomplex import (
    Complex,
    has_surface_structure,
    is_elementary,
    is_ordinary,
    uniform_face_length,
)
from polycell.schemas.report import ConjectureReport, InstanceStatus
from polycell.suites.automorphisms import compare_with_cartesian
from polycell.suites.base import BaseSuite, CheckOutcome, SuiteInstance

logger = logging.getLogger(__name__)

MAX_FACTOR_VERTICES = 24

# Factor pools and the largest factor count per family
FAMILIES: Dict[str, Dict] = {
    "small": {
        "pool": {
            "hexagon": lambda: builders.polygon(6),
            "hexagon chain 2": lambda: builders.polygon_chain(2, 6),
        },
        "max_factors": 2,
        "max_component_vertices": 60,
        "extra": [("hexagon", "hexagon", "hexagon")],
    },
    "medium": {
        "pool": {
            "hexagon": lambda: builders.polygon(6),
            "hexagon chain 2": lambda: builders.polygon_chain(2, 6),
            "hexagon chain 3": lambda: builders.polygon_chain(3, 6),
            "hexagon necklace 4": lambda: builders.necklace(4, 6),
        },
        "max_factors": 3,
        "max_component_vertices": 400,
        "extra": [],
    },
}


def _hypotheses(x: Complex) -> bool:
    length = uniform_face_length(x)
    return length >= 6 and length % 2 == 0 and is_elementary(x) and is_ordinary(x)


CONJECTURES: Dict[str, Callable[[Complex], bool]] = {
    "h11": lambda x: _hypotheses(x) and is_bipartite(x.skeleton),
    "h12": lambda x: _hypotheses(x) and has_surface_structure(x),
}


class ConjectureSearch(BaseSuite):
    """Compare Aut of product components with their Cartesian subgroups."""

    def __init__(self, conjecture: str, family: str, seed: Optional[int] = None):
        if conjecture not in CONJECTURES:
            known = ", ".join(CONJECTURES)
            raise BadParameter(f"unknown conjecture {conjecture!r}; known: {known}")
        if family not in FAMILIES:
            raise BadParameter(f"unknown family {family!r}; known: {', '.join(FAMILIES)}")
        super().__init__(seed=seed, trials=0)
        self.conjecture = conjecture
        self.family = family
        self.suite_id = conjecture
        self.title = f"conjecture {conjecture} over the {family} family"

    def instances(self) -> List[SuiteInstance]:
        bounds = FAMILIES[self.family]
        holds = CONJECTURES[self.conjecture]
        pool = {name: build() for name, build in bounds["pool"].items()}
        names = [
            name
            for name, factor in pool.items()
            if holds(factor) and len(factor.skeleton.vertices) <= MAX_FACTOR_VERTICES
        ]
        combos = [
            combo
            for size in range(2, bounds["max_factors"] + 1)
            for combo in itertools.combinations_with_replacement(names, size)
        ]
        combos += [combo for combo in bounds["extra"] if all(n in names for n in combo)]
        rng = make_rng(self.seed)
        instances = []
        for combo in combos:
            factors = {f"factor{k}": relabeled(rng, pool[name]) for k, name in enumerate(combo)}
            instances.append(
                SuiteInstance(
                    name=" x ".join(combo),
                    construction=f"{' x '.join(combo)} relabeled with seed {self.seed}",
                    inputs=factors,
                )
            )
        return instances

    def check(self, instance: SuiteInstance) -> CheckOutcome:
        factors = [instance.inputs[k] for k in sorted(instance.inputs)]
        size = 1
        for f in factors:
            size *= len(f.skeleton.vertices)
        if all(is_bipartite(f.skeleton) for f in factors):
            size //= 2 ** (len(factors) - 1)
        limit = FAMILIES[self.family]["max_component_vertices"]
        if size > limit:
            raise BudgetExceeded(f"component of {size} vertices exceeds the family bound {limit}")
        return compare_with_cartesian(factors, component_only=True)

    async def search(self, workers: Optional[int] = None) -> ConjectureReport:
        report = await self.run(workers)
        counterexample = next(
            (r for r in report.instances if r.status == InstanceStatus.FAIL), None
        )
        verdict = (
            "counterexample found" if counterexample else "no counterexample within bounds"
        )
        return ConjectureReport(
            conjecture=self.conjecture,
            family=self.family,
            seed=self.seed,
            instances=report.instances,
            counterexample=counterexample,
            verdict=verdict,
        )


def run_conjecture(
    conjecture: str,
    family: str = "small",
    seed: Optional[int] = None,
    workers: Optional[int] = None,
    timing: bool = False,
) -> ConjectureReport:
    search = ConjectureSearch(conjecture, family, seed)
    started = time.perf_counter()
    report = asyncio.run(search.search(workers or settings.SUITE_WORKERS))
    if report.counterexample is not None:
        logger.error(f"{conjecture}: counterexample {report.counterexample.name}")
    if timing:
        report.wall_clock = round(time.perf_counter() - started, 3)
    return report
