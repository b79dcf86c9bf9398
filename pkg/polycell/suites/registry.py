"""
Registry of verification suites, keyed by the id used on the command line.
"""

from typing import Dict, List, Optional, Type

from polycell.suites.automorphisms import CartesianAutomorphismSuite, EvenCycleSuite
from polycell.suites.base import BaseSuite
from polycell.suites.blocks import BlockGraphSuite, BlockIncidenceSuite, FaceBlockSuite
from polycell.suites.components import ComponentSuite
from polycell.suites.factorization import ComplexFactorizationSuite, GraphFactorizationSuite
from polycell.suites.homcounts import HomCountSuite
from polycell.suites.links import LinkSuite
from polycell.suites.transitivity import FlagTransitivitySuite

SUITES: Dict[str, Type[BaseSuite]] = {
    # Products and links
    "e3a": HomCountSuite,
    "e8": LinkSuite,
    "e9": FlagTransitivitySuite,
    # Factorization and automorphisms
    "bf": ComponentSuite,
    "g3": GraphFactorizationSuite,
    "g11": ComplexFactorizationSuite,
    "g12": CartesianAutomorphismSuite,
    # Even faces
    "h2": EvenCycleSuite,
    "h6": FaceBlockSuite,
    "h8": BlockIncidenceSuite,
    "blockgraph": BlockGraphSuite,
}


def get_suite(
    suite_id: str, seed: Optional[int] = None, trials: Optional[int] = None
) -> Optional[BaseSuite]:
    suite_class = SUITES.get(suite_id)
    return suite_class(seed=seed, trials=trials) if suite_class else None


def list_suites() -> List[BaseSuite]:
    return [suite_class() for suite_class in SUITES.values()]
