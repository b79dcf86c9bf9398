"""
Unique factorization suites for graphs and for complexes.
"""

import logging
from typing import List, Sequence

from polycell.corpus import builders
from polycell.corpus.instances import describe, random_connected_simple_graph, trial_rng
from polycell.models.multigraph import Edge, MultiGraph
from polycell.services.complex_products import product_chain
from polycell.services.factorization import (
    complex_prime_factorization,
    graph_prime_factorization,
)
from polycell.services.graph_products import direct_product_s0, tensor_product
from polycell.services.symmetry import complex_isomorphism, graph_isomorphism
from polycell.suites.base import BaseSuite, CheckOutcome, Item, SuiteInstance

logger = logging.getLogger(__name__)


def looped_edge() -> MultiGraph:
    """K2 with a loop at one end: a two-vertex prime of the looped class."""
    return MultiGraph.build(["a", "b"], [Edge("ab", ("a", "b")), Edge("aa", ("a", "a"))])


def _match_factors(found: Sequence[Item], expected: Sequence[Item], same) -> bool:
    """Multiset equality of factors up to isomorphism."""
    if len(found) != len(expected):
        return False
    remaining = list(expected)
    for factor in found:
        for k, other in enumerate(remaining):
            if same(factor, other) is not None:
                del remaining[k]
                break
        else:
            return False
    return True


class GraphFactorizationSuite(BaseSuite):
    suite_id = "g3"
    title = "unique prime factorization of connected non-bipartite graphs"

    def instances(self) -> List[SuiteInstance]:
        instances = [
            SuiteInstance(
                "K3 x looped K2",
                "complete(3) x looped_edge() in S0",
                {"a": builders.complete(3), "b": looped_edge()},
                {"class": "S0"},
            ),
            SuiteInstance(
                "looped K2 x looped K2",
                "looped_edge() x looped_edge() in S0",
                {"a": looped_edge(), "b": looped_edge()},
                {"class": "S0"},
            ),
        ]
        for trial in range(self.trials):
            rng = trial_rng(self.seed, trial)
            sizes = [int(rng.choice([3, 5])) for _ in range(2)]
            a, b = (random_connected_simple_graph(rng, n, bipartite=False) for n in sizes)
            instances.append(
                SuiteInstance(
                    name=f"primes on {sizes[0]} and {sizes[1]} vertices",
                    construction=describe(
                        self.seed, trial, "random_connected_simple_graph x2", n=sizes
                    ),
                    inputs={"a": a, "b": b},
                    params={"class": "S"},
                )
            )
        return instances

    def check(self, instance: SuiteInstance) -> CheckOutcome:
        a, b = instance.inputs["a"], instance.inputs["b"]
        graph_class = instance.params["class"]
        g = direct_product_s0(a, b) if graph_class == "S0" else tensor_product(a, b).graph
        result = graph_prime_factorization(g, graph_class)
        if not result.verify():
            return CheckOutcome(False, "certificate is not an isomorphism", {"product": g})
        if not _match_factors(result.factors, [a, b], graph_isomorphism):
            sizes = [len(f.vertices) for f in result.factors]
            return CheckOutcome(False, f"factors on {sizes} vertices differ from the input primes")
        return CheckOutcome(True, f"{len(result.factors)} prime factors recovered")


COMPLEX_CASES = [
    (
        "triangle x triangle",
        "polygon(3) x polygon(3)",
        lambda: [builders.polygon(3), builders.polygon(3)],
    ),
    (
        "triangle x tetrahedron",
        "polygon(3) x tetrahedron()",
        lambda: [builders.polygon(3), builders.tetrahedron()],
    ),
    (
        "pentagon x pentagon",
        "polygon(5) x polygon(5)",
        lambda: [builders.polygon(5), builders.polygon(5)],
    ),
    (
        "tetrahedron x tetrahedron",
        "tetrahedron() x tetrahedron()",
        lambda: [builders.tetrahedron(), builders.tetrahedron()],
    ),
]


class ComplexFactorizationSuite(BaseSuite):
    suite_id = "g11"
    title = "unique prime factorization of simple complexes"

    def instances(self) -> List[SuiteInstance]:
        instances = []
        for name, construction, build in COMPLEX_CASES:
            factors = build()
            inputs = {f"factor{k}": f for k, f in enumerate(factors)}
            instances.append(SuiteInstance(name, construction, inputs))
        return instances

    def check(self, instance: SuiteInstance) -> CheckOutcome:
        factors = [instance.inputs[k] for k in sorted(instance.inputs)]
        x = product_chain(factors).complex
        result = complex_prime_factorization(x)
        if not result.verify():
            return CheckOutcome(False, "certificate is not an isomorphism", {"product": x})
        if not _match_factors(result.factors, factors, complex_isomorphism):
            return CheckOutcome(False, "prime factors differ from the input", {"product": x})
        return CheckOutcome(True, f"{len(result.factors)} prime factors recovered")
