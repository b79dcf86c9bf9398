"""
Homomorphism count suite: counts into a product multiply, and every edge
has two ways of mapping onto a loop.
"""

from typing import List

from polycell.corpus import builders
from polycell.corpus.instances import describe, random_multigraph, trial_rng
from polycell.services.graph_products import (
    count_graph_homomorphisms,
    enumerate_graph_homomorphisms,
    tensor_product,
)
from polycell.suites.base import BaseSuite, CheckOutcome, SuiteInstance


class HomCountSuite(BaseSuite):
    suite_id = "e3a"
    title = "|Hom(G, A x B)| = |Hom(G, A)| |Hom(G, B)|"

    def instances(self) -> List[SuiteInstance]:
        instances = [
            SuiteInstance(
                "K3 into K3 x K3",
                "complete(3) -> complete(3) x complete(3)",
                {
                    "source": builders.complete(3),
                    "a": builders.complete(3),
                    "b": builders.complete(3),
                },
                {"kind": "product", "expected": 36},
            )
        ]
        for trial in range(self.trials):
            rng = trial_rng(self.seed, trial)
            graph = random_multigraph(rng, max_vertices=4, max_edges=4)
            instances.append(
                SuiteInstance(
                    name=f"loop target {trial}",
                    construction=describe(self.seed, trial, "random_multigraph", max_edges=4),
                    inputs={"source": graph},
                    params={"kind": "loop"},
                )
            )
        for trial in range(self.trials):
            rng = trial_rng(self.seed, self.trials + trial)
            graphs = {
                name: random_multigraph(rng, max_vertices=3, max_edges=3)
                for name in ("source", "a", "b")
            }
            instances.append(
                SuiteInstance(
                    name=f"random triple {trial}",
                    construction=describe(
                        self.seed, self.trials + trial, "random_multigraph x3", max_edges=3
                    ),
                    inputs=graphs,
                    params={"kind": "product"},
                )
            )
        return instances

    def check(self, instance: SuiteInstance) -> CheckOutcome:
        source = instance.inputs["source"]
        if instance.params["kind"] == "loop":
            count = count_graph_homomorphisms(source, builders.loop())
            expected = 2 ** len(source.edges)
            if count != expected:
                return CheckOutcome(False, f"{count} homomorphisms to a loop, expected {expected}")
            return CheckOutcome(True, f"{count} homomorphisms to a loop")

        a, b = instance.inputs["a"], instance.inputs["b"]
        product = tensor_product(a, b).graph
        count = count_graph_homomorphisms(source, product)
        expected = count_graph_homomorphisms(source, a) * count_graph_homomorphisms(source, b)
        if count != expected:
            detail = f"{count} homomorphisms into the product, expected {expected}"
            return CheckOutcome(False, detail)
        if "expected" in instance.params:
            listed = len(enumerate_graph_homomorphisms(source, product))
            if not count == listed == instance.params["expected"]:
                return CheckOutcome(
                    False,
                    f"count {count}, enumeration {listed}, expected {instance.params['expected']}",
                )
        return CheckOutcome(True, f"{count} homomorphisms into the product")
