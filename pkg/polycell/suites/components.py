"""
Component suite: the tensor product of connected simple graphs has two
components when both are bipartite and is connected otherwise.
"""

from itertools import product
from typing import List

from polycell.corpus.instances import describe, random_connected_simple_graph, trial_rng
from polycell.models.multigraph import components, is_bipartite
from polycell.services.graph_products import tensor_product
from polycell.suites.base import BaseSuite, CheckOutcome, SuiteInstance

KINDS = list(product((True, False), repeat=2))


class ComponentSuite(BaseSuite):
    suite_id = "bf"
    title = "component count of tensor products of connected simple graphs"

    max_vertices = 8

    def instances(self) -> List[SuiteInstance]:
        instances = []
        for trial in range(self.trials):
            rng = trial_rng(self.seed, trial)
            graphs = {}
            sizes = {}
            for name, bipartite in zip(("g", "h"), KINDS[trial % len(KINDS)]):
                low = 2 if bipartite else 3
                sizes[name] = int(rng.integers(low, self.max_vertices + 1))
                graphs[name] = random_connected_simple_graph(rng, sizes[name], bipartite)
            kinds = ["bipartite" if b else "non-bipartite" for b in KINDS[trial % len(KINDS)]]
            instances.append(
                SuiteInstance(
                    name=f"{kinds[0]} x {kinds[1]} ({sizes['g']}, {sizes['h']} vertices)",
                    construction=describe(
                        self.seed, trial, "random_connected_simple_graph x2", **sizes
                    ),
                    inputs=graphs,
                )
            )
        return instances

    def check(self, instance: SuiteInstance) -> CheckOutcome:
        g, h = instance.inputs["g"], instance.inputs["h"]
        expected = 2 if is_bipartite(g) and is_bipartite(h) else 1
        found = len(components(tensor_product(g, h).graph))
        if found != expected:
            return CheckOutcome(False, f"expected {expected} components, found {found}")
        return CheckOutcome(True, f"{found} component(s)")
