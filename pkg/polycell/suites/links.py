"""
Link suite: the link of a product at a vertex pair is the product of links.
"""

import logging
from typing import List

from polycell.corpus.instances import describe, random_complex, trial_rng
from polycell.models.polycomplex import link
from polycell.services.complex_products import complex_tensor_product
from polycell.services.graph_products import tensor_product
from polycell.services.symmetry import graph_isomorphism
from polycell.suites.base import BaseSuite, CheckOutcome, SuiteInstance

logger = logging.getLogger(__name__)


class LinkSuite(BaseSuite):
    suite_id = "e8"
    title = "links of a tensor product are tensor products of links"

    max_vertices = 6
    max_edges = 6
    max_faces = 3

    def instances(self) -> List[SuiteInstance]:
        instances = []
        for trial in range(self.trials):
            rng = trial_rng(self.seed, trial)
            x = random_complex(rng, self.max_vertices, self.max_edges, self.max_faces)
            y = random_complex(rng, self.max_vertices, self.max_edges, self.max_faces)
            instances.append(
                SuiteInstance(
                    name=f"random pair {trial}",
                    construction=describe(
                        self.seed,
                        trial,
                        "random_complex x2",
                        max_vertices=self.max_vertices,
                        max_edges=self.max_edges,
                        max_faces=self.max_faces,
                    ),
                    inputs={"x": x, "y": y},
                )
            )
        return instances

    def check(self, instance: SuiteInstance) -> CheckOutcome:
        x, y = instance.inputs["x"], instance.inputs["y"]
        info = complex_tensor_product(x, y)
        checked = 0
        for v in x.skeleton.vertices:
            left = link(x, v).graph
            for u in y.skeleton.vertices:
                expected = tensor_product(left, link(y, u).graph).graph
                actual = link(info.complex, info.graph_product.vertex_of(v, u)).graph
                if graph_isomorphism(expected, actual) is None:
                    return CheckOutcome(
                        False,
                        f"link at ({v},{u}) is not the product of the factor links",
                        {"product": info.complex},
                    )
                checked += 1
        return CheckOutcome(True, f"{checked} vertex pairs")
