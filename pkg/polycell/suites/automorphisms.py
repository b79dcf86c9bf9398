"""
Cartesian automorphism suites: automorphism groups of products generated by
factor automorphisms and swaps of isomorphic factors.
"""

import logging
from typing import List

from polycell.corpus import builders
from polycell.models.multigraph import components
from polycell.models.polycomplex import component_complex
from polycell.services.complex_products import product_chain
from polycell.services.symmetry import cartesian_subgroup, complex_automorphism_group
from polycell.suites.base import BaseSuite, CheckOutcome, SuiteInstance
from polycell.suites.factorization import COMPLEX_CASES

logger = logging.getLogger(__name__)


def compare_with_cartesian(factors, component_only: bool) -> CheckOutcome:
    """Compare Aut of the product, or of each of its components, with the Cartesian subgroup.

    The first component whose groups differ is reported as the counterexample.
    """
    chain = product_chain(factors)
    if component_only:
        parts = [
            (component_complex(chain.complex, part.vertices), part.vertices)
            for part in components(chain.complex.skeleton)
        ]
    else:
        parts = [(chain.complex, None)]
    orders = []
    for k, (x, keep) in enumerate(parts):
        where = f"component {k}: " if component_only else ""
        group = complex_automorphism_group(x)
        cartesian = cartesian_subgroup(chain.factors, chain, restrict_to=keep)
        if not cartesian.is_subgroup_of(group):
            detail = f"{where}a Cartesian element is not an automorphism"
            return CheckOutcome(False, detail, {"product": x})
        if cartesian.order != group.order:
            detail = f"{where}Aut has order {group.order}, Cartesian subgroup {cartesian.order}"
            return CheckOutcome(False, detail, {"product": x})
        orders.append(group.order)
    if component_only:
        return CheckOutcome(True, f"{len(orders)} components, orders {orders}")
    return CheckOutcome(True, f"order {orders[0]}")


class CartesianAutomorphismSuite(BaseSuite):
    suite_id = "g12"
    title = "automorphisms of prime factorized complexes are Cartesian"

    def instances(self) -> List[SuiteInstance]:
        instances = []
        for name, construction, build in COMPLEX_CASES:
            factors = build()
            inputs = {f"factor{k}": f for k, f in enumerate(factors)}
            instances.append(SuiteInstance(name, construction, inputs))
        return instances

    def check(self, instance: SuiteInstance) -> CheckOutcome:
        factors = [instance.inputs[k] for k in sorted(instance.inputs)]
        return compare_with_cartesian(factors, component_only=False)


class EvenCycleSuite(BaseSuite):
    suite_id = "h2"
    title = "components of products of even cycles have Cartesian automorphisms"

    cases = [(6, 2), (8, 2), (6, 3)]

    def instances(self) -> List[SuiteInstance]:
        instances = []
        for length, m in self.cases:
            cycles = {f"factor{k}": builders.cycle(length) for k in range(m)}
            instances.append(
                SuiteInstance(
                    name=f"C{length}^{m}",
                    construction=" x ".join([f"cycle({length})"] * m),
                    inputs=cycles,
                )
            )
        return instances

    def check(self, instance: SuiteInstance) -> CheckOutcome:
        factors = [instance.inputs[k] for k in sorted(instance.inputs)]
        return compare_with_cartesian(factors, component_only=True)
