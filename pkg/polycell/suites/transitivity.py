"""
Flag-transitivity suite: products of flag-transitive complexes stay flag-transitive.
"""

from typing import List

from polycell.corpus import builders
from polycell.corpus.instances import describe, trial_rng
from polycell.services.complex_products import complex_tensor_product
from polycell.services.symmetry import is_flag_transitive
from polycell.suites.base import BaseSuite, CheckOutcome, SuiteInstance

FIXTURE_PAIRS = [
    (
        "triangle x triangle",
        "polygon(3) x polygon(3)",
        lambda: (builders.polygon(3), builders.polygon(3)),
    ),
    (
        "triangle x pentagon",
        "polygon(3) x polygon(5)",
        lambda: (builders.polygon(3), builders.polygon(5)),
    ),
    (
        "1-gon x square",
        "one_gon() x polygon(4)",
        lambda: (builders.one_gon(), builders.polygon(4)),
    ),
    (
        "tetrahedron x tetrahedron",
        "tetrahedron() x tetrahedron()",
        lambda: (builders.tetrahedron(), builders.tetrahedron()),
    ),
]


class FlagTransitivitySuite(BaseSuite):
    suite_id = "e9"
    title = "tensor products of flag-transitive complexes are flag-transitive"

    max_length = 6

    def instances(self) -> List[SuiteInstance]:
        instances = []
        for name, construction, build in FIXTURE_PAIRS:
            x, y = build()
            instances.append(SuiteInstance(name, construction, {"x": x, "y": y}))
        for trial in range(self.trials):
            rng = trial_rng(self.seed, trial)
            n, m = (int(k) for k in rng.integers(1, self.max_length + 1, size=2))
            instances.append(
                SuiteInstance(
                    name=f"{n}-gon x {m}-gon",
                    construction=describe(self.seed, trial, "polygon pair", n=n, m=m),
                    inputs={"x": builders.polygon(n), "y": builders.polygon(m)},
                )
            )
        return instances

    def check(self, instance: SuiteInstance) -> CheckOutcome:
        x, y = instance.inputs["x"], instance.inputs["y"]
        for name, factor in (("x", x), ("y", y)):
            if not is_flag_transitive(factor):
                return CheckOutcome(False, f"factor {name} is not flag-transitive")
        product = complex_tensor_product(x, y).complex
        if not is_flag_transitive(product):
            return CheckOutcome(False, "product has more than one flag orbit", {"product": product})
        return CheckOutcome(True, f"{len(product.flags)} flags in one orbit")
