"""
Face block suites on products of even-faced factors.
"""

import logging
from functools import reduce
from typing import List

from polycell.corpus import builders
from polycell.models.multigraph import components
from polycell.models.polycomplex import component_complex
from polycell.services.blocks import (
    IncidenceVerdict,
    antipodal_sharing,
    block_graph,
    face_blocks_by_label,
    face_blocks_intrinsic,
    face_incidence_graph,
    incident_block_pairs,
    intrinsic_block_graph,
    verify_block_incidence_equiv,
)
from polycell.services.complex_products import product_chain
from polycell.services.graph_products import cartesian_product
from polycell.services.symmetry import graph_isomorphism
from polycell.suites.base import BaseSuite, CheckOutcome, SuiteInstance

logger = logging.getLogger(__name__)

# name, construction, builder of the factor list
HEXAGON_CASES = [
    ("hexagon^2", "polygon(6) x polygon(6)", lambda: [builders.polygon(6)] * 2),
    ("hexagon^3", "polygon(6) x polygon(6) x polygon(6)", lambda: [builders.polygon(6)] * 3),
    (
        "hexagon chain x hexagon",
        "polygon_chain(2,6) x polygon(6)",
        lambda: [builders.polygon_chain(2, 6), builders.polygon(6)],
    ),
    (
        "necklace x hexagon",
        "necklace(3,6) x polygon(6)",
        lambda: [builders.necklace(3, 6), builders.polygon(6)],
    ),
    (
        "hexagon chain x necklace",
        "polygon_chain(2,6) x necklace(2,6)",
        lambda: [builders.polygon_chain(2, 6), builders.necklace(2, 6)],
    ),
    (
        "hexagon chain^2 x hexagon",
        "polygon_chain(2,6) x polygon_chain(2,6) x polygon(6)",
        lambda: [builders.polygon_chain(2, 6)] * 2 + [builders.polygon(6)],
    ),
]


def _fixture_instances() -> List[SuiteInstance]:
    instances = []
    for name, construction, build in HEXAGON_CASES:
        factors = build()
        inputs = {f"factor{k}": f for k, f in enumerate(factors)}
        instances.append(SuiteInstance(name, construction, inputs))
    return instances


def _factors(instance: SuiteInstance):
    return [instance.inputs[k] for k in sorted(instance.inputs)]


class FaceBlockSuite(BaseSuite):
    suite_id = "h6"
    title = "intrinsic face blocks agree with label blocks"

    def instances(self) -> List[SuiteInstance]:
        return _fixture_instances()

    def check(self, instance: SuiteInstance) -> CheckOutcome:
        factors = _factors(instance)
        m = len(factors)
        chain = product_chain(factors)
        x = chain.complex
        label = {block.members for block in face_blocks_by_label(chain)}
        intrinsic = {block.members for block in face_blocks_intrinsic(x, m)}
        if label != intrinsic:
            return CheckOutcome(
                False,
                f"{len(label)} label blocks against {len(intrinsic)} intrinsic blocks",
                {"product": x},
            )
        block_of = {face: members for members in label for face in members}
        expected = 2 ** (m - 1)
        for pair, faces in antipodal_sharing(x).items():
            if len(faces) != expected:
                return CheckOutcome(
                    False, f"pair {sorted(pair)} shared by {len(faces)} faces, expected {expected}"
                )
            if len({block_of[f] for f in faces}) != 1:
                return CheckOutcome(False, f"faces sharing {sorted(pair)} lie in several blocks")
        return CheckOutcome(True, f"{len(label)} blocks")


class BlockIncidenceSuite(BaseSuite):
    suite_id = "h8"
    title = "block incidence by coordinates agrees with face-level incidence"

    def instances(self) -> List[SuiteInstance]:
        return _fixture_instances()

    def check(self, instance: SuiteInstance) -> CheckOutcome:
        chain = product_chain(_factors(instance))
        blocks = face_blocks_by_label(chain)
        pairs = incident_block_pairs(chain, blocks)
        for i, j in pairs:
            result = verify_block_incidence_equiv(chain, blocks[i], blocks[j])
            if result.verdict == IncidenceVerdict.COUNTEREXAMPLE:
                return CheckOutcome(
                    False,
                    f"blocks {blocks[i].generators} and {blocks[j].generators} disagree "
                    f"at face {result.witness}",
                    {"product": chain.complex},
                )
        return CheckOutcome(True, f"{len(pairs)} incident block pairs")


class BlockGraphSuite(BaseSuite):
    suite_id = "blockgraph"
    title = "block graphs of components are Cartesian products of face incidence graphs"

    def instances(self) -> List[SuiteInstance]:
        return _fixture_instances()

    def check(self, instance: SuiteInstance) -> CheckOutcome:
        factors = _factors(instance)
        incidence = [face_incidence_graph(f) for f in factors]
        expected = reduce(cartesian_product, incidence)
        built = block_graph(factors).graph
        if graph_isomorphism(built, expected) is None:
            return CheckOutcome(False, "block graph is not the Cartesian product")
        chain = product_chain(factors)
        x = chain.complex
        parts = components(x.skeleton)
        for k, part in enumerate(parts):
            component = component_complex(x, part.vertices)
            intrinsic = intrinsic_block_graph(component, len(factors))
            if graph_isomorphism(intrinsic, expected) is None:
                return CheckOutcome(
                    False,
                    f"component {k}: intrinsic block graph has {len(intrinsic.vertices)} "
                    f"vertices and {len(intrinsic.edges)} edges, expected "
                    f"{len(expected.vertices)} and {len(expected.edges)}",
                    {"product": component},
                )
        return CheckOutcome(
            True, f"{len(expected.vertices)} blocks in each of {len(parts)} components"
        )
