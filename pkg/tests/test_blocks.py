import asyncio

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polycell.core.errors import NotIncident, NotOrdinary, OddFaces, RangeError
from polycell.corpus import builders
from polycell.services.blocks import (
    FaceBlock,
    IncidenceVerdict,
    block_graph,
    block_of_face,
    count_walk_arrivals,
    face_blocks_by_label,
    face_blocks_intrinsic,
    face_incidence_graph,
    verify_block_incidence_equiv,
)
from polycell.services.complex_products import product_chain
from polycell.suites.blocks import BlockGraphSuite, BlockIncidenceSuite, FaceBlockSuite


def walks_ending_from(d, start, last_position):
    """Unit-step walks of d - 1 steps from ``start`` to ``last_position``."""
    counts = {start: 1}
    for _ in range(d - 1):
        step = {}
        for position, count in counts.items():
            for move in (-1, 1):
                step[position + move] = step.get(position + move, 0) + count
        counts = step
    return counts.get(last_position, 0)


@given(
    st.integers(min_value=1, max_value=14).flatmap(
        lambda d: st.tuples(st.just(d), st.integers(min_value=0, max_value=d // 2))
    )
)
def test_walk_arrivals_match_dynamic_programming(case):
    d, k = case
    for sign in (1, -1):
        assert count_walk_arrivals(d, k, sign) == walks_ending_from(d, d - 2 * k, sign)


def test_walk_arrival_examples():
    assert count_walk_arrivals(5, 2, 1) == 6
    assert count_walk_arrivals(5, 2, -1) == 4
    assert count_walk_arrivals(2, 1, 1) == count_walk_arrivals(2, 1, -1) == 1
    assert count_walk_arrivals(4, 0, -1) == 0


@pytest.mark.parametrize("d, k, sign", [(0, 0, 1), (4, 3, 1), (4, -1, 1), (4, 1, 0)])
def test_walk_arrivals_reject_bad_ranges(d, k, sign):
    with pytest.raises(RangeError):
        count_walk_arrivals(d, k, sign)


@pytest.mark.parametrize("d", range(2, 15))
def test_arrival_ratio_decreases_and_balances_at_half(d):
    ratios = [
        count_walk_arrivals(d, k, 1) / count_walk_arrivals(d, k, -1)
        for k in range(1, d // 2 + 1)
    ]
    assert ratios == sorted(ratios, reverse=True)
    for k, ratio in enumerate(ratios, start=1):
        assert (ratio == 1) == (d == 2 * k)


def test_face_incidence_graphs():
    chain = face_incidence_graph(builders.polygon_chain(3, 6))
    assert chain.vertices == ("f0", "f1", "f2")
    assert [e.ends for e in chain.edges] == [("f0", "f1"), ("f1", "f2")]
    necklace = face_incidence_graph(builders.necklace(3, 6))
    assert len(necklace.edges) == 2
    single = face_incidence_graph(builders.polygon(6))
    assert len(single.vertices) == 1 and not single.edges


def test_block_graph_is_product_of_incidence_graphs():
    built = block_graph([builders.necklace(3, 6), builders.polygon_chain(2, 6)])
    assert len(built.graph.vertices) == 6
    assert len(built.graph.edges) == 2 * 2 + 3 * 1
    assert all(len(t) == 2 for t in built.vertex_tuples.values())
    with pytest.raises(NotOrdinary):
        block_graph([builders.polygon(5)])


def test_odd_faces_have_no_label_blocks(triangle, hexagon):
    with pytest.raises(OddFaces):
        face_blocks_by_label(product_chain([triangle, hexagon]))


def test_label_blocks_partition_faces(hexagon):
    chain = product_chain([hexagon, hexagon])
    blocks = face_blocks_by_label(chain)
    members = [face for block in blocks for face in block.members]
    assert sorted(members) == sorted(face.id for face in chain.complex.faces)
    for block in blocks:
        for face in block.members:
            assert block_of_face(chain, face) == block.key
        assert block.parity[0] == 0


def test_intrinsic_blocks_match_label_blocks(hexagon):
    chain = product_chain([hexagon, hexagon])
    label = {block.members for block in face_blocks_by_label(chain)}
    intrinsic = {block.members for block in face_blocks_intrinsic(chain.complex, 2)}
    assert label == intrinsic


def test_disjoint_blocks_are_not_incident(hexagon):
    chain = product_chain([hexagon, hexagon])
    x = chain.complex
    first = x.faces[0].id
    far = next(
        face.id
        for face in x.faces
        if not set(x.face_vertices[face.id]) & set(x.face_vertices[first])
    )
    with pytest.raises(NotIncident):
        verify_block_incidence_equiv(
            chain, FaceBlock(frozenset([first])), FaceBlock(frozenset([far]))
        )


def test_chain_blocks_incidence_agrees():
    chain = product_chain([builders.polygon_chain(2, 6), builders.polygon(6)])
    blocks = face_blocks_by_label(chain)
    verdicts = set()
    for i, first in enumerate(blocks):
        for second in blocks[i + 1:]:
            try:
                result = verify_block_incidence_equiv(chain, first, second)
            except NotIncident:
                continue
            verdicts.add(result.verdict)
    assert IncidenceVerdict.COUNTEREXAMPLE not in verdicts
    assert IncidenceVerdict.BOTH in verdicts


@pytest.mark.parametrize("suite_class", [FaceBlockSuite, BlockIncidenceSuite, BlockGraphSuite])
def test_block_suites_on_hexagon_square(suite_class):
    suite = suite_class()
    instance = suite.instances()[0]
    outcome = suite.check(instance)
    assert outcome.passed, outcome.detail


@pytest.mark.slow
@pytest.mark.parametrize("suite_class", [FaceBlockSuite, BlockIncidenceSuite, BlockGraphSuite])
def test_block_suites(suite_class):
    report = asyncio.run(suite_class().run())
    assert report.ok, report.to_json()


def test_block_graph_suite_checks_every_component():
    suite = BlockGraphSuite()
    outcome = suite.check(suite.instances()[0])
    assert outcome.passed, outcome.detail
    assert outcome.detail.endswith("in each of 2 components")
