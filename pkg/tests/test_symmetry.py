import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polycell.core.errors import LabelMapMissing
from polycell.corpus import builders
from polycell.corpus.instances import make_rng, random_connected_simple_graph, relabeled
from polycell.corpus.registry import hexagon_necklace_product
from polycell.models.multigraph import components, to_networkx
from polycell.models.polycomplex import component_complex
from polycell.services.complex_products import (
    complex_tensor_product,
    is_complex_homomorphism,
    product_chain,
)
from polycell.services.symmetry import (
    StabilizerChain,
    cartesian_subgroup,
    closure,
    complex_automorphism_group,
    complex_isomorphism,
    compose,
    graph_automorphism_group,
    graph_isomorphism,
    group_from_generators,
    is_arc_transitive,
    is_edge_transitive,
    is_flag_transitive,
    is_vertex_transitive,
    perm_to_complex_hom,
)
from polycell.suites.automorphisms import compare_with_cartesian


@pytest.mark.parametrize(
    "build, order",
    [
        (lambda: builders.complete(3), 6),
        (lambda: builders.cycle(5), 10),
        (lambda: builders.complete_bipartite(2, 3), 12),
        (lambda: builders.loop(), 2),
    ],
)
def test_graph_automorphism_orders(build, order):
    assert graph_automorphism_group(build()).order == order


@pytest.mark.parametrize(
    "build, order",
    [
        (lambda: builders.polygon(5), 10),
        (lambda: builders.tetrahedron(), 24),
        (lambda: builders.cube_surface(), 48),
        (lambda: builders.dunce_hat(), 2),
    ],
)
def test_complex_automorphism_orders(build, order):
    assert complex_automorphism_group(build()).order == order


def test_group_elements_and_orbits(k3):
    group = graph_automorphism_group(k3)
    assert len(group.elements) == 6
    assert all(group.contains(g) for g in group.generators)
    assert group.orbits("v") == [[("v", "v0"), ("v", "v1"), ("v", "v2")]]
    assert group.cycle_notation(group.identity) == "()"


permutations_of_six = st.permutations(range(6)).map(tuple)


@given(st.lists(permutations_of_six, max_size=3), permutations_of_six)
@settings(max_examples=30)
def test_stabilizer_chain_agrees_with_closure(generators, candidate):
    chain = StabilizerChain.from_generators(generators, 6)
    elements = closure(generators, 6)
    assert chain.order == len(elements)
    assert chain.contains(candidate) == (candidate in elements)


def test_subgroups_and_equality():
    points = tuple(("v", i) for i in range(4))
    cyclic = group_from_generators(points, [(1, 2, 3, 0)])
    symmetric = group_from_generators(points, [(1, 2, 3, 0), (1, 0, 2, 3)])
    assert (cyclic.order, symmetric.order) == (4, 24)
    assert cyclic.is_subgroup_of(symmetric)
    assert not symmetric.is_subgroup_of(cyclic)
    transpositions = [(1, 0, 2, 3), (0, 2, 1, 3), (0, 1, 3, 2)]
    assert symmetric.equals(group_from_generators(points, transpositions))
    assert not cyclic.equals(symmetric)


def test_membership_sifts_through_the_automorphism_chain(pentagon):
    group = complex_automorphism_group(pentagon)
    assert group.chain.order == group.order == 10
    first, last = group.generators[0], group.generators[-1]
    assert group.contains(compose(first, last))
    swap = list(group.identity)
    swap[0], swap[1] = swap[1], swap[0]
    assert not group.contains(tuple(swap))


def test_cartesian_subgroup_orders(triangle, pentagon):
    chain = product_chain([triangle, pentagon])
    cartesian = cartesian_subgroup(chain.factors, chain)
    assert cartesian.order == 6 * 10
    assert cartesian.is_subgroup_of(complex_automorphism_group(chain.complex))
    twins = product_chain([triangle, triangle])
    assert cartesian_subgroup(twins.factors, twins).order == 6 * 6 * 2


def test_transitivity_predicates():
    assert is_vertex_transitive(builders.cycle(5))
    assert is_arc_transitive(builders.complete(3))
    assert is_edge_transitive(builders.path(3))
    assert not is_vertex_transitive(builders.path(3))
    assert not is_arc_transitive(builders.path(3))
    assert is_edge_transitive(builders.star(3))
    assert not is_flag_transitive(builders.dunce_hat())


def test_triangle_times_triangle_is_flag_transitive(triangle):
    assert is_flag_transitive(complex_tensor_product(triangle, triangle).complex)


def test_isomorphisms_survive_relabeling(tetrahedron):
    rng = make_rng(3)
    assert complex_isomorphism(tetrahedron, relabeled(rng, tetrahedron)) is not None
    assert complex_isomorphism(builders.polygon(4), builders.torus()) is None
    assert graph_isomorphism(builders.cycle(6), builders.cycle(6)) is not None
    assert graph_isomorphism(builders.cycle(6), builders.complete_bipartite(3, 3)) is None


def test_isomorphism_is_complex_homomorphism(tetrahedron):
    other = relabeled(make_rng(11), tetrahedron)
    iso = complex_isomorphism(tetrahedron, other)
    assert is_complex_homomorphism(iso)


def test_square_times_square_component_has_non_cartesian_automorphisms():
    squares = [builders.polygon(4), builders.polygon(4)]
    chain = product_chain(squares)
    first = components(chain.complex.skeleton)[0]
    component = component_complex(chain.complex, first.vertices)
    assert graph_automorphism_group(component.skeleton).order == 2 * 24 * 24
    group = complex_automorphism_group(component)
    cartesian = cartesian_subgroup(chain.factors, chain, restrict_to=first.vertices)
    assert cartesian.is_subgroup_of(group)
    assert cartesian.order < group.order


def test_hexagon_times_hexagon_components_are_cartesian():
    outcome = compare_with_cartesian([builders.cycle(6), builders.cycle(6)], component_only=True)
    assert outcome.passed, outcome.detail
    assert outcome.detail.startswith("2 components, orders ")


def test_failing_component_is_reported():
    squares = [builders.polygon(4), builders.polygon(4)]
    outcome = compare_with_cartesian(squares, component_only=True)
    assert not outcome.passed
    assert outcome.detail.startswith("component 0: Aut has order ")
    assert "product" in outcome.witnesses


def test_cartesian_subgroup_needs_matching_chain(triangle, pentagon):
    chain = product_chain([triangle, pentagon])
    with pytest.raises(LabelMapMissing):
        cartesian_subgroup([pentagon, triangle], chain)


@pytest.mark.slow
def test_tetrahedron_times_tetrahedron_automorphisms_are_cartesian(tetrahedron):
    x = product_chain([tetrahedron, tetrahedron]).complex
    assert complex_automorphism_group(x).order == 24 * 24 * 2
    outcome = compare_with_cartesian([tetrahedron, tetrahedron], component_only=False)
    assert outcome.passed, outcome.detail
    assert is_flag_transitive(x)


@pytest.mark.slow
def test_hexagon_necklace_product_has_non_cartesian_automorphisms():
    chain = product_chain([builders.polygon(6), builders.necklace(3, 6)])
    x = hexagon_necklace_product(3)
    assert x == chain.complex
    cartesian = cartesian_subgroup(chain.factors, chain)
    for perm in cartesian.generators:
        assert is_complex_homomorphism(perm_to_complex_hom(x, x, perm))
    assert cartesian.order < complex_automorphism_group(x).order


@settings(max_examples=25)
@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_graph_isomorphism_agrees_with_networkx(seed):
    rng = make_rng(seed)
    g = random_connected_simple_graph(rng, 6, bipartite=bool(rng.integers(2)))
    h = random_connected_simple_graph(rng, 6, bipartite=bool(rng.integers(2)))
    expected = nx.is_isomorphic(to_networkx(g), to_networkx(h))
    assert (graph_isomorphism(g, h) is not None) == expected
