import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polycell.core.errors import AmbiguousId, IndexOutOfRange, LengthMismatch, NotSimple
from polycell.corpus import builders
from polycell.corpus.instances import make_rng, random_connected_simple_graph, random_multigraph
from polycell.models.multigraph import MultiGraph, Traversal, Walk, components, neighbor_sets
from polycell.services.graph_products import (
    cartesian_product,
    compose_graph_homs,
    count_graph_homomorphisms,
    direct_product_s0,
    enumerate_graph_homomorphisms,
    is_graph_homomorphism,
    lift_cycle,
    lift_path,
    pair_id,
    tensor_product,
    tensor_projection,
    universal_factor_graph,
)

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def brute_force_hom_count(g, h):
    """Vertex maps preserving adjacency; exact for simple targets."""
    adjacent = neighbor_sets(h)
    total = 0
    for images in itertools.product(h.vertices, repeat=len(g.vertices)):
        f = dict(zip(g.vertices, images))
        if all(f[e.ends[1]] in adjacent[f[e.ends[0]]] for e in g.edges):
            total += 1
    return total


@given(seeds)
def test_tensor_product_counts(seed):
    rng = make_rng(seed)
    g, h = random_multigraph(rng, 4, 5), random_multigraph(rng, 4, 5)
    info = tensor_product(g, h)
    assert len(info.graph.vertices) == len(g.vertices) * len(h.vertices)
    assert len(info.graph.edges) == 2 * len(g.edges) * len(h.edges)


@given(seeds)
def test_projections_are_homomorphisms(seed):
    rng = make_rng(seed)
    info = tensor_product(random_multigraph(rng, 4, 4), random_multigraph(rng, 4, 4))
    for which in ("left", "right"):
        assert is_graph_homomorphism(tensor_projection(info, which))


@given(seeds)
def test_dart_pairs_round_trip(seed):
    rng = make_rng(seed)
    info = tensor_product(random_multigraph(rng, 3, 4), random_multigraph(rng, 3, 4))
    for dart in info.graph.darts:
        left, right = info.dart_pair(dart)
        assert info.dart_of(left, right) == dart


def test_complete_graph_into_its_square():
    k3 = builders.complete(3)
    square = tensor_product(k3, k3).graph
    assert count_graph_homomorphisms(k3, square) == 36
    assert len(enumerate_graph_homomorphisms(k3, square)) == 36
    assert brute_force_hom_count(k3, square) == 36


@given(seeds)
def test_hom_count_matches_brute_force_on_simple_graphs(seed):
    rng = make_rng(seed)
    g = random_connected_simple_graph(rng, 4, bipartite=False)
    h = random_connected_simple_graph(rng, 4, bipartite=bool(rng.integers(2)))
    assert count_graph_homomorphisms(g, h) == brute_force_hom_count(g, h)


@given(seeds)
def test_homs_into_a_loop(seed):
    g = random_multigraph(make_rng(seed), 4, 4)
    assert count_graph_homomorphisms(g, builders.loop()) == 2 ** len(g.edges)


@given(seeds)
def test_hom_counts_multiply(seed):
    rng = make_rng(seed)
    g = random_multigraph(rng, 3, 3)
    h1, h2 = random_multigraph(rng, 3, 4), random_multigraph(rng, 3, 4)
    product = tensor_product(h1, h2).graph
    assert count_graph_homomorphisms(g, product) == count_graph_homomorphisms(
        g, h1
    ) * count_graph_homomorphisms(g, h2)


def test_universal_factor_projects_back():
    k3, c5 = builders.complete(3), builders.cycle(5)
    phi = enumerate_graph_homomorphisms(c5, k3)[0]
    psi_target = enumerate_graph_homomorphisms(c5, c5)[1]
    info = tensor_product(k3, c5)
    psi = universal_factor_graph(phi, psi_target, info)
    assert is_graph_homomorphism(psi)
    assert compose_graph_homs(tensor_projection(info, "left"), psi) == phi
    assert compose_graph_homs(tensor_projection(info, "right"), psi) == psi_target


def test_lift_cycle_has_lcm_length():
    c3, c5 = builders.cycle(3), builders.cycle(5)
    info = tensor_product(c3, c5)
    w3 = Walk("v0", tuple(Traversal(f"e{j}", True) for j in range(3)))
    w5 = Walk("v0", tuple(Traversal(f"e{j}", True) for j in range(5)))
    lifted = lift_cycle(info, w3, w5, 0, 1)
    assert len(lifted) == 15
    assert lifted.end(info.graph) == lifted.start
    with pytest.raises(IndexOutOfRange):
        lift_cycle(info, w3, w5, 5, 0)
    with pytest.raises(LengthMismatch):
        lift_path(info, w3, w5)


@pytest.mark.parametrize(
    "left, right, expected",
    [
        (builders.cycle(4), builders.cycle(6), 2),
        (builders.complete(3), builders.cycle(4), 1),
        (builders.complete(3), builders.cycle(5), 1),
        (builders.path(2), builders.path(3), 2),
    ],
)
def test_component_counts(left, right, expected):
    assert len(components(tensor_product(left, right).graph)) == expected


def test_direct_product_with_looped_vertex():
    looped = builders.loop()
    product = direct_product_s0(builders.complete(3), looped)
    assert len(product.vertices) == 3
    assert len(product.edges) == 3


def test_cartesian_product_counts():
    product = cartesian_product(builders.cycle(3), builders.path(2))
    assert len(product.vertices) == 6
    assert len(product.edges) == 3 * 1 + 2 * 3
    with pytest.raises(NotSimple):
        cartesian_product(builders.loop(), builders.path(2))


def test_ids_that_would_collide_are_rejected():
    left = MultiGraph.build(["a,b", "c"], [("e", "a,b", "c")])
    right = MultiGraph.build(["a", "b,c"], [("f", "a", "b,c")])
    assert pair_id("a,b", "c") == pair_id("a", "b,c")
    with pytest.raises(AmbiguousId):
        tensor_product(left, right)
    with pytest.raises(AmbiguousId):
        direct_product_s0(builders.path(2), left)
    with pytest.raises(AmbiguousId):
        cartesian_product(right, builders.path(2))
    unbalanced = MultiGraph.build(["x)", "(y"], [("g", "x)", "(y")])
    with pytest.raises(AmbiguousId):
        tensor_product(builders.path(2), unbalanced)


def test_product_ids_nest():
    inner = tensor_product(builders.cycle(3), builders.path(2)).graph
    outer = tensor_product(inner, builders.cycle(3))
    assert len(outer.graph.vertices) == 18
    assert len(set(outer.vertex_pairs)) == 18
