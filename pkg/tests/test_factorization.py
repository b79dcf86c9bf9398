import asyncio

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polycell.core.errors import HypothesisViolated, NotInS0, NotSimple
from polycell.corpus import builders
from polycell.corpus.instances import make_rng, relabeled
from polycell.models.polycomplex import is_simple_complex
from polycell.services.complex_products import complex_tensor_product, product_chain
from polycell.services.factorization import (
    complex_prime_factorization,
    direct_prime_factorization,
    graph_prime_factorization,
    is_prime_complex,
    iter_skeleton_splits,
    natural_split,
    reductive_projection,
    try_complex_split,
)
from polycell.services.graph_products import direct_product_s0, tensor_product
from polycell.services.symmetry import complex_isomorphism, graph_isomorphism
from polycell.suites.factorization import (
    ComplexFactorizationSuite,
    GraphFactorizationSuite,
    looped_edge,
)


def test_complete_graph_square_factors_into_triangles(k3):
    g = tensor_product(k3, k3).graph
    result = graph_prime_factorization(g)
    assert result.verify()
    assert len(result.factors) == 2
    assert all(graph_isomorphism(f, k3) is not None for f in result.factors)


def test_prime_graph_is_its_own_factorization(k3):
    result = graph_prime_factorization(builders.cycle(5))
    assert len(result.factors) == 1
    assert result.verify()
    assert len(graph_prime_factorization(k3).factors) == 1


def test_looped_factors_are_units_in_s0(k3):
    g = direct_product_s0(k3, looped_edge())
    result = direct_prime_factorization(g)
    assert result.verify()
    assert sorted(len(f.vertices) for f in result.factors) == [2, 3]


def test_graph_hypotheses():
    with pytest.raises(HypothesisViolated):
        graph_prime_factorization(builders.cycle(6))
    with pytest.raises(HypothesisViolated):
        graph_prime_factorization(builders.loop())
    with pytest.raises(NotInS0):
        graph_prime_factorization(builders.cycle(2), "S0")


def test_natural_split_recovers_factors(triangle, pentagon):
    chain = product_chain([triangle, pentagon])
    outcome = try_complex_split(chain.complex, natural_split(chain))
    assert outcome
    assert complex_isomorphism(outcome.factors[0], triangle) is not None
    assert complex_isomorphism(outcome.factors[1], pentagon) is not None


def test_reductive_projection_recovers_primitive_face(triangle, pentagon):
    chain = product_chain([triangle, pentagon])
    split = natural_split(chain)
    face = chain.complex.faces[0]
    assert len(reductive_projection(chain.complex, split, face.id, 0)) == 3
    assert len(reductive_projection(chain.complex, split, face.id, "right")) == 5


def test_triangle_times_triangle_factors(triangle):
    x = product_chain([triangle, triangle]).complex
    result = complex_prime_factorization(x)
    assert result.verify()
    assert len(result.factors) == 2
    assert all(complex_isomorphism(f, triangle) is not None for f in result.factors)


@settings(max_examples=5)
@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_factorization_ignores_labels(seed):
    triangle, pentagon = builders.polygon(3), builders.polygon(5)
    x = relabeled(make_rng(seed), product_chain([triangle, pentagon]).complex)
    result = complex_prime_factorization(x)
    assert result.verify()
    sizes = sorted(len(f.skeleton.vertices) for f in result.factors)
    assert sizes == [3, 5]


def test_complex_hypotheses():
    with pytest.raises(HypothesisViolated):
        complex_prime_factorization(builders.wrapped_polygon(15, 3))
    with pytest.raises(HypothesisViolated):
        complex_prime_factorization(builders.polygon(6))


def test_prime_complexes(triangle, pentagon):
    assert is_prime_complex(pentagon)
    assert is_prime_complex(builders.cube_surface())
    assert is_prime_complex(builders.one_gon())
    assert is_prime_complex(builders.tetrahedron())
    assert not is_prime_complex(complex_tensor_product(triangle, pentagon).complex)


@pytest.mark.parametrize(
    "left, right",
    [
        (builders.one_gon, builders.one_gon),
        (lambda: builders.polygon(3), builders.one_gon),
        (lambda: builders.polygon(4), builders.one_gon),
    ],
)
def test_products_with_a_one_gon_factor_are_not_prime(left, right):
    x = complex_tensor_product(left(), right()).complex
    assert is_simple_complex(x)
    assert not is_prime_complex(x)


def test_one_vertex_splits_carry_loops():
    x = complex_tensor_product(builders.one_gon(), builders.one_gon()).complex
    splits = list(iter_skeleton_splits(x, 1, 1))
    assert splits
    for split in splits:
        assert [len(g.vertices) for g in split.gammas] == [1, 1]
        assert [len(g.edges) for g in split.gammas] == [1, 1]
    assert any(try_complex_split(x, split) for split in splits)


def test_primality_needs_a_simple_complex():
    with pytest.raises(NotSimple):
        is_prime_complex(builders.wrapped_polygon(15, 3))


@pytest.mark.parametrize(
    "left, right, other_left, other_right",
    [
        (
            lambda: builders.polygon(3),
            lambda: builders.wrapped_polygon(10, 5),
            lambda: builders.wrapped_polygon(6, 3),
            lambda: builders.polygon(5),
        ),
        (
            lambda: builders.polygon(3),
            lambda: builders.wrapped_polygon(35, 5),
            lambda: builders.wrapped_polygon(21, 3),
            lambda: builders.polygon(5),
        ),
    ],
)
def test_wrapped_polygons_factor_in_two_ways(left, right, other_left, other_right):
    x = complex_tensor_product(left(), right()).complex
    y = complex_tensor_product(other_left(), other_right()).complex
    assert complex_isomorphism(x, y) is not None
    assert not is_simple_complex(x)
    with pytest.raises(HypothesisViolated):
        complex_prime_factorization(x)


def test_graph_factorization_suite():
    report = asyncio.run(GraphFactorizationSuite(seed=7, trials=2).run(workers=2))
    assert report.ok, report.to_json()
    assert report.passed + report.skipped == 4


def test_complex_factorization_suite_on_polygons():
    suite = ComplexFactorizationSuite()
    for instance in suite.instances():
        if "tetrahedron" in instance.name:
            continue
        outcome = suite.check(instance)
        assert outcome.passed, outcome.detail


@pytest.mark.slow
def test_complex_factorization_suite():
    report = asyncio.run(ComplexFactorizationSuite().run())
    assert report.ok, report.to_json()
