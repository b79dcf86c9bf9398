import itertools
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import Matrix

from polycell.core.errors import BadParameter, InvalidWalk
from polycell.corpus import builders
from polycell.corpus.instances import make_rng, random_complex
from polycell.models.homology import (
    SimplyConnectedVerdict,
    face_boundary_matrix,
    homology_h1,
    simply_connected_necessary,
    smith_invariants,
)
from polycell.models.multigraph import Traversal, Walk
from polycell.models.polycomplex import (
    Complex,
    Face,
    complex_components,
    disjoint_union,
    euler_characteristic,
    has_surface_structure,
    is_elementary,
    is_ordinary,
    is_polygonal,
    is_simple_complex,
    link,
    polygon_product_euler,
)
from polycell.services.complex_products import complex_tensor_product, count_complex_homomorphisms
from polycell.services.graph_products import tensor_product
from polycell.services.symmetry import graph_isomorphism


def determinantal_invariants(rows):
    """Invariant factors from gcds of minors, d_k / d_(k-1)."""
    matrix = Matrix(rows)
    previous, factors = 1, []
    for k in range(1, min(matrix.shape) + 1):
        divisor = 0
        for r in itertools.combinations(range(matrix.rows), k):
            for c in itertools.combinations(range(matrix.cols), k):
                divisor = gcd(divisor, int(matrix.extract(list(r), list(c)).det()))
        if divisor == 0:
            break
        factors.append(divisor // previous)
        previous = divisor
    return factors


def test_triangle_face_is_closed_walk():
    skeleton = builders.cycle(3)
    with pytest.raises(InvalidWalk):
        Complex.build(skeleton, [Face("f", Walk("v0", (Traversal("e0", True),)))])


def test_dunce_hat_flags_and_link():
    x = builders.dunce_hat()
    assert len(x.flags) == 6
    graph = link(x, "v").graph
    assert len(graph.vertices) == 2
    assert len(graph.edges) == 3


def test_triangle_times_pentagon_counts(triangle, pentagon):
    x = complex_tensor_product(triangle, pentagon).complex
    assert len(x.skeleton.vertices) == 15
    assert len(x.skeleton.edges) == 30
    assert [len(face) for face in x.faces] == [15, 15]
    assert len(x.flags) == 60
    assert euler_characteristic(x) == -13


def test_wrapped_fifteen_gon_product_has_thirty_faces():
    x = complex_tensor_product(
        builders.wrapped_polygon(15, 3), builders.wrapped_polygon(15, 5)
    ).complex
    assert len(x.skeleton.vertices) == 15
    assert len(x.skeleton.edges) == 30
    assert len(x.faces) == 30


@pytest.mark.parametrize("n, m", list(itertools.product(range(1, 9), repeat=2)))
def test_polygon_product_euler(n, m):
    x = complex_tensor_product(builders.polygon(n), builders.polygon(m)).complex
    chi = euler_characteristic(x)
    assert chi == polygon_product_euler(n, m) == -n * m + 2 * gcd(n, m)
    assert (chi >= 1) == (n == m == 1)


def test_polygon_product_euler_rejects_zero():
    with pytest.raises(BadParameter):
        polygon_product_euler(0, 3)


@pytest.mark.parametrize(
    "squares, twisted, exists",
    [(2, False, True), (2, True, False), (3, True, True), (3, False, False)],
)
def test_strip_maps_to_one_gon(squares, twisted, exists):
    strip = builders.strip(squares, twisted)
    assert (count_complex_homomorphisms(strip, builders.one_gon()) > 0) == exists


@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_link_of_product_is_product_of_links(seed):
    rng = make_rng(seed)
    x = random_complex(rng, 3, 4, 2, 4)
    y = random_complex(rng, 3, 4, 2, 4)
    product = complex_tensor_product(x, y)
    for v in x.skeleton.vertices:
        for u in y.skeleton.vertices:
            expected = tensor_product(link(x, v).graph, link(y, u).graph).graph
            actual = link(product.complex, product.graph_product.vertex_of(v, u)).graph
            assert graph_isomorphism(expected, actual) is not None


def test_polygonal():
    assert is_polygonal(builders.polygon(3))
    assert is_polygonal(builders.tetrahedron())
    assert is_polygonal(builders.cube_surface())
    assert not is_polygonal(builders.polygon(2))
    assert not is_polygonal(builders.multi_polygon(4, 2))


def test_simple_complex():
    assert is_simple_complex(builders.polygon(3))
    assert not is_simple_complex(builders.projective_plane())
    assert not is_simple_complex(builders.wrapped_polygon(15, 3))
    assert not is_simple_complex(builders.multi_polygon(3, 2))
    assert not is_simple_complex(builders.twin_polygons(4))
    assert not is_simple_complex(Complex.build(builders.cycle(3)))


def test_elementary_and_ordinary():
    assert is_elementary(builders.polygon(6))
    assert is_ordinary(builders.polygon(6))
    assert not is_elementary(builders.twin_polygons(6))
    octagon = builders.doubled_octagon()
    assert is_ordinary(octagon)
    assert not is_elementary(octagon)
    assert not is_ordinary(builders.polygon(5))


def test_surface_structure():
    assert has_surface_structure(builders.polygon(3))
    assert has_surface_structure(builders.torus())
    assert has_surface_structure(builders.projective_plane())
    assert has_surface_structure(builders.tetrahedron())
    assert not has_surface_structure(builders.dunce_hat())


def test_components_of_disjoint_union(triangle, pentagon):
    union = disjoint_union(triangle, pentagon)
    parts = complex_components(union)
    assert [len(p.skeleton.vertices) for p in parts] == [3, 5]
    assert [len(p.faces) for p in parts] == [1, 1]


@pytest.mark.parametrize(
    "build, betti, torsion, verdict",
    [
        (builders.projective_plane, 0, [2], SimplyConnectedVerdict.FAILS_H1),
        (builders.torus, 2, [], SimplyConnectedVerdict.FAILS_CHI),
        (builders.dunce_hat, 0, [], SimplyConnectedVerdict.PASSES),
        (builders.tetrahedron, 0, [], SimplyConnectedVerdict.PASSES),
    ],
)
def test_first_homology(build, betti, torsion, verdict):
    x = build()
    assert homology_h1(x) == (betti, torsion)
    assert simply_connected_necessary(x) == verdict


@given(
    st.integers(min_value=1, max_value=4).flatmap(
        lambda cols: st.lists(
            st.lists(st.integers(min_value=-4, max_value=4), min_size=cols, max_size=cols),
            min_size=1,
            max_size=4,
        )
    )
)
def test_smith_invariants_match_minors(rows):
    assert smith_invariants(rows) == determinantal_invariants(rows)


@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_boundary_matrix_invariants_match_minors(seed):
    x = random_complex(make_rng(seed), 4, 5, 3, 5)
    matrix = face_boundary_matrix(x)
    if matrix and x.faces:
        assert smith_invariants(matrix) == determinantal_invariants(matrix)
