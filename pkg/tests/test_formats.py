import pytest

from polycell.core.errors import ParseError, SemanticError
from polycell.corpus import builders
from polycell.formats import pcc
from polycell.formats.dot import block_graph_dot, dot_id, graph_dot, skeleton_dot
from polycell.services.blocks import block_graph
from polycell.services.complex_products import complex_tensor_product
from polycell.services.symmetry import complex_isomorphism

TRIANGLE = """\
pcc 1
# a single triangle
vertex a
vertex b
vertex c

edge ab a b
edge bc b c
edge ca c a
face t ab+ bc+ ca+
"""


def test_parse_triangle():
    x = pcc.loads(TRIANGLE)
    assert x.skeleton.vertices == ("a", "b", "c")
    assert [e.id for e in x.skeleton.edges] == ["ab", "bc", "ca"]
    assert x.faces[0].boundary.tokens == ["ab+", "bc+", "ca+"]
    assert complex_isomorphism(x, builders.polygon(3)) is not None


def test_emit_is_stable():
    text = pcc.dumps(pcc.loads(TRIANGLE))
    assert text.splitlines()[0] == "pcc 1"
    assert "# a single triangle" not in text
    assert pcc.dumps(pcc.loads(text)) == text


def test_typographic_minus_accepted():
    x = pcc.loads("pcc 1\nvertex v\nedge e v v\nface f e−\n")
    assert x.faces[0].boundary.tokens == ["e-"]


def test_product_survives_a_round_trip(tmp_path, triangle, pentagon):
    x = complex_tensor_product(triangle, pentagon).complex
    path = tmp_path / "product.pcc"
    pcc.dump(x, path)
    back = pcc.load(path)
    assert back == x
    assert complex_isomorphism(back, x) is not None


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("", 1, 1),
        ("vertex a\n", 1, 1),
        ("pcc 2\n", 1, 5),
        ("pcc 1\npcc 1\n", 2, 1),
        ("pcc 1\nnode a\n", 2, 1),
        ("pcc 1\nvertex\n", 2, 7),
        ("pcc 1\n  vertex a b\n", 2, 12),
        ("pcc 1\nvertex a\nedge e a a x\n", 3, 12),
        ("pcc 1\nvertex a\nedge e a a\nface f e*\n", 4, 8),
        ("pcc 1\nvertex a\nedge e a a\nface f e+ +\n", 4, 11),
    ],
)
def test_parse_errors_carry_positions(text, line, column):
    with pytest.raises(ParseError) as caught:
        pcc.loads(text)
    assert (caught.value.line, caught.value.column) == (line, column)


def test_missing_endpoint_is_semantic():
    with pytest.raises(SemanticError) as caught:
        pcc.loads("pcc 1\nvertex a\nedge e a\n")
    assert caught.value.invariant == "edges have two ends"


@pytest.mark.parametrize(
    "text, invariant",
    [
        ("pcc 1\nvertex a\nedge e a b\n", "edge ends are declared vertices"),
        ("pcc 1\nvertex a\nvertex a\n", "ids are unique"),
        ("pcc 1\nvertex a\nedge e a a\nface f\n", "faces have at least one step"),
        ("pcc 1\nvertex a\nvertex b\nedge e a b\nface f e+\n", "face boundaries are closed walks"),
        ("pcc 1\nvertex a\nedge e a a\nface f x+\n", "face boundaries are closed walks"),
    ],
)
def test_semantic_errors_name_the_invariant(text, invariant):
    with pytest.raises(SemanticError) as caught:
        pcc.loads(text)
    assert caught.value.invariant == invariant
    assert str(caught.value).startswith(invariant)


def test_dot_quotes_ids():
    assert dot_id('a"b') == '"a\\"b"'
    text = skeleton_dot(builders.polygon(3))
    assert text.startswith('graph "skeleton" {')
    assert '"v0" -- "v1"' in text
    assert "penwidth=2" in text
    assert "penwidth" not in graph_dot(builders.cycle(3))


def test_block_graph_dot():
    text = block_graph_dot(block_graph([builders.polygon_chain(2, 6), builders.polygon(6)]))
    assert text.startswith('graph "blocks" {')
    assert text.count(" -- ") == 1
