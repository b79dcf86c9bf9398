import pytest
from hypothesis import given
from hypothesis import strategies as st

from polycell.core.errors import DanglingEdge, DuplicateId, EmptyWalk, InvalidWalk, UnknownVertex
from polycell.corpus import builders
from polycell.corpus.instances import make_rng, random_multigraph
from polycell.models.multigraph import (
    Edge,
    MultiGraph,
    Traversal,
    Walk,
    canonical_cycle_key,
    check_walk,
    components,
    degree,
    is_bipartite,
    is_connected,
    is_r_thin,
    reduce_closed_walk,
    shortest_path_distance,
    to_networkx,
)


def cycle_walk(n: int) -> Walk:
    return Walk("v0", tuple(Traversal(f"e{j}", True) for j in range(n)))


def test_build_sorts_ids():
    g = MultiGraph.build(["b", "a"], [("y", "a", "b"), ("x", "b", "a")])
    assert g.vertices == ("a", "b")
    assert [e.id for e in g.edges] == ["x", "y"]


def test_dangling_edge_rejected():
    with pytest.raises(DanglingEdge):
        MultiGraph.build(["a"], [Edge("e", ("a", "b"))])


def test_duplicate_edge_id_rejected():
    with pytest.raises(DuplicateId):
        MultiGraph.build(["a", "b"], [Edge("e", ("a", "b")), Edge("e", ("b", "a"))])


def test_loop_contributes_two_darts():
    g = builders.loop()
    assert degree(g, "v") == 2
    assert g.has_loops and not g.is_simple
    with pytest.raises(UnknownVertex):
        degree(g, "w")


def test_parallel_edges_are_not_simple():
    g = builders.cycle(2)
    assert g.has_parallel_edges
    assert not g.is_simple


def test_check_walk_reports_chain_break():
    g = builders.cycle(3)
    check_walk(g, cycle_walk(3), closed=True)
    broken = Walk("v0", (Traversal("e0", True), Traversal("e2", True)))
    with pytest.raises(InvalidWalk):
        check_walk(g, broken)
    with pytest.raises(InvalidWalk):
        check_walk(g, Walk("v0", (Traversal("e0", True),)), closed=True)
    with pytest.raises(EmptyWalk):
        check_walk(g, Walk("v0", ()), closed=True)


def test_walk_reversal_and_rotation():
    g = builders.cycle(4)
    walk = cycle_walk(4)
    back = walk.reversed(g)
    assert back.start == "v0"
    assert back.tokens == ["e3-", "e2-", "e1-", "e0-"]
    turned = walk.rotate(g, 1)
    assert turned.start == "v1"
    assert turned.tokens == ["e1+", "e2+", "e3+", "e0+"]


@given(st.integers(min_value=1, max_value=6), st.integers(min_value=1, max_value=4))
def test_reduce_closed_walk_recovers_primitive_cycle(n, times):
    walk = cycle_walk(n)
    primitive, multiplicity = reduce_closed_walk(walk.repeat(times))
    assert primitive == walk
    assert multiplicity == times


@given(st.integers(min_value=1, max_value=7), st.data())
def test_cycle_key_ignores_rotation_and_reversal(n, data):
    g = builders.cycle(n)
    walk = cycle_walk(n)
    offset = data.draw(st.integers(min_value=0, max_value=n - 1))
    key = canonical_cycle_key(walk)
    assert canonical_cycle_key(walk.rotate(g, offset)) == key
    assert canonical_cycle_key(walk.reversed(g).rotate(g, offset)) == key


def test_cycle_key_without_reversal_keeps_orientation():
    g = builders.cycle(3)
    walk = cycle_walk(3)
    assert canonical_cycle_key(walk, allow_reversal=False) != canonical_cycle_key(
        walk.reversed(g), allow_reversal=False
    )


def test_r_thin():
    assert is_r_thin(builders.complete(3))
    assert not is_r_thin(builders.cycle(4))
    assert not is_r_thin(builders.path(3))


def test_components_ordered_by_smallest_vertex():
    g = MultiGraph.build(["c", "a", "b", "d"], [("x", "c", "d"), ("y", "a", "b")])
    parts = components(g)
    assert [p.vertices for p in parts] == [("a", "b"), ("c", "d")]
    assert not is_connected(g)


def test_bipartite():
    assert is_bipartite(builders.cycle(6))
    assert not is_bipartite(builders.cycle(5))
    assert not is_bipartite(builders.loop())


def test_shortest_path_distance():
    g = MultiGraph.build(["a", "b", "c", "z"], [("x", "a", "b"), ("y", "b", "c")])
    assert shortest_path_distance(g, "a", "c") == 2
    assert shortest_path_distance(g, "a", "z") is None


@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_degree_sum_is_twice_the_edge_count(seed):
    g = random_multigraph(make_rng(seed), 6, 8)
    assert sum(degree(g, v) for v in g.vertices) == 2 * len(g.edges)
    bridge = to_networkx(g)
    assert all(bridge.degree(v) == degree(g, v) for v in g.vertices)
    assert sorted(key for _, _, key in bridge.edges(keys=True)) == [e.id for e in g.edges]
