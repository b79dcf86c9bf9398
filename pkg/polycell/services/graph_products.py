"""
Graph tensor products, direct and Cartesian products, projections,
homomorphisms and path lifting.

Product edge ``(a,b;d)`` joins ``(a.end0, b.end_d)`` to ``(a.end1, b.end_{1-d})``.
Its dart on side ``s`` corresponds to the pair of factor darts
``((a, s), (b, s xor d))``.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Dict, Iterable, Iterator, List, Literal, NamedTuple, Optional, Tuple

from polycell.core.config import settings
from polycell.core.errors import (
    AmbiguousId,
    BudgetExceeded,
    IndexOutOfRange,
    LengthMismatch,
    NotInS0,
    NotSimple,
)
from polycell.models.multigraph import (
    Dart,
    Edge,
    EdgeId,
    MultiGraph,
    Traversal,
    VertexId,
    Walk,
)

logger = logging.getLogger(__name__)

Which = Literal["left", "right"]


def pair_id(left: str, right: str) -> str:
    return f"({left},{right})"


def check_factor_ids(ids: Iterable[str], kind: str) -> None:
    """Reject ids that would make ``pair_id`` and friends ambiguous.

    An id is accepted when its parentheses balance and it has no ``,`` or ``;``
    outside them. Every id built by this module passes, so products nest.
    """
    for item in ids:
        depth = 0
        for ch in item:
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth < 0:
                    break
            elif ch in ",;" and depth == 0:
                break
        else:
            if depth == 0:
                continue
        raise AmbiguousId(
            f"{kind} id {item!r} needs balanced parentheses and no top-level ',' or ';' "
            "to take part in a product"
        )


def product_edge_id(alpha: EdgeId, beta: EdgeId, delta: int) -> EdgeId:
    return f"({alpha},{beta};{delta})"


class ProductEdgeLabel(NamedTuple):
    alpha: EdgeId
    beta: EdgeId
    delta: int


@dataclass(frozen=True)
class GraphHom:
    source: MultiGraph
    target: MultiGraph
    vertex_map: Dict[VertexId, VertexId]
    dart_map: Dict[Dart, Dart]

    @property
    def key(self) -> Tuple:
        return (
            tuple(self.vertex_map[v] for v in self.source.vertices),
            tuple(self.dart_map[d] for d in self.source.darts),
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GraphHom) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def map_step(self, step: Traversal) -> Traversal:
        return Traversal.from_dart(self.dart_map[step.out_dart])

    def map_walk(self, walk: Walk) -> Walk:
        return Walk(self.vertex_map[walk.start], tuple(self.map_step(s) for s in walk.steps))


@dataclass(frozen=True)
class TensorProduct:
    """A tensor product together with its label maps."""

    left: MultiGraph
    right: MultiGraph
    graph: MultiGraph
    vertex_pairs: Dict[VertexId, Tuple[VertexId, VertexId]]
    edge_labels: Dict[EdgeId, ProductEdgeLabel] = field(default_factory=dict)

    @cached_property
    def vertex_ids(self) -> Dict[Tuple[VertexId, VertexId], VertexId]:
        return {pair: vid for vid, pair in self.vertex_pairs.items()}

    @cached_property
    def label_edges(self) -> Dict[ProductEdgeLabel, EdgeId]:
        return {label: eid for eid, label in self.edge_labels.items()}

    def vertex_of(self, v: VertexId, u: VertexId) -> VertexId:
        return self.vertex_ids[(v, u)]

    def dart_pair(self, dart: Dart) -> Tuple[Dart, Dart]:
        label = self.edge_labels[dart.edge]
        return Dart(label.alpha, dart.side), Dart(label.beta, dart.side ^ label.delta)

    def dart_of(self, left: Dart, right: Dart) -> Dart:
        label = ProductEdgeLabel(left.edge, right.edge, left.side ^ right.side)
        return Dart(self.label_edges[label], left.side)


def tensor_product(g: MultiGraph, h: MultiGraph) -> TensorProduct:
    for graph in (g, h):
        check_factor_ids(graph.vertices, "vertex")
        check_factor_ids((e.id for e in graph.edges), "edge")
    vertex_pairs = {pair_id(v, u): (v, u) for v in g.vertices for u in h.vertices}
    edges = []
    labels = {}
    for a in g.edges:
        for b in h.edges:
            for delta in (0, 1):
                eid = product_edge_id(a.id, b.id, delta)
                end0 = pair_id(a.ends[0], b.ends[delta])
                end1 = pair_id(a.ends[1], b.ends[1 - delta])
                edges.append(Edge(eid, (end0, end1)))
                labels[eid] = ProductEdgeLabel(a.id, b.id, delta)
    graph = MultiGraph.build(vertex_pairs.keys(), edges)
    return TensorProduct(g, h, graph, vertex_pairs, labels)


def tensor_projection(info: TensorProduct, which: Which) -> GraphHom:
    index = 0 if which == "left" else 1
    target = info.left if index == 0 else info.right
    vertex_map = {vid: pair[index] for vid, pair in info.vertex_pairs.items()}
    dart_map = {dart: info.dart_pair(dart)[index] for dart in info.graph.darts}
    return GraphHom(info.graph, target, vertex_map, dart_map)


def is_graph_homomorphism(h: GraphHom) -> bool:
    source, target = h.source, h.target
    if any(v not in h.vertex_map for v in source.vertices):
        return False
    if any(h.vertex_map[v] not in target.vertex_set for v in source.vertices):
        return False
    for edge in source.edges:
        d0 = h.dart_map.get(Dart(edge.id, 0))
        d1 = h.dart_map.get(Dart(edge.id, 1))
        if d0 is None or d1 is None or d0.edge not in target.edge_index:
            return False
        if d1 != d0.partner():
            return False
        for side, image in ((0, d0), (1, d1)):
            if target.endpoint(image) != h.vertex_map[edge.ends[side]]:
                return False
    return True


def compose_graph_homs(second: GraphHom, first: GraphHom) -> GraphHom:
    """``second`` after ``first``."""
    return GraphHom(
        first.source,
        second.target,
        {v: second.vertex_map[w] for v, w in first.vertex_map.items()},
        {d: second.dart_map[e] for d, e in first.dart_map.items()},
    )


def arc_table(h: MultiGraph) -> Dict[Tuple[VertexId, VertexId], List[Dart]]:
    """Darts at x whose partner sits at y, keyed by (x, y)."""
    table: Dict[Tuple[VertexId, VertexId], List[Dart]] = {}
    for dart in h.darts:
        key = (h.endpoint(dart), h.endpoint(dart.partner()))
        table.setdefault(key, []).append(dart)
    return table


def vertex_plan(g: MultiGraph) -> List[Tuple[VertexId, List[Edge]]]:
    """Vertices in breadth-first order, each with the edges it closes."""
    order: List[VertexId] = []
    placed = set()
    for root in g.vertices:
        if root in placed:
            continue
        queue = [root]
        placed.add(root)
        while queue:
            v = queue.pop(0)
            order.append(v)
            for dart in g.darts_at[v]:
                w = g.endpoint(dart.partner())
                if w not in placed:
                    placed.add(w)
                    queue.append(w)
    rank = {v: i for i, v in enumerate(order)}
    closing: Dict[VertexId, List[Edge]] = {v: [] for v in order}
    for edge in g.edges:
        last = max(edge.ends, key=lambda v: rank[v])
        closing[last].append(edge)
    return [(v, closing[v]) for v in order]


def iter_graph_homomorphisms(g: MultiGraph, h: MultiGraph) -> Iterator[Tuple[Dict, Dict]]:
    """Yield (vertex_map, dart_map) pairs in canonical order."""
    plan = vertex_plan(g)
    arcs = arc_table(h)
    vertex_map: Dict[VertexId, VertexId] = {}
    dart_map: Dict[Dart, Dart] = {}

    def assign_edges(edges: List[Edge], k: int) -> Iterator[None]:
        if k == len(edges):
            yield None
            return
        edge = edges[k]
        for image in arcs.get((vertex_map[edge.ends[0]], vertex_map[edge.ends[1]]), ()):
            dart_map[Dart(edge.id, 0)] = image
            dart_map[Dart(edge.id, 1)] = image.partner()
            yield from assign_edges(edges, k + 1)
        dart_map.pop(Dart(edge.id, 0), None)
        dart_map.pop(Dart(edge.id, 1), None)

    def place(step: int) -> Iterator[Tuple[Dict, Dict]]:
        if step == len(plan):
            yield dict(vertex_map), dict(dart_map)
            return
        vertex, edges = plan[step]
        for image in h.vertices:
            vertex_map[vertex] = image
            if all(
                (vertex_map[e.ends[0]], vertex_map[e.ends[1]]) in arcs for e in edges
            ):
                for _ in assign_edges(edges, 0):
                    yield from place(step + 1)
        vertex_map.pop(vertex, None)

    yield from place(0)


def enumerate_graph_homomorphisms(g: MultiGraph, h: MultiGraph) -> List[GraphHom]:
    found = []
    for vertex_map, dart_map in iter_graph_homomorphisms(g, h):
        found.append(GraphHom(g, h, vertex_map, dart_map))
        if len(found) > settings.HOM_ENUMERATION_LIMIT:
            raise BudgetExceeded(
                f"more than {settings.HOM_ENUMERATION_LIMIT} homomorphisms"
            )
    return found


def count_graph_homomorphisms(g: MultiGraph, h: MultiGraph) -> int:
    """|Hom(g, h)| by vertex backtracking, multiplying per-edge dart choices."""
    plan = vertex_plan(g)
    arcs = arc_table(h)
    vertex_map: Dict[VertexId, VertexId] = {}

    def place(step: int) -> int:
        if step == len(plan):
            return 1
        vertex, edges = plan[step]
        total = 0
        for image in h.vertices:
            vertex_map[vertex] = image
            choices = 1
            for edge in edges:
                choices *= len(arcs.get((vertex_map[edge.ends[0]], vertex_map[edge.ends[1]]), ()))
                if not choices:
                    break
            if choices:
                total += choices * place(step + 1)
        vertex_map.pop(vertex, None)
        return total

    return place(0)


def universal_factor_graph(
    phi: GraphHom, phi_prime: GraphHom, product: Optional[TensorProduct] = None
) -> GraphHom:
    """The unique psi with both projections of psi equal to phi and phi_prime."""
    if product is None:
        product = tensor_product(phi.target, phi_prime.target)
    source = phi.source
    vertex_map = {
        v: product.vertex_of(phi.vertex_map[v], phi_prime.vertex_map[v])
        for v in source.vertices
    }
    dart_map = {
        dart: product.dart_of(phi.dart_map[dart], phi_prime.dart_map[dart])
        for dart in source.darts
    }
    return GraphHom(source, product.graph, vertex_map, dart_map)


def lift_path(info: TensorProduct, path: Walk, other: Walk) -> Walk:
    """The unique product walk projecting onto ``path`` and ``other``."""
    if len(path) != len(other):
        raise LengthMismatch(f"walk lengths differ: {len(path)} vs {len(other)}")
    steps = tuple(
        Traversal.from_dart(info.dart_of(a.out_dart, b.out_dart))
        for a, b in zip(path.steps, other.steps)
    )
    return Walk(info.vertex_of(path.start, other.start), steps)


def lift_cycle(info: TensorProduct, c1: Walk, c2: Walk, i: int, delta: int) -> Walk:
    """Lift of c1 against c2 started at its i-th vertex, reversed when delta = 1."""
    n, m = len(c1), len(c2)
    if not 0 <= i < m:
        raise IndexOutOfRange(f"start index {i} outside [0, {m})")
    second = c2.rotate(info.right, i)
    if delta:
        second = second.reversed(info.right)
    length = n * m // gcd(n, m)
    return lift_path(info, c1.repeat(length // n), second.repeat(length // m))


def _unordered_edge_id(x: VertexId, y: VertexId) -> EdgeId:
    a, b = sorted((x, y))
    return f"[{a}|{b}]"


def direct_product_s0(g: MultiGraph, h: MultiGraph) -> MultiGraph:
    """Direct product of simple graphs with loops; adjacency is coordinatewise."""
    for graph in (g, h):
        if graph.has_parallel_edges:
            raise NotInS0("parallel edges present")
        check_factor_ids(graph.vertices, "vertex")
    vertices = [pair_id(v, u) for v in g.vertices for u in h.vertices]
    edges: Dict[EdgeId, Edge] = {}
    for a in g.edges:
        for b in h.edges:
            for x, y in (
                (pair_id(a.ends[0], b.ends[0]), pair_id(a.ends[1], b.ends[1])),
                (pair_id(a.ends[0], b.ends[1]), pair_id(a.ends[1], b.ends[0])),
            ):
                eid = _unordered_edge_id(x, y)
                edges.setdefault(eid, Edge(eid, tuple(sorted((x, y)))))
    return MultiGraph.build(vertices, edges.values())


def cartesian_product(g: MultiGraph, h: MultiGraph) -> MultiGraph:
    for graph in (g, h):
        if not graph.is_simple:
            raise NotSimple("cartesian product needs simple loop-free factors")
        check_factor_ids(graph.vertices, "vertex")
    vertices = [pair_id(v, u) for v in g.vertices for u in h.vertices]
    edges = []
    for v in g.vertices:
        for b in h.edges:
            x, y = pair_id(v, b.ends[0]), pair_id(v, b.ends[1])
            edges.append(Edge(_unordered_edge_id(x, y), tuple(sorted((x, y)))))
    for u in h.vertices:
        for a in g.edges:
            x, y = pair_id(a.ends[0], u), pair_id(a.ends[1], u)
            edges.append(Edge(_unordered_edge_id(x, y), tuple(sorted((x, y)))))
    return MultiGraph.build(vertices, edges)
