"""
Finite multigraphs with loops and parallel edges.

Darts (edge ends) are the primitive incidence object: every edge owns the
darts ``(edge, 0)`` and ``(edge, 1)``, also when both sit on one vertex.
Walks are dart sequences, never vertex sequences.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Tuple, Union

import networkx as nx

from polycell.core.config import settings
from polycell.core.errors import (
    DanglingEdge,
    DuplicateId,
    EmptyWalk,
    InvalidWalk,
    UnknownVertex,
)

VertexId = str
EdgeId = str
CycleKey = Tuple[Tuple[EdgeId, bool], ...]


class Dart(NamedTuple):
    edge: EdgeId
    side: int

    def partner(self) -> "Dart":
        return Dart(self.edge, 1 - self.side)


class Traversal(NamedTuple):
    """One step of a walk; forward leaves through side 0 and enters through side 1."""

    edge: EdgeId
    forward: bool

    @property
    def out_dart(self) -> Dart:
        return Dart(self.edge, 0 if self.forward else 1)

    @property
    def in_dart(self) -> Dart:
        return Dart(self.edge, 1 if self.forward else 0)

    def reversed(self) -> "Traversal":
        return Traversal(self.edge, not self.forward)

    @property
    def token(self) -> str:
        return f"{self.edge}{'+' if self.forward else '-'}"

    @classmethod
    def from_dart(cls, out_dart: Dart) -> "Traversal":
        return cls(out_dart.edge, out_dart.side == 0)


@dataclass(frozen=True)
class Edge:
    id: EdgeId
    ends: Tuple[VertexId, VertexId]

    @property
    def is_loop(self) -> bool:
        return self.ends[0] == self.ends[1]


EdgeLike = Union[Edge, Tuple[EdgeId, VertexId, VertexId]]


@dataclass(frozen=True)
class MultiGraph:
    vertices: Tuple[VertexId, ...]
    edges: Tuple[Edge, ...]

    @classmethod
    def build(cls, vertices: Iterable[VertexId], edges: Iterable[EdgeLike]) -> "MultiGraph":
        """Create a graph in canonical (sorted-id) order and validate it."""
        records = []
        for edge in edges:
            if not isinstance(edge, Edge):
                edge_id, end0, end1 = edge
                edge = Edge(edge_id, (end0, end1))
            records.append(edge)
        graph = cls(
            vertices=tuple(sorted(vertices)),
            edges=tuple(sorted(records, key=lambda e: e.id)),
        )
        validate(graph)
        return graph

    @cached_property
    def vertex_set(self) -> FrozenSet[VertexId]:
        return frozenset(self.vertices)

    @cached_property
    def edge_index(self) -> Dict[EdgeId, Edge]:
        return {edge.id: edge for edge in self.edges}

    @cached_property
    def darts(self) -> Tuple[Dart, ...]:
        return tuple(Dart(edge.id, side) for edge in self.edges for side in (0, 1))

    @cached_property
    def darts_at(self) -> Dict[VertexId, Tuple[Dart, ...]]:
        table: Dict[VertexId, List[Dart]] = {v: [] for v in self.vertices}
        for dart in self.darts:
            table[self.endpoint(dart)].append(dart)
        return {v: tuple(darts) for v, darts in table.items()}

    def edge(self, edge_id: EdgeId) -> Edge:
        return self.edge_index[edge_id]

    def endpoint(self, dart: Dart) -> VertexId:
        return self.edge_index[dart.edge].ends[dart.side]

    def tail(self, step: Traversal) -> VertexId:
        return self.endpoint(step.out_dart)

    def head(self, step: Traversal) -> VertexId:
        return self.endpoint(step.in_dart)

    @property
    def has_loops(self) -> bool:
        return any(edge.is_loop for edge in self.edges)

    @property
    def has_parallel_edges(self) -> bool:
        seen = set()
        for edge in self.edges:
            key = frozenset(edge.ends) if not edge.is_loop else (edge.ends[0],)
            if key in seen:
                return True
            seen.add(key)
        return False

    @property
    def is_simple(self) -> bool:
        return not self.has_loops and not self.has_parallel_edges

    @cached_property
    def networkx(self) -> nx.MultiGraph:
        return to_networkx(self)


@dataclass(frozen=True)
class Walk:
    start: VertexId
    steps: Tuple[Traversal, ...]

    def __len__(self) -> int:
        return len(self.steps)

    @classmethod
    def closed(cls, graph: MultiGraph, steps: Iterable[Traversal]) -> "Walk":
        """A non-empty walk whose start is read off its first step."""
        steps = tuple(steps)
        if not steps:
            raise EmptyWalk("a closed walk needs at least one step")
        return cls(graph.tail(steps[0]), steps)

    def end(self, graph: MultiGraph) -> VertexId:
        return graph.head(self.steps[-1]) if self.steps else self.start

    def vertices(self, graph: MultiGraph) -> List[VertexId]:
        return [self.start] + [graph.head(step) for step in self.steps]

    def repeat(self, times: int) -> "Walk":
        return Walk(self.start, self.steps * times)

    def rotate(self, graph: MultiGraph, offset: int) -> "Walk":
        if not self.steps:
            return self
        offset %= len(self.steps)
        steps = self.steps[offset:] + self.steps[:offset]
        return Walk(graph.tail(steps[0]), steps)

    def reversed(self, graph: MultiGraph) -> "Walk":
        steps = tuple(step.reversed() for step in reversed(self.steps))
        return Walk(self.end(graph), steps)

    @property
    def tokens(self) -> List[str]:
        return [step.token for step in self.steps]


ClosedWalk = Walk


def validate(graph: MultiGraph) -> None:
    """Raise the first structural violation of ``graph``."""
    if len(set(graph.vertices)) != len(graph.vertices):
        raise DuplicateId("vertex ids are not unique")
    seen = set()
    for edge in graph.edges:
        if edge.id in seen:
            raise DuplicateId(f"edge id {edge.id!r} used twice")
        seen.add(edge.id)
        for end in edge.ends:
            if end not in graph.vertex_set:
                raise DanglingEdge(f"edge {edge.id!r} references missing vertex {end!r}")


def check_walk(graph: MultiGraph, walk: Walk, closed: bool = False) -> None:
    """Raise InvalidWalk (or EmptyWalk) unless ``walk`` chains in ``graph``."""
    if closed and not walk.steps:
        raise EmptyWalk("closed walk of length 0")
    if walk.start not in graph.vertex_set:
        raise InvalidWalk(f"walk starts at unknown vertex {walk.start!r}")
    current = walk.start
    for position, step in enumerate(walk.steps):
        if step.edge not in graph.edge_index:
            raise InvalidWalk(f"step {position} uses unknown edge {step.edge!r}")
        if graph.tail(step) != current:
            raise InvalidWalk(f"chain break at step {position} ({step.token})")
        current = graph.head(step)
    if closed and current != walk.start:
        raise InvalidWalk("walk does not return to its start")


def degree(graph: MultiGraph, vertex: VertexId) -> int:
    if vertex not in graph.vertex_set:
        raise UnknownVertex(vertex)
    return len(graph.darts_at[vertex])


def to_networkx(graph: MultiGraph) -> nx.MultiGraph:
    nxg = nx.MultiGraph()
    nxg.add_nodes_from(graph.vertices)
    for edge in graph.edges:
        nxg.add_edge(edge.ends[0], edge.ends[1], key=edge.id)
    return nxg


def induced_subgraph(graph: MultiGraph, vertices: Iterable[VertexId]) -> MultiGraph:
    keep = set(vertices)
    edges = [e for e in graph.edges if e.ends[0] in keep and e.ends[1] in keep]
    return MultiGraph(tuple(sorted(keep)), tuple(edges))


def components(graph: MultiGraph) -> List[MultiGraph]:
    """Connected components as induced subgraphs, ordered by smallest vertex id."""
    parts = [sorted(part) for part in nx.connected_components(graph.networkx)]
    parts.sort(key=lambda part: part[0])
    return [induced_subgraph(graph, part) for part in parts]


def is_connected(graph: MultiGraph) -> bool:
    return bool(graph.vertices) and nx.is_connected(graph.networkx)


def is_bipartite(graph: MultiGraph) -> bool:
    if graph.has_loops:
        return False
    return nx.is_bipartite(graph.networkx)


def neighbor_sets(graph: MultiGraph) -> Dict[VertexId, FrozenSet[VertexId]]:
    """Neighbors ignoring multiplicity; a loop makes a vertex its own neighbor."""
    table: Dict[VertexId, set] = {v: set() for v in graph.vertices}
    for edge in graph.edges:
        a, b = edge.ends
        table[a].add(b)
        table[b].add(a)
    return {v: frozenset(n) for v, n in table.items()}


def is_r_thin(graph: MultiGraph) -> bool:
    sets = list(neighbor_sets(graph).values())
    return len(set(sets)) == len(sets)


def reduce_closed_walk(walk: Walk) -> Tuple[Walk, int]:
    """Split a closed walk into its primitive cycle and the number of repetitions."""
    n = len(walk.steps)
    if n == 0:
        raise EmptyWalk("cannot reduce an empty walk")
    for period in range(1, n + 1):
        if n % period:
            continue
        if all(walk.steps[k] == walk.steps[k % period] for k in range(period, n)):
            return Walk(walk.start, walk.steps[:period]), n // period
    raise AssertionError("unreachable: the full length is always a period")


def canonical_cycle_key(walk: Walk, allow_reversal: Optional[bool] = None) -> CycleKey:
    """Smallest rotation (and, by default, reversal) of the step sequence."""
    if not walk.steps:
        raise EmptyWalk("cannot key an empty walk")
    if allow_reversal is None:
        allow_reversal = settings.CYCLE_KEY_REVERSAL
    forward = [(step.edge, step.forward) for step in walk.steps]
    candidates = [forward]
    if allow_reversal:
        candidates.append([(edge, not fwd) for edge, fwd in reversed(forward)])
    n = len(forward)
    return min(
        tuple(seq[k:] + seq[:k]) for seq in candidates for k in range(n)
    )


def shortest_path_distance(graph: MultiGraph, u: VertexId, v: VertexId) -> Optional[int]:
    """Edge-count distance, or None when ``v`` is unreachable from ``u``."""
    for vertex in (u, v):
        if vertex not in graph.vertex_set:
            raise UnknownVertex(vertex)
    try:
        return nx.shortest_path_length(graph.networkx, u, v)
    except nx.NetworkXNoPath:
        return None
