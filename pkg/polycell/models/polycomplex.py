"""
Polygonal cell complexes: a multigraph skeleton with polygons attached
along closed dart walks.

A corner ``(face, j)`` sits at the vertex between boundary steps ``j - 1``
and ``j`` and joins the in-dart of step ``j - 1`` with the out-dart of step
``j``. Its two flags are side 0 (touching the in-dart) and side 1 (touching
the out-dart).
"""

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Tuple

from polycell.core.errors import BadParameter, DuplicateId, UnknownVertex
from polycell.models.multigraph import (
    Dart,
    Edge,
    MultiGraph,
    Traversal,
    VertexId,
    Walk,
    canonical_cycle_key,
    check_walk,
    components,
    induced_subgraph,
    is_connected,
    reduce_closed_walk,
    validate,
)

FaceId = str


class Corner(NamedTuple):
    face: FaceId
    position: int


class Flag(NamedTuple):
    face: FaceId
    position: int
    side: int

    @property
    def corner(self) -> Corner:
        return Corner(self.face, self.position)


@dataclass(frozen=True)
class Face:
    id: FaceId
    boundary: Walk

    def __len__(self) -> int:
        return len(self.boundary.steps)

    @classmethod
    def from_steps(cls, graph: MultiGraph, face_id: FaceId, steps: Iterable[Traversal]) -> "Face":
        return cls(face_id, Walk.closed(graph, steps))


@dataclass(frozen=True)
class Complex:
    skeleton: MultiGraph
    faces: Tuple[Face, ...]

    @classmethod
    def build(cls, skeleton: MultiGraph, faces: Iterable[Face] = ()) -> "Complex":
        complex_ = cls(skeleton, tuple(sorted(faces, key=lambda f: f.id)))
        validate_complex(complex_)
        return complex_

    @cached_property
    def face_index(self) -> Dict[FaceId, Face]:
        return {face.id: face for face in self.faces}

    def face(self, face_id: FaceId) -> Face:
        return self.face_index[face_id]

    @cached_property
    def face_vertices(self) -> Dict[FaceId, Tuple[VertexId, ...]]:
        """Vertex at each corner position of every face."""
        graph = self.skeleton
        return {
            face.id: tuple(graph.tail(step) for step in face.boundary.steps)
            for face in self.faces
        }

    def corner_vertex(self, corner: Corner) -> VertexId:
        return self.face_vertices[corner.face][corner.position]

    def corner_darts(self, corner: Corner) -> Tuple[Dart, Dart]:
        steps = self.face(corner.face).boundary.steps
        n = len(steps)
        return steps[(corner.position - 1) % n].in_dart, steps[corner.position].out_dart

    def flag_dart(self, flag: Flag) -> Dart:
        return self.corner_darts(flag.corner)[flag.side]

    @cached_property
    def corners_at(self) -> Dict[VertexId, Tuple[Corner, ...]]:
        table: Dict[VertexId, List[Corner]] = {v: [] for v in self.skeleton.vertices}
        for face in self.faces:
            for position, vertex in enumerate(self.face_vertices[face.id]):
                table[vertex].append(Corner(face.id, position))
        return {v: tuple(c) for v, c in table.items()}

    @cached_property
    def flags(self) -> Tuple[Flag, ...]:
        return tuple(
            Flag(face.id, position, side)
            for face in self.faces
            for position in range(len(face))
            for side in (0, 1)
        )


@dataclass(frozen=True)
class LinkGraph:
    vertex: VertexId
    graph: MultiGraph
    darts: Dict[str, Dart]
    corners: Dict[str, Corner]

    @cached_property
    def dart_ids(self) -> Dict[Dart, str]:
        return {dart: key for key, dart in self.darts.items()}

    @cached_property
    def corner_ids(self) -> Dict[Corner, str]:
        return {corner: key for key, corner in self.corners.items()}


def dart_token(dart: Dart) -> str:
    return f"{dart.edge}.{dart.side}"


def corner_token(corner: Corner) -> str:
    return f"{corner.face}@{corner.position}"


def validate_complex(x: Complex) -> None:
    validate(x.skeleton)
    seen = set()
    for face in x.faces:
        if face.id in seen:
            raise DuplicateId(f"face id {face.id!r} used twice")
        seen.add(face.id)
        check_walk(x.skeleton, face.boundary, closed=True)


def link(x: Complex, vertex: VertexId) -> LinkGraph:
    """Link graph at ``vertex``: darts as vertices, corners as edges."""
    if vertex not in x.skeleton.vertex_set:
        raise UnknownVertex(vertex)
    darts = {dart_token(d): d for d in x.skeleton.darts_at[vertex]}
    corners = {}
    edges = []
    for corner in x.corners_at[vertex]:
        key = corner_token(corner)
        corners[key] = corner
        incoming, outgoing = x.corner_darts(corner)
        edges.append(Edge(key, (dart_token(incoming), dart_token(outgoing))))
    graph = MultiGraph.build(darts.keys(), edges)
    return LinkGraph(vertex, graph, darts, corners)


def flags(x: Complex) -> List[Flag]:
    return list(x.flags)


def euler_characteristic(x: Complex) -> int:
    return len(x.skeleton.vertices) - len(x.skeleton.edges) + len(x.faces)


def polygon_product_euler(n: int, m: int) -> int:
    """Closed form for the Euler characteristic of an n-gon times an m-gon."""
    if n < 1 or m < 1:
        raise BadParameter("polygon lengths start at 1")
    return -n * m + 2 * gcd(n, m)


def face_edges(face: Face) -> List[str]:
    return [step.edge for step in face.boundary.steps]


def is_polygonal(x: Complex) -> bool:
    graph = x.skeleton
    if not graph.is_simple:
        return False
    vertex_sets: Dict[FaceId, FrozenSet[VertexId]] = {}
    edge_sets: Dict[FaceId, FrozenSet[str]] = {}
    for face in x.faces:
        vertices = x.face_vertices[face.id]
        edges = face_edges(face)
        if len(set(vertices)) != len(vertices) or len(set(edges)) != len(edges):
            return False
        vertex_sets[face.id] = frozenset(vertices)
        edge_sets[face.id] = frozenset(edges)

    # A face meets an edge in nothing, one endpoint, or the whole edge.
    for face in x.faces:
        for edge in graph.edges:
            if edge.id in edge_sets[face.id]:
                continue
            if edge.ends[0] in vertex_sets[face.id] and edge.ends[1] in vertex_sets[face.id]:
                return False

    ids = [face.id for face in x.faces]
    for a_index, a in enumerate(ids):
        for b in ids[a_index + 1:]:
            shared_vertices = vertex_sets[a] & vertex_sets[b]
            shared_edges = edge_sets[a] & edge_sets[b]
            if not shared_vertices:
                continue
            if len(shared_vertices) == 1 and not shared_edges:
                continue
            if len(shared_edges) == 1:
                (edge_id,) = shared_edges
                if shared_vertices == frozenset(graph.edge(edge_id).ends):
                    continue
            return False
    return True


def is_simple_complex(x: Complex) -> bool:
    if not x.faces:
        return False
    keys = set()
    for face in x.faces:
        _, multiplicity = reduce_closed_walk(face.boundary)
        if multiplicity != 1:
            return False
        key = canonical_cycle_key(face.boundary)
        if key in keys:
            return False
        keys.add(key)
    return True


def uniform_face_length(x: Complex) -> int:
    """Common face length, or 0 when faces are missing or lengths differ."""
    lengths = {len(face) for face in x.faces}
    return lengths.pop() if len(lengths) == 1 else 0


def antipodal_pairs(x: Complex, face: Face) -> List[Tuple[VertexId, VertexId]]:
    vertices = x.face_vertices[face.id]
    half = len(vertices) // 2
    return [(vertices[j], vertices[j + half]) for j in range(half)]


def is_elementary(x: Complex) -> bool:
    if not is_connected(x.skeleton):
        return False
    length = uniform_face_length(x)
    if length < 2 or length % 2:
        return False
    pair_counts: Counter = Counter()
    for face in x.faces:
        for u, v in antipodal_pairs(x, face):
            if u == v:
                return False
            pair_counts[frozenset((u, v))] += 1
    return all(count == 1 for count in pair_counts.values())


def is_ordinary(x: Complex) -> bool:
    if not is_connected(x.skeleton):
        return False
    length = uniform_face_length(x)
    if length < 4 or length % 2:
        return False

    for face in x.faces:
        seen: Dict[VertexId, int] = {}
        for position, vertex in enumerate(x.face_vertices[face.id]):
            if vertex in seen and (position - seen[vertex]) % 2:
                return False
            seen.setdefault(vertex, position)

    vertex_sets = {face.id: frozenset(x.face_vertices[face.id]) for face in x.faces}
    for face in x.faces:
        vertices = x.face_vertices[face.id]
        for other in x.faces:
            if other.id == face.id or not (vertex_sets[face.id] & vertex_sets[other.id]):
                continue
            meeting = [j for j, v in enumerate(vertices) if v in vertex_sets[other.id]]
            if len(meeting) == 1:
                continue
            if len(meeting) == 2:
                a, b = meeting
                if (b - a) % length in (1, length - 1):
                    continue
            return False
    return True


def has_surface_structure(x: Complex) -> bool:
    """Every edge met at most twice by boundaries and every link a path or a cycle."""
    usage: Counter = Counter(step.edge for face in x.faces for step in face.boundary.steps)
    if any(count > 2 for count in usage.values()):
        return False
    for vertex in x.skeleton.vertices:
        link_graph = link(x, vertex).graph
        if not link_graph.edges or not is_connected(link_graph):
            return False
        if any(len(darts) > 2 for darts in link_graph.darts_at.values()):
            return False
    return True


def component_complex(x: Complex, vertices: Iterable[VertexId]) -> Complex:
    """Subcomplex spanned by one union of skeleton components."""
    keep = frozenset(vertices)
    skeleton = induced_subgraph(x.skeleton, keep)
    faces = tuple(face for face in x.faces if face.boundary.start in keep)
    return Complex(skeleton, faces)


def complex_components(x: Complex) -> List[Complex]:
    return [component_complex(x, part.vertices) for part in components(x.skeleton)]


def disjoint_union(x: Complex, y: Complex) -> Complex:
    def tagged(tag: str, source: Complex):
        graph = source.skeleton
        vertices = [f"{tag}:{v}" for v in graph.vertices]
        edges = [
            Edge(f"{tag}:{e.id}", (f"{tag}:{e.ends[0]}", f"{tag}:{e.ends[1]}"))
            for e in graph.edges
        ]
        faces = [
            Face(
                f"{tag}:{face.id}",
                Walk(
                    f"{tag}:{face.boundary.start}",
                    tuple(Traversal(f"{tag}:{s.edge}", s.forward) for s in face.boundary.steps),
                ),
            )
            for face in source.faces
        ]
        return vertices, edges, faces

    xv, xe, xf = tagged("0", x)
    yv, ye, yf = tagged("1", y)
    return Complex.build(MultiGraph.build(xv + yv, xe + ye), xf + yf)

