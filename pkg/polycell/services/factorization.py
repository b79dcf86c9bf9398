"""
Reductive projections, skeleton splits and prime factorization.

A skeleton split identifies the skeleton of a complex with a tensor product
of graphs through an explicit isomorphism, so every dart of the complex has
coordinates in the factor graphs. Graph factorization places the vertices
of a graph on a rows x cols grid by backtracking; complex factorization
groups the prime skeleton factors until the faces split as well.
"""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Dict, Iterator, List, Literal, Optional, Sequence, Tuple, Union

import networkx as nx

from polycell.core.config import settings
from polycell.core.errors import (
    BudgetExceeded,
    HypothesisViolated,
    InvalidSplit,
    NotInS0,
    NotSimple,
)
from polycell.models.multigraph import (
    Dart,
    Edge,
    MultiGraph,
    Traversal,
    VertexId,
    Walk,
    canonical_cycle_key,
    is_bipartite,
    is_connected,
    is_r_thin,
    reduce_closed_walk,
)
from polycell.models.polycomplex import Complex, Face, FaceId, is_elementary, is_simple_complex
from polycell.services.complex_products import (
    ComplexHom,
    ProductChain,
    identity_hom,
    is_complex_homomorphism,
    product_chain,
)
from polycell.services.graph_products import (
    GraphHom,
    Which,
    direct_product_s0,
    is_graph_homomorphism,
    pair_id,
)
from polycell.services.symmetry import complex_isomorphism, graph_isomorphism, is_edge_transitive

logger = logging.getLogger(__name__)

GraphClass = Literal["S", "S0"]


@dataclass(frozen=True)
class SkeletonSplit:
    """Skeleton of ``complex`` identified with the tensor product of ``gammas``."""

    complex: Complex
    gammas: Tuple[MultiGraph, ...]
    chain: ProductChain
    iso: GraphHom

    @cached_property
    def vertex_coords(self) -> Dict[VertexId, Tuple[VertexId, ...]]:
        return {
            self.iso.vertex_map[v]: self.chain.flatten_vertex(v)
            for v in self.chain.complex.skeleton.vertices
        }

    @cached_property
    def dart_coords(self) -> Dict[Dart, Tuple[Dart, ...]]:
        return {
            self.iso.dart_map[d]: self.chain.flatten_dart(d)
            for d in self.chain.complex.skeleton.darts
        }

    @cached_property
    def coords_dart(self) -> Dict[Tuple[Dart, ...], Dart]:
        return {coords: dart for dart, coords in self.dart_coords.items()}

    def __len__(self) -> int:
        return len(self.gammas)


def _check_split(split: SkeletonSplit) -> SkeletonSplit:
    iso = split.iso
    source = split.chain.complex.skeleton
    target = split.complex.skeleton
    if iso.source != source or iso.target != target:
        raise InvalidSplit("label map does not run from the factor product to the skeleton")
    if not is_graph_homomorphism(iso):
        raise InvalidSplit("label map is not a graph homomorphism")
    if len(set(iso.vertex_map.values())) != len(target.vertices) or len(source.vertices) != len(
        target.vertices
    ):
        raise InvalidSplit("label map is not a bijection on vertices")
    if len(set(iso.dart_map.values())) != len(target.darts) or len(source.darts) != len(
        target.darts
    ):
        raise InvalidSplit("label map is not a bijection on darts")
    return split


def _identity_hom(source: MultiGraph, target: MultiGraph) -> GraphHom:
    return GraphHom(
        source, target, {v: v for v in source.vertices}, {d: d for d in source.darts}
    )


def natural_split(chain: ProductChain) -> SkeletonSplit:
    """The split a product carries by construction."""
    gammas = tuple(f.skeleton for f in chain.factors)
    graph_chain = product_chain(gammas)
    iso = _identity_hom(graph_chain.complex.skeleton, chain.complex.skeleton)
    return _check_split(SkeletonSplit(chain.complex, gammas, graph_chain, iso))


def split_from_isomorphism(
    x: Complex, gammas: Sequence[MultiGraph], iso: GraphHom
) -> SkeletonSplit:
    """A split from an isomorphism of the factor product onto the skeleton of ``x``."""
    gammas = tuple(gammas)
    graph_chain = product_chain(gammas)
    return _check_split(SkeletonSplit(x, gammas, graph_chain, iso))


def coarsen_split(split: SkeletonSplit, groups: Sequence[Sequence[int]]) -> SkeletonSplit:
    """Merge the factors of ``split`` into one product per group."""
    groups = [tuple(group) for group in groups]
    if sorted(i for group in groups for i in group) != list(range(len(split))):
        raise InvalidSplit("groups must partition the factor indices")
    sub_chains = [product_chain([split.gammas[i] for i in group]) for group in groups]
    gammas = tuple(sub.complex.skeleton for sub in sub_chains)
    graph_chain = product_chain(gammas)
    source = graph_chain.complex.skeleton

    vertex_map = {}
    for v in source.vertices:
        coords: List[VertexId] = [""] * len(split)
        for group, sub, part in zip(groups, sub_chains, graph_chain.flatten_vertex(v)):
            for i, c in zip(group, sub.flatten_vertex(part)):
                coords[i] = c
        vertex_map[v] = split.iso.vertex_map[split.chain.unflatten_vertex(coords)]
    dart_map = {}
    for d in source.darts:
        dart_coords: List[Optional[Dart]] = [None] * len(split)
        for group, sub, part in zip(groups, sub_chains, graph_chain.flatten_dart(d)):
            for i, c in zip(group, sub.flatten_dart(part)):
                dart_coords[i] = c
        dart_map[d] = split.coords_dart[tuple(dart_coords)]
    iso = GraphHom(source, split.complex.skeleton, vertex_map, dart_map)
    return SkeletonSplit(split.complex, gammas, graph_chain, iso)


def _factor_index(which: Union[int, Which]) -> int:
    if which == "left":
        return 0
    if which == "right":
        return 1
    return int(which)


def reductive_projection(
    x: Complex, split: SkeletonSplit, f: FaceId, which: Union[int, Which]
) -> Face:
    """Project the boundary of ``f`` to one factor and keep its primitive cycle."""
    if split.complex is not x and split.complex != x:
        raise InvalidSplit("split belongs to a different complex")
    index = _factor_index(which)
    if not 0 <= index < len(split):
        raise InvalidSplit(f"factor index {index} outside the split")
    face = x.face(f)
    coords = split.vertex_coords[face.boundary.start]
    steps = tuple(
        Traversal.from_dart(split.dart_coords[step.out_dart][index])
        for step in face.boundary.steps
    )
    primitive, _ = reduce_closed_walk(Walk(coords[index], steps))
    return Face(f"{f}/{index}", primitive)


@dataclass(frozen=True)
class SplitOutcome:
    """Factors when the faces split; otherwise the faces of X witnessing the failure."""

    factors: Optional[Tuple[Complex, ...]]
    witness: Optional[Tuple[FaceId, ...]] = None
    chain: Optional[ProductChain] = None

    def __bool__(self) -> bool:
        return self.factors is not None


def _candidate_factors(
    x: Complex, split: SkeletonSplit
) -> Tuple[List[Complex], List[Dict[FaceId, FaceId]]]:
    """Simple complexes on the split graphs whose faces are the reductive projections."""
    factors = []
    origins = []
    for index, gamma in enumerate(split.gammas):
        found: Dict[Tuple, Tuple[Face, FaceId]] = {}
        for face in x.faces:
            projected = reductive_projection(x, split, face.id, index)
            found.setdefault(canonical_cycle_key(projected.boundary), (projected, face.id))
        faces = []
        origin = {}
        for k, key in enumerate(sorted(found)):
            projected, source = found[key]
            fid = f"f{k}"
            faces.append(Face(fid, projected.boundary))
            origin[fid] = source
        factors.append(Complex.build(gamma, faces))
        origins.append(origin)
    return factors, origins


def try_complex_split(x: Complex, split: SkeletonSplit) -> SplitOutcome:
    """Split the faces of a simple complex along a skeleton split, when possible."""
    if not is_simple_complex(x):
        raise NotSimple("face splitting needs a simple complex")
    factors, origins = _candidate_factors(x, split)
    chain = product_chain(factors)

    present = {canonical_cycle_key(face.boundary): face.id for face in x.faces}
    produced = set()
    for face in chain.complex.faces:
        steps = [
            Traversal.from_dart(split.coords_dart[chain.flatten_dart(step.out_dart)])
            for step in face.boundary.steps
        ]
        key = canonical_cycle_key(Walk(x.skeleton.tail(steps[0]), tuple(steps)))
        if key not in present:
            generators = chain.flatten_face(face.id)
            witness = tuple(origin[g] for origin, g in zip(origins, generators))
            logger.debug(f"split rejected: faces {witness} generate a face missing from X")
            return SplitOutcome(None, witness)
        produced.add(key)
    extra = [fid for key, fid in sorted(present.items()) if key not in produced]
    if extra:
        logger.debug(f"split rejected: face {extra[0]} is not generated by its projections")
        return SplitOutcome(None, (extra[0],))
    return SplitOutcome(tuple(factors), None, chain)


# Graph factorization

GridSolution = Tuple[List[Tuple[int, int]], List[List[bool]], List[List[bool]]]


class _GridRealizer:
    """Place the vertices of a graph on a grid so that adjacency factors.

    Rows and columns are numbered in order of first use, so every pair of
    partitions is produced once.
    """

    def __init__(self, graph: MultiGraph, rows: int, cols: int, allow_loops: bool, budget: int):
        self.vertices = list(graph.vertices)
        index = {v: i for i, v in enumerate(self.vertices)}
        n = len(self.vertices)
        self.adj = [[False] * n for _ in range(n)]
        for edge in graph.edges:
            a, b = index[edge.ends[0]], index[edge.ends[1]]
            self.adj[a][b] = self.adj[b][a] = True
        self.degree = [sum(row) for row in self.adj]
        self.rows, self.cols = rows, cols
        self.left: List[List[Optional[bool]]] = [[None] * rows for _ in range(rows)]
        self.right: List[List[Optional[bool]]] = [[None] * cols for _ in range(cols)]
        if not allow_loops:
            for a in range(rows):
                self.left[a][a] = False
            for b in range(cols):
                self.right[b][b] = False
        self.cell: List[Optional[Tuple[int, int]]] = [None] * n
        self.at: Dict[Tuple[int, int], int] = {}
        self.row_members: List[List[int]] = [[] for _ in range(rows)]
        self.col_members: List[List[int]] = [[] for _ in range(cols)]
        self.trail: List[Tuple[List[List[Optional[bool]]], int, int]] = []
        self.order = self._placement_order(graph, index)
        self.budget = budget
        self.nodes = 0

    @staticmethod
    def _placement_order(graph: MultiGraph, index: Dict[VertexId, int]) -> List[int]:
        order: List[int] = []
        for part in sorted(nx.connected_components(graph.networkx), key=min):
            order += [index[v] for v in nx.bfs_tree(graph.networkx, min(part))]
        return order

    def _set(self, matrix, a: int, c: int, value: bool) -> bool:
        current = matrix[a][c]
        if current is not None:
            return current == value
        matrix[a][c] = value
        matrix[c][a] = value
        self.trail.append((matrix, a, c))
        if not value:
            return True
        # A new adjacency in one factor forbids the other factor's entry for
        # every placed non-adjacent pair it covers.
        if matrix is self.left:
            members, other, position = self.row_members, self.right, 1
        else:
            members, other, position = self.col_members, self.left, 0
        for x in members[a]:
            for y in members[c]:
                if not self.adj[x][y]:
                    p, q = self.cell[x][position], self.cell[y][position]
                    if not self._set(other, p, q, False):
                        return False
        return True

    def _undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            matrix, a, c = self.trail.pop()
            matrix[a][c] = None
            matrix[c][a] = None

    def _consistent(self, x: int, a: int, b: int) -> bool:
        for y, position in enumerate(self.cell):
            if position is None:
                continue
            c, d = position
            if self.adj[x][y]:
                if not self._set(self.left, a, c, True) or not self._set(self.right, b, d, True):
                    return False
            else:
                left, right = self.left[a][c], self.right[b][d]
                if left and right:
                    return False
                if left and not self._set(self.right, b, d, False):
                    return False
                if right and not self._set(self.left, a, c, False):
                    return False
        # deg(a, b) * deg(c, d) = deg(a, d) * deg(c, b) on every placed rectangle
        for y in self.row_members[a]:
            d = self.cell[y][1]
            for z in self.col_members[b]:
                w = self.at.get((self.cell[z][0], d))
                if w is None:
                    continue
                if self.degree[x] * self.degree[w] != self.degree[y] * self.degree[z]:
                    return False
        return True

    def _place(self, x: int, a: int, b: int) -> None:
        self.cell[x] = (a, b)
        self.at[(a, b)] = x
        self.row_members[a].append(x)
        self.col_members[b].append(x)

    def _unplace(self, x: int) -> None:
        a, b = self.cell[x]
        self.cell[x] = None
        del self.at[(a, b)]
        self.row_members[a].pop()
        self.col_members[b].pop()

    def solutions(self) -> Iterator[GridSolution]:
        yield from self._search(0, 0, 0)

    def _search(self, step: int, used_rows: int, used_cols: int):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"grid placement exceeded {self.budget} nodes")
        if step == len(self.order):
            left = [[bool(v) for v in row] for row in self.left]
            right = [[bool(v) for v in row] for row in self.right]
            yield list(self.cell), left, right
            return
        x = self.order[step]
        for a in range(min(used_rows + 1, self.rows)):
            for b in range(min(used_cols + 1, self.cols)):
                if (a, b) in self.at:
                    continue
                mark = len(self.trail)
                self._place(x, a, b)
                if self._consistent(x, a, b):
                    yield from self._search(
                        step + 1, max(used_rows, a + 1), max(used_cols, b + 1)
                    )
                self._unplace(x)
                self._undo(mark)


def _matrix_graph(matrix: List[List[bool]], prefix: str) -> MultiGraph:
    k = len(matrix)
    vertices = [f"{prefix}{a}" for a in range(k)]
    edges = [
        Edge(f"{vertices[a]}~{vertices[c]}", (vertices[a], vertices[c]))
        for a in range(k)
        for c in range(a, k)
        if matrix[a][c]
    ]
    return MultiGraph.build(vertices, edges)


def _size_pairs(n: int, minimum: int) -> List[Tuple[int, int]]:
    return [(k, n // k) for k in range(minimum, n + 1) if n % k == 0 and minimum <= k <= n // k]


def iter_tensor_splits(
    g: MultiGraph, rows: int, cols: int, allow_loops: bool = False
) -> Iterator[Tuple[MultiGraph, MultiGraph, Dict[VertexId, VertexId]]]:
    """All ways of writing ``g`` as a product of a ``rows``- and a ``cols``-vertex graph.

    Yields the two factors and the vertex map from product pair ids to ``g``.
    """
    if rows * cols != len(g.vertices):
        return
    realizer = _GridRealizer(g, rows, cols, allow_loops, settings.SEARCH_NODE_BUDGET)
    for cells, left, right in realizer.solutions():
        a_graph = _matrix_graph(left, "a")
        b_graph = _matrix_graph(right, "b")
        vertex_map = {
            pair_id(f"a{a}", f"b{b}"): realizer.vertices[x] for x, (a, b) in enumerate(cells)
        }
        yield a_graph, b_graph, vertex_map


def _dart_counts(g: MultiGraph) -> Dict[Tuple[VertexId, VertexId], int]:
    """Darts leaving each vertex towards each vertex; a loop contributes two."""
    counts: Counter = Counter()
    for edge in g.edges:
        u, v = edge.ends
        counts[(u, v)] += 1
        counts[(v, u)] += 1
    return counts


def _divisors(n: int) -> List[int]:
    return [k for k in range(1, n + 1) if n % k == 0]


Multiplicities = Dict[Tuple[int, int], int]


class _MultiplicitySolver:
    """Dart multiplicities on a grid placement so that counts multiply.

    The placement fixes which factor entries are nonzero; this assigns the
    left entries from divisors of their constraints and derives the right
    entries. Loop entries count darts, so they must be even.
    """

    def __init__(
        self,
        vertices: List[VertexId],
        counts: Dict[Tuple[VertexId, VertexId], int],
        cells: List[Tuple[int, int]],
        left: List[List[bool]],
        right: List[List[bool]],
        budget: int,
    ):
        self.entries = [
            (a, c) for a in range(len(left)) for c in range(a, len(left)) if left[a][c]
        ]
        self.constraints: Dict[Tuple[int, int], List[Tuple[Tuple[int, int], int]]] = {
            entry: [] for entry in self.entries
        }
        for x, (a, b) in enumerate(cells):
            for y, (c, d) in enumerate(cells):
                if left[a][c] and right[b][d]:
                    key = (min(a, c), max(a, c))
                    count = counts[(vertices[x], vertices[y])]
                    self.constraints[key].append(((min(b, d), max(b, d)), count))
        self.budget = budget
        self.nodes = 0

    def solutions(self) -> Iterator[Tuple[Multiplicities, Multiplicities]]:
        yield from self._assign(0, {})

    def _right_side(self, values: Multiplicities) -> Optional[Multiplicities]:
        right: Multiplicities = {}
        for entry, pairs in self.constraints.items():
            for r_entry, count in pairs:
                if count % values[entry]:
                    return None
                if right.setdefault(r_entry, count // values[entry]) != count // values[entry]:
                    return None
        if any(b == d and darts % 2 for (b, d), darts in right.items()):
            return None
        return right

    def _assign(self, i: int, values: Multiplicities):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"multiplicity search exceeded {self.budget} nodes")
        if i == len(self.entries):
            right = self._right_side(values)
            if right is not None:
                yield dict(values), right
            return
        entry = self.entries[i]
        common = gcd(*(count for _, count in self.constraints[entry]))
        for k in _divisors(common):
            if entry[0] == entry[1] and k % 2:
                continue
            values[entry] = k
            yield from self._assign(i + 1, values)
            del values[entry]


def _weighted_graph(darts: Multiplicities, k: int, prefix: str) -> MultiGraph:
    vertices = [f"{prefix}{a}" for a in range(k)]
    edges = []
    for (a, c), count in sorted(darts.items()):
        multiplicity = count // 2 if a == c else count
        base = f"{vertices[a]}~{vertices[c]}"
        for j in range(multiplicity):
            eid = base if multiplicity == 1 else f"{base}.{j}"
            edges.append(Edge(eid, (vertices[a], vertices[c])))
    return MultiGraph.build(vertices, edges)


def _edge_class(ends: Tuple[VertexId, VertexId]) -> Tuple[VertexId, ...]:
    return tuple(sorted(set(ends)))


def _class_matchings(
    edges: List[Edge], images: List[Edge], vertex_map: Dict[VertexId, VertexId]
) -> Iterator[List[Tuple[Edge, Edge, int]]]:
    loop = edges[0].is_loop
    for order in itertools.permutations(images):
        if loop:
            for flips in itertools.product((0, 1), repeat=len(edges)):
                yield list(zip(edges, order, flips))
        else:
            flips = [int(image.ends[0] != vertex_map[e.ends[0]]) for e, image in zip(edges, order)]
            yield list(zip(edges, order, flips))


def _iter_isos_from_vertex_map(
    source: MultiGraph, target: MultiGraph, vertex_map: Dict[VertexId, VertexId], budget: int
) -> Iterator[GraphHom]:
    """Every dart bijection over a vertex bijection.

    Parallel edges may be matched in any order and loops in either direction.
    """
    source_classes: Dict[Tuple[VertexId, ...], List[Edge]] = {}
    for edge in source.edges:
        image = (vertex_map[edge.ends[0]], vertex_map[edge.ends[1]])
        source_classes.setdefault(_edge_class(image), []).append(edge)
    target_classes: Dict[Tuple[VertexId, ...], List[Edge]] = {}
    for edge in target.edges:
        target_classes.setdefault(_edge_class(edge.ends), []).append(edge)
    classes = []
    for key, edges in sorted(source_classes.items()):
        images = target_classes.get(key, [])
        if len(images) != len(edges):
            return
        classes.append((edges, images))
    nodes = 0

    def extend(i: int, dart_map: Dict[Dart, Dart]) -> Iterator[GraphHom]:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"edge matching exceeded {budget} nodes")
        if i == len(classes):
            yield GraphHom(source, target, dict(vertex_map), dict(dart_map))
            return
        edges, images = classes[i]
        for matching in _class_matchings(edges, images, vertex_map):
            for edge, image, flip in matching:
                dart_map[Dart(edge.id, 0)] = Dart(image.id, flip)
                dart_map[Dart(edge.id, 1)] = Dart(image.id, 1 - flip)
            yield from extend(i + 1, dart_map)

    yield from extend(0, {})


def iter_skeleton_splits(x: Complex, rows: int, cols: int) -> Iterator[SkeletonSplit]:
    """Skeleton splits of ``x`` into a ``rows``- and a ``cols``-vertex graph.

    Factor graphs may carry loops and parallel edges. Each choice of
    multiplicities and each matching of parallel edges is its own split.
    """
    g = x.skeleton
    if rows * cols != len(g.vertices):
        return
    budget = settings.SEARCH_NODE_BUDGET
    counts = _dart_counts(g)
    realizer = _GridRealizer(g, rows, cols, True, budget)
    for cells, left, right in realizer.solutions():
        solver = _MultiplicitySolver(realizer.vertices, counts, cells, left, right, budget)
        for left_darts, right_darts in solver.solutions():
            a_graph = _weighted_graph(left_darts, rows, "a")
            b_graph = _weighted_graph(right_darts, cols, "b")
            source = product_chain([a_graph, b_graph]).complex.skeleton
            vertex_map = {
                pair_id(f"a{a}", f"b{b}"): realizer.vertices[v] for v, (a, b) in enumerate(cells)
            }
            for iso in _iter_isos_from_vertex_map(source, g, vertex_map, budget):
                yield split_from_isomorphism(x, (a_graph, b_graph), iso)


def _relabeled(g: MultiGraph, prefix: str) -> MultiGraph:
    names = {v: f"{prefix}{i}" for i, v in enumerate(g.vertices)}
    edges = []
    for edge in g.edges:
        a, b = sorted((names[edge.ends[0]], names[edge.ends[1]]))
        edges.append(Edge(f"{a}~{b}", (a, b)))
    return MultiGraph.build(names.values(), edges)


def wl_hash(g: MultiGraph) -> str:
    simple = nx.Graph()
    for v in g.vertices:
        simple.add_node(v, loop="0")
    for edge in g.edges:
        if edge.is_loop:
            simple.nodes[edge.ends[0]]["loop"] = "1"
        else:
            simple.add_edge(*edge.ends)
    return nx.weisfeiler_lehman_graph_hash(simple, node_attr="loop")


def graph_sort_key(g: MultiGraph) -> Tuple:
    return (len(g.vertices), len(g.edges), wl_hash(g))


@dataclass(frozen=True)
class Factorization:
    """Factors plus an isomorphism from their product onto the input."""

    factors: Tuple[Union[MultiGraph, Complex], ...]
    certificate: Union[GraphHom, ComplexHom]

    def verify(self) -> bool:
        cert = self.certificate
        if isinstance(cert, ComplexHom):
            if not is_complex_homomorphism(cert):
                return False
            targets = {image.face for image in cert.face_map.values()}
            if len(targets) != len(cert.source.faces) or len(targets) != len(cert.target.faces):
                return False
            graph_hom = cert.graph_hom
        else:
            if not is_graph_homomorphism(cert):
                return False
            graph_hom = cert
        return (
            len(set(graph_hom.vertex_map.values())) == len(graph_hom.target.vertices)
            and len(graph_hom.source.vertices) == len(graph_hom.target.vertices)
            and len(set(graph_hom.dart_map.values())) == len(graph_hom.target.darts)
            and len(graph_hom.source.darts) == len(graph_hom.target.darts)
        )


def _check_graph_hypotheses(g: MultiGraph, graph_class: GraphClass) -> None:
    if graph_class == "S0":
        if g.has_parallel_edges:
            raise NotInS0("parallel edges present")
    elif not g.is_simple:
        raise HypothesisViolated("graph is not simple")
    if len(g.vertices) < 2:
        raise HypothesisViolated("graph needs more than one vertex")
    if not is_connected(g):
        raise HypothesisViolated("graph is disconnected")
    if is_bipartite(g):
        raise HypothesisViolated("graph is bipartite")


def _split_once(g: MultiGraph, graph_class: GraphClass) -> Optional[Tuple[MultiGraph, MultiGraph]]:
    # Non-bipartite factors of simple graphs need an odd cycle, so at least 3 vertices.
    minimum = 3 if graph_class == "S" else 2
    for rows, cols in _size_pairs(len(g.vertices), minimum):
        for a_graph, b_graph, _ in iter_tensor_splits(g, rows, cols, graph_class == "S0"):
            return a_graph, b_graph
    return None


def _prime_graphs(g: MultiGraph, graph_class: GraphClass) -> List[MultiGraph]:
    found = _split_once(g, graph_class)
    if found is None:
        return [g]
    return _prime_graphs(found[0], graph_class) + _prime_graphs(found[1], graph_class)


def _graph_product(factors: Sequence[MultiGraph], graph_class: GraphClass) -> MultiGraph:
    if graph_class == "S":
        return product_chain(factors).complex.skeleton
    product = factors[0]
    for factor in factors[1:]:
        product = direct_product_s0(product, factor)
    return product


def graph_prime_factorization(g: MultiGraph, graph_class: GraphClass = "S") -> Factorization:
    """Prime factors of a connected non-bipartite graph, in canonical order."""
    _check_graph_hypotheses(g, graph_class)
    primes = _prime_graphs(g, graph_class)
    if len(primes) == 1:
        identity = _identity_hom(g, g)
        logger.info(f"graph on {len(g.vertices)} vertices is prime")
        return Factorization((g,), identity)
    primes = sorted(primes, key=graph_sort_key)
    primes = [_relabeled(p, f"g{i}.") for i, p in enumerate(primes)]
    product = _graph_product(primes, graph_class)
    certificate = graph_isomorphism(product, g)
    if certificate is None:
        raise AssertionError("prime factors do not multiply back to the input")
    logger.info(
        f"graph on {len(g.vertices)} vertices factors into "
        f"{[len(p.vertices) for p in primes]}"
    )
    return Factorization(tuple(primes), certificate)


def direct_prime_factorization(g: MultiGraph) -> Factorization:
    """Factorization in the class of simple graphs with loops; loops are units."""
    return graph_prime_factorization(g, "S0")


# Complex factorization


def _check_complex_hypotheses(x: Complex) -> None:
    g = x.skeleton
    if not is_simple_complex(x):
        raise HypothesisViolated("complex is not simple")
    if not g.is_simple:
        raise HypothesisViolated("skeleton is not a simple graph")
    if len(g.vertices) < 2:
        raise HypothesisViolated("skeleton needs more than one vertex")
    if not is_connected(g):
        raise HypothesisViolated("skeleton is disconnected")
    if is_bipartite(g):
        raise HypothesisViolated("skeleton is bipartite")
    if not is_r_thin(g):
        raise HypothesisViolated("skeleton is not R-thin")
    if not is_edge_transitive(g):
        raise HypothesisViolated("skeleton is not edge-transitive")


def _bipartitions(size: int) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Two-part splits of range(size), smallest part first, in canonical order."""
    indices = tuple(range(size))
    for part_size in range(1, size // 2 + 1):
        for part in itertools.combinations(indices, part_size):
            if 2 * part_size == size and 0 not in part:
                continue
            rest = tuple(i for i in indices if i not in part)
            yield part, rest


def _prime_complexes(y: Complex, split: SkeletonSplit) -> List[Complex]:
    if len(split) == 1:
        return [y]
    for part, rest in _bipartitions(len(split)):
        outcome = try_complex_split(y, coarsen_split(split, [part, rest]))
        if not outcome:
            continue
        pieces = []
        for group, factor in zip((part, rest), outcome.factors):
            gammas = [split.gammas[i] for i in group]
            graph_chain = product_chain(gammas)
            sub_split = SkeletonSplit(
                factor,
                tuple(gammas),
                graph_chain,
                _identity_hom(graph_chain.complex.skeleton, factor.skeleton),
            )
            pieces += _prime_complexes(factor, sub_split)
        return pieces
    return [y]


def _complex_sort_key(x: Complex) -> Tuple:
    return graph_sort_key(x.skeleton) + (len(x.faces), tuple(sorted(len(f) for f in x.faces)))


def complex_prime_factorization(x: Complex) -> Factorization:
    """Unique prime factorization of a simple complex with a qualifying skeleton."""
    _check_complex_hypotheses(x)
    skeleton_factors = graph_prime_factorization(x.skeleton, "S")
    split = split_from_isomorphism(x, skeleton_factors.factors, skeleton_factors.certificate)
    primes = sorted(_prime_complexes(x, split), key=_complex_sort_key)
    if len(primes) == 1:
        logger.info("complex is prime")
        return Factorization((x,), identity_hom(x))
    product = product_chain(primes).complex
    certificate = complex_isomorphism(product, x)
    if certificate is None:
        raise AssertionError("prime complexes do not multiply back to the input")
    logger.info(
        f"complex factors into {len(primes)} primes with "
        f"{[len(p.skeleton.vertices) for p in primes]} vertices"
    )
    return Factorization(tuple(primes), certificate)


def is_prime_complex(x: Complex) -> bool:
    """No skeleton split of ``x`` splits its faces; elementary complexes are prime.

    Splits into a one-vertex factor and splits whose factors carry loops or
    parallel edges are searched as well.
    """
    if is_elementary(x):
        logger.debug("elementary complex, prime without search")
        return True
    if not is_simple_complex(x):
        raise NotSimple("primality is decided by face splitting, which needs a simple complex")
    for rows, cols in _size_pairs(len(x.skeleton.vertices), 1):
        for split in iter_skeleton_splits(x, rows, cols):
            if try_complex_split(x, split):
                logger.debug(f"complex splits into factors on {rows} and {cols} vertices")
                return False
    return True
