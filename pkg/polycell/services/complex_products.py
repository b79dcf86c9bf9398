"""
Complex tensor products, complex homomorphisms and the link functor.

Product face ``(a,b;i,d)`` is attached along the lift of the boundary of
``a`` against the boundary of ``b`` started at its i-th vertex (reversed
when ``d = 1``). Its flag ``(F, j, s)`` corresponds to the flag pair
``(a, j, s)`` and ``(b, i + j, s)`` when ``d = 0``, or ``(b, i - j, 1 - s)``
when ``d = 1``.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

from polycell.core.config import settings
from polycell.core.errors import BudgetExceeded, LabelMapMissing
from polycell.models.multigraph import Dart, MultiGraph, Traversal, VertexId
from polycell.models.polycomplex import (
    Complex,
    Corner,
    Face,
    FaceId,
    Flag,
    corner_token,
    dart_token,
    link,
)
from polycell.services.graph_products import (
    GraphHom,
    TensorProduct,
    Which,
    arc_table,
    check_factor_ids,
    compose_graph_homs,
    is_graph_homomorphism,
    lift_cycle,
    tensor_product,
    tensor_projection,
    universal_factor_graph,
    vertex_plan,
)

logger = logging.getLogger(__name__)


def product_face_id(alpha: FaceId, beta: FaceId, i: int, delta: int) -> FaceId:
    return f"({alpha},{beta};{i},{delta})"


class ProductFaceLabel(NamedTuple):
    alpha: FaceId
    beta: FaceId
    i: int
    delta: int


class FaceImage(NamedTuple):
    face: FaceId
    offset: int
    reflect: bool


@dataclass(frozen=True)
class ComplexHom:
    source: Complex
    target: Complex
    graph_hom: GraphHom
    face_map: Dict[FaceId, FaceImage]

    @property
    def vertex_map(self) -> Dict[VertexId, VertexId]:
        return self.graph_hom.vertex_map

    @property
    def dart_map(self) -> Dict[Dart, Dart]:
        return self.graph_hom.dart_map

    @property
    def key(self) -> Tuple:
        return self.graph_hom.key + (tuple(self.face_map[f.id] for f in self.source.faces),)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ComplexHom) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def corner_image(self, corner: Corner) -> Tuple[Corner, bool]:
        image = self.face_map[corner.face]
        n = len(self.target.face(image.face))
        step = -corner.position if image.reflect else corner.position
        position = image.offset + step
        return Corner(image.face, position % n), image.reflect

    def flag_image(self, flag: Flag) -> Flag:
        corner, reflect = self.corner_image(flag.corner)
        return Flag(corner.face, corner.position, 1 - flag.side if reflect else flag.side)


def expected_image(target_face: Face, length: int, offset: int, reflect: bool) -> List[Traversal]:
    """Boundary steps a face of ``length`` must map to under (offset, reflect)."""
    steps = target_face.boundary.steps
    n = len(steps)
    if reflect:
        return [steps[(offset - 1 - j) % n].reversed() for j in range(length)]
    return [steps[(offset + j) % n] for j in range(length)]


def is_complex_homomorphism(h: ComplexHom) -> bool:
    if not is_graph_homomorphism(h.graph_hom):
        return False
    for face in h.source.faces:
        image = h.face_map.get(face.id)
        if image is None or image.face not in h.target.face_index:
            return False
        target_face = h.target.face(image.face)
        n, n_target = len(face), len(target_face)
        if n % n_target or not 0 <= image.offset < n_target:
            return False
        mapped = [h.graph_hom.map_step(step) for step in face.boundary.steps]
        if mapped != expected_image(target_face, n, image.offset, image.reflect):
            return False
    return True


def compose_complex_homs(second: ComplexHom, first: ComplexHom) -> ComplexHom:
    """``second`` after ``first``."""
    face_map = {}
    for face_id, (middle, offset1, reflect1) in first.face_map.items():
        target, offset2, reflect2 = second.face_map[middle]
        n = len(second.target.face(target))
        offset = (offset2 - offset1) if reflect2 else (offset2 + offset1)
        face_map[face_id] = FaceImage(target, offset % n, reflect1 != reflect2)
    return ComplexHom(
        first.source,
        second.target,
        compose_graph_homs(second.graph_hom, first.graph_hom),
        face_map,
    )


def identity_hom(x: Complex) -> ComplexHom:
    graph = x.skeleton
    graph_hom = GraphHom(
        graph, graph, {v: v for v in graph.vertices}, {d: d for d in graph.darts}
    )
    return ComplexHom(x, x, graph_hom, {f.id: FaceImage(f.id, 0, False) for f in x.faces})


@dataclass(frozen=True)
class ComplexProduct:
    """A complex tensor product together with its label maps."""

    left: Complex
    right: Complex
    complex: Complex
    graph_product: TensorProduct
    face_labels: Dict[FaceId, ProductFaceLabel]

    @cached_property
    def label_faces(self) -> Dict[ProductFaceLabel, FaceId]:
        return {label: fid for fid, label in self.face_labels.items()}

    def flag_pair(self, flag: Flag) -> Tuple[Flag, Flag]:
        alpha, beta, i, delta = self.face_labels[flag.face]
        n_alpha = len(self.left.face(alpha))
        n_beta = len(self.right.face(beta))
        left = Flag(alpha, flag.position % n_alpha, flag.side)
        if delta:
            right = Flag(beta, (i - flag.position) % n_beta, 1 - flag.side)
        else:
            right = Flag(beta, (i + flag.position) % n_beta, flag.side)
        return left, right

    def flag_of(self, left: Flag, right: Flag) -> Flag:
        n_alpha = len(self.left.face(left.face))
        n_beta = len(self.right.face(right.face))
        common = gcd(n_alpha, n_beta)
        delta = int(left.side != right.side)
        for k in range(n_beta // common):
            j = left.position + k * n_alpha
            i = (right.position + j) % n_beta if delta else (right.position - j) % n_beta
            if i < common:
                face = self.label_faces[ProductFaceLabel(left.face, right.face, i, delta)]
                return Flag(face, j, left.side)
        raise AssertionError("every flag pair lies on exactly one product face")


def complex_tensor_product(x: Complex, y: Complex) -> ComplexProduct:
    for factor in (x, y):
        check_factor_ids((f.id for f in factor.faces), "face")
    info = tensor_product(x.skeleton, y.skeleton)
    faces = []
    labels: Dict[FaceId, ProductFaceLabel] = {}
    for alpha in x.faces:
        for beta in y.faces:
            for i in range(gcd(len(alpha), len(beta))):
                for delta in (0, 1):
                    fid = product_face_id(alpha.id, beta.id, i, delta)
                    boundary = lift_cycle(info, alpha.boundary, beta.boundary, i, delta)
                    faces.append(Face(fid, boundary))
                    labels[fid] = ProductFaceLabel(alpha.id, beta.id, i, delta)
    product = Complex.build(info.graph, faces)
    return ComplexProduct(x, y, product, info, labels)


def complex_projection(info: ComplexProduct, which: Which) -> ComplexHom:
    graph_hom = tensor_projection(info.graph_product, which)
    target = info.left if which == "left" else info.right
    face_map = {}
    for fid, (alpha, beta, i, delta) in info.face_labels.items():
        if which == "left":
            face_map[fid] = FaceImage(alpha, 0, False)
        else:
            face_map[fid] = FaceImage(beta, i, bool(delta))
    return ComplexHom(info.complex, target, graph_hom, face_map)


def _face_choices(
    x: Complex, y: Complex, face: Face, mapped: List[Traversal], allow_reflection: bool
) -> List[FaceImage]:
    choices = []
    n = len(face)
    for target in y.faces:
        n_target = len(target)
        if n % n_target:
            continue
        for offset in range(n_target):
            for reflect in (False, True) if allow_reflection else (False,):
                if mapped == expected_image(target, n, offset, reflect):
                    choices.append(FaceImage(target.id, offset, reflect))
    return choices


def iter_complex_homomorphisms(
    x: Complex, y: Complex, allow_reflection: Optional[bool] = None
) -> Iterator[Tuple[Dict, Dict, Dict]]:
    """Yield (vertex_map, dart_map, face_map) in canonical order."""
    if allow_reflection is None:
        allow_reflection = settings.ALLOW_FACE_REFLECTION
    target_lengths = {len(f) for f in y.faces}
    for face in x.faces:
        if not any(len(face) % n == 0 for n in target_lengths):
            return

    graph, target_graph = x.skeleton, y.skeleton
    plan = vertex_plan(graph)
    arcs = arc_table(target_graph)
    rank = {}
    for step, (_, edges) in enumerate(plan):
        for edge in edges:
            rank[edge.id] = step
    closing_faces: Dict[int, List[Face]] = {step: [] for step in range(len(plan))}
    for face in x.faces:
        closing_faces[max(rank[s.edge] for s in face.boundary.steps)].append(face)

    vertex_map: Dict[VertexId, VertexId] = {}
    dart_map: Dict[Dart, Dart] = {}
    face_map: Dict[FaceId, FaceImage] = {}

    def assign_faces(faces: List[Face], k: int) -> Iterator[None]:
        if k == len(faces):
            yield None
            return
        face = faces[k]
        mapped = [
            Traversal.from_dart(dart_map[step.out_dart]) for step in face.boundary.steps
        ]
        for choice in _face_choices(x, y, face, mapped, allow_reflection):
            face_map[face.id] = choice
            yield from assign_faces(faces, k + 1)
        face_map.pop(face.id, None)

    def assign_edges(step: int, edges: list, k: int) -> Iterator[None]:
        if k == len(edges):
            yield from assign_faces(closing_faces[step], 0)
            return
        edge = edges[k]
        for image in arcs.get((vertex_map[edge.ends[0]], vertex_map[edge.ends[1]]), ()):
            dart_map[Dart(edge.id, 0)] = image
            dart_map[Dart(edge.id, 1)] = image.partner()
            yield from assign_edges(step, edges, k + 1)
        dart_map.pop(Dart(edge.id, 0), None)
        dart_map.pop(Dart(edge.id, 1), None)

    def place(step: int) -> Iterator[Tuple[Dict, Dict, Dict]]:
        if step == len(plan):
            yield dict(vertex_map), dict(dart_map), dict(face_map)
            return
        vertex, edges = plan[step]
        for image in target_graph.vertices:
            vertex_map[vertex] = image
            if all((vertex_map[e.ends[0]], vertex_map[e.ends[1]]) in arcs for e in edges):
                for _ in assign_edges(step, edges, 0):
                    yield from place(step + 1)
        vertex_map.pop(vertex, None)

    yield from place(0)


def enumerate_complex_homomorphisms(
    x: Complex, y: Complex, allow_reflection: Optional[bool] = None
) -> List[ComplexHom]:
    found = []
    for vertex_map, dart_map, face_map in iter_complex_homomorphisms(x, y, allow_reflection):
        graph_hom = GraphHom(x.skeleton, y.skeleton, vertex_map, dart_map)
        found.append(ComplexHom(x, y, graph_hom, face_map))
        if len(found) > settings.HOM_ENUMERATION_LIMIT:
            raise BudgetExceeded(f"more than {settings.HOM_ENUMERATION_LIMIT} homomorphisms")
    return found


def count_complex_homomorphisms(
    x: Complex, y: Complex, allow_reflection: Optional[bool] = None
) -> int:
    return sum(1 for _ in iter_complex_homomorphisms(x, y, allow_reflection))


def universal_factor_complex(
    phi_x: ComplexHom, phi_y: ComplexHom, product: Optional[ComplexProduct] = None
) -> ComplexHom:
    """The unique psi into the product whose projections recover both maps."""
    if product is None:
        product = complex_tensor_product(phi_x.target, phi_y.target)
    graph_hom = universal_factor_graph(phi_x.graph_hom, phi_y.graph_hom, product.graph_product)
    face_map = {}
    for face in phi_x.source.faces:
        start = Flag(face.id, 0, 1)
        image = product.flag_of(phi_x.flag_image(start), phi_y.flag_image(start))
        face_map[face.id] = FaceImage(image.face, image.position, image.side == 0)
    return ComplexHom(phi_x.source, product.complex, graph_hom, face_map)


def induced_link_homomorphism(h: ComplexHom, vertex: VertexId) -> GraphHom:
    """L(h) from the link at ``vertex`` to the link at its image."""
    source_link = link(h.source, vertex)
    target_link = link(h.target, h.vertex_map[vertex])
    vertex_map = {
        token: dart_token(h.dart_map[dart]) for token, dart in source_link.darts.items()
    }
    dart_map = {}
    for token, corner in source_link.corners.items():
        image, reflect = h.corner_image(corner)
        image_token = corner_token(image)
        for side in (0, 1):
            dart_map[Dart(token, side)] = Dart(image_token, 1 - side if reflect else side)
    return GraphHom(source_link.graph, target_link.graph, vertex_map, dart_map)


def as_complex(item: Union[Complex, MultiGraph]) -> Complex:
    """Graphs enter product chains as complexes without faces."""
    return item if isinstance(item, Complex) else Complex(item, ())


@dataclass(frozen=True)
class ProductChain:
    """Left-nested product ((X1 x X2) x X3) x ... with coordinate codecs."""

    factors: Tuple[Complex, ...]
    steps: Tuple[ComplexProduct, ...]

    @property
    def complex(self) -> Complex:
        return self.steps[-1].complex if self.steps else self.factors[0]

    def flatten_vertex(self, vertex: VertexId) -> Tuple[VertexId, ...]:
        coords = []
        for step in reversed(self.steps):
            vertex, right = step.graph_product.vertex_pairs[vertex]
            coords.append(right)
        coords.append(vertex)
        return tuple(reversed(coords))

    def unflatten_vertex(self, coords: Sequence[VertexId]) -> VertexId:
        vertex = coords[0]
        for step, right in zip(self.steps, coords[1:]):
            vertex = step.graph_product.vertex_of(vertex, right)
        return vertex

    def flatten_dart(self, dart: Dart) -> Tuple[Dart, ...]:
        coords = []
        for step in reversed(self.steps):
            dart, right = step.graph_product.dart_pair(dart)
            coords.append(right)
        coords.append(dart)
        return tuple(reversed(coords))

    def unflatten_dart(self, coords: Sequence[Dart]) -> Dart:
        dart = coords[0]
        for step, right in zip(self.steps, coords[1:]):
            dart = step.graph_product.dart_of(dart, right)
        return dart

    def flatten_flag(self, flag: Flag) -> Tuple[Flag, ...]:
        coords = []
        for step in reversed(self.steps):
            flag, right = step.flag_pair(flag)
            coords.append(right)
        coords.append(flag)
        return tuple(reversed(coords))

    def unflatten_flag(self, coords: Sequence[Flag]) -> Flag:
        flag = coords[0]
        for step, right in zip(self.steps, coords[1:]):
            flag = step.flag_of(flag, right)
        return flag

    def flatten_face(self, face: FaceId) -> Tuple[FaceId, ...]:
        """Generating face tuple of a product face."""
        coords = []
        for step in reversed(self.steps):
            label = step.face_labels[face]
            coords.append(label.beta)
            face = label.alpha
        coords.append(face)
        return tuple(reversed(coords))

    def projection(self, index: int) -> ComplexHom:
        """Composite projection onto factor ``index``."""
        if not self.steps:
            return identity_hom(self.factors[0])
        hom = None
        for level in range(len(self.steps) - 1, -1, -1):
            step = self.steps[level]
            if level + 1 == index:
                part = complex_projection(step, "right")
                return part if hom is None else compose_complex_homs(part, hom)
            part = complex_projection(step, "left")
            hom = part if hom is None else compose_complex_homs(part, hom)
        return hom


def product_chain(factors: Sequence[Union[Complex, MultiGraph]]) -> ProductChain:
    if not factors:
        raise LabelMapMissing("a product chain needs at least one factor")
    complexes = tuple(as_complex(f) for f in factors)
    steps = []
    current = complexes[0]
    for factor in complexes[1:]:
        step = complex_tensor_product(current, factor)
        steps.append(step)
        current = step.complex
    logger.info(
        f"built product of {len(complexes)} factors: {len(current.skeleton.vertices)} vertices, "
        f"{len(current.skeleton.edges)} edges, {len(current.faces)} faces"
    )
    return ProductChain(complexes, tuple(steps))
