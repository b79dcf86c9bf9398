"""
Face blocks of products of even-faced complexes, block graphs and the
lattice-walk counting lemma behind the Cartesian structure of products of
even cycles.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from itertools import product as cartesian_tuples
from math import comb
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from polycell.core.errors import NotIncident, NotOrdinary, OddFaces, RangeError
from polycell.models.multigraph import Edge, MultiGraph
from polycell.models.polycomplex import Complex, FaceId, Flag, antipodal_pairs, is_ordinary
from polycell.services.complex_products import ProductChain

logger = logging.getLogger(__name__)

BlockKey = Tuple[Tuple[FaceId, ...], Tuple[int, ...]]


@dataclass(frozen=True)
class FaceBlock:
    """Faces of a product grouped by generating faces and corner parity.

    ``parity`` holds the corner labels' differences to the first coordinate
    mod 2, so it is unchanged by flipping every coordinate at once. Blocks
    found without label maps leave ``generators`` and ``parity`` empty.
    """

    members: FrozenSet[FaceId]
    generators: Tuple[FaceId, ...] = ()
    parity: Tuple[int, ...] = ()

    @property
    def key(self) -> BlockKey:
        return self.generators, self.parity

    def __len__(self) -> int:
        return len(self.members)


def _check_even(chain: ProductChain) -> None:
    for index, factor in enumerate(chain.factors):
        for face in factor.faces:
            if len(face) % 2:
                raise OddFaces(f"factor {index} has face {face.id} of odd length {len(face)}")


def block_of_face(chain: ProductChain, face: FaceId) -> BlockKey:
    flags = chain.flatten_flag(Flag(face, 0, 1))
    generators = tuple(flag.face for flag in flags)
    first = flags[0].position
    parity = tuple((flag.position - first) % 2 for flag in flags)
    return generators, parity


def face_blocks_by_label(chain: ProductChain) -> List[FaceBlock]:
    """Partition the faces of a product into face blocks using its label maps."""
    _check_even(chain)
    groups: Dict[BlockKey, List[FaceId]] = {}
    for face in chain.complex.faces:
        groups.setdefault(block_of_face(chain, face.id), []).append(face.id)
    return [
        FaceBlock(frozenset(members), generators, parity)
        for (generators, parity), members in sorted(groups.items())
    ]


class _UnionFind:
    def __init__(self, items):
        self.parent = {item: item for item in items}

    def find(self, item):
        while self.parent[item] != item:
            self.parent[item] = self.parent[self.parent[item]]
            item = self.parent[item]
        return item

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def antipodal_sharing(x: Complex) -> Dict[FrozenSet, List[FaceId]]:
    sharing: Dict[FrozenSet, List[FaceId]] = {}
    for face in x.faces:
        if len(face) % 2:
            continue
        for u, v in antipodal_pairs(x, face):
            faces = sharing.setdefault(frozenset((u, v)), [])
            if face.id not in faces:
                faces.append(face.id)
    return sharing


def _chain_depth(members: Sequence[FaceId], neighbours: Dict[FaceId, set]) -> int:
    """Largest number of antipodal-sharing steps between two faces of a block."""
    depth = 0
    for start in members:
        seen = {start: 0}
        queue = deque([start])
        while queue:
            face = queue.popleft()
            for other in neighbours[face]:
                if other not in seen:
                    seen[other] = seen[face] + 1
                    queue.append(other)
        depth = max(depth, max(seen.values()))
    return depth


def face_blocks_intrinsic(x: Complex, m: int) -> List[FaceBlock]:
    """Close the relation of sharing an antipodal vertex pair among faces."""
    sharing = antipodal_sharing(x)
    expected = 2 ** (m - 1)
    for pair, faces in sorted(sharing.items(), key=lambda item: sorted(item[0])):
        if len(faces) != expected:
            logger.warning(
                f"antipodal pair {sorted(pair)} is shared by {len(faces)} faces, "
                f"expected {expected}"
            )
            break

    union = _UnionFind([face.id for face in x.faces])
    neighbours: Dict[FaceId, set] = {face.id: set() for face in x.faces}
    for faces in sharing.values():
        for other in faces[1:]:
            union.union(faces[0], other)
        for a in faces:
            neighbours[a].update(f for f in faces if f != a)

    groups: Dict[FaceId, List[FaceId]] = {}
    for face in x.faces:
        groups.setdefault(union.find(face.id), []).append(face.id)
    half = max((len(face) // 2 for face in x.faces), default=0)
    blocks = []
    for members in groups.values():
        depth = _chain_depth(members, neighbours)
        if depth > half:
            logger.warning(f"face block of {len(members)} faces needs chains of {depth} > {half}")
        blocks.append(FaceBlock(frozenset(members)))
    return sorted(blocks, key=lambda block: min(block.members))


def faces_incident(x: Complex, a: FaceId, b: FaceId) -> bool:
    """Distinct faces meeting in at least one vertex."""
    if a == b:
        return False
    return bool(set(x.face_vertices[a]) & set(x.face_vertices[b]))


def face_incidence_graph(x: Complex) -> MultiGraph:
    """Faces as vertices, joined when they meet."""
    ids = [face.id for face in x.faces]
    edges = []
    for i, a in enumerate(ids):
        for b in ids[i + 1:]:
            if faces_incident(x, a, b):
                edges.append(Edge(f"[{a}|{b}]", (a, b)))
    return MultiGraph.build(ids, edges)


def _tuple_id(faces: Sequence[FaceId]) -> str:
    return faces[0] if len(faces) == 1 else "(" + ",".join(faces) + ")"


@dataclass(frozen=True)
class BlockGraph:
    graph: MultiGraph
    factor_graphs: Tuple[MultiGraph, ...]
    vertex_tuples: Dict[str, Tuple[FaceId, ...]] = field(default_factory=dict)


def block_graph(factors: Sequence[Complex]) -> BlockGraph:
    """Tuples of factor faces, adjacent when they differ in one coordinate by incident faces."""
    for index, factor in enumerate(factors):
        if not is_ordinary(factor):
            raise NotOrdinary(f"factor {index} is not ordinary")
    factor_graphs = tuple(face_incidence_graph(f) for f in factors)
    tuples = list(cartesian_tuples(*[[face.id for face in f.faces] for f in factors]))
    vertex_tuples = {_tuple_id(t): t for t in tuples}
    edges = []
    for t in tuples:
        for index, factor in enumerate(factors):
            for other in factor.faces:
                if other.id <= t[index] or not faces_incident(factor, t[index], other.id):
                    continue
                u = t[:index] + (other.id,) + t[index + 1:]
                a, b = _tuple_id(t), _tuple_id(u)
                edges.append(Edge(f"[{a}|{b}]", (a, b)))
    graph = MultiGraph.build(vertex_tuples.keys(), edges)
    logger.info(
        f"block graph of {len(factors)} factors: {len(graph.vertices)} vertices, "
        f"{len(graph.edges)} edges"
    )
    return BlockGraph(graph, factor_graphs, vertex_tuples)


def _blocks_incident(x: Complex, first: FaceBlock, second: FaceBlock) -> bool:
    return any(faces_incident(x, a, b) for a in first.members for b in second.members)


def intrinsic_block_graph(component: Complex, m: int) -> MultiGraph:
    """Intrinsic blocks, adjacent when every face of one meets a face of the other."""
    blocks = face_blocks_intrinsic(component, m)
    names = [f"B{k}" for k in range(len(blocks))]
    edges = []
    for i, first in enumerate(blocks):
        for j in range(i + 1, len(blocks)):
            second = blocks[j]
            if not _blocks_incident(component, first, second):
                continue
            if _every_face_meets(component, first, second) and _every_face_meets(
                component, second, first
            ):
                edges.append(Edge(f"[{names[i]}|{names[j]}]", (names[i], names[j])))
    return MultiGraph.build(names, edges)


def _every_face_meets(x: Complex, block: FaceBlock, other: FaceBlock) -> bool:
    return all(any(faces_incident(x, a, b) for b in other.members) for a in block.members)


class IncidenceVerdict(str, Enum):
    BOTH = "both"
    NEITHER = "neither"
    COUNTEREXAMPLE = "counterexample"


@dataclass(frozen=True)
class BlockIncidenceResult:
    verdict: IncidenceVerdict
    coordinate_rule: bool
    every_face_meets: bool
    witness: Optional[FaceId] = None


def verify_block_incidence_equiv(
    chain: ProductChain, first: FaceBlock, second: FaceBlock
) -> BlockIncidenceResult:
    """Compare the coordinate description of block incidence with the face-level one."""
    for index, factor in enumerate(chain.factors):
        if not is_ordinary(factor):
            raise NotOrdinary(f"factor {index} is not ordinary")
    x = chain.complex
    if not _blocks_incident(x, first, second):
        raise NotIncident("the two blocks share no vertex")

    differing = [
        i for i, (a, b) in enumerate(zip(first.generators, second.generators)) if a != b
    ]
    coordinate_rule = len(differing) == 1 and faces_incident(
        chain.factors[differing[0]],
        first.generators[differing[0]],
        second.generators[differing[0]],
    )
    lonely = [
        a for a in sorted(first.members) if not any(faces_incident(x, a, b) for b in second.members)
    ]
    every_face_meets = not lonely
    if coordinate_rule == every_face_meets:
        verdict = IncidenceVerdict.BOTH if coordinate_rule else IncidenceVerdict.NEITHER
        return BlockIncidenceResult(verdict, coordinate_rule, every_face_meets)
    witness = lonely[0] if lonely else min(first.members)
    logger.warning(f"block incidence disagreement at face {witness}")
    return BlockIncidenceResult(
        IncidenceVerdict.COUNTEREXAMPLE, coordinate_rule, every_face_meets, witness
    )


def incident_block_pairs(chain: ProductChain, blocks: Sequence[FaceBlock]) -> List[Tuple[int, int]]:
    x = chain.complex
    return [
        (i, j)
        for i in range(len(blocks))
        for j in range(len(blocks))
        if i != j and _blocks_incident(x, blocks[i], blocks[j])
    ]


def count_walk_arrivals(d: int, k: int, from_sign: int) -> int:
    """Walks of d unit steps from d - 2k to 0 whose last step comes from ``from_sign``."""
    if d < 1 or not 0 <= k <= d // 2:
        raise RangeError(f"need d >= 1 and 0 <= k <= {d // 2}, got d={d}, k={k}")
    if from_sign == 1:
        return comb(d - 1, k)
    if from_sign == -1:
        return comb(d - 1, k - 1) if k >= 1 else 0
    raise RangeError(f"from_sign must be +1 or -1, got {from_sign}")

