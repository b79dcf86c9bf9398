"""
Isomorphisms, automorphism groups, transitivity and Cartesian subgroups.

Graphs are searched as colored structures on vertices and darts; complexes
add faces and flags, so that every rotation or reflection of a face is
visible to the group.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple, Union

from polycell.core.config import settings
from polycell.core.errors import LabelMapMissing, TooLarge
from polycell.models.multigraph import Dart, MultiGraph, components
from polycell.models.polycomplex import Complex, Flag, component_complex
from polycell.services.complex_products import (
    ComplexHom,
    FaceImage,
    ProductChain,
    as_complex,
)
from polycell.services.graph_products import GraphHom
from polycell.services.search import (
    ColoredStructure,
    Perm,
    automorphism_chain,
    find_isomorphism,
    relate,
)

logger = logging.getLogger(__name__)

Point = Tuple[Hashable, ...]

VERTEX, DART, FACE, FLAG = 0, 1, 2, 3

# Relation bitmask codes
INCIDENT = 1
PARTNER = 2
FACE_FLAG = 4
FLAG_DART = 8
CORNER = 16
EDGE_SIDE = 32


def complex_points(x: Union[Complex, MultiGraph]) -> List[Point]:
    """Ground set in canonical order: vertices, darts, faces, flags."""
    x = as_complex(x)
    graph = x.skeleton
    points: List[Point] = [("v", v) for v in graph.vertices]
    points += [("d", d.edge, d.side) for d in graph.darts]
    points += [("f", f.id) for f in x.faces]
    points += [("fl",) + tuple(flag) for flag in x.flags]
    return points


def structure_of(x: Union[Complex, MultiGraph]) -> ColoredStructure:
    x = as_complex(x)
    graph = x.skeleton
    points = complex_points(x)
    index = {p: i for i, p in enumerate(points)}
    colors = []
    for p in points:
        kind = p[0]
        if kind == "v":
            colors.append(VERTEX)
        elif kind == "d":
            colors.append(DART)
        elif kind == "f":
            colors.append(FACE * 10_000 + len(x.face(p[1])))
        else:
            colors.append(FLAG * 10_000 + len(x.face(p[1])))

    relations: Dict[Tuple[int, int], int] = {}
    for dart in graph.darts:
        d = index[("d", dart.edge, dart.side)]
        relate(relations, d, index[("v", graph.endpoint(dart))], INCIDENT)
        if dart.side == 0:
            relate(relations, d, index[("d", dart.edge, 1)], PARTNER)
    for face in x.faces:
        f = index[("f", face.id)]
        n = len(face)
        for j in range(n):
            for side in (0, 1):
                flag = Flag(face.id, j, side)
                fl = index[("fl",) + tuple(flag)]
                relate(relations, fl, f, FACE_FLAG)
                dart = x.flag_dart(flag)
                relate(relations, fl, index[("d", dart.edge, dart.side)], FLAG_DART)
            relate(relations, index[("fl", face.id, j, 0)], index[("fl", face.id, j, 1)], CORNER)
            relate(
                relations,
                index[("fl", face.id, j, 1)],
                index[("fl", face.id, (j + 1) % n, 0)],
                EDGE_SIDE,
            )
    return ColoredStructure.from_relations(points, colors, relations)


def compose(second: Perm, first: Perm) -> Perm:
    return tuple(second[i] for i in first)


def inverse(perm: Perm) -> Perm:
    result = [0] * len(perm)
    for a, b in enumerate(perm):
        result[b] = a
    return tuple(result)


class StabilizerChain:
    """Base, strong generators and orbit transversals of a permutation group.

    Membership is decided by sifting through the transversals; the element
    list is never built.
    """

    def __init__(self, size: int, base: Sequence[int] = (), strong: Iterable[Perm] = ()):
        self.identity: Perm = tuple(range(size))
        self.base: List[int] = list(base)
        self.strong: List[Perm] = [tuple(g) for g in strong if tuple(g) != self.identity]
        self.transversals: List[Dict[int, Perm]] = []
        self.inverses: List[Dict[int, Perm]] = []
        self._rebuild()

    @classmethod
    def from_generators(
        cls, generators: Iterable[Perm], size: int, budget: Optional[int] = None
    ) -> "StabilizerChain":
        """Schreier-Sims: sift Schreier generators until every one strips to the identity."""
        budget = budget or settings.SEARCH_NODE_BUDGET
        chain = cls(size)
        for g in generators:
            residue, _ = chain.sift(g)
            if residue != chain.identity:
                chain._add(residue)
        chain._complete(budget)
        return chain

    @property
    def order(self) -> int:
        total = 1
        for table in self.transversals:
            total *= len(table)
        return total

    def _level_generators(self, level: int) -> List[Perm]:
        fixed = self.base[:level]
        return [g for g in self.strong if all(g[b] == b for b in fixed)]

    def _rebuild(self) -> None:
        self.transversals = []
        for level, point in enumerate(self.base):
            gens = self._level_generators(level)
            table = {point: self.identity}
            frontier = [point]
            while frontier:
                p = frontier.pop()
                for g in gens:
                    q = g[p]
                    if q not in table:
                        table[q] = compose(g, table[p])
                        frontier.append(q)
            self.transversals.append(table)
        self.inverses = [{p: inverse(u) for p, u in table.items()} for table in self.transversals]

    def sift(self, perm: Perm) -> Tuple[Perm, int]:
        """Strip coset representatives level by level; the residue and the level reached."""
        g = tuple(perm)
        for level, point in enumerate(self.base):
            u_inverse = self.inverses[level].get(g[point])
            if u_inverse is None:
                return g, level
            g = compose(u_inverse, g)
        return g, len(self.base)

    def contains(self, perm: Perm) -> bool:
        if len(perm) != len(self.identity):
            return False
        residue, level = self.sift(perm)
        return level == len(self.base) and residue == self.identity

    def _add(self, perm: Perm) -> None:
        self.strong.append(perm)
        if all(perm[b] == b for b in self.base):
            self.base.append(next(i for i, j in enumerate(perm) if i != j))
        self._rebuild()

    def _complete(self, budget: int) -> None:
        sifts = 0
        level = len(self.base) - 1
        while level >= 0:
            extended = False
            table, inverses = self.transversals[level], self.inverses[level]
            for p, u in list(table.items()):
                for s in self._level_generators(level):
                    sifts += 1
                    if sifts > budget:
                        raise TooLarge(f"Schreier-Sims exceeded {budget} sifts")
                    residue, _ = self.sift(compose(inverses[s[p]], compose(s, u)))
                    if residue != self.identity:
                        self._add(residue)
                        extended = True
                        break
                if extended:
                    break
            level = len(self.base) - 1 if extended else level - 1


@dataclass(frozen=True)
class PermGroup:
    """A permutation group on a labeled ground set."""

    points: Tuple[Point, ...]
    generators: Tuple[Perm, ...]
    order: int
    base: Tuple[int, ...] = field(default=(), compare=False)
    strong: Tuple[Perm, ...] = field(default=(), compare=False)

    @cached_property
    def index(self) -> Dict[Point, int]:
        return {p: i for i, p in enumerate(self.points)}

    @cached_property
    def identity(self) -> Perm:
        return tuple(range(len(self.points)))

    @cached_property
    def chain(self) -> StabilizerChain:
        if self.base:
            return StabilizerChain(len(self.points), self.base, self.strong or self.generators)
        return StabilizerChain.from_generators(self.generators, len(self.points))

    @cached_property
    def elements(self) -> FrozenSet[Perm]:
        if self.order > settings.MAX_GROUP_ORDER:
            raise TooLarge(f"group order {self.order} exceeds {settings.MAX_GROUP_ORDER}")
        return frozenset(closure(self.generators, len(self.points)))

    def contains(self, perm: Perm) -> bool:
        return self.chain.contains(tuple(perm))

    def orbits(self, kind: Optional[str] = None) -> List[List[Point]]:
        """Orbits of the generators, optionally restricted to one point kind."""
        parent = list(range(len(self.points)))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for gen in self.generators:
            for i, j in enumerate(gen):
                a, b = find(i), find(j)
                if a != b:
                    parent[max(a, b)] = min(a, b)
        groups: Dict[int, List[Point]] = {}
        for i, p in enumerate(self.points):
            if kind is None or p[0] == kind:
                groups.setdefault(find(i), []).append(p)
        return [groups[k] for k in sorted(groups)]

    def _check_points(self, other: "PermGroup") -> None:
        if self.points != other.points:
            raise ValueError("groups act on different ground sets")

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        self._check_points(other)
        return all(other.contains(g) for g in self.generators)

    def equals(self, other: "PermGroup") -> bool:
        """Equality as mutual generator membership."""
        return self.is_subgroup_of(other) and other.is_subgroup_of(self)

    def cycle_notation(self, perm: Perm) -> str:
        seen = set()
        cycles = []
        for start in range(len(perm)):
            if start in seen or perm[start] == start:
                continue
            cycle = []
            i = start
            while i not in seen:
                seen.add(i)
                cycle.append(self._label(self.points[i]))
                i = perm[i]
            cycles.append("(" + " ".join(cycle) + ")")
        return "".join(cycles) or "()"

    @staticmethod
    def _label(point: Point) -> str:
        return ":".join(str(part) for part in point)


def closure(generators: Iterable[Perm], size: int) -> set:
    identity = tuple(range(size))
    generators = list(generators)
    elements = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for element in frontier:
            for gen in generators:
                product = compose(gen, element)
                if product not in elements:
                    elements.add(product)
                    if len(elements) > settings.MAX_GROUP_ORDER:
                        raise TooLarge(f"group exceeds {settings.MAX_GROUP_ORDER} elements")
                    nxt.append(product)
        frontier = nxt
    return elements


def group_from_generators(points: Sequence[Point], generators: Iterable[Perm]) -> PermGroup:
    generators = tuple(g for g in generators)
    chain = StabilizerChain.from_generators(generators, len(points))
    return PermGroup(
        tuple(points), generators, chain.order, tuple(chain.base), tuple(chain.strong)
    )


def _automorphism_group(x: Union[Complex, MultiGraph]) -> PermGroup:
    structure = structure_of(x)
    chain = automorphism_chain(structure)
    logger.info(
        f"automorphism group: order {chain.order}, {len(chain.generators)} generators, "
        f"{chain.nodes} search nodes on {len(structure)} points"
    )
    return PermGroup(
        tuple(structure.labels), tuple(chain.generators), chain.order, tuple(chain.base)
    )


def graph_automorphism_group(g: MultiGraph) -> PermGroup:
    return _automorphism_group(g)


def complex_automorphism_group(x: Complex) -> PermGroup:
    return _automorphism_group(x)


def _graph_hom_from_perm(
    source: MultiGraph, target: MultiGraph, mapping: Perm, points: List[Point], images: List[Point]
) -> GraphHom:
    vertex_map = {}
    dart_map = {}
    for i, p in enumerate(points):
        q = images[mapping[i]]
        if p[0] == "v":
            vertex_map[p[1]] = q[1]
        elif p[0] == "d":
            dart_map[Dart(p[1], p[2])] = Dart(q[1], q[2])
    return GraphHom(source, target, vertex_map, dart_map)


def graph_isomorphism(g: MultiGraph, h: MultiGraph) -> Optional[GraphHom]:
    mapping = find_isomorphism(structure_of(g), structure_of(h))
    if mapping is None:
        return None
    return _graph_hom_from_perm(g, h, mapping, complex_points(g), complex_points(h))


def perm_to_complex_hom(x: Complex, y: Complex, mapping: Perm) -> ComplexHom:
    points, images = complex_points(x), complex_points(y)
    graph_hom = _graph_hom_from_perm(x.skeleton, y.skeleton, mapping, points, images)
    index = {p: i for i, p in enumerate(points)}
    face_map = {}
    for face in x.faces:
        image = images[mapping[index[("fl", face.id, 0, 1)]]]
        _, target, position, side = image
        face_map[face.id] = FaceImage(target, position, side == 0)
    return ComplexHom(x, y, graph_hom, face_map)


def complex_isomorphism(x: Complex, y: Complex) -> Optional[ComplexHom]:
    mapping = find_isomorphism(structure_of(x), structure_of(y))
    if mapping is None:
        return None
    return perm_to_complex_hom(x, y, mapping)


def is_flag_transitive(x: Complex) -> bool:
    if not x.faces:
        return False
    return len(complex_automorphism_group(x).orbits("fl")) == 1


def _orbit_count(group: PermGroup, kind: str) -> int:
    return len(group.orbits(kind))


def is_vertex_transitive(g: MultiGraph) -> bool:
    return _orbit_count(graph_automorphism_group(g), "v") == 1


def is_arc_transitive(g: MultiGraph) -> bool:
    return bool(g.edges) and _orbit_count(graph_automorphism_group(g), "d") == 1


def is_edge_transitive(g: MultiGraph) -> bool:
    if not g.edges:
        return False
    group = graph_automorphism_group(g)
    edge_of = {}
    for orbit_id, orbit in enumerate(group.orbits("d")):
        for point in orbit:
            edge_of.setdefault(point[1], set()).add(orbit_id)
    # An edge's two darts may lie in different dart orbits; merge through edges.
    parent: Dict[int, int] = {}

    def find(i: int) -> int:
        parent.setdefault(i, i)
        while parent[i] != i:
            i = parent[i]
        return i

    for orbits in edge_of.values():
        first, *rest = sorted(orbits)
        for other in rest:
            parent[find(other)] = find(first)
    return len({find(min(orbits)) for orbits in edge_of.values()}) == 1


def _component_stabilizer(
    points: List[Point], generators: List[Perm], x: Complex, keep: FrozenSet[str]
) -> List[Perm]:
    """Schreier generators of the setwise stabilizer of the component ``keep``."""
    parts = components(x.skeleton)
    part_of = {v: k for k, part in enumerate(parts) for v in part.vertices}
    index = {p: i for i, p in enumerate(points)}
    anchors = [index[("v", part.vertices[0])] for part in parts]

    def moved(g: Perm, k: int) -> int:
        return part_of[points[g[anchors[k]]][1]]

    home = part_of[min(keep)]
    identity = tuple(range(len(points)))
    transversal = {home: identity}
    frontier = [home]
    while frontier:
        k = frontier.pop()
        for g in generators:
            j = moved(g, k)
            if j not in transversal:
                transversal[j] = compose(g, transversal[k])
                frontier.append(j)
    schreier = set()
    for k, u in transversal.items():
        for g in generators:
            h = compose(inverse(transversal[moved(g, k)]), compose(g, u))
            if h != identity:
                schreier.add(h)
    return sorted(schreier)


def cartesian_subgroup(
    factors: Sequence[Union[Complex, MultiGraph]],
    ambient: ProductChain,
    restrict_to: Optional[Iterable[str]] = None,
) -> PermGroup:
    """Factor automorphisms acting coordinatewise plus swaps of isomorphic factors.

    The group is given by generators: one per factor generator and one per
    swap of neighbouring isomorphic factors. With ``restrict_to`` (the vertex
    set of a component) the result is the setwise stabilizer of that
    component, restricted to it.
    """
    if not isinstance(ambient, ProductChain):
        raise LabelMapMissing("cartesian_subgroup needs the product chain with its label maps")
    factors = tuple(as_complex(f) for f in factors)
    if factors != ambient.factors:
        raise LabelMapMissing("factors do not match the product chain")

    m = len(factors)
    factor_points = [complex_points(f) for f in factors]
    factor_index = [{p: i for i, p in enumerate(pts)} for pts in factor_points]
    factor_groups = [complex_automorphism_group(f) for f in factors]

    # Isomorphism classes of factors, each member tied to its class representative.
    representative = list(range(m))
    to_member: List[Perm] = [tuple(range(len(p))) for p in factor_points]
    for j in range(m):
        for i in range(j):
            if representative[i] != i:
                continue
            mapping = find_isomorphism(structure_of(factors[i]), structure_of(factors[j]))
            if mapping is not None:
                representative[j] = i
                to_member[j] = mapping
                break
    from_member = [inverse(perm) for perm in to_member]
    classes: Dict[int, List[int]] = {}
    for j, r in enumerate(representative):
        classes.setdefault(r, []).append(j)

    x = ambient.complex
    points = complex_points(x)
    point_index = {p: i for i, p in enumerate(points)}
    coords: List[Optional[Tuple[int, ...]]] = []
    for p in points:
        kind = p[0]
        if kind == "v":
            flat = ambient.flatten_vertex(p[1])
            coords.append(tuple(factor_index[k][("v", c)] for k, c in enumerate(flat)))
        elif kind == "d":
            flat = ambient.flatten_dart(Dart(p[1], p[2]))
            coords.append(
                tuple(factor_index[k][("d", c.edge, c.side)] for k, c in enumerate(flat))
            )
        elif kind == "fl":
            flat = ambient.flatten_flag(Flag(p[1], p[2], p[3]))
            coords.append(
                tuple(factor_index[k][("fl",) + tuple(c)] for k, c in enumerate(flat))
            )
        else:
            coords.append(None)
    by_coords = {c: i for i, c in enumerate(coords) if c is not None}
    face_anchor = {
        i: point_index[("fl", p[1], 0, 1)] for i, p in enumerate(points) if p[0] == "f"
    }

    def cartesian_perm(source: List[int], maps: List[Perm]) -> Perm:
        # source[b] is the coordinate whose entry moves to coordinate b
        perm = [0] * len(points)
        for i, c in enumerate(coords):
            if c is not None:
                perm[i] = by_coords[tuple(maps[b][c[source[b]]] for b in range(m))]
        for i, anchor in face_anchor.items():
            perm[i] = point_index[("f", points[perm[anchor]][1])]
        return tuple(perm)

    unmoved = list(range(m))
    generators = []
    for b, group in enumerate(factor_groups):
        for sigma in group.generators:
            maps = [tuple(range(len(p))) for p in factor_points]
            maps[b] = sigma
            generators.append(cartesian_perm(unmoved, maps))
    for members in classes.values():
        for a, b in zip(members, members[1:]):
            source = list(unmoved)
            source[a], source[b] = b, a
            maps = [compose(to_member[k], from_member[source[k]]) for k in range(m)]
            generators.append(cartesian_perm(source, maps))

    if restrict_to is None:
        group = group_from_generators(points, generators)
    else:
        keep = frozenset(restrict_to)
        target = complex_points(component_complex(x, keep))
        stabilizer = _component_stabilizer(points, generators, x, keep)
        target_index = {p: i for i, p in enumerate(target)}
        restricted = [
            tuple(target_index[points[h[point_index[p]]]] for p in target) for h in stabilizer
        ]
        group = group_from_generators(target, restricted)
    logger.info(
        f"Cartesian subgroup on {len(group.points)} points: order {group.order}, "
        f"{len(group.generators)} generators"
    )
    return group
