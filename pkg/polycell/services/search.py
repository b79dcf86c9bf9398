"""
Individualize-and-refine search over colored simple graphs.

Structures are encoded as points with an initial color and colored
adjacency. Isomorphisms are found by refining the disjoint union of two
structures; automorphism groups come from a stabilizer-chain search that
walks the base from its deepest level upwards.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from polycell.core.config import settings
from polycell.core.errors import TooLarge

logger = logging.getLogger(__name__)

Perm = Tuple[int, ...]


@dataclass
class ColoredStructure:
    labels: List[Hashable]
    colors: List[int]
    adjacency: List[List[Tuple[int, int]]] = field(default_factory=list)

    @classmethod
    def from_relations(
        cls,
        labels: Sequence[Hashable],
        colors: Sequence[int],
        relations: Dict[Tuple[int, int], int],
    ) -> "ColoredStructure":
        """``relations`` maps unordered index pairs to an edge color bitmask."""
        adjacency: List[List[Tuple[int, int]]] = [[] for _ in labels]
        for (a, b), code in relations.items():
            adjacency[a].append((b, code))
            adjacency[b].append((a, code))
        for row in adjacency:
            row.sort()
        return cls(list(labels), list(colors), adjacency)

    def __len__(self) -> int:
        return len(self.labels)

    def edge_set(self) -> set:
        return {(v, w, code) for v, row in enumerate(self.adjacency) for w, code in row}


def relate(relations: Dict[Tuple[int, int], int], a: int, b: int, code: int) -> None:
    key = (a, b) if a <= b else (b, a)
    relations[key] = relations.get(key, 0) | code


def refine(colors: List[int], adjacency: List[List[Tuple[int, int]]]) -> List[int]:
    """Color refinement to the coarsest equitable partition."""
    ranks = {c: i for i, c in enumerate(sorted(set(colors)))}
    current = [ranks[c] for c in colors]
    scale = len(colors) + 1
    cell_count = len(set(current))
    while True:
        signatures = [
            (current[v], tuple(sorted(code * scale + current[w] for w, code in row)))
            for v, row in enumerate(adjacency)
        ]
        ordering = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        refined = [ordering[sig] for sig in signatures]
        if len(ordering) == cell_count:
            return refined
        current = refined
        cell_count = len(ordering)


class _UnionSearch:
    """Isomorphism search on the disjoint union of ``left`` and ``right``."""

    def __init__(self, left: ColoredStructure, right: ColoredStructure, budget: int):
        self.size = len(left)
        offset = self.size
        self.adjacency = left.adjacency + [
            [(w + offset, code) for w, code in row] for row in right.adjacency
        ]
        self.colors = left.colors + right.colors
        self.right_edges = right.edge_set()
        self.left = left
        self.budget = budget
        self.nodes = 0

    def individualize(self, colors: List[int], pairs: Sequence[Tuple[int, int]]) -> List[int]:
        colors = list(colors)
        fresh = max(colors) + 1
        for x, y in pairs:
            colors[x] = fresh
            colors[y + self.size] = fresh
            fresh += 1
        return colors

    def _balanced(self, colors: List[int]) -> bool:
        counts: Dict[int, int] = {}
        for v, color in enumerate(colors):
            counts[color] = counts.get(color, 0) + (1 if v < self.size else -1)
        return not any(counts.values())

    def _verify(self, mapping: List[int]) -> bool:
        for v, row in enumerate(self.left.adjacency):
            image = mapping[v]
            for w, code in row:
                if (image, mapping[w], code) not in self.right_edges:
                    return False
        return True

    def search(self, colors: List[int]) -> Optional[Perm]:
        self.nodes += 1
        if self.nodes > self.budget:
            raise TooLarge(f"search exceeded {self.budget} nodes")
        colors = refine(colors, self.adjacency)
        if not self._balanced(colors):
            return None
        cells: Dict[int, List[int]] = {}
        for v, color in enumerate(colors):
            cells.setdefault(color, []).append(v)
        target = next((c for c in sorted(cells) if len(cells[c]) > 2), None)
        if target is None:
            mapping = [0] * self.size
            for members in cells.values():
                mapping[members[0]] = members[1] - self.size
            return tuple(mapping) if self._verify(mapping) else None
        members = cells[target]
        x = members[0]
        for y in (m for m in members if m >= self.size):
            branch = list(colors)
            fresh = max(colors) + 1
            branch[x] = fresh
            branch[y] = fresh
            found = self.search(branch)
            if found is not None:
                return found
        return None


def find_isomorphism(
    left: ColoredStructure,
    right: ColoredStructure,
    budget: Optional[int] = None,
) -> Optional[Perm]:
    """First isomorphism from ``left`` onto ``right`` as an index map, if any."""
    if len(left) != len(right):
        return None
    if sorted(left.colors) != sorted(right.colors):
        return None
    if sorted(len(r) for r in left.adjacency) != sorted(len(r) for r in right.adjacency):
        return None
    engine = _UnionSearch(left, right, budget or settings.SEARCH_NODE_BUDGET)
    return engine.search(list(engine.colors))


@dataclass
class ChainResult:
    base: List[int]
    generators: List[Perm]
    orbit_sizes: List[int]
    nodes: int

    @property
    def order(self) -> int:
        total = 1
        for size in self.orbit_sizes:
            total *= size
        return total


def orbit_of(point: int, generators: Sequence[Perm]) -> set:
    orbit = {point}
    frontier = [point]
    while frontier:
        p = frontier.pop()
        for gen in generators:
            q = gen[p]
            if q not in orbit:
                orbit.add(q)
                frontier.append(q)
    return orbit


def automorphism_chain(structure: ColoredStructure, budget: Optional[int] = None) -> ChainResult:
    """Generators of Aut(structure) along a stabilizer chain."""
    budget = budget or settings.SEARCH_NODE_BUDGET

    base: List[int] = []
    candidates: List[List[int]] = []
    colors = refine(structure.colors, structure.adjacency)
    while True:
        cells: Dict[int, List[int]] = {}
        for v, color in enumerate(colors):
            cells.setdefault(color, []).append(v)
        target = next((c for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            break
        point = cells[target][0]
        base.append(point)
        candidates.append(cells[target])
        colors = list(colors)
        colors[point] = max(colors) + 1
        colors = refine(colors, structure.adjacency)

    engine = _UnionSearch(structure, structure, budget)
    generators: List[Perm] = []
    orbit_sizes = [1] * len(base)
    for level in range(len(base) - 1, -1, -1):
        point = base[level]
        fixed = [(b, b) for b in base[:level]]
        orbit = orbit_of(point, generators)
        for image in candidates[level]:
            if image in orbit:
                continue
            start = engine.individualize(engine.colors, fixed + [(point, image)])
            found = engine.search(start)
            if found is not None:
                generators.append(found)
                orbit = orbit_of(point, generators)
        orbit_sizes[level] = len(orbit)

    logger.debug(
        f"stabilizer chain: base length {len(base)}, {len(generators)} generators, "
        f"{engine.nodes} search nodes"
    )
    return ChainResult(base, generators, orbit_sizes, engine.nodes)
