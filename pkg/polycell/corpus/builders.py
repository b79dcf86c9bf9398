"""
Named fixture constructions.

Canonical labelings:
- polygon-like complexes use vertices ``v0..v{n-1}`` and edges ``e0..e{n-1}``
  with ``e_j = (v_j, v_{j+1})`` and faces walking every edge forward;
- complete graphs and polyhedra use ``e{i}-{j}`` for the edge ``(v_i, v_j)``, i < j;
- strips use bottom vertices ``b_j``, top vertices ``t_j``, rungs ``r_j``,
  bottom edges ``h_j`` and top edges ``g_j``;
- chains and necklaces number their polygons ``f0, f1, ...``.
"""

from typing import Dict, List, Sequence, Tuple

from polycell.core.errors import BadParameter
from polycell.models.multigraph import Edge, MultiGraph, Traversal, VertexId, Walk
from polycell.models.polycomplex import Complex, Face


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise BadParameter(message)


def _cycle_edges(n: int) -> List[Edge]:
    return [Edge(f"e{j}", (f"v{j}", f"v{(j + 1) % n}")) for j in range(n)]


def _walk_over(graph: MultiGraph, vertex_cycle: Sequence[VertexId]) -> Walk:
    """Closed walk through ``vertex_cycle`` in a graph without parallel edges."""
    by_ends: Dict[Tuple[VertexId, VertexId], str] = {edge.ends: edge.id for edge in graph.edges}
    steps = []
    for k, a in enumerate(vertex_cycle):
        b = vertex_cycle[(k + 1) % len(vertex_cycle)]
        if (a, b) in by_ends:
            steps.append(Traversal(by_ends[(a, b)], True))
        else:
            steps.append(Traversal(by_ends[(b, a)], False))
    return Walk(vertex_cycle[0], tuple(steps))


def _forward(start: VertexId, edges: Sequence[str], times: int = 1) -> Walk:
    return Walk(start, tuple(Traversal(e, True) for e in edges) * times)


# Graphs


def cycle(n: int) -> MultiGraph:
    _require(n >= 1, f"cycle length must be at least 1, got {n}")
    return MultiGraph.build([f"v{j}" for j in range(n)], _cycle_edges(n))


def path(n: int) -> MultiGraph:
    _require(n >= 1, f"path needs at least 1 vertex, got {n}")
    edges = [Edge(f"e{j}", (f"v{j}", f"v{j + 1}")) for j in range(n - 1)]
    return MultiGraph.build([f"v{j}" for j in range(n)], edges)


def complete(n: int) -> MultiGraph:
    _require(n >= 1, f"complete graph needs at least 1 vertex, got {n}")
    edges = [
        Edge(f"e{i}-{j}", (f"v{i}", f"v{j}")) for i in range(n) for j in range(i + 1, n)
    ]
    return MultiGraph.build([f"v{j}" for j in range(n)], edges)


def star(k: int) -> MultiGraph:
    _require(k >= 1, f"star needs at least 1 leaf, got {k}")
    edges = [Edge(f"e{j}", ("c", f"v{j}")) for j in range(k)]
    return MultiGraph.build(["c"] + [f"v{j}" for j in range(k)], edges)


def complete_bipartite(a: int, b: int) -> MultiGraph:
    _require(a >= 1 and b >= 1, f"both sides need a vertex, got {a} and {b}")
    edges = [Edge(f"e{i}-{j}", (f"a{i}", f"b{j}")) for i in range(a) for j in range(b)]
    return MultiGraph.build([f"a{i}" for i in range(a)] + [f"b{j}" for j in range(b)], edges)


def loop() -> MultiGraph:
    return MultiGraph.build(["v"], [Edge("e", ("v", "v"))])


# Single polygons


def polygon(n: int) -> Complex:
    _require(n >= 1, f"polygon length must be at least 1, got {n}")
    skeleton = cycle(n)
    return Complex.build(skeleton, [Face("f", _forward("v0", [f"e{j}" for j in range(n)]))])


def wrapped_polygon(total: int, core: int) -> Complex:
    """A ``total``-gon wound ``total / core`` times around a ``core``-cycle."""
    _require(core >= 1 and total >= 1, f"lengths must be positive, got {total} and {core}")
    _require(total % core == 0, f"core {core} must divide {total}")
    skeleton = cycle(core)
    boundary = _forward("v0", [f"e{j}" for j in range(core)], total // core)
    return Complex.build(skeleton, [Face("f", boundary)])


def one_gon() -> Complex:
    return polygon(1)


def multi_polygon(n: int, copies: int) -> Complex:
    """``copies`` n-gons attached along one n-cycle."""
    _require(n >= 1 and copies >= 1, f"need n >= 1 and copies >= 1, got {n} and {copies}")
    skeleton = cycle(n)
    edges = [f"e{j}" for j in range(n)]
    return Complex.build(skeleton, [Face(f"f{k}", _forward("v0", edges)) for k in range(copies)])


def twin_polygons(n: int) -> Complex:
    """Two n-gons on one cycle, the second started half way round."""
    _require(n >= 1, f"polygon length must be at least 1, got {n}")
    skeleton = cycle(n)
    half = n // 2
    edges = [f"e{(j + half) % n}" for j in range(n)]
    faces = [
        Face("f0", _forward("v0", [f"e{j}" for j in range(n)])),
        Face("f1", _forward(f"v{half}", edges)),
    ]
    return Complex.build(skeleton, faces)


# One-vertex complexes


def dunce_hat() -> Complex:
    skeleton = loop()
    steps = (Traversal("e", True), Traversal("e", True), Traversal("e", False))
    return Complex.build(skeleton, [Face("f", Walk("v", steps))])


def torus() -> Complex:
    skeleton = MultiGraph.build(["v"], [Edge("a", ("v", "v")), Edge("b", ("v", "v"))])
    steps = (
        Traversal("a", True),
        Traversal("b", True),
        Traversal("a", False),
        Traversal("b", False),
    )
    return Complex.build(skeleton, [Face("f", Walk("v", steps))])


def projective_plane() -> Complex:
    return Complex.build(loop(), [Face("f", _forward("v", ["e"], 2))])


# Polyhedra


def tetrahedron() -> Complex:
    skeleton = complete(4)
    faces = []
    for missing in range(4):
        corners = [f"v{i}" for i in range(4) if i != missing]
        faces.append(Face(f"f{missing}", _walk_over(skeleton, corners)))
    return Complex.build(skeleton, faces)


def cube_surface() -> Complex:
    vertices = [f"v{i}" for i in range(8)]
    edges = [
        Edge(f"e{i}-{i | 1 << bit}", (f"v{i}", f"v{i | 1 << bit}"))
        for i in range(8)
        for bit in range(3)
        if not i & 1 << bit
    ]
    skeleton = MultiGraph.build(vertices, edges)
    faces = []
    for bit in range(3):
        p, q = [b for b in range(3) if b != bit]
        for value in (0, 1):
            base = value << bit
            corners = [base, base | 1 << p, base | 1 << p | 1 << q, base | 1 << q]
            faces.append(
                Face(f"f{bit}{value}", _walk_over(skeleton, [f"v{c}" for c in corners]))
            )
    return Complex.build(skeleton, faces)


# Strips, chains and necklaces


def strip(squares: int, twisted: bool = False) -> Complex:
    """A closed band of squares; the twisted band is a Moebius strip."""
    _require(squares >= 1, f"a strip needs at least 1 square, got {squares}")
    k = squares
    vertices = [f"b{j}" for j in range(k)] + [f"t{j}" for j in range(k)]
    edges = [Edge(f"r{j}", (f"b{j}", f"t{j}")) for j in range(k)]
    for j in range(k - 1):
        edges.append(Edge(f"h{j}", (f"b{j}", f"b{j + 1}")))
        edges.append(Edge(f"g{j}", (f"t{j}", f"t{j + 1}")))
    last = k - 1
    if twisted:
        edges.append(Edge(f"h{last}", (f"b{last}", "t0")))
        edges.append(Edge(f"g{last}", (f"t{last}", "b0")))
    else:
        edges.append(Edge(f"h{last}", (f"b{last}", "b0")))
        edges.append(Edge(f"g{last}", (f"t{last}", "t0")))
    skeleton = MultiGraph.build(vertices, edges)

    faces = []
    for j in range(k):
        closing = twisted and j == last
        steps = (
            Traversal(f"h{j}", True),
            Traversal(f"r{(j + 1) % k}", not closing),
            Traversal(f"g{j}", False),
            Traversal(f"r{j}", False),
        )
        faces.append(Face(f"f{j}", Walk(f"b{j}", steps)))
    return Complex.build(skeleton, faces)


def polygon_chain(count: int, length: int) -> Complex:
    """Even polygons in a row, each glued to the next along opposite edges."""
    _require(count >= 1, f"a chain needs at least 1 polygon, got {count}")
    _require(length >= 4 and length % 2 == 0, f"chain polygons need even length >= 4, got {length}")
    half = length // 2
    rows: List[List[VertexId]] = []
    for k in range(count):
        row = [f"c{k}.{j}" for j in range(length)]
        if k:
            previous = rows[-1]
            row[0], row[1] = previous[half + 1], previous[half]
        rows.append(row)

    edges: Dict[frozenset, Edge] = {}
    for k, row in enumerate(rows):
        for j in range(length):
            a, b = row[j], row[(j + 1) % length]
            edges.setdefault(frozenset((a, b)), Edge(f"s{k}.{j}", (a, b)))
    vertices = sorted({v for row in rows for v in row})
    skeleton = MultiGraph.build(vertices, edges.values())
    faces = [Face(f"f{k}", _walk_over(skeleton, row)) for k, row in enumerate(rows)]
    return Complex.build(skeleton, faces)


def necklace(beads: int, length: int) -> Complex:
    """Even polygons in a row, consecutive ones sharing a single antipodal vertex."""
    _require(beads >= 1, f"a necklace needs at least 1 bead, got {beads}")
    _require(length >= 2 and length % 2 == 0, f"beads need even length >= 2, got {length}")
    half = length // 2
    rows: List[List[VertexId]] = []
    for k in range(beads):
        row = [f"u{k}.{j}" for j in range(length)]
        if k:
            row[0] = rows[-1][half]
        rows.append(row)
    edges = [
        Edge(f"s{k}.{j}", (row[j], row[(j + 1) % length]))
        for k, row in enumerate(rows)
        for j in range(length)
    ]
    vertices = sorted({v for row in rows for v in row})
    skeleton = MultiGraph.build(vertices, edges)
    faces = [
        Face(f"f{k}", _forward(row[0], [f"s{k}.{j}" for j in range(length)]))
        for k, row in enumerate(rows)
    ]
    return Complex.build(skeleton, faces)


def doubled_octagon() -> Complex:
    """An octagon with corners 1, 3 and corners 5, 7 identified."""
    names = ["a0", "u", "a2", "u", "a4", "w", "a6", "w"]
    edges = [Edge(f"s{j}", (names[j], names[(j + 1) % 8])) for j in range(8)]
    skeleton = MultiGraph.build(sorted(set(names)), edges)
    return Complex.build(skeleton, [Face("f", _forward("a0", [f"s{j}" for j in range(8)]))])
