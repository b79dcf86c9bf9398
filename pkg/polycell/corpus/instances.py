"""
Seeded random instances for the verification suites.

Every generator draws from a ``numpy.random.Generator`` built by
``make_rng(seed)``, so an instance is reproduced by its seed and the
construction string the suites record alongside it.
"""

import logging
from typing import List, Optional

import networkx as nx
import numpy as np

from polycell.core.errors import BadParameter
from polycell.models.multigraph import Edge, MultiGraph, Traversal, Walk
from polycell.models.polycomplex import Complex, Face

logger = logging.getLogger(__name__)


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_multigraph(
    rng: np.random.Generator, max_vertices: int = 6, max_edges: int = 8, loops: bool = True
) -> MultiGraph:
    """A multigraph with parallel edges and, optionally, loops."""
    if max_vertices < 1 or max_edges < 1:
        raise BadParameter("random graphs need room for a vertex and an edge")
    n = int(rng.integers(1, max_vertices + 1))
    if n == 1 and not loops:
        n = 2
    m = int(rng.integers(1, max_edges + 1))
    vertices = [f"v{j}" for j in range(n)]
    edges = []
    for k in range(m):
        a = int(rng.integers(n))
        b = int(rng.integers(n))
        if a == b and not loops:
            b = (a + 1 + int(rng.integers(n - 1))) % n
        edges.append(Edge(f"e{k}", (vertices[a], vertices[b])))
    return MultiGraph.build(vertices, edges)


def _random_closed_walk(
    rng: np.random.Generator, graph: MultiGraph, max_length: int, attempts: int = 24
) -> Optional[Walk]:
    """A random closed walk, or a there-and-back walk when none closes in time."""
    starts = [v for v in graph.vertices if graph.darts_at[v]]
    if not starts:
        return None
    start = starts[int(rng.integers(len(starts)))]
    for _ in range(attempts):
        current = start
        steps: List[Traversal] = []
        for _ in range(max_length):
            darts = graph.darts_at[current]
            step = Traversal.from_dart(darts[int(rng.integers(len(darts)))])
            steps.append(step)
            current = graph.head(step)
            if current == start and rng.random() < 0.6:
                return Walk(start, tuple(steps))
    darts = graph.darts_at[start]
    step = Traversal.from_dart(darts[int(rng.integers(len(darts)))])
    return Walk(start, (step, step.reversed()))


def random_complex(
    rng: np.random.Generator,
    max_vertices: int = 6,
    max_edges: int = 8,
    max_faces: int = 3,
    max_face_length: int = 5,
) -> Complex:
    """A small complex whose skeleton may carry loops and parallel edges."""
    skeleton = random_multigraph(rng, max_vertices, max_edges, loops=True)
    count = int(rng.integers(0, max_faces + 1))
    faces = []
    for k in range(count):
        walk = _random_closed_walk(rng, skeleton, max_face_length)
        if walk is not None:
            faces.append(Face(f"f{k}", walk))
    return Complex.build(skeleton, faces)


def random_connected_simple_graph(
    rng: np.random.Generator, n: int, bipartite: bool, extra_edges: int = 2
) -> MultiGraph:
    """Connected simple graph on ``n`` vertices, bipartite or containing an odd cycle."""
    if n < 2 or (not bipartite and n < 3):
        kind = "bipartite" if bipartite else "non-bipartite"
        raise BadParameter(f"cannot build a connected {kind} graph on {n} vertices")
    g = nx.Graph()
    g.add_nodes_from(range(n))
    side = [int(rng.integers(2)) for _ in range(n)]
    side[0], side[1] = 0, 1
    for v in range(1, n):
        candidates = [u for u in range(v) if not bipartite or side[u] != side[v]]
        g.add_edge(candidates[int(rng.integers(len(candidates)))], v)
    for _ in range(extra_edges):
        a, b = int(rng.integers(n)), int(rng.integers(n))
        if a != b and (not bipartite or side[a] != side[b]):
            g.add_edge(a, b)
    if not bipartite and nx.is_bipartite(g):
        # Close a triangle on some path of length two.
        for v in range(n):
            neighbours = sorted(g.neighbors(v))
            if len(neighbours) >= 2:
                g.add_edge(neighbours[0], neighbours[1])
                break
    pairs = sorted(tuple(sorted(e)) for e in g.edges)
    edges = [Edge(f"e{a}-{b}", (f"v{a}", f"v{b}")) for a, b in pairs]
    return MultiGraph.build([f"v{j}" for j in range(n)], edges)


def describe(seed: int, trial: int, generator: str, **params) -> str:
    """Construction string recorded with every random instance."""
    args = ",".join(f"{k}={v}" for k, v in sorted(params.items()))
    return f"{generator}(seed={seed},trial={trial}{',' if args else ''}{args})"


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Independent stream for one trial of a suite."""
    return np.random.default_rng([seed, trial])


def relabeled(rng: np.random.Generator, x: Complex) -> Complex:
    """The same complex under randomly permuted vertex, edge and face ids."""
    graph = x.skeleton
    vertex_order = rng.permutation(len(graph.vertices))
    edge_order = rng.permutation(len(graph.edges))
    face_order = rng.permutation(len(x.faces))
    vertex_ids = {v: f"p{int(k)}" for v, k in zip(graph.vertices, vertex_order)}
    edge_ids = {e.id: f"q{int(k)}" for e, k in zip(graph.edges, edge_order)}
    edges = [
        Edge(edge_ids[e.id], (vertex_ids[e.ends[0]], vertex_ids[e.ends[1]])) for e in graph.edges
    ]
    faces = [
        Face(
            f"r{int(k)}",
            Walk(
                vertex_ids[face.boundary.start],
                tuple(Traversal(edge_ids[s.edge], s.forward) for s in face.boundary.steps),
            ),
        )
        for face, k in zip(x.faces, face_order)
    ]
    return Complex.build(MultiGraph.build(vertex_ids.values(), edges), faces)
