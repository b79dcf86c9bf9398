"""
Graphviz DOT export of skeletons and block graphs. Export only.
"""

from collections import Counter
from typing import Optional

from jinja2 import Environment, PackageLoader

from polycell.models.multigraph import MultiGraph
from polycell.models.polycomplex import Complex
from polycell.services.blocks import BlockGraph


def dot_id(value: str) -> str:
    escaped = str(value).replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


environment = Environment(
    loader=PackageLoader("polycell", "templates"),
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
)
environment.filters["dot_id"] = dot_id


def skeleton_dot(x: Complex, name: str = "skeleton") -> str:
    """The 1-skeleton; edges used by faces are drawn heavier."""
    usage = Counter(step.edge for face in x.faces for step in face.boundary.steps)
    edges = [{"id": e.id, "ends": e.ends, "faces": usage[e.id]} for e in x.skeleton.edges]
    template = environment.get_template("skeleton.dot.j2")
    return template.render(name=name, vertices=x.skeleton.vertices, edges=edges)


def graph_dot(g: MultiGraph, name: str = "graph") -> str:
    return skeleton_dot(Complex(g, ()), name)


def block_graph_dot(blocks: BlockGraph, name: Optional[str] = None) -> str:
    vertices = [
        {"id": vid, "label": " ".join(faces)} for vid, faces in sorted(blocks.vertex_tuples.items())
    ]
    edges = [{"ends": e.ends} for e in blocks.graph.edges]
    template = environment.get_template("blockgraph.dot.j2")
    return template.render(name=name or "blocks", vertices=vertices, edges=edges)
