from typing import List

from pydantic import BaseModel, Field

from polycell.core.errors import (
    DanglingEdge,
    DuplicateId,
    EmptyWalk,
    InvalidWalk,
    PolycellError,
    SemanticError,
)
from polycell.models.multigraph import Edge, MultiGraph, Traversal, Walk
from polycell.models.polycomplex import Complex, Face

FORMAT_VERSION = 1

# Invariant names reported by SemanticError
_INVARIANTS = {
    DanglingEdge: "edge ends are declared vertices",
    DuplicateId: "ids are unique",
    EmptyWalk: "faces have at least one step",
    InvalidWalk: "face boundaries are closed walks",
}


class EdgeRecord(BaseModel):
    id: str
    ends: List[str] = Field(min_length=2, max_length=2)

    class Config:
        extra = "forbid"


class FaceRecord(BaseModel):
    id: str
    steps: List[str]

    class Config:
        extra = "forbid"


class ComplexDocument(BaseModel):
    version: int = FORMAT_VERSION
    vertices: List[str] = []
    edges: List[EdgeRecord] = []
    faces: List[FaceRecord] = []

    class Config:
        extra = "forbid"

    @classmethod
    def from_complex(cls, x: Complex) -> "ComplexDocument":
        return cls(
            vertices=list(x.skeleton.vertices),
            edges=[EdgeRecord(id=e.id, ends=list(e.ends)) for e in x.skeleton.edges],
            faces=[FaceRecord(id=f.id, steps=f.boundary.tokens) for f in x.faces],
        )

    def to_complex(self) -> Complex:
        """Build and validate the complex, naming the first violated invariant."""
        try:
            skeleton = MultiGraph.build(
                self.vertices, [Edge(e.id, (e.ends[0], e.ends[1])) for e in self.edges]
            )
            faces = []
            for record in self.faces:
                for token in record.steps:
                    if len(token) < 2 or token[-1] not in "+-":
                        raise InvalidWalk(f"face {record.id!r} has malformed step {token!r}")
                steps = [Traversal(token[:-1], token[-1] == "+") for token in record.steps]
                if not steps:
                    raise EmptyWalk(f"face {record.id!r} has no steps")
                for step in steps:
                    if step.edge not in skeleton.edge_index:
                        raise InvalidWalk(f"face {record.id!r} uses unknown edge {step.edge!r}")
                faces.append(Face(record.id, Walk(skeleton.tail(steps[0]), tuple(steps))))
            return Complex.build(skeleton, faces)
        except SemanticError:
            raise
        except PolycellError as exc:
            raise SemanticError(str(exc), _INVARIANTS.get(type(exc))) from exc
