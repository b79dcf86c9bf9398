"""
Line-oriented ``.pcc`` complex documents.

    pcc 1
    # comment
    vertex <id>
    edge <id> <end0> <end1>
    face <id> <edge>+ <edge>- ...

Ids are any whitespace-free tokens not starting with ``#``. A step token is
an edge id followed by ``+`` (forward) or ``-`` (backward); the typographic
minus is accepted on input.
"""

import logging
from pathlib import Path
from typing import List, Union

from polycell.core.errors import ParseError, SemanticError
from polycell.models.polycomplex import Complex
from polycell.schemas.document import FORMAT_VERSION, ComplexDocument, EdgeRecord, FaceRecord

logger = logging.getLogger(__name__)

HEADER = "pcc"
KEYWORDS = ("vertex", "edge", "face")


def _columns(line: str) -> List[tuple]:
    """Tokens of a line with their 1-based columns."""
    tokens = []
    column = 0
    for token in line.split():
        column = line.index(token, column)
        tokens.append((token, column + 1))
        column += len(token)
    return tokens


def _step(token: str, line: int, column: int) -> str:
    token = token.replace("−", "-")
    if len(token) < 2 or token[-1] not in "+-":
        message = f"step {token!r} needs an edge id and a '+' or '-' direction"
        raise ParseError(message, line, column)
    return token


def parse_document(text: str) -> ComplexDocument:
    version = None
    vertices: List[str] = []
    edges: List[EdgeRecord] = []
    faces: List[FaceRecord] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = _columns(raw)
        if not tokens or tokens[0][0].startswith("#"):
            continue
        (keyword, column), args = tokens[0], tokens[1:]
        if version is None:
            if keyword != HEADER or len(args) != 1:
                raise ParseError(f"expected '{HEADER} {FORMAT_VERSION}' header", number, column)
            if args[0][0] != str(FORMAT_VERSION):
                raise ParseError(f"unsupported version {args[0][0]!r}", number, args[0][1])
            version = FORMAT_VERSION
            continue
        if keyword == HEADER:
            raise ParseError("repeated header", number, column)
        if keyword not in KEYWORDS:
            raise ParseError(f"unknown field {keyword!r}", number, column)
        if not args:
            raise ParseError(f"'{keyword}' needs an id", number, column + len(keyword))
        ident = args[0][0]
        if keyword == "vertex":
            if len(args) != 1:
                raise ParseError("trailing tokens after vertex id", number, args[1][1])
            vertices.append(ident)
        elif keyword == "edge":
            if len(args) > 3:
                raise ParseError("trailing tokens after edge ends", number, args[3][1])
            if len(args) < 3:
                raise SemanticError(
                    f"edge {ident!r} on line {number} lacks an endpoint", "edges have two ends"
                )
            edges.append(EdgeRecord(id=ident, ends=[args[1][0], args[2][0]]))
        else:
            steps = [_step(token, number, col) for token, col in args[1:]]
            faces.append(FaceRecord(id=ident, steps=steps))
    if version is None:
        raise ParseError(f"missing '{HEADER} {FORMAT_VERSION}' header", 1)
    return ComplexDocument(version=version, vertices=vertices, edges=edges, faces=faces)


def emit_document(document: ComplexDocument) -> str:
    lines = [f"{HEADER} {document.version}"]
    lines.extend(f"vertex {v}" for v in document.vertices)
    lines.extend(f"edge {e.id} {e.ends[0]} {e.ends[1]}" for e in document.edges)
    lines.extend(f"face {f.id} {' '.join(f.steps)}" for f in document.faces)
    return "\n".join(lines) + "\n"


def loads(text: str) -> Complex:
    return parse_document(text).to_complex()


def dumps(x: Complex) -> str:
    return emit_document(ComplexDocument.from_complex(x))


def load(path: Union[str, Path]) -> Complex:
    logger.info(f"reading complex document {path}")
    return loads(Path(path).read_text(encoding="utf-8"))


def dump(x: Complex, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps(x), encoding="utf-8")
    logger.info(f"wrote complex document {path}")
