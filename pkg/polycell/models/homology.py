"""
Integer first homology of a complex via Smith normal form.
"""

from enum import Enum
from typing import List, Tuple

from polycell.models.multigraph import components
from polycell.models.polycomplex import Complex, euler_characteristic


class SimplyConnectedVerdict(str, Enum):
    FAILS_CHI = "fails_chi"
    FAILS_H1 = "fails_h1"
    PASSES = "passes"


def smith_invariants(matrix: List[List[int]]) -> List[int]:
    """Nonzero invariant factors d1 | d2 | ... of an integer matrix."""
    a = [list(row) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    invariants: List[int] = []

    for t in range(min(rows, cols)):
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]

        while True:
            p = a[t][t]
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // p
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // p
                    for row in a:
                        row[j] -= q * row[t]

            # Remainders are strictly smaller than the pivot; pull the smallest in.
            smaller = None
            for i in range(t + 1, rows):
                if a[i][t] and (smaller is None or abs(a[i][t]) < abs(a[smaller[0]][smaller[1]])):
                    smaller = (i, t)
            for j in range(t + 1, cols):
                if a[t][j] and (smaller is None or abs(a[t][j]) < abs(a[smaller[0]][smaller[1]])):
                    smaller = (t, j)
            if smaller is not None:
                i, j = smaller
                if i != t:
                    a[t], a[i] = a[i], a[t]
                else:
                    for row in a:
                        row[t], row[j] = row[j], row[t]
                continue

            offender = next(
                (
                    i
                    for i in range(t + 1, rows)
                    for j in range(t + 1, cols)
                    if a[i][j] % p
                ),
                None,
            )
            if offender is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[offender])]

        invariants.append(abs(a[t][t]))
    return invariants


def face_boundary_matrix(x: Complex) -> List[List[int]]:
    """Edges by faces; a face's column is the signed sum of its traversals."""
    index = {edge.id: row for row, edge in enumerate(x.skeleton.edges)}
    matrix = [[0] * len(x.faces) for _ in x.skeleton.edges]
    for col, face in enumerate(x.faces):
        for step in face.boundary.steps:
            matrix[index[step.edge]][col] += 1 if step.forward else -1
    return matrix


def homology_h1(x: Complex) -> Tuple[int, List[int]]:
    """(betti_1, torsion coefficients) of H_1(x; Z)."""
    graph = x.skeleton
    rank_d1 = len(graph.vertices) - len(components(graph))
    invariants = smith_invariants(face_boundary_matrix(x)) if x.faces else []
    betti = len(graph.edges) - rank_d1 - len(invariants)
    torsion = [d for d in invariants if d > 1]
    return betti, torsion


def simply_connected_necessary(x: Complex) -> SimplyConnectedVerdict:
    """Necessary conditions only: chi >= 1 and H_1 = 0."""
    if euler_characteristic(x) < 1:
        return SimplyConnectedVerdict.FAILS_CHI
    betti, torsion = homology_h1(x)
    if betti or torsion:
        return SimplyConnectedVerdict.FAILS_H1
    return SimplyConnectedVerdict.PASSES
