"""Cycle-space linear algebra over exact integers.

A loop's homology class is its net signed edge-traversal vector (orientation
+1 along the stored u -> v direction).  Independence over H_1(Gamma, R)
equals rank over Q of these integer vectors, certified by fraction-free
Gaussian elimination.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graph import BasedLoop, GraphError, MetricGraph

CycleVector = tuple[int, ...]


def cycle_vector(g: MetricGraph, loop: BasedLoop) -> CycleVector:
    """Net signed traversal count per edge; validates the walk is closed."""
    loop.validate(g)
    coeffs = [0] * len(g.edges)
    for eid, fwd in loop.steps:
        coeffs[eid] += 1 if fwd else -1
    return tuple(coeffs)


def is_boundary_zero(g: MetricGraph, vec: CycleVector) -> bool:
    """Check the vector lies in the kernel of the vertex-edge incidence map."""
    if len(vec) != len(g.edges):
        raise GraphError("vector dimension does not match edge count")
    balance = [0] * g.num_vertices
    for e, c in zip(g.edges, vec):
        balance[e.u] -= c
        balance[e.v] += c
    return all(x == 0 for x in balance)


@dataclass(frozen=True)
class RankCertificate:
    vectors: tuple[CycleVector, ...]
    rank: int
    pivot_edges: tuple[int, ...]


def rank(vectors: Sequence[CycleVector]) -> RankCertificate:
    """Exact rank over Q by fraction-free (Bareiss) elimination.

    Pivots scan columns left to right (edge-id order) and rows top to bottom,
    so the pivot-edge witness is deterministic.
    """
    vectors = tuple(tuple(v) for v in vectors)
    if not vectors:
        return RankCertificate((), 0, ())
    ncols = len(vectors[0])
    if any(len(v) != ncols for v in vectors):
        raise GraphError("cycle vectors must share one edge set")
    m = [list(v) for v in vectors]
    nrows = len(m)
    pivots: list[int] = []
    row = 0
    prev = 1
    for col in range(ncols):
        if row == nrows:
            break
        pivot_row = next((r for r in range(row, nrows) if m[r][col] != 0), None)
        if pivot_row is None:
            continue
        if pivot_row != row:
            m[row], m[pivot_row] = m[pivot_row], m[row]
        pivots.append(col)
        p = m[row][col]
        for r in range(row + 1, nrows):
            factor = m[r][col]
            for c in range(col, ncols):
                m[r][c] = (m[r][c] * p - factor * m[row][c]) // prev
        prev = p
        row += 1
    return RankCertificate(vectors, len(pivots), tuple(pivots))


def is_independent(vectors: Sequence[CycleVector]) -> bool:
    vectors = tuple(vectors)
    return rank(vectors).rank == len(vectors)


def free_ball_size(k: int, r: int) -> int:
    """Number of reduced words of length <= r in the free group of rank k.

    Closed form of the (2k)(2k-1)^(j-1) sphere counts: 1 for r = 0,
    2r + 1 for k = 1, else 1 + 2k((2k-1)^r - 1)/(2k-2).
    """
    if k < 1:
        raise GraphError("free group rank must be at least 1")
    if r < 0:
        raise GraphError("word radius must be non-negative")
    if r == 0:
        return 1
    if k == 1:
        return 2 * r + 1
    return 1 + 2 * k * ((2 * k - 1) ** r - 1) // (2 * k - 2)


class _IncrementalRank:
    """Echelon basis of integer rows supporting one-vector rank updates.

    Reduction is by cross-multiplication (no division), so everything stays
    in exact integer arithmetic.
    """

    def __init__(self) -> None:
        self._rows: list[list[int]] = []
        self._pivot_cols: list[int] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    def try_add(self, vec: Sequence[int]) -> bool:
        """Add `vec` to the span; True iff it increased the rank."""
        row = list(vec)
        for basis_row, col in zip(self._rows, self._pivot_cols):
            f = row[col]
            if f:
                p = basis_row[col]
                row = [x * p - f * y for x, y in zip(row, basis_row)]
        pivot = next((c for c, x in enumerate(row) if x != 0), None)
        if pivot is None:
            return False
        self._rows.append(row)
        self._pivot_cols.append(pivot)
        return True
