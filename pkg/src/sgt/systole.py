"""Exact systole (weighted girth) of a metric graph.

For graphs the homotopical and homological systole coincide, so the shortest
non-contractible loop is a shortest simple cycle.  The scan is the classic
delete-and-reconnect: every self-loop is a candidate, and every non-loop edge
e = (u, v) contributes d_{g-e}(u, v) + length(e).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .graph import BasedLoop, GraphError, MetricGraph, Step, steps_key
from .homology import CycleVector, cycle_vector
from .metric import _dijkstra, _path_steps
from typing import Iterable


@dataclass(frozen=True)
class SystolicCycle:
    length: Fraction
    loop: BasedLoop
    homology: CycleVector


def canonical_cycle(g: MetricGraph, base: int, steps: tuple[Step, ...]) -> BasedLoop:
    """Canonical representative of a cycle under rotation and reversal.

    Among all rotations of the traversal and of its inverse, pick the
    lexicographically smallest directed edge-id sequence; the base becomes
    that traversal's start vertex.
    """
    seq = g.walk_vertices(base, steps)
    if seq[-1] != base:
        raise GraphError("not a closed walk")
    k = len(steps)
    rev = tuple((eid, not fwd) for eid, fwd in reversed(steps))
    rev_seq = list(reversed(seq))
    best: Optional[tuple[tuple[tuple[int, int], ...], tuple[Step, ...], int]] = None
    for walk, vseq in ((steps, seq), (rev, rev_seq)):
        for i in range(k):
            rot = walk[i:] + walk[:i]
            key = steps_key(rot)
            if best is None or key < best[0]:
                best = (key, rot, vseq[i])
    assert best is not None
    _key, rot, start = best
    return BasedLoop(start, rot, g.walk_length(rot))


def cycle_sort_key(g: MetricGraph, loop: BasedLoop):
    """Deterministic total order on simple cycles used for tie-breaking."""
    return (loop.length, tuple(sorted(loop.edge_ids())), steps_key(loop.steps))


def shortest_cycle(
    g: MetricGraph, excluded: frozenset[int] = frozenset()
) -> SystolicCycle:
    """Shortest simple cycle avoiding `excluded` edges, exactly and deterministically."""
    den, weights = g.int_weights
    best_int: Optional[int] = None
    candidates: list[tuple[int, BasedLoop]] = []
    # Self-loops first: each is a cycle of its own length.
    for e in g.edges:
        if e.id in excluded or e.u != e.v:
            continue
        loop = canonical_cycle(g, e.u, ((e.id, True),))
        candidates.append((weights[e.id], loop))
        if best_int is None or weights[e.id] < best_int:
            best_int = weights[e.id]
    for e in g.edges:
        if e.id in excluded or e.u == e.v:
            continue
        if best_int is not None and weights[e.id] > best_int:
            continue  # candidate >= w(e) + positive distance, cannot tie the best
        dist, parents = _dijkstra(
            g, e.u, target=e.v, excluded=excluded | frozenset({e.id})
        )
        if dist[e.v] is None:
            continue
        total = dist[e.v] + weights[e.id]
        if best_int is not None and total > best_int:
            continue
        steps = _path_steps(parents, e.v) + ((e.id, False),)
        loop = canonical_cycle(g, e.u, steps)
        candidates.append((total, loop))
        if best_int is None or total < best_int:
            best_int = total
    if best_int is None:
        raise GraphError("graph has no cycle avoiding the excluded edges")
    ties = [loop for total, loop in candidates if total == best_int]
    loop = min(ties, key=lambda lp: cycle_sort_key(g, lp))
    return SystolicCycle(loop.length, loop, cycle_vector(g, loop))


def systole(g: MetricGraph) -> SystolicCycle:
    """Exact systole of a connected graph with b >= 1."""
    if not g.is_connected:
        raise GraphError("systole requires a connected graph")
    if g.betti() < 1:
        raise GraphError("forest has no cycle")
    return shortest_cycle(g)


def check_bst_bound(g: MetricGraph) -> tuple[bool, Fraction, float]:
    """Check sys(normalized g) <= 4 log(b + 1)  (natural log).

    This is the Bollobas-Szemeredi-Thomason bound, a theorem; a failure on a
    valid graph indicates a bug.  Returns (holds, exact lhs, float rhs).
    """
    b = g.betti()
    if b < 2:
        raise GraphError("bound check requires b >= 2")
    normalized, _scale = g.normalize()
    lhs = systole(normalized).length
    rhs = 4.0 * math.log(b + 1)
    return float(lhs) <= rhs + 1e-9, lhs, rhs
