"""Brute-force ground truth at desk scale.

`brute_systole` enumerates every simple cycle by backtracking.

`max_rank_under_budget` computes the exact rank of the homology classes of
ALL closed walks at a base within a length budget.  Raw walk enumeration
explodes (a short circle can be wound dozens of times inside a generous
budget), so the search runs as a label-setting scan over covering-space
states (vertex, net non-tree-edge traversal vector): two partial walks that
agree on both are interchangeable for every extension, and a class is
realizable within the budget iff its state at the base is reached within the
budget.  The scan is exhaustive up to the budget, so the rank is exact; it is
still guarded by a hard expansion cap (default 10^7 state pops, overridable
via the SGT_ORACLE_CAP environment variable) and refuses rather than
truncates.
"""
from __future__ import annotations

import math
import os
from fractions import Fraction
from heapq import heappush, heappop
from typing import Optional, Sequence

from .graph import BasedLoop, GraphError, MetricGraph, Step, make_loop
from .homology import _IncrementalRank
from .loops import _min_spanning_tree_edges
from .metric import multi_source_int_distances

DEFAULT_EXPANSION_CAP = 10**7
DEFAULT_BRUTE_EDGE_LIMIT = 14


class OracleCapExceeded(RuntimeError):
    """The exhaustive search hit its expansion cap; the result is unknown."""


def _expansion_cap(cap: Optional[int]) -> int:
    if cap is not None:
        return cap
    env = os.environ.get("SGT_ORACLE_CAP")
    return int(env) if env else DEFAULT_EXPANSION_CAP


def brute_systole(g: MetricGraph, max_edges: int = DEFAULT_BRUTE_EDGE_LIMIT) -> Fraction:
    """Minimum length over all simple cycles, by exhaustive backtracking."""
    if g.betti() < 1:
        raise GraphError("forest has no cycle")
    if len(g.edges) > max_edges:
        raise GraphError(
            f"brute-force systole refused above {max_edges} edges "
            f"(graph has {len(g.edges)})"
        )
    best: Optional[Fraction] = None
    for e in g.edges:
        if e.u == e.v and (best is None or e.length < best):
            best = e.length

    adj = g.adjacency

    def search(start: int, at: int, visited: set[int], first_eid: int, nsteps: int, acc: Fraction) -> None:
        nonlocal best
        for v, eid, _fwd in adj[at]:
            if v == at:
                continue  # self-loops handled above
            total = acc + g.edges[eid].length
            if best is not None and total >= best:
                # can only grow; still fine to skip since we want the minimum
                if total > best:
                    continue
            if v == start:
                if nsteps >= 2 or eid != first_eid:
                    if best is None or total < best:
                        best = total
            elif v > start and v not in visited:
                visited.add(v)
                search(start, v, visited, first_eid, nsteps + 1, total)
                visited.remove(v)

    for s in range(g.num_vertices):
        for v, eid, _fwd in adj[s]:
            if v == s or v < s:
                continue
            search(s, v, {v}, eid, 1, g.edges[eid].length)
    assert best is not None
    return best


def _nontree_index(g: MetricGraph) -> dict[int, int]:
    tree = _min_spanning_tree_edges(g)
    non_tree = [e.id for e in g.edges if e.id not in tree]
    return {eid: i for i, eid in enumerate(non_tree)}


def max_rank_under_budget(
    g: MetricGraph,
    base: int,
    budget: Fraction,
    cap: Optional[int] = None,
) -> tuple[int, list[BasedLoop]]:
    """Exact rank of the classes of all closed walks at `base` of length <= budget.

    Returns (rank, witness loops); witness i was the first walk found whose
    class increased the running rank from i-1 to i.  Monotone in the budget
    and never exceeds b(g).
    """
    budget = Fraction(budget)
    if budget <= 0:
        raise GraphError("budget must be positive")
    if not g.is_connected:
        raise GraphError("graph must be connected")
    cap = _expansion_cap(cap)
    den, weights = g.int_weights
    budget_int = math.floor(budget * den)
    b = g.betti()
    nontree = _nontree_index(g)
    back = multi_source_int_distances(g, [base])
    nv = g.num_vertices

    # States (vertex, winding vector over non-tree edges) are packed into a
    # single integer: per-coordinate bit fields wide enough that no traversal
    # can carry between fields, with the vertex id in the low digits.
    max_wind = budget_int // min(weights) if weights else 0
    bits = (2 * max_wind + 2).bit_length()
    mask = (1 << bits) - 1
    offset = max_wind + 1
    zero_key = sum(offset << (i * bits) for i in range(b))

    def decode(key: int) -> tuple[int, ...]:
        return tuple(((key >> (i * bits)) & mask) - offset for i in range(b))

    # Per-vertex moves: (target vertex, step, weight, winding-key increment).
    moves: list[list[tuple[int, Step, int, int]]] = [[] for _ in range(nv)]
    for at in range(nv):
        for v, eid, fwd in g.adjacency[at]:
            idx = nontree.get(eid)
            inc = 0 if idx is None else (1 if fwd else -1) << (idx * bits)
            moves[at].append((v, (eid, fwd), weights[eid], inc))

    start = zero_key * nv + base
    dist: dict[int, int] = {start: 0}
    parent: dict[int, tuple[int, Step]] = {}
    heap: list[tuple[int, int]] = [(0, start)]
    tracker = _IncrementalRank()
    witnesses: list[BasedLoop] = []
    pops = 0
    while heap:
        d, state = heappop(heap)
        if dist[state] != d:
            continue
        pops += 1
        if pops > cap:
            raise OracleCapExceeded(
                f"expansion cap {cap} exceeded; set SGT_ORACLE_CAP to raise it"
            )
        at = state % nv
        key = state // nv
        if at == base and key != zero_key and tracker.try_add(decode(key)):
            witnesses.append(_reconstruct(g, base, parent, state))
            if tracker.rank == b:
                break
        for v, step, w, inc in moves[at]:
            nd = d + w
            ret = back[v]
            if ret is None or nd + ret > budget_int:
                continue
            nstate = (key + inc) * nv + v
            known = dist.get(nstate)
            if known is None or nd < known:
                dist[nstate] = nd
                parent[nstate] = (state, step)
                heappush(heap, (nd, nstate))
    return tracker.rank, witnesses


def _reconstruct(
    g: MetricGraph,
    base: int,
    parent: dict,
    state: tuple[int, tuple[int, ...]],
) -> BasedLoop:
    steps: list[Step] = []
    while state in parent:
        state, step = parent[state]
        steps.append(step)
    steps.reverse()
    return make_loop(g, base, steps)


def best_base_rank(
    g: MetricGraph, budget: Fraction, cap: Optional[int] = None
) -> tuple[int, int]:
    """Maximum of max_rank_under_budget over all vertices.

    Base points interior to an edge never beat vertex base points: any loop
    there runs to a vertex and back, and conjugation preserves homology.
    Ties go to the smallest vertex id.
    """
    best_rank = -1
    best_base = 0
    for v in range(g.num_vertices):
        r, _w = max_rank_under_budget(g, v, budget, cap=cap)
        if r > best_rank:
            best_rank, best_base = r, v
    return best_rank, best_base
