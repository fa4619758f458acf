"""Exact shortest paths on metric graphs.

All distances are computed with the graph's integer-scaled weights and
reported as Fractions, so every comparison is exact.  Among equal-length
paths the one with the lexicographically smallest directed edge-id sequence
wins; this makes every downstream certificate reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from heapq import heappush, heappop
from typing import Iterable, Optional, Sequence

from .graph import BasedLoop, GraphError, MetricGraph, Step, steps_key


@dataclass(frozen=True)
class PathResult:
    source: int
    target: int
    length: Fraction
    steps: tuple[Step, ...]

    def reversed(self) -> "PathResult":
        rev = tuple((eid, not fwd) for eid, fwd in reversed(self.steps))
        return PathResult(self.target, self.source, self.length, rev)


# parent[v] = (previous vertex, step taken into v), or None at the source.
_Parent = Optional[tuple[int, Step]]


def _path_steps(parents: list[_Parent], v: int) -> tuple[Step, ...]:
    steps: list[Step] = []
    while parents[v] is not None:
        u, step = parents[v]
        steps.append(step)
        v = u
    steps.reverse()
    return tuple(steps)


def _dijkstra(
    g: MetricGraph,
    source: int,
    target: Optional[int] = None,
    excluded: frozenset[int] = frozenset(),
) -> tuple[list[Optional[int]], list[_Parent]]:
    """Label-setting search with integer weights and lazy lexicographic ties.

    Returns (dist, parents); dist is in integer-scaled units (None means
    unreachable).  Tie comparisons reconstruct the two candidate paths from
    parent chains; predecessors are always settled first (lengths are
    strictly positive), so the chains are final when compared.
    """
    _den, weights = g.int_weights
    n = g.num_vertices
    dist: list[Optional[int]] = [None] * n
    parents: list[_Parent] = [None] * n
    done = [False] * n
    dist[source] = 0
    heap: list[tuple[int, int]] = [(0, source)]
    adj = g.adjacency
    while heap:
        d, u = heappop(heap)
        if done[u]:
            continue
        done[u] = True
        if u == target:
            break
        for v, eid, fwd in adj[u]:
            if eid in excluded or v == u:
                continue
            nd = d + weights[eid]
            dv = dist[v]
            if dv is None or nd < dv:
                dist[v] = nd
                parents[v] = (u, (eid, fwd))
                heappush(heap, (nd, v))
            elif nd == dv and not done[v]:
                cand = steps_key(_path_steps(parents, u)) + ((eid, 0 if fwd else 1),)
                if cand < steps_key(_path_steps(parents, v)):
                    parents[v] = (u, (eid, fwd))
    return dist, parents


def _as_fraction(g: MetricGraph, d: int) -> Fraction:
    den, _w = g.int_weights
    return Fraction(d, den)


def shortest_path(
    g: MetricGraph,
    u: int,
    v: int,
    excluded: frozenset[int] = frozenset(),
) -> PathResult:
    """Exact minimal-length walk from u to v; raises if disconnected."""
    dist, parents = _dijkstra(g, u, target=v, excluded=excluded)
    if dist[v] is None:
        raise GraphError(f"vertices {u} and {v} are not connected")
    return PathResult(u, v, _as_fraction(g, dist[v]), _path_steps(parents, v))


def vertex_distances(
    g: MetricGraph, source: int, excluded: frozenset[int] = frozenset()
) -> list[Optional[Fraction]]:
    dist, _parents = _dijkstra(g, source, excluded=excluded)
    return [None if d is None else _as_fraction(g, d) for d in dist]


def multi_source_int_distances(
    g: MetricGraph, sources: Iterable[int]
) -> list[Optional[int]]:
    """Integer-scaled distance from the nearest source to every vertex."""
    _den, weights = g.int_weights
    dist: list[Optional[int]] = [None] * g.num_vertices
    heap: list[tuple[int, int]] = []
    for s in set(sources):
        dist[s] = 0
        heappush(heap, (0, s))
    adj = g.adjacency
    while heap:
        d, u = heappop(heap)
        if dist[u] != d:
            continue
        for v, eid, _fwd in adj[u]:
            nd = d + weights[eid]
            dv = dist[v]
            if dv is None or nd < dv:
                dist[v] = nd
                heappush(heap, (nd, v))
    return dist


def subgraph_vertices(g: MetricGraph, edge_ids: Iterable[int]) -> list[int]:
    verts: set[int] = set()
    for eid in edge_ids:
        e = g.edges[eid]
        verts.add(e.u)
        verts.add(e.v)
    return sorted(verts)


def dist_to_subgraph(
    g: MetricGraph, u: int, edge_ids: Iterable[int]
) -> tuple[Fraction, PathResult, int]:
    """Distance from a vertex to a union of whole edges.

    Because the subgraph consists of whole edges, the minimum is attained at
    one of its vertices; among ties the smallest attachment vertex id wins.
    Returns (distance, realizing path, attachment vertex).
    """
    verts = subgraph_vertices(g, edge_ids)
    if not verts:
        raise GraphError("empty subgraph")
    if not g.is_connected:
        raise GraphError("graph must be connected")
    if u in verts:
        return Fraction(0), PathResult(u, u, Fraction(0), ()), u
    dist, parents = _dijkstra(g, u)
    best = min(verts, key=lambda x: (dist[x], x))
    d = dist[best]
    assert d is not None
    return (
        _as_fraction(g, d),
        PathResult(u, best, _as_fraction(g, d), _path_steps(parents, best)),
        best,
    )


def dist_subgraphs(
    g: MetricGraph,
    edge_ids_a: Iterable[int],
    edge_ids_b: Iterable[int],
) -> tuple[Fraction, PathResult, int, int]:
    """Minimal distance between two whole-edge subgraphs.

    Minimizes d(x, y) over vertex pairs (x in A, y in B); ties go to the
    smallest (distance, x, y) triple.  Returns (distance, path, x, y);
    distance 0 with an empty path when the subgraphs share a vertex.
    """
    va = subgraph_vertices(g, edge_ids_a)
    vb = subgraph_vertices(g, edge_ids_b)
    if not va or not vb:
        raise GraphError("empty subgraph")
    shared = sorted(set(va) & set(vb))
    if shared:
        x = shared[0]
        return Fraction(0), PathResult(x, x, Fraction(0), ()), x, x
    best: Optional[tuple[int, int, int]] = None
    for x in va:
        dist, _parents = _dijkstra(g, x)
        for y in vb:
            dy = dist[y]
            if dy is None:
                continue
            key = (dy, x, y)
            if best is None or key < best:
                best = key
    if best is None:
        raise GraphError("subgraphs are not connected to each other")
    d, x, y = best
    return _as_fraction(g, d), shortest_path(g, x, y), x, y
