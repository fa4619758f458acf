"""Metric graph data model: multigraphs with exact positive rational edge lengths.

Self-loops and parallel edges are allowed.  All graphs are immutable after
construction; derived structure (adjacency, component labels, integer-scaled
weights) is computed lazily and cached.
"""
from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence, Union

LengthLike = Union[int, str, Fraction]


class GraphError(ValueError):
    """Malformed graph data or an operation called outside its contract."""


def parse_length(value: LengthLike) -> Fraction:
    """Parse an exact length from an int, Fraction, decimal or fraction string.

    Accepts "1.5" and "3/2" style strings.  Floats are rejected: they would
    smuggle binary rounding into what must stay exact.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise GraphError(f"length must be exact (int, str or Fraction), got {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise GraphError(f"cannot parse length {value!r}") from exc
    raise GraphError(f"cannot parse length {value!r}")


def format_length(q: Fraction) -> str:
    """Canonical string form: "n" for integers, "n/d" otherwise."""
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Edge:
    id: int
    u: int
    v: int
    length: Fraction


# A directed edge traversal: (edge id, True if traversed u -> v).
Step = tuple[int, bool]


def step_key(step: Step) -> tuple[int, int]:
    """Total order on steps: by edge id, forward before backward."""
    eid, fwd = step
    return (eid, 0 if fwd else 1)


def steps_key(steps: Iterable[Step]) -> tuple[tuple[int, int], ...]:
    return tuple(step_key(s) for s in steps)


@dataclass(frozen=True)
class MetricGraph:
    """A finite multigraph with exact positive edge lengths.

    Vertices are ids 0..num_vertices-1; edge ids are 0..len(edges)-1 with no
    gaps.  Disconnected graphs are representable (and `betti` handles them),
    but metric and theorem-level operations require connectivity.
    """

    num_vertices: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.num_vertices < 1:
            raise GraphError("graph needs at least one vertex")
        for i, e in enumerate(self.edges):
            if e.id != i:
                raise GraphError(f"edge ids must be 0..e-1 without gaps, got {e.id} at position {i}")
            if not (0 <= e.u < self.num_vertices and 0 <= e.v < self.num_vertices):
                raise GraphError(f"edge {e.id} has dangling endpoint ({e.u}, {e.v})")
            if not isinstance(e.length, Fraction):
                raise GraphError(f"edge {e.id} length must be a Fraction")
            if e.length <= 0:
                raise GraphError(f"edge {e.id} has non-positive length {e.length}")

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int, bool], ...], ...]:
        """Per-vertex incidence: (other endpoint, edge id, forward flag).

        A self-loop appears twice at its vertex (once per direction), so
        degrees match CW-complex semantics.
        """
        adj: list[list[tuple[int, int, bool]]] = [[] for _ in range(self.num_vertices)]
        for e in self.edges:
            adj[e.u].append((e.v, e.id, True))
            adj[e.v].append((e.u, e.id, False))
        return tuple(tuple(a) for a in adj)

    @cached_property
    def component_labels(self) -> tuple[int, ...]:
        labels = [-1] * self.num_vertices
        comp = 0
        for start in range(self.num_vertices):
            if labels[start] >= 0:
                continue
            stack = [start]
            labels[start] = comp
            while stack:
                u = stack.pop()
                for v, _eid, _fwd in self.adjacency[u]:
                    if labels[v] < 0:
                        labels[v] = comp
                        stack.append(v)
            comp += 1
        return tuple(labels)

    @property
    def num_components(self) -> int:
        return max(self.component_labels) + 1

    @property
    def is_connected(self) -> bool:
        return self.num_components == 1

    def betti(self) -> int:
        """First Betti number b = e - v + (number of components)."""
        return len(self.edges) - self.num_vertices + self.num_components

    def total_length(self) -> Fraction:
        return sum((e.length for e in self.edges), Fraction(0))

    def scaled(self, factor: Fraction) -> "MetricGraph":
        factor = Fraction(factor)
        if factor <= 0:
            raise GraphError("scale factor must be positive")
        return MetricGraph(
            self.num_vertices,
            tuple(Edge(e.id, e.u, e.v, e.length * factor) for e in self.edges),
        )

    def normalize(self) -> tuple["MetricGraph", Fraction]:
        """Rescale so total length equals the first Betti number b.

        Returns (scaled graph, scale factor).  Rejects forests: with b = 0
        there is nothing to normalize against.
        """
        b = self.betti()
        if b < 1:
            raise GraphError("cannot normalize a forest (b = 0)")
        scale = Fraction(b) / self.total_length()
        return self.scaled(scale), scale

    @cached_property
    def int_weights(self) -> tuple[int, tuple[int, ...]]:
        """(common denominator D, edge lengths scaled to integers by D).

        Integer weights keep shortest-path arithmetic exact and fast; divide
        by D to recover Fractions.
        """
        den = 1
        for e in self.edges:
            den = den * e.length.denominator // math.gcd(den, e.length.denominator)
        return den, tuple(int(e.length * den) for e in self.edges)

    # -- walks ---------------------------------------------------------------

    def step_target(self, at: int, step: Step) -> int:
        """Vertex reached by taking `step` from vertex `at` (validates incidence)."""
        eid, fwd = step
        if not 0 <= eid < len(self.edges):
            raise GraphError(f"unknown edge id {eid}")
        e = self.edges[eid]
        src, dst = (e.u, e.v) if fwd else (e.v, e.u)
        if src != at:
            raise GraphError(f"step {step} does not start at vertex {at}")
        return dst

    def walk_vertices(self, start: int, steps: Sequence[Step]) -> list[int]:
        """Vertex sequence visited by a walk; raises if not incident-consistent."""
        seq = [start]
        at = start
        for step in steps:
            at = self.step_target(at, step)
            seq.append(at)
        return seq

    def walk_length(self, steps: Sequence[Step]) -> Fraction:
        return sum((self.edges[eid].length for eid, _fwd in steps), Fraction(0))


@dataclass(frozen=True)
class BasedLoop:
    """A closed walk from a base vertex, as a sequence of directed traversals."""

    base: int
    steps: tuple[Step, ...]
    length: Fraction

    def validate(self, g: MetricGraph) -> None:
        seq = g.walk_vertices(self.base, self.steps)
        if seq[-1] != self.base:
            raise GraphError("loop is not closed")
        if g.walk_length(self.steps) != self.length:
            raise GraphError("stored loop length disagrees with edge data")

    def vertices(self, g: MetricGraph) -> list[int]:
        return g.walk_vertices(self.base, self.steps)

    def edge_ids(self) -> tuple[int, ...]:
        return tuple(eid for eid, _fwd in self.steps)

    def reversed(self, g: MetricGraph) -> "BasedLoop":
        rev = tuple((eid, not fwd) for eid, fwd in reversed(self.steps))
        return BasedLoop(self.base, rev, self.length)

    def rotated_to(self, g: MetricGraph, new_base: int) -> "BasedLoop":
        """Cyclic rotation so the walk starts at `new_base` (must lie on it)."""
        seq = self.vertices(g)
        for i, v in enumerate(seq[:-1]):
            if v == new_base:
                steps = self.steps[i:] + self.steps[:i]
                return BasedLoop(new_base, steps, self.length)
        raise GraphError(f"vertex {new_base} does not lie on the loop")


def make_loop(g: MetricGraph, base: int, steps: Sequence[Step]) -> BasedLoop:
    loop = BasedLoop(base, tuple(steps), g.walk_length(steps))
    loop.validate(g)
    return loop


# -- serialization -----------------------------------------------------------

DOCUMENT_FORMAT = "sgt-graph/1"


def to_document(g: MetricGraph) -> str:
    """Canonical structured text form: edges sorted by id, fraction lengths."""
    doc = {
        "format": DOCUMENT_FORMAT,
        "vertices": g.num_vertices,
        "edges": [
            {"id": e.id, "u": e.u, "v": e.v, "length": format_length(e.length)}
            for e in sorted(g.edges, key=lambda e: e.id)
        ],
    }
    return json.dumps(doc, sort_keys=True, indent=1) + "\n"


def from_document(text: str) -> MetricGraph:
    """Parse a graph document.

    Two accepted forms: the canonical structured document, and a plain
    edge list with one `u v length` triple per whitespace-separated line
    (edge ids assigned in line order, vertex count inferred).
    """
    stripped = text.lstrip()
    if not stripped:
        raise GraphError("empty graph document")
    if stripped.startswith("{"):
        return _from_structured(stripped)
    return _from_edge_lines(text)


def _from_structured(text: str) -> MetricGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"malformed graph document: {exc}") from exc
    if not isinstance(doc, dict) or "vertices" not in doc or "edges" not in doc:
        raise GraphError("graph document needs 'vertices' and 'edges' fields")
    try:
        nv = int(doc["vertices"])
    except (TypeError, ValueError) as exc:
        raise GraphError("'vertices' must be an integer") from exc
    raw_edges = doc["edges"]
    if not isinstance(raw_edges, list):
        raise GraphError("'edges' must be a list")
    seen_ids: set[int] = set()
    edges = []
    for item in raw_edges:
        try:
            eid, u, v = int(item["id"]), int(item["u"]), int(item["v"])
            length = parse_length(item["length"])
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphError(f"malformed edge entry {item!r}") from exc
        if eid in seen_ids:
            raise GraphError(f"duplicate edge id {eid}")
        seen_ids.add(eid)
        edges.append(Edge(eid, u, v, length))
    edges.sort(key=lambda e: e.id)
    return MetricGraph(nv, tuple(edges))


def _from_edge_lines(text: str) -> MetricGraph:
    edges = []
    max_vertex = -1
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise GraphError(f"line {lineno}: expected 'u v length', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphError(f"line {lineno}: bad vertex id") from exc
        length = parse_length(parts[2])
        edges.append(Edge(len(edges), u, v, length))
        max_vertex = max(max_vertex, u, v)
    if not edges:
        raise GraphError("empty graph document")
    return MetricGraph(max_vertex + 1, tuple(edges))


def load(path) -> MetricGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return from_document(fh.read())


def save(g: MetricGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_document(g))


def content_hash(g: MetricGraph) -> str:
    """sha256 of the canonical document; ties certificates to their graph."""
    return hashlib.sha256(to_document(g).encode("utf-8")).hexdigest()
