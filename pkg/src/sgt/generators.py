"""Graph families: the extremal star-of-bouquets construction, plain bouquets,
and seeded random connected multigraphs.

Randomness comes from Python's `random.Random` (Mersenne Twister), identified
in emitted metadata as "python-random-mt19937" so runs are reproducible.
"""
from __future__ import annotations

import heapq
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .graph import Edge, GraphError, MetricGraph, parse_length

PRNG_ID = "python-random-mt19937"
_LENGTH_DENOMINATOR = 10**6


@dataclass(frozen=True)
class StarParams:
    """Parameters of the star-of-bouquets family.

    m = pq + r with 0 <= r < p: q bouquets of p circles (circumference l
    each, spoke length L) hang off a hub, plus, when r > 0, a remainder
    bouquet of r circles whose spoke and circles together have length r.
    """

    m: int
    p: int
    L: Fraction
    l: Fraction

    def __post_init__(self) -> None:
        if self.m < 1:
            raise GraphError("m must be at least 1")
        if not 1 <= self.p <= self.m:
            raise GraphError("need 1 <= p <= m")
        for name in ("L", "l"):
            value = getattr(self, name)
            if not isinstance(value, Fraction) or value <= 0:
                raise GraphError(f"{name} must be a positive Fraction")

    @property
    def q(self) -> int:
        return self.m // self.p

    @property
    def r(self) -> int:
        return self.m % self.p

    def total_length(self) -> Fraction:
        return self.q * (self.L + self.l) + self.r


def gen_star(params: StarParams) -> MetricGraph:
    """Build the star of bouquets for `params`.

    Vertex 0 is the hub; bouquet vertices follow.  Each of the q main
    bouquets splits its circumference l equally over p circles.  The
    remainder bouquet (r > 0) satisfies spoke + circles = r, split as spoke
    r/2 and circles of 1/2 each.  Betti number is m; total length is
    q(L + l) + r.
    """
    q, r = params.q, params.r
    edges: list[Edge] = []
    nv = 1 + q + (1 if r > 0 else 0)
    circle = params.l / params.p
    for i in range(1, q + 1):
        edges.append(Edge(len(edges), 0, i, params.L))
        for _j in range(params.p):
            edges.append(Edge(len(edges), i, i, circle))
    if r > 0:
        hub = q + 1
        edges.append(Edge(len(edges), 0, hub, Fraction(r, 2)))
        for _j in range(r):
            edges.append(Edge(len(edges), hub, hub, Fraction(1, 2)))
    return MetricGraph(nv, tuple(edges))


def star_optimal_params(b: int, lam: Fraction, n: int) -> tuple[int, Fraction, Fraction]:
    """(p, L, l) witnessing near-optimality of the loop-length bound.

    p = floor((lam/2)(log b + n)) + 1 and L = (lam/2)(log b + n), with
    l = p - L, so that p = L + l exactly.  L is transcendental, so it is
    rounded to a rational with denominator 10^6 (rounded down, which keeps
    l = p - L positive).
    """
    if b < 2 or n < 1:
        raise GraphError("need b >= 2 and n >= 1")
    lam = Fraction(lam)
    if lam <= 0:
        raise GraphError("lam must be positive")
    target = float(lam) / 2.0 * (math.log(b) + n)
    L = Fraction(math.floor(target * _LENGTH_DENOMINATOR), _LENGTH_DENOMINATOR)
    p = math.floor(target) + 1
    l = Fraction(p) - L
    return p, L, l


def gen_bouquet(b: int, circle_lengths: Sequence[Union[int, str, Fraction]]) -> MetricGraph:
    """Wedge of b circles at a single vertex."""
    if b < 1:
        raise GraphError("bouquet needs at least one circle")
    lengths = [parse_length(x) for x in circle_lengths]
    if len(lengths) != b:
        raise GraphError(f"expected {b} circle lengths, got {len(lengths)}")
    edges = tuple(Edge(i, 0, 0, lengths[i]) for i in range(b))
    return MetricGraph(1, edges)


LengthLaw = Union[str, tuple[str, float, float]]


def _draw_length(rng: random.Random, law: LengthLaw) -> Fraction:
    if law == "unit":
        return Fraction(1)
    if isinstance(law, tuple) and len(law) == 3 and law[0] == "uniform":
        _tag, lo, hi = law
        if not 0 < lo <= hi:
            raise GraphError("uniform law needs 0 < lo <= hi")
        x = rng.uniform(lo, hi)
        q = Fraction(round(x * _LENGTH_DENOMINATOR), _LENGTH_DENOMINATOR)
        return max(q, Fraction(1, _LENGTH_DENOMINATOR))
    raise GraphError(f"unknown length law {law!r}")


def _random_tree_edges(rng: random.Random, v: int) -> list[tuple[int, int]]:
    """Uniform random labeled tree on v vertices via a Pruefer sequence."""
    if v == 1:
        return []
    if v == 2:
        return [(0, 1)]
    seq = [rng.randrange(v) for _ in range(v - 2)]
    degree = [1] * v
    for x in seq:
        degree[x] += 1
    edges = []
    leaves = [i for i in range(v) if degree[i] == 1]
    heapq.heapify(leaves)
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, w = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, w))
    return edges


def gen_random(
    v: int,
    b: int,
    seed: int,
    length_law: LengthLaw = "unit",
) -> MetricGraph:
    """Random connected multigraph: uniform spanning tree plus b extra edges.

    Extra edge endpoints are uniform (self-loops and parallel edges allowed),
    so the result is connected with first Betti number exactly b.  Lengths
    are drawn per edge in id order, rounded to denominator 10^6.  The output
    is a deterministic function of (v, b, seed, length_law).
    """
    if v < 1:
        raise GraphError("need v >= 1")
    if b < 0:
        raise GraphError("need b >= 0")
    rng = random.Random(seed)
    structure = _random_tree_edges(rng, v)
    for _ in range(b):
        structure.append((rng.randrange(v), rng.randrange(v)))
    edges = tuple(
        Edge(i, u, w, _draw_length(rng, length_law))
        for i, (u, w) in enumerate(structure)
    )
    return MetricGraph(v, edges)
