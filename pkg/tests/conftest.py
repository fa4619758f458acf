import sys
from pathlib import Path

# Make the sibling oracles helper importable regardless of invocation dir.
sys.path.insert(0, str(Path(__file__).parent))

from fractions import Fraction

import pytest

from sgt.graph import Edge, MetricGraph
from sgt.generators import gen_bouquet


@pytest.fixture
def figure_eight() -> MetricGraph:
    return gen_bouquet(2, [Fraction(1), Fraction(1)])


@pytest.fixture
def k4_unit() -> MetricGraph:
    pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    return MetricGraph(
        4, tuple(Edge(i, u, v, Fraction(1)) for i, (u, v) in enumerate(pairs))
    )


@pytest.fixture
def theta_123() -> MetricGraph:
    return MetricGraph(
        2,
        (
            Edge(0, 0, 1, Fraction(1)),
            Edge(1, 0, 1, Fraction(2)),
            Edge(2, 0, 1, Fraction(3)),
        ),
    )
