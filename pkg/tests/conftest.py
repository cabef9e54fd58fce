import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from cliquecore import WeightedGraph, complete, cycle, paley3x3, path


@pytest.fixture
def paley():
    return paley3x3()


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def k3():
    return complete(3)


@pytest.fixture
def path3():
    return path(3)


def random_graph(n: int, seed: int, edge_prob: float = 0.5, max_weight: int = 10) -> WeightedGraph:
    """Arbitrary (not necessarily perfect) small graph for property tests."""
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < edge_prob
    ]
    weights = [Fraction(rng.randint(0, max_weight)) for _ in range(n)]
    return WeightedGraph.from_edges(n, edges, weights)


@st.composite
def graphs(draw, max_n: int = 8, max_weight: int = 6):
    """Hypothesis strategy for small weighted graphs of any shape."""
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [e for e, keep in zip(pairs, mask) if keep]
    weights = draw(
        st.lists(
            st.integers(min_value=0, max_value=max_weight),
            min_size=n,
            max_size=n,
        )
    )
    return WeightedGraph.from_edges(n, edges, [Fraction(w) for w in weights])
