"""Shared fixtures and tiny graph builders."""

from __future__ import annotations

from fractions import Fraction

import pytest

from bookembed.graph import WeightedGraph, parse_graph
from bookembed.oracle import random_outerplanar


def graph_from(edges, vertices=()):
    """Build a graph from (u, v, w) label triples."""
    labels = []
    seen = set()
    for lab in vertices:
        if lab not in seen:
            seen.add(lab)
            labels.append(lab)
    for u, v, _ in edges:
        for lab in (u, v):
            if lab not in seen:
                seen.add(lab)
                labels.append(lab)
    index = {lab: i for i, lab in enumerate(labels)}
    return WeightedGraph(
        labels, [(index[u], index[v], Fraction(w)) for u, v, w in edges]
    )


@pytest.fixture
def triangle_5_6_11():
    return parse_graph('{"edges":[["a","b","5"],["b","c","6"],["a","c","11"]]}')


@pytest.fixture
def triangle_equal():
    return graph_from([("a", "b", 1), ("b", "c", 1), ("a", "c", 1)])


@pytest.fixture
def k2():
    return graph_from([("a", "b", 5)])


def small_corpus(count, *, max_n=8, weights=(1, 20), seed0=0):
    """Seeded connected outerplanar instances mixing sizes and biconnectivity."""
    out = []
    for i in range(count):
        n = 1 + (i * 5) % max_n
        out.append(
            random_outerplanar(
                n, weights, seed=seed0 + i, biconnected=(i % 3 == 0)
            )
        )
    return out
