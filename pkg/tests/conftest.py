"""Shared graph builders for the test suite."""

from __future__ import annotations

import random

import pytest

from symcover.graphs import Graph, generate, is_connected


def circulant(n: int, steps: tuple[int, ...]) -> Graph:
    edges = set()
    for v in range(n):
        for s in steps:
            u = (v + s) % n
            edges.add((min(v, u), max(v, u)))
    return Graph(n, sorted(edges))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def prism() -> Graph:
    return Graph(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    )


def cube() -> Graph:
    edges = []
    for v in range(8):
        for bit in range(3):
            u = v ^ (1 << bit)
            if v < u:
                edges.append((v, u))
    return Graph(8, edges)


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    """Random connected graph: a random spanning tree plus random extras."""
    while True:
        edges = set()
        order = list(range(n))
        rng.shuffle(order)
        for i in range(1, n):
            u = order[rng.randrange(i)]
            v = order[i]
            edges.add((min(u, v), max(u, v)))
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < 0.35:
                    edges.add((u, v))
        g = Graph(n, sorted(edges))
        if is_connected(g):
            return g


@pytest.fixture(scope="session")
def k5() -> Graph:
    return generate("complete:5")


@pytest.fixture(scope="session")
def triangle() -> Graph:
    return generate("complete:3")
