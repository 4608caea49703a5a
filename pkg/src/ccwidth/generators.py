"""Deterministic instance generators used by the CLI and the test suites."""

from __future__ import annotations

import random

from .graphs import Graph, build_graph
from .incomparability import random_poset_graph, random_transitive_dag  # re-export

__all__ = [
    "complete_graph",
    "cycle_graph",
    "path_graph",
    "grid_graph",
    "star_graph",
    "random_graph",
    "random_connected_graph",
    "random_cobipartite",
    "random_unit_width_graph",
    "remark_three_cliques_graph",
    "random_poset_graph",
    "random_transitive_dag",
]


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(v, v + 1) for v in range(n - 1)])


def grid_graph(rows: int, cols: int) -> Graph:
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return build_graph(rows * cols, edges)


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    return build_graph(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def random_graph(n: int, density: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density
    ]
    return build_graph(n, edges)


def random_connected_graph(n: int, density: float, seed: int) -> Graph:
    """Random graph plus a random spanning tree to force connectivity."""
    rng = random.Random(seed)
    edges = {
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density
    }
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u = order[rng.randrange(i)]
        v = order[i]
        edges.add((min(u, v), max(u, v)))
    return build_graph(n, sorted(edges))


def random_cobipartite(n: int, cross_density: float, seed: int) -> Graph:
    """Two cliques of sizes floor(n/2) and ceil(n/2) plus random cross edges."""
    rng = random.Random(seed)
    half = n // 2
    edges = [(u, v) for u in range(half) for v in range(u + 1, half)]
    edges += [(u, v) for u in range(half, n) for v in range(u + 1, n)]
    for u in range(half):
        for v in range(half, n):
            if rng.random() < cross_density:
                edges.append((u, v))
    return build_graph(n, edges)


def random_unit_width_graph(n: int, seed: int) -> Graph:
    """Random graph with clique cover width at most 1: a random ordered
    partition into parts, full edges inside each part, random edges between
    adjacent parts only."""
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    parts: list[list[int]] = []
    i = 0
    while i < n:
        size = rng.randint(1, max(1, n // 3))
        parts.append(order[i:i + size])
        i += size
    edges = []
    for part in parts:
        edges += [(u, v) for a, u in enumerate(part) for v in part[a + 1:]]
    for a, b in zip(parts, parts[1:]):
        for u in a:
            for v in b:
                if rng.random() < 0.5:
                    edges.append((u, v))
    return build_graph(n, [(min(u, v), max(u, v)) for u, v in edges])


def remark_three_cliques_graph() -> Graph:
    """Three 4-cliques in a row with one marked vertex per clique and edges
    between consecutive marked vertices; largest induced star has 3 leaves
    while the clique cover width is 1."""
    edges = []
    for block in range(3):
        base = 4 * block
        edges += [(base + a, base + b) for a in range(4) for b in range(a + 1, 4)]
    edges += [(0, 4), (4, 8)]
    return build_graph(12, edges)
