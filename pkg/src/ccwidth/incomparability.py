"""Greedy layered clique covers on incomparability graphs.

Given a transitive orientation of the complement of g, layering vertices by
longest-path depth yields an ordered clique cover C of g whose width W
satisfies s(g) - 1 >= W >= ceil(s(g)/2) - 1, where s(g) is the largest
induced-star leaf count.  Walking an arc chain back from a width-realizing
edge extracts a star certificate with exactly W + 1 leaves, which is what
makes the greedy cover a two-sided estimate of the clique cover width.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .covers import OrderedCliqueCover, cover_width
from .errors import (
    CertificateExtractionError,
    CyclicOrientationError,
    NotIncomparabilityError,
    NotTransitiveError,
)
from .graphs import Graph, build_graph, complement
from .limits import ORIENTATION_LIMITS, SearchLimits
from .oracles import (
    Orientation,
    StarCertificate,
    find_transitive_orientation,
    validate_star,
    verify_transitive,
)


@dataclass(frozen=True)
class LayeredCover:
    cover: OrderedCliqueCover
    levels: tuple[int, ...]  # levels[v] = layer index of v


@dataclass(frozen=True)
class ApproxResult:
    lower: int
    upper: int
    witness_cover: OrderedCliqueCover
    witness_star: StarCertificate


def greedy_layered_cover(orientation: Orientation, *, check: bool = True) -> LayeredCover:
    """Layer vertices of the oriented complement by longest path ending at
    each vertex (sources are layer 0); each layer is an antichain, hence a
    clique in the target graph.  Linear in |V| + |arcs| when check=False.
    """
    if check and not verify_transitive(orientation):
        raise NotTransitiveError("orientation is not transitive")
    n = orientation.n
    out: list[list[int]] = [[] for _ in range(n)]
    indeg = [0] * n
    for u, v in orientation.arcs:
        out[u].append(v)
        indeg[v] += 1
    levels = [0] * n
    queue = [v for v in range(n) if indeg[v] == 0]
    processed = 0
    while queue:
        nxt = []
        for u in queue:
            processed += 1
            lu = levels[u]
            for v in out[u]:
                if levels[v] < lu + 1:
                    levels[v] = lu + 1
                indeg[v] -= 1
                if indeg[v] == 0:
                    nxt.append(v)
        queue = nxt
    if processed != n:
        raise CyclicOrientationError("orientation contains a directed cycle")
    depth = max(levels, default=-1) + 1
    layers: list[list[int]] = [[] for _ in range(depth)]
    for v in range(n):
        layers[levels[v]].append(v)
    cover = OrderedCliqueCover(tuple(tuple(layer) for layer in layers))
    return LayeredCover(cover, tuple(levels))


def extract_star_certificate(
    g: Graph, orientation: Orientation, lc: LayeredCover
) -> StarCertificate:
    """Star certificate with exactly W + 1 leaves from a width-realizing edge.

    Picks the lexicographically smallest (i, j, a, b) with a in layer i, b in
    layer j, ab an edge and j - i = W, then walks in-neighbors back from b
    choosing the smallest vertex in each intermediate layer.
    """
    levels = lc.levels
    width = cover_width(g, lc.cover, checked=False)
    if width == 0:
        for u in range(g.n):
            for v in g.neighbors(u):
                return StarCertificate(u, (v,))
        return StarCertificate(0 if g.n else -1, (), degenerate=True)

    chosen = None
    for u, v in g.edges():
        if abs(levels[u] - levels[v]) != width:
            continue
        a, b = (u, v) if levels[u] < levels[v] else (v, u)
        key = (levels[a], levels[b], a, b)
        if chosen is None or key < chosen:
            chosen = key
    if chosen is None:
        raise CertificateExtractionError("no edge realizes the cover width")
    i, j, a, b = chosen

    inn: dict[int, list[int]] = {}
    for u, v in orientation.arcs:
        inn.setdefault(v, []).append(u)

    chain = [b]
    current = b
    for t in range(j - 1, i - 1, -1):
        candidates = sorted(w for w in inn.get(current, ()) if levels[w] == t)
        if not candidates:
            raise CertificateExtractionError(
                f"no layer-{t} in-neighbor of vertex {current}; orientation does not "
                "match the graph's complement"
            )
        current = candidates[0]
        chain.append(current)

    cert = StarCertificate(a, tuple(sorted(chain)))
    if not validate_star(g, cert):
        raise CertificateExtractionError("extracted certificate fails the star invariants")
    return cert


def approximate_ccw(
    g: Graph,
    orientation: Orientation | None = None,
    limits: SearchLimits = ORIENTATION_LIMITS,
    *,
    check: bool = True,
) -> ApproxResult:
    """Two-sided clique cover width estimate on an incomparability graph.

    upper is the greedy cover width W; lower is ceil((W+1)/2) - 1, from the
    extracted star.  Guarantees lower <= CCW(g) <= upper and
    upper <= 2 * CCW(g) + 1.
    """
    if orientation is None:
        orientation = find_transitive_orientation(complement(g), limits)
        if orientation is None:
            raise NotIncomparabilityError("complement admits no transitive orientation")
    lc = greedy_layered_cover(orientation, check=check)
    upper = cover_width(g, lc.cover, checked=check)
    cert = extract_star_certificate(g, orientation, lc)
    leaves = cert.leaf_count
    lower = max(0, -(-leaves // 2) - 1)
    return ApproxResult(lower, upper, lc.cover, cert)


# ---------------------------------------------------------------------------
# instance generation

def random_transitive_dag(n: int, density: float, seed: int) -> Orientation:
    """Transitive closure of a random DAG: random linear order, each forward
    arc kept independently with the given probability, then closed."""
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    direct: list[int] = [0] * n  # bitmask of direct successors
    for p in range(n):
        u = order[p]
        for q in range(p + 1, n):
            if rng.random() < density:
                direct[u] |= 1 << order[q]
    reach = [0] * n
    for p in range(n - 1, -1, -1):
        u = order[p]
        r = direct[u]
        m = direct[u]
        while m:
            low = m & -m
            r |= reach[low.bit_length() - 1]
            m ^= low
        reach[u] = r
    arcs = []
    for u in range(n):
        m = reach[u]
        while m:
            low = m & -m
            arcs.append((u, low.bit_length() - 1))
            m ^= low
    return Orientation(n, frozenset(arcs))


def random_poset_graph(n: int, density: float, seed: int) -> tuple[Graph, Orientation]:
    """Random incomparability graph with its complement's transitive
    orientation; deterministic per seed."""
    ghat = random_transitive_dag(n, density, seed)
    comparability = build_graph(n, sorted(ghat.underlying_edges()))
    return complement(comparability), ghat
