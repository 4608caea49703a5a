"""Exact desk-scale oracles: clique cover width, largest induced star,
unit-incomparability testing, transitive-orientation recognition, and the
unit intersection dimension.

Everything here is deterministic: searches enumerate in a canonical order
and return the first optimum found, so witnesses are reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator

from .covers import OrderedCliqueCover, cover_width, make_cover
from .errors import (
    InvalidArgumentError,
    ParseError,
)
from .graphs import Graph, bits, complement, components, induced_subgraph, is_connected, mask_of
from .limits import (
    CCW_LIMITS,
    ORIENTATION_LIMITS,
    UDIM_LIMITS,
    Budget,
    SearchLimits,
)


@dataclass(frozen=True)
class StarCertificate:
    center: int
    leaves: tuple[int, ...]
    degenerate: bool = False

    @property
    def leaf_count(self) -> int:
        return max(len(self.leaves), 1)


def validate_star(g: Graph, cert: StarCertificate) -> bool:
    """Check the induced-star invariants: center adjacent to every leaf,
    leaves pairwise non-adjacent, center not a leaf."""
    if cert.center in cert.leaves:
        return False
    lm = mask_of(cert.leaves)
    if g.adj[cert.center] & lm != lm:
        return False
    for u in cert.leaves:
        if g.adj[u] & lm:
            return False
    return True


@dataclass(frozen=True)
class Orientation:
    n: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        # canonical sorted-tuple form: set semantics for equality, and
        # cache-friendly sequential iteration for large arc sets
        object.__setattr__(self, "arcs", tuple(sorted(set(self.arcs))))

    def underlying_edges(self) -> set[tuple[int, int]]:
        return {(min(u, v), max(u, v)) for u, v in self.arcs}


def verify_transitive(o: Orientation) -> bool:
    """True iff the arc set is loop-free, antisymmetric, and closed under
    composition."""
    arcs = set(o.arcs)
    out: dict[int, list[int]] = {}
    for u, v in arcs:
        if u == v or (v, u) in arcs:
            return False
        out.setdefault(u, []).append(v)
    for u, vs in out.items():
        for v in vs:
            for w in out.get(v, ()):
                if (u, w) not in arcs:
                    return False
    return True


def orientation_to_json(o: Orientation) -> str:
    return json.dumps({"n": o.n, "arcs": [list(a) for a in sorted(o.arcs)]}, sort_keys=True)


def orientation_from_json(text: str) -> Orientation:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from exc
    if not isinstance(obj, dict) or "n" not in obj or "arcs" not in obj:
        raise ParseError("orientation JSON must be an object with 'n' and 'arcs'")
    return Orientation(obj["n"], frozenset((a[0], a[1]) for a in obj["arcs"]))


# ---------------------------------------------------------------------------
# largest induced star

def largest_induced_star(g: Graph) -> tuple[int, StarCertificate]:
    """Leaf count of a largest induced star, with a witness.

    Equals the maximum over vertices v of the size of a maximum independent
    set inside the open neighborhood of v.  Defined as 1 when n <= 2.
    """
    if g.n <= 2:
        for u in range(g.n):
            for v in g.neighbors(u):
                return 1, StarCertificate(u, (v,))
        return 1, StarCertificate(0 if g.n else -1, (), degenerate=True)
    best = 0
    cert = StarCertificate(0, (), degenerate=True)
    for v in range(g.n):
        if g.adj[v].bit_count() <= best:
            continue
        size, members = _max_independent_set(g.adj, g.adj[v])
        if size > best:
            best = size
            cert = StarCertificate(v, tuple(bits(members)))
    return best, cert


def _max_independent_set(adj: tuple[int, ...], mask: int) -> tuple[int, int]:
    """Maximum independent set within `mask`, by branch and bound.

    Pivot: highest degree within the mask (ties to the lowest index);
    include-branch first.  Returns (size, member mask).
    """
    best_size = 0
    best_set = 0

    def go(mask: int, chosen: int, size: int) -> None:
        nonlocal best_size, best_set
        if size + mask.bit_count() <= best_size:
            return
        if mask == 0:
            best_size, best_set = size, chosen
            return
        pivot = -1
        pivot_deg = -1
        free = 0  # vertices isolated within mask; always taken
        for v in bits(mask):
            d = (adj[v] & mask).bit_count()
            if d == 0:
                free |= 1 << v
            elif d > pivot_deg:
                pivot, pivot_deg = v, d
        if free:
            go(mask & ~free, chosen | free, size + free.bit_count())
            return
        v = pivot
        go(mask & ~(adj[v] | (1 << v)), chosen | (1 << v), size + 1)
        go(mask & ~(1 << v), chosen, size)

    go(mask, 0, 0)
    return best_size, best_set


# ---------------------------------------------------------------------------
# exact clique cover width

def _clique_extensions(adj, base: int, candidates: int) -> Iterator[int]:
    """All cliques of the form base ∪ S with S ⊆ candidates, in lexicographic
    order of the added vertex list (base itself first if nonempty)."""
    if base:
        yield base
    for v in bits(candidates):
        higher = candidates & ~((1 << (v + 1)) - 1)
        yield from _clique_extensions(adj, base | (1 << v), higher & adj[v])


def _cliques_containing(adj, remaining: int, required: int) -> Iterator[int]:
    """Nonempty cliques C with required ⊆ C ⊆ remaining."""
    cands = remaining & ~required
    for v in bits(required):
        if adj[v] & required != required & ~(1 << v):
            return  # required set is not a clique
        cands &= adj[v]
    yield from _clique_extensions(adj, required, cands)


def _cover_with_width_at_most(g: Graph, w: int, budget: Budget) -> tuple[int, ...] | None:
    """First ordered clique cover of width <= w in canonical order, as a
    tuple of part bitmasks, or None if none exists.

    Key pruning: once part i is placed, part i-w may not have neighbors among
    the still-uncovered vertices, so those neighbors are forced into part i.
    """
    if g.n == 0:
        return ()
    if w == 0:
        parts = []
        for comp in components(g):
            cm = mask_of(comp)
            for v in comp:
                if g.adj[v] & cm != cm & ~(1 << v):
                    return None
            parts.append(cm)
        return tuple(parts)
    adj = g.adj

    def rec(remaining: int, parts: tuple[int, ...]) -> tuple[int, ...] | None:
        if remaining == 0:
            return parts
        budget.tick()
        i = len(parts)
        required = 0
        if i >= w:
            expiring = parts[i - w]
            nb = 0
            for v in bits(expiring):
                nb |= adj[v]
            required = nb & remaining
        for part in _cliques_containing(adj, remaining, required):
            found = rec(remaining & ~part, parts + (part,))
            if found is not None:
                return found
        return None

    return rec(g.full_mask(), ())


def clique_cover_width_exact(
    g: Graph, limits: SearchLimits = CCW_LIMITS
) -> tuple[int, OrderedCliqueCover]:
    """Minimum width over all ordered clique covers, with an optimal witness.

    Disconnected graphs take the maximum over components; the witness is the
    concatenation of per-component witnesses (no cross edges, so the width is
    unaffected).
    """
    limits.check_n(g.n)
    budget = Budget(limits)
    width = 0
    all_parts: list[tuple[int, ...]] = []
    for comp in components(g):
        sub, back = induced_subgraph(g, comp)
        star_size, _ = largest_induced_star(sub)
        lower = max(0, -(-star_size // 2) - 1)
        comp_width = sub.n  # unreachable sentinel
        for w in range(lower, max(sub.n, 1)):
            parts = _cover_with_width_at_most(sub, w, budget)
            if parts is not None:
                comp_width = w
                all_parts.extend(tuple(sorted(back[v] for v in bits(p))) for p in parts)
                break
        width = max(width, comp_width)
    return width, OrderedCliqueCover(tuple(all_parts))


def is_unit_incomparability(g: Graph, limits: SearchLimits = CCW_LIMITS) -> bool:
    """True iff the clique cover width is at most 1 (cliques included by
    convention, so they count as dimension-1 factors)."""
    limits.check_n(g.n)
    budget = Budget(limits)
    for comp in components(g):
        sub, _ = induced_subgraph(g, comp)
        if _cover_with_width_at_most(sub, 1, budget) is None:
            return False
    return True


def enumerate_ordered_covers(g: Graph) -> Iterator[OrderedCliqueCover]:
    """All ordered clique covers of g, in canonical order.  Exponential; only
    meant for exhaustive desk-scale checks."""
    adj = g.adj

    def rec(remaining: int, parts: tuple[tuple[int, ...], ...]):
        if remaining == 0:
            yield OrderedCliqueCover(parts)
            return
        for part in _cliques_containing(adj, remaining, 0):
            yield from rec(remaining & ~part, parts + (tuple(bits(part)),))

    yield from rec(g.full_mask(), ())


# ---------------------------------------------------------------------------
# comparability recognition

def find_transitive_orientation(
    g: Graph, limits: SearchLimits = ORIENTATION_LIMITS
) -> Orientation | None:
    """A transitive orientation of g's edges, or None if g is not a
    comparability graph.

    Backtracking over edges in canonical order with forcing: adding arc
    (u,v) forces (u,w) for every existing arc (v,w) (and symmetrically
    through in-neighbors); a forced pair that is a non-edge or conflicts with
    an earlier arc triggers backtracking.
    """
    limits.check_n(g.n)
    edges = g.edges()
    budget = Budget(limits)

    def propagate(arcs: set, out: list, inn: list, seed: tuple[int, int]) -> bool:
        stack = [seed]
        while stack:
            u, v = stack.pop()
            if (u, v) in arcs:
                continue
            if (v, u) in arcs or not g.has_edge(u, v):
                return False
            arcs.add((u, v))
            out[u].append(v)
            inn[v].append(u)
            for w in out[v]:
                stack.append((u, w))
            for w in inn[u]:
                stack.append((w, v))
        return True

    def rec(arcs: set, out: list, inn: list) -> set | None:
        budget.tick()
        for u, v in edges:
            if (u, v) not in arcs and (v, u) not in arcs:
                for seed in ((u, v), (v, u)):
                    arcs2 = set(arcs)
                    out2 = [list(x) for x in out]
                    inn2 = [list(x) for x in inn]
                    if propagate(arcs2, out2, inn2, seed):
                        found = rec(arcs2, out2, inn2)
                        if found is not None:
                            return found
                return None
        return arcs

    found = rec(set(), [[] for _ in range(g.n)], [[] for _ in range(g.n)])
    if found is None:
        return None
    return Orientation(g.n, frozenset(found))


# ---------------------------------------------------------------------------
# unit intersection dimension

def unit_intersection_dimension(g: Graph, limits: SearchLimits = UDIM_LIMITS) -> int:
    """Smallest d such that g is the edge-set intersection of d supergraphs
    that each have clique cover width at most 1.

    Search space reduction: a width-<=1 supergraph H of g, together with an
    ordered cover of H witnessing that, corresponds to an ordered partition L
    of V where no g-edge spans a part gap >= 2 (parts need not be cliques of
    g: missing within-part pairs become added edges of H).  The maximal set
    of g-non-edges such an H can exclude is exactly the pairs split across
    different parts of L, so minimizing d is an exact set cover of the
    non-edges by the "split by L" sets over all admissible L.
    """
    limits.check_n(g.n)
    if not is_connected(g):
        raise InvalidArgumentError("unit intersection dimension requires a connected graph")
    n = g.n
    edges = g.edges()
    nonedges = complement(g).edges()
    if not nonedges:
        return 1  # a clique is itself a width-0 factor
    ne_index = {pair: k for k, pair in enumerate(nonedges)}
    full = (1 << len(nonedges)) - 1

    coverage: set[int] = set()
    for blocks in _set_partitions(n):
        for order in permutations(range(len(blocks))):
            part_of = [0] * n
            for pos, b in enumerate(order):
                for v in blocks[b]:
                    part_of[v] = pos
            if any(abs(part_of[u] - part_of[v]) > 1 for u, v in edges):
                continue
            mask = 0
            for (u, v), k in ne_index.items():
                if part_of[u] != part_of[v]:
                    mask |= 1 << k
            coverage.add(mask)

    masks = _maximal_masks(coverage)
    if full in masks:
        return 1
    return _min_set_cover(masks, full)


def _set_partitions(n: int):
    """All partitions of {0..n-1} into nonempty blocks (unordered)."""
    if n == 0:
        yield []
        return

    def rec(v: int, blocks: list[list[int]]):
        if v == n:
            yield [tuple(b) for b in blocks]
            return
        for b in blocks:
            b.append(v)
            yield from rec(v + 1, blocks)
            b.pop()
        blocks.append([v])
        yield from rec(v + 1, blocks)
        blocks.pop()

    yield from rec(0, [])


def _maximal_masks(masks: set[int]) -> list[int]:
    ordered = sorted(masks, key=lambda m: (-m.bit_count(), m))
    keep: list[int] = []
    for m in ordered:
        if not any(m | k == k for k in keep):
            keep.append(m)
    return keep


def _min_set_cover(masks: list[int], full: int) -> int:
    """Exact minimum set cover by branch and bound on the least-covered
    element."""
    by_element: dict[int, list[int]] = {}
    for k in bits(full):
        covering = [m for m in masks if m >> k & 1]
        if not covering:
            raise InvalidArgumentError("uncoverable element in set cover")
        by_element[k] = covering
    best = len(masks) + 1

    def rec(uncovered: int, used: int) -> None:
        nonlocal best
        if used >= best:
            return
        if uncovered == 0:
            best = used
            return
        pick = min(bits(uncovered), key=lambda k: len(by_element[k]))
        for m in by_element[pick]:
            rec(uncovered & ~m, used + 1)

    rec(full, 0)
    return best
