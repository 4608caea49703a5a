"""Decomposition of a graph into unit incomparability factor graphs.

Given an ordered clique cover of width W, builds W factor supergraphs whose
edge-set intersection is the original graph: factors 1..W-1 are co-bipartite
(their complements collect the non-edges at part distance exactly i), and
the terminal factor's complement collects the non-edges at part distance
>= W, oriented from lower part index to higher, with a block cover of width
at most 1 grouping runs of W consecutive parts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .covers import (
    OrderedCliqueCover,
    cover_from_json,
    cover_to_json,
    cover_width,
    make_cover,
    validate_cover,
)
from .errors import InvalidArgumentError, InvalidCoverError, ParseError
from .graphs import Graph, build_graph, complement
from .oracles import Orientation, orientation_from_json, orientation_to_json, verify_transitive

CO_BIPARTITE = "co_bipartite"
TERMINAL = "terminal"


@dataclass(frozen=True)
class Factor:
    graph: Graph
    kind: str
    bipartition: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    orientation: Orientation | None = None
    blocks: OrderedCliqueCover | None = None


@dataclass(frozen=True)
class Decomposition:
    source_cover: OrderedCliqueCover
    factors: tuple[Factor, ...]


def block_cover(cover: OrderedCliqueCover, w: int) -> OrderedCliqueCover:
    """Group parts into consecutive runs of w (remainder last), each run's
    union forming one part."""
    if w < 1:
        raise InvalidArgumentError("block size must be >= 1")
    blocks = []
    for start in range(0, len(cover.parts), w):
        merged: list[int] = []
        for part in cover.parts[start:start + w]:
            merged.extend(part)
        blocks.append(tuple(sorted(merged)))
    return OrderedCliqueCover(tuple(blocks))


def _complete_minus(n: int, excluded) -> Graph:
    full = (1 << n) - 1
    adj = [full & ~(1 << v) for v in range(n)]
    for u, v in excluded:
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    return Graph(n, tuple(adj))


def decompose(g: Graph, cover: OrderedCliqueCover) -> Decomposition:
    report = validate_cover(g, cover)
    if not report.valid:
        raise InvalidCoverError(f"invalid cover: {report}")
    w = cover_width(g, cover, checked=False)
    part_of = cover.part_of()

    if w == 0:
        # every component is a clique: the graph is its own single factor,
        # with the complement (all cross-part pairs) oriented by part index
        arcs = []
        for x, y in complement(g).edges():
            if part_of[x] <= part_of[y]:
                arcs.append((x, y))
            else:
                arcs.append((y, x))
        factor = Factor(
            graph=g,
            kind=TERMINAL,
            orientation=Orientation(g.n, frozenset(arcs)),
            blocks=cover,
        )
        return Decomposition(cover, (factor,))

    by_distance: dict[int, list[tuple[int, int]]] = {}
    for x, y in complement(g).edges():
        dist = abs(part_of[x] - part_of[y])
        if dist >= 1:
            by_distance.setdefault(min(dist, w), []).append((x, y))
        # dist == 0 cannot occur: parts are cliques, so same-part pairs are edges

    factors = []
    for i in range(1, w):
        excluded = by_distance.get(i, [])
        side_even = tuple(v for v in range(g.n) if (part_of[v] // i) % 2 == 0)
        side_odd = tuple(v for v in range(g.n) if (part_of[v] // i) % 2 == 1)
        factors.append(
            Factor(
                graph=_complete_minus(g.n, excluded),
                kind=CO_BIPARTITE,
                bipartition=(side_even, side_odd),
            )
        )

    terminal_excluded = by_distance.get(w, [])
    arcs = []
    for x, y in terminal_excluded:
        if part_of[x] <= part_of[y]:
            arcs.append((x, y))
        else:
            arcs.append((y, x))
    factors.append(
        Factor(
            graph=_complete_minus(g.n, terminal_excluded),
            kind=TERMINAL,
            orientation=Orientation(g.n, frozenset(arcs)),
            blocks=block_cover(cover, w),
        )
    )
    return Decomposition(cover, tuple(factors))


# ---------------------------------------------------------------------------
# verification

@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class DecompositionReport:
    checks: tuple[Check, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]


def verify_decomposition(g: Graph, d: Decomposition) -> DecompositionReport:
    """Run the five structural checks:

    (a) every factor is a supergraph of g;
    (b) the intersection of the factor edge sets equals E(g);
    (c) each co-bipartite factor's complement is bipartite with its stored witness;
    (d) the terminal orientation is transitive and covers exactly the
        terminal complement's edges;
    (e) the block cover is a valid clique cover of the terminal factor with
        width at most 1.
    """
    checks: list[Check] = []

    bad = None
    for idx, f in enumerate(d.factors):
        if f.graph.n != g.n:
            bad = f"factor {idx} has {f.graph.n} vertices, expected {g.n}"
            break
        for v in range(g.n):
            if g.adj[v] & ~f.graph.adj[v]:
                bad = f"factor {idx} misses an edge at vertex {v}"
                break
        if bad:
            break
    checks.append(Check("a_supergraphs", bad is None, bad or ""))

    if all(f.graph.n == g.n for f in d.factors) and d.factors:
        inter = list(d.factors[0].graph.adj)
        for f in d.factors[1:]:
            for v in range(g.n):
                inter[v] &= f.graph.adj[v]
        witness = ""
        ok = True
        for v in range(g.n):
            diff = inter[v] ^ g.adj[v]
            if diff:
                u = (diff & -diff).bit_length() - 1
                witness = f"edge sets differ at pair ({v},{u})"
                ok = False
                break
        checks.append(Check("b_intersection", ok, witness))
    else:
        checks.append(Check("b_intersection", False, "factor vertex sets do not match"))

    ok = True
    detail = ""
    for idx, f in enumerate(d.factors):
        if f.kind != CO_BIPARTITE:
            continue
        if f.bipartition is None:
            ok, detail = False, f"factor {idx} lacks a bipartition witness"
            break
        side = {}
        for s, part in enumerate(f.bipartition):
            for v in part:
                side[v] = s
        if sorted(side) != list(range(g.n)):
            ok, detail = False, f"factor {idx} bipartition is not a partition of V"
            break
        for x, y in complement(f.graph).edges():
            if side[x] == side[y]:
                ok, detail = False, f"factor {idx} complement edge ({x},{y}) stays inside one side"
                break
        if not ok:
            break
    checks.append(Check("c_cobipartite_witnesses", ok, detail))

    terminal = [f for f in d.factors if f.kind == TERMINAL]
    ok = len(terminal) == 1
    detail = "" if ok else f"expected exactly one terminal factor, found {len(terminal)}"
    if ok:
        f = terminal[0]
        if f.orientation is None:
            ok, detail = False, "terminal factor lacks an orientation"
        elif not verify_transitive(f.orientation):
            ok, detail = False, "terminal orientation is not transitive"
        elif f.orientation.underlying_edges() != set(complement(f.graph).edges()):
            ok, detail = False, "terminal orientation does not cover exactly the complement edges"
    checks.append(Check("d_terminal_orientation", ok, detail))

    ok = bool(terminal)
    detail = "" if ok else "no terminal factor"
    if terminal:
        f = terminal[0]
        if f.blocks is None:
            ok, detail = False, "terminal factor lacks a block cover"
        else:
            rep = validate_cover(f.graph, f.blocks)
            if not rep.valid:
                ok, detail = False, f"block cover invalid for the terminal factor: {rep}"
            else:
                bw = cover_width(f.graph, f.blocks, checked=False)
                if bw > 1:
                    ok, detail = False, f"block cover width {bw} exceeds 1"
    checks.append(Check("e_block_cover", ok, detail))

    return DecompositionReport(tuple(checks))


# ---------------------------------------------------------------------------
# serialization

def decomposition_to_json(d: Decomposition) -> str:
    factors = []
    for f in d.factors:
        factors.append(
            {
                "graph": {"n": f.graph.n, "edges": [list(e) for e in f.graph.edges()]},
                "kind": f.kind,
                "bipartition": [list(s) for s in f.bipartition] if f.bipartition else None,
                "orientation": (
                    {"n": f.orientation.n, "arcs": [list(a) for a in sorted(f.orientation.arcs)]}
                    if f.orientation
                    else None
                ),
                "blocks": [list(p) for p in f.blocks.parts] if f.blocks else None,
            }
        )
    return json.dumps(
        {"cover": [list(p) for p in d.source_cover.parts], "factors": factors},
        sort_keys=True,
    )


def decomposition_from_json(text: str) -> Decomposition:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from exc
    try:
        factors = []
        for fo in obj["factors"]:
            graph = build_graph(fo["graph"]["n"], [tuple(e) for e in fo["graph"]["edges"]])
            bip = tuple(tuple(s) for s in fo["bipartition"]) if fo.get("bipartition") else None
            ori = None
            if fo.get("orientation"):
                ori = Orientation(
                    fo["orientation"]["n"],
                    frozenset((a[0], a[1]) for a in fo["orientation"]["arcs"]),
                )
            blocks = make_cover(fo["blocks"]) if fo.get("blocks") else None
            factors.append(Factor(graph, fo["kind"], bip, ori, blocks))
        return Decomposition(make_cover(obj["cover"]), tuple(factors))
    except (KeyError, TypeError, IndexError) as exc:
        raise ParseError(f"malformed decomposition JSON: {exc!r}") from exc
