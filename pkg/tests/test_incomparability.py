import pytest

from ccwidth import (
    Orientation,
    approximate_ccw,
    build_graph,
    clique_cover_width_exact,
    complement,
    cover_width,
    extract_star_certificate,
    find_transitive_orientation,
    greedy_layered_cover,
    largest_induced_star,
    random_poset_graph,
    validate_cover,
    validate_star,
)
from ccwidth.errors import (
    CyclicOrientationError,
    NotIncomparabilityError,
    NotTransitiveError,
)
from ccwidth.generators import complete_graph, cycle_graph, star_graph
from ccwidth.limits import SearchLimits


def star5_with_orientation():
    """K_{1,5} (center 0) with its complement, K5 on the leaves, oriented as
    the total order 1 < 2 < ... < 5."""
    g = star_graph(5)
    arcs = frozenset((u, v) for u in range(1, 6) for v in range(u + 1, 6))
    return g, Orientation(6, arcs)


def two_cliques_one_bridge():
    g = build_graph(4, [(0, 1), (2, 3), (0, 2)])
    ghat = find_transitive_orientation(complement(g))
    assert ghat is not None
    return g, ghat


def test_layering_star():
    g, ghat = star5_with_orientation()
    lc = greedy_layered_cover(ghat)
    assert lc.cover.parts == ((0, 1), (2,), (3,), (4,), (5,))
    assert cover_width(g, lc.cover) == 4


def test_layering_clique():
    lc = greedy_layered_cover(Orientation(4, frozenset()))
    assert lc.cover.parts == ((0, 1, 2, 3),)


def test_layering_two_cliques():
    g, ghat = two_cliques_one_bridge()
    lc = greedy_layered_cover(ghat)
    assert len(lc.cover.parts) == 2
    assert cover_width(g, lc.cover) == 1
    assert validate_cover(g, lc.cover).valid


def test_layering_rejects_cycle():
    with pytest.raises(CyclicOrientationError):
        greedy_layered_cover(
            Orientation(3, frozenset({(0, 1), (1, 2), (2, 0)})), check=False
        )


def test_layering_rejects_non_transitive():
    with pytest.raises(NotTransitiveError):
        greedy_layered_cover(Orientation(3, frozenset({(0, 1), (1, 2)})))


def test_certificate_star():
    g, ghat = star5_with_orientation()
    lc = greedy_layered_cover(ghat)
    cert = extract_star_certificate(g, ghat, lc)
    assert cert.center == 0 and len(cert.leaves) == 5
    assert validate_star(g, cert)


def test_certificate_two_cliques():
    g, ghat = two_cliques_one_bridge()
    lc = greedy_layered_cover(ghat)
    cert = extract_star_certificate(g, ghat, lc)
    assert len(cert.leaves) == 2
    assert validate_star(g, cert)


def test_certificate_degenerate_for_clique():
    g = complete_graph(4)
    ghat = Orientation(4, frozenset())
    cert = extract_star_certificate(g, ghat, greedy_layered_cover(ghat))
    assert len(cert.leaves) == 1  # width 0: a single edge is the certificate


def test_approx_star():
    g, ghat = star5_with_orientation()
    res = approximate_ccw(g, ghat)
    assert (res.lower, res.upper) == (2, 4)
    assert clique_cover_width_exact(g)[0] == 2


def test_approx_clique():
    res = approximate_ccw(complete_graph(4))
    assert (res.lower, res.upper) == (0, 0)


def test_approx_cobipartite():
    edges = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3)]
    g = build_graph(6, edges)
    res = approximate_ccw(g)
    assert res.upper == 1 and res.lower >= 0
    assert clique_cover_width_exact(g)[0] == 1


def test_approx_rejects_non_incomparability():
    with pytest.raises(NotIncomparabilityError):
        approximate_ccw(cycle_graph(5))


def test_random_poset_extremes():
    g, ghat = random_poset_graph(6, 0.0, seed=1)
    assert g.edge_count() == 15 and not ghat.arcs
    g, ghat = random_poset_graph(6, 1.0, seed=1)
    assert g.edge_count() == 0 and len(ghat.arcs) == 15


def test_random_poset_is_incomparability():
    g, ghat = random_poset_graph(6, 0.5, seed=42)
    assert find_transitive_orientation(complement(g)) is not None
    assert ghat.underlying_edges() == set(complement(g).edges())


def test_random_poset_deterministic():
    a = random_poset_graph(12, 0.4, seed=7)
    b = random_poset_graph(12, 0.4, seed=7)
    assert a == b
    c = random_poset_graph(12, 0.4, seed=8)
    assert a != c


def test_sandwich_on_random_posets():
    for seed in range(40):
        g, ghat = random_poset_graph(14, 0.3 + 0.01 * seed, seed)
        res = approximate_ccw(g, ghat)
        s, _ = largest_induced_star(g)
        assert s - 1 >= res.upper >= -(-s // 2) - 1
        assert len(res.witness_star.leaves) == max(res.upper + 1, 1) or res.witness_star.degenerate
        assert validate_cover(g, res.witness_cover).valid


def test_two_approx_against_oracle():
    for seed in range(25):
        g, ghat = random_poset_graph(9, 0.35, seed)
        res = approximate_ccw(g, ghat)
        exact, _ = clique_cover_width_exact(g)
        assert res.lower <= exact <= res.upper
        assert res.upper <= 2 * exact + 1
