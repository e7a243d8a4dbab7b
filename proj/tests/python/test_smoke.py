"""Smoke tests for the Python bindings: each major operation runs end to end
and matches a value pinned by the C++ suites."""

import math

import pytest

import spexlin as sx

FANO = sx.Hypergraph(
    3, 7, [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]]
)


def loose_star(r, d):
    edges, nxt = [], 1
    for _ in range(d):
        e = [0] + list(range(nxt, nxt + r - 1))
        nxt += r - 1
        edges.append(e)
    return sx.Hypergraph(r, nxt, edges)


def test_model_basics():
    assert FANO.r == 3 and FANO.n == 7 and len(FANO) == 7
    assert FANO.is_linear() and FANO.is_regular()
    assert [FANO.degree(v) for v in range(7)] == [3] * 7
    assert sx.is_connected(FANO)
    with pytest.raises(sx.InputError):
        sx.Hypergraph(3, 3, [[0, 1]])


def test_walks_and_neighborhoods():
    assert sx.count_walks(FANO, 0, 1).total == 6  # (r-1) * degree
    d1, d2 = sx.neighborhoods(loose_star(3, 2), 1)
    assert d1 == [0, 2] and d2 == [3, 4]


def test_spectral_radius():
    assert sx.spectral_radius(FANO).rho == pytest.approx(3.0, abs=1e-9)
    star = loose_star(3, 3)
    assert sx.spectral_radius(star).rho == pytest.approx(3 ** (1 / 3), abs=1e-9)
    y = sx.apply_adjacency(sx.Hypergraph(3, 3, [[0, 1, 2]]), [1.0, 2.0, 3.0])
    assert y == [6.0, 3.0, 2.0]


def test_shadow():
    g = sx.two_shadow(FANO)
    assert g.multiplicity(0, 1) == 1
    assert sx.multigraph_spectral_radius(g).rho == pytest.approx(6.0, abs=1e-9)
    report = sx.check_shadow_bound(FANO)
    assert report.satisfied and report.bound_value == pytest.approx(3.0, abs=1e-8)


def test_berge():
    c3 = sx.Pattern.cycle(3)
    assert sx.contains_berge(FANO, c3) is not None
    assert sx.contains_berge(loose_star(3, 3), c3) is None
    assert len(sx.enumerate_berge_family(c3, 3)) == 3
    ex = sx.expansion(c3, 3)
    assert ex.n == 6 and len(ex) == 3 and ex.is_linear()


def test_bounds():
    assert sx.spex_kst_c3_bound(7, 3, 2, 2).bound_value == pytest.approx(1.5)
    assert sx.ex_kst_c3_bound(7, 3, 2, 2) == pytest.approx(3.5)
    assert sx.ex_kst_c3_holds_exact(3, 7, 3, 2)
    assert not sx.ex_kst_c3_holds_exact(4, 7, 3, 2)
    report = sx.avg_degree_lower(FANO)
    assert report.satisfied and report.measured == pytest.approx(3.0, abs=1e-8)
    assert sx.fact_root2(2.0, 3.0) == pytest.approx(3.5)


def test_extremal_and_random():
    result = sx.enumerate_extremal(5, 2, forbid=[sx.Pattern.cycle(3)], objective="edges")
    assert result.optimum == 6 and result.exhaustive
    h = sx.random_linear(9, 3, seed=7, max_edges=6)
    assert h.is_linear()
    assert h == sx.random_linear(9, 3, seed=7, max_edges=6)


def test_canonical_and_io():
    a = sx.Hypergraph(3, 5, [[0, 1, 2]])
    b = sx.Hypergraph(3, 5, [[2, 3, 4]])
    assert sx.is_isomorphic(a, b)
    assert sx.canonical_form(b).edges == [[0, 1, 2]]
    assert sx.parse_hypergraph(sx.to_text(FANO)) == FANO
    assert sx.parse_hypergraph(sx.to_json(FANO)) == FANO


def test_exact_berge():
    h = sx.Hypergraph(3, 6, [[0, 2, 3], [0, 4, 5], [1, 2, 4], [1, 3, 5]])
    assert sx.check_hm_bipartite(h, [0, 1], [2, 3, 4, 5])
    emb = sx.contains_exact_berge_kst(h, [0, 1], [2, 3, 4, 5], 2, 2)
    assert emb is not None and sorted(emb.vertex_map[:2]) == [0, 1]


def test_enumerate_classes_callback():
    seen = []
    sx.enumerate_classes(6, 3, linear=True, max_edges=2, visit=lambda h: seen.append(h) or True)
    assert len(seen) == 4  # empty, one edge, two sharing, two disjoint


def test_verify_corpus():
    corpus = [sx.random_linear(10, 3, seed=s, max_edges=5) for s in range(12)]
    report = sx.verify_corpus(corpus, ["shadow_bound", "avg_degree"])
    assert report["ok"] and report["corpus_size"] == 12
    assert all(c["violations"] == 0 for c in report["checks"])
