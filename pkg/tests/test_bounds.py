from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zcolor.bounds import bounds_report, delta2, local_delta, m_of, m_star, m_star_vertices, p_of
from zcolor.generators import complete, double_star, empty, hn, path, star

from conftest import graphs


def naive_p(values) -> int:
    vals = sorted(values, reverse=True)
    return max((p for p in range(1, len(vals) + 1) if vals[p - 1] >= p), default=0)


def naive_m_star(g) -> int:
    deg = g.degrees
    best = 0
    for u in range(g.n):
        for k in range(1, g.degree(u) + 1):
            if sum(1 for w in g.adj[u] if deg[w] >= k) >= k:
                best = max(best, k)
    return best


def naive_delta2(g) -> int:
    vals = [local_delta(g, u) for u in range(g.n)]
    return max((v for v in vals if v is not None), default=0)


@pytest.mark.parametrize("values, expected", [([1, 1], 1), ([3, 3, 3], 3), ([5, 4, 2, 2, 1], 2), ([], 0)])
def test_p_of_examples(values, expected):
    assert p_of(values) == expected


@given(st.lists(st.integers(0, 30), max_size=40))
def test_p_of_matches_sort(values):
    assert p_of(values) == naive_p(values)


@pytest.mark.parametrize("n", range(2, 8))
def test_m_star_hn(n):
    assert m_star(hn(n)) == n - 1


def test_m_star_examples():
    assert m_star(complete(6)) == 5
    assert m_star(star(3)) == 1
    assert m_star(empty(4)) == 0


@given(graphs(max_n=12))
def test_m_star_matches_definition(g):
    assert m_star(g) == naive_m_star(g)
    assert all(p_of(g.degrees[w] for w in g.adj[u]) == m_star(g) for u in m_star_vertices(g))


def test_delta2_examples():
    assert delta2(star(7)) == 1
    assert delta2(complete(5)) == 4
    assert delta2(double_star(4)) == 5
    assert double_star(4).max_degree == 5
    assert local_delta(star(3), 1) is None


@given(graphs(max_n=12))
def test_delta2_matches_definition(g):
    assert delta2(g) == naive_delta2(g)


def test_m_of_examples():
    assert m_of(complete(5)) == 5
    assert m_of(star(5)) == 2
    # degree sequence 2,2,1,1: only two vertices reach degree 2, so i = 3 fails
    assert m_of(path(4)) == 2


@given(graphs(max_n=12))
def test_chain_always_holds(g):
    rep = bounds_report(g)
    assert rep.chain_ok
    assert rep.m_star <= rep.delta2 <= rep.delta


def test_report_flags_edgeless():
    rep = bounds_report(empty(3))
    assert rep.degenerate and rep.delta2 == 0
    assert "edgeless" in rep.describe()
    assert rep.to_json()["m_star"] == 0
