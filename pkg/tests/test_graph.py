from __future__ import annotations

import math

import networkx as nx
import pytest
from hypothesis import given

from zcolor.generators import complete, cycle, path, petersen, star, random_tree
from zcolor.graph import (
    Graph,
    GraphFormatError,
    ball,
    biconnected_components,
    complement,
    connected_components,
    five_cycle_condition,
    five_cycles,
    g_plus,
    girth,
    induced_subgraph,
    parse_dimacs,
    parse_edge_list,
    read_graph,
    write_dimacs,
)

from conftest import graphs, to_nx


def test_parse_p3():
    g = parse_dimacs("p edge 3 2\ne 1 2\ne 2 3\n")
    assert g.n == 3
    assert g.edges() == [(0, 1), (1, 2)]


def test_parse_self_loop_reports_line():
    with pytest.raises(GraphFormatError) as info:
        parse_dimacs("p edge 2 1\ne 1 1\n")
    assert info.value.line == 2
    assert "self-loop" in str(info.value)


def test_parse_k4():
    text = "p edge 4 6\n" + "".join(f"e {u} {v}\n" for u in range(1, 5) for v in range(u + 1, 5))
    g = parse_dimacs(text)
    assert g.degrees == (3, 3, 3, 3)


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("p edge x 1\n", "malformed header"),
        ("e 1 2\n", "before problem line"),
        ("p edge 2 1\ne 1 3\n", "out of range"),
        ("c only a comment\n", "missing"),
        ("p edge 2 1\nq 1 2\n", "unknown line type"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(GraphFormatError, match=fragment):
        parse_dimacs(text)


@given(graphs(max_n=9))
def test_dimacs_round_trip(g):
    assert parse_dimacs(write_dimacs(g)) == g


def test_edge_list_reader(tmp_path):
    g = parse_edge_list("0 1\n1 2  # tail\n4\n")
    assert g.n == 5 and g.num_edges == 2
    p = tmp_path / "g.txt"
    p.write_text("0 1\n")
    assert read_graph(str(p)).n == 2
    with pytest.raises(GraphFormatError):
        parse_edge_list("3 3\n")


def test_graph_rejects_bad_adjacency():
    with pytest.raises(ValueError):
        Graph(2, ((1,), ()))
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])


def test_ball_examples():
    p5 = path(5)
    assert ball(p5, 2, 1).members == {1, 2, 3}
    assert ball(p5, 4, 0).members == {4}
    assert ball(cycle(6), 0, 3).members == set(range(6))
    with pytest.raises(ValueError):
        ball(p5, 0, -1)


def test_g_plus_examples():
    h, ids = g_plus(star(4), 0)
    assert ids == list(range(5))
    h, ids = g_plus(path(10), 0)
    assert ids == [0, 1, 2] and h.num_edges == 2
    h, _ = g_plus(complete(4), 2)
    assert h == complete(4)


def test_blocks_examples():
    bowtie = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    d = biconnected_components(bowtie)
    assert len(d.blocks) == 2 and d.cut_vertices == {2}
    d = biconnected_components(path(4))
    assert len(d.blocks) == 3 and d.cut_vertices == {1, 2}
    d = biconnected_components(cycle(5))
    assert len(d.blocks) == 1 and not d.cut_vertices


@given(graphs(max_n=10))
def test_blocks_match_networkx(g):
    ours = biconnected_components(g)
    h = to_nx(g)
    theirs = {frozenset(c) for c in nx.biconnected_components(h)}
    assert {b for b in ours.blocks if len(b) > 1} == theirs
    assert ours.cut_vertices == set(nx.articulation_points(h))


def test_girth_examples():
    assert girth(cycle(5)) == 5
    assert girth(random_tree(12, seed=1)) == math.inf
    assert girth(petersen()) == 5


@given(graphs(max_n=9))
def test_girth_matches_networkx(g):
    expected = nx.girth(to_nx(g))
    assert girth(g) == expected


def test_five_cycle_condition():
    assert five_cycle_condition(cycle(5))
    two = Graph.from_edges(9, [(i, (i + 1) % 5) for i in range(5)] + [(0, 5), (5, 6), (6, 7), (7, 8), (8, 0)])
    assert len(five_cycles(two)) == 2
    assert five_cycle_condition(two)
    # two 5-cycles sharing the path 0-1-2 need only 7 vertices
    glued = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (2, 5), (5, 6), (6, 0)])
    assert girth(glued) == 5
    assert not five_cycle_condition(glued)
    assert not five_cycle_condition(petersen())
    with pytest.raises(ValueError):
        five_cycle_condition(cycle(4))


def test_derived_graphs():
    g = path(4)
    assert complement(complement(g)) == g
    h, ids = induced_subgraph(g, [3, 1, 2])
    assert ids == [1, 2, 3] and h.edges() == [(0, 1), (1, 2)]
    assert connected_components(Graph.from_edges(4, [(0, 2)])) == [[0, 2], [1], [3]]
