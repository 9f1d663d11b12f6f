from __future__ import annotations

import random
from collections import Counter
from itertools import combinations

import pytest

from zcolor.bounds import m_star
from zcolor.coloring import verify_z
from zcolor.exact import oracle_bstar, oracle_clique, oracle_z
from zcolor.generators import (
    complete,
    cycle,
    empty,
    path,
    petersen,
    random_block_graph,
    random_cactus,
    random_p4sparse,
    random_tree,
    spider,
    star,
)
from zcolor.graph import Graph, disjoint_union, join
from zcolor.special import (
    bstar_block,
    bstar_cactus,
    bstar_girth5,
    bstar_p4sparse,
    build_array,
    class_tags,
    classify,
    decompose_p4sparse,
    format_array,
    girth5_bstar_witness,
    is_block_graph,
    is_cactus,
    is_cograph,
    is_p4_sparse,
    optimal_coloring,
)
from zcolor.special.blocks import extend_coloring, find_bstar_witness
from zcolor.special.p4sparse import induced_p4s, p4_sparse_violation

BOWTIE = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])

A7 = [
    [1, 2, 3, 4, 5, 6],
    [1, 7, 8, 9, 10, 11],
    [2, 7, 12, 13, 14, 15],
    [3, 8, 12, 16, 17, 18],
    [4, 9, 13, 16, 19, 20],
    [5, 10, 14, 17, 19, 21],
    [6, 11, 15, 18, 20, 21],
]


# --- recognition -------------------------------------------------------------


def test_recognition_examples():
    t = random_tree(9, seed=1)
    assert is_block_graph(t) and is_cactus(t)
    assert is_block_graph(BOWTIE) and is_cactus(BOWTIE)
    assert is_block_graph(complete(4)) and not is_cactus(complete(4))
    assert is_cactus(cycle(6)) and not is_block_graph(cycle(6))


# --- block graphs and cacti --------------------------------------------------


def test_block_examples():
    res = bstar_block(complete(6))
    assert res.value == 6 and res.witness_source == "construction"
    assert bstar_block(star(5)).value == 2
    assert bstar_block(star(5)).class_tag == "tree"
    with pytest.raises(ValueError):
        bstar_block(cycle(5))


@pytest.mark.parametrize("seed", range(12))
def test_block_matches_oracle(seed):
    g = random_block_graph(9, seed=seed)
    res = bstar_block(g)
    assert res.value == oracle_bstar(g).value == m_star(g) + 1
    assert verify_z(g, res.witness).bstar_valid and res.witness.k == res.value


def test_cactus_examples():
    assert bstar_cactus(cycle(5)).value == 3 == oracle_bstar(cycle(5)).value
    tadpole = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)])
    res = bstar_cactus(tadpole)
    assert res.value == oracle_bstar(tadpole).value
    t = random_tree(9, seed=4)
    assert bstar_cactus(t).value == bstar_block(t).value
    with pytest.raises(ValueError):
        bstar_cactus(complete(4))


def test_cactus_closed_form_fails_on_four_cycles():
    # C4 has m* = 2 but no 3-coloring with a nice vertex: the closed form
    # m*+1 over-counts. The solver keeps the closed form and says so.
    c4 = cycle(4)
    assert m_star(c4) == 2 and oracle_bstar(c4, upper=3).value == 2
    res = bstar_cactus(c4)
    assert res.value == 3
    assert res.witness_source == "oracle" and res.witness.k == 2
    assert any("differs" in note for note in res.notes)
    pendant = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
    assert bstar_cactus(pendant).value == 3 and oracle_bstar(pendant, upper=3).value == 2


def test_extend_coloring():
    p = path(5)
    full = extend_coloring(p, {0: 1, 4: 1}, 2)
    assert full is not None and full[0] == full[4] == 1
    assert extend_coloring(p, {0: 1, 3: 1}, 2) is None
    assert find_bstar_witness(empty(3)).colors == (1, 1, 1)


# --- P4-sparse ---------------------------------------------------------------


def test_p4_examples():
    p4 = path(4)
    assert not is_cograph(p4) and is_p4_sparse(p4)
    tree = decompose_p4sparse(p4)
    assert tree.kind == "spider" and tree.thin and len(tree.clique) == 2


def test_p5_is_not_p4_sparse():
    # P5 has the two induced P4s 0-1-2-3 and 1-2-3-4 inside its five vertices
    assert len(induced_p4s(path(5))) == 2
    assert p4_sparse_violation(path(5)) == frozenset(range(5))


def test_c5_is_not_p4_sparse():
    assert len(induced_p4s(cycle(5))) == 5
    assert not is_p4_sparse(cycle(5))


def test_omega_examples():
    k3_join = join(complete(3), empty(2))
    res = bstar_p4sparse(k3_join)
    assert res.value == 4 and res.class_tag == "cograph"
    thin = spider(3, hub=True)
    res = bstar_p4sparse(thin)
    assert res.value == 4 == oracle_bstar(thin).value
    assert bstar_p4sparse(disjoint_union(complete(5), complete(2))).value == 5
    thick = spider(4, thick=True)
    assert decompose_p4sparse(thick).thin is False
    assert bstar_p4sparse(thick).value == 4 == oracle_bstar(thick).value


@pytest.mark.parametrize("seed", range(25))
def test_p4sparse_random(seed):
    n = 4 + seed % 8
    g = random_p4sparse(n, seed=seed)
    assert is_p4_sparse(g)
    res = bstar_p4sparse(g)
    assert res.value == oracle_clique(g)
    assert verify_z(g, res.witness).z_valid and res.witness.k == res.value
    c = optimal_coloring(g)
    assert c.k == res.value and verify_z(g, c).proper
    if n <= 8:
        assert oracle_bstar(g).value == oracle_z(g).value == res.value


def test_p4sparse_rejects_others():
    with pytest.raises(ValueError):
        bstar_p4sparse(cycle(5))
    with pytest.raises(ValueError):
        decompose_p4sparse(path(6))


# --- arrays ------------------------------------------------------------------


def test_array_a4():
    assert build_array(4).rows == [[1, 2, 3], [1, 4, 5], [2, 4, 6], [3, 5, 6]]


def test_array_a7():
    arr = build_array(7)
    assert arr.rows == A7
    assert arr.rows[3] == [3, 8, 12, 16, 17, 18]


def test_array_a2_and_errors():
    assert build_array(2).rows == [[1], [1]]
    with pytest.raises(ValueError):
        build_array(1)


@pytest.mark.parametrize("m", range(2, 12))
def test_array_properties(m):
    arr = build_array(m)
    counts = Counter(x for r in arr.rows for x in r)
    assert set(counts) == set(range(1, m * (m - 1) // 2 + 1))
    assert set(counts.values()) == {2}
    for a, b in combinations(range(m), 2):
        assert len(set(arr.rows[a]) & set(arr.rows[b])) == 1
    for i in range(1, m + 1):
        for j in range(1, m):
            if i > j:
                assert arr.label(i, j) == arr.label(j, i - 1)
        # colors along row i are {1..m} minus i
        assert {arr.color(i, j) for j in range(1, m)} == set(range(1, m + 1)) - {i}
    for i, j in combinations(range(1, m + 1), 2):
        (a, b), (c, d) = arr.shared(i, j)
        assert arr.label(a, b) == arr.label(c, d)


def test_format_array():
    text = format_array(build_array(4))
    assert text.splitlines()[1] == "S_2: 1 4 5"
    assert "4/2" in format_array(build_array(4), colors=True)


# --- girth five --------------------------------------------------------------


def five_color_tree() -> Graph:
    edges = [(0, i) for i in range(1, 5)]
    leaf = 5
    for i in range(1, 5):
        for _ in range(3):
            edges.append((i, leaf))
            leaf += 1
    return Graph.from_edges(leaf, edges)


def test_five_color_tree_witness():
    g = five_color_tree()
    w = girth5_bstar_witness(g)
    assert w.u == 0 and w.partners == (1, 2, 3, 4)
    assert w.color_of(0) == 5
    assert [w.color_of(i) for i in range(1, 5)] == [1, 2, 3, 4]
    leaves = [[w.color_of(x) for x in s] for s in w.sets]
    assert leaves == [[4, 2, 3], [1, 4, 3], [1, 2, 4], [1, 2, 3]]


def test_star_of_stars():
    edges = [(0, 1), (0, 2), (0, 3)] + [(i, 4 + 2 * (i - 1) + j) for i in (1, 2, 3) for j in (0, 1)]
    g = Graph.from_edges(10, edges)
    res = bstar_girth5(g)
    assert res.value == 4 and res.bound == "lower"
    assert verify_z(g, res.witness).bstar_valid


def test_petersen_fails_five_cycle_condition():
    with pytest.raises(ValueError, match="5-cycles"):
        girth5_bstar_witness(petersen())
    # the local subgraph is the whole graph, and b*(Petersen) = 3 < m*+1
    with pytest.raises(ValueError, match="two edges"):
        girth5_bstar_witness(petersen(), check=False)
    assert oracle_bstar(petersen()).value == 3


def test_girth5_cross_edges():
    # u=0, partners 1,2,3; S_1={4,5}, S_2={6,7}, S_3={8,9}; one edge between S_1 and S_2
    edges = [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7), (3, 8), (3, 9), (4, 6)]
    g = Graph.from_edges(10, edges)
    w = girth5_bstar_witness(g)
    arr = build_array(3)
    assert w.placement[4] == (1, 1) and w.placement[6] == (2, 1)
    assert arr.label(1, 1) == arr.label(2, 1)
    assert w.color_of(4) != w.color_of(6)


def test_girth5_errors():
    with pytest.raises(ValueError):
        girth5_bstar_witness(cycle(4))
    g = Graph.from_edges(10, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7), (3, 8), (3, 9), (4, 6), (5, 7)])
    with pytest.raises(ValueError, match="5-cycles"):
        girth5_bstar_witness(g)
    with pytest.raises(ValueError, match="two edges join"):
        girth5_bstar_witness(g, check=False)


def test_random_girth5_trees():
    for seed in range(15):
        g = random_tree(25, seed=seed)
        res = bstar_girth5(g)
        assert res.value == m_star(g) + 1
        assert res.local is not None


# --- classify ----------------------------------------------------------------


def test_class_tags_and_classify():
    assert set(class_tags(path(4))) >= {"tree", "block", "cactus", "p4sparse", "girth5"}
    assert classify(complete(4)).class_tag == "block"
    assert classify(cycle(5)).class_tag == "cactus"
    assert classify(join(cycle(4), empty(1))).class_tag == "cograph"
    assert classify(petersen()) is None
    js = classify(BOWTIE).to_json()
    assert js["class"] == "block" and js["bstar"] == 3


def test_classify_random_trees_against_oracle():
    rng = random.Random(0)
    for _ in range(10):
        g = random_tree(rng.randint(2, 9), seed=rng.randrange(1000))
        assert classify(g).value == oracle_bstar(g).value
