from __future__ import annotations

import random

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from zcolor.coloring import Coloring
from zcolor.graph import Graph

settings.register_profile(
    "default",
    max_examples=80,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@st.composite
def graphs(draw: st.DrawFn, min_n: int = 1, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@st.composite
def graph_with_proper_coloring(draw: st.DrawFn, max_n: int = 10) -> tuple[Graph, Coloring]:
    g = draw(graphs(max_n=max_n))
    order = draw(st.permutations(range(g.n)))
    slack = draw(st.integers(0, 3))
    cols = [0] * g.n
    for v in order:
        taken = {cols[w] for w in g.adj[v]}
        options = [c for c in range(1, g.n + slack + 1) if c not in taken]
        cols[v] = draw(st.sampled_from(options[: slack + 1]))
    return g, compact(cols)


def compact(cols) -> Coloring:
    """Renumber colors to 1..k keeping their order."""
    rank = {c: i for i, c in enumerate(sorted(set(cols)), start=1)}
    return Coloring(tuple(rank[c] for c in cols))


def random_proper_coloring(g: Graph, rng: random.Random) -> Coloring:
    order = list(range(g.n))
    rng.shuffle(order)
    cols = [0] * g.n
    for v in order:
        taken = {cols[w] for w in g.adj[v]}
        free = [c for c in range(1, g.n + 1) if c not in taken]
        cols[v] = rng.choice(free[: 1 + rng.randrange(3)])
    return compact(cols)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def to_nx(g: Graph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


# --- acceptance summary ------------------------------------------------------

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def record(criterion: int, ok: bool, detail: str):
    ACCEPTANCE[criterion] = (ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
