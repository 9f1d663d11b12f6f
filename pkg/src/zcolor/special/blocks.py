"""Block graphs and cacti: recognition, ``b* = m* + 1`` and b*-coloring witnesses.

Witnesses are built locally around a vertex ``u`` attaining ``m*``: ``u`` gets
color ``m+1``, ``m`` chosen neighbors of degree ``>= m`` get ``1..m``, and a
small backtracking search colors their neighborhoods so each becomes a
b-vertex. The rest of the graph is then completed with colors ``<= m+1``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations, islice

from .. import bounds
from ..coloring import Coloring, verify_z
from ..graph import Graph, biconnected_components, connected_components, is_clique


@dataclass
class ClassResult:
    class_tag: str
    value: int
    witness: Coloring | None = None
    witness_source: str | None = None  # "construction" or "oracle"
    z_value: int | None = None
    bound: str = "exact"  # or "lower"
    notes: list[str] = field(default_factory=list)
    local: object = None

    def to_json(self) -> dict:
        return {
            "class": self.class_tag,
            "bstar": self.value,
            "z": self.z_value,
            "witness": self.witness.to_json() if self.witness else None,
            "witness_source": self.witness_source,
            "bound": self.bound,
            "local_witness": self.local.to_json() if self.local is not None else None,
            "notes": self.notes,
        }


def is_block_graph(g: Graph) -> bool:
    """Every biconnected component is a clique (forests of such graphs included)."""
    return all(is_clique(g, blk) for blk in biconnected_components(g).blocks)


def _block_edges(g: Graph, blk: frozenset[int]) -> int:
    return sum(1 for v in blk for w in g.adj[v] if w in blk) // 2


def is_cactus(g: Graph) -> bool:
    """Every block is a vertex, an edge, or a cycle."""
    return all(_block_edges(g, blk) <= len(blk) for blk in biconnected_components(g).blocks)


def is_forest(g: Graph) -> bool:
    return g.num_edges == g.n - len(connected_components(g))


class _Budget:
    def __init__(self, nodes: int):
        self.left = nodes

    def spend(self) -> bool:
        self.left -= 1
        return self.left >= 0


def _local_pattern(g: Graph, u: int, partners: tuple[int, ...], budget: _Budget) -> dict[int, int] | None:
    top = len(partners) + 1
    cols: dict[int, int] = {u: top}
    for i, w in enumerate(partners, start=1):
        cols[w] = i
    for a, b in combinations(cols, 2):
        if g.has_edge(a, b) and cols[a] == cols[b]:
            return None
    need = {w: set(range(1, top + 1)) - {cols[w]} for w in partners}
    region = sorted({x for w in partners for x in g.adj[w] if x not in cols},
                    key=lambda x: (-sum(1 for w in partners if g.has_edge(x, w)), x))
    partner_set = set(partners)

    def feasible() -> bool:
        for w in partners:
            missing = need[w] - {cols[x] for x in g.adj[w] if x in cols}
            free = sum(1 for x in g.adj[w] if x not in cols)
            if len(missing) > free:
                return False
        return True

    def satisfied() -> bool:
        return all(need[w] <= {cols[x] for x in g.adj[w] if x in cols} for w in partners)

    def rec(i: int) -> bool:
        if satisfied():
            return True
        if i == len(region) or not budget.spend():
            return False
        x = region[i]
        taken = {cols[y] for y in g.adj[x] if y in cols}
        wanted = []
        for w in g.adj[x]:
            if w in partner_set:
                wanted.extend(sorted(need[w] - {cols[y] for y in g.adj[w] if y in cols}))
        order = list(dict.fromkeys(wanted + list(range(1, top + 1))))
        for c in order:
            if c in taken:
                continue
            cols[x] = c
            if feasible() and rec(i + 1):
                return True
            del cols[x]
        return False

    return cols if rec(0) else None


def extend_coloring(g: Graph, partial: dict[int, int], k: int, budget: int = 200_000) -> list[int] | None:
    """Complete ``partial`` to a proper coloring with colors ``1..k``, or None.

    Vertices are visited in BFS order out of the precolored set; plain
    backtracking, bounded by ``budget`` nodes.
    """
    cols = [0] * g.n
    for v, c in partial.items():
        cols[v] = c
    seen = set(partial)
    queue = deque(sorted(partial))
    order: list[int] = []
    for root in list(range(g.n)):
        if root not in seen and not queue:
            seen.add(root)
            order.append(root)
            queue.append(root)
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if y not in seen:
                    seen.add(y)
                    order.append(y)
                    queue.append(y)
    choice = [0] * len(order)
    i = 0
    nodes = 0
    while 0 <= i < len(order):
        v = order[i]
        taken = {cols[w] for w in g.adj[v]}
        c = choice[i] + 1
        while c <= k and c in taken:
            c += 1
        nodes += 1
        if nodes > budget:
            return None
        if c <= k:
            choice[i] = c
            cols[v] = c
            i += 1
        else:
            choice[i] = 0
            cols[v] = 0
            i -= 1
            if i >= 0:
                cols[order[i]] = 0
    return cols if i == len(order) else None


def find_bstar_witness(g: Graph, max_tries: int = 64, budget: int = 200_000) -> Coloring | None:
    """A b*-coloring with ``m*(g) + 1`` colors, or None if the local search fails."""
    m = bounds.m_star(g)
    if g.n == 0:
        return None
    if m == 0:
        return Coloring((1,) * g.n)
    cuts = biconnected_components(g).cut_vertices
    deg = g.degrees
    cands = sorted(bounds.m_star_vertices(g), key=lambda v: (v not in cuts, v))
    tries = 0
    for u in cands:
        eligible = [w for w in g.adj[u] if deg[w] >= m]
        for partners in islice(combinations(eligible, m), max_tries):
            tries += 1
            if tries > max_tries:
                return None
            partial = _local_pattern(g, u, partners, _Budget(budget))
            if partial is None:
                continue
            full = extend_coloring(g, partial, m + 1, budget)
            if full is None:
                continue
            c = Coloring(tuple(full))
            if c.k == m + 1 and verify_z(g, c).bstar_valid:
                return c
    return None


def _with_witness(tag: str, g: Graph, oracle_limit: int) -> ClassResult:
    value = bounds.m_star(g) + 1 if g.n else 0
    res = ClassResult(tag, value)
    c = find_bstar_witness(g)
    if c is not None:
        res.witness, res.witness_source = c, "construction"
        return res
    res.notes.append("local construction found no witness")
    if g.n <= oracle_limit:
        from ..exact import oracle_bstar

        got = oracle_bstar(g, limit=oracle_limit, upper=value)
        res.witness, res.witness_source = got.witness, "oracle"
        if got.value != value:
            res.notes.append(f"oracle b* = {got.value} differs from m*+1 = {value}")
    return res


def bstar_block(g: Graph, oracle_limit: int = 10) -> ClassResult:
    """``b*(G) = m*(G) + 1`` for block graphs (trees included)."""
    if not is_block_graph(g):
        raise ValueError("not a block graph")
    return _with_witness("tree" if is_forest(g) else "block", g, oracle_limit)


def bstar_cactus(g: Graph, oracle_limit: int = 10) -> ClassResult:
    """``m*(G) + 1`` as the b* value of a cactus, with the closed form's caveats in ``notes``."""
    if not is_cactus(g):
        raise ValueError("not a cactus")
    return _with_witness("tree" if is_forest(g) else "cactus", g, oracle_limit)
