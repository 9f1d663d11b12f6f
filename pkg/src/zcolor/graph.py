"""Simple undirected graphs and the structural primitives the rest of the package uses.

Vertices are dense integers ``0..n-1``. A :class:`Graph` is immutable once built;
neighbor lists are stored sorted so that every traversal is deterministic.
"""

from __future__ import annotations

from bisect import bisect_left
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence


class GraphFormatError(ValueError):
    """Raised for malformed graph text; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for u, row in enumerate(self.adj):
            prev = -1
            for v in row:
                if v == u:
                    raise ValueError(f"self-loop at vertex {u}")
                if not 0 <= v < self.n:
                    raise ValueError(f"neighbor {v} of {u} out of range")
                if v <= prev:
                    raise ValueError(f"neighbors of {u} not strictly ascending")
                prev = v
        for u, row in enumerate(self.adj):
            for v in row:
                if u not in self.adj[v]:
                    raise ValueError(f"edge {u}-{v} is listed on one side only")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], name: str = "") -> "Graph":
        """Build a graph, merging duplicate edges. Self-loops raise ``ValueError``."""
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs), name)

    @classmethod
    def from_masks(cls, masks: Sequence[int], name: str = "") -> "Graph":
        n = len(masks)
        adj = tuple(tuple(v for v in range(n) if m >> v & 1) for m in masks)
        return cls(n, adj, name)

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self.adj[u]

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.adj)

    @cached_property
    def num_edges(self) -> int:
        return sum(self.degrees) // 2

    @cached_property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighborhood of every vertex as an int bitmask."""
        out = []
        for row in self.adj:
            m = 0
            for v in row:
                m |= 1 << v
            out.append(m)
        return tuple(out)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, row in enumerate(self.adj) for v in row if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        if self.n <= 4096:
            return bool(self.masks[u] >> v & 1)
        row = self.adj[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def vertices(self) -> range:
        return range(self.n)

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self.n} m={self.num_edges}>"


# --- text formats ---------------------------------------------------------


def parse_dimacs(text: str) -> Graph:
    """Read DIMACS ``.col`` text (``p edge n m`` header, 1-based ``e u v`` lines)."""
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphFormatError("duplicate problem line", lineno)
            if len(parts) < 4 or parts[1] not in ("edge", "edges", "col"):
                raise GraphFormatError(f"malformed header {line!r}", lineno)
            try:
                n = int(parts[2])
                int(parts[3])
            except ValueError:
                raise GraphFormatError(f"malformed header {line!r}", lineno) from None
            if n < 0:
                raise GraphFormatError("negative vertex count", lineno)
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError("edge line before problem line", lineno)
            if len(parts) < 3:
                raise GraphFormatError(f"malformed edge {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError(f"malformed edge {line!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"vertex id out of range 1..{n}", lineno)
            if u == v:
                raise GraphFormatError(f"self-loop on vertex {u}", lineno)
            edges.append((u - 1, v - 1))
        elif parts[0] in ("n", "x"):
            continue
        else:
            raise GraphFormatError(f"unknown line type {parts[0]!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'p edge n m' header")
    return Graph.from_edges(n, edges)


def write_dimacs(g: Graph) -> str:
    lines = []
    if g.name:
        lines.append(f"c {g.name}")
    lines.append(f"p edge {g.n} {g.num_edges}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str, n: int | None = None) -> Graph:
    """Read ``u v`` lines with 0-based ids. ``#`` starts a comment.

    The vertex count is ``max id + 1`` unless given; a lone integer on a line
    declares an isolated vertex.
    """
    edges = []
    top = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            ids = [int(p) for p in parts[:2]]
        except ValueError:
            raise GraphFormatError(f"malformed edge {line!r}", lineno) from None
        if any(i < 0 for i in ids):
            raise GraphFormatError("negative vertex id", lineno)
        if len(ids) == 2:
            if ids[0] == ids[1]:
                raise GraphFormatError(f"self-loop on vertex {ids[0]}", lineno)
            edges.append((ids[0], ids[1]))
        top = max(top, *ids)
    size = top + 1 if n is None else n
    if top >= size:
        raise GraphFormatError(f"vertex id {top} out of range for n={size}")
    return Graph.from_edges(size, edges)


def read_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    is_dimacs = path.endswith(".col") or any(
        ln.lstrip().startswith("p ") for ln in text.splitlines()
    )
    g = parse_dimacs(text) if is_dimacs else parse_edge_list(text)
    return Graph(g.n, g.adj, name=path.rsplit("/", 1)[-1])


# --- derived graphs -------------------------------------------------------


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``(h, old_ids)`` where vertex ``i`` of ``h`` is ``old_ids[i]`` in ``g``."""
    old_ids = sorted(set(vertices))
    index = {v: i for i, v in enumerate(old_ids)}
    adj = tuple(tuple(index[w] for w in g.adj[v] if w in index) for v in old_ids)
    return Graph(len(old_ids), adj), old_ids


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph.from_masks([full & ~m & ~(1 << v) for v, m in enumerate(g.masks)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges())
        offset += h.n
    return Graph.from_edges(offset, edges)


def join(g1: Graph, g2: Graph) -> Graph:
    edges = g1.edges() + [(u + g1.n, v + g1.n) for u, v in g2.edges()]
    edges.extend((u, g1.n + v) for u in range(g1.n) for v in range(g2.n))
    return Graph.from_edges(g1.n + g2.n, edges)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Vertex ``v`` of ``g`` becomes ``perm[v]``."""
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()], g.name)


# --- distances and components ---------------------------------------------


def bfs_distances(g: Graph, source: int, limit: int | None = None) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        d = dist[x]
        if limit is not None and d >= limit:
            continue
        for y in g.adj[x]:
            if y not in dist:
                dist[y] = d + 1
                queue.append(y)
    return dist


@dataclass(frozen=True)
class Ball:
    center: int
    radius: int
    members: frozenset[int]


def ball(g: Graph, u: int, r: int) -> Ball:
    """All vertices within distance ``r`` of ``u``."""
    if not 0 <= u < g.n:
        raise ValueError(f"vertex {u} out of range")
    if r < 0:
        raise ValueError("radius must be nonnegative")
    return Ball(u, r, frozenset(bfs_distances(g, u, limit=r)))


def g_plus(g: Graph, u: int) -> tuple[Graph, list[int]]:
    """Induced subgraph on the ball of radius ``deg(u) + 1`` around ``u``."""
    return induced_subgraph(g, ball(g, u, g.degree(u) + 1).members)


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = sorted(bfs_distances(g, s))
        for v in comp:
            seen[v] = True
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(bfs_distances(g, 0)) == g.n


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if side[y] < 0:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return False
    return True


# --- blocks ---------------------------------------------------------------


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]


def biconnected_components(g: Graph) -> BlockDecomposition:
    """Blocks and cut vertices (iterative Hopcroft-Tarjan with an edge stack).

    Isolated vertices come back as singleton blocks.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    blocks: list[frozenset[int]] = []
    cuts: set[int] = set()
    timer = 0
    for root in range(g.n):
        if disc[root] >= 0:
            continue
        if not g.adj[root]:
            disc[root] = timer
            timer += 1
            blocks.append(frozenset([root]))
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        edge_stack: list[tuple[int, int]] = []
        # frames: (vertex, parent, next neighbor index)
        stack = [(root, -1, 0)]
        while stack:
            v, parent, i = stack[-1]
            if i < len(g.adj[v]):
                stack[-1] = (v, parent, i + 1)
                w = g.adj[v][i]
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    edge_stack.append((v, w))
                    stack.append((w, v, 0))
                    if v == root:
                        root_children += 1
                elif w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
                continue
            stack.pop()
            if parent < 0:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent != root:
                    cuts.add(parent)
                members = set()
                while True:
                    a, b = edge_stack.pop()
                    members.add(a)
                    members.add(b)
                    if (a, b) == (parent, v):
                        break
                blocks.append(frozenset(members))
        if root_children > 1:
            cuts.add(root)
    return BlockDecomposition(tuple(blocks), frozenset(cuts))


# --- cycles ---------------------------------------------------------------


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests. BFS from every vertex."""
    best = float("inf")
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in g.adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def five_cycles(g: Graph) -> list[tuple[int, ...]]:
    """Every 5-cycle once, as a vertex tuple starting at its smallest vertex."""
    out = []
    for s in range(g.n):
        def extend(path: list[int]):
            x = path[-1]
            if len(path) == 5:
                if s in g.adj[x] and path[1] < path[4]:
                    out.append(tuple(path))
                return
            for y in g.adj[x]:
                if y > s and y not in path:
                    path.append(y)
                    extend(path)
                    path.pop()

        extend([s])
    return out


def five_cycle_condition(g: Graph) -> bool:
    """True iff no two distinct 5-cycles share a path with two edges.

    Requires girth >= 5. Enumerates all 5-cycles, so keep ``n`` to a few hundred.
    """
    if girth(g) < 5:
        raise ValueError("five_cycle_condition requires girth >= 5")
    seen: set[tuple[int, int, int]] = set()
    for cyc in five_cycles(g):
        for i in range(5):
            a, b, c = cyc[i - 1], cyc[i], cyc[(i + 1) % 5]
            key = (min(a, c), b, max(a, c))
            if key in seen:
                return False
            seen.add(key)
    return True


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return all(g.has_edge(a, b) for a, b in combinations(vs, 2))
