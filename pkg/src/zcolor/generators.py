"""Graph families and seeded random generators, addressable by a short spec string.

Spec strings look like ``kind:arg,arg,key=value``; for example ``path:5``,
``complete_bipartite:3,4``, ``gnp:50,0.5,seed=1``, ``spider:thin,3,hub``.
"""

from __future__ import annotations

import random
from typing import Callable

from .graph import Graph, disjoint_union, join


def _check(cond: bool, msg: str):
    if not cond:
        raise ValueError(msg)


def path(n: int) -> Graph:
    _check(n >= 1, "path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")


def cycle(n: int) -> Graph:
    _check(n >= 3, "cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def complete(n: int) -> Graph:
    _check(n >= 1, "complete needs n >= 1")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)], f"K{n}")


def empty(n: int) -> Graph:
    _check(n >= 0, "empty needs n >= 0")
    return Graph.from_edges(n, [], f"E{n}")


def complete_bipartite(a: int, b: int) -> Graph:
    _check(a >= 1 and b >= 1, "complete_bipartite needs a, b >= 1")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)], f"K{a},{b}")


def star(n: int) -> Graph:
    """``K_{1,n}`` with center 0."""
    _check(n >= 1, "star needs n >= 1")
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)], f"K1,{n}")


def bipartite_minus_matching(side: int, removed: int, name: str = "") -> Graph:
    """``K_{side,side}`` minus the matching ``{(i, side+i) : i < removed}``."""
    _check(side >= 1 and 0 <= removed <= side, "invalid matching size")
    edges = [(i, side + j) for i in range(side) for j in range(side) if not (i == j and i < removed)]
    return Graph.from_edges(2 * side, edges, name)


def hn(n: int) -> Graph:
    """``K_{n,n}`` with a matching of size ``n-1`` removed."""
    _check(n >= 1, "hn needs n >= 1")
    return bipartite_minus_matching(n, n - 1, f"H{n}")


def gmatch(n: int) -> Graph:
    """``K_{n+1,n+1}`` with a matching of size ``n`` removed."""
    _check(n >= 1, "gmatch needs n >= 1")
    return bipartite_minus_matching(n + 1, n, f"Gmatch{n}")


def crown(n: int, interleaved: bool = True) -> Graph:
    """``K_{n,n}`` minus a perfect matching.

    With ``interleaved`` the ids alternate sides (``a0 b0 a1 b1 ...``), so that
    First-Fit in id order uses ``n`` colors.
    """
    _check(n >= 1, "crown needs n >= 1")
    a = (lambda i: 2 * i) if interleaved else (lambda i: i)
    b = (lambda i: 2 * i + 1) if interleaved else (lambda i: n + i)
    edges = [(a(i), b(j)) for i in range(n) for j in range(n) if i != j]
    return Graph.from_edges(2 * n, edges, f"crown{n}")


def caterpillar(spine: int, legs: int | list[int]) -> Graph:
    """Path on ``spine`` vertices, each carrying pendant leaves.

    ``legs`` is a per-spine-vertex count or a single count for all.
    """
    _check(spine >= 1, "caterpillar needs a spine")
    counts = [legs] * spine if isinstance(legs, int) else list(legs)
    _check(len(counts) == spine and min(counts) >= 0, "bad leg counts")
    edges = [(i, i + 1) for i in range(spine - 1)]
    nxt = spine
    for i, c in enumerate(counts):
        for _ in range(c):
            edges.append((i, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges, f"caterpillar{spine}")


def double_star(n: int) -> Graph:
    """Two adjacent centers with ``n`` leaves each."""
    _check(n >= 0, "double_star needs n >= 0")
    edges = [(0, 1)] + [(0, 2 + i) for i in range(n)] + [(1, 2 + n + i) for i in range(n)]
    return Graph.from_edges(2 * n + 2, edges, f"doublestar{n}")


def spider(k: int, thick: bool = False, hub: bool = False) -> Graph:
    """Clique ``c_0..c_{k-1}`` (ids ``0..k-1``), legs ``s_i`` (ids ``k..2k-1``).

    Thin: ``c_i ~ s_i`` only. Thick: ``c_i ~ s_j`` iff ``i != j``. The optional
    hub (id ``2k``) is adjacent to every clique vertex and no leg.
    """
    _check(k >= 2, "spider needs k >= 2")
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    for i in range(k):
        for j in range(k):
            if (i == j) != thick:
                edges.append((i, k + j))
    n = 2 * k
    if hub:
        edges.extend((i, n) for i in range(k))
        n += 1
    kind = "thick" if thick else "thin"
    return Graph.from_edges(n, edges, f"spider-{kind}{k}{'+hub' if hub else ''}")


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner, "petersen")


def mycielskian(g: Graph) -> Graph:
    n = g.n
    edges = list(g.edges())
    for u, v in g.edges():
        edges.append((u, n + v))
        edges.append((v, n + u))
    edges.extend((n + u, 2 * n) for u in range(n))
    return Graph.from_edges(2 * n + 1, edges)


def myciel(k: int) -> Graph:
    """DIMACS ``myciel<k>`` up to isomorphism: ``k-1`` Mycielski steps from ``K_2``.

    ``myciel3`` is the Groetzsch graph (11 vertices, chromatic number 4).
    """
    _check(k >= 2, "myciel needs k >= 2")
    g = complete(2)
    for _ in range(k - 1):
        g = mycielskian(g)
    return Graph(g.n, g.adj, f"myciel{k}")


# --- seeded random families -----------------------------------------------


def random_tree(n: int, seed: int = 0) -> Graph:
    """Uniform labelled tree via a random Pruefer sequence."""
    _check(n >= 1, "random_tree needs n >= 1")
    if n <= 2:
        return path(n)
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [i for i in range(n) if degree[i] == 1]
    edges.append((u, v))
    return Graph.from_edges(n, edges, f"tree{n}s{seed}")


def gnp(n: int, p: float, seed: int = 0) -> Graph:
    _check(n >= 0 and 0.0 <= p <= 1.0, "gnp needs n >= 0 and 0 <= p <= 1")
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges, f"gnp{n},{p}s{seed}")


def random_block_graph(n: int, seed: int = 0, max_block: int = 4) -> Graph:
    """Connected block graph: cliques glued at single vertices, tree-like."""
    _check(n >= 1 and max_block >= 2, "random_block_graph needs n >= 1, max_block >= 2")
    rng = random.Random(seed)
    edges = []
    size = 1
    while size < n:
        attach = rng.randrange(size)
        t = min(rng.randint(2, max_block), n - size + 1)
        members = [attach] + list(range(size, size + t - 1))
        size += t - 1
        edges.extend((a, b) for i, a in enumerate(members) for b in members[i + 1:])
    return Graph.from_edges(n, edges, f"block{n}s{seed}")


def random_cactus(n: int, seed: int = 0, max_cycle: int = 6) -> Graph:
    """Connected cactus grown by hanging pendant edges and cycles on existing vertices."""
    _check(n >= 1 and max_cycle >= 3, "random_cactus needs n >= 1, max_cycle >= 3")
    rng = random.Random(seed)
    edges = []
    size = 1
    while size < n:
        attach = rng.randrange(size)
        room = n - size
        if room >= 2 and rng.random() < 0.6:
            length = rng.randint(3, min(max_cycle, room + 1))
            ring = [attach] + list(range(size, size + length - 1))
            size += length - 1
            edges.extend((ring[i], ring[(i + 1) % length]) for i in range(length))
        else:
            edges.append((attach, size))
            size += 1
    return Graph.from_edges(n, edges, f"cactus{n}s{seed}")


def random_p4sparse(n: int, seed: int = 0) -> Graph:
    """Random graph from the union / join / spider grammar (spider heads recurse)."""
    _check(n >= 1, "random_p4sparse needs n >= 1")
    rng = random.Random(seed)

    def build(size: int) -> Graph:
        if size == 1:
            return empty(1)
        ops = ["union", "join"] + (["spider"] * 2 if size >= 4 else [])
        op = rng.choice(ops)
        if op == "spider":
            k = rng.randint(2, size // 2)
            head = size - 2 * k
            base = spider(k, thick=rng.random() < 0.5)
            if head == 0:
                return base
            return spider_with_head(base, k, build(head))
        a = rng.randint(1, size - 1)
        left, right = build(a), build(size - a)
        return disjoint_union(left, right) if op == "union" else join(left, right)

    g = build(n)
    return Graph(g.n, g.adj, f"p4sparse{n}s{seed}")


def spider_with_head(base: Graph, k: int, head: Graph) -> Graph:
    """Attach ``head`` to a hub-less spider: head vertices join every clique vertex."""
    offset = base.n
    edges = base.edges() + [(offset + u, offset + v) for u, v in head.edges()]
    edges.extend((c, offset + r) for c in range(k) for r in range(head.n))
    return Graph.from_edges(base.n + head.n, edges)


# --- spec strings ---------------------------------------------------------


def _parse_args(text: str) -> tuple[list[str], dict[str, str]]:
    pos, kw = [], {}
    for tok in filter(None, (t.strip() for t in text.split(","))):
        if "=" in tok:
            k, v = tok.split("=", 1)
            kw[k.strip()] = v.strip()
        else:
            pos.append(tok)
    return pos, kw


def _ints(pos: list[str], count: int, kind: str) -> list[int]:
    if len(pos) < count:
        raise ValueError(f"{kind} needs {count} integer argument(s)")
    try:
        return [int(p) for p in pos[:count]]
    except ValueError:
        raise ValueError(f"{kind}: expected integers, got {pos[:count]}") from None


def _seed(kw: dict[str, str]) -> int:
    return int(kw.get("seed", 0))


GENERATORS: dict[str, Callable[[list[str], dict[str, str]], Graph]] = {
    "path": lambda p, kw: path(*_ints(p, 1, "path")),
    "cycle": lambda p, kw: cycle(*_ints(p, 1, "cycle")),
    "complete": lambda p, kw: complete(*_ints(p, 1, "complete")),
    "empty": lambda p, kw: empty(*_ints(p, 1, "empty")),
    "complete_bipartite": lambda p, kw: complete_bipartite(*_ints(p, 2, "complete_bipartite")),
    "star": lambda p, kw: star(*_ints(p, 1, "star")),
    "hn": lambda p, kw: hn(*_ints(p, 1, "hn")),
    "gmatch": lambda p, kw: gmatch(*_ints(p, 1, "gmatch")),
    "crown": lambda p, kw: crown(*_ints(p, 1, "crown")),
    "double_star": lambda p, kw: double_star(*_ints(p, 1, "double_star")),
    "caterpillar": lambda p, kw: caterpillar(*_ints(p, 2, "caterpillar")),
    "petersen": lambda p, kw: petersen(),
    "myciel": lambda p, kw: myciel(*_ints(p, 1, "myciel")),
    "random_tree": lambda p, kw: random_tree(*_ints(p, 1, "random_tree"), seed=_seed(kw)),
    "gnp": lambda p, kw: gnp(_ints(p, 1, "gnp")[0], float(p[1]) if len(p) > 1 else 0.5, seed=_seed(kw)),
    "block": lambda p, kw: random_block_graph(*_ints(p, 1, "block"), seed=_seed(kw)),
    "cactus": lambda p, kw: random_cactus(*_ints(p, 1, "cactus"), seed=_seed(kw)),
    "p4sparse": lambda p, kw: random_p4sparse(*_ints(p, 1, "p4sparse"), seed=_seed(kw)),
}


def _spider_spec(pos: list[str], kw: dict[str, str]) -> Graph:
    if not pos or pos[0] not in ("thin", "thick"):
        raise ValueError("spider spec is spider:thin|thick,k[,hub]")
    (k,) = _ints(pos[1:], 1, "spider")
    return spider(k, thick=pos[0] == "thick", hub="hub" in pos[2:] or kw.get("hub") == "1")


GENERATORS["spider"] = _spider_spec

ALIASES = {"random_block_graph": "block", "random_cactus": "cactus", "random": "gnp", "Hn": "hn", "Gmatch": "gmatch"}


def gen(spec: str) -> Graph:
    """Build a graph from a spec string such as ``hn:4`` or ``gnp:8,0.5,seed=3``."""
    kind, _, rest = spec.strip().partition(":")
    kind = ALIASES.get(kind, kind)
    if kind not in GENERATORS:
        raise ValueError(f"unknown generator {kind!r}; known: {', '.join(sorted(GENERATORS))}")
    pos, kw = _parse_args(rest)
    g = GENERATORS[kind](pos, kw)
    return Graph(g.n, g.adj, g.name or spec)
