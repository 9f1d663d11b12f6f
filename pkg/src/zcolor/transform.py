"""Constructive coloring procedures: First-Fit, Grundyfication, nice-class
promotion, the z-transformation, the iterated IZ heuristic and DSATUR.
"""

from __future__ import annotations

import heapq
import json
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .coloring import Coloring, is_grundy, is_proper, nice_vertices, verify_z
from .graph import Graph


@dataclass
class TraceStep:
    tag: str
    changes: list[tuple[int, int, int]]  # (vertex, before, after)

    def to_json(self) -> dict:
        return {"op": self.tag, "changes": [list(ch) for ch in self.changes]}


@dataclass
class TransformTrace:
    steps: list[TraceStep] = field(default_factory=list)

    @property
    def recolor_count(self) -> int:
        return sum(len(s.changes) for s in self.steps)

    def record(self, tag: str, before: Sequence[int], after: Sequence[int]):
        changes = [(v, a, b) for v, (a, b) in enumerate(zip(before, after)) if a != b]
        if changes:
            self.steps.append(TraceStep(tag, changes))

    def replay(self, start: Coloring) -> Coloring:
        cols = list(start.colors)
        for step in self.steps:
            for v, before, after in step.changes:
                if cols[v] != before:
                    raise ValueError(f"trace mismatch at vertex {v}: {cols[v]} != {before}")
                cols[v] = after
        return Coloring(tuple(cols))

    def to_jsonl(self) -> str:
        return "".join(json.dumps(s.to_json()) + "\n" for s in self.steps)


def _first_missing(seen: Iterable[int], skip: int = 0) -> int:
    s = set(seen)
    j = 1
    while j in s or j == skip:
        j += 1
    return j


def greedy(g: Graph, order: Sequence[int] | None = None) -> Coloring:
    """First-Fit: each vertex in ``order`` takes the least color unused by colored neighbors."""
    if order is None:
        order = range(g.n)
    order = list(order)
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertices")
    cols = [0] * g.n
    for v in order:
        cols[v] = _first_missing(cols[w] for w in g.adj[v])
    return Coloring(tuple(cols))


def _grundyfy_inplace(g: Graph, cols: list[int]):
    # bottom-up: once classes < j are Grundy, a class-j vertex only needs lower colors
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(cols):
        by_color.setdefault(c, []).append(v)
    for j in sorted(by_color):
        if j == 1:
            continue
        for v in by_color[j]:
            seen = {cols[w] for w in g.adj[v] if cols[w] < j}
            m = 1
            while m in seen:
                m += 1
            cols[v] = m


def grundyfy(g: Graph, c: Coloring) -> Coloring:
    """Grundyfy every class from the bottom up. No vertex's color increases."""
    if not is_proper(g, c):
        raise ValueError("grundyfy needs a proper coloring")
    cols = list(c.colors)
    _grundyfy_inplace(g, cols)
    return Coloring(tuple(cols))


def _promote_inplace(g: Graph, cols: list[int], u: int):
    k = max(cols)
    j = cols[u]
    if j == k:
        return
    for v, cv in enumerate(cols):
        if cv == j:
            cols[v] = k
        elif cv > j:
            cols[v] = cv - 1
    for v, cv in enumerate(cols):
        if cv == k:
            seen = {cols[w] for w in g.adj[v]}
            m = 1
            while m in seen:
                m += 1
            cols[v] = m


def promote_nice_class(g: Graph, c: Coloring, u: int) -> Coloring:
    """Move the class of nice vertex ``u`` to the top, shift higher classes down
    by one, then Grundyfy the new top class.

    The result is a Grundy coloring with the same ``k`` in which ``u`` is a nice
    vertex of color ``k``.
    """
    if not is_grundy(g, c):
        raise ValueError("promote_nice_class needs a Grundy coloring")
    if u not in nice_vertices(g, c):
        raise ValueError(f"vertex {u} is not nice")
    cols = list(c.colors)
    _promote_inplace(g, cols, u)
    return Coloring(tuple(cols))


def _b_flags(g: Graph, cols: Sequence[int], k: int) -> list[bool]:
    return [len({cols[w] for w in row}) == k - 1 for row in g.adj]


def z_transform(g: Graph, c: Coloring) -> tuple[Coloring, TransformTrace]:
    """Turn a proper ``k``-coloring into a z-coloring with at most ``k`` colors.

    Loop: Grundyfy; if a nice vertex exists, promote the one with the highest
    color (then smallest id) and stop. Otherwise the smallest vertex ``u`` of the
    top class has a color ``j`` none of whose ``u``-neighbors is a b-vertex;
    those neighbors move to a color they miss and ``u`` drops to ``j``. Each
    pass strictly decreases ``(k, |C_k|)`` lexicographically.
    """
    if not is_proper(g, c):
        raise ValueError("z_transform needs a proper coloring")
    trace = TransformTrace()
    if g.n == 0 or verify_z(g, c).z_valid:
        return c, trace
    cols = list(c.colors)
    while True:
        before = list(cols)
        _grundyfy_inplace(g, cols)
        trace.record("grundyfy", before, cols)
        k = max(cols, default=0)
        flags = _b_flags(g, cols, k)
        best = None
        for v in range(g.n):
            if not flags[v]:
                continue
            partner_colors = {cols[w] for w in g.adj[v] if flags[w]}
            if len(partner_colors) == k - 1 and (best is None or cols[v] > cols[best]):
                best = v
        if best is not None:
            before = list(cols)
            _promote_inplace(g, cols, best)
            trace.record("promote", before, cols)
            return Coloring(tuple(cols)), trace
        u = next(v for v in range(g.n) if cols[v] == k)
        for j in range(1, k):
            blockers = [w for w in g.adj[u] if cols[w] == j]
            if not any(flags[w] for w in blockers):
                break
        else:  # pragma: no cover - a top-class b-vertex that is not nice always has such j
            raise AssertionError("no releasable color")
        before = list(cols)
        for w in blockers:
            cols[w] = _first_missing((cols[x] for x in g.adj[w]), skip=j)
        cols[u] = j
        trace.record("release", before, cols)


def _class_order(c: Coloring, rng: random.Random, randomize: bool) -> list[int]:
    classes = [vs for _, vs in sorted(c.classes().items()) if vs]
    if randomize:
        rng.shuffle(classes)
    else:
        classes.sort(key=len, reverse=True)  # stable: ties keep color order
    return [v for cls in classes for v in cls]


def iz(g: Graph, budget: int = 50, seed: int = 0, order: Sequence[int] | None = None) -> Coloring:
    """Iterated z-coloring heuristic; returns the fewest-color coloring seen.

    Iteration 1 is First-Fit in ``order`` followed by ``z_transform``. Later
    iterations re-run First-Fit with the current classes concatenated
    (largest class first, every 5th iteration a seeded shuffle) and transform
    again. Keeping classes contiguous means the color count never grows.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    rng = random.Random(seed)
    best, _ = z_transform(g, greedy(g, order))
    cur = best
    for it in range(2, budget + 1):
        cur, _ = z_transform(g, greedy(g, _class_order(cur, rng, it % 5 == 0)))
        if cur.k < best.k:
            best = cur
    return best


def dsatur(g: Graph) -> Coloring:
    """Brelaz's DSATUR; ties broken by larger degree, then smaller id."""
    cols = [0] * g.n
    sat: list[set[int]] = [set() for _ in range(g.n)]
    deg = g.degrees
    heap = [(0, -deg[v], v) for v in range(g.n)]
    heapq.heapify(heap)
    while heap:
        s, _, v = heapq.heappop(heap)
        if cols[v] or -s != len(sat[v]):
            continue
        c = _first_missing(sat[v])
        cols[v] = c
        for w in g.adj[v]:
            if not cols[w] and c not in sat[w]:
                sat[w].add(c)
                heapq.heappush(heap, (-len(sat[w]), -deg[w], w))
    return Coloring(tuple(cols))
