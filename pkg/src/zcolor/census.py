"""Canonical forms and an exhaustive census of small connected graphs.

Canonical labelling is individualization-refinement: color refinement by
neighbor-color multisets, branching on the first non-singleton cell, keeping
the smallest adjacency code over all leaves. Fine up to ~10 vertices.

Connected graphs on ``n`` vertices are produced by adding one vertex, with every
non-empty neighborhood, to each connected graph on ``n - 1`` vertices. Every
connected graph has a non-cut vertex, so nothing is missed; duplicates are
removed by canonical code.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .graph import Graph

# A001349: connected graphs on n unlabelled vertices
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080}


def _refine(masks: Sequence[int], colors: list[int]) -> list[int]:
    n = len(masks)
    ncolors = len(set(colors))
    while True:
        sigs = []
        for v in range(n):
            m = masks[v]
            nb = sorted(colors[w] for w in range(n) if m >> w & 1)
            sigs.append((colors[v], tuple(nb)))
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [rank[s] for s in sigs]
        if len(rank) == ncolors:
            return colors
        ncolors = len(rank)


def _code(masks: Sequence[int], colors: list[int]) -> int:
    n = len(masks)
    inv = [0] * n
    for v, c in enumerate(colors):
        inv[c] = v
    code = 0
    for i in range(n):
        row = masks[inv[i]]
        for j in range(i + 1, n):
            code = code << 1 | (row >> inv[j] & 1)
    return code


def _search(masks: Sequence[int], colors: list[int]) -> int:
    colors = _refine(masks, colors)
    n = len(masks)
    counts: dict[int, int] = {}
    for c in colors:
        counts[c] = counts.get(c, 0) + 1
    target = next((c for c in sorted(counts) if counts[c] > 1), None)
    if target is None:
        return _code(masks, colors)
    best = None
    for v in range(n):
        if colors[v] != target:
            continue
        child = [2 * c + 1 for c in colors]
        child[v] = 2 * target
        code = _search(masks, child)
        if best is None or code < best:
            best = code
    return best


def canonical_code(g: Graph) -> tuple[int, int]:
    """``(n, code)``, equal for two graphs iff they are isomorphic."""
    return g.n, _search(g.masks, [0] * g.n)


def from_code(n: int, code: int) -> Graph:
    edges = []
    pos = n * (n - 1) // 2 - 1
    for i in range(n):
        for j in range(i + 1, n):
            if code >> pos & 1:
                edges.append((i, j))
            pos -= 1
    return Graph.from_edges(n, edges)


@lru_cache(maxsize=None)
def _connected_codes(n: int) -> tuple[int, ...]:
    if n == 1:
        return (0,)
    found: set[int] = set()
    for code in _connected_codes(n - 1):
        base = from_code(n - 1, code).masks
        for sub in range(1, 1 << (n - 1)):
            masks = [m | ((sub >> v & 1) << (n - 1)) for v, m in enumerate(base)]
            masks.append(sub)
            found.add(_search(masks, [0] * n))
    return tuple(sorted(found))


def connected_graphs(n: int) -> list[Graph]:
    """All connected graphs on exactly ``n`` vertices, one per isomorphism class."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return [from_code(n, c) for c in _connected_codes(n)]


def connected_graphs_upto(n: int) -> list[Graph]:
    out = []
    for size in range(1, n + 1):
        out.extend(connected_graphs(size))
    return out
