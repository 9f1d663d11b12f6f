"""Degree-based upper bounds: Delta, Delta_2, m(G) and m*(G).

The chain these satisfy is ``z <= b* <= m* + 1 <= Delta_2 + 1 <= Delta + 1``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Iterable, Sequence

from .graph import Graph


def p_of(values: Sequence[int] | Iterable[int]) -> int:
    """Largest ``p`` such that at least ``p`` of the values are ``>= p``.

    Linear time: a counting sort whose buckets are capped at ``len(values)``.
    Capping is harmless because the answer never exceeds ``len(values)``.
    """
    vals = list(values)
    size = len(vals)
    if size == 0:
        return 0
    counts = [0] * (size + 1)
    for b in vals:
        counts[b if b < size else size] += 1
    acc = 0
    for p in range(size, 0, -1):
        acc += counts[p]
        if acc >= p:
            return p
    return 0


def m_star(g: Graph) -> int:
    """``max_u p({d(w) : w in N(u)})`` in O(n * Delta) total.

    The counting sort is inlined here; ``p_of`` stays the reference version.
    """
    deg = g.degrees
    best = 0
    for row in g.adj:
        size = len(row)
        if size <= best:
            continue
        counts = [0] * (size + 1)
        for w in row:
            d = deg[w]
            counts[d if d < size else size] += 1
        acc = 0
        for p in range(size, best, -1):
            acc += counts[p]
            if acc >= p:
                best = p
                break
    return best


def m_star_vertices(g: Graph) -> list[int]:
    """Vertices whose neighbor degrees attain ``m*``."""
    target = m_star(g)
    deg = g.degrees
    return [u for u, row in enumerate(g.adj) if p_of(deg[w] for w in row) == target]


def local_delta(g: Graph, u: int) -> int | None:
    """``max{d(v) : v in N(u), d(v) <= d(u)}``, or ``None`` when no neighbor qualifies."""
    deg = g.degrees
    du = deg[u]
    cands = [deg[v] for v in g.adj[u] if deg[v] <= du]
    return max(cands) if cands else None


def delta2(g: Graph) -> int:
    """Max of ``local_delta`` over vertices where it is defined; 0 for edgeless graphs."""
    deg = g.degrees
    best = 0
    for u, row in enumerate(g.adj):
        du = deg[u]
        for v in row:
            dv = deg[v]
            if best < dv <= du:
                best = dv
    return best


def m_of(g: Graph) -> int:
    """``max{i : d_i >= i - 1}`` over the non-increasing degree sequence."""
    best = 0
    for i, d in enumerate(sorted(g.degrees, reverse=True), start=1):
        if d >= i - 1:
            best = i
    return best


@dataclass(frozen=True)
class BoundsReport:
    n: int
    edges: int
    delta: int
    delta2: int
    m: int
    m_star: int
    degenerate: bool
    chain_ok: bool

    def chain(self) -> list[tuple[str, int]]:
        return [("m*+1", self.m_star + 1), ("Delta2+1", self.delta2 + 1), ("Delta+1", self.delta + 1)]

    def to_json(self) -> dict:
        return asdict(self)

    def describe(self) -> str:
        flag = " (edgeless: Delta2 reported as 0)" if self.degenerate else ""
        status = "ok" if self.chain_ok else "VIOLATED"
        return (
            f"n={self.n} m={self.edges} m(G)={self.m}\n"
            f"z <= b* <= m*+1={self.m_star + 1} <= Delta2+1={self.delta2 + 1} "
            f"<= Delta+1={self.delta + 1}  [{status}]{flag}"
        )


def bounds_report(g: Graph) -> BoundsReport:
    ms, d2, d = m_star(g), delta2(g), g.max_degree
    return BoundsReport(
        n=g.n,
        edges=g.num_edges,
        delta=d,
        delta2=d2,
        m=m_of(g),
        m_star=ms,
        degenerate=g.num_edges == 0,
        chain_ok=ms <= d2 <= d,
    )
