"""Colorings and the predicates that classify them.

A b-vertex sees every color other than its own among its neighbors, always
relative to ``k``, the largest color of the whole coloring. A nice vertex is a
b-vertex that has, for every other color, a neighbor of that color which is
itself a b-vertex. A z-coloring is a Grundy coloring with a nice vertex of color
``k``; a b*-coloring only asks for properness plus that nice vertex.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import Graph


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if any(c < 1 for c in self.colors):
            raise ValueError("colors must be positive integers")

    @property
    def k(self) -> int:
        return max(self.colors, default=0)

    @property
    def used(self) -> int:
        return len(set(self.colors))

    @property
    def surjective(self) -> bool:
        return self.used == self.k

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {c: [] for c in range(1, self.k + 1)}
        for v, c in enumerate(self.colors):
            out[c].append(v)
        return out

    def recolor(self, changes: dict[int, int]) -> "Coloring":
        cols = list(self.colors)
        for v, c in changes.items():
            cols[v] = c
        return Coloring(tuple(cols))

    def to_json(self) -> dict:
        return {"k": self.k, "colors": list(self.colors)}

    @classmethod
    def from_json(cls, data: dict | str) -> "Coloring":
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, dict) or "colors" not in data:
            raise ValueError("coloring JSON needs a 'colors' list")
        col = cls(tuple(data["colors"]))
        if "k" in data and int(data["k"]) != col.k:
            raise ValueError(f"declared k={data['k']} but max color is {col.k}")
        return col


@dataclass(frozen=True)
class ZWitness:
    nice: int
    partners: dict[int, int] = field(hash=False)

    def to_json(self) -> dict:
        return {"nice": self.nice, "partners": {str(j): v for j, v in sorted(self.partners.items())}}


@dataclass
class VerifyReport:
    proper: bool
    grundy: bool
    b_vertices: dict[int, list[int]]
    nice_vertices: list[int]
    z_valid: bool
    bstar_valid: bool
    witness: ZWitness | None
    witnesses: dict[int, ZWitness]
    k: int

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "proper": self.proper,
            "grundy": self.grundy,
            "z_valid": self.z_valid,
            "bstar_valid": self.bstar_valid,
            "b_vertices": {str(c): vs for c, vs in sorted(self.b_vertices.items())},
            "nice_vertices": self.nice_vertices,
            "witness": self.witness.to_json() if self.witness else None,
            "witnesses": [w.to_json() for _, w in sorted(self.witnesses.items())],
        }


def _check_total(g: Graph, c: Coloring):
    if len(c) != g.n:
        raise ValueError(f"coloring covers {len(c)} vertices, graph has {g.n}")


def _neighbor_colors(g: Graph, c: Coloring) -> list[set[int]]:
    cols = c.colors
    return [{cols[w] for w in row} for row in g.adj]


def is_proper(g: Graph, c: Coloring) -> bool:
    _check_total(g, c)
    cols = c.colors
    return all(cols[u] != cols[v] for u, row in enumerate(g.adj) for v in row if u < v)


def _grundy_ok(seen: list[set[int]], cols: Sequence[int]) -> bool:
    for v, cv in enumerate(cols):
        if cv > 1 and not all(j in seen[v] for j in range(1, cv)):
            return False
    return True


def is_grundy(g: Graph, c: Coloring) -> bool:
    """Every vertex of color ``j`` has neighbors of all colors ``1..j-1``."""
    if not is_proper(g, c):
        raise ValueError("is_grundy needs a proper coloring")
    return _grundy_ok(_neighbor_colors(g, c), c.colors)


def _b_flags(seen: list[set[int]], cols: Sequence[int], k: int) -> list[bool]:
    # proper coloring: own color never in seen, so "all others" means k-1 distinct
    return [len(s) == k - 1 for s in seen] if k else []


def b_vertices(g: Graph, c: Coloring) -> dict[int, set[int]]:
    """b-vertices of each color ``1..k`` (empty sets for colors without any)."""
    if not is_proper(g, c):
        raise ValueError("b_vertices needs a proper coloring")
    k = c.k
    flags = _b_flags(_neighbor_colors(g, c), c.colors, k)
    out: dict[int, set[int]] = {j: set() for j in range(1, k + 1)}
    for v, ok in enumerate(flags):
        if ok:
            out[c.colors[v]].add(v)
    return out


def _nice_from_flags(g: Graph, cols: Sequence[int], k: int, flags: list[bool]) -> dict[int, ZWitness]:
    out = {}
    for u, row in enumerate(g.adj):
        if not flags[u]:
            continue
        partners: dict[int, int] = {}
        for w in row:
            if flags[w] and cols[w] not in partners:
                partners[cols[w]] = w
        if len(partners) == k - 1:
            out[u] = ZWitness(u, dict(sorted(partners.items())))
    return out


def nice_vertices(g: Graph, c: Coloring) -> dict[int, ZWitness]:
    """Nice vertices mapped to a witness (smallest-id b-vertex partner per color)."""
    if not is_proper(g, c):
        raise ValueError("nice_vertices needs a proper coloring")
    k = c.k
    flags = _b_flags(_neighbor_colors(g, c), c.colors, k)
    return _nice_from_flags(g, c.colors, k, flags)


def verify_z(g: Graph, c: Coloring) -> VerifyReport:
    """Full classification of ``c``; failures are report fields, never exceptions."""
    _check_total(g, c)
    k = c.k
    proper = is_proper(g, c)
    if not proper:
        return VerifyReport(False, False, {}, [], False, False, None, {}, k)
    seen = _neighbor_colors(g, c)
    grundy = _grundy_ok(seen, c.colors)
    flags = _b_flags(seen, c.colors, k)
    bsets: dict[int, list[int]] = {j: [] for j in range(1, k + 1)}
    for v, ok in enumerate(flags):
        if ok:
            bsets[c.colors[v]].append(v)
    nice = _nice_from_flags(g, c.colors, k, flags)
    top = [u for u in sorted(nice) if c.colors[u] == k]
    witness = nice[top[0]] if top else None
    return VerifyReport(
        proper=True,
        grundy=grundy,
        b_vertices=bsets,
        nice_vertices=sorted(nice),
        z_valid=grundy and bool(top),
        bstar_valid=bool(top),
        witness=witness,
        witnesses=nice,
        k=k,
    )


def min_available(g: Graph, cols: Sequence[int], v: int) -> int:
    seen = {cols[w] for w in g.adj[v]}
    j = 1
    while j in seen:
        j += 1
    return j


def grundyfy_class(g: Graph, c: Coloring, j: int) -> Coloring:
    """Move every vertex of color ``j`` to the smallest color missing around it.

    Colors below ``j`` must already form a Grundy coloring among themselves.
    The class is independent, so its vertices move without affecting each other.
    """
    if not is_proper(g, c):
        raise ValueError("grundyfy_class needs a proper coloring")
    cols = c.colors
    seen = _neighbor_colors(g, c)
    for v, cv in enumerate(cols):
        if cv < j and any(i not in seen[v] for i in range(1, cv)):
            raise ValueError(f"classes below {j} are not Grundy (vertex {v})")
    changes = {}
    for v, cv in enumerate(cols):
        if cv == j:
            m = min_available(g, cols, v)
            if m != j:
                changes[v] = m
    return c.recolor(changes) if changes else c


def rename_to_top(c: Coloring, u: int) -> Coloring:
    """Swap the color of ``u`` with the top color ``k``.

    Properness and the b-vertex sets are invariant under this renaming, so a
    proper coloring with a nice vertex ``u`` becomes a b*-coloring.
    """
    a, k = c.colors[u], c.k
    if a == k:
        return c
    swap = {a: k, k: a}
    return Coloring(tuple(swap.get(x, x) for x in c.colors))


def relabel_colors(c: Coloring, mapping: dict[int, int]) -> Coloring:
    return Coloring(tuple(mapping.get(x, x) for x in c.colors))


def coloring_from_classes(n: int, classes: Iterable[Iterable[int]]) -> Coloring:
    """Classes listed bottom-up get colors ``1, 2, ...``."""
    cols = [0] * n
    for j, cls in enumerate(classes, start=1):
        for v in cls:
            cols[v] = j
    if 0 in cols:
        raise ValueError("classes do not cover every vertex")
    return Coloring(tuple(cols))
