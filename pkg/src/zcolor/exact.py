"""Exhaustive oracles for chi, Grundy, b, b*, z and z' on small graphs, and
checkers for the structural claims built on them.

Colorings are enumerated as partitions of ``V`` into independent sets
(restricted-growth order). Whether a vertex is a b-vertex, and whether a nice
vertex exists, depends only on the partition, not on which class gets which
color. Grundy-ness does depend on the labelling, and is decided per partition
by peeling classes from the bottom: a class can sit lowest iff every other
remaining class dominates it (each of their vertices has a neighbor in it).

``pruned=False`` switches every oracle to plain enumeration of all labelled
colorings checked with the predicates in :mod:`zcolor.coloring`; this
independent route exists to cross-check the partition engine.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator

from . import bounds
from .census import canonical_code
from .coloring import Coloring, ZWitness, is_grundy, is_proper, nice_vertices, verify_z, b_vertices
from .graph import Graph, ball, disjoint_union, g_plus, girth, induced_subgraph

DEFAULT_LIMIT = 10
INVARIANTS = ("chi", "grundy", "b", "bstar", "z", "zprime")


class OracleLimitError(ValueError):
    pass


class OracleTimeout(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleResult:
    value: int
    witness: Coloring | None
    explored: int
    zwitness: ZWitness | None = None


@dataclass(frozen=True)
class Profile:
    chi: int
    grundy: int
    b: int
    bstar: int
    z: int
    zprime: int

    def as_dict(self) -> dict[str, int]:
        return {name: getattr(self, name) for name in INVARIANTS}


# --- partition engine -----------------------------------------------------


def _partitions(masks: tuple[int, ...], k: int | None = None) -> Iterator[list[int]]:
    """Proper partitions as lists of class bitmasks; exactly ``k`` classes if given.

    The yielded list is reused; copy it to keep it.
    """
    n = len(masks)
    classes: list[int] = []

    def rec(v: int):
        if v == n:
            if k is None or len(classes) == k:
                yield classes
            return
        if k is not None and len(classes) + (n - v) < k:
            return
        bit = 1 << v
        m = masks[v]
        for i in range(len(classes)):
            if not classes[i] & m:
                classes[i] |= bit
                yield from rec(v + 1)
                classes[i] ^= bit
        if k is None or len(classes) < k:
            classes.append(bit)
            yield from rec(v + 1)
            classes.pop()

    if n == 0:
        if not k:
            yield classes
        return
    yield from rec(0)


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass
class _Analysis:
    k: int
    b_classes: list[int]  # per class, bitmask of its b-vertices
    nice: list[int]  # per class, bitmask of its nice vertices
    dom: list[int]  # per class, bitmask of classes it dominates (itself included)


def _analyze(masks: tuple[int, ...], classes: list[int]) -> _Analysis:
    k = len(classes)
    full = (1 << k) - 1
    bcls = [0] * k
    dom = [full] * k
    for i, cm in enumerate(classes):
        own = 1 << i
        for v in _bits(cm):
            m = masks[v]
            h = own
            for j, cj in enumerate(classes):
                if m & cj:
                    h |= 1 << j
            if h == full:
                bcls[i] |= 1 << v
            dom[i] &= h
    nice = [0] * k
    for i in range(k):
        for v in _bits(bcls[i]):
            m = masks[v]
            if all(m & bcls[j] for j in range(k) if j != i):
                nice[i] |= 1 << v
    return _Analysis(k, bcls, nice, dom)


def _grundy_order(dom: list[int], remaining: int) -> list[int] | None:
    """Bottom-up class order in which each class dominates all below, or None."""
    order = []
    while remaining:
        cand = remaining
        for q in _bits(remaining):
            cand &= dom[q]
        if not cand:
            return None
        p = (cand & -cand).bit_length() - 1
        order.append(p)
        remaining ^= 1 << p
    return order


def _z_order(a: _Analysis) -> list[int] | None:
    full = (1 << a.k) - 1
    for t in range(a.k):
        if a.nice[t] and a.dom[t] == full:
            rest = _grundy_order(a.dom, full ^ (1 << t))
            if rest is not None:
                return rest + [t]
    return None


def _coloring(n: int, classes: list[int], order: list[int]) -> Coloring:
    cols = [0] * n
    for color, idx in enumerate(order, start=1):
        for v in _bits(classes[idx]):
            cols[v] = color
    return Coloring(tuple(cols))


def _first_nice(a: _Analysis) -> tuple[int, int]:
    i = next(i for i in range(a.k) if a.nice[i])
    return i, (a.nice[i] & -a.nice[i]).bit_length() - 1


def _evaluate(name: str, g: Graph, classes: list[int]) -> tuple[Coloring, ZWitness | None] | None:
    masks = g.masks
    k = len(classes)
    if name == "chi":
        return _coloring(g.n, classes, list(range(k))), None
    a = _analyze(masks, classes)
    if name == "grundy":
        order = _grundy_order(a.dom, (1 << k) - 1)
        return (_coloring(g.n, classes, order), None) if order else None
    if name == "b":
        if all(a.b_classes):
            return _coloring(g.n, classes, list(range(k))), None
        return None
    if name == "bstar":
        if not any(a.nice):
            return None
        i, _ = _first_nice(a)
        order = [j for j in range(k) if j != i] + [i]
        c = _coloring(g.n, classes, order)
    elif name == "z":
        order = _z_order(a)
        if order is None:
            return None
        c = _coloring(g.n, classes, order)
    elif name == "zprime":
        if not any(a.nice):
            return None
        order = _grundy_order(a.dom, (1 << k) - 1)
        if order is None:
            return None
        c = _coloring(g.n, classes, order)
    else:
        raise ValueError(f"unknown invariant {name!r}")
    nice = nice_vertices(g, c)
    top = [u for u in sorted(nice) if c[u] == c.k] or sorted(nice)
    return c, nice[top[0]]


def _default_upper(name: str, g: Graph) -> int:
    if name in ("bstar", "z", "zprime"):
        return bounds.m_star(g) + 1
    if name == "grundy":
        return bounds.delta2(g) + 1
    if name == "b":
        return bounds.m_of(g)
    return g.n


def _guard(g: Graph, limit: int | None):
    cap = DEFAULT_LIMIT if limit is None else limit
    if g.n > cap:
        raise OracleLimitError(f"graph has {g.n} vertices, oracle limit is {cap}")


def oracle(
    name: str,
    g: Graph,
    *,
    limit: int | None = None,
    upper: int | None = None,
    pruned: bool = True,
    timeout: float | None = None,
) -> OracleResult:
    """Exact value of invariant ``name`` (one of ``INVARIANTS``).

    Maximizing invariants try ``k`` from ``upper`` downwards (default: the
    matching degree bound, e.g. ``m* + 1`` for b* and z) and stop at the first
    ``k`` that admits a witness; chi goes upwards from 1.
    """
    if name not in INVARIANTS:
        raise ValueError(f"unknown invariant {name!r}")
    _guard(g, limit)
    if g.n == 0:
        return OracleResult(0, Coloring(()), 0)
    if not pruned:
        return _oracle_unpruned(name, g, upper)
    deadline = None if timeout is None else time.monotonic() + timeout
    top = min(g.n, _default_upper(name, g) if upper is None else upper)
    ks = range(1, g.n + 1) if name == "chi" else range(top, 0, -1)
    explored = 0
    for k in ks:
        for classes in _partitions(g.masks, k):
            explored += 1
            if deadline is not None and explored % 4096 == 0 and time.monotonic() > deadline:
                raise OracleTimeout(f"{name} oracle exceeded {timeout}s")
            hit = _evaluate(name, g, classes)
            if hit is not None:
                return OracleResult(k, hit[0], explored, hit[1])
    raise AssertionError(f"no {name} coloring found below {top}")  # pragma: no cover


def _unpruned_ok(name: str, g: Graph, c: Coloring) -> bool:
    if not is_proper(g, c):
        return False
    if name == "chi":
        return c.surjective
    if name == "grundy":
        return is_grundy(g, c)
    if name == "b":
        return all(b_vertices(g, c).values()) and c.surjective
    rep = verify_z(g, c)
    if name == "bstar":
        return rep.bstar_valid
    if name == "z":
        return rep.z_valid
    return rep.grundy and bool(rep.nice_vertices)


def _oracle_unpruned(name: str, g: Graph, upper: int | None) -> OracleResult:
    top = g.n if upper is None else min(upper, g.n)
    ks = range(1, g.n + 1) if name == "chi" else range(top, 0, -1)
    explored = 0
    for k in ks:
        for cols in itertools.product(range(1, k + 1), repeat=g.n):
            explored += 1
            c = Coloring(cols)
            if c.k == k and _unpruned_ok(name, g, c):
                rep = verify_z(g, c)
                w = rep.witness or (next(iter(rep.witnesses.values())) if rep.witnesses else None)
                return OracleResult(k, c, explored, w if name in ("bstar", "z", "zprime") else None)
    raise AssertionError("unreachable")  # pragma: no cover


def oracle_chromatic(g: Graph, **kw) -> OracleResult:
    return oracle("chi", g, **kw)


def oracle_grundy(g: Graph, **kw) -> OracleResult:
    return oracle("grundy", g, **kw)


def oracle_b(g: Graph, **kw) -> OracleResult:
    return oracle("b", g, **kw)


def oracle_bstar(g: Graph, **kw) -> OracleResult:
    return oracle("bstar", g, **kw)


def oracle_z(g: Graph, **kw) -> OracleResult:
    return oracle("z", g, **kw)


def oracle_zprime(g: Graph, **kw) -> OracleResult:
    return oracle("zprime", g, **kw)


def oracle_clique(g: Graph) -> int:
    """Clique number by plain Bron-Kerbosch with pivoting on bitmasks."""
    masks = g.masks
    best = 0

    def expand(size: int, cand: int, excl: int):
        nonlocal best
        if not cand and not excl:
            best = max(best, size)
            return
        if size + bin(cand).count("1") <= best:
            return
        pivot = max(_bits(cand | excl), key=lambda v: bin(cand & masks[v]).count("1"))
        for v in list(_bits(cand & ~masks[pivot])):
            expand(size + 1, cand & masks[v], excl & masks[v])
            cand &= ~(1 << v)
            excl |= 1 << v

    expand(0, (1 << g.n) - 1, 0)
    return best


# --- all invariants in one pass -------------------------------------------


def _profile_masks(masks: tuple[int, ...]) -> Profile:
    n = len(masks)
    if n == 0:
        return Profile(0, 0, 0, 0, 0, 0)
    chi = n
    grundy = b = bstar = z = zprime = 0
    for classes in _partitions(masks):
        k = len(classes)
        if k < chi:
            chi = k
        if k <= b and k <= z:
            continue  # z is the smallest of grundy, bstar, zprime: nothing can improve
        a = _analyze(masks, classes)
        full = (1 << k) - 1
        has_nice = any(a.nice)
        if k > b and all(a.b_classes):
            b = k
        if k > bstar and has_nice:
            bstar = k
        if k > grundy or k > zprime or k > z:
            if _grundy_order(a.dom, full) is not None:
                if k > grundy:
                    grundy = k
                if has_nice and k > zprime:
                    zprime = k
                if has_nice and k > z and _z_order(a) is not None:
                    z = k
    return Profile(chi, grundy, b, bstar, z, zprime)


def oracle_profile(g: Graph, limit: int | None = None) -> Profile:
    """Every invariant from a single enumeration, with no degree-bound pruning."""
    _guard(g, limit)
    return _profile_masks(g.masks)


@lru_cache(maxsize=200_000)
def _profile_cached(n: int, code: int) -> Profile:
    from .census import from_code

    return _profile_masks(from_code(n, code).masks)


def profile_canonical(g: Graph, limit: int | None = None) -> Profile:
    """``oracle_profile`` memoized on the isomorphism class of ``g``."""
    _guard(g, limit)
    return _profile_cached(*canonical_code(g))


# --- structural checks ----------------------------------------------------


def zprime_and_z(g: Graph, limit: int | None = None) -> tuple[int, int]:
    p = oracle_profile(g, limit)
    return p.zprime, p.z


def check_zprime_eq_z(g: Graph, limit: int | None = None) -> bool:
    zp, z = zprime_and_z(g, limit)
    return zp == z


def check_disjoint_union(g1: Graph, g2: Graph, limit: int | None = None) -> bool:
    """z and b* of the union equal the max over the parts."""
    u = disjoint_union(g1, g2)
    pu, p1, p2 = (oracle_profile(h, limit) for h in (u, g1, g2))
    return pu.z == max(p1.z, p2.z) and pu.bstar == max(p1.bstar, p2.bstar)


@dataclass(frozen=True)
class LocalityReport:
    z: int
    z_local: int  # max_u z(G+(u))
    bstar: int
    bstar_local: int  # max_u b*(G[B(u,2)])

    @property
    def holds(self) -> bool:
        return self.z <= self.z_local and self.bstar <= self.bstar_local


def locality_report(g: Graph, limit: int | None = None, profile: Callable[..., Profile] | None = None) -> LocalityReport:
    prof = profile or oracle_profile
    whole = prof(g, limit)
    z_local = bstar_local = 0
    for u in range(g.n):
        h, _ = g_plus(g, u)
        z_local = max(z_local, prof(h, limit).z)
        h2, _ = induced_subgraph(g, ball(g, u, 2).members)
        bstar_local = max(bstar_local, prof(h2, limit).bstar)
    return LocalityReport(whole.z, z_local, whole.bstar, bstar_local)


def check_locality(g: Graph, limit: int | None = None) -> bool:
    return locality_report(g, limit).holds


def check_monotonic(g: Graph, limit: int = 8) -> tuple[bool, bool]:
    """(z-monotone, b*-monotone): values never rise when a vertex is deleted from
    any induced subgraph. Single-vertex steps suffice by transitivity."""
    _guard(g, limit)
    n = g.n
    values: dict[int, tuple[int, int]] = {0: (0, 0)}
    for sub in sorted(range(1, 1 << n), key=lambda s: bin(s).count("1")):
        h, _ = induced_subgraph(g, [v for v in range(n) if sub >> v & 1])
        p = _profile_cached(*canonical_code(h))
        values[sub] = (p.z, p.bstar)
    z_ok = bstar_ok = True
    for sub, (z, bs) in values.items():
        for v in range(n):
            if sub >> v & 1:
                zs, bss = values[sub ^ (1 << v)]
                z_ok &= zs <= z
                bstar_ok &= bss <= bs
    return z_ok, bstar_ok


def monotonicity_violation(g: Graph, which: str = "bstar", limit: int = 8) -> tuple[list[int], list[int]] | None:
    """A pair (vertex set, vertex set minus one vertex) where the value rises, if any."""
    _guard(g, limit)
    n = g.n
    idx = 0 if which == "z" else 1

    def val(sub: int) -> int:
        if not sub:
            return 0
        h, _ = induced_subgraph(g, [v for v in range(n) if sub >> v & 1])
        p = _profile_cached(*canonical_code(h))
        return (p.z, p.bstar)[idx]

    for sub in range(1, 1 << n):
        base = val(sub)
        for v in range(n):
            if sub >> v & 1 and val(sub ^ (1 << v)) > base:
                members = [w for w in range(n) if sub >> w & 1]
                return members, [w for w in members if w != v]
    return None


@dataclass(frozen=True)
class TreeLocality:
    value: int  # max_u z(G+(u)), an upper bound on z(G)
    per_vertex: dict[int, int]


def local_tree_z(g: Graph, limit: int | None = None) -> TreeLocality:
    """``max_u z(G+(u))`` for graphs of girth at least ``2 * Delta + 4``.

    That girth makes every ``G+(u)`` an induced tree; each tree is solved with
    the exhaustive oracle, so ``limit`` caps the tree size rather than ``g``.
    """
    if g.n and girth(g) < 2 * g.max_degree + 4:
        raise ValueError(f"girth {girth(g)} is below 2*Delta+4 = {2 * g.max_degree + 4}")
    per_vertex = {}
    for u in range(g.n):
        h, _ = g_plus(g, u)
        if h.num_edges != h.n - 1:  # pragma: no cover - implied by the girth bound
            raise AssertionError(f"G+({u}) is not a tree")
        per_vertex[u] = profile_canonical(h, limit).z
    return TreeLocality(max(per_vertex.values(), default=0), per_vertex)
