"""0-1 programming models for z(G) and b*(G), LP-format I/O and a tiny exact solver.

Variables over the color set ``C = {1..m*(G)+1}``:

* ``x_v_c``: vertex ``v`` has color ``c``
* ``m_c``: color ``c`` is used
* ``z_v_c``: ``v`` is a b-vertex of color ``c``
* ``zeta_v_c``: ``v`` is a nice vertex of color ``c``

Rows carry the tag of the family they belong to, ``"2"`` to ``"12"``;
binarity is family 13. In the verbatim form the b-vertex family ``8`` and
the nice-vertex family ``10`` demand a neighbor of every color of ``C``, used
or not. The ``repaired``
variant relaxes the row for color ``d`` by ``1 - m_d`` so that unused colors
are not required.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from . import bounds
from .coloring import Coloring
from .graph import Graph

TAGS = ("2", "3", "4", "5", "6", "7", "8", "9", "10", "11", "12")

TAG_NOTES = {
    "2": "each vertex gets exactly one color",
    "3": "adjacent vertices differ; only used colors",
    "4": "a vertex only takes used colors",
    "5": "a used color has a vertex",
    "6": "Grundy: color c' needs a neighbor of each c < c'",
    "7": "used colors form a prefix",
    "8": "z_v_c = 1 only if v sees every other color",
    "9": "z_v_c = 1 only if v has color c",
    "10": "zeta_v_c = 1 only if v sees a b-vertex of every other color",
    "11": "a nice vertex is a b-vertex",
    "12": "some vertex is nice",
}


@dataclass
class Row:
    tag: str
    name: str
    coefs: dict[str, int]
    sense: str  # "<=", ">=", "="
    rhs: int

    def value(self, assignment: dict[str, int]) -> int:
        return sum(a * assignment.get(v, 0) for v, a in self.coefs.items())

    def satisfied(self, assignment: dict[str, int]) -> bool:
        lhs = self.value(assignment)
        if self.sense == "<=":
            return lhs <= self.rhs
        if self.sense == ">=":
            return lhs >= self.rhs
        return lhs == self.rhs


@dataclass
class IlpModel:
    target: str  # "z" or "bstar"
    repaired: bool
    n: int
    colors: int
    variables: list[str]
    objective: dict[str, int]
    rows: list[Row] = field(default_factory=list)

    def counts(self) -> dict[str, int]:
        out = {t: 0 for t in TAGS}
        for r in self.rows:
            out[r.tag] = out.get(r.tag, 0) + 1
        return out

    def check(self, assignment: dict[str, int]) -> list[Row]:
        """Rows violated by ``assignment`` (missing variables count as 0)."""
        bad = [r for r in self.rows if not r.satisfied(assignment)]
        return bad

    def decode(self, assignment: dict[str, int]) -> Coloring:
        cols = [0] * self.n
        for v in range(self.n):
            for c in range(1, self.colors + 1):
                if assignment.get(f"x_{v}_{c}", 0):
                    cols[v] = c
        return Coloring(tuple(cols))


def expected_counts(n: int, e: int, colors: int, target: str = "z") -> dict[str, int]:
    """Closed-form row counts per family."""
    k = colors
    return {
        "2": n,
        "3": e * k,
        "4": n * k,
        "5": k,
        "6": n * k * (k - 1) // 2 if target == "z" else 0,
        "7": k * (k - 1) // 2,
        "8": n * k * (k - 1),
        "9": n * k,
        "10": n * k * (k - 1),
        "11": n * k,
        "12": 1,
    }


def _build(g: Graph, target: str, repaired: bool, colors: int | None) -> IlpModel:
    if g.n == 0:
        raise ValueError("the model needs at least one vertex")
    k = bounds.m_star(g) + 1 if colors is None else colors
    if k < 1:
        raise ValueError("need at least one color")
    V, C = range(g.n), range(1, k + 1)
    x = lambda v, c: f"x_{v}_{c}"  # noqa: E731
    mv = lambda c: f"m_{c}"  # noqa: E731
    zv = lambda v, c: f"z_{v}_{c}"  # noqa: E731
    tv = lambda v, c: f"zeta_{v}_{c}"  # noqa: E731
    variables = ([x(v, c) for v in V for c in C] + [mv(c) for c in C]
                 + [zv(v, c) for v in V for c in C] + [tv(v, c) for v in V for c in C])
    model = IlpModel(target, repaired, g.n, k, variables, {mv(c): 1 for c in C})
    rows = model.rows

    def add(tag: str, name: str, coefs: dict[str, int], sense: str, rhs: int):
        rows.append(Row(tag, f"r{tag}_{name}", coefs, sense, rhs))

    for v in V:
        add("2", f"{v}", {x(v, c): 1 for c in C}, "=", 1)
    for u, v in g.edges():
        for c in C:
            add("3", f"{u}_{v}_{c}", {x(u, c): 1, x(v, c): 1, mv(c): -1}, "<=", 0)
    for v in V:
        for c in C:
            add("4", f"{v}_{c}", {x(v, c): 1, mv(c): -1}, "<=", 0)
    for c in C:
        coefs = {mv(c): 1}
        for v in V:
            coefs[x(v, c)] = -1
        add("5", f"{c}", coefs, "<=", 0)
    if target == "z":
        for v in V:
            for c in C:
                for c2 in C:
                    if c < c2:
                        coefs = {x(v, c2): 1}
                        for u in g.adj[v]:
                            coefs[x(u, c)] = -1
                        add("6", f"{v}_{c}_{c2}", coefs, "<=", 0)
    for c in C:
        for c2 in C:
            if c < c2:
                add("7", f"{c}_{c2}", {mv(c2): 1, mv(c): -1}, "<=", 0)
    for tag, lhs, rhs_var in (("8", zv, x), ("10", tv, zv)):
        for v in V:
            for c in C:
                for d in C:
                    if d == c:
                        continue
                    coefs = {lhs(v, c): 1}
                    for u in g.adj[v]:
                        coefs[rhs_var(u, d)] = -1
                    if repaired:
                        coefs[mv(d)] = 1
                        add(tag, f"{v}_{c}_{d}", coefs, "<=", 1)
                    else:
                        add(tag, f"{v}_{c}_{d}", coefs, "<=", 0)
        if tag == "8":
            for v in V:
                for c in C:
                    add("9", f"{v}_{c}", {zv(v, c): 1, x(v, c): -1}, "<=", 0)
    for v in V:
        for c in C:
            add("11", f"{v}_{c}", {tv(v, c): 1, zv(v, c): -1}, "<=", 0)
    add("12", "0", {tv(v, c): 1 for v in V for c in C}, ">=", 1)
    rows.sort(key=lambda r: int(r.tag))
    return model


def build_z_model(g: Graph, repaired: bool = True, colors: int | None = None) -> IlpModel:
    return _build(g, "z", repaired, colors)


def build_bstar_model(g: Graph, repaired: bool = True, colors: int | None = None) -> IlpModel:
    """The z-model without the Grundy family (6)."""
    return _build(g, "bstar", repaired, colors)


# ---------------------------------------------------------------- LP text


def _expr(coefs: dict[str, int]) -> str:
    parts = []
    for i, (v, a) in enumerate(coefs.items()):
        sign = "-" if a < 0 else "+"
        mag = abs(a)
        term = v if mag == 1 else f"{mag} {v}"
        parts.append((f"{sign} " if i or a < 0 else "") + term)
    return " ".join(parts)


def write_lp(model: IlpModel) -> str:
    """CPLEX LP text: objective, tagged rows, binaries."""
    variant = "repaired" if model.repaired else "verbatim"
    out = [
        f"\\ {model.target} model ({variant}), n={model.n}, colors={model.colors}",
        "Maximize",
        " obj: " + _expr(model.objective),
        "Subject To",
    ]
    tag = None
    for r in model.rows:
        if r.tag != tag:
            tag = r.tag
            out.append(f"\\ ({tag}) {TAG_NOTES[tag]}")
        out.append(f" {r.name}: {_expr(r.coefs)} {r.sense} {r.rhs}")
    out.append("Binary")
    for i in range(0, len(model.variables), 8):
        out.append(" " + " ".join(model.variables[i:i + 8]))
    out.append("End")
    return "\n".join(out) + "\n"


_TERM = re.compile(r"([+-])?\s*(\d+)?\s*([A-Za-z_][A-Za-z0-9_]*)")
_HEADER = re.compile(r"\\ (\w+) model \((repaired|verbatim)\), n=(\d+), colors=(\d+)")


def _parse_expr(text: str) -> dict[str, int]:
    coefs: dict[str, int] = {}
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse LP expression near {text[pos:pos + 20]!r}")
        sign = -1 if m.group(1) == "-" else 1
        mag = int(m.group(2)) if m.group(2) else 1
        coefs[m.group(3)] = coefs.get(m.group(3), 0) + sign * mag
        pos = m.end()
        while pos < len(text) and text[pos] == " ":
            pos += 1
    return coefs


def parse_lp(text: str) -> IlpModel:
    """Read back the subset of LP format that ``write_lp`` produces."""
    head = _HEADER.match(text)
    if not head:
        raise ValueError("missing model header comment")
    target, variant, n, k = head.group(1), head.group(2), int(head.group(3)), int(head.group(4))
    section = None
    objective: dict[str, int] = {}
    rows: list[Row] = []
    variables: list[str] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("\\"):
            continue
        low = line.lower()
        if low in ("maximize", "subject to", "binary", "end"):
            section = low
            continue
        name, _, body = line.partition(":")
        if section == "maximize":
            objective = _parse_expr(body)
        elif section == "subject to":
            m = re.match(r"(.*?)\s*(<=|>=|=)\s*(-?\d+)$", body.strip())
            if not m:
                raise ValueError(f"bad row: {line!r}")
            tag = name.strip()[1:].split("_")[0]
            rows.append(Row(tag, name.strip(), _parse_expr(m.group(1)), m.group(2), int(m.group(3))))
        elif section == "binary":
            variables.extend(line.split())
        else:
            raise ValueError(f"unexpected line: {line!r}")
    if section != "end":
        raise ValueError("missing End")
    return IlpModel(target, variant == "repaired", n, k, variables, objective, rows)


# ------------------------------------------------------------ tiny solver


@dataclass
class SolveResult:
    status: str  # "optimal", "infeasible" or "unknown"
    objective: int | None
    assignment: dict[str, int] | None
    nodes: int

    def to_json(self) -> dict:
        return {"status": self.status, "objective": self.objective, "nodes": self.nodes}


class _Budget(Exception):
    pass


def solve_tiny(model: IlpModel, limit: int = 2_000_000, max_vars: int = 400) -> SolveResult:
    """Exact optimum by enumeration, for validating the model on small graphs.

    The used colors are a prefix ``1..k`` (family 7), so ``k`` is tried from
    the top down. For fixed ``k`` the vertices are colored one at a time (family
    2) and every x/m row is checked against its best-case value. Once all x are
    fixed, the largest z and zeta satisfying their upper-bound rows is computed
    as a fixpoint, which is optimal for family 12. ``limit`` bounds the
    search nodes; running out gives status ``"unknown"``.
    """
    if len(model.variables) > max_vars:
        raise ValueError(f"{len(model.variables)} variables exceed the cap of {max_vars}")
    index = {v: i for i, v in enumerate(model.variables)}
    for r in model.rows:
        for v in r.coefs:
            if v not in index:
                raise ValueError(f"row {r.name} uses undeclared variable {v}")
    # normalize to sum(a*y) <= b
    norm: list[tuple[tuple[int, ...], tuple[int, ...], int]] = []
    for r in model.rows:
        ix = tuple(index[v] for v in r.coefs)
        co = tuple(r.coefs.values())
        if r.sense in ("<=", "="):
            norm.append((ix, co, r.rhs))
        if r.sense in (">=", "="):
            norm.append((ix, tuple(-a for a in co), -r.rhs))
    n, K = model.n, model.colors
    xi = [[index[f"x_{v}_{c}"] for c in range(1, K + 1)] for v in range(n)]
    mi = [index[f"m_{c}"] for c in range(1, K + 1)]
    soft = {i for v in model.variables if v.startswith(("z_", "zeta_")) for i in [index[v]]}
    hard_rows = [r for r in norm if not soft.intersection(r[0])]
    soft_rows = [r for r in norm if soft.intersection(r[0])]
    by_vertex: list[list[int]] = [[] for _ in range(n)]
    owner = {i: v for v in range(n) for i in xi[v]}
    for ri, (ix, _, _) in enumerate(hard_rows):
        for v in sorted({owner[i] for i in ix if i in owner}):
            by_vertex[v].append(ri)
    vals = [-1] * len(model.variables)
    nodes = 0

    def ok(ri: int) -> bool:
        ix, co, rhs = hard_rows[ri]
        s = 0
        for i, a in zip(ix, co):
            y = vals[i]
            if y < 0:
                if a < 0:
                    s += a
            else:
                s += a * y
        return s <= rhs

    def settle_soft() -> bool:
        for i in soft:
            vals[i] = 1
        changed = True
        while changed:
            changed = False
            for ix, co, rhs in soft_rows:
                s = sum(a * vals[i] for i, a in zip(ix, co))
                if s <= rhs:
                    continue
                drop = [i for i, a in zip(ix, co) if a > 0 and i in soft and vals[i] == 1]
                if not drop:
                    return False
                for i in drop:
                    vals[i] = 0
                changed = True
        return True

    order = sorted(range(n), key=lambda v: -len(by_vertex[v]))

    def dfs(pos: int, k: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > limit:
            raise _Budget
        if pos == n:
            if settle_soft():
                return True
            for i in soft:
                vals[i] = -1
            return False
        v = order[pos]
        for c in range(k):
            for j in range(K):
                vals[xi[v][j]] = 1 if j == c else 0
            if all(ok(ri) for ri in by_vertex[v]) and dfs(pos + 1, k):
                return True
        for j in range(K):
            vals[xi[v][j]] = -1
        return False

    try:
        for k in range(K, 0, -1):
            for j in range(K):
                vals[mi[j]] = 1 if j < k else 0
            if all(ok(ri) for ri in range(len(hard_rows))) and dfs(0, k):
                assignment = {name: vals[i] for name, i in index.items()}
                if model.check(assignment):  # pragma: no cover - defensive
                    raise AssertionError("solver produced an infeasible assignment")
                return SolveResult("optimal", sum(a * assignment[v] for v, a in model.objective.items()),
                                   assignment, nodes)
    except _Budget:
        return SolveResult("unknown", None, None, nodes)
    return SolveResult("infeasible", None, None, nodes)


# ------------------------------------------------------------ comparison


def solve_graph(g: Graph, target: str = "z", repaired: bool = True, limit: int = 2_000_000) -> SolveResult:
    build = build_z_model if target == "z" else build_bstar_model
    return solve_tiny(build(g, repaired), limit=limit)


def _verdict(res: SolveResult) -> int | str:
    return res.objective if res.status == "optimal" else res.status


def compare_models(graphs, limit: int = 2_000_000) -> dict:
    """Solve verbatim and repaired models next to the oracle values."""
    from .exact import oracle_bstar, oracle_z

    records = []
    for g in graphs:
        rec = {"graph": g.name or "", "n": g.n, "edges": [list(e) for e in g.edges()],
               "m_star": bounds.m_star(g),
               "oracle_z": oracle_z(g).value, "oracle_bstar": oracle_bstar(g).value}
        for target in ("z", "bstar"):
            for repaired in (False, True):
                key = f"{'repaired' if repaired else 'verbatim'}_{target}"
                rec[key] = _verdict(solve_graph(g, target, repaired, limit))
        records.append(rec)
    summary = {}
    for key, truth in (("verbatim_z", "oracle_z"), ("repaired_z", "oracle_z"),
                       ("verbatim_bstar", "oracle_bstar"), ("repaired_bstar", "oracle_bstar")):
        summary[key] = {
            "agree": sum(1 for r in records if r[key] == r[truth]),
            "infeasible": sum(1 for r in records if r[key] == "infeasible"),
            "unknown": sum(1 for r in records if r[key] == "unknown"),
            "other": sum(1 for r in records if r[key] not in (r[truth], "infeasible", "unknown")),
        }
    return {"graphs": len(records), "summary": summary, "records": records}
