"""Critical-graph constructions: edge join, adjoining, and explicit families."""

from __future__ import annotations

from dataclasses import dataclass, field

from .canon import automorphism_orbits, canonical_form
from .criticality import minor_critical_witness
from .exceptions import CapacityError, GraphInputError, InvariantViolation, SpecValidationError
from .graph import (
    MAX_ORDER,
    Graph,
    check_graph,
    check_vertex,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
)
from .graph6 import emit_graph6
from .solver import td
from .uniqueness import is_1_unique_graph

#: Constructed graphs up to this order get their tree-depth checked by default.
VERIFY_MAX_N = 20


def edge_join(G: Graph, H: Graph, u: int, v: int) -> Graph:
    """``G + H`` plus the edge joining ``u`` in G to ``v`` in H."""
    check_vertex(G, u)
    check_vertex(H, v)
    J = disjoint_union(G, H)
    rows = list(J.adj)
    w = v + G.n
    rows[u] |= 1 << w
    rows[w] |= 1 << u
    return Graph.from_adjacency(rows)


@dataclass(frozen=True)
class ConstructionSpec:
    """Host graph H plus one ``(L_i, w_i)`` attachment per host vertex ``i``.

    The attachments are identified with the host vertices: ``w_i`` in ``L_i``
    becomes host vertex ``i``.
    """

    host: Graph
    attachments: tuple

    def __init__(self, host, attachments):
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "attachments", tuple((L, w) for L, w in attachments))

    def structural_problems(self) -> list[str]:
        problems = []
        if not isinstance(self.host, Graph) or self.host.n == 0:
            return ["host must be a non-empty Graph"]
        if len(self.attachments) != self.host.n:
            problems.append(
                f"need exactly one attachment per host vertex: host has {self.host.n}, "
                f"got {len(self.attachments)}")
        for i, (L, w) in enumerate(self.attachments):
            if not isinstance(L, Graph) or L.n == 0:
                problems.append(f"attachment {i} is not a non-empty Graph")
            elif not isinstance(w, int) or not 0 <= w < L.n:
                problems.append(f"attachment {i}: vertex {w!r} out of range for order {L.n}")
        if not problems:
            depths = {td(L) for L, _ in self.attachments}
            if len(depths) > 1:
                problems.append(f"attachments must share one tree-depth, got {sorted(depths)}")
            order = self.order()
            if order > MAX_ORDER:
                problems.append(f"constructed order {order} exceeds {MAX_ORDER}")
        return problems

    def order(self) -> int:
        return self.host.n + sum(L.n - 1 for L, _ in self.attachments)

    @property
    def s(self) -> int:
        return td(self.host)

    @property
    def r(self) -> int:
        return td(self.attachments[0][0]) - 1


def _build(spec: ConstructionSpec) -> Graph:
    q = spec.host.n
    edges = list(spec.host.edges())
    nxt = q
    for i, (L, w) in enumerate(spec.attachments):
        new = {w: i}
        for x in range(L.n):
            if x != w:
                new[x] = nxt
                nxt += 1
        edges.extend((new[a], new[b]) for a, b in L.edges())
    return Graph(nxt, edges)


def adjoin(spec: ConstructionSpec, verify: bool | None = None) -> Graph:
    """Identify ``w_i`` of each attachment with host vertex ``i``.

    Host vertices keep indices ``0..q-1``; the remaining vertices of each
    attachment follow in block order. The host must be critical and all
    attachments critical with a common tree-depth ``r + 1``. The result's
    tree-depth is checked to be ``r + s`` when ``verify`` is true, which is the
    default up to order 20.
    """
    problems = spec.structural_problems()
    if not problems:
        if minor_critical_witness(spec.host) is not None:
            problems.append("host is not minor-critical")
        for i, (L, _) in enumerate(spec.attachments):
            if minor_critical_witness(L) is not None:
                problems.append(f"attachment {i} is not minor-critical")
    if problems:
        if any("exceeds" in p for p in problems):
            raise CapacityError("; ".join(problems))
        raise SpecValidationError(problems)
    G = _build(spec)
    if verify is None:
        verify = G.n <= VERIFY_MAX_N
    if verify:
        expected = spec.r + spec.s
        got = td(G)
        if got != expected:
            raise InvariantViolation(f"adjoined graph has td {got}, expected r+s = {expected}")
    return G


@dataclass
class ConstructionReport:
    """Hypotheses on the parts and conclusions checked on the adjoined graph."""

    r: int
    s: int
    host_critical: bool
    host_one_unique: bool
    attachments_critical: list
    attachments_one_unique: list
    host_order_ok: bool
    attachments_order_ok: list
    graph6: str | None = None
    order: int | None = None
    td: int | None = None
    minor_critical: bool | None = None
    one_unique: bool | None = None
    order_bound_ok: bool | None = None
    problems: list = field(default_factory=list)

    @property
    def hypotheses_hold(self) -> bool:
        return (self.host_critical and self.host_one_unique
                and all(self.attachments_critical) and all(self.attachments_one_unique))

    @property
    def ok(self) -> bool:
        return not self.problems

    def to_dict(self) -> dict:
        d = dict(self.__dict__)
        d["hypotheses_hold"] = self.hypotheses_hold
        d["ok"] = self.ok
        return d


def verify_construction(spec: ConstructionSpec) -> ConstructionReport:
    """Check the adjoining guarantees on one construction.

    Part hypotheses are computed, never assumed, and failures are listed in
    ``problems``. Conclusions are asserted only where their hypotheses hold:
    td = r + s needs critical parts; criticality and 1-uniqueness also need
    1-unique parts; the order bound also needs both part order bounds.
    """
    problems = spec.structural_problems()
    if problems:
        raise SpecValidationError(problems)
    s, r = spec.s, spec.r
    atts = [L for L, _ in spec.attachments]
    rep = ConstructionReport(
        r=r,
        s=s,
        host_critical=minor_critical_witness(spec.host) is None,
        host_one_unique=is_1_unique_graph(spec.host),
        attachments_critical=[minor_critical_witness(L) is None for L in atts],
        attachments_one_unique=[is_1_unique_graph(L) for L in atts],
        host_order_ok=spec.host.n <= 2 ** (s - 1),
        attachments_order_ok=[L.n <= 2 ** r for L in atts],
    )
    if not rep.host_critical:
        rep.problems.append("host is not minor-critical")
    if not rep.host_one_unique:
        rep.problems.append("host is not 1-unique")
    for i, L in enumerate(atts):
        if not rep.attachments_critical[i]:
            rep.problems.append(f"attachment {i} is not minor-critical")
        if not rep.attachments_one_unique[i]:
            rep.problems.append(f"attachment {i} is not 1-unique")
    G = _build(spec)
    rep.graph6 = emit_graph6(G)
    rep.order = G.n
    rep.td = td(G)
    critical_parts = rep.host_critical and all(rep.attachments_critical)
    if critical_parts and rep.td != r + s:
        rep.problems.append(f"td {rep.td} != r+s = {r + s}")
    rep.minor_critical = minor_critical_witness(G, rep.td) is None
    rep.one_unique = is_1_unique_graph(G)
    rep.order_bound_ok = G.n <= 2 ** (rep.td - 1)
    if rep.hypotheses_hold:
        if not rep.minor_critical:
            rep.problems.append("constructed graph is not minor-critical")
        if not rep.one_unique:
            rep.problems.append("constructed graph is not 1-unique")
        if rep.host_order_ok and all(rep.attachments_order_ok) and not rep.order_bound_ok:
            rep.problems.append(f"order {G.n} exceeds 2^(td-1) = {2 ** (rep.td - 1)}")
    return rep


# -- explicit families -----------------------------------------------------

def family_Gk(k: int) -> Graph:
    """Cycle on 2^k + 1 vertices plus the chord between the two neighbours of vertex 0."""
    if not isinstance(k, int) or k < 1:
        raise GraphInputError(f"k must be >= 1, got {k!r}")
    m = 2 ** k + 1
    if m > MAX_ORDER:
        raise CapacityError(f"G_{k} has {m} vertices, limit is {MAX_ORDER}")
    C = cycle_graph(m)
    return Graph(m, C.edges() + [(1, m - 1)])


def family_Q(k: int, s: int, partition) -> Graph:
    """Complete graph K_s whose vertex blocks B_i (sizes ``partition``) are fully joined to disjoint K_{k-s}'s.

    Blocks take host vertices in index order; the K_{k-s} copies follow in
    block order.
    """
    partition = tuple(partition)
    if not isinstance(k, int) or k < 1:
        raise GraphInputError(f"k must be >= 1, got {k!r}")
    if not isinstance(s, int) or not 1 <= s <= k:
        raise GraphInputError(f"need 1 <= s <= k, got s={s!r}, k={k}")
    q = len(partition)
    if not 1 <= q <= s or any(not isinstance(p, int) or p < 1 for p in partition) \
            or sum(partition) != s:
        raise GraphInputError(f"partition {partition} is not a partition of s={s} into 1..s parts")
    n = s + q * (k - s)
    if n > MAX_ORDER:
        raise CapacityError(f"Q has {n} vertices, limit is {MAX_ORDER}")
    edges = [(u, v) for u in range(s) for v in range(u + 1, s)]
    start = 0
    nxt = s
    for p in partition:
        block = range(start, start + p)
        clique = range(nxt, nxt + k - s)
        edges += [(u, v) for u in clique for v in clique if u < v]
        edges += [(b, c) for b in block for c in clique]
        start += p
        nxt += k - s
    return Graph(n, edges)


def family_R(k: int, t: int) -> Graph:
    """Path on 2^(k-2) + 1 + t vertices plus the edge between the two vertices at distance t from the ends."""
    if not isinstance(k, int) or k < 3:
        raise GraphInputError(f"k must be >= 3, got {k!r}")
    if not isinstance(t, int) or not 0 <= t <= 2 ** (k - 2) - 2:
        raise GraphInputError(f"need 0 <= t <= 2^(k-2)-2 = {2 ** (k - 2) - 2}, got {t!r}")
    m = 2 ** (k - 2) + 1 + t
    if m > MAX_ORDER:
        raise CapacityError(f"R_{{{k},{t}}} has {m} vertices, limit is {MAX_ORDER}")
    P = path_graph(m)
    return Graph(m, P.edges() + [(t, m - 1 - t)])


FAMILIES = {
    "Gk": (family_Gk, ("k",)),
    "Q": (family_Q, ("k", "s", "partition")),
    "R": (family_R, ("k", "t")),
}


def build_family(name: str, params: dict) -> Graph:
    if name not in FAMILIES:
        raise GraphInputError(f"unknown family {name!r}; choose from {sorted(FAMILIES)}")
    func, names = FAMILIES[name]
    missing = [p for p in names if p not in params]
    extra = [p for p in params if p not in names]
    if missing or extra:
        raise GraphInputError(f"family {name} takes parameters {names}; "
                              f"missing {missing}, unexpected {extra}")
    return func(**params)


# -- inductive family ------------------------------------------------------

@dataclass(frozen=True)
class ConstructionTree:
    """Provenance of an S-family member: a seed graph or an adjoining step."""

    kind: str                 # "K2", "base" or "adjoin"
    graph6: str
    host: "ConstructionTree | None" = None
    attachments: tuple = ()   # ((ConstructionTree, w), ...)

    def to_dict(self) -> dict:
        d = {"kind": self.kind, "graph6": self.graph6}
        if self.kind == "adjoin":
            d["host"] = self.host.to_dict()
            d["attachments"] = [{"w": w, "tree": t.to_dict()} for t, w in self.attachments]
        return d


@dataclass(frozen=True)
class SMember:
    graph: Graph
    tree: ConstructionTree


def generate_S_family(k: int, base=(), order_cap: int = 16):
    """Yield the members of S_k with at most ``order_cap`` vertices, up to isomorphism.

    S_2 holds K_2; S_j holds the j-critical members of ``base`` plus every
    graph adjoining members of S_(r+1) onto a host from S_s with
    r >= 1, s >= 2, r + s = j. Base graphs are checked to be critical and
    1-unique. Members keep the first construction tree found.
    """
    if not isinstance(k, int) or k < 2:
        raise GraphInputError(f"k must be >= 2, got {k!r}")
    if not isinstance(order_cap, int) or order_cap < 1:
        raise GraphInputError(f"order_cap must be a positive int, got {order_cap!r}")
    if order_cap > MAX_ORDER:
        raise CapacityError(f"order_cap {order_cap} exceeds {MAX_ORDER}")
    base = [check_graph(B) for B in base]
    problems = []
    base_by_td = {}
    for i, B in enumerate(base):
        if minor_critical_witness(B) is not None:
            problems.append(f"base graph {i} ({emit_graph6(B)}) is not minor-critical")
        elif not is_1_unique_graph(B):
            problems.append(f"base graph {i} ({emit_graph6(B)}) is not 1-unique")
        else:
            base_by_td.setdefault(td(B), []).append(B)
    if problems:
        raise SpecValidationError(problems)

    levels = {}
    for j in range(2, k + 1):
        level = {}
        if j == 2:
            K2 = complete_graph(2)
            level[canonical_form(K2)] = SMember(K2, ConstructionTree("K2", emit_graph6(K2)))
        for B in base_by_td.get(j, []):
            if B.n <= order_cap:
                level.setdefault(canonical_form(B), SMember(B, ConstructionTree("base", emit_graph6(B))))
        for r in range(1, j - 1):
            s = j - r
            hosts = list(levels[s].values())
            options = []
            for m in levels[r + 1].values():
                orbits = automorphism_orbits(m.graph)
                for w in range(m.graph.n):
                    if orbits[w] == w:
                        options.append((m, w))
            if not options:
                continue
            smallest = min(m.graph.n for m, _ in options)
            for h in hosts:
                q = h.graph.n
                for choice in _choices(options, q, order_cap, smallest):
                    spec = ConstructionSpec(h.graph, [(m.graph, w) for m, w in choice])
                    G = _build(spec)
                    key = canonical_form(G)
                    if key in level:
                        continue
                    if G.n <= VERIFY_MAX_N and td(G) != j:
                        raise InvariantViolation(f"S_{j} member {emit_graph6(G)} has td {td(G)}")
                    tree = ConstructionTree(
                        "adjoin", emit_graph6(G), h.tree, tuple((m.tree, w) for m, w in choice))
                    level[key] = SMember(G, tree)
        levels[j] = level
    yield from levels[k].values()


def _choices(options, q, cap, smallest):
    """All length-q sequences of options whose attachment orders sum to <= cap."""
    def rec(i, total, acc):
        if i == q:
            yield tuple(acc)
            return
        for m, w in options:
            t = total + m.graph.n
            if t + (q - i - 1) * smallest > cap:
                continue
            acc.append((m, w))
            yield from rec(i + 1, t, acc)
            acc.pop()
    yield from rec(0, 0, [])


__all__ = [
    "edge_join", "ConstructionSpec", "adjoin", "verify_construction", "ConstructionReport",
    "family_Gk", "family_Q", "family_R", "build_family", "generate_S_family",
    "ConstructionTree", "SMember",
]
