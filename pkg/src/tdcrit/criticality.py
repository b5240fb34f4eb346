"""Criticality under the minor, subgraph and induced-subgraph orders.

Minor-criticality is decided from one-step minors only. Tree-depth is
minor-monotone and every proper minor of G is a minor of some G - e or G·e
(or of G - v, which for a vertex with an incident edge e is a subgraph of
G - e). So td drops on every proper minor iff it drops on every single edge
deletion and contraction, provided G is connected; a disconnected graph
keeps its tree-depth after losing a vertex outside a deepest component.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .canon import MAX_ENUM_ORDER, canonical_form, enumerate_connected_graphs_upto
from .exceptions import CapacityError, DomainError, GraphInputError, InvariantViolation
from .graph import Graph, check_graph, contract_edge, delete_edge, delete_vertex
from .graph6 import emit_graph6
from .solver import exceeds, td
from .uniqueness import is_1_unique_graph, is_1_unique_vertex

KINDS = ("minor", "subgraph", "induced")


def minor_critical_witness(G: Graph, k: int | None = None):
    """First one-step minor that keeps the tree-depth, or None when G is critical.

    Returns ``("disconnected", None)``, ``("delete", e)`` or ``("contract", e)``.
    """
    check_graph(G)
    if G.n == 0:
        return ("empty", None)
    if not G.is_connected():
        return ("disconnected", None)
    k = td(G) if k is None else k
    for e in G.edges():
        if exceeds(delete_edge(G, e), k - 1):
            return ("delete", e)
    for e in G.edges():
        if exceeds(contract_edge(G, e), k - 1):
            return ("contract", e)
    return None


def is_minor_critical(G: Graph) -> bool:
    return minor_critical_witness(G) is None


def subgraph_critical_witness(G: Graph, k: int | None = None):
    check_graph(G)
    if G.n == 0:
        return ("empty", None)
    if G.n > 1:
        for v, d in enumerate(G.degrees()):
            if d == 0:
                return ("isolated", v)
    k = td(G) if k is None else k
    for e in G.edges():
        if exceeds(delete_edge(G, e), k - 1):
            return ("delete", e)
    return None


def is_subgraph_critical(G: Graph) -> bool:
    return subgraph_critical_witness(G) is None


def induced_critical_witness(G: Graph, k: int | None = None):
    check_graph(G)
    if G.n == 0:
        return ("empty", None)
    k = td(G) if k is None else k
    for v in range(G.n):
        if exceeds(delete_vertex(G, v), k - 1):
            return ("delete_vertex", v)
    return None


def is_induced_subgraph_critical(G: Graph) -> bool:
    return induced_critical_witness(G) is None


@dataclass(frozen=True)
class CriticalityReport:
    td: int
    minor_critical: bool
    subgraph_critical: bool
    induced_subgraph_critical: bool
    one_unique: bool
    failing_witness: tuple | None = None

    def flags(self) -> dict:
        d = asdict(self)
        d.pop("failing_witness")
        return d


def classify(G: Graph) -> CriticalityReport:
    """All criticality flags plus the first one-step minor that keeps td (if any)."""
    check_graph(G)
    if G.n == 0:
        raise GraphInputError("classification needs at least one vertex")
    k = td(G)
    minor_w = minor_critical_witness(G, k)
    sub_w = subgraph_critical_witness(G, k)
    ind_w = induced_critical_witness(G, k)
    report = CriticalityReport(
        td=k,
        minor_critical=minor_w is None,
        subgraph_critical=sub_w is None,
        induced_subgraph_critical=ind_w is None,
        one_unique=is_1_unique_graph(G),
        failing_witness=minor_w,
    )
    if report.minor_critical and not report.subgraph_critical:
        raise InvariantViolation("minor-critical graph is not subgraph-critical")
    if report.subgraph_critical and not report.induced_subgraph_critical:
        raise InvariantViolation("subgraph-critical graph is not induced-subgraph-critical")
    if report.one_unique and report.subgraph_critical and not report.minor_critical:
        raise InvariantViolation("1-unique subgraph-critical graph is not minor-critical")
    return report


_CHECKS = {
    "minor": minor_critical_witness,
    "subgraph": subgraph_critical_witness,
    "induced": induced_critical_witness,
}


def find_critical_graphs(k: int, n_max: int, kind: str = "minor") -> list[Graph]:
    """All connected graphs on <= n_max vertices with td = k that are critical for ``kind``.

    Results are sorted by order, then canonical form. Candidates come from
    canonical augmentation; a generation subtree is cut when its root already
    has td >= k. This is sound for all three orders: the canonical parent of a
    candidate is the candidate minus a non-cut vertex, an induced subgraph
    (so also a subgraph and a minor), hence a critical graph of td k has every
    ancestor of td <= k - 1. Critical graphs are connected, so nothing is lost
    by generating connected graphs only.
    """
    if not isinstance(k, int) or k < 1:
        raise GraphInputError(f"k must be a positive int, got {k!r}")
    if not isinstance(n_max, int) or n_max < 1:
        raise GraphInputError(f"n_max must be a positive int, got {n_max!r}")
    if n_max > MAX_ENUM_ORDER:
        raise CapacityError(f"critical-graph search supports n_max <= {MAX_ENUM_ORDER}")
    if kind not in _CHECKS:
        raise GraphInputError(f"kind must be one of {KINDS}, got {kind!r}")
    check = _CHECKS[kind]

    def prune(parent):
        return exceeds(parent, k - 1)

    found = {}
    for G in enumerate_connected_graphs_upto(n_max, prune):
        if exceeds(G, k) or not exceeds(G, k - 1):
            continue
        if check(G, k) is None:
            found[canonical_form(G)] = G
    return sorted(found.values(), key=lambda g: (g.n, canonical_form(g)))


def critical_spanning_subgraph(G: Graph, *, trajectory: list | None = None) -> Graph:
    """Delete edges that keep the tree-depth until none is left; G must be 1-unique.

    Edges are scanned in lexicographic order, restarting after each deletion.
    If ``trajectory`` is a list, every intermediate graph is appended to it.
    """
    check_graph(G)
    for v in range(G.n):
        if not is_1_unique_vertex(G, v):
            raise DomainError(f"vertex {v} is not 1-unique")
    k = td(G)
    H = G
    if trajectory is not None:
        trajectory.append(H)
    progress = True
    while progress:
        progress = False
        for e in H.edges():
            cand = delete_edge(H, e)
            if exceeds(cand, k - 1):
                H = cand
                if trajectory is not None:
                    trajectory.append(H)
                progress = True
                break
    if minor_critical_witness(H, k) is not None:
        raise InvariantViolation("edge-minimal spanning subgraph of a 1-unique graph is not critical")
    return H


@dataclass(frozen=True)
class StressRecord:
    graph6: str
    order: int
    max_degree: int
    one_unique: bool
    order_bound_ok: bool
    degree_bound_ok: bool

    @property
    def counterexample(self) -> bool:
        return not (self.order_bound_ok and self.degree_bound_ok and self.one_unique)


@dataclass(frozen=True)
class StressReport:
    k: int
    n_max: int
    records: tuple
    induced_critical_orders: tuple

    @property
    def counterexamples(self) -> list:
        return [r for r in self.records if r.counterexample]

    @property
    def induced_order_bound_ok(self) -> bool:
        return all(n <= 2 ** (self.k - 1) for n in self.induced_critical_orders)


def conjecture_stress(k: int, n_max: int) -> StressReport:
    """Check order <= 2^(k-1), max degree <= k-1 and 1-uniqueness on every k-critical graph found.

    Findings are recorded, never assumed. The orders of the induced-subgraph-
    critical graphs with td k found in the same range are recorded as well.
    """
    records = []
    for G in find_critical_graphs(k, n_max, "minor"):
        records.append(StressRecord(
            graph6=emit_graph6(G),
            order=G.n,
            max_degree=G.max_degree(),
            one_unique=is_1_unique_graph(G),
            order_bound_ok=G.n <= 2 ** (k - 1),
            degree_bound_ok=G.max_degree() <= k - 1,
        ))
    induced = find_critical_graphs(k, n_max, "induced")
    return StressReport(k, n_max, tuple(records), tuple(g.n for g in induced))
