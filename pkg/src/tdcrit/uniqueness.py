"""Star-clique transform, quotient graphs G<S>, and t-uniqueness deciders."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .exceptions import CapacityError, GraphInputError, InvariantViolation
from .graph import (
    Graph,
    _relabel_keep,
    check_graph,
    check_vertex,
    check_vertex_set,
    component_masks,
    delete_vertices,
    iter_bits,
)
from .solver import BRUTEFORCE_MAX_N, all_rankings, td

#: Order bound for the direct t-uniqueness search.
SEARCH_MAX_N = 10
#: Order bound for :func:`decomposition_optimum` (2^n subsets).
DECOMPOSE_MAX_N = 12


def star_clique_transform(G: Graph, v: int) -> Graph:
    """Delete ``v`` and make its neighbourhood a clique."""
    check_graph(G)
    check_vertex(G, v)
    nbrs = G.adj[v]
    extra = {u: nbrs for u in iter_bits(nbrs)}
    return _relabel_keep(G, G.vertex_mask & ~(1 << v), extra)


def quotient_graph(G: Graph, S) -> Graph:
    """``G<S>``: vertices of S, adjacent when adjacent in G or both touching one component of G - S."""
    check_graph(G)
    keep = check_vertex_set(G, S)
    extra = {}
    for comp in component_masks(G.adj, G.vertex_mask & ~keep):
        touch = 0
        for w in iter_bits(comp):
            touch |= G.adj[w]
        touch &= keep
        for u in iter_bits(touch):
            extra[u] = extra.get(u, 0) | touch
    return _relabel_keep(G, keep, extra)


# -- direct search ---------------------------------------------------------

def _constrained_ranking(G: Graph, k: int, v: int | None, t: int | None):
    """A feasible labeling with labels <= k where ``v`` is the only vertex labelled ``t``.

    Labels are placed top-down: at level ``L`` every component of the
    still-unlabelled vertices receives at most one vertex with label ``L``,
    and components are solved independently. Returns a label list or None.
    With ``v`` None there is no constraint.
    """
    adj = G.adj
    vbit = 0 if v is None else 1 << v

    @lru_cache(maxsize=None)
    def solve(mask, level):
        # returns a tuple of (vertex, label) pairs or None
        if level == 0:
            return None
        if mask.bit_count() > level and _is_clique(mask):
            return None
        holds_v = bool(mask & vbit)
        if holds_v and level < t:
            return None
        if level == t:
            choices = [v] if holds_v else [None]
        else:
            choices = [None] + [x for x in iter_bits(mask & ~vbit)]
        for x in choices:
            if x is None:
                if level == 1:
                    continue
                sub = _solve_components(mask, level - 1)
                if sub is not None:
                    return sub
                continue
            rest = mask & ~(1 << x)
            if not rest:
                return ((x, level),)
            if level == 1:
                continue
            sub = _solve_components(rest, level - 1)
            if sub is not None:
                return ((x, level),) + sub
        return None

    def _solve_components(mask, level):
        out = ()
        for comp in component_masks(adj, mask):
            r = solve(comp, level)
            if r is None:
                return None
            out += r
        return out

    def _is_clique(mask):
        return all((adj[u] | (1 << u)) & mask == mask for u in iter_bits(mask))

    full = G.vertex_mask
    if not full:
        return [] if (v is None) else None
    res = _solve_components(full, k)
    if res is None:
        return None
    labels = [0] * G.n
    for x, lab in res:
        labels[x] = lab
    return labels


def is_t_unique_vertex(G: Graph, v: int, t: int, *, return_ranking: bool = False):
    """Is there an optimal ranking in which ``v`` is the only vertex with rank ``t``?

    Decided by exhaustive constrained search (order <= 10); with
    ``return_ranking`` the witness labeling (or None) is returned instead.
    """
    check_graph(G)
    check_vertex(G, v)
    if G.n > SEARCH_MAX_N:
        raise CapacityError(f"t-uniqueness search supports order <= {SEARCH_MAX_N}, got {G.n}")
    k = td(G)
    if not isinstance(t, int) or not 1 <= t <= k:
        raise GraphInputError(f"t must satisfy 1 <= t <= td(G) = {k}, got {t!r}")
    labels = _constrained_ranking(G, k, v, t)
    if return_ranking:
        return labels
    return labels is not None


def is_1_unique_vertex(G: Graph, v: int) -> bool:
    """1-uniqueness of ``v``.

    Connected graphs use the star-clique criterion (v is 1-unique iff the
    transform at v has smaller tree-depth); disconnected graphs fall back to
    the direct search.
    """
    check_graph(G)
    check_vertex(G, v)
    if G.is_connected():
        return td(star_clique_transform(G, v)) < td(G)
    return is_t_unique_vertex(G, v, 1)


def is_1_unique_graph(G: Graph) -> bool:
    check_graph(G)
    return all(is_1_unique_vertex(G, v) for v in range(G.n))


def is_t_unique_graph(G: Graph, t: int) -> bool:
    if t == 1:
        return is_1_unique_graph(G)
    return all(is_t_unique_vertex(G, v, t) for v in range(G.n))


@dataclass(frozen=True)
class UniquenessProfile:
    """Smallest ``t`` per vertex for which the vertex is t-unique.

    ``min_t[v]`` is None when ``v`` is t-unique for no ``t``; ``graph_min_t``
    is then None as well.
    """

    td: int
    min_t: tuple
    table: dict = field(repr=False, compare=False)

    @property
    def graph_min_t(self):
        if any(m is None for m in self.min_t):
            return None
        return max(self.min_t, default=1)

    @property
    def one_unique(self) -> bool:
        return self.graph_min_t == 1


def uniqueness_profile(G: Graph) -> UniquenessProfile:
    check_graph(G)
    k = td(G)
    table = {}
    for v in range(G.n):
        for t in range(1, k + 1):
            if t == 1:
                table[v, t] = is_1_unique_vertex(G, v)
            else:
                table[v, t] = is_t_unique_vertex(G, v, t)
    min_t = []
    for v in range(G.n):
        first = next((t for t in range(1, k + 1) if table[v, t]), None)
        if first is not None and not all(table[v, s] for s in range(first, k + 1)):
            raise InvariantViolation(f"vertex {v}: t-uniqueness not monotone in t")
        min_t.append(first)
    return UniquenessProfile(k, tuple(min_t), table)


# -- decomposition identity -----------------------------------------------

def decomposition_value(G: Graph, S) -> int:
    """td(G<S>) + td(G - S)."""
    mask = check_vertex_set(G, S)
    return td(quotient_graph(G, mask)) + td(delete_vertices(G, mask))


def decomposition_optimum(G: Graph):
    """Minimize td(G<S>) + td(G - S) over all subsets S.

    Returns ``(S, value)`` with ``S`` a frozenset; ties go to the
    lexicographically least sorted vertex tuple.
    """
    check_graph(G)
    if G.n > DECOMPOSE_MAX_N:
        raise CapacityError(f"decomposition search supports order <= {DECOMPOSE_MAX_N}, got {G.n}")
    best = None
    best_sets = []
    for mask in range(1 << G.n):
        val = decomposition_value(G, mask)
        if best is None or val < best:
            best, best_sets = val, [mask]
        elif val == best:
            best_sets.append(mask)
    winner = min(tuple(iter_bits(m)) for m in best_sets)
    return frozenset(winner), best


def top_set_ranking_exists(G: Graph, T) -> bool:
    """Is there an optimal ranking with every vertex of T ranked above every vertex outside T?

    Exhaustive over all optimal rankings (order <= 8).
    """
    check_graph(G)
    mask = check_vertex_set(G, T)
    if G.n > BRUTEFORCE_MAX_N:
        raise CapacityError(f"ranking enumeration supports order <= {BRUTEFORCE_MAX_N}, got {G.n}")
    inside = list(iter_bits(mask))
    outside = [v for v in range(G.n) if not mask >> v & 1]
    for labels in all_rankings(G, td(G)):
        if not inside or not outside:
            return True
        if min(labels[v] for v in inside) > max(labels[v] for v in outside):
            return True
    return False


def check_top_set_characterization(G: Graph, T) -> bool:
    """True iff [td(G<T>) + td(G - T) == td(G)] agrees with :func:`top_set_ranking_exists`."""
    check_graph(G)
    if G.n > BRUTEFORCE_MAX_N:
        raise CapacityError(f"top-set check supports order <= {BRUTEFORCE_MAX_N}, got {G.n}")
    lhs = decomposition_value(G, T) == td(G)
    return lhs == top_set_ranking_exists(G, T)
