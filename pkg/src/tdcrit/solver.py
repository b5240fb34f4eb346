"""Exact tree-depth with ranking witnesses.

The solver uses the elimination recursion

    td(G) = max over components C of td(C)
    td(C) = 1 + min over v in C of td(C - v)      (C connected, |C| > 1)

memoized on connected vertex subsets (bitmasks of the input graph). Each
subset entry is either exact or a proven lower bound, which lets a caller-
supplied cap stop the search as soon as the answer is known to exceed it.
"""

from __future__ import annotations

import itertools
import os
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from .exceptions import CapacityError, GraphInputError
from .graph import MAX_ORDER, Graph, check_graph, component_masks, component_of, iter_bits

#: Order bound for the exact solver unless overridden by ``TDCRIT_MAX_N``.
DEFAULT_MAX_N = 24
#: Order bound for :func:`tree_depth_bruteforce`.
BRUTEFORCE_MAX_N = 8


def solver_max_n() -> int:
    """Current solver order cap (``TDCRIT_MAX_N``, clamped to the hard limit)."""
    raw = os.environ.get("TDCRIT_MAX_N")
    if not raw:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise GraphInputError(f"TDCRIT_MAX_N must be an integer, got {raw!r}") from None
    if value < 1:
        raise GraphInputError(f"TDCRIT_MAX_N must be positive, got {value}")
    return min(value, MAX_ORDER)


@dataclass(frozen=True)
class TreeDepthResult:
    """Tree-depth ``value`` with a feasible ``witness`` ranking (labels per vertex)."""

    value: int
    witness: tuple

    def ranking(self) -> dict:
        return dict(enumerate(self.witness))


# -- feasibility ----------------------------------------------------------

def _labels_of(G, ranking):
    if isinstance(ranking, Mapping):
        missing = [v for v in range(G.n) if v not in ranking]
        if missing:
            raise GraphInputError(f"ranking does not label vertices {missing}")
        labels = [ranking[v] for v in range(G.n)]
    elif isinstance(ranking, Sequence):
        if len(ranking) != G.n:
            raise GraphInputError(f"ranking has {len(ranking)} labels for {G.n} vertices")
        labels = list(ranking)
    else:
        raise GraphInputError(f"ranking must be a sequence or mapping, got {type(ranking).__name__}")
    for v, x in enumerate(labels):
        if not isinstance(x, int) or isinstance(x, bool) or x < 1:
            raise GraphInputError(f"label of vertex {v} must be a positive int, got {x!r}")
    return labels


def is_feasible_ranking(G: Graph, ranking) -> bool:
    """True iff every path between equal labels passes through a higher label.

    Checked level by level: among vertices labelled at most ``l``, no
    component may hold two vertices labelled ``l``.
    """
    check_graph(G)
    labels = _labels_of(G, ranking)
    by_label = {}
    for v, x in enumerate(labels):
        by_label[x] = by_label.get(x, 0) | 1 << v
    below = 0
    for x in sorted(by_label):
        level = by_label[x]
        below |= level
        if level.bit_count() < 2:
            continue
        for comp in component_masks(G.adj, below):
            if (comp & level).bit_count() > 1:
                return False
    return True


# -- exact solver ---------------------------------------------------------

class _Solver:
    """Per-call memo over connected subsets of one graph."""

    def __init__(self, adj):
        self.adj = adj
        self.exact = {}   # mask -> (td, root)
        self.lower = {}   # mask -> proven lower bound on td

    def lower_bound(self, mask):
        size = mask.bit_count()
        if size <= 1:
            return size
        # degeneracy + 1 bounds treewidth + 1, which bounds tree-depth
        adj = self.adj
        rest = mask
        degen = 0
        while rest:
            best_v, best_d = -1, None
            for v in iter_bits(rest):
                d = (adj[v] & rest).bit_count()
                if best_d is None or d < best_d:
                    best_v, best_d = v, d
            degen = max(degen, best_d)
            rest &= ~(1 << best_v)
        lb = max(2, degen + 1)
        # a connected graph with more edges than a tree contains a cycle
        if lb < 3:
            edges = sum((adj[v] & mask).bit_count() for v in iter_bits(mask)) // 2
            if edges >= size:
                lb = 3
        return max(lb, self.lower.get(mask, 0))

    def solve(self, mask, bound):
        """td of connected ``mask`` if it is <= ``bound``, else some value > ``bound``."""
        hit = self.exact.get(mask)
        if hit is not None:
            return hit[0]
        if mask & (mask - 1) == 0:
            self.exact[mask] = (1, mask.bit_length() - 1)
            return 1
        lb = self.lower_bound(mask)
        if lb > bound:
            return lb
        adj = self.adj
        best = bound + 1
        root = -1
        for v in iter_bits(mask):
            child_bound = best - 2
            if child_bound < 1:
                break
            rest = mask & ~(1 << v)
            comps = component_masks(adj, rest)
            comps.sort(key=lambda c: -c.bit_count())
            worst = 0
            for c in comps:
                r = self.solve(c, child_bound)
                if r > child_bound:
                    worst = None
                    break
                if r > worst:
                    worst = r
            if worst is None:
                continue
            best = worst + 1
            root = v
            if best <= lb:
                break
        if root >= 0:
            self.exact[mask] = (best, root)
            return best
        self.lower[mask] = max(self.lower.get(mask, 0), bound + 1)
        return bound + 1

    def label(self, mask, top, labels):
        """Write an optimal ranking of connected ``mask`` using labels ``<= top``."""
        td = self.solve(mask, mask.bit_count())
        root = self.exact[mask][1]
        labels[root] = top
        for c in component_masks(self.adj, mask & ~(1 << root)):
            self.label(c, top - 1, labels)
        return td


def _check_solver_order(G):
    limit = solver_max_n()
    if G.n > limit:
        raise CapacityError(f"solver order cap is {limit} (TDCRIT_MAX_N), got {G.n}")


def tree_depth(G: Graph, cap: int | None = None) -> TreeDepthResult | None:
    """Exact tree-depth of ``G`` with a witness ranking.

    With ``cap``, returns ``None`` as soon as the tree-depth is proven to
    exceed ``cap``. Roots are chosen as the smallest minimizing vertex, and
    each component of the input is ranked with its own tree-depth as top label.
    The empty graph has tree-depth 0.
    """
    check_graph(G)
    _check_solver_order(G)
    if cap is not None and (not isinstance(cap, int) or cap < 1):
        raise GraphInputError(f"cap must be a positive int, got {cap!r}")
    if G.n == 0:
        return TreeDepthResult(0, ())
    solver = _Solver(G.adj)
    comps = component_masks(G.adj, G.vertex_mask)
    comps.sort(key=lambda c: -c.bit_count())
    values = {}
    for c in comps:
        bound = c.bit_count() if cap is None else min(cap, c.bit_count())
        r = solver.solve(c, bound)
        if r > bound:
            return None
        values[c] = r
    labels = [0] * G.n
    for c in comps:
        solver.label(c, values[c], labels)
    return TreeDepthResult(max(values.values()), tuple(labels))


def td(G: Graph) -> int:
    """Shorthand for ``tree_depth(G).value``."""
    return tree_depth(G).value


def exceeds(G: Graph, k: int) -> bool:
    """True iff td(G) > k (uses the capped search)."""
    if k < 1:
        return G.n > 0
    return tree_depth(G, cap=k) is None


def optimal_ranking(G: Graph) -> dict:
    """An optimal ranking as a ``{vertex: label}`` mapping."""
    return tree_depth(G).ranking()


# -- closed forms ---------------------------------------------------------

def td_path(n: int) -> int:
    """Tree-depth of the path on ``n`` vertices: floor(log2 n) + 1."""
    if not isinstance(n, int) or n < 1:
        raise GraphInputError(f"path order must be >= 1, got {n!r}")
    return n.bit_length()


def td_cycle(n: int) -> int:
    """Tree-depth of the cycle on ``n`` vertices: floor(log2 (n-1)) + 2."""
    if not isinstance(n, int) or n < 3:
        raise GraphInputError(f"cycle order must be >= 3, got {n!r}")
    return (n - 1).bit_length() + 1


# -- brute-force oracle ---------------------------------------------------

def _labeling_exists(G, k):
    """Backtracking over labelings V -> {1..k}, vertices in index order.

    A partial labeling is discarded once two equal labels ``l`` sit in one
    component of the already-labelled vertices with label <= ``l``; adding
    vertices never repairs that. A new vertex with label ``x`` can only create
    such a pair at some level ``l >= x``, so only those levels are rechecked.
    """
    n = G.n
    adj = G.adj
    labels = [0] * n

    def ok_after(v):
        x = labels[v]
        for level in range(x, k + 1):
            below = 0
            for u in range(v + 1):
                if labels[u] <= level:
                    below |= 1 << u
            comp = component_of(adj, v, below)
            if sum(1 for u in iter_bits(comp) if labels[u] == level) > 1:
                return False
        return True

    def rec(v):
        if v == n:
            return True
        for x in range(1, k + 1):
            labels[v] = x
            if ok_after(v) and rec(v + 1):
                return True
        labels[v] = 0
        return False

    return rec(0)


def tree_depth_bruteforce(G: Graph) -> int:
    """Smallest k admitting a feasible labeling with labels 1..k, by exhaustive search."""
    check_graph(G)
    if G.n > BRUTEFORCE_MAX_N:
        raise CapacityError(f"brute force supports order <= {BRUTEFORCE_MAX_N}, got {G.n}")
    for k in range(G.n + 1):
        if k == 0:
            if G.n == 0:
                return 0
            continue
        if _labeling_exists(G, k):
            return k
    raise AssertionError("unreachable: n labels always suffice")


def all_rankings(G: Graph, k: int):
    """Yield every feasible labeling with labels in 1..k (as tuples), n <= 8."""
    check_graph(G)
    if G.n > BRUTEFORCE_MAX_N:
        raise CapacityError(f"ranking enumeration supports order <= {BRUTEFORCE_MAX_N}, got {G.n}")
    for labels in itertools.product(range(1, k + 1), repeat=G.n):
        if is_feasible_ranking(G, labels):
            yield labels


__all__ = [
    "TreeDepthResult", "tree_depth", "td", "exceeds", "optimal_ranking", "is_feasible_ranking",
    "td_path", "td_cycle", "tree_depth_bruteforce", "all_rankings", "solver_max_n",
]
