"""Canonical labeling, automorphism orbits and isomorph-free generation.

Canonical labeling is an individualization-refinement search: the ordered
partition is refined to an equitable one, a vertex of the first smallest
non-singleton cell is individualized, and the search recurses until the
partition is discrete. The canonical code is the largest relabeled adjacency
over all leaves. Leaves with equal codes yield automorphisms, which prune
children that lie in a common orbit of the pointwise stabilizer of the
current prefix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exceptions import CapacityError, GraphInputError
from .graph import MAX_ORDER, Graph, component_of, iter_bits, mask_of
from .graph6 import emit_graph6

#: Largest order accepted by :func:`enumerate_connected_graphs`.
MAX_ENUM_ORDER = 8


def _refine(adj, cells):
    """Refine an ordered partition (list of lists) to the coarsest equitable refinement.

    Splits are ordered by neighbour count only, so the result commutes with
    relabeling.
    """
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        for w in range(len(cells)):
            wmask = mask_of(cells[w])
            for x in range(len(cells)):
                cell = cells[x]
                if len(cell) == 1:
                    continue
                counts = [(adj[v] & wmask).bit_count() for v in cell]
                if min(counts) == max(counts):
                    continue
                groups = {}
                for v, c in zip(cell, counts):
                    groups.setdefault(c, []).append(v)
                cells[x:x + 1] = [groups[c] for c in sorted(groups)]
                changed = True
                break
            if changed:
                break
    return cells


def _code(adj, order):
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        r = 0
        for u in iter_bits(adj[v]):
            r |= 1 << pos[u]
        rows.append(r)
    return tuple(rows)


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb


@dataclass(frozen=True)
class CanonicalLabeling:
    """Result of the canonical labeling search.

    ``order[i]`` is the original vertex placed at canonical position ``i``;
    ``code`` is the relabeled adjacency (row bitmasks); ``generators`` are
    automorphisms (as tuples ``perm[v]``) generating the automorphism group
    and ``orbits`` the vertex orbits under it (orbit id = least member).
    """

    order: tuple
    code: tuple
    generators: tuple
    orbits: tuple


def canonical_labeling(G: Graph) -> CanonicalLabeling:
    n = G.n
    if n > MAX_ORDER:
        raise CapacityError(f"canonical labeling supports order <= {MAX_ORDER}, got {n}")
    adj = G.adj
    if n == 0:
        return CanonicalLabeling((), (), (), ())
    gens = []
    best = {"code": None, "order": None, "first": None, "first_code": None}

    def record_aut(order_a, order_b):
        # maps the vertex at position i of leaf a to position i of leaf b
        perm = [0] * n
        for a, b in zip(order_a, order_b):
            perm[a] = b
        perm = tuple(perm)
        if any(perm[i] != i for i in range(n)) and perm not in gens:
            gens.append(perm)

    def search(cells, prefix):
        target = None
        for i, c in enumerate(cells):
            if len(c) > 1 and (target is None or len(c) < len(cells[target])):
                target = i
        if target is None:
            order = tuple(c[0] for c in cells)
            code = _code(adj, order)
            if best["first"] is None:
                best["first"], best["first_code"] = order, code
                best["code"], best["order"] = code, order
                return
            if code == best["first_code"]:
                record_aut(best["first"], order)
            elif code == best["code"]:
                record_aut(best["order"], order)
            elif code > best["code"]:
                best["code"], best["order"] = code, order
            return
        explored = []
        for v in cells[target]:
            if explored:
                stab = [g for g in gens if all(g[p] == p for p in prefix)]
                if stab:
                    uf = _UnionFind(n)
                    for g in stab:
                        for a in range(n):
                            uf.union(a, g[a])
                    rv = uf.find(v)
                    if any(uf.find(e) == rv for e in explored):
                        continue
            explored.append(v)
            rest = [u for u in cells[target] if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            search(_refine(adj, child), prefix + (v,))

    search(_refine(adj, [list(range(n))]), ())
    uf = _UnionFind(n)
    for g in gens:
        for a in range(n):
            uf.union(a, g[a])
    orbits = tuple(uf.find(v) for v in range(n))
    return CanonicalLabeling(best["order"], best["code"], tuple(gens), orbits)


def canonical_graph(G: Graph) -> Graph:
    return Graph.from_adjacency(canonical_labeling(G).code)


def canonical_form(G: Graph) -> str:
    """Isomorphism-invariant encoding: graph6 of the canonically relabeled graph."""
    return emit_graph6(canonical_graph(G))


def is_isomorphic(G: Graph, H: Graph) -> bool:
    return G.n == H.n and G.number_of_edges() == H.number_of_edges() \
        and canonical_labeling(G).code == canonical_labeling(H).code


def automorphism_orbits(G: Graph) -> list[int]:
    """Orbit id (least member) per vertex."""
    return list(canonical_labeling(G).orbits)


def _non_cut_vertices(adj, n):
    full = (1 << n) - 1
    out = []
    for v in range(n):
        rest = full & ~(1 << v)
        if not rest:
            out.append(v)
            continue
        start = (rest & -rest).bit_length() - 1
        if component_of(adj, start, rest) == rest:
            out.append(v)
    return out


def enumerate_connected_graphs(n: int, prune=None):
    """Yield one representative per isomorphism class of connected graphs on ``n`` vertices.

    Generation is by canonical augmentation: every connected graph on
    ``m + 1`` vertices is built from a representative on ``m`` vertices by
    adding a vertex with a non-empty neighbourhood, and kept only when the new
    vertex is in the automorphism orbit of the canonically last non-cut
    vertex. Siblings of one parent are deduplicated by canonical code.

    ``prune(parent) -> bool`` may cut whole subtrees: when it returns True
    for a graph on fewer than ``n`` vertices, no descendant of it is built.
    Only graphs whose canonical-deletion ancestors all survive ``prune`` are
    reached, which callers use for hereditary properties.
    """
    if not isinstance(n, int) or n < 1:
        raise GraphInputError(f"order must be a positive int, got {n!r}")
    if n > MAX_ENUM_ORDER:
        raise CapacityError(f"enumeration supports orders up to {MAX_ENUM_ORDER}, got {n}")
    yield from _generate(Graph(1), n, prune, all_orders=False)


def _generate(parent, n, prune, all_orders):
    m = parent.n
    if m == n or all_orders:
        yield parent
    if m == n or (prune is not None and prune(parent)):
        return
    seen = set()
    new = m
    for nbrs in range(1, 1 << m):
        rows = [r | ((nbrs >> v & 1) << new) for v, r in enumerate(parent.adj)]
        rows.append(nbrs)
        lab = canonical_labeling(Graph.from_adjacency(rows))
        if lab.code in seen:
            continue
        candidates = set(_non_cut_vertices(rows, m + 1))
        last = next(v for v in reversed(lab.order) if v in candidates)
        if lab.orbits[last] != lab.orbits[new]:
            continue
        seen.add(lab.code)
        child = Graph.from_adjacency(rows)
        yield from _generate(child, n, prune, all_orders)


def enumerate_connected_graphs_upto(n_max: int, prune=None):
    """Yield connected graphs of every order 1..n_max, depth-first (each parent before its children)."""
    if not isinstance(n_max, int) or n_max < 1:
        raise GraphInputError(f"order must be a positive int, got {n_max!r}")
    if n_max > MAX_ENUM_ORDER:
        raise CapacityError(f"enumeration supports orders up to {MAX_ENUM_ORDER}, got {n_max}")
    yield from _generate(Graph(1), n_max, prune, all_orders=True)
