"""Simple undirected graphs on dense vertex labels 0..n-1.

Adjacency is stored as one integer bitmask per vertex, so vertex subsets
(``VertexSet``) are plain ints as well. All operations return new graphs and
relabel vertices densely, preserving relative order.
"""

from __future__ import annotations

from collections.abc import Iterable

from .exceptions import CapacityError, GraphInputError

#: Largest order any operation may *build* (vertex sets fit a machine word).
MAX_ORDER = 32
#: Largest order graph6 parsing accepts (single-byte size header).
MAX_PARSE_ORDER = 62


class Graph:
    """Immutable simple graph.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : iterable of (u, v) pairs
        Loops are rejected; repeated edges collapse.
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not isinstance(n, int) or n < 0:
            raise GraphInputError(f"vertex count must be a non-negative int, got {n!r}")
        if n > MAX_PARSE_ORDER:
            raise CapacityError(f"order {n} exceeds limit {MAX_PARSE_ORDER}")
        rows = [0] * n
        for e in edges:
            try:
                u, v = e
            except (TypeError, ValueError):
                raise GraphInputError(f"edge {e!r} is not a vertex pair") from None
            if not (isinstance(u, int) and isinstance(v, int)):
                raise GraphInputError(f"edge {e!r} has non-integer endpoints")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphInputError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self.adj = tuple(rows)
        self._hash = None

    @classmethod
    def from_adjacency(cls, rows: Iterable[int]) -> Graph:
        """Build from neighbourhood bitmasks; symmetry and irreflexivity are checked."""
        rows = tuple(rows)
        n = len(rows)
        for v, row in enumerate(rows):
            if row >> n or row >> v & 1:
                raise GraphInputError(f"row {v} has out-of-range bits or a loop")
            for u in iter_bits(row):
                if not rows[u] >> v & 1:
                    raise GraphInputError(f"adjacency not symmetric at ({u}, {v})")
        g = cls.__new__(cls)
        g.n = n
        g.adj = rows
        g._hash = None
        return g

    # -- basic queries -------------------------------------------------
    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        """Edges as normalized ``(u, v)`` with ``u < v``, lexicographically sorted."""
        out = []
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def number_of_edges(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def neighbors(self, v: int) -> list[int]:
        check_vertex(self, v)
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        check_vertex(self, v)
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def is_connected(self) -> bool:
        return self.n <= 1 or component_of(self.adj, 0, self.vertex_mask) == self.vertex_mask

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


# -- bitmask helpers -------------------------------------------------------

def iter_bits(mask: int):
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def component_of(adj, start: int, within: int) -> int:
    """Bitmask of the component containing ``start`` in the subgraph induced by ``within``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def component_masks(adj, within: int) -> list[int]:
    """Components of the subgraph induced by ``within``, ordered by minimum vertex."""
    comps = []
    rest = within
    while rest:
        start = (rest & -rest).bit_length() - 1
        comp = component_of(adj, start, rest)
        comps.append(comp)
        rest &= ~comp
    return comps


# -- validation helpers ----------------------------------------------------

def check_graph(G) -> Graph:
    if not isinstance(G, Graph):
        raise GraphInputError(f"expected Graph, got {type(G).__name__}")
    return G


def check_vertex(G: Graph, v) -> int:
    if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < G.n:
        raise GraphInputError(f"vertex {v!r} out of range for graph of order {G.n}")
    return v


def check_edge(G: Graph, e) -> tuple[int, int]:
    try:
        u, v = e
    except (TypeError, ValueError):
        raise GraphInputError(f"edge must be a pair, got {e!r}") from None
    check_vertex(G, u)
    check_vertex(G, v)
    if u == v or not G.has_edge(u, v):
        raise GraphInputError(f"({u}, {v}) is not an edge")
    return (u, v) if u < v else (v, u)


def check_vertex_set(G: Graph, S) -> int:
    """Normalize a vertex set (bitmask or iterable of vertices) to a bitmask."""
    if isinstance(S, int) and not isinstance(S, bool):
        if S < 0 or S >> G.n:
            raise GraphInputError(f"vertex mask {S:#x} out of range for order {G.n}")
        return S
    m = 0
    for v in S:
        m |= 1 << check_vertex(G, v)
    return m


def check_order(n: int, limit: int = MAX_ORDER, what: str = "graph") -> None:
    if n > limit:
        raise CapacityError(f"{what} order {n} exceeds limit {limit}")


# -- edit operations -------------------------------------------------------

def _relabel_keep(G: Graph, keep: int, extra=None) -> Graph:
    """Induced subgraph on ``keep`` with order-preserving dense relabeling.

    ``extra`` optionally maps old vertex -> additional neighbour mask (old labels)
    to OR into that row before relabeling.
    """
    old = list(iter_bits(keep))
    pos = {v: i for i, v in enumerate(old)}
    rows = []
    for v in old:
        row = G.adj[v]
        if extra and v in extra:
            row |= extra[v]
        row &= keep & ~(1 << v)
        new = 0
        for u in iter_bits(row):
            new |= 1 << pos[u]
        rows.append(new)
    g = Graph.__new__(Graph)
    g.n = len(old)
    g.adj = tuple(rows)
    g._hash = None
    return g


def induced_subgraph(G: Graph, S) -> Graph:
    """``G[S]``, relabeled densely in the original vertex order."""
    return _relabel_keep(G, check_vertex_set(G, S))


def delete_vertex(G: Graph, v: int) -> Graph:
    check_vertex(G, v)
    return _relabel_keep(G, G.vertex_mask & ~(1 << v))


def delete_vertices(G: Graph, S) -> Graph:
    """``G - S``."""
    return _relabel_keep(G, G.vertex_mask & ~check_vertex_set(G, S))


def delete_edge(G: Graph, e) -> Graph:
    u, v = check_edge(G, e)
    rows = list(G.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph.from_adjacency(rows)


def contract_edge(G: Graph, e) -> Graph:
    """``G·e``: merge the endpoints into the smaller index, drop the larger."""
    u, v = check_edge(G, e)
    merged = (G.adj[u] | G.adj[v]) & ~((1 << u) | (1 << v))
    extra = {u: merged}
    for w in iter_bits(G.adj[v] & ~(1 << u)):
        extra[w] = 1 << u
    return _relabel_keep(G, G.vertex_mask & ~(1 << v), extra)


def add_edges(G: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(G.n, list(G.edges()) + list(edges))


def disjoint_union(G: Graph, H: Graph) -> Graph:
    """``G + H`` with H's vertices shifted up by ``G.n``."""
    check_order(G.n + H.n, what="disjoint union")
    shift = G.n
    return Graph.from_adjacency(G.adj + tuple(r << shift for r in H.adj))


def connected_components(G: Graph) -> list[frozenset[int]]:
    return [frozenset(iter_bits(c)) for c in component_masks(G.adj, G.vertex_mask)]


# -- named graphs ----------------------------------------------------------

def empty_graph(n: int = 0) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphInputError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
