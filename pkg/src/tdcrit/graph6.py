"""graph6 reading and writing (small-order form, n <= 62).

Format: one size byte ``n + 63``, then the upper triangle of the adjacency
matrix in column-major order (``x(0,1), x(0,2), x(1,2), x(0,3), ...``) packed
six bits per byte, each byte offset by 63, final byte zero-padded.
"""

from __future__ import annotations

from .exceptions import Graph6ParseError
from .graph import MAX_PARSE_ORDER, Graph

HEADER = ">>graph6<<"


def emit_graph6(G: Graph) -> str:
    n = G.n
    if n > MAX_PARSE_ORDER:
        raise Graph6ParseError(f"order {n} needs the long graph6 size form", 0)
    out = [chr(n + 63)]
    acc = nbits = 0
    for j in range(1, n):
        row = G.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Parse one graph6 string; surrounding whitespace and the optional header are ignored."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    s = text.strip()
    base = len(text) - len(text.lstrip())
    if s.startswith(HEADER):
        s = s[len(HEADER):]
        base += len(HEADER)
    if not s:
        raise Graph6ParseError("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6ParseError(f"byte {ch!r} outside graph6 range 63..126", base + i)
    n = ord(s[0]) - 63
    if n == 63:
        raise Graph6ParseError(f"orders above {MAX_PARSE_ORDER} are not supported", base)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) - 1 != nbytes:
        off = base + min(len(s), 1 + nbytes)
        raise Graph6ParseError(
            f"expected {nbytes} edge bytes for n={n}, got {len(s) - 1}", off)
    bits = []
    for ch in s[1:]:
        x = ord(ch) - 63
        bits.extend((x >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6ParseError("non-zero padding bits", base + len(s) - 1)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def read_graph6_lines(lines):
    """Yield graphs from an iterable of lines, skipping blank lines."""
    for line in lines:
        if line.strip():
            yield parse_graph6(line)
