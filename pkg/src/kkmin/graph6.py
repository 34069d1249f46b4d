"""graph6 and adjacency-list text encodings.

graph6 follows the nauty format description: a size prefix, then the upper
triangle of the adjacency matrix read column by column (x(0,1), x(0,2),
x(1,2), x(0,3), ...), packed big-endian into 6-bit groups offset by 63.
Output is header-less; ``>>graph6<<`` is accepted on input.
"""

from __future__ import annotations

from .graph import Graph, members

HEADER = ">>graph6<<"


def _encode_size(n: int) -> str:
    if n < 63:
        return chr(63 + n)
    if n < 258048:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"graph too large for graph6: n={n}")


def _decode_size(data: bytes) -> tuple[int, int]:
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) > 1 and data[1] == 126:
        groups, start = data[2:8], 8
    else:
        groups, start = data[1:4], 4
    n = 0
    for c in groups:
        n = n << 6 | (c - 63)
    return n, start


def to_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        bits.extend(row >> i & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = v << 1 | b
        body.append(chr(63 + v))
    return _encode_size(g.n) + "".join(body)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise ValueError("empty graph6 string")
    data = s.encode("ascii")
    if any(c < 63 or c > 126 for c in data):
        raise ValueError(f"invalid graph6 character in {s!r}")
    n, pos = _decode_size(data)
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            c = body[k // 6] - 63
            if c >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def to_adjacency_text(g: Graph) -> str:
    lines = [str(g.n)]
    for v in range(g.n):
        lines.append(f"{v}: " + " ".join(map(str, members(g.adj[v]))))
    return "\n".join(lines).rstrip() + "\n"


def from_adjacency_text(text: str) -> Graph:
    """Parse ``n`` on the first line, then ``u: v w ...`` rows (``#`` comments allowed)."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty adjacency text")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"first line must be the vertex count, got {lines[0]!r}") from None
    edges = []
    for ln in lines[1:]:
        head, sep, tail = ln.partition(":")
        if not sep:
            raise ValueError(f"expected 'u: v w ...', got {ln!r}")
        u = int(head)
        edges.extend((u, int(w)) for w in tail.split())
    return Graph.from_edges(n, edges)


def read_graph(text: str) -> Graph:
    """Accept either graph6 or adjacency-list text."""
    stripped = text.strip()
    if "\n" in stripped or ":" in stripped or stripped.isdigit():
        return from_adjacency_text(text)
    return from_graph6(stripped)
