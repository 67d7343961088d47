"""graph6 encoding for graphs with at most 62 vertices.

Format: one size byte ``chr(n + 63)`` followed by the upper triangle of the
adjacency matrix, column by column (``x(0,1) x(0,2) x(1,2) x(0,3) ...``),
packed six bits per byte, big-endian, offset by 63, zero padded.
"""

from __future__ import annotations

from .graph import Graph

MAX_VERTICES = 62


class Graph6Error(ValueError):
    """Raised for malformed or unsupported graph6 words."""


def _body_length(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n > MAX_VERTICES:
        raise Graph6Error(f"graph6 output supports n <= {MAX_VERTICES}, got {n}")
    bits = []
    for j in range(1, n):
        aj = g.adj[j]
        for i in range(j):
            bits.append(aj >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    word = text.strip()
    if word.startswith(">>graph6<<"):
        word = word[10:]
    if not word:
        raise Graph6Error("empty graph6 word")
    codes = [ord(c) - 63 for c in word]
    if any(not 0 <= c <= 63 for c in codes):
        raise Graph6Error(f"invalid graph6 character in {word!r}")
    n = codes[0]
    if n == 63:
        raise Graph6Error("graphs with more than 62 vertices are not supported")
    body = codes[1:]
    need = _body_length(n)
    if len(body) < need:
        raise Graph6Error(f"graph6 word too short for n={n}")
    if len(body) > need:
        raise Graph6Error(f"trailing characters after graph6 word for n={n}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    total = n * (n - 1) // 2
    if total < 6 * need and body and body[-1] & ((1 << (6 * need - total)) - 1):
        raise Graph6Error("non-zero padding bits in graph6 word")
    return Graph(n, adj)
