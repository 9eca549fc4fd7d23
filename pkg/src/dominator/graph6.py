"""graph6 encoding: 6-bit packed upper triangle with byte offset 63."""
from __future__ import annotations

from .errors import FormatError
from .graph import Graph

_PREFIX = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63)
                          for s in (30, 24, 18, 12, 6, 0))


def write_graph6(g: Graph) -> str:
    """Encode a graph in canonical graph6 (no prefix, no newline)."""
    n = g.n
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for k in range(0, len(bits), 6):
        val = 0
        for bit in bits[k:k + 6]:
            val = (val << 1) | bit
        chars.append(chr(val + 63))
    return _encode_n(n) + "".join(chars)


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 string; tolerates the optional '>>graph6<<' prefix."""
    s = text.strip()
    if s.startswith(_PREFIX):
        s = s[len(_PREFIX):]
    if not s:
        raise FormatError("empty graph6 input")
    if any(not (63 <= ord(c) <= 126) for c in s):
        raise FormatError("graph6 byte out of range")
    if s[0] != "~":
        n = ord(s[0]) - 63
        body = s[1:]
    elif len(s) >= 2 and s[1] != "~":
        if len(s) < 4:
            raise FormatError("truncated long-form header")
        n = 0
        for c in s[1:4]:
            n = (n << 6) | (ord(c) - 63)
        body = s[4:]
    else:
        if len(s) < 8:
            raise FormatError("truncated very-long-form header")
        n = 0
        for c in s[2:8]:
            n = (n << 6) | (ord(c) - 63)
        body = s[8:]
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    if len(body) < nchars:
        raise FormatError("truncated graph6 payload "
                          "(need %d bytes, got %d)" % (nchars, len(body)))
    if len(body) > nchars:
        raise FormatError("trailing bytes after graph6 payload")
    bits = []
    for c in body:
        val = ord(c) - 63
        bits.extend((val >> s_) & 1 for s_ in (5, 4, 3, 2, 1, 0))
    if any(bits[nbits:]):
        raise FormatError("non-canonical padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)
