"""graph6 text encoding of simple undirected graphs.

The order is written as one byte (``n <= 62``), ``~`` plus three bytes
(``n <= 258047``) or ``~~`` plus six bytes.  Adjacency bits of the upper
triangle follow column by column, ``(0,1), (0,2), (1,2), (0,3), ...``,
packed six per byte with an offset of 63 and zero padding.
"""

from __future__ import annotations

from .graph import Graph

__all__ = ["Graph6Error", "encode_graph6", "decode_graph6", "HEADER"]

HEADER = ">>graph6<<"
_SHORT_MAX = 62
_MEDIUM_MAX = 258047
_LONG_MAX = (1 << 36) - 1


class Graph6Error(ValueError):
    """Malformed graph6 text; ``offset`` is the byte index of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


def _size_bytes(n: int) -> str:
    if n <= _SHORT_MAX:
        return chr(n + 63)
    if n <= _MEDIUM_MAX:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= _LONG_MAX:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"graph6 cannot encode n={n}")


def encode_graph6(g: Graph, *, header: bool = False) -> str:
    out = [HEADER] if header else []
    out.append(_size_bytes(g.n))
    chunk, filled = 0, 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            chunk = (chunk << 1) | (row >> i & 1)
            filled += 1
            if filled == 6:
                out.append(chr(chunk + 63))
                chunk, filled = 0, 0
    if filled:
        out.append(chr((chunk << (6 - filled)) + 63))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    """Parse one graph6 string (surrounding whitespace and the header are allowed)."""
    s = text.strip()
    base = 0
    if s.startswith(HEADER):
        s = s[len(HEADER):]
        base = len(HEADER)
    lead = len(text) - len(text.lstrip())
    base += lead

    def value(pos: int) -> int:
        if pos >= len(s):
            raise Graph6Error("unexpected end of input", base + pos)
        c = ord(s[pos])
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {s[pos]!r} outside the graph6 range 63..126", base + pos)
        return c - 63

    if not s:
        raise Graph6Error("empty input", base)
    if s[0] != "~":
        n, pos = value(0), 1
    elif len(s) > 1 and s[1] == "~":
        n = 0
        for i in range(2, 8):
            n = (n << 6) | value(i)
        pos = 8
    else:
        n = 0
        for i in range(1, 4):
            n = (n << 6) | value(i)
        pos = 4

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) - pos < nbytes:
        raise Graph6Error(f"expected {nbytes} adjacency bytes, found {len(s) - pos}", base + len(s))
    if len(s) - pos > nbytes:
        raise Graph6Error("trailing bytes after adjacency data", base + pos + nbytes)

    adj = [0] * n
    k = 0
    i, j = 0, 1
    for b in range(nbytes):
        chunk = value(pos + b)
        for shift in range(5, -1, -1):
            if k == nbits:
                if chunk & ((1 << (shift + 1)) - 1):
                    raise Graph6Error("non-zero padding bits", base + pos + b)
                break
            if chunk >> shift & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph._trusted(n, tuple(adj))
