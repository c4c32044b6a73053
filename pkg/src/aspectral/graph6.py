"""graph6 text codec, bit-exact per the published format description.

Only the undirected simple-graph form is handled: a size header N(n)
followed by the upper triangle of the adjacency matrix in column-major
order, six bits per printable byte (offset 63).
"""
from __future__ import annotations

from .errors import Graph6Error
from .graphs import Graph

_MAX_SMALL_N = 62
_MAX_N = 258047  # 3-byte size header limit; far beyond any cap here


def graph6_encode(g: Graph) -> str:
    n = g.n
    if n > _MAX_N:
        raise Graph6Error(f"n={n} too large for the 3-byte size header", 0)
    out = bytearray()
    if n <= _MAX_SMALL_N:
        out.append(n + 63)
    else:
        out.append(126)
        out.append(((n >> 12) & 63) + 63)
        out.append(((n >> 6) & 63) + 63)
        out.append((n & 63) + 63)
    bits = 0
    nbits = 0
    for col in range(1, n):
        for row in range(col):
            bits = (bits << 1) | (1 if g.has_edge(row, col) else 0)
            nbits += 1
            if nbits == 6:
                out.append(bits + 63)
                bits = 0
                nbits = 0
    if nbits:
        out.append((bits << (6 - nbits)) + 63)
    return out.decode("ascii")


def graph6_decode(text: str) -> Graph:
    data = text.encode("ascii", errors="replace")
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} outside the printable graph6 range", i)
    if not data:
        raise Graph6Error("empty graph6 string", 0)
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("6-byte size headers are not supported", 0)
        if len(data) < 4:
            raise Graph6Error("truncated size header", len(data))
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body_start = 4
    else:
        n = data[0] - 63
        body_start = 1
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - body_start < nbytes:
        raise Graph6Error(f"truncated edge data for n={n}", len(data))
    if len(data) - body_start > nbytes:
        raise Graph6Error(f"trailing bytes after edge data for n={n}", body_start + nbytes)
    edges = []
    bit_index = 0
    for col in range(1, n):
        for row in range(col):
            byte = data[body_start + bit_index // 6] - 63
            if byte >> (5 - bit_index % 6) & 1:
                edges.append((row, col))
            bit_index += 1
    # padding bits must be zero
    if nbits % 6:
        last = data[body_start + nbytes - 1] - 63
        if last & ((1 << (6 - nbits % 6)) - 1):
            raise Graph6Error("nonzero padding bits", body_start + nbytes - 1)
    return Graph(n, tuple(sorted(edges)))
