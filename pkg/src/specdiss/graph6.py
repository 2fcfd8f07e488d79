"""graph6 encoding (one graph per line, printable ASCII 63..126)."""
from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import Graph, GraphError

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    pass


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([63 + n])
    if n <= 258047:
        return bytes([126] + [63 + (n >> s & 63) for s in (12, 6, 0)])
    raise Graph6Error(f"n = {n} too large for graph6")


def encode(g: Graph) -> str:
    out = bytearray(_encode_n(g.n))
    acc = 0
    k = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            k += 1
            if k == 6:
                out.append(63 + acc)
                acc = k = 0
    if k:
        out.append(63 + (acc << (6 - k)))
    return out.decode("ascii")


def decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    data = s.encode("ascii", errors="replace")
    if not data:
        raise Graph6Error("empty graph6 string")
    for c in data:
        if not 63 <= c <= 126:
            raise Graph6Error(f"character {chr(c)!r} outside the graph6 range")
    if data[0] == 126:
        if len(data) < 4 or data[1] == 126:
            raise Graph6Error("malformed size header")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"expected {(nbits + 5) // 6} data bytes for n = {n}, got {len(body)}")
    acc = 0
    for c in body:
        acc = acc << 6 | (c - 63)
    pad = 6 * len(body) - nbits
    if acc & ((1 << pad) - 1):
        raise Graph6Error("non-zero padding bits")
    acc >>= pad
    adj = [0] * n
    k = nbits
    for j in range(1, n):
        for i in range(j):
            k -= 1
            if acc >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    try:
        return Graph(n, tuple(adj))
    except GraphError as exc:
        raise Graph6Error(str(exc)) from exc


def read_lines(stream: TextIO) -> Iterator[Graph]:
    for line in stream:
        line = line.strip()
        if line:
            yield decode(line)


def write_lines(graphs: Iterable[Graph], stream: TextIO) -> None:
    for g in graphs:
        stream.write(encode(g) + "\n")
