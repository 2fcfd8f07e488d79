"""Canonical labelling of small graphs.

Colour refinement brings the unit partition to its coarsest equitable
refinement; the search then individualizes vertices of the first smallest
non-singleton cell, re-refines, and keeps the lexicographically smallest
adjacency code over all discrete leaves.  Two vertices of the target cell with
identical neighbourhoods (apart from each other) are swapped by an automorphism
that fixes the partition, so only one of them is explored.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, bits, relabel

CANON_LIMIT = 12


@dataclass(frozen=True, order=True)
class CanonicalCode:
    n: int
    code: bytes

    def hex(self) -> str:
        return f"{self.n}:{self.code.hex()}"


def refine(g: Graph, cells: list[int]) -> list[int]:
    """Refine an ordered partition (list of vertex masks) until equitable.

    Cells split by the vector of neighbour counts into every current cell and
    the pieces are placed in sorted signature order, so the result depends only
    on the isomorphism type of (g, cells).
    """
    adj = g.adj
    while True:
        out = []
        changed = False
        for cell in cells:
            if cell & (cell - 1) == 0:
                out.append(cell)
                continue
            groups: dict[tuple, int] = {}
            for v in bits(cell):
                row = adj[v]
                key = tuple((row & c).bit_count() for c in cells)
                groups[key] = groups.get(key, 0) | (1 << v)
            if len(groups) > 1:
                changed = True
                out.extend(groups[k] for k in sorted(groups))
            else:
                out.append(cell)
        cells = out
        if not changed:
            return cells


def coarsest_equitable_partition(g: Graph) -> list[list[int]]:
    """Blocks of the coarsest equitable partition, as sorted vertex lists."""
    if g.n == 0:
        return []
    return [bits(c) for c in refine(g, [g.vertex_mask])]


def _leaf_code(g: Graph, cells: list[int]) -> tuple[int, ...]:
    pos = {}
    for i, c in enumerate(cells):
        pos[c.bit_length() - 1] = i
    rows = [0] * g.n
    for v, nb in enumerate(g.adj):
        r = 0
        for u in bits(nb):
            r |= 1 << (g.n - 1 - pos[u])
        rows[pos[v]] = r
    return tuple(rows)


def _search(g: Graph, cells: list[int], best: list) -> None:
    cells = refine(g, cells)
    target = -1
    size = g.n + 1
    for i, c in enumerate(cells):
        k = c.bit_count()
        if 1 < k < size:
            target, size = i, k
    if target < 0:
        code = _leaf_code(g, cells)
        if best[0] is None or code < best[0]:
            best[0] = code
            best[1] = [c.bit_length() - 1 for c in cells]
        return
    cell = cells[target]
    tried: list[int] = []
    for v in bits(cell):
        if any(g.adj[v] & ~(1 << u) == g.adj[u] & ~(1 << v) for u in tried):
            continue
        tried.append(v)
        rest = cell & ~(1 << v)
        _search(g, cells[:target] + [1 << v, rest] + cells[target + 1:], best)


def canonical_order(g: Graph) -> list[int]:
    """Vertex order whose adjacency code is the canonical one."""
    if g.n == 0:
        return []
    best: list = [None, None]
    _search(g, [g.vertex_mask], best)
    return best[1]


def canonical_code(g: Graph, limit: int = CANON_LIMIT) -> CanonicalCode:
    if g.n > limit:
        raise GraphError(f"exact canonical form is only supported for n <= {limit}")
    h = canonical_form(g)
    # upper triangle, row-major, packed big-endian
    acc = 0
    nbits = 0
    for i in range(h.n):
        for j in range(i + 1, h.n):
            acc = acc << 1 | (h.adj[i] >> j & 1)
            nbits += 1
    nbytes = (nbits + 7) // 8
    return CanonicalCode(g.n, (acc << (8 * nbytes - nbits)).to_bytes(nbytes, "big") if nbytes else b"")


def canonical_form(g: Graph) -> Graph:
    order = canonical_order(g)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return relabel(g, perm)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
