"""Structural graph operations whose effect on lambda_alpha is monotone.

Everything here is purely combinatorial; callers that need Perron-vector
information (e.g. to decide a shifting direction) compute it themselves.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .graph import (Graph, GraphError, add_edge, add_vertices, bfs_distances, bfs_order, bits,
                    delete_vertices, is_tree, remove_edge, structural_sets)

KINDS = ("SHIFT", "REBALANCE", "SUBDIVIDE", "TRIPLE_SUBDIVIDE", "OPT_SUBDIV")


class TransformError(GraphError):
    pass


@dataclass(frozen=True)
class TransformRecord:
    kind: str
    before: Graph
    after: Graph
    moved: dict = field(default_factory=dict)


def shift_neighbors(g: Graph, u: int, v: int, moved: Iterable[int] | int) -> Graph:
    """G - {v v_i} + {u v_i} for every v_i in ``moved``."""
    vs = bits(moved) if isinstance(moved, int) else sorted(set(moved))
    if u == v:
        raise TransformError("u and v must differ")
    if not vs:
        raise TransformError("nothing to move")
    for w in vs:
        if w == u:
            raise TransformError(f"cannot move u={u} onto itself")
        if not g.has_edge(v, w):
            raise TransformError(f"{w} is not a neighbour of v={v}")
        if g.has_edge(u, w):
            raise TransformError(f"{w} is already a neighbour of u={u}")
    h = g
    for w in vs:
        h = add_edge(remove_edge(h, v, w), u, w)
    return h


def pendant_paths(g: Graph, u: int) -> list[list[int]]:
    """Pendant paths hanging at ``u``, each as [u, w_1, ..., leaf], in neighbour order."""
    out = []
    if g.degree(u) < 2:
        return out
    for w in g.neighbors(u):
        prev, cur = u, w
        seq = [u, w]
        while g.degree(cur) == 2:
            nxt = g.adj[cur] & ~(1 << prev)
            prev, cur = cur, nxt.bit_length() - 1
            if cur == u:
                break
            seq.append(cur)
        if cur != u and g.degree(cur) == 1:
            out.append(seq)
    return out


def rebalance_pendant_paths(g: Graph, u: int, s: int, t: int, direction: str = "away") -> Graph:
    """Turn pendant paths of lengths (s, t) at ``u`` into (s+1, t-1) ("away")
    or (s-1, t+1) ("toward_balance") by moving one end vertex.

    A length of 0 stands for "no path"; the moved leaf then hangs directly at u.
    """
    paths = pendant_paths(g, u)
    a = next((p for p in paths if len(p) - 1 == s), None) if s > 0 else None
    b = next((p for p in paths if len(p) - 1 == t and p is not a), None) if t > 0 else None
    if (s > 0 and a is None) or (t > 0 and b is None):
        raise TransformError(f"pendant paths of lengths {s} and {t} not found at {u}")
    if direction == "away":
        if t < 1:
            raise TransformError("moving away from balance needs t >= 1")
        src, dst = b, a
    elif direction == "toward_balance":
        if s < 1:
            raise TransformError("moving toward balance needs s >= 1")
        src, dst = a, b
    else:
        raise TransformError(f"unknown direction {direction!r}")
    leaf = src[-1]
    anchor = dst[-1] if dst is not None else u
    return add_edge(remove_edge(g, src[-2], leaf), anchor, leaf)


def subdivide(g: Graph, u: int, v: int) -> Graph:
    """Replace uv by u-w-v with w = n."""
    if not g.has_edge(u, v):
        raise TransformError(f"({u}, {v}) is not an edge")
    h = add_vertices(remove_edge(g, u, v), 1)
    return add_edge(add_edge(h, u, g.n), g.n, v)


def triple_subdivide(g: Graph, u: int, v: int) -> Graph:
    """Replace uv by u-x-y-z-v with x, y, z = n, n+1, n+2."""
    if not g.has_edge(u, v):
        raise TransformError(f"({u}, {v}) is not an edge")
    h = add_vertices(remove_edge(g, u, v), 3)
    x, y, z = g.n, g.n + 1, g.n + 2
    for a, b in ((u, x), (x, y), (y, z), (z, v)):
        h = add_edge(h, a, b)
    return h


def _walk(g: Graph, start: int, came_from: int) -> int:
    """Follow degree-2 vertices from ``start`` away from ``came_from``; return the stop vertex."""
    prev, cur = came_from, start
    seen = {came_from}
    while g.degree(cur) == 2 and cur not in seen:
        seen.add(cur)
        nxt = g.adj[cur] & ~(1 << prev)
        prev, cur = cur, nxt.bit_length() - 1
    return cur


def on_internal_path(g: Graph, u: int, v: int) -> bool:
    """Whether uv lies on a path whose ends have degree >= 3 and whose inner
    vertices all have degree 2 (a single edge between two such ends counts)."""
    if not g.has_edge(u, v):
        return False
    a = _walk(g, u, v)
    b = _walk(g, v, u)
    return a != b and g.degree(a) >= 3 and g.degree(b) >= 3


def internal_path_edges(g: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u, v in g.edges() if on_internal_path(g, u, v)]


def first_internal_edge(g: Graph) -> tuple[int, int]:
    """First internal-path edge met by a BFS from vertex 0 (neighbours in index order)."""
    for v in bfs_order(g, 0):
        for w in g.neighbors(v):
            if on_internal_path(g, v, w):
                return (v, w)
    raise TransformError("graph has no internal path")


def branching_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) >= 3]


def _tree_path(g: Graph, x: int, y: int) -> list[int]:
    parent = {x: None}
    queue = [x]
    for v in queue:
        for w in g.neighbors(v):
            if w not in parent:
                parent[w] = v
                queue.append(w)
    seq = [y]
    while seq[-1] != x:
        seq.append(parent[seq[-1]])
    return seq[::-1]


def choose_diameter_path(t: Graph) -> list[int]:
    """Diameter path u_1 ... u_d maximizing deg(u_2), ties broken lexicographically."""
    dist = [bfs_distances(t, v) for v in range(t.n)]
    diam = max(max(row) for row in dist)
    best = None
    for x in range(t.n):
        for y in range(t.n):
            if x != y and dist[x][y] == diam:
                seq = _tree_path(t, x, y)
                key = (-t.degree(seq[1]), seq)
                if best is None or key < best:
                    best = key
    return best[1]


def optimal_subdivision_transform(t: Graph) -> TransformRecord:
    """Equal-order tree with a smaller A_alpha-index and tau dropping by at most one.

    Along a diameter path u_1 u_2 u_3 ... chosen with deg(u_2) maximal:
      deg(u_2) = deg(u_3) = 2   triple-subdivide an internal edge, delete u_1, u_2, u_3
      deg(u_2) = 2, deg(u_3) > 2  subdivide an internal edge, delete u_1
      deg(u_2) = 3              triple-subdivide, delete u_1, u_2 and u_2's other leaf
      deg(u_2) >= 4             subdivide, delete u_1
    """
    if not is_tree(t):
        raise TransformError("input is not a tree")
    if len(branching_vertices(t)) < 2:
        raise TransformError("tree needs at least two branching vertices")
    seq = choose_diameter_path(t)
    u1, u2, u3 = seq[0], seq[1], seq[2]
    d2, d3 = t.degree(u2), t.degree(u3)
    pend, _, _ = structural_sets(t)
    side = t.adj[u2] & ~(1 << u3)
    if side & ~pend:
        raise TransformError(f"u_2={u2} has a non-pendant neighbour off the diameter path")
    edge = first_internal_edge(t)
    if d2 == 2 and d3 == 2:
        case, after, gone = 1, triple_subdivide(t, *edge), [u1, u2, u3]
    elif d2 == 2:
        case, after, gone = 2, subdivide(t, *edge), [u1]
    elif d2 == 3:
        other = [w for w in bits(side) if w != u1]
        case, after, gone = 3, triple_subdivide(t, *edge), [u1, u2, other[0]]
    else:
        case, after, gone = 4, subdivide(t, *edge), [u1]
    result = delete_vertices(after, gone)
    return TransformRecord("OPT_SUBDIV", t, result,
                           {"case": case, "edge": edge, "deleted": gone, "diameter_path": seq})


def subdivision_sequence(t: Graph, cap: int = 10_000) -> list[Graph]:
    """Apply the optimal transform until at most one branching vertex remains."""
    seq = [t]
    while len(branching_vertices(seq[-1])) >= 2:
        if len(seq) > cap:
            raise TransformError("subdivision sequence did not terminate")
        seq.append(optimal_subdivision_transform(seq[-1]).after)
    return seq


def record(kind: str, before: Graph, after: Graph, **moved) -> TransformRecord:
    if kind not in KINDS:
        raise ValueError(f"unknown transform kind {kind!r}")
    return TransformRecord(kind, before, after, moved)

