"""Simple undirected graphs on at most 64 vertices with bitset adjacency.

Vertex sets are plain ``int`` bitmasks throughout the package (bit ``v`` set
means vertex ``v`` is a member).  Graphs are immutable; every operation that
changes structure returns a new :class:`Graph`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

MAX_VERTICES = 64


class GraphError(ValueError):
    """Invalid vertex index, edge, or construction parameter."""


def bits(mask: int) -> list[int]:
    """Members of a vertex mask in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside the vertex set")
            if nb >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if adj[u] >> v & 1:
                raise GraphError(f"duplicate edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @property
    def m(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1.0
        return a

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} outside 0..{g.n - 1}")


# ---------------------------------------------------------------------------
# named graphs

def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """S_n = K_{1,n-1}; the centre is vertex 0."""
    if n < 1:
        raise GraphError("star needs n >= 1")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with parts {0..a-1} and {a..a+b-1}."""
    if a < 1 or b < 1:
        raise GraphError("complete bipartite graph needs both parts non-empty")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


_NAMED = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "star": (star, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
}


def make_named(kind: str, *params: int) -> Graph:
    try:
        fn, arity = _NAMED[kind]
    except KeyError:
        raise GraphError(f"unknown graph kind {kind!r}") from None
    if len(params) != arity:
        raise GraphError(f"{kind} takes {arity} integer parameter(s), got {len(params)}")
    if sum(params) > MAX_VERTICES:
        raise GraphError(f"{kind}{params} exceeds {MAX_VERTICES} vertices")
    return fn(*params)


# ---------------------------------------------------------------------------
# constructions

def disjoint_union(g: Graph, h: Graph) -> Graph:
    if g.n + h.n > MAX_VERTICES:
        raise GraphError("union exceeds the vertex cap")
    return Graph(g.n + h.n, g.adj + tuple(nb << g.n for nb in h.adj))


def join(g: Graph, h: Graph) -> Graph:
    """G ∨ H: vertices of ``g`` first, then those of ``h``."""
    u = disjoint_union(g, h)
    gmask, hmask = g.vertex_mask, h.vertex_mask << g.n
    adj = [nb | hmask if v < g.n else nb | gmask for v, nb in enumerate(u.adj)]
    return Graph(u.n, tuple(adj))


def union_all(graphs: Sequence[Graph]) -> Graph:
    out = Graph.empty(0)
    for g in graphs:
        out = disjoint_union(out, g)
    return out


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    if g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) already present")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    _check_vertex(g, u)
    _check_vertex(g, v)
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


def add_vertices(g: Graph, k: int) -> Graph:
    if g.n + k > MAX_VERTICES:
        raise GraphError("vertex cap exceeded")
    return Graph(g.n + k, g.adj + (0,) * k)


def delete_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    """Remove ``vertices``; survivors are renumbered keeping their relative order."""
    gone = 0
    for v in vertices:
        _check_vertex(g, v)
        gone |= 1 << v
    keep = [v for v in range(g.n) if not gone >> v & 1]
    return induced_subgraph(g, keep)


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """G[U] with ``vertices[i]`` becoming vertex ``i``."""
    index = {v: i for i, v in enumerate(vertices)}
    adj = []
    for v in vertices:
        adj.append(to_mask(index[u] for u in bits(g.adj[v]) if u in index))
    return Graph(len(vertices), tuple(adj))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Vertex ``v`` of ``g`` becomes vertex ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("relabelling is not a permutation")
    adj = [0] * g.n
    for v, nb in enumerate(g.adj):
        adj[perm[v]] = to_mask(perm[u] for u in bits(nb))
    return Graph(g.n, tuple(adj))


def attach_pendant_path(g: Graph, u: int, length: int) -> Graph:
    """Hang a path with ``length`` new vertices off ``u``; new vertices are appended."""
    _check_vertex(g, u)
    h = add_vertices(g, length)
    prev = u
    for i in range(length):
        h = add_edge(h, prev, g.n + i)
        prev = g.n + i
    return h


# ---------------------------------------------------------------------------
# predicates and structural sets

def components(g: Graph) -> list[int]:
    """Connected components as vertex masks, ordered by smallest vertex."""
    seen = 0
    comps = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def bipartition(g: Graph) -> tuple[int, int] | None:
    """Two colour classes as masks, or ``None`` when ``g`` has an odd cycle."""
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in bits(g.adj[v]):
                if colour[u] < 0:
                    colour[u] = 1 - colour[v]
                    stack.append(u)
                elif colour[u] == colour[v]:
                    return None
    return (to_mask(v for v in range(g.n) if colour[v] == 0),
            to_mask(v for v in range(g.n) if colour[v] == 1))


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def degree_sequence(g: Graph) -> tuple[int, ...]:
    return tuple(sorted(g.degrees(), reverse=True))


def predicates(g: Graph) -> dict:
    return {
        "is_connected": is_connected(g),
        "is_bipartite": is_bipartite(g),
        "is_tree": is_tree(g),
        "degree_sequence": degree_sequence(g),
    }


def structural_sets(g: Graph) -> tuple[int, int, int]:
    """(pendant vertices, quasi-pendant vertices, quasi-pendants of degree 2)."""
    deg = g.degrees()
    pendants = to_mask(v for v in range(g.n) if deg[v] == 1)
    quasi = to_mask(v for v in range(g.n) if g.adj[v] & pendants)
    quasi2 = to_mask(v for v in bits(quasi) if deg[v] == 2)
    return pendants, quasi, quasi2


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = [source]
    for v in queue:
        for u in bits(g.adj[v]):
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def bfs_order(g: Graph, source: int = 0) -> list[int]:
    seen = 1 << source
    order = [source]
    for v in order:
        for u in bits(g.adj[v] & ~seen):
            seen |= 1 << u
            order.append(u)
    return order
