"""Constructors for the named extremal trees and graphs.

Labelling convention, shared by every tree family: the base graph keeps its
own labels (a star's centre is 0, a path runs 0, 1, 2, ...), then come the
middle vertices of attached length-2 paths ("stems"), then every pendant
vertex.  Attachments are listed in the order of the parameters.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import ceil

from .dissociation import dissociation_tau
from .graph import (Graph, GraphError, add_edge, add_vertices, attach_pendant_path, bits, complete,
                    complete_bipartite, is_tree, join, path, remove_edge, star,
                    structural_sets, union_all)


class InfeasibleSpec(GraphError):
    pass


FAMILIES = (
    "MAX_CONNECTED", "COMPLETE_BIPARTITE_TAU", "S_DAGGER", "S_K1K2",
    "T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "W_RT", "Y1", "Y2", "Y3",
    "KN_MINUS_M", "CLASS_T1_MEMBER", "CLASS_T2_MEMBER", "CLASS_T3_MEMBER",
)


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: dict = field(default_factory=dict)

    def key(self) -> tuple:
        return (self.family, tuple(sorted((k, tuple(v) if isinstance(v, list) else v)
                                          for k, v in self.params.items())))

    def to_json(self) -> str:
        return json.dumps({"family": self.family, "params": self.params}, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "FamilySpec":
        data = json.loads(text)
        if not isinstance(data, dict) or "family" not in data:
            raise InfeasibleSpec('family spec must be an object with a "family" key')
        return cls(str(data["family"]).upper(), dict(data.get("params", {})))

    def __hash__(self):
        return hash(self.key())


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InfeasibleSpec(msg)


def _attach_paths(base: Graph, plan: list[tuple[int, int]], extra_leaves: list[int] = ()) -> Graph:
    """Attach ``count`` pendant paths of length 2 at each ``(vertex, count)``,
    then one pendant edge at each vertex of ``extra_leaves``."""
    stems = [v for v, c in plan for _ in range(c)]
    g = add_vertices(base, 2 * len(stems) + len(extra_leaves))
    n0 = base.n
    for i, v in enumerate(stems):
        g = add_edge(g, v, n0 + i)
        g = add_edge(g, n0 + i, n0 + len(stems) + i)
    for j, v in enumerate(extra_leaves):
        g = add_edge(g, v, n0 + 2 * len(stems) + j)
    return g


def _attach_leaves(base: Graph, plan: list[tuple[int, int]]) -> Graph:
    return _attach_paths(base, [], [v for v, c in plan for _ in range(c)])


# ---------------------------------------------------------------------------

def max_connected(n: int, tau: int) -> Graph:
    """K_{n-tau} joined with tau/2 copies of K_2 (plus K_1 when tau is odd)."""
    _require(2 <= tau <= n - 1, f"MAX_CONNECTED needs 2 <= tau <= n-1 (n={n}, tau={tau})")
    parts = [path(2)] * (tau // 2) + ([path(1)] if tau % 2 else [])
    return join(complete(n - tau), union_all(parts))


def complete_bipartite_tau(n: int, tau: int) -> Graph:
    _require(1 <= n - tau <= tau and tau >= 2,
             f"COMPLETE_BIPARTITE_TAU needs 2 <= tau, 1 <= n-tau <= tau (n={n}, tau={tau})")
    return complete_bipartite(tau, n - tau)


def s_dagger(n: int, tau: int) -> Graph:
    """Star S_{n-tau} with two pendant edges on each leaf and 3tau-2n+2 on the centre.

    Centre 0, star leaves 1..n-tau-1, their pendants next (two per leaf), the
    centre's pendants last.
    """
    k = n - tau - 1
    hub = 3 * tau - 2 * n + 2
    _require(ceil(2 * n / 3) <= tau <= n - 1,
             f"S_DAGGER needs ceil(2n/3) <= tau <= n-1 (n={n}, tau={tau})")
    _require(hub >= 0, f"S_DAGGER needs 3tau-2n+2 >= 0 (got {hub})")
    _require(k >= 0, "S_DAGGER needs n-tau-1 >= 0")
    base = star(k + 1)
    return _attach_leaves(base, [(i, 2) for i in range(1, k + 1)] + [(0, hub)])


def s_k1k2(k1: int, k2: int) -> Graph:
    """Star S_{k1+1} with k2 pendant paths of length two at the centre (vertex 0)."""
    _require(k1 >= 0 and k2 >= 0 and k1 + 2 * k2 >= 2, "S_K1K2 needs k1, k2 >= 0 and n >= 3")
    g = _attach_paths(Graph.empty(1), [(0, k2)])
    return _attach_leaves(g, [(0, k1)])


def t1(r: int, p: int) -> Graph:
    """P_4 = 0-1-2-3 with r length-2 pendant paths at 0 and p at 3."""
    _require(r >= 0 and p >= 0 and r + p >= 1, "T1 needs r, p >= 0 and r + p >= 1")
    return _attach_paths(path(4), [(0, r), (3, p)])


def t2(r: int, p: int) -> Graph:
    """T1_{r,p} plus a pendant edge at vertex 0 (the end carrying the r paths)."""
    _require(r >= 0 and p >= 0 and r + p >= 1, "T2 needs r, p >= 0 and r + p >= 1")
    return _attach_paths(path(4), [(0, r), (3, p)], [0])


def t3(r: int, p: int) -> Graph:
    """S_4 (centre 0, leaves 1, 2, 3) with r paths at 1 and p at 2."""
    _require(r >= 0 and p >= 0, "T3 needs r, p >= 0")
    return _attach_paths(star(4), [(1, r), (2, p)])


def t4(r: int, p: int) -> Graph:
    _require(r >= 0 and p >= 0, "T4 needs r, p >= 0")
    return _attach_paths(path(2), [(0, r), (1, p)])


def t5(r: int, p: int) -> Graph:
    """P_3 = 0-1-2; a pendant edge and r paths at 0, p paths at 2."""
    _require(r >= 0 and p >= 0, "T5 needs r, p >= 0")
    return _attach_paths(path(3), [(0, r), (2, p)], [0])


def t6(r: int, p: int) -> Graph:
    """S_{1,2} with r paths at one degree-2 quasi-pendant vertex (1) and p at the other (2)."""
    _require(r >= 0 and p >= 0, "T6 needs r, p >= 0")
    return _attach_paths(s_k1k2(1, 2), [(1, r), (2, p)])


def t7(r: int, p: int) -> Graph:
    _require(r >= 0 and p >= 0, "T7 needs r, p >= 0")
    return _attach_paths(path(4), [(1, r), (2, p)])


def t8(r: int, p: int) -> Graph:
    _require(r >= 0 and p >= 0, "T8 needs r, p >= 0")
    return _attach_paths(path(6), [(1, r), (4, p)])


def w_rt(r: int, t: int, n: int) -> Graph:
    """Centre 0 with r pendant edges, t length-2 paths and one path of length n-r-2t-1.

    Labels: centre 0, the t stems, the long path outward from the centre, the r
    leaves, then the t path ends.
    """
    length = n - r - 2 * t - 1
    _require(r >= 0 and t >= 0 and length >= 1, f"W_RT needs n-r-2t-1 >= 1 (got {length})")
    stems = list(range(1, t + 1))
    edges = [(0, s) for s in stems]
    prev = 0
    for v in range(t + 1, t + 1 + length):
        edges.append((prev, v))
        prev = v
    leaf0 = t + 1 + length
    edges += [(0, leaf0 + i) for i in range(r)]
    edges += [(s, leaf0 + r + i) for i, s in enumerate(stems)]
    return Graph.from_edges(n, edges)


def y1(n: int) -> Graph:
    _require(n >= 4, "Y1 needs n >= 4")
    return _attach_leaves(path(n - 2), [(0, 2)])


def y2(n: int) -> Graph:
    _require(n >= 8, "Y2 needs n >= 8")
    return attach_pendant_path(attach_pendant_path(path(n - 6), 0, 3), 0, 3)


def y3(n: int) -> Graph:
    _require(n >= 6, "Y3 needs n >= 6")
    return _attach_leaves(attach_pendant_path(path(n - 4), 0, 3), [(0, 1)])


def kn_minus_m(n: int) -> Graph:
    """K_n minus the maximum matching {01, 23, 45, ...}."""
    _require(n >= 3, "KN_MINUS_M needs n >= 3")
    g = complete(n)
    for i in range(0, n - 1, 2):
        g = remove_edge(g, i, i + 1)
    return g


def _distribution(total: int, k: int, given) -> list[int]:
    if given is not None:
        counts = [int(c) for c in given]
        _require(len(counts) == k, f"expected {k} pendant counts, got {len(counts)}")
    else:
        counts = [2] * k
        if k:
            counts[0] += total - 2 * k
    _require(all(c >= 2 for c in counts), "every star vertex needs at least two pendant edges")
    _require(sum(counts) == total, f"pendant counts must sum to {total}")
    return counts


def class_t1_member(n: int, tau: int, leaves=None) -> Graph:
    """Member of the first class: S_{n-tau+1}, one pendant edge at its centre,
    >= 2 pendant edges at each star leaf, tau-1 leaves in total."""
    k = n - tau
    _require(k >= 1, "class T1 needs tau <= n-1")
    counts = _distribution(tau - 2, k, leaves)
    return _attach_leaves(star(k + 1), [(0, 1)] + [(i + 1, c) for i, c in enumerate(counts)])


def class_t2_member(n: int, tau: int, leaves=None) -> Graph:
    k = n - tau
    _require(k >= 1, "class T2 needs tau <= n-1")
    counts = _distribution(tau - 1, k, leaves)
    return _attach_leaves(star(k + 1), [(i + 1, c) for i, c in enumerate(counts)])


def class_t3_member(n: int, tau: int, leaves=None) -> Graph:
    """S_{n-tau} with >= 2 pendant edges at every vertex; ``leaves[0]`` is the centre's count."""
    k = n - tau
    _require(k >= 1, "class T3 needs tau <= n-1")
    counts = _distribution(tau, k, leaves)
    # star leaves' pendants before the centre's, matching S_DAGGER's labels
    return _attach_leaves(star(k), [(i, c) for i, c in enumerate(counts) if i] + [(0, counts[0])])


# ---------------------------------------------------------------------------

_BUILDERS = {
    "MAX_CONNECTED": (max_connected, ("n", "tau")),
    "COMPLETE_BIPARTITE_TAU": (complete_bipartite_tau, ("n", "tau")),
    "S_DAGGER": (s_dagger, ("n", "tau")),
    "S_K1K2": (s_k1k2, ("k1", "k2")),
    "T1": (t1, ("r", "p")),
    "T2": (t2, ("r", "p")),
    "T3": (t3, ("r", "p")),
    "T4": (t4, ("r", "p")),
    "T5": (t5, ("r", "p")),
    "T6": (t6, ("r", "p")),
    "T7": (t7, ("r", "p")),
    "T8": (t8, ("r", "p")),
    "W_RT": (w_rt, ("r", "t", "n")),
    "Y1": (y1, ("n",)),
    "Y2": (y2, ("n",)),
    "Y3": (y3, ("n",)),
    "KN_MINUS_M": (kn_minus_m, ("n",)),
    "CLASS_T1_MEMBER": (class_t1_member, ("n", "tau")),
    "CLASS_T2_MEMBER": (class_t2_member, ("n", "tau")),
    "CLASS_T3_MEMBER": (class_t3_member, ("n", "tau")),
}


def build(spec: FamilySpec) -> Graph:
    try:
        fn, names = _BUILDERS[spec.family]
    except KeyError:
        raise InfeasibleSpec(f"unknown family {spec.family!r}") from None
    missing = [k for k in names if k not in spec.params]
    _require(not missing, f"{spec.family} is missing parameter(s) {missing}")
    args = [int(spec.params[k]) for k in names]
    kwargs = {}
    if spec.family.startswith("CLASS_") and "leaves" in spec.params:
        kwargs["leaves"] = spec.params["leaves"]
    g = fn(*args, **kwargs)
    if "n" in spec.params and g.n != int(spec.params["n"]):
        raise InfeasibleSpec(f"{spec.family} produced {g.n} vertices, expected {spec.params['n']}")
    return g


def spec(family: str, **params) -> FamilySpec:
    return FamilySpec(family, params)


@lru_cache(maxsize=None)
def _solver_tau(key) -> int:
    family, items = key
    return dissociation_tau(build(FamilySpec(family, {k: list(v) if isinstance(v, tuple) else v
                                                      for k, v in items})))


def expected_tau(fs: FamilySpec) -> int:
    """Dissociation number of the family member, closed form where one exists."""
    g = build(fs)
    p = fs.params
    closed = {
        "S_DAGGER": lambda: p["tau"],
        "MAX_CONNECTED": lambda: p["tau"],
        "COMPLETE_BIPARTITE_TAU": lambda: p["tau"],
        "CLASS_T1_MEMBER": lambda: p["tau"],
        "CLASS_T2_MEMBER": lambda: p["tau"],
        "CLASS_T3_MEMBER": lambda: p["tau"],
        "S_K1K2": lambda: g.n - 1,
        "T1": lambda: g.n - 2,
        "T2": lambda: g.n - 2,
        "KN_MINUS_M": lambda: 2,
    }
    if fs.family in closed:
        return int(closed[fs.family]())
    return _solver_tau(fs.key())


# ---------------------------------------------------------------------------
# membership in the three spider-like tree classes

CLASS_IDS = ("T1_CLASS", "T2_CLASS", "T3_CLASS")


def _star_centres(g: Graph, core: list[int]) -> list[int]:
    """Possible centres of ``g`` restricted to ``core`` if that induced graph is a star."""
    mask = sum(1 << v for v in core)
    deg = {v: (g.adj[v] & mask).bit_count() for v in core}
    k = len(core)
    if k == 1:
        return core
    if sum(deg.values()) != 2 * (k - 1):
        return []
    return [v for v in core if deg[v] == k - 1]


def class_membership(g: Graph, class_id: str, n: int, tau: int) -> bool:
    if not is_tree(g):
        raise GraphError("class membership is defined for trees only")
    if g.n != n or n < 3:
        return False
    pend, _, _ = structural_sets(g)
    leaves = bits(pend)
    core = [v for v in range(g.n) if not pend >> v & 1]
    hang = {v: (g.adj[v] & pend).bit_count() for v in core}
    if class_id == "T3_CLASS":
        return (len(core) == n - tau and len(leaves) == tau
                and bool(_star_centres(g, core)) and all(h >= 2 for h in hang.values()))
    if class_id in ("T1_CLASS", "T2_CLASS"):
        # the T1 centre's own pendant edge is stripped together with the other leaves
        centre_hang = 1 if class_id == "T1_CLASS" else 0
        if len(leaves) != tau - 1 or len(core) != n - tau + 1:
            return False
        return any(hang[c] == centre_hang and all(hang[v] >= 2 for v in core if v != c)
                   for c in _star_centres(g, core))
    raise ValueError(f"unknown class {class_id!r}")


def class_boundary(class_id: str, n: int, tau: int) -> bool:
    """True when tau hits a value excluded by the class definition's side condition."""
    if class_id == "T1_CLASS":
        return 3 * tau in (2 * n, 2 * n + 1)
    if class_id == "T2_CLASS":
        return 3 * tau == 2 * n
    return False

