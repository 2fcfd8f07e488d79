"""Exhaustive non-isomorphic corpora at desk scale, bucketed by dissociation number.

Trees come from rooted level sequences (successor rule of Beyer and
Hedetniemi) followed by canonical deduplication; connected graphs on n vertices
come from every connected graph on n-1 vertices plus a new vertex joined to a
non-empty neighbour set, again deduplicated canonically.  Connected bipartite
graphs are filtered out of the connected corpus.

Two slower labelled sweeps (Pruefer sequences for trees, all edge subsets for
connected graphs) are kept here as independent cross-checks.
"""
from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass, field
from itertools import combinations, product
from pathlib import Path

import numpy as np

from . import graph6
from .canon import canonical_code, canonical_form
from .dissociation import dissociation_tau
from .graph import Graph, GraphError, is_bipartite, is_connected
from .spectral import TOL, indices

log = logging.getLogger(__name__)

KINDS = ("TREES", "CONNECTED", "CONNECTED_BIPARTITE")
CAPS = {"TREES": 12, "CONNECTED": 8, "CONNECTED_BIPARTITE": 8}
CACHE_ENV = "SPECDISS_CACHE_DIR"


class CorpusError(GraphError):
    pass


@dataclass
class GraphCorpus:
    n: int
    kind: str
    members: list[Graph]
    by_tau: dict[int, list[int]]
    _lam: dict = field(default_factory=dict, repr=False, compare=False)

    def __len__(self):
        return len(self.members)

    def taus(self) -> list[int]:
        return sorted(self.by_tau)

    def tau_of(self) -> list[int]:
        out = [0] * len(self.members)
        for t, idx in self.by_tau.items():
            for i in idx:
                out[i] = t
        return out

    def lambdas(self, alpha: float) -> np.ndarray:
        """lambda_alpha of every member, computed once per alpha."""
        key = float(alpha)
        if key not in self._lam:
            self._lam[key] = indices(self.members, key) if self.members else np.zeros(0)
        return self._lam[key]


def cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    return Path(env) if env else Path.home() / ".cache" / "specdiss"


def _check_request(kind: str, n: int) -> str:
    kind = kind.upper()
    if kind not in KINDS:
        raise CorpusError(f"unknown corpus kind {kind!r}; expected one of {KINDS}")
    if not 1 <= n <= CAPS[kind]:
        raise CorpusError(f"{kind} corpora are limited to 1 <= n <= {CAPS[kind]}, got n = {n}")
    return kind


# --------------------------------------------------------------------- trees

def level_sequences(n: int):
    """Canonical level sequences of all rooted trees on n vertices."""
    if n < 1:
        return
    seq = list(range(n))
    while True:
        yield tuple(seq)
        p = max((i for i in range(n) if seq[i] > 1), default=None)
        if p is None:
            return
        q = max(i for i in range(p) if seq[i] == seq[p] - 1)
        for i in range(p, n):
            seq[i] = seq[i - (p - q)]


def tree_from_levels(levels) -> Graph:
    last = {}
    edges = []
    for i, lv in enumerate(levels):
        if lv:
            edges.append((last[lv - 1], i))
        last[lv] = i
    return Graph.from_edges(len(levels), edges)


def _dedup(graphs) -> list[Graph]:
    seen: dict = {}
    for g in graphs:
        code = canonical_code(g)
        if code not in seen:
            seen[code] = g
    return [canonical_form(seen[c]) for c in sorted(seen)]


def _trees(n: int) -> list[Graph]:
    return _dedup(tree_from_levels(s) for s in level_sequences(n))


# ---------------------------------------------------------- connected graphs

def _augment(smaller: list[Graph], n: int) -> list[Graph]:
    out = []
    for g in smaller:
        base = Graph(n, g.adj + (0,))
        for mask in range(1, 1 << (n - 1)):
            adj = list(base.adj)
            adj[n - 1] = mask
            m = mask
            while m:
                low = m & -m
                adj[low.bit_length() - 1] |= 1 << (n - 1)
                m ^= low
            out.append(Graph(n, tuple(adj)))
    return _dedup(out)


# ------------------------------------------------------ independent sweeps

def pruefer_tree(seq, n: int) -> Graph:
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(n) if degree[x] == 1]
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def tree_code(t: Graph) -> str:
    """Centre-rooted parenthesis code; equal codes iff the trees are isomorphic."""
    n = t.n
    if n <= 2:
        return "(" * n + ")" * n
    deg = list(t.degrees())
    layer = [v for v in range(n) if deg[v] == 1]
    left = n
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            for w in t.neighbors(v):
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    centres = layer

    def enc(v, parent):
        return "(" + "".join(sorted(enc(w, v) for w in t.neighbors(v) if w != parent)) + ")"

    return min(enc(c, -1) for c in centres)


def labeled_tree_classes(n: int) -> set[str]:
    """Isomorphism classes of all n^(n-2) labelled trees (cross-check, small n)."""
    if n > 8:
        raise CorpusError("the labelled tree sweep is limited to n <= 8")
    if n <= 2:
        return {tree_code(Graph.from_edges(n, [(0, 1)] if n == 2 else []))}
    return {tree_code(pruefer_tree(s, n)) for s in product(range(n), repeat=n - 2)}


def labeled_connected_classes(n: int) -> set:
    """Canonical codes of all connected labelled graphs (cross-check, small n)."""
    if n > 6:
        raise CorpusError("the labelled graph sweep is limited to n <= 6")
    pairs = list(combinations(range(n), 2))
    found = set()
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(n, [e for i, e in enumerate(pairs) if mask >> i & 1])
        if is_connected(g):
            found.add(canonical_code(g))
    return found


# ------------------------------------------------------------------- corpora

def _build(kind: str, n: int, use_cache: bool) -> list[Graph]:
    if kind == "TREES":
        return _trees(n)
    if kind == "CONNECTED_BIPARTITE":
        return [g for g in generate("CONNECTED", n, use_cache).members if is_bipartite(g)]
    if n == 1:
        return [Graph(1, (0,))]
    return _augment(generate("CONNECTED", n - 1, use_cache).members, n)


def _bucket(members: list[Graph]) -> dict[int, list[int]]:
    by_tau: dict[int, list[int]] = {}
    for i, g in enumerate(members):
        by_tau.setdefault(dissociation_tau(g), []).append(i)
    return dict(sorted(by_tau.items()))


def _paths(kind: str, n: int, root: Path) -> tuple[Path, Path]:
    stem = f"{kind.lower()}_{n}"
    return root / f"{stem}.g6", root / f"{stem}.idx.json"


def save(corpus: GraphCorpus, root: Path | None = None) -> tuple[Path, Path]:
    root = Path(root) if root is not None else cache_dir()
    root.mkdir(parents=True, exist_ok=True)
    g6_path, idx_path = _paths(corpus.kind, corpus.n, root)
    tmp = g6_path.with_suffix(".g6.tmp")
    with open(tmp, "w") as fh:
        graph6.write_lines(corpus.members, fh)
    os.replace(tmp, g6_path)
    index = {"kind": corpus.kind, "n": corpus.n, "count": len(corpus),
             "tau": {str(t): idx for t, idx in corpus.by_tau.items()}}
    tmp = idx_path.with_suffix(".json.tmp")
    tmp.write_text(json.dumps(index, sort_keys=True) + "\n")
    os.replace(tmp, idx_path)
    return g6_path, idx_path


def load(kind: str, n: int, root: Path | None = None) -> GraphCorpus | None:
    """Read a cached corpus, or None if absent or inconsistent."""
    root = Path(root) if root is not None else cache_dir()
    g6_path, idx_path = _paths(kind, n, root)
    if not (g6_path.exists() and idx_path.exists()):
        return None
    try:
        with open(g6_path) as fh:
            members = list(graph6.read_lines(fh))
        index = json.loads(idx_path.read_text())
        by_tau = {int(t): [int(i) for i in idx] for t, idx in index["tau"].items()}
    except (ValueError, KeyError, GraphError) as exc:
        log.warning("ignoring unreadable cache %s: %s", g6_path, exc)
        return None
    covered = sorted(i for idx in by_tau.values() for i in idx)
    if index.get("count") != len(members) or covered != list(range(len(members))):
        log.warning("ignoring inconsistent cache %s", g6_path)
        return None
    return GraphCorpus(n, kind, members, dict(sorted(by_tau.items())))


_MEMO: dict = {}


def generate(kind: str, n: int, use_cache: bool = True) -> GraphCorpus:
    kind = _check_request(kind, n)
    root = cache_dir()
    key = (kind, n, str(root))
    if use_cache and key in _MEMO:
        return _MEMO[key]
    corpus = load(kind, n, root) if use_cache else None
    if corpus is None:
        members = _build(kind, n, use_cache)
        corpus = GraphCorpus(n, kind, members, _bucket(members))
        if use_cache:
            try:
                save(corpus, root)
            except OSError as exc:
                log.warning("could not write corpus cache under %s: %s", root, exc)
    if use_cache:
        _MEMO[key] = corpus
    return corpus


# ---------------------------------------------------------------- extremes

@dataclass(frozen=True)
class Extremum:
    winners: list[int]          # member indices within tie tolerance of the extremum
    value: float
    margin: float               # distance to the best non-winner (inf if none)


def extremum(corpus: GraphCorpus, tau: int, alpha: float, mode: str = "max",
             tie: float = TOL.tie) -> Extremum:
    if tau not in corpus.by_tau or not corpus.by_tau[tau]:
        raise CorpusError(f"no member of the {corpus.kind} corpus (n={corpus.n}) has tau = {tau}")
    if mode not in ("max", "min"):
        raise ValueError("mode must be 'max' or 'min'")
    idx = np.array(corpus.by_tau[tau])
    lam = corpus.lambdas(alpha)[idx]
    sign = 1.0 if mode == "max" else -1.0
    score = sign * lam
    best = score.max()
    close = score >= best - tie
    rest = score[~close]
    margin = float(best - rest.max()) if rest.size else float("inf")
    return Extremum(idx[close].tolist(), float(sign * best), margin)


def argmax_index(corpus: GraphCorpus, tau: int, alpha: float) -> tuple[list[Graph], float]:
    e = extremum(corpus, tau, alpha, "max")
    return [corpus.members[i] for i in e.winners], e.value


def argmin_index(corpus: GraphCorpus, tau: int, alpha: float) -> tuple[list[Graph], float]:
    e = extremum(corpus, tau, alpha, "min")
    return [corpus.members[i] for i in e.winners], e.value
