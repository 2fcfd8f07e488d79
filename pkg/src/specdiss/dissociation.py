"""Exact dissociation numbers by branch and bound.

A dissociation set induces a subgraph of maximum degree at most one.  The
search keeps every vertex in one of three states (in / out / undecided),
propagates the forced exclusions after each decision, and branches on an
undecided vertex that lies on an induced P_3 of G[in ∪ undecided].
"""
from __future__ import annotations

import sys
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, bits, structural_sets, to_mask

ALL_SETS_LIMIT = 16


@dataclass(frozen=True)
class DissociationResult:
    tau: int
    witness: int
    is_good: bool
    all_maximum_sets: tuple[int, ...] | None = None

    def vertices(self) -> list[int]:
        return bits(self.witness)

    def split(self, g: Graph) -> tuple[int, int]:
        """(isolated part, matched part) of the witness inside G[S]."""
        s = self.witness
        isolated = to_mask(v for v in bits(s) if not g.adj[v] & s)
        return isolated, s & ~isolated


def is_dissociation_set(g: Graph, s: int) -> bool:
    adj = g.adj
    for v in bits(s):
        nb = adj[v] & s
        if nb & (nb - 1):
            return False
    return True


class _Search:
    def __init__(self, g: Graph):
        self.adj = g.adj
        self.best_size = -1
        self.best_set = 0
        self.stop_at = None

    def run(self, inn: int, und: int, floor: int, stop_at: int | None = None) -> None:
        self.best_size = floor
        self.best_set = 0
        self.stop_at = stop_at
        self._visit(inn, und)

    def _visit(self, inn: int, und: int) -> None:
        if self.stop_at is not None and self.best_size >= self.stop_at:
            return
        adj = self.adj
        while True:
            drop = 0
            for v in bits(inn):
                nin = adj[v] & inn
                if nin & (nin - 1):
                    return
                if nin:
                    drop |= adj[v] & und
            for u in bits(und & ~drop):
                nin = adj[u] & inn
                if nin & (nin - 1):
                    drop |= 1 << u
            if not drop:
                break
            und &= ~drop
        bound = inn.bit_count() + und.bit_count()
        if bound <= self.best_size:
            return
        cand = inn | und
        involved = 0
        for v in bits(cand):
            nb = adj[v] & cand
            if nb & (nb - 1):
                involved |= nb | (1 << v)
        if not involved:
            self.best_size = bound
            self.best_set = cand
            return
        pick, key = -1, (-1, 0)
        for v in bits(involved & und):
            k = ((adj[v] & cand).bit_count(), -v)
            if k > key:
                pick, key = v, k
        bit = 1 << pick
        self._visit(inn | bit, und & ~bit)
        if self.stop_at is not None and self.best_size >= self.stop_at:
            return
        self._visit(inn, und & ~bit)


def _max_constrained(g: Graph, forced_in: int = 0, forced_out: int = 0) -> tuple[int, int]:
    """Largest dissociation set containing ``forced_in`` and avoiding ``forced_out``.

    Returns (size, set), or (-1, 0) when the constraints are infeasible.
    """
    s = _Search(g)
    s.run(forced_in, g.vertex_mask & ~forced_in & ~forced_out, floor=-1)
    return s.best_size, s.best_set


def _exists(g: Graph, forced_in: int, forced_out: int, target: int) -> bool:
    s = _Search(g)
    s.run(forced_in, g.vertex_mask & ~forced_in & ~forced_out, floor=target - 1, stop_at=target)
    return s.best_size >= target


def _smallest_mask(g: Graph, size: int, forced_in: int = 0) -> int:
    """Numerically smallest dissociation set of ``size`` containing ``forced_in``.

    Decides vertices from the highest index down, excluding each one whenever
    a set of the required size survives the exclusion.
    """
    inn, out = forced_in, 0
    for v in reversed(range(g.n)):
        bit = 1 << v
        if inn & bit:
            continue
        if _exists(g, inn, out | bit, size):
            out |= bit
        else:
            inn |= bit
    return inn


def _guard_recursion(n: int) -> None:
    if sys.getrecursionlimit() < 4 * n + 100:
        sys.setrecursionlimit(4 * n + 100)


def dissociation_tau(g: Graph) -> int:
    """tau(G) only, without the canonical witness."""
    if g.n == 0:
        return 0
    _guard_recursion(g.n)
    return _max_constrained(g)[0]


def dissociation_number(g: Graph, canonical_witness: bool = True) -> DissociationResult:
    if g.n == 0:
        return DissociationResult(0, 0, True)
    _guard_recursion(g.n)
    tau, witness = _max_constrained(g)
    if canonical_witness:
        witness = _smallest_mask(g, tau)
    pend, _, quasi2 = structural_sets(g)
    good = (pend | quasi2) & ~witness == 0
    return DissociationResult(tau, witness, good)


def good_maximum_set(g: Graph) -> DissociationResult:
    """Maximum dissociation set containing every pendant vertex and every
    degree-2 quasi-pendant vertex, when one exists.

    ``is_good`` is False when the constrained optimum falls short of tau(G);
    the witness is then an unconstrained maximum set.
    """
    base = dissociation_number(g)
    if base.is_good:
        return base
    pend, _, quasi2 = structural_sets(g)
    forced = pend | quasi2
    size, _ = _max_constrained(g, forced_in=forced)
    if size == base.tau:
        return DissociationResult(base.tau, _smallest_mask(g, size, forced), True)
    return DissociationResult(base.tau, base.witness, False)


def all_maximum_dissociation_sets(g: Graph, limit: int = ALL_SETS_LIMIT) -> list[int]:
    if g.n > limit:
        raise ValueError(f"exhaustive listing is capped at n = {limit}")
    tau = dissociation_tau(g)
    out = []
    for combo in combinations(range(g.n), tau):
        s = to_mask(combo)
        if is_dissociation_set(g, s):
            out.append(s)
    return sorted(out)
