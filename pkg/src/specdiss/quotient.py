"""Equitable partitions and quotient matrices of A_alpha."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .graph import Graph, to_mask
from .spectral import TOL, ConvergenceError, Tolerances, alpha_matrix


class PartitionError(ValueError):
    pass


@dataclass(frozen=True)
class QuotientMatrix:
    blocks: tuple[tuple[int, ...], ...]
    entries: np.ndarray = field(repr=False)

    @property
    def t(self) -> int:
        return len(self.blocks)


def _check_partition(n: int, blocks: Sequence[Sequence[int]]) -> None:
    seen = 0
    for b in blocks:
        if not b:
            raise PartitionError("empty block")
        for v in b:
            if not 0 <= v < n:
                raise PartitionError(f"vertex {v} outside 0..{n - 1}")
            if seen >> v & 1:
                raise PartitionError(f"vertex {v} appears in two blocks")
            seen |= 1 << v
    if seen != (1 << n) - 1:
        raise PartitionError("blocks do not cover every vertex")


def parse_blocks(text: str) -> list[list[int]]:
    """'0|1,2,3' -> [[0], [1, 2, 3]]."""
    return [[int(v) for v in part.split(",") if v.strip()] for part in text.split("|")]


def is_equitable(g: Graph, alpha: float, blocks: Sequence[Sequence[int]]) -> bool:
    """Every vertex of block i has the same number of neighbours in block j.

    ``alpha`` does not affect the answer: constant neighbour counts imply
    constant degrees per block and hence constant A_alpha row sums.
    """
    _check_partition(g.n, blocks)
    masks = [to_mask(b) for b in blocks]
    for b in blocks:
        first = [(g.adj[b[0]] & m).bit_count() for m in masks]
        for v in b[1:]:
            if [(g.adj[v] & m).bit_count() for m in masks] != first:
                return False
    return True


def matrix_quotient(r: np.ndarray, blocks: Sequence[Sequence[int]],
                    require_equitable: bool = True, atol: float = 1e-12) -> np.ndarray:
    """Average row-sum matrix of ``r`` over the partition ``blocks``."""
    r = np.asarray(r, dtype=float)
    _check_partition(r.shape[0], blocks)
    t = len(blocks)
    q = np.empty((t, t))
    for i, bi in enumerate(blocks):
        for j, bj in enumerate(blocks):
            sums = r[np.ix_(bi, bj)].sum(axis=1)
            if require_equitable and np.ptp(sums) > atol:
                raise PartitionError(f"row sums of block ({i}, {j}) are not constant")
            q[i, j] = sums.mean()
    return q


def quotient_matrix(g: Graph, alpha: float, blocks: Sequence[Sequence[int]]) -> QuotientMatrix:
    if not is_equitable(g, alpha, blocks):
        raise PartitionError("partition is not equitable")
    q = matrix_quotient(alpha_matrix(g, alpha).entries, blocks)
    return QuotientMatrix(tuple(tuple(b) for b in blocks), q)


def quotient_spectral_radius(q: QuotientMatrix | np.ndarray, tol: Tolerances = TOL) -> float:
    """Spectral radius of a nonnegative (generally nonsymmetric) matrix.

    Power iteration on R + sI with s the largest row sum.  For x > 0 the
    Collatz-Wielandt quotients min_i (Rx)_i/x_i and max_i (Rx)_i/x_i bracket
    the spectral radius; iteration stops once the bracket is narrower than
    ``tol.power_tol``.
    """
    r = q.entries if isinstance(q, QuotientMatrix) else np.asarray(q, dtype=float)
    if np.any(r < 0):
        raise ValueError("power iteration here needs a nonnegative matrix")
    t = r.shape[0]
    if t == 1:
        return float(r[0, 0])
    shift = float(r.sum(axis=1).max())
    b = r + shift * np.eye(t)
    x = np.ones(t) / np.sqrt(t)
    width = np.inf
    for _ in range(tol.power_cap):
        y = b @ x
        live = x > 1e-250
        ratios = y[live] / x[live]
        lo, hi = ratios.min(), ratios.max()
        width = hi - lo
        if width <= tol.power_tol * max(1.0, hi):
            return float(0.5 * (lo + hi) - shift)
        x = y / np.linalg.norm(y)
    raise ConvergenceError("power iteration hit its iteration cap", float(width))
