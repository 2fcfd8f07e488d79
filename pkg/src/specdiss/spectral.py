"""A_alpha matrices, a cyclic Jacobi eigensolver and characteristic polynomials.

``A_alpha(G) = alpha * D(G) + (1 - alpha) * A(G)``.  The Jacobi solver is
vectorized over a stack of matrices, so a whole corpus of same-order graphs
is diagonalized in one call.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .graph import Graph, bits


@dataclass
class Tolerances:
    jacobi_off: float = 1e-12       # off-diagonal Frobenius norm at exit
    jacobi_sweeps: int = 100
    power_tol: float = 1e-12        # Collatz-Wielandt bracket width
    power_cap: int = 1_000_000
    root_tol: float = 1e-13
    tie: float = 1e-9               # two indices closer than this are tied
    gap: float = 1e-7               # strict gap required for uniqueness claims


TOL = Tolerances()


class ConvergenceError(RuntimeError):
    def __init__(self, msg: str, residual: float):
        super().__init__(f"{msg} (achieved residual {residual:.3e})")
        self.residual = residual


@dataclass(frozen=True)
class AlphaMatrix:
    alpha: float
    entries: np.ndarray = field(repr=False)

    @property
    def n(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class SpectralResult:
    lam: float
    perron: np.ndarray
    full_spectrum: np.ndarray | None = None


def _check_alpha(alpha: float) -> None:
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha = {alpha} outside [0, 1]")


def alpha_matrix(g: Graph, alpha: float) -> AlphaMatrix:
    _check_alpha(alpha)
    a = (1.0 - alpha) * g.adjacency_matrix()
    a[np.diag_indices(g.n)] = [alpha * d for d in g.degrees()]
    a.setflags(write=False)
    return AlphaMatrix(alpha, a)


def alpha_matrices(graphs: Sequence[Graph], alpha: float) -> np.ndarray:
    """Stack of A_alpha matrices for graphs of a common order."""
    _check_alpha(alpha)
    n = graphs[0].n
    out = np.zeros((len(graphs), n, n))
    for k, g in enumerate(graphs):
        for v, nb in enumerate(g.adj):
            out[k, v, bits(nb)] = 1.0 - alpha
            out[k, v, v] = alpha * nb.bit_count()
    return out


def jacobi_eigh(mats: np.ndarray, tol: Tolerances = TOL, vectors: bool = True):
    """Eigen-decompose symmetric matrices by cyclic-by-row Jacobi rotations.

    ``mats`` has shape (k, n, n) or (n, n).  Returns (eigenvalues, eigenvectors)
    with eigenvalues in ascending order and eigenvectors as columns.  Each
    rotation zeroes one off-diagonal pair in every matrix of the stack at once.
    """
    a = np.array(mats, dtype=float)
    single = a.ndim == 2
    if single:
        a = a[None]
    k, n, _ = a.shape
    v = np.broadcast_to(np.eye(n), (k, n, n)).copy() if vectors else None
    scale = max(1.0, float(np.abs(a).max(initial=0.0)))
    # rounding leaves an off-diagonal floor of roughly eps * ||A|| * n
    target = max(tol.jacobi_off, 4 * np.finfo(float).eps * scale * n)
    pairs = [(p, q) for p in range(n - 1) for q in range(p + 1, n)]

    offdiag = ~np.eye(n, dtype=bool)

    def off_norm():
        # summed directly: total minus diagonal would cancel down to ~sqrt(eps)
        return np.sqrt((a[:, offdiag] ** 2).sum(axis=1))

    off = off_norm()
    sweeps = 0
    while n > 1 and off.max() > target:
        if sweeps == tol.jacobi_sweeps:
            raise ConvergenceError("Jacobi iteration did not converge", float(off.max()))
        for p, q in pairs:
            apq = a[:, p, q]
            active = np.abs(apq) > 1e-300
            if not active.any():
                continue
            safe = np.where(active, apq, 1.0)
            theta = (a[:, q, q] - a[:, p, p]) / (2.0 * safe)
            big = np.abs(theta) > 1e150
            th = np.where(big, 1.0, theta)
            t = np.where(th >= 0, 1.0, -1.0) / (np.abs(th) + np.sqrt(1.0 + th * th))
            t = np.where(big, 0.5 / np.where(big, theta, 1.0), t)
            t = np.where(active, t, 0.0)
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c
            cc, ss = c[:, None], s[:, None]
            ap, aq = a[:, :, p].copy(), a[:, :, q]
            a[:, :, p] = cc * ap - ss * aq
            a[:, :, q] = ss * ap + cc * aq
            ap, aq = a[:, p, :].copy(), a[:, q, :]
            a[:, p, :] = cc * ap - ss * aq
            a[:, q, :] = ss * ap + cc * aq
            if vectors:
                vp, vq = v[:, :, p].copy(), v[:, :, q]
                v[:, :, p] = cc * vp - ss * vq
                v[:, :, q] = ss * vp + cc * vq
        sweeps += 1
        off = off_norm()
    w = np.einsum("kii->ki", a).copy()
    order = np.argsort(w, axis=1, kind="stable")
    w = np.take_along_axis(w, order, axis=1)
    if vectors:
        v = np.take_along_axis(v, order[:, None, :], axis=2)
    if single:
        return w[0], (v[0] if vectors else None)
    return w, v


def _matrix_components(m: np.ndarray) -> list[list[int]]:
    n = m.shape[0]
    nz = [np.flatnonzero(m[i]).tolist() for i in range(n)]
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        for v in comp:
            for u in nz[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
        comps.append(sorted(comp))
    return comps


def spectral_radius(m: AlphaMatrix, connected_hint: bool = False,
                    full: bool = False, tol: Tolerances = TOL) -> SpectralResult:
    """Largest eigenvalue and a nonnegative unit eigenvector.

    The eigenproblem is solved per connected block of the matrix; the block
    with the largest eigenvalue (first one on ties) supplies the Perron vector
    and all other entries are zero.
    """
    entries = m.entries
    n = m.n
    comps = [list(range(n))] if connected_hint else _matrix_components(entries)
    best = None
    for comp in comps:
        w, vec = jacobi_eigh(entries[np.ix_(comp, comp)], tol)
        if best is None or w[-1] > best[0] + tol.tie:
            best = (w[-1], comp, vec[:, -1])
    lam, comp, x = best
    perron = np.zeros(n)
    x = x if x.sum() >= 0 else -x
    perron[comp] = np.abs(x)
    perron /= np.linalg.norm(perron)
    if connected_hint and not np.all(perron > 0):
        raise ConvergenceError("Perron vector of a connected graph has a non-positive entry",
                               float(perron.min()))
    spectrum = None
    if full:
        spectrum = jacobi_eigh(entries, tol, vectors=False)[0][::-1].copy()
    return SpectralResult(float(lam), perron, spectrum)


def index(g: Graph, alpha: float) -> float:
    """lambda_alpha(G)."""
    return spectral_radius(alpha_matrix(g, alpha)).lam


def indices(graphs: Sequence[Graph], alpha: float, tol: Tolerances = TOL) -> np.ndarray:
    """lambda_alpha for many graphs, batching same-order graphs through Jacobi."""
    out = np.empty(len(graphs))
    by_n: dict[int, list[int]] = {}
    for i, g in enumerate(graphs):
        by_n.setdefault(g.n, []).append(i)
    for n, idx in by_n.items():
        if n == 1:
            out[idx] = 0.0
            continue
        for start in range(0, len(idx), 4096):
            chunk = idx[start:start + 4096]
            w, _ = jacobi_eigh(alpha_matrices([graphs[i] for i in chunk], alpha), tol, vectors=False)
            out[chunk] = w[:, -1]
    return out


def perron_vector(g: Graph, alpha: float) -> np.ndarray:
    return spectral_radius(alpha_matrix(g, alpha), connected_hint=True).perron


def det(m: np.ndarray) -> float:
    """Determinant by Gaussian elimination with partial pivoting."""
    a = np.array(m, dtype=float)
    n = a.shape[0]
    result = 1.0
    for col in range(n):
        piv = col + int(np.argmax(np.abs(a[col:, col])))
        if a[piv, col] == 0.0:
            return 0.0
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
            result = -result
        pivot = a[col, col]
        result *= pivot
        if col + 1 < n:
            f = a[col + 1:, col] / pivot
            a[col + 1:, col:] -= f[:, None] * a[col, col:]
    return float(result)


def dets(stack: np.ndarray) -> np.ndarray:
    """Determinants of a (k, n, n) stack, same elimination as ``det``."""
    a = np.array(stack, dtype=float)
    k, n, _ = a.shape
    rows = np.arange(k)
    result = np.ones(k)
    for col in range(n):
        piv = col + np.argmax(np.abs(a[:, col:, col]), axis=1)
        swap = piv != col
        if swap.any():
            top = a[rows, col].copy()
            a[rows, col] = a[rows, piv]
            a[rows, piv] = top
            result[swap] = -result[swap]
        pivot = a[:, col, col]
        result *= pivot
        if col + 1 < n:
            safe = np.where(pivot == 0.0, 1.0, pivot)
            f = a[:, col + 1:, col] / safe[:, None]
            a[:, col + 1:, col:] -= f[:, :, None] * a[:, col, None, col:]
    return result


def char_poly_eval(m: AlphaMatrix | np.ndarray, x: float) -> float:
    """det(xI - M)."""
    entries = m.entries if isinstance(m, AlphaMatrix) else np.asarray(m, dtype=float)
    return det(x * np.eye(entries.shape[0]) - entries)


def max_row_sum(m: AlphaMatrix | np.ndarray) -> float:
    entries = m.entries if isinstance(m, AlphaMatrix) else np.asarray(m)
    return float(np.abs(entries).sum(axis=1).max(initial=0.0))
