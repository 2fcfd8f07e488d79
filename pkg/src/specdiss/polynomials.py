"""Closed forms: the quartic whose largest root is lambda_alpha(S-dagger), its
signless-Laplacian cubic, root finding and the two square-root bounds."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


class RootError(ValueError):
    pass


@dataclass(frozen=True)
class PolyCoeffs:
    coeffs: tuple[float, ...]   # leading coefficient first

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        return np.polyval(self.coeffs, x)

    def derivative(self) -> "PolyCoeffs":
        d = self.degree
        return PolyCoeffs(tuple(c * (d - i) for i, c in enumerate(self.coeffs[:-1])))


def p_alpha_coeffs(n: int, tau: int, alpha: float) -> PolyCoeffs:
    a = alpha
    return PolyCoeffs((
        1.0,
        a * (n - 2 * tau - 6),
        8 * a**2 * tau - 4 * a**2 * n + 4 * a * tau - 2 * a * n - 2 * tau + n
        + 9 * a**2 + 6 * a - 3,
        a * (16 * a * n - a**2 * n - 8 * n - 28 * a * tau + 14 * tau - 20 * a + 10),
        2 * a**3 * n - 17 * a**2 * n + 16 * a * n - 4 * n + 24 * a**2 * tau
        - 24 * a * tau + 6 * tau - 2 * a**3 + 17 * a**2 - 16 * a + 4,
    ))


def q_cubic_coeffs(n: int, tau: int) -> PolyCoeffs:
    """Cubic in q whose largest root is the signless Laplacian index of S-dagger."""
    return PolyCoeffs((1.0, n - 2 * tau - 6, 8 * tau - 4 * n + 9, -n))


def _bisect(p: PolyCoeffs, lo: float, hi: float, tol: float) -> float:
    plo = p(lo)
    for _ in range(200):
        if hi - lo <= tol * max(1.0, abs(hi)):
            break
        mid = 0.5 * (lo + hi)
        pm = p(mid)
        if pm == 0:
            return mid
        if (pm > 0) == (plo > 0):
            lo, plo = mid, pm
        else:
            hi = mid
    return float(0.5 * (lo + hi))


def _sign_change_near(p: PolyCoeffs, x: float, hi: float, tol: float) -> float | None:
    scale = max(abs(x), 1.0)
    delta = scale * 1e-12
    while delta <= scale * 1e-6:
        lo, up = x - delta, min(x + delta, hi)
        plo, pup = p(lo), p(up)
        if plo == 0:
            return float(lo)
        if (plo > 0) != (pup > 0):
            return _bisect(p, lo, up, tol)
        delta *= 4
    return None


def _noise(p: PolyCoeffs, x: float) -> float:
    """Rounding-error scale of evaluating ``p`` at ``x``."""
    return 64 * np.finfo(float).eps * float(np.polyval(np.abs(p.coeffs), abs(x)))


def _newton(p: PolyCoeffs, x: float, tol: float) -> float:
    dp = p.derivative()
    for _ in range(200):
        f, d = p(x), dp(x)
        if f == 0 or d == 0:
            break
        step = f / d
        x -= step
        if abs(step) <= tol * max(1.0, abs(x)):
            break
    return float(x)


def _refine_near(p: PolyCoeffs, x: float, hi: float, tol: float) -> float | None:
    """Root of ``p`` next to the Newton estimate ``x``.

    Near a root of multiplicity m the values of ``p`` drown in rounding noise
    and only about 1/m of the digits are recoverable from ``p`` itself.  The
    root is, however, a simple root of the (m-1)-th derivative, so the highest
    derivative whose nearby root makes all lower derivatives vanish (up to
    noise) supplies the estimate.  Otherwise the root is simple and is
    bracketed and bisected.
    """
    derivs = [p]
    for _ in range(p.degree - 1):
        derivs.append(derivs[-1].derivative())
    window = 1e-2 * max(abs(x), 1.0)
    for k in range(len(derivs) - 1, 0, -1):
        r = _newton(derivs[k], x, tol)
        if abs(r - x) <= window and all(abs(derivs[j](r)) <= _noise(derivs[j], r) for j in range(k)):
            return r
    if p(x) == 0:
        return float(x)
    return _sign_change_near(p, x, hi, tol)


def largest_real_root(p: PolyCoeffs, bracket_hi: float, tol: float = 1e-13) -> float:
    """Largest real root of ``p`` in (0, bracket_hi].

    Newton's method started at ``bracket_hi`` descends monotonically onto the
    largest root when every root is real (the case for characteristic
    polynomials of symmetric or symmetrizable matrices).  The estimate is then
    polished: repeated roots through the derivatives, simple ones by bracketing
    and bisection.  If Newton misbehaves the bracket is scanned right to left
    instead.
    """
    if p.degree < 1:
        raise RootError("constant polynomial has no roots")
    c = np.asarray(p.coeffs, dtype=float)
    if c[0] < 0:
        p = PolyCoeffs(tuple(-c))
    if p.degree == 1:
        root = -p.coeffs[1] / p.coeffs[0]
        if not 0 < root <= bracket_hi:
            raise RootError("linear root outside the bracket")
        return float(root)
    dp = p.derivative()
    hi = float(bracket_hi)
    if p(hi) < 0:
        raise RootError("polynomial is negative at the upper bracket; a larger root exists")
    x = hi              # p(x) > 0 and p'(x) > 0 hold for every accepted iterate
    for _ in range(500):
        step = p(x) / dp(x)
        nxt = x - step
        if nxt <= 0:
            break
        fn, dn = p(nxt), dp(nxt)
        if fn <= 0 or dn <= 0:
            # only possible inside the rounding noise of a repeated root, or
            # once Newton has left the region above the largest root
            break
        x = nxt
        if abs(step) <= tol * max(1.0, abs(x)):
            break
    root = _refine_near(p, x, hi, tol)
    if root is not None:
        return root
    # fallback: scan right to left for the first sign change
    grid = np.linspace(0.0, hi, 20001)
    vals = p(grid)
    for i in range(len(grid) - 1, 0, -1):
        if vals[i] == 0:
            return float(grid[i])
        if (vals[i] > 0) != (vals[i - 1] > 0):
            return _bisect(p, grid[i - 1], grid[i], tol)
    raise RootError("no sign change found in (0, bracket_hi]")


def theta(alpha: float, n: int, tau: int) -> float:
    """Largest zero of the quartic; equals lambda_alpha(S-dagger_{n,tau})."""
    bracket = max(1.0, float(n)) + 1.0
    return float(largest_real_root(p_alpha_coeffs(n, tau, alpha), bracket))


def theta_q(n: int, tau: int) -> float:
    return float(largest_real_root(q_cubic_coeffs(n, tau), 2.0 * n + 1.0))


def star_bound(n: int, alpha: float) -> float:
    return 0.5 * (alpha * n + math.sqrt(alpha**2 * n**2 + 4 * (n - 1) * (1 - 2 * alpha)))


def bipartite_bound(n: int, tau: int, alpha: float) -> float:
    return 0.5 * (alpha * n + math.sqrt(alpha**2 * n**2 + 4 * tau * (n - tau) * (1 - 2 * alpha)))


def closed_form_bounds(n: int, tau: int, alpha: float) -> dict:
    if not 0 <= alpha < 1:
        raise ValueError("alpha must lie in [0, 1)")
    if not 1 <= tau <= n - 1:
        raise ValueError("tau must lie in [1, n - 1]")
    return {"star_bound": star_bound(n, alpha), "bipartite_bound": bipartite_bound(n, tau, alpha)}


def complete_bipartite_index(a: int, b: int, alpha: float) -> float:
    """lambda_alpha(K_{a,b})."""
    s = a + b
    return 0.5 * (alpha * s + math.sqrt(alpha**2 * s**2 + 4 * a * b * (1 - 2 * alpha)))
