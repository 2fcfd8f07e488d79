"""Brute-force verification of the extremal results at desk scale.

Every claim is checked against exhaustive corpora (extremal statements) or
against seeded random samples (monotonicity properties).  The outcome is a
``VerificationReport`` whose JSON form is deterministic apart from the
runtime field.
"""
from __future__ import annotations

import json
import math
import random
import time
from dataclasses import dataclass, field
from math import ceil

import numpy as np

from . import families as fam
from . import graph6
from .canon import canonical_code, coarsest_equitable_partition
from .dissociation import dissociation_tau, good_maximum_set
from .enumeration import CorpusError, extremum, generate
from .graph import (Graph, add_edge, attach_pendant_path, bits, complete_bipartite, is_connected,
                    is_tree, star, structural_sets)
from .polynomials import bipartite_bound, complete_bipartite_index, star_bound, theta, theta_q
from .quotient import is_equitable, quotient_matrix, quotient_spectral_radius
from .spectral import TOL, alpha_matrix, dets, index, jacobi_eigh, perron_vector
from .transforms import (TransformError, branching_vertices, internal_path_edges,
                         optimal_subdivision_transform, shift_neighbors, subdivide, triple_subdivide)

SCHEMA = 1
DEFAULT_ALPHAS = (0.0, 0.25, 0.5, 0.75, 0.9)
STRICT = 1e-10          # margin demanded by strict inequalities

CLAIMS = (
    "THM_1_1", "THM_1_2", "THM_1_3", "THM_1_4",
    "THM_1_5_I", "THM_1_5_II", "THM_1_5_III", "THM_1_5_IV",
    "LEM_2_2", "LEM_2_4", "LEM_2_5", "LEM_2_6", "LEM_2_7", "LEM_2_8",
    "LEM_3_1", "LEM_4_1", "LEM_4_2", "LEM_4_4",
    "COR_5_1", "COR_5_2", "COR_5_3", "COR_5_4", "COR_5_5",
    "APPENDIX_GRID",
)

# default order ranges (inclusive); random suites use them for sample sizes
_DEFAULT_N = {
    "THM_1_1": (3, 7), "COR_5_1": (3, 7),
    "THM_1_2": (3, 8), "COR_5_2": (3, 8),
    "THM_1_3": (3, 9), "COR_5_3": (3, 9),
    "THM_1_4": (3, 8), "COR_5_4": (3, 8),
    "THM_1_5_I": (3, 8), "THM_1_5_II": (3, 8), "THM_1_5_III": (4, 8), "THM_1_5_IV": (6, 8),
    "COR_5_5": (3, 8),
    "LEM_2_2": (3, 10), "LEM_2_8": (5, 8), "LEM_3_1": (3, 14),
    "LEM_2_4": (3, 9), "LEM_2_5": (2, 7), "LEM_2_6": (6, 12), "LEM_2_7": (3, 10),
    "LEM_4_1": (3, 12), "LEM_4_2": (6, 14),
}
_DEFAULT_SAMPLES = {"LEM_2_4": 200, "LEM_2_5": 200, "LEM_2_6": 200, "LEM_2_7": 200,
                    "LEM_4_1": 500, "LEM_4_2": 100}


class ClaimError(ValueError):
    """Unknown claim or parameters outside what the claim supports."""


@dataclass
class VerificationReport:
    claim_id: str
    params: dict
    status: str = "pass"
    winners: list = field(default_factory=list)
    counterexample: dict | None = None
    runtime_s: float = 0.0
    summary: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def fail(self, **detail) -> None:
        self.status = "fail"
        self.summary["failures"] = self.summary.get("failures", 0) + 1
        if self.counterexample is None:
            self.counterexample = _clean(detail)

    def to_dict(self, runtime: bool = True) -> dict:
        out = {"schema": SCHEMA, "claim_id": self.claim_id, "params": _clean(self.params),
               "status": self.status, "winners": _clean(self.winners)}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.summary:
            out["summary"] = _clean(self.summary)
        if self.notes:
            out["notes"] = list(self.notes)
        if runtime:
            out["runtime_s"] = round(self.runtime_s, 3)
        return out

    def to_json(self, runtime: bool = True) -> str:
        return json.dumps(self.to_dict(runtime), sort_keys=True, indent=1)

    def summary_line(self) -> str:
        bits_ = [f"{self.claim_id}: {self.status.upper()}"]
        if "checked" in self.summary:
            bits_.append(f"checked={self.summary['checked']}")
        if "min_margin" in self.summary and self.summary["min_margin"] is not None:
            bits_.append(f"min_margin={self.summary['min_margin']:.3g}")
        if self.counterexample:
            bits_.append(f"counterexample={self.counterexample.get('g6', '?')}")
        bits_.append(f"({self.runtime_s:.2f}s)")
        return " ".join(bits_)


def _clean(obj):
    """JSON-friendly copy: numpy scalars to Python, non-finite floats to None."""
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        return x if math.isfinite(x) else None
    return obj


def _note_margin(rep: VerificationReport, margin: float) -> None:
    cur = rep.summary.get("min_margin")
    if math.isfinite(margin) and (cur is None or margin < cur):
        rep.summary["min_margin"] = margin


def _count(rep: VerificationReport, k: int = 1) -> None:
    rep.summary["checked"] = rep.summary.get("checked", 0) + k


# ------------------------------------------------------------------ params

def parse_n(value, default: tuple[int, int]) -> list[int]:
    """None, 7, "3-7", "3,5,8" or a list -> sorted list of orders."""
    if value is None:
        lo, hi = default
        return list(range(lo, hi + 1))
    if isinstance(value, int):
        return [value]
    if isinstance(value, (list, tuple)):
        return sorted({int(v) for v in value})
    text = str(value).strip()
    if "-" in text:
        lo, hi = text.split("-", 1)
        return list(range(int(lo), int(hi) + 1))
    return sorted({int(v) for v in text.split(",") if v.strip()})


def parse_alphas(value) -> list[float]:
    if value is None:
        return list(DEFAULT_ALPHAS)
    if isinstance(value, (int, float)):
        vals = [float(value)]
    elif isinstance(value, str):
        vals = [float(v) for v in value.replace(" ", "").split(",") if v]
    else:
        vals = [float(v) for v in value]
    for a in vals:
        if not 0.0 <= a < 1.0:
            raise ClaimError(f"alpha must lie in [0, 1), got {a}")
    return vals


def _resolve(claim: str, params: dict | None) -> dict:
    params = dict(params or {})
    out = {}
    if claim in _DEFAULT_N:
        out["n"] = parse_n(params.pop("n", None), _DEFAULT_N[claim])
    if claim != "APPENDIX_GRID":
        alphas = params.pop("alpha_grid", None)
        if claim.startswith("COR_5_"):
            out["alpha_grid"] = [0.5]
            if alphas is not None and parse_alphas(alphas) != [0.5]:
                raise ClaimError(f"{claim} is the alpha = 1/2 specialization")
        else:
            out["alpha_grid"] = parse_alphas(alphas)
    if claim in _DEFAULT_SAMPLES:
        out["samples"] = int(params.pop("samples", _DEFAULT_SAMPLES[claim]))
        out["seed"] = int(params.pop("seed", 0))
    if "tau" in params and params["tau"] is not None:
        out["tau"] = parse_n(params.pop("tau"), (0, 0))
    else:
        params.pop("tau", None)
    out.update(params)
    return out


def _tau_filter(params: dict, taus) -> list[int]:
    wanted = params.get("tau")
    return [t for t in taus if wanted is None or t in wanted]


# ------------------------------------------------------ extremal machinery

def _g6(g: Graph) -> str:
    return graph6.encode(g)


def _extremal(rep: VerificationReport, kind: str, n: int, tau: int, alphas, mode: str,
              expected: list[Graph] | None = None, structural=None, unique: bool = True,
              extra=None) -> None:
    """Check the argmax/argmin of one tau-class against the claimed graphs.

    ``expected`` lists acceptable graphs (any isomorphic copy passes);
    ``structural`` is a predicate every winner must satisfy instead.
    ``extra(g, lam, alpha)`` may return a failure reason for further checks.
    """
    corpus = generate(kind, n)
    if tau not in corpus.by_tau:
        rep.notes.append(f"{kind} n={n} has no member with tau={tau}; skipped")
        return
    codes = {canonical_code(g): g for g in (expected or [])}
    for alpha in alphas:
        ext = extremum(corpus, tau, alpha, mode)
        winners = [corpus.members[i] for i in ext.winners]
        _count(rep)
        _note_margin(rep, ext.margin)
        rep.winners.append({"g6": _g6(winners[0]), "lambda": ext.value, "margin": ext.margin,
                            "n": n, "tau": tau, "alpha": alpha, "ties": len(winners)})
        base = {"g6": _g6(winners[0]), "n": n, "tau": tau, "alpha": alpha, "lambda": ext.value}
        if unique and len(winners) > 1:
            rep.fail(reason="extremum attained by non-isomorphic graphs", ties=[_g6(w) for w in winners],
                     **base)
            continue
        if unique and ext.margin <= TOL.gap:
            rep.fail(reason=f"gap to runner-up {ext.margin:.3e} is not above {TOL.gap}", **base)
            continue
        for w in winners:
            if expected is not None and canonical_code(w) not in codes:
                rep.fail(reason="winner is not the claimed graph", winner=_g6(w),
                         expected_g6=[_g6(g) for g in expected], **base)
                break
            if structural is not None and not structural(w):
                rep.fail(reason="winner violates the structural claim", winner=_g6(w), **base)
                break
            if extra is not None:
                why = extra(w, ext.value, alpha)
                if why:
                    rep.fail(reason=why, winner=_g6(w), **base)
                    break


def _thm_1_1(rep, p):
    for n in p["n"]:
        corpus = generate("CONNECTED", n)
        for tau in _tau_filter(p, corpus.taus()):
            if not 2 <= tau <= n - 1:
                continue
            _extremal(rep, "CONNECTED", n, tau, p["alpha_grid"], "max",
                      expected=[fam.max_connected(n, tau)])


def _thm_1_3(rep, p, signless: bool = False):
    def closed_form(n, tau):
        def check(g, lam, alpha):
            if signless:
                q = 2 * lam
                ref = theta_q(n, tau)
                return None if abs(q - ref) < 1e-9 else f"q = {q!r} differs from the cubic root {ref!r}"
            ref = theta(alpha, n, tau)
            return None if abs(lam - ref) < 1e-9 else f"lambda = {lam!r} differs from theta = {ref!r}"
        return check

    for n in p["n"]:
        corpus = generate("TREES", n)
        for tau in _tau_filter(p, corpus.taus()):
            _extremal(rep, "TREES", n, tau, p["alpha_grid"], "max",
                      expected=[fam.s_dagger(n, tau)], extra=closed_form(n, tau))


def _thm_1_2(rep, p, signless: bool = False):
    """Bound on every connected bipartite graph, tight exactly at K_{tau,n-tau}."""
    for n in p["n"]:
        corpus = generate("CONNECTED_BIPARTITE", n)
        taus = corpus.tau_of()
        for alpha in p["alpha_grid"]:
            lam = corpus.lambdas(alpha)
            per_tau: dict[int, list] = {}
            for i, g in enumerate(corpus.members):
                tau = taus[i]
                if p.get("tau") is not None and tau not in p["tau"]:
                    continue
                _count(rep)
                if signless:
                    value, bound, tol = 2 * lam[i], float(n), 1e-10
                else:
                    value, bound, tol = lam[i], bipartite_bound(n, tau, alpha), 1e-9
                is_kb = canonical_code(g) == canonical_code(complete_bipartite(tau, n - tau))
                slack = bound - value
                detail = {"g6": _g6(g), "n": n, "tau": tau, "alpha": alpha,
                          "lambda": lam[i], "bound": bound if not signless else None}
                if is_kb:
                    if abs(slack) > tol:
                        rep.fail(reason=f"K_(tau,n-tau) misses the bound by {slack:.3e}", **detail)
                    per_tau.setdefault(tau, [None, math.inf])[0] = (g, value)
                else:
                    if slack <= tol:
                        rep.fail(reason=f"bound not strict (slack {slack:.3e})", **detail)
                    entry = per_tau.setdefault(tau, [None, math.inf])
                    entry[1] = min(entry[1], slack)
            for tau, (kb, margin) in sorted(per_tau.items()):
                _note_margin(rep, margin)
                if kb is None:
                    rep.notes.append(f"n={n} tau={tau}: K_(tau,n-tau) not in the class")
                    continue
                rep.winners.append({"g6": _g6(kb[0]), "lambda": kb[1], "margin": margin,
                                    "n": n, "tau": tau, "alpha": alpha})


def _is_tree(g: Graph) -> bool:
    return g.m == g.n - 1


def _thm_1_4(rep, p):
    for n in p["n"]:
        corpus = generate("CONNECTED", n)
        for tau in _tau_filter(p, corpus.taus()):
            if tau < ceil(2 * n / 3):
                continue
            _extremal(rep, "CONNECTED", n, tau, p["alpha_grid"], "min",
                      structural=_is_tree, unique=False)


def t_minus_two_candidates(n: int) -> list[Graph]:
    """Graphs accepted for the tau = n-2 minimizer.

    n even: T1 with the balanced split of (n-4)/2 length-2 paths.
    n odd:  T2 with the balanced split of (n-5)/2 paths, in either orientation.
    """
    if n % 2 == 0:
        k = (n - 4) // 2
        return [fam.t1((k + 1) // 2, k // 2)]
    k = (n - 5) // 2
    lo, hi = k // 2, (k + 1) // 2
    return [fam.t2(lo, hi), fam.t2(hi, lo)]


def _expected_min(part: str, n: int) -> tuple[int, list[Graph]] | None:
    if part == "I":
        return 2, [fam.kn_minus_m(n)]
    if part == "II":
        return ceil(2 * n / 3), [fam.path(n)]
    if part == "III":
        if n < 4:
            return None
        g = fam.s_k1k2(0, (n - 1) // 2) if n % 2 else fam.s_k1k2(1, (n - 2) // 2)
        return n - 1, [g]
    if part == "IV":
        if n < 6:
            return None
        return n - 2, t_minus_two_candidates(n)
    raise ClaimError(f"unknown part {part!r}")


def _thm_1_5(rep, p, part: str):
    kind = str(p.get("corpus", "CONNECTED")).upper()
    if kind not in ("CONNECTED", "TREES"):
        raise ClaimError("corpus must be CONNECTED or TREES")
    if kind == "TREES" and part == "I":
        raise ClaimError("part I concerns non-tree graphs; use the CONNECTED corpus")
    for n in p["n"]:
        spec = _expected_min(part, n)
        if spec is None:
            continue
        tau, expected = spec
        if p.get("tau") is not None and tau not in p["tau"]:
            continue
        before = rep.summary.get("failures", 0)
        _extremal(rep, kind, n, tau, p["alpha_grid"], "min", expected=expected)
        if part == "IV" and rep.summary.get("failures", 0) == before and len(expected) > 1:
            got = {canonical_code(graph6.decode(w["g6"])) for w in rep.winners if w["n"] == n}
            which = [i for i, g in enumerate(expected) if canonical_code(g) in got]
            rep.summary.setdefault("orientation", {})[str(n)] = which


# ---------------------------------------------------------- random suites

def random_connected(rng: random.Random, n: int, extra_p: float = 0.0) -> Graph:
    """Random recursive tree on shuffled labels plus independent extra edges."""
    perm = list(range(n))
    rng.shuffle(perm)
    g = Graph.empty(n)
    for i in range(1, n):
        g = add_edge(g, perm[i], perm[rng.randrange(i)])
    if extra_p > 0:
        for u in range(n):
            for v in range(u + 1, n):
                if not g.has_edge(u, v) and rng.random() < extra_p:
                    g = add_edge(g, u, v)
    return g


def _sampler(rep, p, attempt, factor: int = 50) -> None:
    """Run ``attempt(rng)`` until ``samples`` valid applications are recorded.

    ``attempt`` returns None for an invalid draw, else (margin, witness dict).
    """
    rng = random.Random(p["seed"])
    done = tries = 0
    tight = None
    while done < p["samples"]:
        tries += 1
        if tries > factor * p["samples"]:
            rep.fail(reason=f"only {done} valid applications in {tries - 1} draws")
            break
        out = attempt(rng)
        if out is None:
            continue
        done += 1
        margin, witness = out
        _count(rep)
        _note_margin(rep, margin)
        if margin <= STRICT:
            rep.fail(reason=f"margin {margin:.3e} is not above {STRICT}", **witness)
        if tight is None or margin < tight[0]:
            tight = (margin, witness)
    rep.summary["draws"] = tries
    if tight is not None:
        rep.winners.append({"margin": tight[0], **tight[1]})


def _orders(p) -> tuple[int, int]:
    return min(p["n"]), max(p["n"])


def _lem_2_4(rep, p):
    lo, hi = _orders(p)

    def attempt(rng):
        n = rng.randint(max(lo, 3), hi)
        g = random_connected(rng, n, rng.choice((0.0, 0.2, 0.4)))
        alpha = rng.choice(p["alpha_grid"])
        x = perron_vector(g, alpha)
        u, v = rng.sample(range(n), 2)
        if x[u] < x[v]:
            u, v = v, u
        cand = bits(g.adj[v] & ~g.adj[u] & ~(1 << u))
        if not cand:
            return None
        moved = sorted(rng.sample(cand, rng.randint(1, len(cand))))
        h = shift_neighbors(g, u, v, moved)
        margin = index(h, alpha) - index(g, alpha)
        return margin, {"g6": _g6(g), "after_g6": _g6(h), "alpha": alpha, "u": u, "v": v,
                        "moved": moved}

    _sampler(rep, p, attempt)


def _with_paths(g: Graph, u: int, lengths) -> Graph:
    for k in lengths:
        if k > 0:
            g = attach_pendant_path(g, u, k)
    return g


def _lem_2_5(rep, p):
    lo, hi = _orders(p)

    def attempt(rng):
        n = rng.randint(max(lo, 2), hi)
        g = random_connected(rng, n, rng.choice((0.0, 0.3)))
        u = rng.randrange(n)
        t = rng.randint(1, 4)
        s = rng.randint(t, 5)
        alpha = rng.choice(p["alpha_grid"])
        a = _with_paths(g, u, (s, t))
        b = _with_paths(g, u, (s + 1, t - 1))
        margin = index(a, alpha) - index(b, alpha)
        return margin, {"g6": _g6(a), "after_g6": _g6(b), "alpha": alpha, "u": u, "s": s, "t": t}

    _sampler(rep, p, attempt)


def is_dtilde(g: Graph) -> bool:
    """Tree with exactly two vertices of degree 3, each carrying two leaves, the rest of degree <= 2.

    These trees have adjacency index 2 regardless of the length of the path
    joining the two branch vertices, so subdividing that path leaves the
    adjacency index unchanged.
    """
    if not is_tree(g):
        return False
    deg = g.degrees()
    branch = [v for v in range(g.n) if deg[v] >= 3]
    if len(branch) != 2 or any(deg[v] != 3 for v in branch):
        return False
    pend, _, _ = structural_sets(g)
    return all((g.adj[v] & pend).bit_count() == 2 for v in branch)


def _lem_2_6(rep, p):
    lo, hi = _orders(p)
    skipped = [0]

    def attempt(rng):
        n = rng.randint(lo, hi)
        g = random_connected(rng, n, rng.choice((0.0, 0.0, 0.1)))
        edges = internal_path_edges(g)
        if not edges:
            return None
        alpha = rng.choice(p["alpha_grid"])
        if alpha == 0.0 and is_dtilde(g):
            skipped[0] += 1
            return None
        u, v = rng.choice(edges)
        h = subdivide(g, u, v)
        margin = index(g, alpha) - index(h, alpha)
        return margin, {"g6": _g6(g), "after_g6": _g6(h), "alpha": alpha, "edge": [u, v]}

    _sampler(rep, p, attempt)
    rep.summary["excluded_dtilde_at_alpha0"] = skipped[0]
    rep.notes.append("two-branch trees with two leaves at each branch vertex are excluded at "
                     "alpha = 0, where subdivision keeps the index at 2")


def _symmetrized_quotient(q: np.ndarray, sizes) -> np.ndarray:
    w = np.sqrt(np.asarray(sizes, dtype=float))
    s = q * w[:, None] / w[None, :]
    return 0.5 * (s + s.T)


def _lem_2_7(rep, p):
    lo, hi = _orders(p)

    def attempt(rng):
        n = rng.randint(lo, hi)
        g = random_connected(rng, n, rng.choice((0.0, 0.2, 0.5)))
        alpha = rng.choice(p["alpha_grid"])
        blocks = coarsest_equitable_partition(g)
        if not is_equitable(g, alpha, blocks):
            return 0.0, {"g6": _g6(g), "alpha": alpha, "reason": "refinement not equitable"}
        qm = quotient_matrix(g, alpha, blocks)
        rho = quotient_spectral_radius(qm)
        lam = index(g, alpha)
        full = jacobi_eigh(alpha_matrix(g, alpha).entries, vectors=False)[0]
        sub = jacobi_eigh(_symmetrized_quotient(qm.entries, [len(b) for b in blocks]),
                          vectors=False)[0]
        miss = max(float(np.min(np.abs(full - mu))) for mu in sub)
        err = max(abs(rho - lam), miss)
        # margin: how far inside the 1e-9 agreement tolerance the check landed
        return 1e-9 - err, {"g6": _g6(g), "alpha": alpha, "blocks": blocks,
                            "quotient_radius": rho, "lambda": lam}

    _sampler(rep, p, attempt)


def _lem_4_1(rep, p):
    lo, hi = _orders(p)
    rng = random.Random(p["seed"])
    for _ in range(p["samples"]):
        n = rng.randint(max(lo, 2), hi)
        g = random_connected(rng, n, rng.choice((0.0, 0.2, 0.5)))
        t0 = dissociation_tau(g)
        _count(rep)
        for u, v in g.edges():
            tw = dissociation_tau(subdivide(g, u, v))
            txyz = dissociation_tau(triple_subdivide(g, u, v))
            rep.summary["edges"] = rep.summary.get("edges", 0) + 1
            if tw not in (t0, t0 + 1) or txyz != t0 + 2:
                rep.fail(reason="subdivision changed tau outside the claimed range", g6=_g6(g),
                         edge=[u, v], tau=t0, tau_w=tw, tau_xyz=txyz)


def random_branching_tree(rng: random.Random, lo: int, hi: int) -> Graph:
    while True:
        t = random_connected(rng, rng.randint(lo, hi))
        if len(branching_vertices(t)) >= 2:
            return t


def _lem_4_2(rep, p):
    lo, hi = _orders(p)

    def attempt(rng):
        t = random_branching_tree(rng, max(lo, 6), hi)
        wit = {"g6": _g6(t)}
        try:
            rec = optimal_subdivision_transform(t)
        except TransformError as exc:
            return -math.inf, {**wit, "reason": str(exc)}
        after = rec.after
        wit.update(after_g6=_g6(after), case=rec.moved["case"])
        if not (is_tree(after) and after.n == t.n and is_connected(after)):
            return -math.inf, {**wit, "reason": "result is not an equal-order tree"}
        t0, t1 = dissociation_tau(t), dissociation_tau(after)
        if t1 not in (t0 - 1, t0):
            return -math.inf, {**wit, "reason": f"tau went from {t0} to {t1}"}
        margin = min(index(t, a) - index(after, a) for a in p["alpha_grid"])
        return margin, wit

    _sampler(rep, p, attempt)


def _lem_4_4(rep, p):
    if "r" in p or "p" in p:
        pairs = [(int(p["r"]), int(p["p"]))]
    else:
        top = int(p.get("max_sum", 6))
        pairs = [(r, q) for s in range(2, top + 1) for q in range(1, s // 2 + 1) for r in [s - q]]
    for r, q in pairs:
        if not r >= q >= 1:
            raise ClaimError(f"this check needs r >= p >= 1, got ({r}, {q})")
        a, b = fam.t1(r, q), fam.t1(r + 1, q - 1)
        for alpha in p["alpha_grid"]:
            la, lb = index(a, alpha), index(b, alpha)
            margin = lb - la
            _count(rep)
            _note_margin(rep, margin)
            rep.winners.append({"g6": _g6(b), "lambda": lb, "margin": margin,
                                "r": r, "p": q, "alpha": alpha})
            if margin <= STRICT:
                rep.fail(reason="T1_(r,p) is not strictly below T1_(r+1,p-1)", g6=_g6(a),
                         other_g6=_g6(b), alpha=alpha, r=r, p=q, lam=la, lam_other=lb)


def _lem_2_2(rep, p):
    for n in p["n"]:
        corpus = generate("TREES", n)
        s = canonical_code(star(n))
        for alpha in p["alpha_grid"]:
            lam = corpus.lambdas(alpha)
            bound = star_bound(n, alpha)
            margin = math.inf
            for i, g in enumerate(corpus.members):
                _count(rep)
                slack = bound - lam[i]
                if canonical_code(g) == s:
                    if abs(slack) > 1e-9:
                        rep.fail(reason="star misses the bound", g6=_g6(g), n=n, alpha=alpha,
                                 lam=lam[i], bound=bound)
                    star_entry = (g, lam[i])
                else:
                    margin = min(margin, slack)
                    if slack <= 1e-9:
                        rep.fail(reason="non-star tree reaches the bound", g6=_g6(g), n=n,
                                 alpha=alpha, lam=lam[i], bound=bound)
            _note_margin(rep, margin)
            rep.winners.append({"g6": _g6(star_entry[0]), "lambda": star_entry[1], "margin": margin,
                                "n": n, "alpha": alpha})


def _lem_2_8(rep, p):
    tree_n = parse_n(p.get("tree_n"), (5, 12))
    for kind, ns in (("CONNECTED", p["n"]), ("TREES", tree_n)):
        for n in ns:
            if n < 5:
                continue
            for g in generate(kind, n).members:
                _count(rep)
                if not good_maximum_set(g).is_good:
                    rep.fail(reason="no maximum dissociation set contains all pendant and "
                                    "degree-2 quasi-pendant vertices", g6=_g6(g), n=n)
    p["tree_n"] = tree_n


def _lem_3_1(rep, p):
    worst = 0.0
    for n in p["n"]:
        for tau in _tau_filter(p, range(ceil(2 * n / 3), n)):
            g = fam.s_dagger(n, tau)
            blocks = coarsest_equitable_partition(g)
            for alpha in p["alpha_grid"]:
                lam = index(g, alpha)
                root = theta(alpha, n, tau)
                rho = quotient_spectral_radius(quotient_matrix(g, alpha, blocks))
                err = max(abs(lam - root), abs(rho - root))
                worst = max(worst, err)
                _count(rep)
                if err >= 1e-9:
                    rep.fail(reason="index differs from the quartic's largest root", g6=_g6(g),
                             n=n, tau=tau, alpha=alpha, lam=lam, root=root, quotient_radius=rho)
    rep.summary["max_abs_error"] = worst


# ------------------------------------------------- quotient positivity grid

def appendix_quotient(a: float, b: float, c: float, alpha) -> np.ndarray:
    """4x4 quotient of A_alpha over X1, X2, Y1, Y2 (sizes a, c, b, a); alpha may be an array."""
    al = np.atleast_1d(np.asarray(alpha, dtype=float))
    m = np.zeros((al.size, 4, 4))
    w = 1.0 - al
    m[:, 0, 0], m[:, 0, 2], m[:, 0, 3] = al * (b + 1), w * b, w
    m[:, 1, 1], m[:, 1, 2], m[:, 1, 3] = al * (a + b), w * b, w * a
    m[:, 2, 0], m[:, 2, 1], m[:, 2, 2] = w * a, w * c, al * (a + c)
    m[:, 3, 0], m[:, 3, 1], m[:, 3, 3] = w, w * c, al * (c + 1)
    return m


def appendix_graph(a: int, b: int, c: int) -> Graph:
    """Bipartite graph realising the quotient: X1 ~ Y1 and X2 ~ Y completely, X1 - Y2 a perfect matching."""
    x1 = list(range(a))
    x2 = list(range(a, a + c))
    y1 = list(range(a + c, a + c + b))
    y2 = list(range(a + c + b, 2 * a + c + b))
    edges = [(u, v) for u in x1 for v in y1] + [(u, v) for u in x2 for v in y1 + y2]
    edges += list(zip(x1, y2))
    return Graph.from_edges(2 * a + b + c, edges)


def appendix_grid_check(a_max: int = 12, bc_max: int = 8, alpha_step: float = 0.05,
                        x_step: float = 0.01, x_span: float = 10.0,
                        extra_alphas=(0.99,), require_c_ge_b: bool = False) -> VerificationReport:
    """Sample det(xI - Q) on [lambda(K_{2a,b+c}), lambda + span] over the parameter grid."""
    start = time.perf_counter()
    params = {"a_max": a_max, "bc_max": bc_max, "alpha_step": alpha_step, "x_step": x_step,
              "x_span": x_span, "extra_alphas": list(extra_alphas), "require_c_ge_b": require_c_ge_b}
    rep = VerificationReport("APPENDIX_GRID", params)
    rep.notes.append("grid reading: integers a >= 2, 1 <= b, c <= min(bc_max, a-1), d = a, "
                     "alpha in [0, 1); positivity sampled on [lambda(K_(2a,b+c)), +x_span]")
    steps = int(round(1.0 / alpha_step))
    alphas = sorted({round(i * alpha_step, 10) for i in range(steps) if i * alpha_step < 1.0}
                    | {float(a) for a in extra_alphas if 0 <= a < 1})
    alphas = np.array(alphas)
    offsets = np.arange(int(round(x_span / x_step)) + 1) * x_step
    best = None
    for a in range(2, a_max + 1):
        for b in range(1, min(bc_max, a - 1) + 1):
            for c in range(1, min(bc_max, a - 1) + 1):
                if require_c_ge_b and c < b:
                    continue
                q = appendix_quotient(a, b, c, alphas)
                lam = np.array([complete_bipartite_index(2 * a, b + c, al) for al in alphas])
                xs = lam[:, None] + offsets[None, :]
                stack = xs[:, :, None, None] * np.eye(4) - q[:, None, :, :]
                vals = dets(stack.reshape(-1, 4, 4)).reshape(xs.shape)
                _count(rep, vals.size)
                i, j = np.unravel_index(np.argmin(vals), vals.shape)
                low = float(vals[i, j])
                if best is None or low < best[0]:
                    best = (low, a, b, c, float(alphas[i]), float(xs[i, j]), float(lam[i]))
                if low <= 0:
                    rep.fail(reason="characteristic polynomial is not positive on the ray",
                             g6=_g6(appendix_graph(a, b, c)), a=a, b=b, c=c,
                             alpha=float(alphas[i]), x=float(xs[i, j]), value=low)
    if best is not None:
        low, a, b, c, al, x, lam = best
        rep.summary["min_value"] = low
        rep.summary["min_margin"] = low
        rep.winners.append({"g6": _g6(appendix_graph(a, b, c)), "lambda": lam, "margin": low,
                            "a": a, "b": b, "c": c, "alpha": al, "x": x})
    rep.summary["violations"] = rep.summary.setdefault("failures", 0)
    rep.runtime_s = time.perf_counter() - start
    return rep


# ------------------------------------------------------------------ entry

def _cor_5_5(rep, p):
    for part in ("I", "II", "III", "IV"):
        _thm_1_5(rep, p, part)


_RUNNERS = {
    "THM_1_1": _thm_1_1, "COR_5_1": _thm_1_1,
    "THM_1_2": _thm_1_2, "COR_5_2": lambda r, p: _thm_1_2(r, p, signless=True),
    "THM_1_3": _thm_1_3, "COR_5_3": lambda r, p: _thm_1_3(r, p, signless=True),
    "THM_1_4": _thm_1_4, "COR_5_4": _thm_1_4,
    "THM_1_5_I": lambda r, p: _thm_1_5(r, p, "I"),
    "THM_1_5_II": lambda r, p: _thm_1_5(r, p, "II"),
    "THM_1_5_III": lambda r, p: _thm_1_5(r, p, "III"),
    "THM_1_5_IV": lambda r, p: _thm_1_5(r, p, "IV"),
    "COR_5_5": _cor_5_5,
    "LEM_2_2": _lem_2_2, "LEM_2_4": _lem_2_4, "LEM_2_5": _lem_2_5, "LEM_2_6": _lem_2_6,
    "LEM_2_7": _lem_2_7, "LEM_2_8": _lem_2_8, "LEM_3_1": _lem_3_1,
    "LEM_4_1": _lem_4_1, "LEM_4_2": _lem_4_2, "LEM_4_4": _lem_4_4,
}


def verify(claim_id: str, params: dict | None = None) -> VerificationReport:
    """Run one claim.  Raises ClaimError / CorpusError for bad requests; a
    failed claim is reported through ``status`` and ``counterexample``."""
    claim = str(claim_id).upper()
    if claim not in CLAIMS:
        raise ClaimError(f"unknown claim {claim_id!r}")
    if claim == "APPENDIX_GRID":
        return appendix_grid_check(**(params or {}))
    p = _resolve(claim, params)
    rep = VerificationReport(claim, p)
    start = time.perf_counter()
    _RUNNERS[claim](rep, p)
    rep.runtime_s = time.perf_counter() - start
    rep.summary.setdefault("failures", 0)
    return rep
