import math
import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from oracles import dense, largest_eig_bisect, random_graph
from specdiss.graph import Graph, complete, complete_bipartite, cycle, disjoint_union, path, star
from specdiss.spectral import (ConvergenceError, alpha_matrix, char_poly_eval, det, dets, index,
                               indices, jacobi_eigh, max_row_sum, perron_vector, spectral_radius)


def test_alpha_matrix_entries():
    m = alpha_matrix(star(4), 0.25).entries
    assert m[0, 0] == pytest.approx(0.75) and m[1, 1] == pytest.approx(0.25)
    assert m[0, 1] == pytest.approx(0.75) and m[1, 2] == 0
    with pytest.raises(ValueError):
        alpha_matrix(star(4), 1.5)


@pytest.mark.parametrize("n", range(2, 10))
def test_path_adjacency_index(n):
    assert index(path(n), 0.0) == pytest.approx(2 * math.cos(math.pi / (n + 1)), abs=1e-12)


@pytest.mark.parametrize("alpha", [0.0, 0.2, 0.5, 0.9])
def test_regular_and_complete_bipartite(alpha):
    assert index(cycle(7), alpha) == pytest.approx(2.0, abs=1e-12)
    assert index(complete(6), alpha) == pytest.approx(5.0, abs=1e-12)
    a, b = 2, 5
    s = a + b
    expect = 0.5 * (alpha * s + math.sqrt(alpha**2 * s**2 + 4 * a * b * (1 - 2 * alpha)))
    assert index(complete_bipartite(a, b), alpha) == pytest.approx(expect, abs=1e-12)


def test_frozen_values():
    # independently worked out with exact arithmetic
    assert index(star(5), 0.5) == pytest.approx(2.5, abs=1e-12)          # (n)/2 for a star
    assert index(path(3), 0.5) == pytest.approx(1.5, abs=1e-12)
    assert index(star(4), 0.0) == pytest.approx(math.sqrt(3), abs=1e-12)


@given(st.integers(1, 9), st.integers(0, 10**6), st.sampled_from([0.0, 0.3, 0.5, 0.8, 0.95]))
def test_index_matches_bisection_oracle(n, seed, alpha):
    g = random_graph(random.Random(seed), n)
    ref = largest_eig_bisect(dense(g, alpha)[None])[0]
    assert index(g, alpha) == pytest.approx(ref, abs=1e-9)


def test_batched_indices_match_single():
    rng = random.Random(3)
    graphs = [random_graph(rng, rng.randint(1, 8)) for _ in range(60)]
    batch = indices(graphs, 0.4)
    single = [index(g, 0.4) for g in graphs]
    assert np.allclose(batch, single, atol=1e-12)


def test_jacobi_full_spectrum_against_numpy():
    rng = np.random.default_rng(0)
    a = rng.normal(size=(50, 9, 9))
    a = a + a.transpose(0, 2, 1)
    w, v = jacobi_eigh(a)
    assert np.allclose(w, np.linalg.eigvalsh(a), atol=1e-11)
    assert np.allclose(a @ v, v * w[:, None, :], atol=1e-10)


def test_perron_vector_positive_unit():
    g = path(6)
    x = perron_vector(g, 0.3)
    assert np.all(x > 0) and np.linalg.norm(x) == pytest.approx(1.0)
    m = alpha_matrix(g, 0.3).entries
    assert np.allclose(m @ x, index(g, 0.3) * x, atol=1e-11)


def test_disconnected_perron_supported_on_dominant_component():
    g = disjoint_union(path(2), complete(4))
    res = spectral_radius(alpha_matrix(g, 0.2))
    assert res.lam == pytest.approx(3.0)
    assert np.all(res.perron[:2] == 0) and np.all(res.perron[2:] > 0)
    with pytest.raises(ConvergenceError):
        perron_vector(g, 0.2)


def test_full_spectrum_sum_is_trace():
    g = star(5)
    res = spectral_radius(alpha_matrix(g, 0.4), full=True)
    assert res.full_spectrum.sum() == pytest.approx(0.4 * 2 * g.m)


def test_determinants():
    rng = np.random.default_rng(1)
    stack = rng.normal(size=(40, 6, 6))
    assert np.allclose(dets(stack), np.linalg.det(stack), rtol=1e-10, atol=1e-12)
    assert det(stack[0]) == pytest.approx(np.linalg.det(stack[0]), rel=1e-10)
    assert det(np.zeros((3, 3))) == 0.0


def test_char_poly_vanishes_at_index():
    g = star(6)
    lam = index(g, 0.3)
    assert abs(char_poly_eval(alpha_matrix(g, 0.3), lam)) < 1e-8
    assert max_row_sum(alpha_matrix(g, 0.3)) == pytest.approx(5.0)


def test_single_vertex():
    assert index(Graph.empty(1), 0.5) == 0.0


def _char_poly_root(g, alpha):
    """Largest root of det(xI - A) by a right-to-left scan of [0, max row sum] and bisection."""
    m = alpha_matrix(g, alpha)
    hi = max_row_sum(m) + 1e-9
    xs = np.linspace(0.0, hi, 1001)
    vals = [char_poly_eval(m, x) for x in xs]
    for i in range(len(xs) - 1, 0, -1):
        if vals[i] == 0:
            return xs[i]
        if (vals[i] > 0) != (vals[i - 1] > 0):
            lo, up = xs[i - 1], xs[i]
            for _ in range(60):
                mid = 0.5 * (lo + up)
                if (char_poly_eval(m, mid) > 0) == (vals[i] > 0):
                    up = mid
                else:
                    lo = mid
            return 0.5 * (lo + up)
    return None


def test_index_is_bracketed_char_poly_root():
    # connected graphs have a simple top eigenvalue, so the characteristic
    # polynomial changes sign there
    from specdiss.graph import is_connected
    rng = random.Random(9)
    checked = 0
    while checked < 40:
        g = random_graph(rng, rng.randint(2, 6), 0.6)
        if not is_connected(g):
            continue
        for alpha in (0.0, 0.3, 0.5, 0.8):
            assert index(g, alpha) == pytest.approx(_char_poly_root(g, alpha), abs=1e-9)
        checked += 1


def test_rayleigh_quotient():
    from oracles import random_tree
    rng = random.Random(4)
    for _ in range(30):
        g = random_tree(rng, rng.randint(2, 12))
        alpha = rng.choice([0.0, 0.3, 0.7])
        x = perron_vector(g, alpha)
        assert x @ alpha_matrix(g, alpha).entries @ x == pytest.approx(index(g, alpha), abs=1e-9)


def test_edge_removal_lowers_index():
    from specdiss.graph import remove_edge
    from specdiss.verify import random_connected
    rng = random.Random(12)
    for _ in range(200):
        g = random_connected(rng, rng.randint(2, 9), 0.3)
        alpha = rng.choice([0.0, 0.3, 0.5, 0.8])
        u, v = rng.choice(g.edges())
        assert index(g, alpha) - index(remove_edge(g, u, v), alpha) > 1e-10


def test_full_spectrum_sorted():
    g = path(7)
    s = spectral_radius(alpha_matrix(g, 0.6), full=True).full_spectrum
    assert np.all(np.diff(s) <= 1e-12) and s[0] == pytest.approx(index(g, 0.6))
