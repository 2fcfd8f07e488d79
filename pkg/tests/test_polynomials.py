import math

import numpy as np
import pytest
import sympy as sp
from hypothesis import assume, given, strategies as st

from specdiss.families import s_dagger
from specdiss.graph import complete_bipartite, star
from specdiss.polynomials import (PolyCoeffs, RootError, bipartite_bound, closed_form_bounds,
                                  complete_bipartite_index, largest_real_root, p_alpha_coeffs,
                                  q_cubic_coeffs, star_bound, theta, theta_q)
from specdiss.spectral import index

a, n, t, x, q = sp.symbols("a n t x q")

# quotient of A_alpha(S-dagger) over {centre}, {other stem vertices}, {their
# pendant neighbours}, {leaves of the centre's pendant edges}
QUOTIENT = sp.Matrix([
    [a * (2 * t - n + 1), (1 - a) * (n - t - 1), 0, (1 - a) * (3 * t - 2 * n + 2)],
    [1 - a, 3 * a, 2 * (1 - a), 0],
    [0, 1 - a, a, 0],
    [1 - a, 0, 0, a],
])


def _sym(coeffs, var):
    d = len(coeffs) - 1
    return sum(c * var ** (d - i) for i, c in enumerate(coeffs))


def test_quartic_is_quotient_characteristic_polynomial():
    charpoly = (x * sp.eye(4) - QUOTIENT).det()
    assert sp.expand(charpoly - _sym(p_alpha_coeffs(n, t, a).coeffs, x)) == 0


def test_cubic_is_half_alpha_specialisation():
    quartic = _sym(p_alpha_coeffs(n, t, sp.Rational(1, 2)).coeffs, x)
    cubic = _sym(q_cubic_coeffs(n, t).coeffs, q)
    assert sp.expand(16 * quartic.subs(x, q / 2) - q * cubic) == 0


def test_biquadratic_closed_form():
    # at alpha = 0, n = 8, tau = 6 the quartic is x^4 - 7x^2 + 8
    assert np.allclose(p_alpha_coeffs(8, 6, 0.0).coeffs, [1, 0, -7, 0, 8])
    expect = math.sqrt((7 + math.sqrt(17)) / 2)
    assert theta(0.0, 8, 6) == pytest.approx(expect, abs=1e-12)
    assert expect == pytest.approx(2.3582944, abs=1e-7)


@pytest.mark.parametrize("nn", range(4, 15))
@pytest.mark.parametrize("alpha", [0.0, 0.25, 0.5, 0.75, 0.9])
def test_theta_matches_s_dagger_index(nn, alpha):
    for tau in range(math.ceil(2 * nn / 3), nn):
        assert theta(alpha, nn, tau) == pytest.approx(index(s_dagger(nn, tau), alpha), abs=1e-9)


@pytest.mark.parametrize("nn", range(4, 13))
def test_theta_q_is_twice_half_alpha_index(nn):
    for tau in range(math.ceil(2 * nn / 3), nn):
        assert theta_q(nn, tau) == pytest.approx(2 * index(s_dagger(nn, tau), 0.5), abs=1e-9)


def test_quartic_overshoots_when_stem_is_empty():
    # n - tau - 1 = 0 splits the quotient; the split-off 2x2 block has the
    # larger eigenvalue 1 + sqrt(3)/2 at alpha = 1/2 while S-dagger_{3,2} = P_3
    # has index 3/2
    assert theta(0.5, 3, 2) == pytest.approx(1 + math.sqrt(3) / 2, abs=1e-12)
    assert index(s_dagger(3, 2), 0.5) == pytest.approx(1.5, abs=1e-12)
    assert theta(0.0, 3, 2) == pytest.approx(math.sqrt(2), abs=1e-12)


def test_repeated_roots():
    assert largest_real_root(PolyCoeffs((1.0, -6.0, 12.0, -8.0)), 10.0) == pytest.approx(2.0, abs=1e-12)
    quartic = PolyCoeffs(tuple(np.poly([1.0, 1.0, 1.0, 1.0])))
    assert largest_real_root(quartic, 10.0) == pytest.approx(1.0, abs=1e-10)
    double = PolyCoeffs(tuple(np.poly([3.0, 3.0, -1.0, 0.5])))
    assert largest_real_root(double, 10.0) == pytest.approx(3.0, abs=1e-10)


@given(st.lists(st.floats(-5, 5), min_size=2, max_size=4))
def test_roots_of_products(roots):
    roots = sorted(roots)
    assume(roots[-1] >= 0.1)    # only positive roots are searched for
    # near-coincident roots are ill-conditioned in coefficient form
    assume(roots[-1] == roots[-2] or roots[-1] - roots[-2] >= 1e-3)
    p = PolyCoeffs(tuple(np.poly(roots)))
    assert largest_real_root(p, 20.0) == pytest.approx(roots[-1], abs=1e-7)


def test_no_real_root_raises():
    with pytest.raises(RootError):
        largest_real_root(PolyCoeffs((1.0, 0.0, 1.0)), 5.0)


@pytest.mark.parametrize("alpha", [0.0, 0.3, 0.5, 0.8])
def test_bounds_tight_on_stars_and_complete_bipartite(alpha):
    assert star_bound(7, alpha) == pytest.approx(index(star(7), alpha), abs=1e-12)
    assert bipartite_bound(7, 3, alpha) == pytest.approx(index(complete_bipartite(3, 4), alpha), abs=1e-12)
    assert complete_bipartite_index(3, 4, alpha) == pytest.approx(bipartite_bound(7, 3, alpha))
    b = closed_form_bounds(7, 3, alpha)
    assert set(b) == {"star_bound", "bipartite_bound"}
    with pytest.raises(ValueError):
        closed_form_bounds(7, 7, alpha)


def test_half_alpha_complete_bipartite_is_half_order():
    for aa in range(1, 6):
        for bb in range(1, 6):
            assert 2 * complete_bipartite_index(aa, bb, 0.5) == pytest.approx(aa + bb, abs=1e-12)
