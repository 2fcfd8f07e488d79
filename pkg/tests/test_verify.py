import json
import math

import numpy as np
import pytest

from specdiss.families import t1, t2
from specdiss.graph import complete_bipartite
from specdiss.spectral import index
from specdiss.verify import (CLAIMS, ClaimError, VerificationReport, appendix_graph,
                             appendix_grid_check, appendix_quotient, is_dtilde, parse_alphas,
                             parse_n, t_minus_two_candidates, verify)


def test_parse_n_forms():
    assert parse_n(None, (3, 5)) == [3, 4, 5]
    assert parse_n(7, (0, 0)) == [7]
    assert parse_n("3-6", (0, 0)) == [3, 4, 5, 6]
    assert parse_n("8,5,5", (0, 0)) == [5, 8]


def test_parse_alphas():
    assert parse_alphas(None) == [0.0, 0.25, 0.5, 0.75, 0.9]
    assert parse_alphas("0, 0.5") == [0.0, 0.5]
    with pytest.raises(ClaimError):
        parse_alphas("1.0")


def test_unknown_claim_and_bad_specialisation():
    with pytest.raises(ClaimError):
        verify("THM_9_9")
    with pytest.raises(ClaimError):
        verify("COR_5_2", {"alpha_grid": "0.3"})


def test_report_json_is_deterministic():
    rep = VerificationReport("X", {"n": [3]}, summary={"v": np.float64(1.5), "big": math.inf})
    d = json.loads(rep.to_json(runtime=False))
    assert d["schema"] == 1 and d["status"] == "pass" and "runtime_s" not in d
    assert d["summary"] == {"v": 1.5, "big": None}
    assert rep.to_json(runtime=False) == rep.to_json(runtime=False)
    rep.fail(g6="Bw", why="first")
    rep.fail(g6="Cw", why="second")
    assert rep.counterexample["g6"] == "Bw" and rep.summary["failures"] == 2
    assert "FAIL" in rep.summary_line() and "Bw" in rep.summary_line()


@pytest.mark.parametrize("claim,params", [
    ("THM_1_1", {"n": "4-6"}),
    ("THM_1_2", {"n": "4-6"}),
    ("THM_1_3", {"n": "6-8"}),
    ("THM_1_4", {"n": "4-6"}),
    ("THM_1_5_I", {"n": "3-6"}),
    ("THM_1_5_II", {"n": "3-6"}),
    ("THM_1_5_III", {"n": "4-6"}),
    ("THM_1_5_IV", {"n": "6"}),
    ("COR_5_1", {"n": "4-5"}),
    ("COR_5_2", {"n": "4-5"}),
    ("COR_5_3", {"n": "5-7"}),
    ("LEM_2_2", {"n": "4-7"}),
    ("LEM_2_4", {"samples": 40}),
    ("LEM_2_5", {"samples": 40}),
    ("LEM_2_6", {"samples": 40}),
    ("LEM_2_7", {"samples": 40}),
    ("LEM_2_8", {"n": "5-6"}),
    ("LEM_3_1", {"n": "4-9"}),
    ("LEM_4_1", {"samples": 60}),
    ("LEM_4_2", {"samples": 20}),
    ("LEM_4_4", {}),
])
def test_claims_hold_on_small_ranges(claim, params):
    rep = verify(claim, params)
    assert rep.passed, rep.counterexample
    assert rep.summary["failures"] == 0
    json.loads(rep.to_json())


def test_claims_cover_the_runner_table():
    assert len(CLAIMS) == len(set(CLAIMS)) == 24


def test_s_dagger_on_three_vertices_is_reported():
    rep = verify("LEM_3_1", {"n": "3", "alpha_grid": "0.5"})
    assert not rep.passed
    assert rep.counterexample is not None


def test_seed_reproducibility():
    a = verify("LEM_2_5", {"samples": 20, "seed": 7}).to_json(runtime=False)
    b = verify("LEM_2_5", {"samples": 20, "seed": 7}).to_json(runtime=False)
    assert a == b


def test_t_minus_two_candidates():
    assert t_minus_two_candidates(8) == [t1(1, 1)]
    assert t_minus_two_candidates(10) == [t1(2, 1)]
    assert t_minus_two_candidates(9) == [t2(1, 1), t2(1, 1)]
    assert t_minus_two_candidates(11) == [t2(1, 2), t2(2, 1)]


def test_dtilde_detection():
    from specdiss.graph import Graph, path
    t = Graph.from_edges(8, [(0, 1), (5, 1), (1, 2), (2, 3), (3, 4), (4, 6), (4, 7)])
    assert is_dtilde(t) and not is_dtilde(path(6))


def test_appendix_quotient_matches_graph():
    for a, b, c in [(1, 1, 1), (2, 1, 3), (3, 2, 2)]:
        g = appendix_graph(a, b, c)
        for alpha in (0.0, 0.3, 0.8):
            q = appendix_quotient(a, b, c, np.array([alpha]))[0]
            top = max(np.linalg.eigvals(q).real)
            assert top == pytest.approx(index(g, alpha), abs=1e-9)


def test_appendix_grid_small():
    rep = appendix_grid_check(a_max=3, bc_max=3, alpha_step=0.1, x_step=0.05)
    assert rep.passed and rep.summary["violations"] == 0


def test_complete_bipartite_bound_equality():
    rep = verify("THM_1_2", {"n": "6"})
    assert rep.passed
    assert index(complete_bipartite(3, 3), 0.5) * 2 == pytest.approx(6, abs=1e-10)
