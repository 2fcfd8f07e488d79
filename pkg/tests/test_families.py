import json
import math

import pytest

from specdiss.canon import are_isomorphic
from specdiss.dissociation import dissociation_tau
from specdiss.families import (FAMILIES, FamilySpec, InfeasibleSpec, build, class_boundary,
                               class_membership, class_t1_member, class_t2_member,
                               class_t3_member, expected_tau, kn_minus_m, max_connected,
                               s_dagger, s_k1k2, spec, t1, t2, w_rt)
from specdiss.graph import (complete, complete_bipartite, is_connected, is_tree, join, path,
                            star)

SAMPLES = {
    "MAX_CONNECTED": {"n": 7, "tau": 4},
    "COMPLETE_BIPARTITE_TAU": {"n": 7, "tau": 4},
    "S_DAGGER": {"n": 8, "tau": 6},
    "S_K1K2": {"k1": 2, "k2": 3},
    "T1": {"r": 2, "p": 1}, "T2": {"r": 1, "p": 2}, "T3": {"r": 1, "p": 1},
    "T4": {"r": 2, "p": 1}, "T5": {"r": 1, "p": 1}, "T6": {"r": 1, "p": 0},
    "T7": {"r": 1, "p": 1}, "T8": {"r": 1, "p": 1},
    "W_RT": {"r": 1, "t": 2, "n": 9},
    "Y1": {"n": 7}, "Y2": {"n": 9}, "Y3": {"n": 8},
    "KN_MINUS_M": {"n": 6},
    "CLASS_T1_MEMBER": {"n": 9, "tau": 7},
    "CLASS_T2_MEMBER": {"n": 9, "tau": 7},
    "CLASS_T3_MEMBER": {"n": 9, "tau": 6},
}


def test_every_family_has_a_sample():
    assert set(SAMPLES) == set(FAMILIES)


@pytest.mark.parametrize("family", FAMILIES)
def test_expected_tau_matches_solver(family):
    fs = spec(family, **SAMPLES[family])
    g = build(fs)
    assert is_connected(g)
    assert expected_tau(fs) == dissociation_tau(g)


def test_s_dagger_shape():
    g = s_dagger(8, 6)
    assert g.n == 8 and is_tree(g)
    # centre: one star leaf plus 3*6 - 16 + 2 = 4 pendant edges; the star leaf carries two
    assert sorted(g.degrees(), reverse=True)[:2] == [5, 3]
    # with tau = n - 1 the star part is trivial and everything hangs at the centre
    assert are_isomorphic(s_dagger(6, 5), star(6))


@pytest.mark.parametrize("n", range(4, 13))
def test_s_dagger_feasible_range(n):
    for tau in range(1, n + 1):
        ok = math.ceil(2 * n / 3) <= tau <= n - 1
        if ok:
            g = s_dagger(n, tau)
            assert g.n == n and dissociation_tau(g) == tau
        else:
            with pytest.raises(InfeasibleSpec):
                s_dagger(n, tau)


def test_max_connected_structure():
    g = max_connected(7, 5)
    assert g.n == 7 and dissociation_tau(g) == 5
    assert are_isomorphic(max_connected(4, 2), join(complete(2), path(2)))


def test_s_k1k2_and_t_families_orders():
    assert s_k1k2(0, 2).n == 5 and are_isomorphic(s_k1k2(0, 2), path(5))
    assert t1(2, 1).n == 4 + 6
    assert t2(1, 2).n == 4 + 6 + 1
    assert w_rt(1, 2, 9).n == 9


def test_kn_minus_m():
    g = kn_minus_m(6)
    assert g.m == 15 - 3 and dissociation_tau(g) == 2
    assert kn_minus_m(5).m == 10 - 2


def test_complete_bipartite_tau():
    g = build(spec("COMPLETE_BIPARTITE_TAU", n=7, tau=4))
    assert are_isomorphic(g, complete_bipartite(4, 3))
    with pytest.raises(InfeasibleSpec):
        build(spec("COMPLETE_BIPARTITE_TAU", n=7, tau=3))


def test_spec_json_roundtrip_and_errors():
    fs = spec("S_DAGGER", n=8, tau=6)
    assert FamilySpec.from_json(fs.to_json()) == fs
    assert hash(FamilySpec.from_json(fs.to_json())) == hash(fs)
    with pytest.raises(InfeasibleSpec):
        build(spec("NOPE"))
    with pytest.raises(InfeasibleSpec):
        build(spec("S_DAGGER", n=8))
    with pytest.raises(InfeasibleSpec):
        FamilySpec.from_json(json.dumps([1, 2]))


@pytest.mark.parametrize("builder,cid,n,tau", [
    (class_t1_member, "T1_CLASS", 10, 8),
    (class_t2_member, "T2_CLASS", 10, 8),
    (class_t3_member, "T3_CLASS", 10, 7),
])
def test_class_members_recognised(builder, cid, n, tau):
    g = builder(n, tau)
    assert g.n == n and dissociation_tau(g) == tau
    assert class_membership(g, cid, n, tau)
    others = {"T1_CLASS", "T2_CLASS", "T3_CLASS"} - {cid}
    assert not any(class_membership(g, o, n, tau) for o in others)


def test_class_member_custom_leaves():
    g = class_t3_member(10, 7, leaves=[3, 2, 2])
    assert class_membership(g, "T3_CLASS", 10, 7)
    with pytest.raises(InfeasibleSpec):
        class_t3_member(10, 7, leaves=[1, 3, 3])


def test_s_dagger_is_t3_class():
    assert class_membership(s_dagger(11, 8), "T3_CLASS", 11, 8)


def test_class_boundary():
    assert class_boundary("T1_CLASS", 9, 6) and class_boundary("T2_CLASS", 9, 6)
    assert not class_boundary("T3_CLASS", 9, 6)
    assert not class_boundary("T2_CLASS", 10, 7)


def _feasible_specs(n):
    for tau in range(1, n + 1):
        for fam in ("S_DAGGER", "MAX_CONNECTED", "COMPLETE_BIPARTITE_TAU",
                    "CLASS_T1_MEMBER", "CLASS_T2_MEMBER", "CLASS_T3_MEMBER"):
            yield spec(fam, n=n, tau=tau)
    for r in range(n):
        for p in range(n):
            if 2 * (r + p) + 4 == n and r + p >= 1:
                yield spec("T1", r=r, p=p)
            if 2 * (r + p) + 5 == n and r + p >= 1:
                yield spec("T2", r=r, p=p)
        for t in range(n):
            yield spec("W_RT", r=r, t=t, n=n)
    for k2 in range(n):
        yield spec("S_K1K2", k1=n - 1 - 2 * k2, k2=k2)
    for fam in ("Y1", "Y2", "Y3", "KN_MINUS_M"):
        yield spec(fam, n=n)


@pytest.mark.parametrize("n", range(3, 13))
def test_sweep_feasible_specs(n):
    built = 0
    for fs in _feasible_specs(n):
        try:
            g = build(fs)
        except InfeasibleSpec:
            continue
        built += 1
        assert g.n == n, fs
        assert dissociation_tau(g) == expected_tau(fs), fs
    assert built > 0


@pytest.mark.parametrize("r,p", [(0, 1), (1, 2), (0, 3), (2, 2)])
def test_t1_symmetry(r, p):
    assert are_isomorphic(t1(r, p), t1(p, r))


@pytest.mark.parametrize("n", range(3, 13))
def test_max_connected_tau(n):
    for tau in range(2, n):
        assert dissociation_tau(max_connected(n, tau)) == tau


def test_t2_class_excludes_two_thirds_order():
    # star S_4 whose three leaves carry at least two pendant edges each; at
    # n = 9 that forces tau = 6 = 2n/3, which the class definition excludes
    g = class_t2_member(10, 7)
    assert class_membership(g, "T2_CLASS", 10, 7)
    assert class_boundary("T2_CLASS", 9, 6)
