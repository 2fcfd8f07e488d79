import random

import networkx as nx
from hypothesis import given, strategies as st

from oracles import random_graph, to_networkx
from specdiss.canon import (are_isomorphic, canonical_code, canonical_form,
                            coarsest_equitable_partition)
from specdiss.graph import cycle, path, relabel, star
from specdiss.quotient import is_equitable


@given(st.integers(1, 9), st.integers(0, 10**6))
def test_code_invariant_under_relabelling(n, seed):
    rng = random.Random(seed)
    g = random_graph(rng, n)
    perm = list(range(n))
    rng.shuffle(perm)
    h = relabel(g, perm)
    assert canonical_code(g) == canonical_code(h)
    assert canonical_form(g) == canonical_form(h)


@given(st.integers(2, 7), st.integers(0, 10**6))
def test_isomorphism_agrees_with_networkx(n, seed):
    rng = random.Random(seed)
    m = rng.randrange(n * (n - 1) // 2 + 1)
    # same edge count makes the question non-trivial
    g = random_graph(rng, n, m / max(1, n * (n - 1) // 2))
    h = random_graph(rng, n, m / max(1, n * (n - 1) // 2))
    assert are_isomorphic(g, h) == nx.is_isomorphic(to_networkx(g), to_networkx(h))


def test_path_and_star_not_isomorphic():
    assert not are_isomorphic(path(4), star(4))
    assert are_isomorphic(cycle(5), relabel(cycle(5), [2, 4, 1, 3, 0]))


def test_coarsest_equitable_partition():
    cells = coarsest_equitable_partition(star(5))
    assert sorted(map(sorted, cells)) == [[0], [1, 2, 3, 4]]
    p = coarsest_equitable_partition(path(5))
    assert sorted(map(sorted, p)) == [[0, 4], [1, 3], [2]]


@given(st.integers(1, 9), st.integers(0, 10**6))
def test_coarsest_partition_is_equitable(n, seed):
    g = random_graph(random.Random(seed), n)
    assert is_equitable(g, 0.3, coarsest_equitable_partition(g))
