import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, to_nx
from lollipop_blowup.canon import (
    GraphFamily,
    canonical_form,
    canonical_labeling,
    is_isomorphic,
    twin_classes,
)
from lollipop_blowup.graph import Graph, copies, make_basic


def test_spec_examples():
    a = Graph.from_edges(3, [(0, 1), (1, 2)])
    b = Graph.from_edges(3, [(0, 2), (2, 1)])
    assert canonical_form(a) == canonical_form(b)
    assert canonical_form(a) != canonical_form(make_basic("complete", 3))
    assert canonical_form(make_basic("cycle", 6)) != canonical_form(copies(2, make_basic("complete", 3)))


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=10), st.randoms(use_true_random=False))
def test_code_invariant_under_permutation(g, rng):
    code = canonical_form(g)
    for _ in range(100):
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canonical_form(g.relabel(perm)) == code


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=7), graphs(max_n=7))
def test_refine_agrees_with_exhaustive_and_networkx(g, h):
    same = nx.is_isomorphic(to_nx(g), to_nx(h))
    assert is_isomorphic(g, h) == same
    assert is_isomorphic(g, h, method="exhaustive") == same


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_labeling_is_a_permutation(g):
    order = canonical_labeling(g)
    assert sorted(order) == list(range(g.n))
    assert canonical_form(g.relabel(order)) == canonical_form(g)


def test_hard_regular_pairs():
    # co-spectral style regular graphs that colour refinement alone cannot split
    rook = nx.cartesian_product(nx.complete_graph(4), nx.complete_graph(4))
    shrikhande = nx.Graph()
    for a in range(4):
        for b in range(4):
            for da, db in ((0, 1), (1, 0), (1, 1)):
                shrikhande.add_edge((a, b), ((a + da) % 4, (b + db) % 4))
    def conv(h):
        idx = {v: i for i, v in enumerate(sorted(h.nodes()))}
        return Graph.from_edges(len(idx), [(idx[u], idx[v]) for u, v in h.edges()])
    g1, g2 = conv(rook), conv(shrikhande)
    assert not is_isomorphic(g1, g2)
    rng = random.Random(3)
    perm = list(range(16))
    rng.shuffle(perm)
    assert is_isomorphic(g2, g2.relabel(perm))


def test_size_cap():
    with pytest.raises(ValueError):
        canonical_form(Graph.empty(12), method="exhaustive")


def test_twin_classes_of_complete_bipartite():
    from lollipop_blowup.graph import turan
    reps = twin_classes(turan(6, 2))
    assert sorted(set(reps)) == [0, 3]


def test_graph_family():
    fam = GraphFamily()
    p3 = make_basic("path", 3)
    assert fam.add(p3)
    assert not fam.add(Graph.from_edges(3, [(0, 2), (2, 1)]))
    assert fam.add(make_basic("complete", 3))
    assert len(fam) == 2
    assert p3 in fam and canonical_form(p3) in fam
    assert fam.filter(lambda g: g.num_edges() == 2).issubset(fam)
    assert fam == GraphFamily([make_basic("complete", 3), p3])
    codes = [canonical_form(g) for g in fam]
    assert codes == sorted(codes)
