import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, nx_contains, to_nx
from lollipop_blowup.blowup import blowup
from lollipop_blowup.constructions import ConstructionSpec, lollipop, realize
from lollipop_blowup.containment import (
    BlowupEmbedding,
    SearchBudgetExceeded,
    blowup_contains,
    freeness_certificate,
    max_bipartite_matching,
    min_vertex_cover,
    subgraph_contains,
    verify_blowup_embedding,
    verify_embedding,
)
from lollipop_blowup.graph import Graph, make_basic


def test_subgraph_examples():
    k3 = make_basic("complete", 3)
    assert subgraph_contains(k3, make_basic("path", 3)) is not None
    assert subgraph_contains(k3, make_basic("cycle", 4)) is None
    host = realize(ConstructionSpec("H", 12, 2, 3))
    emb = subgraph_contains(host, lollipop(3, 2))
    assert emb is not None and verify_embedding(host, lollipop(3, 2), emb.mapping)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=8), graphs(min_n=1, max_n=5), st.booleans())
def test_subgraph_agrees_with_networkx(host, pattern, symmetry):
    emb = subgraph_contains(host, pattern, host_symmetry=symmetry)
    assert (emb is not None) == nx_contains(host, pattern)
    if emb is not None:
        assert verify_embedding(host, pattern, emb.mapping)


def test_budget_raises():
    host = realize(ConstructionSpec("H", 30, 2, 3))
    pattern = blowup(lollipop(3, 2), 2).graph
    with pytest.raises(SearchBudgetExceeded):
        subgraph_contains(host, pattern, budget=5, host_symmetry=False)
    with pytest.raises(SearchBudgetExceeded):
        blowup_contains(host, 3, 2, 2, budget=1)


def test_blowup_examples():
    assert blowup_contains(realize(ConstructionSpec("H", 40, 2, 3)), 3, 2, 2) is None
    emb = blowup_contains(Graph.complete(10), 3, 2, 2)
    assert emb is not None and verify_blowup_embedding(Graph.complete(10), emb)
    host = realize(ConstructionSpec("H", 40, 2, 4))
    emb = blowup_contains(host, 3, 2, 2)
    assert emb is not None and verify_blowup_embedding(host, emb)


def test_blowup_embedding_maps_the_blowup_graph():
    host = realize(ConstructionSpec("H", 20, 2, 4))
    emb = blowup_contains(host, 3, 2, 2)
    pattern = blowup(lollipop(3, 2), 2).graph
    assert verify_embedding(host, pattern, emb.as_mapping())


def test_verifier_rejects_bad_witness():
    host = Graph.complete(10)
    emb = blowup_contains(host, 3, 2, 2)
    clash = BlowupEmbedding(3, 2, 2, emb.base_map, (emb.apex_sets[1],) + emb.apex_sets[1:])
    assert not verify_blowup_embedding(host, clash)
    assert not verify_blowup_embedding(host.remove_edge(*emb.base_map[:2]), emb)


def _random_host(rng, n, prob):
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2)
                                if rng.random() < prob])


@pytest.mark.parametrize("k,l,p,n_range,prob", [
    (3, 1, 2, (8, 10), 0.6),
    (4, 1, 2, (10, 11), 0.6),
    (3, 1, 3, (12, 13), 0.6),
])
def test_blowup_agrees_with_networkx(k, l, p, n_range, prob):
    rng = random.Random(k * 100 + l * 10 + p)
    pattern = blowup(lollipop(k, l), p).graph
    hits = 0
    for _ in range(12):
        host = _random_host(rng, rng.randint(*n_range), prob)
        emb = blowup_contains(host, k, l, p)
        assert (emb is not None) == nx_contains(host, pattern)
        hits += emb is not None
    assert 0 < hits < 12


@pytest.mark.parametrize("k,l,p", [(3, 2, 3), (4, 2, 2), (3, 3, 2)])
def test_blowup_agrees_with_generic_search(k, l, p):
    rng = random.Random(11)
    m = (k + l) * p
    pattern = blowup(lollipop(k, l), p).graph
    for _ in range(15):
        host = _random_host(rng, rng.randint(m, m + 3), 0.7)
        fast = blowup_contains(host, k, l, p)
        slow = subgraph_contains(host, pattern, host_symmetry=False)
        assert (fast is None) == (slow is None)


def test_max_bipartite_matching():
    assert max_bipartite_matching([0b011, 0b001, 0b110]) == [1, 0, 2]
    assert max_bipartite_matching([0b01, 0b01]) is None
    rng = random.Random(5)
    for _ in range(100):
        left, right = rng.randint(1, 6), rng.randint(1, 6)
        cands = [rng.getrandbits(right) for _ in range(left)]
        b = nx.Graph()
        b.add_nodes_from((("L", i) for i in range(left)))
        b.add_edges_from((("L", i), ("R", x)) for i, c in enumerate(cands)
                         for x in range(right) if c >> x & 1)
        size = len(nx.bipartite.maximum_matching(b, top_nodes=[("L", i) for i in range(left)])) // 2
        got = max_bipartite_matching(cands)
        assert (got is not None) == (size == left)
        if got is not None:
            assert len(set(got)) == left and all(cands[i] >> x & 1 for i, x in enumerate(got))


def test_vertex_cover_examples():
    assert min_vertex_cover(lollipop(3, 2))[0] == 3
    assert min_vertex_cover(make_basic("cycle", 4))[0] == 2
    assert min_vertex_cover(make_basic("complete", 5))[0] == 4
    with pytest.raises(ValueError):
        min_vertex_cover(Graph.empty(30))


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=10))
def test_vertex_cover_against_subsets(g):
    size, cover = min_vertex_cover(g)
    cset = set(cover)
    assert len(cover) == size
    assert all(u in cset or v in cset for u, v in g.edges())
    for s in range(size):
        for sub in combinations(range(g.n), s):
            ss = set(sub)
            assert not all(u in ss or v in ss for u, v in g.edges())


def test_certificate_examples():
    c = freeness_certificate(ConstructionSpec("H", 40, 3, 3), 3, 3, 3)
    assert c and c.kind == "clique-count" and (c.budget, c.demand) == (5, 6)
    c = freeness_certificate(ConstructionSpec("H", 40, 2, 3), 3, 2, 2)
    assert c and c.kind == "vertex-cover" and (c.budget, c.demand) == (2, 3)
    c = freeness_certificate(ConstructionSpec("Hprime", 40, 2, 3), 4, 3, 2)
    assert c and c.kind == "clique-count" and (c.budget, c.demand) == (6, 7)
    assert freeness_certificate(ConstructionSpec("H", 40, 2, 4), 3, 2, 2) is None
    with pytest.raises(ValueError):
        freeness_certificate(ConstructionSpec("Hstar", 10), 3, 2, 2)
    with pytest.raises(ValueError):
        freeness_certificate(ConstructionSpec("H", 10, 3, 3), 3, 2, 2)


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 5), st.integers(1, 3), st.integers(2, 3), st.integers(1, 5),
       st.sampled_from(["H", "Hprime"]))
def test_valid_certificate_implies_free(k, l, p, q, variant):
    spec = ConstructionSpec(variant, 24, p, q)
    cert = freeness_certificate(spec, k, l, p)
    if cert is not None:
        assert cert.valid
        assert blowup_contains(realize(spec), k, l, p) is None
