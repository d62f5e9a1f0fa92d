import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import to_nx
from lollipop_blowup.blowup import split_vertex
from lollipop_blowup.canon import GraphFamily
from lollipop_blowup.constructions import (
    ConstructionSpec,
    LollipopParams,
    clique_vertices,
    edge_count_formula,
    lollipop,
    predicted_extremal,
    realize,
    small_case_family,
    y_family,
)
from lollipop_blowup.containment import min_vertex_cover
from lollipop_blowup.graph import chromatic_number


def test_lollipop_shape():
    g = lollipop(3, 2)
    assert (g.n, g.num_edges()) == (5, 5)
    assert sorted(g.degrees()).count(3) == 1
    g = lollipop(4, 3)
    assert (g.n, g.num_edges()) == (7, 7)
    assert sorted(lollipop(3, 1).degrees(), reverse=True) == [3, 2, 2, 1]
    with pytest.raises(ValueError):
        lollipop(2, 1)
    with pytest.raises(ValueError):
        lollipop(3, 0)


@given(st.integers(3, 12), st.integers(1, 12))
def test_params(k, l):
    par = LollipopParams(k, l)
    assert par.t == (k - 1) // 2 + (l - 1) // 2
    assert par.m(3) == (k + l) * 3


def _nx_y_count(k, l):
    found = []
    for branch in range(1, k):
        h = nx.path_graph(k + 1)
        nx.add_path(h, [branch] + list(range(k + 1, k + l + 1)))
        if not any(nx.is_isomorphic(h, f) for f in found):
            found.append(h)
    return len(found)


@pytest.mark.parametrize("k,l", [(3, 2), (4, 2), (5, 3), (6, 1)])
def test_y_family_sizes_against_networkx(k, l):
    fam = y_family(k, l)
    assert len(fam) == _nx_y_count(k, l)
    for y in fam:
        assert (y.n, y.num_edges()) == (k + l + 1, k + l)
        assert y.degrees().count(3) == 1
    with pytest.raises(ValueError):
        y_family(1, 2)


def test_y_family_small_values():
    assert len(y_family(3, 2)) == 1
    assert len(y_family(4, 2)) == 2


@pytest.mark.parametrize("k,l", [(3, 2), (4, 2), (5, 3)])
def test_y_members_are_single_splits_of_cycle_vertices(k, l):
    splits = GraphFamily(split_vertex(lollipop(k, l), v) for v in range(1, k))
    assert y_family(k, l).issubset(splits)


def test_realize_examples():
    assert realize(ConstructionSpec("H", 10, 2, 3)).num_edges() == 33
    assert realize(ConstructionSpec("Hprime", 10, 2, 3)).num_edges() == 34
    assert realize(ConstructionSpec("Hstar", 8)).num_edges() == 20
    assert edge_count_formula(ConstructionSpec("Hstar", 6)) == 11
    assert edge_count_formula(ConstructionSpec("H", 10, 2, 3)) == 33


def test_hprime_extra_edge_inside_first_class():
    g = realize(ConstructionSpec("Hprime", 11, 3, 3))
    h = realize(ConstructionSpec("H", 11, 3, 3))
    extra = set(g.edges()) - set(h.edges())
    assert extra == {(2, 3)}


def test_hstar_odd_classes():
    g = realize(ConstructionSpec("Hstar", 7))
    side_a, side_b = range(0, 4), range(4, 7)
    inside_a = [(u, v) for u, v in g.edges() if u in side_a and v in side_a]
    inside_b = [(u, v) for u, v in g.edges() if u in side_b and v in side_b]
    # even class: perfect matching; odd class: lowest label left unmatched
    assert inside_a == [(0, 1), (2, 3)]
    assert inside_b == [(5, 6)]
    assert g.num_edges() == 12 + 2 + 1


@given(st.integers(1, 40), st.integers(1, 5), st.integers(1, 8))
def test_formula_matches_count(n, p, q):
    for variant in ("H", "Hprime", "TuranOnly"):
        try:
            spec = ConstructionSpec(variant, n, p, q)
        except ValueError:
            continue
        g = realize(spec)
        assert g.n == n
        assert g.num_edges() == edge_count_formula(spec)
    if n >= 2:
        spec = ConstructionSpec("Hstar", n)
        assert realize(spec).num_edges() == edge_count_formula(spec)


@given(st.integers(6, 14), st.integers(2, 3), st.integers(1, 4))
def test_deleting_q_leaves_p_partite(n, p, q):
    spec = ConstructionSpec("H", n, p, q)
    g = realize(spec)
    rest = g.delete_vertices(clique_vertices(spec))
    assert chromatic_number(rest) <= p
    assert all(g.degree(v) == n - 1 for v in clique_vertices(spec))


def test_invalid_specs():
    with pytest.raises(ValueError):
        ConstructionSpec("H", 5, 2, 0)
    with pytest.raises(ValueError):
        ConstructionSpec("Hstar", 1)
    with pytest.raises(ValueError):
        ConstructionSpec("Nope", 5)
    with pytest.raises(ValueError):
        ConstructionSpec("Hprime", 3, 3, 1)


@pytest.mark.parametrize("k,l,p,variant,q", [
    (3, 2, 2, "H", 3),
    (4, 3, 2, "Hprime", 3),
    (3, 3, 3, "H", 3),
    (4, 2, 3, "H", 3),
    (5, 3, 4, "H", 4),
    (4, 1, 3, "Hprime", 2),
    (5, 1, 2, "H", 3),
])
def test_predicted_extremal(k, l, p, variant, q):
    pred = predicted_extremal(k, l, p, 40)
    assert pred.covered
    assert [(s.variant, s.p, s.q) for s in pred.specs] == [(variant, p, q)]


def test_prediction_uncovered():
    assert not predicted_extremal(2, 2, 2, 40).covered
    assert not predicted_extremal(3, 2, 1, 40).covered
    assert predicted_extremal(3, 2, 2, 40).specs


@pytest.mark.parametrize("n,variants", [
    (24, ["JoinFamily", "Hstar"]),
    (20, ["Hstar"]),
    (18, ["JoinFamily"]),
    (14, None),
])
def test_small_case_family(n, variants):
    fam = small_case_family(n)
    for spec in fam:
        g = realize(spec)
        assert g.n == n and g.num_edges() == edge_count_formula(spec)
    if variants is not None:
        assert [s.variant for s in fam] == variants
    else:
        assert fam[1].variant == "Hstar"
        c = (n + 1) // 2
        stars = fam[2:]
        assert len(stars) == (c - 1) // 3 + 1
    pred = predicted_extremal(3, 1, 2, n)
    assert list(pred.specs) == fam


@pytest.mark.parametrize("k,l", [(3, 2), (3, 4), (5, 2), (5, 4)])
def test_lollipop_vertex_cover(k, l):
    assert min_vertex_cover(lollipop(k, l))[0] == (k + l + 1) // 2
