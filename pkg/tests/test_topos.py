import pytest
from hypothesis import given, settings

from conftest import small_oriented, triangle
from oriented_hypergraphs.core import (
    Homomorphism,
    IncidenceHypergraph,
    enumerate_homomorphisms,
    product,
    validate,
    validate_homomorphism,
)
from oriented_hypergraphs.errors import DomainError
from oriented_hypergraphs.topos import (
    classify,
    count_subhypergraphs,
    elem_map,
    enumerate_subhypergraphs,
    initial,
    is_essential_mono,
    is_injective,
    loading,
    member_id,
    partial_square_is_pullback,
    power,
    power_map,
    power_transpose,
    represent_partial,
    subobject_classifier,
    subobject_from_map,
    terminal,
    tilde,
    tilde_map,
    zero_loading,
)


def test_terminal_and_initial_shapes():
    one = terminal()
    assert (len(one.vertices), len(one.edges), len(one.incidences)) == (1, 1, 1)
    zero = initial()
    assert (len(zero.vertices), len(zero.edges), len(zero.incidences)) == (0, 0, 0)


def test_classifier_shape():
    sc = subobject_classifier()
    om = sc.omega
    assert (len(om.vertices), len(om.edges), len(om.incidences)) == (2, 2, 5)
    assert validate(om).ok
    assert om.inc(sc.true_vertex, sc.true_edge) != ()
    # exactly one incidence is the designated true one
    truths = [i.id for i in om.incidences if i.id == sc.true_incidence]
    assert len(truths) == 1


def test_tilde_counts():
    g = triangle().structure
    ext = tilde(g)
    assert len(ext.hypergraph.vertices) == len(g.vertices) + 1
    assert len(ext.hypergraph.edges) == len(g.edges) + 1
    expected = len(g.incidences) + (len(g.vertices) + 1) * (len(g.edges) + 1)
    assert len(ext.hypergraph.incidences) == expected
    assert validate(ext.hypergraph).ok
    assert validate_homomorphism(ext.eta).ok


def test_tilde_map_extends_along_eta():
    g = triangle().structure
    ident = Homomorphism(
        g,
        g,
        {v: v for v in g.vertices},
        {e: e for e in g.edges},
        {i.id: i.id for i in g.incidences},
    )
    ext = tilde_map(ident)
    assert validate_homomorphism(ext).ok
    src = tilde(g)
    for v in g.vertices:
        assert ext.vertex_map[src.eta.vertex_map[v]] == src.eta.vertex_map[v]


def test_classify_and_recover_subobject():
    g = triangle().structure
    for k in enumerate_subhypergraphs(g):
        chi = classify(k)
        assert validate_homomorphism(chi).ok
        back = subobject_from_map(chi)
        assert back.vertex_ids == k.vertex_ids
        assert back.edge_ids == k.edge_ids
        assert back.incidence_ids == k.incidence_ids


def test_subobject_count_matches_map_count():
    g = IncidenceHypergraph.build(
        ["a", "b"], ["e"], [("i", "a", "e"), ("j", "b", "e")]
    )
    subs = enumerate_subhypergraphs(g)
    assert len(subs) == count_subhypergraphs(g)
    omega = subobject_classifier().omega
    assert len(enumerate_homomorphisms(g, omega)) == len(subs)
    assert len({member_id(k) for k in subs}) == len(subs)


def test_represent_partial_square_is_pullback():
    g = triangle().structure
    for k in enumerate_subhypergraphs(g):
        sub = k.materialize()
        bang = Homomorphism(
            sub,
            terminal(),
            {v: "v" for v in sub.vertices},
            {e: "e" for e in sub.edges},
            {i.id: "i" for i in sub.incidences},
        )
        chi = represent_partial(k.inclusion(), bang)
        assert partial_square_is_pullback(k.inclusion(), bang, chi)


def test_represent_partial_demands_monic():
    g = IncidenceHypergraph.build(["a", "b"], [], [])
    squash = Homomorphism(g, terminal(), {"a": "v", "b": "v"}, {}, {})
    with pytest.raises(DomainError):
        represent_partial(squash, squash)


def test_power_object_membership():
    g = IncidenceHypergraph.build(["a"], ["e"], [("i", "a", "e")])
    pwr = power(g)
    # subsets: 2 vertex subsets, 2 edge subsets, 5 subhypergraphs
    assert len(pwr.hypergraph.vertices) == 2
    assert len(pwr.hypergraph.edges) == 2
    assert len(pwr.hypergraph.incidences) == count_subhypergraphs(g)
    assert validate(pwr.hypergraph).ok


def test_power_transpose_round_trip():
    g = IncidenceHypergraph.build(["a"], ["e"], [("i", "a", "e")])
    k = terminal()
    prod, membership = elem_map(g)
    assert validate_homomorphism(membership).ok
    omega = subobject_classifier().omega
    pwr = power(g)
    lhs = enumerate_homomorphisms(product(g, k).hypergraph, omega)
    rhs = enumerate_homomorphisms(k, pwr.hypergraph)
    assert len(lhs) == len(rhs)
    for phi in lhs:
        prod_gk = product(g, k)
        transposed = power_transpose(prod_gk, phi)
        assert validate_homomorphism(transposed).ok


def test_power_map_acts_by_preimage():
    g = IncidenceHypergraph.build(["a"], [], [])
    h = IncidenceHypergraph.build(["x", "y"], [], [])
    phi = Homomorphism(g, h, {"a": "x"}, {}, {})
    back = power_map(phi)
    assert validate_homomorphism(back).ok
    pwr_h = power(h)
    pwr_g = power(g)
    full = pwr_h.vertex_subset_ids[frozenset({"x", "y"})]
    assert back.vertex_map[full] == pwr_g.vertex_subset_ids[frozenset({"a"})]
    only_y = pwr_h.vertex_subset_ids[frozenset({"y"})]
    assert back.vertex_map[only_y] == pwr_g.vertex_subset_ids[frozenset()]


def test_is_injective():
    assert not is_injective(initial())
    assert is_injective(terminal())
    assert not is_injective(triangle().structure)
    loaded = loading(triangle().structure)
    assert is_injective(loaded.hypergraph)


def test_loading_keeps_original_ids_and_is_essential():
    g = triangle().structure
    res = loading(g)
    assert set(g.vertices) <= set(res.hypergraph.vertices)
    assert {i.id for i in g.incidences} <= {i.id for i in res.hypergraph.incidences}
    assert is_essential_mono(res.j)
    again = loading(res.hypergraph)
    assert again.hypergraph == res.hypergraph
    assert again.added_incidences == frozenset()


def test_loading_of_empty_needs_fresh_elements():
    res = loading(initial())
    assert res.hypergraph.vertices == ("0",)
    assert res.hypergraph.edges == ("0",)
    assert len(res.hypergraph.incidences) == 1


def test_eta_essential_only_for_empty():
    assert is_essential_mono(tilde(initial()).eta)
    assert not is_essential_mono(tilde(terminal()).eta)
    assert not is_essential_mono(tilde(triangle().structure).eta)


def test_zero_loading_signs_fillers_zero():
    og = triangle()
    padded = zero_loading(og)
    assert len(padded.incidences) == 9
    fillers = [i.id for i in padded.incidences if i.id not in og.structure.incidence_pos]
    assert all(padded.sigma(i) == 0 for i in fillers)
    assert padded.loaded == frozenset(fillers)
    for i in og.structure.incidences:
        assert padded.sigma(i.id) == og.sigma(i.id)


@settings(max_examples=25, deadline=None)
@given(small_oriented(max_vertices=3, max_edges=2, max_incidences=4))
def test_loading_is_idempotent_and_injective(og):
    res = loading(og.structure)
    assert is_injective(res.hypergraph)
    assert loading(res.hypergraph).added_incidences == frozenset()


@settings(max_examples=20, deadline=None)
@given(small_oriented(max_vertices=2, max_edges=2, max_incidences=3))
def test_subobject_bijection_on_random_structures(og):
    g = og.structure
    subs = enumerate_subhypergraphs(g)
    omega = subobject_classifier().omega
    assert len(subs) == count_subhypergraphs(g)
    assert len(subs) == len(enumerate_homomorphisms(g, omega))
