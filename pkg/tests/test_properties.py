from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphprops.graphcore import (
    Graph,
    complement,
    complete_bipartite,
    complete_graph,
    contains_induced,
    contains_subgraph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    join,
    null_graph,
    path_graph,
    star,
)
from graphprops.properties import (
    Builtin,
    Extensional,
    Finite,
    ForbiddenInduced,
    ForbiddenSubgraph,
    GeneratedInduced,
    GeneratedSubgraph,
    K,
    MinusG,
    O,
    PlusG,
    Product,
    PropertyError,
    UnionOf,
    IntersectionOf,
    Without,
    K_s,
    O_s,
    build_uniform,
    dump_properties,
    gen_filter_2L,
    gen_filter_2star,
    gen_filter_L,
    is_additive_up_to,
    is_coadditive_up_to,
    is_compositive_up_to,
    is_generating_set_up_to,
    is_geq_hereditary_up_to,
    is_hereditary_up_to,
    is_indiscompositive_up_to,
    is_induced_hereditary_up_to,
    load_properties,
    materialize,
    member,
    ordered_generating_chain,
    parse_property,
    two_star,
)
from graphprops.universe import enumerate_universe
from oracles import clique_with_pendants_oracle, is_forest_oracle, is_split_oracle, two_colourable
from test_graphcore import graphs

K1, K2, K3, K4 = (complete_graph(k) for k in (1, 2, 3, 4))
CO_K2, CO_K3 = empty_graph(2), empty_graph(3)
P3, P4, C4, C5, C6 = path_graph(3), path_graph(4), cycle_graph(4), cycle_graph(5), cycle_graph(6)
TWO_K2 = disjoint_union(K2, K2)
DIAMOND = join(CO_K2, K2)
SPLIT, FORESTS, BIPARTITE = Builtin("split"), Builtin("forests"), Builtin("bipartite")
CWP = Builtin("clique_with_pendants")


def test_membership_examples():
    assert member(O_s(2), CO_K2)
    assert not member(O_s(2), CO_K3)
    assert not member(CWP, TWO_K2)
    assert not member(FORESTS, C6)
    assert member(FORESTS, star(5)) and member(FORESTS, path_graph(9))
    assert not member(SPLIT, C4)


def test_null_graph_is_in_every_property():
    for p in (O, K, SPLIT, Finite((K3,)), PlusG(K2), Product((O, K))):
        assert member(p, null_graph())


def test_builtins_match_oracles(u6):
    for g in u6.graphs:
        assert member(BIPARTITE, g) == two_colourable(g)
        assert member(FORESTS, g) == is_forest_oracle(g)
        assert member(SPLIT, g) == is_split_oracle(g)
        assert member(CWP, g) == clique_with_pendants_oracle(g)


def test_materialize_examples(u4, u5):
    assert set(materialize(O, u4)) == {empty_graph(k) for k in range(1, 5)}
    assert len(materialize(BIPARTITE, u5)) == sum(two_colourable(g) for g in u5.graphs)
    assert materialize(Product((O, K)), u4) == materialize(SPLIT, u4)
    assert set(materialize(Product((O, K)), u4)) == {g for g in u4.graphs if is_split_oracle(g)}


def test_heredity_examples(u6):
    assert is_induced_hereditary_up_to(SPLIT, u6).holds
    v = is_hereditary_up_to(SPLIT, u6)
    assert not v.holds
    big, small = v.witness
    assert member(SPLIT, big) and not member(SPLIT, small) and contains_subgraph(big, small)
    # diamond minus a diagonal is C4
    assert member(SPLIT, DIAMOND) and contains_subgraph(DIAMOND, C4) and not member(SPLIT, C4)
    assert is_induced_hereditary_up_to(O, u6).holds and is_hereditary_up_to(O, u6).holds
    assert is_induced_hereditary_up_to(K_s(3), u6).holds
    assert not is_hereditary_up_to(K_s(3), u6).holds
    assert member(K_s(3), K3) and not member(K_s(3), P3)


def test_additivity_examples(u6):
    v = is_additive_up_to(SPLIT, u6)
    assert not v.holds and v.witness == (K2, K2)
    assert not member(SPLIT, TWO_K2)
    v = is_coadditive_up_to(SPLIT, u6)
    assert not v.holds and v.witness == (CO_K2, CO_K2)
    assert not member(SPLIT, join(CO_K2, CO_K2))
    assert is_additive_up_to(O, u6).holds


def test_compositivity_examples(u6):
    assert is_indiscompositive_up_to(K, u6).holds
    bo3 = Builtin("bounded_order", 3)
    v = is_compositive_up_to(bo3, u6)
    assert not v.holds
    a, b = v.witness
    assert a.n + b.n > 3
    assert not any(contains_induced(g, K3) and contains_induced(g, CO_K3) for g in materialize(bo3, u6))
    assert is_compositive_up_to(bo3, u6, relation="subgraph").holds


def test_clique_with_pendants_classes(u6):
    assert is_indiscompositive_up_to(CWP, u6).holds
    assert not is_additive_up_to(CWP, u6).holds
    assert not is_coadditive_up_to(CWP, u6).holds


def test_geq_heredity(u5):
    assert is_geq_hereditary_up_to(PlusG(K2), u5).holds
    assert not is_geq_hereditary_up_to(O, u5).holds
    assert is_induced_hereditary_up_to(MinusG(P3), u5).holds


def test_generating_filters():
    gens = [P4, C4, K4]
    assert gen_filter_L(gens, K2) == gens
    assert gen_filter_L(gens, K3) == [K4]
    assert gen_filter_L(gens, K1) == gens
    assert gen_filter_2L([TWO_K2, C4, K4], K2) == [TWO_K2]
    assert gen_filter_2L(gens, K1) == [g for g in gens if contains_induced(g, CO_K2)]
    assert gen_filter_2L([C6], K2) == [C6]
    assert gen_filter_2star([C4, K3], K2) == [C4]


def test_two_star():
    assert set(two_star(K1)) == {CO_K2, K2}
    assert C4 in two_star(K2)
    assert K4 in two_star(K2)
    with pytest.raises(PropertyError):
        two_star(empty_graph(5))


def test_generating_sets(u6):
    assert is_generating_set_up_to([empty_graph(6)], O, u6).holds
    v = is_generating_set_up_to([C6], FORESTS, u6)
    assert not v.holds
    assert not is_generating_set_up_to([C6], ForbiddenSubgraph((K3,)), u6).holds
    members = list(materialize(FORESTS, u6))
    assert is_generating_set_up_to(members, FORESTS, u6).holds


def test_generating_set_rejects_non_members(u6):
    v = is_generating_set_up_to([C6], FORESTS, u6)
    assert not v.holds and v.witness == (C6,)
    missing = is_generating_set_up_to([path_graph(6)], FORESTS, u6)
    assert not missing.holds
    (uncovered,) = missing.witness
    assert member(FORESTS, uncovered) and not contains_induced(path_graph(6), uncovered)


def test_ordered_chains(u6):
    c = ordered_generating_chain(O, u6)
    assert c.chain == [empty_graph(k) for k in range(1, 7)]
    c3 = ordered_generating_chain(Builtin("bounded_order", 3), enumerate_universe(3))
    assert c3.chain[-1].n == 3
    assert all(contains_induced(b, a) for a, b in zip(c3.chain, c3.chain[1:]))
    cb = ordered_generating_chain(BIPARTITE, u6)
    assert all(contains_induced(b, a) for a, b in zip(cb.chain, cb.chain[1:]))
    assert all(member(BIPARTITE, g) for g in cb.chain)


def test_build_uniform():
    assert build_uniform(K1, [(0, 0)], 4) == K4
    assert build_uniform(K1, [], 4) == empty_graph(4)
    g = build_uniform(K2, [(0, 0), (1, 1)], 3)
    # copies p < q joined by a perfect matching: every pair of copies induces C4
    for p in range(3):
        for q in range(p + 1, 3):
            mask = (3 << 2 * p) | (3 << 2 * q)
            assert g.sub(mask) == C4 or complement(g.sub(mask)) == TWO_K2


def test_graph_set_kinds_normalise():
    assert ForbiddenInduced((P3, P4)).graphs == (P3,)
    assert GeneratedInduced((P3, P4)).graphs == (P4,)
    assert member(GeneratedSubgraph((K3,)), P3)
    assert not member(GeneratedInduced((K3,)), P3)


def test_serialisation_roundtrip(u5):
    props = {
        "o": O,
        "k3": K_s(3),
        "split": SPLIT,
        "fi": ForbiddenInduced((P3, C4)),
        "fs": ForbiddenSubgraph((K3,)),
        "gi": GeneratedInduced((C5,)),
        "plus": PlusG(K2),
        "minus": MinusG(P3),
        "prod": Product((O, K)),
        "union": UnionOf((PlusG(P3), PlusG(K3))),
        "inter": IntersectionOf((FORESTS, BIPARTITE)),
        "fin": Finite((K1, K3)),
        "without": Without(K, (K1,)),
        "ext": Extensional(materialize(FORESTS, u5)),
    }
    back = load_properties(dump_properties(props))
    assert back == props
    for name, p in props.items():
        assert materialize(back[name], u5) == materialize(p, u5)


def test_parse_property():
    assert parse_property("O") == O
    assert parse_property("K(3)") == K_s(3)
    assert parse_property("O*K") == Product((O, K))
    assert parse_property("3-colourable") == Product((O, O, O))
    assert parse_property("plus(Bw)") == PlusG(K3)
    assert parse_property("forbidden_induced(Bw,Cl)") == ForbiddenInduced((K3, C4))
    assert parse_property("mine", {"mine": SPLIT}) == SPLIT
    for bad in ("nosuch", "O(0)", "plus(~~)", "bounded_order"):
        with pytest.raises(PropertyError):
            parse_property(bad)


@given(graphs(6))
@settings(max_examples=150, deadline=None)
def test_products_agree_with_oracles(g):
    assert member(Product((O, O)), g) == two_colourable(g)
    assert member(Product((O, K)), g) == is_split_oracle(g)


@given(graphs(7), st.data())
@settings(max_examples=150, deadline=None)
def test_induced_hereditary_builtins_survive_vertex_deletion(g, data):
    if g.n == 0:
        return
    v = data.draw(st.integers(0, g.n - 1))
    h = g.sub(g.vertex_mask & ~(1 << v))
    for p in (O, K, SPLIT, FORESTS, BIPARTITE, Builtin("path_components"), Builtin("bounded_order", 4)):
        if member(p, g):
            assert member(p, h)


@given(graphs(6))
@settings(max_examples=150, deadline=None)
def test_complement_duality(g):
    assert member(SPLIT, g) == member(SPLIT, complement(g))
    assert member(O, g) == member(K, complement(g))
