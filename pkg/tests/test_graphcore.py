from __future__ import annotations

from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphprops.graphcore import (
    Graph,
    GraphError,
    add_edge,
    canonical_form,
    complement,
    complete_bipartite,
    complete_graph,
    connected_components,
    contains_induced,
    contains_subgraph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_graph6,
    induced_subgraph,
    is_connected,
    is_isomorphic,
    join,
    null_graph,
    path_graph,
    star,
    to_graph6,
)
from oracles import brute_isomorphic, to_nx

K1, K2, K3, K4 = (complete_graph(k) for k in (1, 2, 3, 4))
P3, P4, C4, C5 = path_graph(3), path_graph(4), cycle_graph(4), cycle_graph(5)
DIAMOND = join(empty_graph(2), K2)


@st.composite
def graphs(draw, max_n: int = 7):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.integers(0, (1 << len(pairs)) - 1)) if pairs else 0
    return Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def test_canonical_relabelling():
    a = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    b = Graph.from_edges(3, [(2, 0), (1, 0), (2, 1)])
    assert canonical_form(a) == canonical_form(b) == K3


def test_union_is_symmetric():
    assert canonical_form(disjoint_union(K3, K1)) == canonical_form(disjoint_union(K1, K3))


def test_three_edge_graphs_on_four_vertices():
    pairs = list(combinations(range(4), 2))
    forms = {canonical_form(Graph.from_edges(4, es)) for es in combinations(pairs, 3)}
    assert len(forms) == 3
    assert forms == {P4, disjoint_union(K3, K1), star(3)}


def test_isomorphism_examples():
    assert is_isomorphic(C5, complement(C5))
    assert not is_isomorphic(P4, star(3))
    assert is_isomorphic(DIAMOND, DIAMOND)


def test_union_and_join_examples():
    assert disjoint_union(K2, K2) == canonical_form(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert disjoint_union(K1, K1) == empty_graph(2)
    assert sorted(disjoint_union(K3, empty_graph(2)).degrees()) == [0, 0, 2, 2, 2]
    assert join(K1, K1) == K2
    assert join(empty_graph(2), empty_graph(2)) == C4
    assert join(K1, K2) == K3


def test_complement_examples(u6):
    assert complement(K3) == empty_graph(3)
    assert complement(C4) == disjoint_union(K2, K2)
    assert all(complement(complement(g)) == g for g in u6.graphs)


def test_induced_subgraph_examples():
    assert all(canonical_form(induced_subgraph(C5, vs)) == P4 for vs in combinations(range(5), 4))
    assert canonical_form(induced_subgraph(C5, range(5))) == C5
    assert canonical_form(induced_subgraph(K4, [1, 3])) == K2


def test_containment_examples():
    assert contains_induced(C5, P4)
    assert not contains_induced(DIAMOND, C4)
    assert contains_induced(C5, C5)
    assert contains_subgraph(DIAMOND, C4)
    assert not contains_subgraph(C4, K3)
    assert contains_subgraph(P3, K2)


def test_add_edge_examples():
    assert canonical_form(add_edge(empty_graph(2), 0, 1)) == K2
    p4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert canonical_form(add_edge(p4, 0, 3)) == C4
    c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert canonical_form(add_edge(c4, 0, 2)) == DIAMOND


def test_components_examples():
    assert len(connected_components(disjoint_union(K2, K2))) == 2
    assert len(connected_components(C5)) == 1
    assert len(connected_components(disjoint_union(K3, empty_graph(2)))) == 3
    assert is_connected(C5) and not is_connected(empty_graph(2))


def test_graph6_known_strings():
    # reference encodings produced by networkx
    for g in (K1, K3, P4, C5, complete_bipartite(2, 3), empty_graph(6)):
        assert to_graph6(g) == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert from_graph6("Bw") == K3


def test_graph_rejects_bad_input():
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(17, [])
    with pytest.raises(GraphError):
        from_graph6("~~~~")


def test_null_graph():
    assert null_graph().n == 0
    assert contains_induced(K3, null_graph())


@given(graphs(), st.randoms())
@settings(max_examples=150, deadline=None)
def test_canonical_form_is_relabelling_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_form(g.relabel(perm)) == canonical_form(g)


@given(graphs(6), graphs(6))
@settings(max_examples=150, deadline=None)
def test_isomorphism_matches_oracle(g, h):
    assert is_isomorphic(g, h) == brute_isomorphic(g, h)


@given(graphs())
@settings(max_examples=150, deadline=None)
def test_graph6_roundtrip(g):
    assert canonical_form(from_graph6(to_graph6(g))) == canonical_form(g)
    if g.n:
        assert nx.is_isomorphic(nx.from_graph6_bytes(to_graph6(g).encode()), to_nx(g))


@given(graphs(5), graphs(5))
@settings(max_examples=100, deadline=None)
def test_containment_matches_networkx(g, h):
    matcher = nx.algorithms.isomorphism.GraphMatcher(to_nx(g), to_nx(h))
    assert contains_induced(g, h) == (h.n <= g.n and matcher.subgraph_is_isomorphic())
    assert contains_subgraph(g, h) == (h.n <= g.n and matcher.subgraph_is_monomorphic())


@given(graphs(6))
@settings(max_examples=100, deadline=None)
def test_join_is_complement_of_union(g):
    assert join(g, K2) == complement(disjoint_union(complement(g), complement(K2)))
