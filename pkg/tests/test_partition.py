from __future__ import annotations

import pytest
from hypothesis import given, settings

from graphprops.graphcore import complete_graph, cycle_graph, disjoint_union, empty_graph, join, null_graph, path_graph
from graphprops.partition import (
    PartitionError,
    enumerate_partitions,
    equal_products_up_to,
    find_partition,
    product_membership,
    product_view,
)
from graphprops.properties import Builtin, GeneratedInduced, K, K_s, O, O_s, Without, materialize
from oracles import checker, is_split_oracle, partition_oracle, two_colourable
from test_graphcore import graphs

K1, K2, K3, K4 = (complete_graph(k) for k in (1, 2, 3, 4))
CO_K2 = empty_graph(2)
DIAMOND = join(CO_K2, K2)


def test_certificate_examples():
    cert = find_partition(DIAMOND, [O, K])
    assert cert is not None and cert.validate([O, K])
    assert cert.induced_parts == [CO_K2, K2]
    assert find_partition(disjoint_union(K2, K2), [O_s(3), K_s(3)]) is None
    null = find_partition(null_graph(), [O, K, O])
    assert null is not None and null.parts == (0, 0, 0)


def test_certificate_json():
    cert = find_partition(DIAMOND, [O, K])
    data = cert.to_json()
    assert data == {"graph": "C^", "parts": [[0, 1], [2, 3]], "induced_parts": ["A?", "A_"]}


def test_membership_examples():
    assert not product_membership(K4, [O_s(2), K_s(2)])
    assert product_membership(K3, [O, O, O])
    assert not product_membership(cycle_graph(5), [O, O])


def test_enumeration_examples():
    assert len(enumerate_partitions(DIAMOND, [O, K], "labelled")) == 3
    assert len(enumerate_partitions(DIAMOND, [O, K], "essential")) == 2
    assert len(enumerate_partitions(CO_K2, [O, O], "essential")) == 2
    with pytest.raises(PartitionError):
        enumerate_partitions(DIAMOND, [O, K], "bogus")
    with pytest.raises(PartitionError):
        find_partition(DIAMOND, [])


def test_enumeration_matches_oracle(u5):
    checks = [checker("O"), checker("K")]
    for g in u5.graphs:
        assert len(enumerate_partitions(g, [O, K])) == len(partition_oracle(g, checks))


def test_product_views(u4, u5):
    assert product_view([O, K], u4) == materialize(Builtin("split"), u4)
    assert set(product_view([O, O], u5)) == {g for g in u5.graphs if two_colourable(g)}
    assert product_view([K], u5) == materialize(K, u5)


def test_product_equality_examples(u7):
    assert equal_products_up_to([O_s(2), O_s(2)], [O_s(2), O_s(2)], u7).holds
    p1 = GeneratedInduced((path_graph(3),))
    assert equal_products_up_to([p1, O], [Without(p1, (K1,)), O], u7).holds
    v = equal_products_up_to([O_s(1), K_s(1)], [O_s(2), K_s(2)], u7)
    assert not v.holds and v.note == "in rhs only"


def test_pruning_does_not_change_answers(u6):
    props = [O_s(2), K_s(3)]
    for g in u6.graphs:
        assert product_membership(g, props, prune=True) == product_membership(g, props, prune=False)


@given(graphs(6))
@settings(max_examples=150, deadline=None)
def test_solver_matches_exhaustive_oracle(g):
    cases = [
        ([O, K], [checker("O"), checker("K")]),
        ([O, O], [checker("O"), checker("O")]),
        ([O_s(2), K_s(2)], [checker("O", 2), checker("K", 2)]),
    ]
    for props, checks in cases:
        labelled = enumerate_partitions(g, props)
        assert len(labelled) == len(partition_oracle(g, checks))
        assert product_membership(g, props) == bool(labelled)


@given(graphs(7))
@settings(max_examples=100, deadline=None)
def test_certificates_validate(g):
    cert = find_partition(g, [O, K])
    assert (cert is not None) == is_split_oracle(g)
    if cert is not None:
        assert cert.validate([O, K])
