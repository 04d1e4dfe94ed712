"""Executable algebra of graph properties on the universe of small graphs."""

from __future__ import annotations

from .graphcore import Graph, canonical_form, from_graph6, is_isomorphic, to_graph6
from .partition import PartitionCertificate, enumerate_partitions, find_partition
from .properties import K, O, Product, Property, Verdict, member, parse_property
from .universe import PropertyView, Universe, enumerate_universe

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "K",
    "O",
    "PartitionCertificate",
    "Product",
    "Property",
    "PropertyView",
    "Universe",
    "Verdict",
    "canonical_form",
    "enumerate_partitions",
    "enumerate_universe",
    "find_partition",
    "from_graph6",
    "is_isomorphic",
    "member",
    "parse_property",
    "to_graph6",
]
