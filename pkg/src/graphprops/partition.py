"""(P1, ..., Pk)-partitions: deciding and enumerating product membership.

Parts may be empty.  Incremental pruning is used only for factors whose kind
guarantees induced-heredity; every other factor is checked once the
assignment is complete, so pruning never changes an answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .graphcore import Graph, _bits, canonical_form, null_graph, to_graph6
from .properties import Product, Property, Verdict, materialize, member
from .universe import PropertyView, Universe

MAX_ASSIGNMENTS = 1 << 24


class PartitionError(ValueError):
    pass


@dataclass(frozen=True)
class PartitionCertificate:
    """Vertex masks of ``graph``, one per factor, in factor order."""

    graph: Graph
    parts: tuple[int, ...]

    @property
    def assignment(self) -> list[int]:
        out = [-1] * self.graph.n
        for j, mask in enumerate(self.parts):
            for v in _bits(mask):
                out[v] = j
        return out

    @property
    def induced_parts(self) -> list[Graph]:
        return [canonical_form(self.graph.sub(m)) for m in self.parts]

    def validate(self, props: Sequence[Property]) -> bool:
        if len(props) != len(self.parts):
            return False
        union = 0
        for m in self.parts:
            if union & m:
                return False
            union |= m
        if union != self.graph.vertex_mask:
            return False
        return all(member(p, h) for p, h in zip(props, self.induced_parts))

    def to_json(self) -> dict:
        return {
            "graph": to_graph6(self.graph),
            "parts": [list(_bits(m)) for m in self.parts],
            "induced_parts": [to_graph6(h) if h.n else "" for h in self.induced_parts],
        }


def _vertex_order(g: Graph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def _search(
    g: Graph,
    props: Sequence[Property],
    prune: bool,
    break_symmetry: bool,
) -> Iterator[tuple[int, ...]]:
    """All valid assignments in lexicographic order over the degree-sorted vertices."""
    k = len(props)
    order = _vertex_order(g)
    incremental = [prune and p.induced_hereditary for p in props]
    # factor j may open only after an identical factor i < j is in use
    twin_of = [next((i for i in range(j) if props[i] == props[j]), None) for j in range(k)]
    memo: dict[tuple[int, int], bool] = {}
    masks = [0] * k

    def ok_leaf(j: int, mask: int) -> bool:
        key = (j, mask)
        if key not in memo:
            memo[key] = member(props[j], g.sub(mask))
        return memo[key]

    def ok_step(j: int, mask: int, v: int) -> bool:
        key = (j, mask)
        if key not in memo:
            memo[key] = props[j].extends(g, mask, v)
        return memo[key]

    def rec(depth: int) -> Iterator[tuple[int, ...]]:
        if depth == g.n:
            if all(incremental[j] or ok_leaf(j, masks[j]) for j in range(k)):
                yield tuple(masks)
            return
        v = order[depth]
        bit = 1 << v
        for j in range(k):
            if break_symmetry and not masks[j] and twin_of[j] is not None and not masks[twin_of[j]]:
                continue
            new = masks[j] | bit
            if incremental[j] and not ok_step(j, new, v):
                continue
            masks[j] = new
            yield from rec(depth + 1)
            masks[j] &= ~bit

    return rec(0)


def find_partition(g: Graph, props: Sequence[Property], prune: bool = True) -> PartitionCertificate | None:
    """First valid partition, or ``None`` when ``g`` is not in the product."""
    if not props:
        raise PartitionError("at least one factor is required")
    for parts in _search(g, props, prune, break_symmetry=True):
        return PartitionCertificate(g, parts)
    return None


def product_membership(g: Graph, props: Sequence[Property], prune: bool = True) -> bool:
    return find_partition(g, props, prune) is not None


def enumerate_partitions(
    g: Graph, props: Sequence[Property], mode: str = "labelled", prune: bool = True
) -> list[PartitionCertificate]:
    """Every valid partition (``labelled``), or one per multiset of (factor, part) (``essential``).

    Essential mode identifies factors by value, so swapping the parts of two
    equal factors does not produce a new partition.
    """
    if mode not in ("labelled", "essential"):
        raise PartitionError(f"unknown mode {mode!r}")
    if not props:
        raise PartitionError("at least one factor is required")
    if len(props) ** g.n > MAX_ASSIGNMENTS:
        raise PartitionError(f"{len(props)}^{g.n} assignments exceed the enumeration guard")
    certs = [PartitionCertificate(g, parts) for parts in _search(g, props, prune, break_symmetry=False)]
    if mode == "labelled":
        return certs
    seen: set = set()
    out = []
    for c in certs:
        sig = tuple(sorted((p.label, h.key) for p, h in zip(props, c.induced_parts)))
        if sig not in seen:
            seen.add(sig)
            out.append(c)
    return out


def product_view(props: Sequence[Property], u: Universe) -> PropertyView:
    if len(props) == 1:
        return materialize(props[0], u)
    return materialize(Product(tuple(props)), u)


def equal_products_up_to(lhs: Sequence[Property], rhs: Sequence[Property], u: Universe) -> Verdict:
    """Compare two products on ``u``; the witness is the first graph in one but not the other."""
    a, b = product_view(lhs, u), product_view(rhs, u)
    diff = a.first_difference(b)
    if diff is None:
        return Verdict(True)
    return Verdict(False, (diff,), note="in lhs only" if diff in a else "in rhs only")


def null_certificate(k: int) -> PartitionCertificate:
    return PartitionCertificate(null_graph(), (0,) * k)


__all__ = [
    "MAX_ASSIGNMENTS",
    "PartitionCertificate",
    "PartitionError",
    "enumerate_partitions",
    "equal_products_up_to",
    "find_partition",
    "null_certificate",
    "product_membership",
    "product_view",
]
