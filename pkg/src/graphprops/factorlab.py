"""Factorisations as executable checks.

* ≥-hereditary properties factor into primitive ``+G`` factors, one per
  induced-minimal member.
* Uniqueness for O(r)∘K(s) and O(r)∘O(s) is checked through the finite
  witness graphs its proof relies on, and the non-uniqueness constructions
  produce a different factor pair with the same product.
* Graphs are represented as intersection graphs of edge-incidence sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .graphcore import (
    Graph,
    _bits,
    complement,
    complete_graph,
    disjoint_union,
    empty_graph,
    join,
    to_graph6,
)
from .partition import enumerate_partitions, equal_products_up_to, find_partition, product_view
from .properties import (
    K,
    O,
    Extensional,
    GeneratedInduced,
    K_s,
    O_s,
    PlusG,
    Property,
    Verdict,
    Without,
    is_geq_hereditary_up_to,
    is_induced_hereditary_up_to,
    materialize,
)
from .universe import PropertyView, Universe

K1 = complete_graph(1)
K2 = complete_graph(2)
CO_K2 = empty_graph(2)


class FactorlabError(ValueError):
    pass


def _view(p: Property | PropertyView, u: Universe) -> PropertyView:
    return p if isinstance(p, PropertyView) else materialize(p, u)


# -- ≥-hereditary properties ---------------------------------------------------------


def min_graphs(p: Property | PropertyView, u: Universe) -> list[Graph]:
    """Members of ``p`` with no proper induced subgraph in ``p``."""
    view = _view(p, u)
    below = u.induced_below()
    return [u.graphs[i] for i in view.indices() if not (below[i] & ~(1 << i) & view.bits)]


@dataclass
class GeqFactorisation:
    factors: list[Graph]  # factor i is +factors[i]
    product_equal: Verdict
    primitive: list[bool]
    minimal: bool
    drop_witnesses: list[Graph | None] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.product_equal.holds and all(self.primitive) and self.minimal

    def to_json(self) -> dict:
        return {
            "factors": ["+" + to_graph6(g) for g in self.factors],
            "product_equal": self.product_equal.to_json(),
            "primitive": self.primitive,
            "minimal": self.minimal,
            "drop_witnesses": [to_graph6(g) if g else None for g in self.drop_witnesses],
            "ok": self.ok,
        }


def _compare(props: Sequence[Property], target: PropertyView, u: Universe) -> Verdict:
    diff = product_view(props, u).first_difference(target)
    return Verdict(True) if diff is None else Verdict(False, (diff,))


def primitive_factorisation_geq(p: Property | PropertyView, u: Universe) -> GeqFactorisation:
    """P as the product of ``+G`` over its induced-minimal members, checked on ``u``."""
    view = _view(p, u)
    if not is_geq_hereditary_up_to(view, u).holds:
        raise FactorlabError("property is not closed under induced supergraphs within the universe")
    mins = min_graphs(view, u)
    if not mins:
        raise FactorlabError("the property has no members in the universe")
    factors = [PlusG(g) for g in mins]
    equal = _compare(factors, view, u)
    primitive = [len(min_graphs(f, u)) == 1 for f in factors]
    drops: list[Graph | None] = []
    if len(factors) > 1:
        for i in range(len(factors)):
            rest = factors[:i] + factors[i + 1 :]
            drops.append(product_view(rest, u).first_difference(view))
    minimal = all(d is not None for d in drops)
    return GeqFactorisation(mins, equal, primitive, minimal, drops)


def union_is_product_geq(p: Property | PropertyView, cover: Sequence[Property | PropertyView], u: Universe) -> Verdict:
    """For a ≥-hereditary P covered by ≥-hereditary parts, the product of the parts is P."""
    view = _view(p, u)
    parts = [_view(c, u) for c in cover]
    if not is_geq_hereditary_up_to(view, u).holds:
        raise FactorlabError("property is not closed under induced supergraphs within the universe")
    union = u.nothing()
    for c in parts:
        if not is_geq_hereditary_up_to(c, u).holds:
            raise FactorlabError("a cover part is not closed under induced supergraphs")
        union = union | c
    if union != view:
        raise FactorlabError("the cover does not reproduce the property")
    return _compare([Extensional(c) for c in parts], view, u)


# -- uniqueness witnesses ---------------------------------------------------------------


@dataclass
class WitnessCheck:
    name: str
    graph: Graph
    expected: object
    actual: object

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "graph": to_graph6(self.graph),
            "expected": self.expected,
            "actual": self.actual,
            "pass": self.passed,
        }


@dataclass
class UniquenessReport:
    case: str
    params: dict
    checks: list[WitnessCheck] = field(default_factory=list)
    note: str = ""

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "params": self.params,
            "pass": self.passed,
            "checks": [c.to_json() for c in self.checks],
            "note": self.note,
        }


def _fits(g: Graph, u: Universe) -> None:
    if g.n > u.n:
        raise FactorlabError(f"witness graph of order {g.n} exceeds the universe order {u.n}")


def _in(g: Graph, props: Sequence[Property]) -> bool:
    return find_partition(g, props) is not None


def theorem2_witness_suite(r: int, s: int, u: Universe) -> UniquenessReport:
    """Finite facts behind unique factorisation of O(r)∘K(s) (r, s >= 2)."""
    if r < 1 or s < 1:
        raise FactorlabError("r and s must be positive")
    report = UniquenessReport("O(r)∘K(s)", {"r": r, "s": s, "n": u.n})
    if r == 1 or s == 1:
        report.case = "O(r)∘O(s)" if s == 1 else "K(r)∘K(s)"
        report.note = "r or s is 1: {K1} is both O(1) and K(1), so the product falls under the O∘O or K∘K case"
        return report
    P = [O_s(r), K_s(s)]
    add = report.checks.append

    # Q1 and Q2 cannot both hold a clique on two or more vertices
    for a in range(2, u.n - 1):
        for b in range(a, u.n - a + 1):
            g = disjoint_union(complete_graph(a), complete_graph(b))
            add(WitnessCheck(f"K{a} ∪ K{b} not in P", g, False, _in(g, P)))
    g = complete_graph(3)
    add(WitnessCheck("K3 in P", g, True, _in(g, P)))

    # the two exclusions used when Q1 = {K1}
    g = complete_graph(s + 2)
    _fits(g, u)
    add(WitnessCheck(f"K{s + 2} not in P", g, False, _in(g, P)))
    g = join(empty_graph(r), disjoint_union(complete_graph(s - 1), K1))
    _fits(g, u)
    add(WitnessCheck(f"co-K{r} + (K{s - 1} ∪ K1) not in P", g, False, _in(g, P)))

    # co-K_r' + K_s: in P, essentially two (O, K)-partitions, one with a K_{s+1} part
    for rp in range(1, r + 1):
        g = join(empty_graph(rp), complete_graph(s))
        _fits(g, u)
        add(WitnessCheck(f"co-K{rp} + K{s} in P", g, True, _in(g, P)))
        certs = enumerate_partitions(g, [O, K], "essential")
        add(WitnessCheck(f"co-K{rp} + K{s} essential (O,K)-partitions", g, 2, len(certs)))
        big = any(c.induced_parts[1] == complete_graph(s + 1) for c in certs)
        add(WitnessCheck(f"co-K{rp} + K{s} has a partition with a K{s + 1} part", g, True, big))

    # co-K_r ∪ K_s': in P, essentially two partitions, one with a co-K_{r+1} part
    for sp in range(1, s + 1):
        g = disjoint_union(empty_graph(r), complete_graph(sp))
        _fits(g, u)
        add(WitnessCheck(f"co-K{r} ∪ K{sp} in P", g, True, _in(g, P)))
        certs = enumerate_partitions(g, [O, K], "essential")
        add(WitnessCheck(f"co-K{r} ∪ K{sp} essential (O,K)-partitions", g, 2, len(certs)))
        big = any(c.induced_parts[0] == empty_graph(r + 1) for c in certs)
        add(WitnessCheck(f"co-K{r} ∪ K{sp} has a partition with a co-K{r + 1} part", g, True, big))
    return report


def theorem2_oo_suite(r: int, s: int, u: Universe) -> UniquenessReport:
    """Finite facts behind unique factorisation of O(r)∘O(s), with the K(r)∘K(s) dual."""
    if not 1 <= r <= s:
        raise FactorlabError("need 1 <= r <= s")
    report = UniquenessReport("O(r)∘O(s)", {"r": r, "s": s, "n": u.n})
    add = report.checks.append
    P = [O_s(r), O_s(s)]
    dual = [K_s(r), K_s(s)]

    inside = product_view(P, u) <= product_view([O, O], u)
    add(WitnessCheck("every member is bipartite", K1, True, inside))

    for rp in range(1, r + 1):
        for sp in range(1, s + 1):
            g = join(empty_graph(rp), empty_graph(sp))
            _fits(g, u)
            add(WitnessCheck(f"co-K{rp} + co-K{sp} in P", g, True, _in(g, P)))
            n_ess = len(enumerate_partitions(g, [O, O], "essential"))
            add(WitnessCheck(f"co-K{rp} + co-K{sp} essential (O,O)-partitions", g, 1, n_ess))
            h = complement(g)
            add(WitnessCheck(f"K{rp} ∪ K{sp} in K({r})∘K({s})", h, True, _in(h, dual)))
            n_dual = len(enumerate_partitions(h, [K, K], "essential"))
            add(WitnessCheck(f"K{rp} ∪ K{sp} essential (K,K)-partitions", h, 1, n_dual))

    # co-K_r + co-K_s' for r < s' <= s: the larger side must be the O(s) part
    for sp in range(r + 1, s + 1):
        g = join(empty_graph(r), empty_graph(sp))
        _fits(g, u)
        certs = enumerate_partitions(g, P, "labelled")
        sides = sorted({(c.induced_parts[0].n, c.induced_parts[1].n) for c in certs})
        add(WitnessCheck(f"co-K{r} + co-K{sp} part orders", g, [(r, sp)], sides))

    # complementation maps one product onto the other
    comp = u.view(complement(g) for g in product_view(P, u))
    add(WitnessCheck("complement of O(r)∘O(s) is K(r)∘K(s)", K1, True, comp == product_view(dual, u)))
    return report


# -- non-uniqueness ---------------------------------------------------------------------


@dataclass
class NonUniqueness:
    branch: str
    original: tuple[Property, Property]
    alternative: tuple[Property, Property]
    product_equal: Verdict
    distinct: bool

    @property
    def ok(self) -> bool:
        return self.product_equal.holds and self.distinct

    def to_json(self) -> dict:
        return {
            "branch": self.branch,
            "original": [p.to_dict() for p in self.original],
            "alternative": [p.to_dict() for p in self.alternative],
            "product_equal": self.product_equal.to_json(),
            "distinct": self.distinct,
            "ok": self.ok,
        }


def _ih(p: Property, u: Universe) -> bool:
    return p.induced_hereditary or is_induced_hereditary_up_to(p, u).holds


def _closure(p: Property, u: Universe) -> Property:
    """Induced-hereditary closure inside ``u``, generated by the members of ``p`` there."""
    return GeneratedInduced(tuple(materialize(p, u)))


def _drop_k1(p: Property) -> Property:
    return Without(p, (K1,))


def nonuniqueness_witness(p1: Property, p2: Property, u: Universe) -> NonUniqueness:
    """A second factorisation of P1∘P2, following the first applicable construction.

    (a) a factor is not induced-hereditary: replace both by their closures;
    (b) a factor holds both K2 and co-K2: remove K1 from it;
    (c) one factor lies in O and the other in K, one being all of O or K:
        remove K1 from the other factor.
    """
    original = (p1, p2)
    prod = product_view(original, u)
    view1, view2 = materialize(p1, u), materialize(p2, u)
    if not (_ih(p1, u) and _ih(p2, u)):
        if not is_induced_hereditary_up_to(prod, u).holds:
            raise FactorlabError("the product is not induced-hereditary; the closure construction does not apply")
        branch, alt = "a", (_closure(p1, u), _closure(p2, u))
    elif K2 in view1 and CO_K2 in view1:
        branch, alt = "b", (_drop_k1(p1), p2)
    elif K2 in view2 and CO_K2 in view2:
        branch, alt = "b", (p1, _drop_k1(p2))
    else:
        only_k1 = u.view([K1])
        if view1 == only_k1 or view2 == only_k1:
            raise FactorlabError("a factor is {K1}; the product is O∘O or K∘K type and has no second factorisation")
        full_o, full_k = materialize(O, u), materialize(K, u)
        in_o = [K2 not in v for v in (view1, view2)]
        in_k = [CO_K2 not in v for v in (view1, view2)]
        if in_o[0] and in_k[1]:
            a, b = 0, 1
        elif in_o[1] and in_k[0]:
            a, b = 1, 0
        else:
            raise FactorlabError("no construction applies; candidate for unique factorisation")
        views = (view1, view2)
        alt_list = list(original)
        if views[a] == full_o:
            alt_list[b] = _drop_k1(original[b])
        elif views[b] == full_k:
            alt_list[a] = _drop_k1(original[a])
        else:
            raise FactorlabError("both factors are bounded; candidate for unique factorisation")
        branch, alt = "c", tuple(alt_list)
    equal = equal_products_up_to(original, alt, u)
    distinct = any(materialize(x, u) != materialize(y, u) for x, y in zip(original, alt))
    return NonUniqueness(branch, original, alt, equal, distinct)


# -- intersection representations ---------------------------------------------------------


@dataclass(frozen=True)
class IntersectionFamily:
    """Named finite sets of tokens; members keep their identity even when equal as sets."""

    sets: tuple[tuple[str, frozenset], ...]

    def __len__(self) -> int:
        return len(self.sets)

    def to_text(self) -> str:
        lines = []
        for name, tokens in self.sets:
            body = " ".join(sorted("-".join(map(str, t)) if isinstance(t, tuple) else str(t) for t in tokens))
            lines.append(f"{name}: {body}".rstrip() + "\n")
        return "".join(lines)

    @classmethod
    def from_text(cls, text: str) -> IntersectionFamily:
        sets = []
        for line in text.splitlines():
            if not line.strip():
                continue
            name, _, body = line.partition(":")
            tokens = frozenset(tuple(int(x) for x in tok.split("-")) if "-" in tok else tok for tok in body.split())
            sets.append((name.strip(), tokens))
        return cls(tuple(sets))


def intersection_representation(g: Graph) -> IntersectionFamily:
    """S_v is the set of edges at v, each edge written as a sorted vertex pair."""
    sets = []
    for v in range(g.n):
        tokens = frozenset((min(v, w), max(v, w)) for w in _bits(g.rows[v]))
        sets.append((f"S{v}", tokens))
    return IntersectionFamily(tuple(sets))


def intersection_graph(f: IntersectionFamily) -> Graph:
    n = len(f.sets)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if f.sets[i][1] & f.sets[j][1]]
    return Graph.from_edges(n, edges)


__all__ = [
    "FactorlabError",
    "GeqFactorisation",
    "IntersectionFamily",
    "NonUniqueness",
    "UniquenessReport",
    "WitnessCheck",
    "intersection_graph",
    "intersection_representation",
    "min_graphs",
    "nonuniqueness_witness",
    "primitive_factorisation_geq",
    "theorem2_oo_suite",
    "theorem2_witness_suite",
    "union_is_product_geq",
]
