"""Minimal forbidden subgraphs and induced subgraphs, and conversions between them."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .graphcore import Graph, canonical_form, contains_induced, contains_subgraph, from_graph6, is_connected, to_graph6
from .properties import (
    ForbiddenInduced,
    ForbiddenSubgraph,
    Property,
    Verdict,
    is_additive_up_to,
    is_hereditary_up_to,
    is_induced_hereditary_up_to,
    materialize,
)
from .universe import Universe

RELATIONS = ("induced", "subgraph")


class ForbiddenError(ValueError):
    pass


def _contains(relation: str):
    if relation == "induced":
        return contains_induced
    if relation == "subgraph":
        return contains_subgraph
    raise ForbiddenError(f"unknown relation {relation!r}")


def _sorted(graphs: Iterable[Graph]) -> tuple[Graph, ...]:
    uniq = {}
    for g in graphs:
        c = canonical_form(g)
        uniq[c.key] = c
    return tuple(uniq[k] for k in sorted(uniq))


def is_antichain(graphs: Iterable[Graph], relation: str) -> Verdict:
    """No member contains another under ``relation``; witness is ``(smaller, larger)``."""
    gs = _sorted(graphs)
    contains = _contains(relation)
    for a, b in combinations(gs, 2):
        # sorted by (order, code), so only the later graph can contain the earlier one
        if contains(b, a):
            return Verdict(False, (a, b))
    return Verdict(True)


@dataclass(frozen=True)
class ForbiddenSet:
    relation: str
    graphs: tuple[Graph, ...] = field(default=())

    def __post_init__(self) -> None:
        _contains(self.relation)
        object.__setattr__(self, "graphs", _sorted(self.graphs))
        bad = is_antichain(self.graphs, self.relation)
        if not bad.holds:
            a, b = bad.witness
            raise ForbiddenError(f"not an antichain: {to_graph6(a)} is inside {to_graph6(b)}")

    def __len__(self) -> int:
        return len(self.graphs)

    def __iter__(self):
        return iter(self.graphs)

    def __contains__(self, g: Graph) -> bool:
        return g in self.graphs

    def of_order(self, k: int) -> tuple[Graph, ...]:
        return tuple(g for g in self.graphs if g.n == k)

    def orders(self) -> list[int]:
        return sorted({g.n for g in self.graphs})

    def truncate(self, n: int) -> ForbiddenSet:
        return ForbiddenSet(self.relation, tuple(g for g in self.graphs if g.n <= n))

    def as_property(self) -> Property:
        cls = ForbiddenInduced if self.relation == "induced" else ForbiddenSubgraph
        return cls(self.graphs)

    def to_text(self) -> str:
        return "".join([f"# relation: {self.relation}\n"] + [to_graph6(g) + "\n" for g in self.graphs])

    @classmethod
    def from_text(cls, text: str, default_relation: str | None = None) -> ForbiddenSet:
        relation = default_relation
        graphs = []
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                key, _, value = line[1:].partition(":")
                if key.strip() == "relation":
                    relation = value.strip()
                continue
            graphs.append(from_graph6(line.split()[0]))
        if relation is None:
            raise ForbiddenError("missing '# relation:' header")
        return cls(relation, tuple(graphs))


def _certify(p: Property, u: Universe, relation: str) -> None:
    if relation == "induced":
        if not (p.induced_hereditary or is_induced_hereditary_up_to(p, u).holds):
            raise ForbiddenError("property is not induced-hereditary within the universe")
    elif not (p.hereditary or is_hereditary_up_to(p, u).holds):
        raise ForbiddenError("property is not hereditary within the universe")


def minimal_forbidden_induced(p: Property, u: Universe) -> ForbiddenSet:
    """Non-members all of whose one-vertex deletions are members."""
    _certify(p, u, "induced")
    view = materialize(p, u)
    vdel = u.vertex_deletions()
    out = [u.graphs[i] for i in (~view).indices() if all(view.has(c) for c in vdel[i])]
    return ForbiddenSet("induced", tuple(out))


def minimal_forbidden_subgraph(p: Property, u: Universe) -> ForbiddenSet:
    """Non-members all of whose one-vertex and one-edge deletions are members."""
    _certify(p, u, "subgraph")
    view = materialize(p, u)
    vdel, edel = u.vertex_deletions(), u.edge_deletions()
    out = [u.graphs[i] for i in (~view).indices() if all(view.has(c) for c in vdel[i] + edel[i])]
    return ForbiddenSet("subgraph", tuple(out))


def _minimal(graphs: Iterable[Graph], contains) -> list[Graph]:
    gs = _sorted(graphs)
    return [g for g in gs if not any(h != g and h.n <= g.n and contains(g, h) for h in gs)]


def induced_to_subgraph(fle: ForbiddenSet) -> ForbiddenSet:
    """Subgraph-minimal elements, computed globally and order by order (the two must agree)."""
    if fle.relation != "induced":
        raise ForbiddenError("expected a set of forbidden induced subgraphs")
    whole = _minimal(fle.graphs, contains_subgraph)
    per_order = [g for k in fle.orders() for g in _minimal(fle.of_order(k), contains_subgraph)]
    if _sorted(whole) != _sorted(per_order):
        raise ForbiddenError("global and per-order minimisation differ; input is not F<= of a hereditary property")
    return ForbiddenSet("subgraph", tuple(whole))


def _edge_supersets(h: Graph) -> list[Graph]:
    missing = h.non_edges()
    out = {}
    for r in range(1 << len(missing)):
        rows = list(h.rows)
        for t, (a, b) in enumerate(missing):
            if r >> t & 1:
                rows[a] |= 1 << b
                rows[b] |= 1 << a
        g = canonical_form(Graph._trusted(h.n, tuple(rows)))
        out[g.key] = g
    return list(out.values())


def subgraph_to_induced(fsub: ForbiddenSet, u: Universe) -> ForbiddenSet:
    """Induced-minimal graphs among all edge-supersets of the forbidden subgraphs (orders <= u.n)."""
    if fsub.relation != "subgraph":
        raise ForbiddenError("expected a set of forbidden subgraphs")
    pool = [g for h in fsub.graphs if h.n <= u.n for g in _edge_supersets(h)]
    return ForbiddenSet("induced", tuple(_minimal(pool, contains_induced)))


def _add(h: Graph, a: int, b: int) -> Graph:
    rows = list(h.rows)
    rows[a] |= 1 << b
    rows[b] |= 1 << a
    return Graph._trusted(h.n, tuple(rows))


def _edge_criterion(family: tuple[Graph, ...], n: int) -> tuple[bool, tuple[Graph, tuple[int, int]] | None]:
    """For every H and non-edge e, some member of ``family`` is induced in H + e."""
    for h in family:
        if h.n > n:
            continue
        for a, b in h.non_edges():
            he = _add(h, a, b)
            if not any(g.n <= he.n and contains_induced(he, g) for g in family):
                return False, (h, (a, b))
    return True, None


@dataclass
class CriterionReport:
    criterion: bool
    direct: bool
    witness: tuple[Graph, tuple[int, int]] | None = None
    extra: dict = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return self.criterion == self.direct

    def to_json(self) -> dict:
        out = {"criterion": self.criterion, "direct": self.direct, "agree": self.agree}
        if self.witness:
            h, e = self.witness
            out["witness"] = {"graph": to_graph6(h), "non_edge": list(e)}
        out.update(self.extra)
        return out


def check_prop9(fsub: ForbiddenSet, u: Universe) -> CriterionReport:
    """Edge criterion on the forbidden subgraphs versus direct comparison of both minimal sets."""
    if fsub.relation != "subgraph":
        raise ForbiddenError("expected a set of forbidden subgraphs")
    fsub_u = fsub.truncate(u.n)
    crit, witness = _edge_criterion(fsub_u.graphs, u.n)
    fle = minimal_forbidden_induced(ForbiddenSubgraph(fsub.graphs), u)
    return CriterionReport(crit, fle.graphs == fsub_u.graphs, witness)


def check_prop10(fle: ForbiddenSet, u: Universe) -> CriterionReport:
    """Edge criterion on the forbidden induced subgraphs versus a direct heredity check."""
    if fle.relation != "induced":
        raise ForbiddenError("expected a set of forbidden induced subgraphs")
    fle_u = fle.truncate(u.n)
    crit, witness = _edge_criterion(fle_u.graphs, u.n)
    p = ForbiddenInduced(fle_u.graphs)
    direct = is_hereditary_up_to(p, u).holds
    report = CriterionReport(crit, direct, witness)
    if crit:
        # when hereditary, forbidding the same graphs as subgraphs gives the same property
        same = materialize(ForbiddenSubgraph(fle_u.graphs), u) == materialize(p, u)
        report.extra["subgraph_description_matches"] = same
    return report


@dataclass
class Prop8Report:
    forbidden_subgraphs: int
    forbidden_induced: int
    equal: bool
    antichain: bool
    per_order_antichain: dict[int, bool]

    @property
    def consistent(self) -> bool:
        return self.equal == self.antichain == all(self.per_order_antichain.values())

    def to_json(self) -> dict:
        return {
            "forbidden_subgraphs": self.forbidden_subgraphs,
            "forbidden_induced": self.forbidden_induced,
            "equal": self.equal,
            "subgraph_antichain": self.antichain,
            "per_order_subgraph_antichain": {str(k): v for k, v in self.per_order_antichain.items()},
            "consistent": self.consistent,
            "finiteness": "not decidable at truncation",
        }


def check_prop8(p: Property, u: Universe) -> Prop8Report:
    """Within ``u``: sizes of both minimal sets, whether they agree, and ⊆-antichain status."""
    fsub = minimal_forbidden_subgraph(p, u)
    fle = minimal_forbidden_induced(p, u)
    per_order = {k: is_antichain(fle.of_order(k), "subgraph").holds for k in fle.orders()}
    return Prop8Report(
        len(fsub),
        len(fle),
        fsub.graphs == fle.graphs,
        is_antichain(fle.graphs, "subgraph").holds,
        per_order,
    )


@dataclass
class ConnectednessReport:
    all_connected: bool
    additive: Verdict
    disconnected: Graph | None = None

    @property
    def agree(self) -> bool:
        return self.all_connected == self.additive.holds

    def to_json(self) -> dict:
        return {
            "all_connected": self.all_connected,
            "additive": self.additive.to_json(),
            "agree": self.agree,
            "disconnected": to_graph6(self.disconnected) if self.disconnected else None,
            "note": "" if self.agree else "mismatch at truncation",
        }


def check_additivity_connectedness(p: Property, u: Universe, relation: str = "induced") -> ConnectednessReport:
    """Connected minimal forbidden graphs inside ``u`` versus additivity up to ``u``."""
    fs = minimal_forbidden_induced(p, u) if relation == "induced" else minimal_forbidden_subgraph(p, u)
    bad = next((g for g in fs if not is_connected(g)), None)
    return ConnectednessReport(bad is None, is_additive_up_to(p, u), bad)


__all__ = [
    "ConnectednessReport",
    "CriterionReport",
    "ForbiddenError",
    "ForbiddenSet",
    "Prop8Report",
    "check_additivity_connectedness",
    "check_prop10",
    "check_prop8",
    "check_prop9",
    "induced_to_subgraph",
    "is_antichain",
    "minimal_forbidden_induced",
    "minimal_forbidden_subgraph",
    "subgraph_to_induced",
]
