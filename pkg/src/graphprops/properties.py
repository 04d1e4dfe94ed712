"""Intensional graph properties and finite-scale checks of their closure classes.

A property is an immutable value (hashable, compared by content) with a
``member`` decision procedure.  Flags such as ``induced_hereditary`` are only
true when guaranteed by the kind itself; anything else must be checked against
a universe with the ``is_*_up_to`` functions, which return a :class:`Verdict`.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Iterable, Sequence

from .graphcore import (
    Graph,
    GraphError,
    _bits,
    canonical_form,
    complete_graph,
    connected_components,
    contains_disjoint_induced,
    contains_induced,
    contains_subgraph,
    disjoint_union,
    empty_graph,
    from_graph6,
    join,
    popcount,
    to_graph6,
)
from .universe import PropertyView, Universe


class PropertyError(ValueError):
    pass


@dataclass(frozen=True)
class Verdict:
    """Outcome of a finite check; ``witness`` names the offending graphs when it fails."""

    holds: bool
    witness: tuple[Graph, ...] | None = None
    unverifiable: int = 0
    note: str = ""

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict:
        out: dict = {"holds": self.holds}
        if self.witness is not None:
            out["witness"] = [to_graph6(g) for g in self.witness]
        if self.unverifiable:
            out["unverifiable"] = self.unverifiable
        if self.note:
            out["note"] = self.note
        return out


class Property:
    """Base class; subclasses are frozen dataclasses."""

    induced_hereditary = False
    hereditary = False
    additive = False
    coadditive = False
    geq_hereditary = False

    def member(self, g: Graph) -> bool:
        raise NotImplementedError

    def extends(self, g: Graph, mask: int, v: int) -> bool:
        """Decide ``g[mask]`` given that ``g[mask - v]`` is already a member."""
        return self.member(g.sub(mask))

    def to_dict(self) -> dict:
        raise NotImplementedError

    def __contains__(self, g: Graph) -> bool:
        return member(self, g)

    @property
    def label(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


def member(p: Property, g: Graph) -> bool:
    """Exact membership; the null graph belongs to every property (as an empty part)."""
    if g.n == 0:
        return True
    return p.member(g)


def _canon_set(graphs: Iterable[Graph]) -> tuple[Graph, ...]:
    uniq = {canonical_form(g).key: canonical_form(g) for g in graphs}
    return tuple(uniq[k] for k in sorted(uniq))


def _antichain(graphs: tuple[Graph, ...], below, keep_small: bool) -> tuple[tuple[Graph, ...], tuple[Graph, ...]]:
    """Drop dominated elements; ``keep_small`` keeps the minimal ones, else the maximal ones."""
    kept, dropped = [], []
    for g in graphs:
        others = [h for h in graphs if h != g]
        if keep_small:
            dominated = any(below(h, g) for h in others)  # a smaller element already present
        else:
            dominated = any(below(g, h) for h in others)
        (dropped if dominated else kept).append(g)
    return tuple(kept), tuple(dropped)


# -- graph-level predicates used by the builtins ---------------------------------


def _is_edgeless(g: Graph) -> bool:
    return not any(g.rows)


def _is_complete(g: Graph) -> bool:
    full = g.vertex_mask
    return all(r | 1 << v == full for v, r in enumerate(g.rows))


def _is_forest(g: Graph) -> bool:
    return g.edge_count() == g.n - len(connected_components(g))


def _is_bipartite(g: Graph) -> bool:
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in _bits(g.rows[v]):
                if colour[w] < 0:
                    colour[w] = 1 - colour[v]
                    stack.append(w)
                elif colour[w] == colour[v]:
                    return False
    return True


def _is_split(g: Graph) -> bool:
    # Hammer-Simeone degree-sequence test
    d = sorted(g.degrees(), reverse=True)
    m = max((i + 1 for i in range(len(d)) if d[i] >= i), default=0)
    return sum(d[:m]) == m * (m - 1) + sum(d[m:])


def _maximal_cliques(g: Graph) -> list[int]:
    out = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot = (p | x) & -(p | x)
        u = pivot.bit_length() - 1
        for v in _bits(p & ~g.rows[u]):
            bk(r | 1 << v, p & g.rows[v], x & g.rows[v])
            p &= ~(1 << v)
            x |= 1 << v

    bk(0, g.vertex_mask, 0)
    return sorted(out)


def _is_clique_with_pendants(g: Graph) -> bool:
    """A clique, isolated vertices, and end-vertices hanging on distinct clique vertices."""
    if g.n == 0:
        return True
    for clique in _maximal_cliques(g):
        used = 0
        ok = True
        for v in _bits(g.vertex_mask & ~clique):
            nb = g.rows[v]
            if nb == 0:
                continue
            if popcount(nb) != 1 or not nb & clique or nb & used:
                ok = False
                break
            used |= nb
        if ok:
            return True
    return False


def _is_linear_forest(g: Graph) -> bool:
    return all(popcount(r) <= 2 for r in g.rows) and _is_forest(g)


# -- kinds -----------------------------------------------------------------------

# name -> (takes parameter, induced-hereditary, hereditary, additive, coadditive)
BUILTINS: dict[str, tuple[bool, bool, bool, bool, bool]] = {
    "O": (True, True, True, True, False),
    "K": (True, True, False, False, True),
    "forests": (False, True, True, True, False),
    "bipartite": (False, True, True, True, False),
    "split": (False, True, False, False, False),
    "bounded_order": (True, True, True, False, False),
    "path_components": (False, True, True, True, False),
    "clique_with_pendants": (False, True, False, False, False),
    "all": (False, True, True, True, True),
}


@dataclass(frozen=True)
class Builtin(Property):
    name: str
    param: int | None = None

    def __post_init__(self) -> None:
        if self.name not in BUILTINS:
            raise PropertyError(f"unknown builtin property {self.name!r}")
        takes = BUILTINS[self.name][0]
        if self.param is not None and (not takes or self.param < 1):
            raise PropertyError(f"bad parameter {self.param!r} for {self.name}")
        if self.name == "bounded_order" and self.param is None:
            raise PropertyError("bounded_order needs a parameter")

    @property
    def induced_hereditary(self) -> bool:  # type: ignore[override]
        return BUILTINS[self.name][1]

    @property
    def hereditary(self) -> bool:  # type: ignore[override]
        return BUILTINS[self.name][2]

    @property
    def additive(self) -> bool:  # type: ignore[override]
        # O(s) and K(s) lose additivity/coadditivity once bounded
        return BUILTINS[self.name][3] and (self.param is None or self.name not in ("O", "K"))

    @property
    def coadditive(self) -> bool:  # type: ignore[override]
        return BUILTINS[self.name][4] and self.param is None

    def member(self, g: Graph) -> bool:
        name, s = self.name, self.param
        if name in ("O", "K", "bounded_order") and s is not None and g.n > s:
            return False
        if name == "O":
            return _is_edgeless(g)
        if name == "K":
            return _is_complete(g)
        if name == "bounded_order":
            return True
        if name == "forests":
            return _is_forest(g)
        if name == "bipartite":
            return _is_bipartite(g)
        if name == "split":
            return _is_split(g)
        if name == "path_components":
            return _is_linear_forest(g)
        if name == "clique_with_pendants":
            return _is_clique_with_pendants(g)
        return True  # "all"

    def extends(self, g: Graph, mask: int, v: int) -> bool:
        s = self.param
        if self.name == "O":
            return not g.rows[v] & mask and (s is None or popcount(mask) <= s)
        if self.name == "K":
            return (g.rows[v] | 1 << v) & mask == mask and (s is None or popcount(mask) <= s)
        if self.name == "bounded_order":
            return popcount(mask) <= s
        if self.name == "all":
            return True
        return self.member(g.sub(mask))

    def to_dict(self) -> dict:
        d: dict = {"kind": "builtin", "name": self.name}
        if self.param is not None:
            d["param"] = self.param
        return d

    def __str__(self) -> str:
        return self.name if self.param is None else f"{self.name}({self.param})"


O = Builtin("O")
K = Builtin("K")


def O_s(s: int) -> Builtin:
    return Builtin("O", s)


def K_s(s: int) -> Builtin:
    return Builtin("K", s)


@dataclass(frozen=True)
class _GraphSetKind(Property):
    graphs: tuple[Graph, ...]
    removed: tuple[Graph, ...] = field(default=(), compare=False, repr=False)

    _keep_small = True
    _relation = staticmethod(contains_induced)
    _tag = ""

    def __post_init__(self) -> None:
        gs = _canon_set(self.graphs)
        if any(g.n == 0 for g in gs):
            raise PropertyError("the null graph cannot be listed")
        kept, dropped = _antichain(gs, lambda a, b: self._relation(b, a), self._keep_small)
        object.__setattr__(self, "graphs", kept)
        object.__setattr__(self, "removed", tuple(self.removed) + dropped)

    def to_dict(self) -> dict:
        return {"kind": self._tag, "graphs": [to_graph6(g) for g in self.graphs]}


@dataclass(frozen=True)
class ForbiddenInduced(_GraphSetKind):
    """Graphs with no induced subgraph in ``graphs``."""

    induced_hereditary = True
    _tag = "forbidden_induced"

    @property
    def additive(self) -> bool:  # type: ignore[override]
        return all(len(connected_components(f)) == 1 for f in self.graphs)

    def member(self, g: Graph) -> bool:
        return not any(contains_induced(g, f) for f in self.graphs)

    def extends(self, g: Graph, mask: int, v: int) -> bool:
        h = g.sub(mask)
        return self.member(h)


@dataclass(frozen=True)
class ForbiddenSubgraph(_GraphSetKind):
    """Graphs with no subgraph in ``graphs``."""

    induced_hereditary = True
    hereditary = True
    _relation = staticmethod(contains_subgraph)
    _tag = "forbidden_subgraph"

    @property
    def additive(self) -> bool:  # type: ignore[override]
        return all(len(connected_components(f)) == 1 for f in self.graphs)

    def member(self, g: Graph) -> bool:
        return not any(contains_subgraph(g, f) for f in self.graphs)


@dataclass(frozen=True)
class GeneratedInduced(_GraphSetKind):
    """Induced subgraphs of the generators.

    Graphs larger than every generator are non-members by truncation; use
    :meth:`is_truncated` to tell that case apart.
    """

    induced_hereditary = True
    _keep_small = False
    _tag = "generated_induced"

    def member(self, g: Graph) -> bool:
        return any(contains_induced(G, g) for G in self.graphs)

    def is_truncated(self, g: Graph) -> bool:
        return g.n > max((G.n for G in self.graphs), default=0)


@dataclass(frozen=True)
class GeneratedSubgraph(_GraphSetKind):
    """Subgraphs of the generators (hereditary by construction)."""

    induced_hereditary = True
    hereditary = True
    _keep_small = False
    _relation = staticmethod(contains_subgraph)
    _tag = "generated_subgraph"

    def member(self, g: Graph) -> bool:
        return any(contains_subgraph(G, g) for G in self.graphs)

    def is_truncated(self, g: Graph) -> bool:
        return g.n > max((G.n for G in self.graphs), default=0)


@dataclass(frozen=True)
class Finite(Property):
    """An explicit finite set of graphs, with no closure assumptions."""

    graphs: tuple[Graph, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "graphs", _canon_set(self.graphs))

    def member(self, g: Graph) -> bool:
        return g in self.graphs

    def to_dict(self) -> dict:
        return {"kind": "finite", "graphs": [to_graph6(g) for g in self.graphs]}


@dataclass(frozen=True)
class Extensional(Property):
    """A membership view over one universe, used as a property; larger graphs are an error."""

    view: PropertyView

    def member(self, g: Graph) -> bool:
        return g in self.view

    def to_dict(self) -> dict:
        return {"kind": "extensional", **self.view.export()}


@dataclass(frozen=True)
class PlusG(Property):
    """Graphs containing ``graph`` as an induced subgraph."""

    graph: Graph
    geq_hereditary = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "graph", canonical_form(self.graph))

    @property
    def additive(self) -> bool:  # type: ignore[override]
        return True

    def member(self, g: Graph) -> bool:
        return contains_induced(g, self.graph)

    def to_dict(self) -> dict:
        return {"kind": "plus", "graph": to_graph6(self.graph)}


@dataclass(frozen=True)
class MinusG(Property):
    """Graphs not containing ``graph`` as an induced subgraph."""

    graph: Graph
    induced_hereditary = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "graph", canonical_form(self.graph))

    def member(self, g: Graph) -> bool:
        return not contains_induced(g, self.graph)

    def to_dict(self) -> dict:
        return {"kind": "minus", "graph": to_graph6(self.graph)}


@dataclass(frozen=True)
class Without(Property):
    """``base`` with finitely many graphs removed (e.g. dropping K1)."""

    base: Property
    graphs: tuple[Graph, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "graphs", _canon_set(self.graphs))

    def member(self, g: Graph) -> bool:
        return g not in self.graphs and member(self.base, g)

    def to_dict(self) -> dict:
        return {"kind": "without", "base": self.base.to_dict(), "graphs": [to_graph6(g) for g in self.graphs]}


@dataclass(frozen=True)
class Product(Property):
    """Graphs whose vertices split into parts inducing members of each factor in turn."""

    factors: tuple[Property, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise PropertyError("a product needs at least one factor")

    @property
    def induced_hereditary(self) -> bool:  # type: ignore[override]
        return all(f.induced_hereditary for f in self.factors)

    @property
    def hereditary(self) -> bool:  # type: ignore[override]
        return all(f.hereditary for f in self.factors)

    @property
    def additive(self) -> bool:  # type: ignore[override]
        return all(f.additive for f in self.factors)

    @property
    def geq_hereditary(self) -> bool:  # type: ignore[override]
        return all(f.geq_hereditary for f in self.factors)

    def member(self, g: Graph) -> bool:
        from .partition import find_partition

        return find_partition(g, self.factors) is not None

    def to_dict(self) -> dict:
        return {"kind": "product", "factors": [f.to_dict() for f in self.factors]}


@dataclass(frozen=True)
class UnionOf(Property):
    parts: tuple[Property, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))

    @property
    def induced_hereditary(self) -> bool:  # type: ignore[override]
        return all(p.induced_hereditary for p in self.parts)

    @property
    def hereditary(self) -> bool:  # type: ignore[override]
        return all(p.hereditary for p in self.parts)

    @property
    def geq_hereditary(self) -> bool:  # type: ignore[override]
        return all(p.geq_hereditary for p in self.parts)

    def member(self, g: Graph) -> bool:
        return any(p.member(g) for p in self.parts)

    def to_dict(self) -> dict:
        return {"kind": "union", "parts": [p.to_dict() for p in self.parts]}


@dataclass(frozen=True)
class IntersectionOf(Property):
    parts: tuple[Property, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))

    @property
    def induced_hereditary(self) -> bool:  # type: ignore[override]
        return all(p.induced_hereditary for p in self.parts)

    @property
    def hereditary(self) -> bool:  # type: ignore[override]
        return all(p.hereditary for p in self.parts)

    @property
    def additive(self) -> bool:  # type: ignore[override]
        return all(p.additive for p in self.parts)

    @property
    def geq_hereditary(self) -> bool:  # type: ignore[override]
        return all(p.geq_hereditary for p in self.parts)

    def member(self, g: Graph) -> bool:
        return all(p.member(g) for p in self.parts)

    def to_dict(self) -> dict:
        return {"kind": "intersection", "parts": [p.to_dict() for p in self.parts]}


# -- serialisation ---------------------------------------------------------------


def from_dict(d: dict) -> Property:
    kind = d.get("kind")
    gs = lambda key="graphs": tuple(from_graph6(s) for s in d[key])  # noqa: E731
    if kind == "builtin":
        return Builtin(d["name"], d.get("param"))
    if kind == "forbidden_induced":
        return ForbiddenInduced(gs())
    if kind == "forbidden_subgraph":
        return ForbiddenSubgraph(gs())
    if kind == "generated_induced":
        return GeneratedInduced(gs())
    if kind == "generated_subgraph":
        return GeneratedSubgraph(gs())
    if kind == "finite":
        return Finite(gs())
    if kind == "extensional":
        from .universe import enumerate_universe

        return Extensional(PropertyView.from_export(d, enumerate_universe(d["universe_n"])))
    if kind == "plus":
        return PlusG(from_graph6(d["graph"]))
    if kind == "minus":
        return MinusG(from_graph6(d["graph"]))
    if kind == "without":
        return Without(from_dict(d["base"]), gs())
    if kind == "product":
        return Product(tuple(from_dict(f) for f in d["factors"]))
    if kind == "union":
        return UnionOf(tuple(from_dict(p) for p in d["parts"]))
    if kind == "intersection":
        return IntersectionOf(tuple(from_dict(p) for p in d["parts"]))
    raise PropertyError(f"unknown property kind {kind!r}")


def dump_properties(props: dict[str, Property]) -> str:
    """Property definition file: a JSON object mapping ids to definitions."""
    body = {name: p.to_dict() for name, p in props.items()}
    return json.dumps({"format": "graphprops.properties/1", "properties": body}, indent=2, sort_keys=True) + "\n"


def load_properties(text: str) -> dict[str, Property]:
    data = json.loads(text)
    if data.get("format") != "graphprops.properties/1":
        raise PropertyError("not a property definition file")
    return {name: from_dict(d) for name, d in data["properties"].items()}


_ATOM = re.compile(r"^\s*([A-Za-z_][A-Za-z_0-9]*)\s*(?:\(\s*(\d+)\s*\))?\s*$")
_LITERAL = re.compile(r"^\s*([a-z_]+)\(([^()]*)\)\s*$")
ALIASES = {
    "edgeless": "O",
    "cliques": "K",
    "3-colourable": "three_colourable",
    "3-colorable": "three_colourable",
}
_GRAPH_KINDS = {
    "forbidden_induced": ForbiddenInduced,
    "forbidden_subgraph": ForbiddenSubgraph,
    "generated_induced": GeneratedInduced,
    "generated_subgraph": GeneratedSubgraph,
    "finite": Finite,
}


def parse_property(text: str, defs: dict[str, Property] | None = None) -> Property:
    """Parse a property expression.

    Accepted forms: a builtin such as ``O``, ``K(3)`` or ``bounded_order(3)``;
    ``plus(G)`` and ``minus(G)``; ``forbidden_induced(G,H,...)`` and the other
    graph-set kinds; products joined by ``*``; or an id from ``defs``.  Graphs
    are graph6 strings, whose alphabet never contains ``( ) , *``.
    """
    text = text.strip()
    if defs and text in defs:
        return defs[text]
    pieces = re.split(r"\s*[*∘]\s*", text)
    if len(pieces) > 1:
        return Product(tuple(parse_property(p, defs) for p in pieces))
    text = ALIASES.get(text, text)
    if text == "three_colourable":
        return Product((O, O, O))
    m = _ATOM.match(text)
    if m:
        name, param = m.group(1), m.group(2)
        try:
            return Builtin(name, int(param) if param else None)
        except PropertyError:
            raise PropertyError(f"unknown property id {text!r}") from None
    m = _LITERAL.match(text)
    if m:
        kind, body = m.group(1), m.group(2)
        try:
            graphs = tuple(from_graph6(x.strip()) for x in body.split(",") if x.strip())
        except GraphError as exc:
            raise PropertyError(f"bad graph literal in {text!r}: {exc}") from None
        if kind in ("plus", "minus") and len(graphs) == 1:
            return (PlusG if kind == "plus" else MinusG)(graphs[0])
        if kind in _GRAPH_KINDS:
            return _GRAPH_KINDS[kind](graphs)
    raise PropertyError(f"cannot parse property {text!r}")


# -- extensional views -----------------------------------------------------------


def materialize(p: Property, u: Universe) -> PropertyView:
    """Membership bit per universe graph; cached on the universe."""

    def build() -> PropertyView:
        bits = 0
        for i, g in enumerate(u.graphs):
            if p.member(g):
                bits |= 1 << i
        return PropertyView(u, bits)

    return u._cached(("materialize", p), build)


def _as_view(p: Property | PropertyView, u: Universe) -> PropertyView:
    if isinstance(p, PropertyView):
        if p.universe is not u:
            raise PropertyError("view belongs to another universe")
        return p
    return materialize(p, u)


# -- closure-class checks ----------------------------------------------------------


def is_induced_hereditary_up_to(p: Property | PropertyView, u: Universe) -> Verdict:
    """Closed under induced subgraphs within ``u``; witness is ``(g in P, h <= g, h not in P)``."""
    view = _as_view(p, u)
    vdel = u.vertex_deletions()
    for i in view.indices():
        for c in vdel[i]:
            if not view.has(c):
                return Verdict(False, (u.graphs[i], u.graphs[c]))
    return Verdict(True)


def is_hereditary_up_to(p: Property | PropertyView, u: Universe) -> Verdict:
    """Closed under subgraphs within ``u``; witness is ``(g in P, h ⊆ g, h not in P)``."""
    view = _as_view(p, u)
    vdel, edel = u.vertex_deletions(), u.edge_deletions()
    for i in view.indices():
        for c in edel[i] + vdel[i]:
            if not view.has(c):
                return Verdict(False, (u.graphs[i], u.graphs[c]))
    return Verdict(True)


def is_geq_hereditary_up_to(p: Property | PropertyView, u: Universe) -> Verdict:
    """Closed under induced supergraphs within ``u``; witness is ``(h in P, g >= h, g not in P)``."""
    view = _as_view(p, u)
    vdel = u.vertex_deletions()
    for j in (~view).indices():
        for c in vdel[j]:
            if view.has(c):
                return Verdict(False, (u.graphs[c], u.graphs[j]))
    return Verdict(True)


def _pair_closure(view: PropertyView, u: Universe, combine) -> Verdict:
    idx = view.indices()
    for a, i in enumerate(idx):
        g = u.graphs[i]
        for j in idx[a:]:
            h = u.graphs[j]
            if g.n + h.n > u.n:
                continue
            if combine(g, h) not in view:
                return Verdict(False, (g, h))
    return Verdict(True, note=f"pairs with order sum <= {u.n}")


def is_additive_up_to(p: Property | PropertyView, u: Universe) -> Verdict:
    return _pair_closure(_as_view(p, u), u, disjoint_union)


def is_coadditive_up_to(p: Property | PropertyView, u: Universe) -> Verdict:
    return _pair_closure(_as_view(p, u), u, join)


def _witness_bound(u: Universe, below: list[int], i: int, j: int) -> int:
    common = below[i] & below[j]
    m = max((u.graphs[k].n for k in _bits(common)), default=0)
    return u.graphs[i].n + u.graphs[j].n - m


class _Scope:
    """What a missing witness inside ``u`` proves for a pair of members.

    When P is closed downwards within ``u`` any witness can be cut down to the
    union of the two copies, so a pair with order sum at most ``u.n`` is decided
    exactly.  If moreover P has no member of order ``u.n`` it has none larger
    either, and every pair is decided.  Otherwise only the lower bound
    ``|G| + |H| - (largest common part)`` can rule pairs in.
    """

    def __init__(self, view: PropertyView, u: Universe, relation: str):
        check = is_induced_hereditary_up_to if relation == "induced" else is_hereditary_up_to
        self.u = u
        self.closed = check(view, u).holds
        top = sum(1 << i for i, g in enumerate(u.graphs) if g.n == u.n)
        self.complete = self.closed and not view.bits & top

    def decided(self, below: list[int], i: int, j: int) -> bool:
        if self.complete:
            return True
        g, h = self.u.graphs[i], self.u.graphs[j]
        if self.closed:
            return g.n + h.n <= self.u.n
        return _witness_bound(self.u, below, i, j) <= self.u.n


def _relations(u: Universe, relation: str) -> tuple[list[int], list[int]]:
    if relation == "induced":
        return u.induced_below(), u.induced_above()
    if relation == "subgraph":
        return u.subgraphs_below(), u.subgraphs_above()
    raise PropertyError(f"unknown relation {relation!r}")


def is_compositive_up_to(p: Property | PropertyView, u: Universe, relation: str = "induced") -> Verdict:
    """Every pair of members has a common containing member.

    ``relation`` is ``"induced"`` (<=) or ``"subgraph"`` (⊆).  Pairs with no
    witness inside ``u`` that could still have one outside it are counted as
    unverifiable, never guessed.
    """
    view = _as_view(p, u)
    below, above = _relations(u, relation)
    scope = _Scope(view, u, relation)
    idx = view.indices()
    skipped = 0
    for a, i in enumerate(idx):
        for j in idx[a:]:
            if above[i] & above[j] & view.bits:
                continue
            if not scope.decided(below, i, j):
                skipped += 1
                continue
            return Verdict(False, (u.graphs[i], u.graphs[j]), skipped)
    return Verdict(True, unverifiable=skipped)


def is_indiscompositive_up_to(p: Property | PropertyView, u: Universe) -> Verdict:
    """Every pair of members sits in some member as disjoint induced subgraphs."""
    view = _as_view(p, u)
    above = u.induced_above()
    scope = _Scope(view, u, "induced")
    idx = view.indices()
    skipped = 0
    for a, i in enumerate(idx):
        g = u.graphs[i]
        for j in idx[a:]:
            h = u.graphs[j]
            found = False
            if g.n + h.n <= u.n:
                for k in _bits(above[i] & above[j] & view.bits):
                    host = u.graphs[k]
                    if host.n >= g.n + h.n and contains_disjoint_induced(host, g, h):
                        found = True
                        break
            if found:
                continue
            # a disjoint witness has at least |G| + |H| vertices
            if g.n + h.n <= u.n or scope.complete:
                return Verdict(False, (g, h), skipped)
            skipped += 1
    return Verdict(True, unverifiable=skipped)


# -- generating sets -----------------------------------------------------------------


def gen_filter_L(gens: Iterable[Graph], L: Graph) -> list[Graph]:
    """Generators containing ``L`` as an induced subgraph."""
    return [G for G in gens if contains_induced(G, L)]


def gen_filter_2L(gens: Iterable[Graph], L: Graph) -> list[Graph]:
    """Generators containing two disjoint, non-adjacent copies of ``L``."""
    twice = disjoint_union(L, L)
    return [G for G in gens if contains_induced(G, twice)]


def two_star(L: Graph) -> list[Graph]:
    """All graphs made of two disjoint copies of ``L`` plus arbitrary cross edges."""
    k = L.n
    if k > 4:
        raise PropertyError("two_star scans 2^(k*k) configurations; order(L) must be <= 4")
    if 2 * k > 16:
        raise GraphError("order cap exceeded")
    base = disjoint_union(L, L)
    pairs = [(x, k + y) for x in range(k) for y in range(k)]
    out: dict = {}
    for choice in cartesian((0, 1), repeat=len(pairs)):
        rows = list(base.rows)
        for (a, b), on in zip(pairs, choice):
            if on:
                rows[a] |= 1 << b
                rows[b] |= 1 << a
        g = canonical_form(Graph._trusted(2 * k, tuple(rows)))
        out.setdefault(g.key, g)
    return [out[key] for key in sorted(out)]


def gen_filter_2star(gens: Iterable[Graph], L: Graph) -> list[Graph]:
    """Generators containing some member of ``two_star(L)`` as an induced subgraph."""
    return [G for G in gens if contains_disjoint_induced(G, L, L)]


def is_generating_set_up_to(gens: Sequence[Graph], p: Property | PropertyView, u: Universe) -> Verdict:
    """``gens`` lies in P and every member of P in ``u`` is an induced subgraph of a generator."""
    view = _as_view(p, u)
    for G in gens:
        inside = G in view if G.n <= u.n else (not isinstance(p, PropertyView) and member(p, G))
        if not inside:
            return Verdict(False, (G,), note="generator is not a member")
    for g in view:
        if not any(contains_induced(G, g) for G in gens):
            return Verdict(False, (g,), note="member not covered")
    return Verdict(True)


@dataclass
class GeneratingChain:
    chain: list[Graph]
    covered: int
    stopped_at: Graph | None = None  # first member that needed a witness beyond the universe


def ordered_generating_chain(p: Property | PropertyView, u: Universe) -> GeneratingChain:
    """Greedy ordered generating set ``H1 <= H2 <= ...`` inside ``u``.

    Members are taken in universe order; each new term is the smallest member
    containing the previous term and the next uncovered member.  The chain
    stops at the first member whose common witness may lie beyond ``u``, and a
    pair that provably has no witness is an error.
    """
    view = _as_view(p, u)
    below, above = u.induced_below(), u.induced_above()
    scope = _Scope(view, u, "induced")
    idx = view.indices()
    if not idx:
        return GeneratingChain([], 0)
    head = idx[0]
    chain = [head]
    stopped = None
    for i in idx[1:]:
        if below[head] >> i & 1:
            continue
        cands = above[head] & above[i] & view.bits
        if not cands:
            if scope.decided(below, head, i):
                raise PropertyError(
                    f"not compositive: {to_graph6(u.graphs[head])} and "
                    f"{to_graph6(u.graphs[i])} have no common member"
                )
            stopped = u.graphs[i]
            break
        best = min(_bits(cands), key=lambda k: (u.graphs[k].n, k))
        chain.append(best)
        head = best
    covered = popcount(below[head] & view.bits)
    return GeneratingChain([u.graphs[k] for k in chain], covered, stopped)


def build_uniform(g: Graph, cross: Iterable[tuple[int, int]], m: int) -> Graph:
    """``m`` labelled copies of ``g`` with the same cross pattern between every ordered pair.

    ``(x, y)`` in ``cross`` joins vertex ``x`` of copy ``p`` to vertex ``y`` of
    copy ``q`` whenever ``p < q``.  Vertex ``x`` of copy ``p`` gets label ``p*k + x``.
    """
    k = g.n
    if m * k > 16:
        raise GraphError("order cap exceeded")
    cross = sorted(set(cross))
    for x, y in cross:
        if not (0 <= x < k and 0 <= y < k):
            raise GraphError("cross pattern refers to a missing vertex")
    rows = [0] * (m * k)
    for p in range(m):
        for v in range(k):
            for w in _bits(g.rows[v]):
                rows[p * k + v] |= 1 << (p * k + w)
    for p in range(m):
        for q in range(p + 1, m):
            for x, y in cross:
                a, b = p * k + x, q * k + y
                rows[a] |= 1 << b
                rows[b] |= 1 << a
    X = Graph._trusted(m * k, tuple(rows))
    copy = lambda p: sum(1 << (p * k + x) for x in range(k))  # noqa: E731
    for p in range(m):
        assert X.sub(copy(p)).rows == g.rows  # each copy is g under v_x^p -> v_x
    if m >= 2:
        ref = X.sub(copy(0) | copy(1)).rows
        for p in range(m):
            for q in range(p + 1, m):
                assert X.sub(copy(p) | copy(q)).rows == ref  # G^p:G^q matches G^1:G^2
    return X


def empty_property() -> Finite:
    return Finite(())


def all_graphs() -> Builtin:
    return Builtin("all")


__all__ = [
    "BUILTINS",
    "Builtin",
    "Extensional",
    "Finite",
    "ForbiddenInduced",
    "ForbiddenSubgraph",
    "GeneratedInduced",
    "GeneratedSubgraph",
    "GeneratingChain",
    "IntersectionOf",
    "K",
    "K_s",
    "MinusG",
    "O",
    "O_s",
    "PlusG",
    "Product",
    "Property",
    "PropertyError",
    "UnionOf",
    "Verdict",
    "Without",
    "all_graphs",
    "build_uniform",
    "complete_graph",
    "dump_properties",
    "empty_graph",
    "from_dict",
    "gen_filter_2L",
    "gen_filter_2star",
    "gen_filter_L",
    "is_additive_up_to",
    "is_coadditive_up_to",
    "is_compositive_up_to",
    "is_generating_set_up_to",
    "is_geq_hereditary_up_to",
    "is_hereditary_up_to",
    "is_indiscompositive_up_to",
    "is_induced_hereditary_up_to",
    "load_properties",
    "materialize",
    "member",
    "ordered_generating_chain",
    "parse_property",
    "two_star",
]
