"""Join decompositions, maximal graphs, and factorising hereditary compositive properties.

A graph is the join of the complements of the components of its complement;
those pieces are its ind-parts and their number is ``dc``.  Everything here
that depends on a property is computed inside a universe and reported as a
truncated value (for instance ``dc_property`` is only an upper bound for the
untruncated decomposability number).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement, permutations
from typing import Sequence

from .graphcore import (
    MAX_ORDER,
    Graph,
    _bits,
    add_edge,
    canonical_form,
    complement,
    complete_graph,
    connected_components,
    contains_induced,
    contains_subgraph,
    join,
    to_graph6,
)
from .partition import enumerate_partitions, product_view
from .properties import (
    GeneratedSubgraph,
    Product,
    Property,
    Verdict,
    is_additive_up_to,
    is_compositive_up_to,
    is_hereditary_up_to,
    materialize,
    member,
)
from .universe import Universe

K1 = complete_graph(1)


class DecompError(ValueError):
    pass


@dataclass(frozen=True)
class JoinDecomposition:
    parts: tuple[Graph, ...]

    @property
    def dc(self) -> int:
        return len(self.parts)


def _ind_masks(g: Graph) -> list[int]:
    return connected_components(complement(g))


def ind_parts(g: Graph) -> JoinDecomposition:
    if g.n == 0:
        raise DecompError("the null graph has no ind-parts")
    parts = sorted(canonical_form(g.sub(m)) for m in _ind_masks(g))
    return JoinDecomposition(tuple(parts))


def dc(g: Graph) -> int:
    return len(_ind_masks(g))


def _join_all(parts: Sequence[Graph]) -> Graph:
    out = parts[0]
    for h in parts[1:]:
        out = join(out, h)
    return out


def is_maximal(p: Property, g: Graph) -> bool:
    """``g`` is in P and adding any missing edge leaves P."""
    if not member(p, g):
        return False
    return not any(member(p, add_edge(g, a, b)) for a, b in g.non_edges())


def _certify_hereditary(p: Property, u: Universe) -> bool:
    return p.hereditary or is_hereditary_up_to(p, u).holds


def clique_bound(p: Property, u: Universe) -> int:
    """Largest ``c`` with K_c in P; an error if every clique in the universe is in P."""
    c = 0
    for r in range(1, u.n + 1):
        if not member(p, complete_graph(r)):
            break
        c = r
    else:
        raise DecompError(f"no clique bound within the universe: K_{u.n} is in the property")
    return c


def p_maximal(p: Property, u: Universe) -> list[Graph]:
    """P-maximal graphs of ``u`` (adding an edge never changes the order, so this is exact)."""
    view = materialize(p, u)
    eadd = u.edge_additions()
    return [u.graphs[i] for i in view.indices() if not any(view.has(j) for j in eadd[i])]


def m_star(p: Property, u: Universe) -> list[Graph]:
    """P-maximal graphs with at least c(P) vertices, cross-checked against ``K1 + G`` not in P."""
    c = clique_bound(p, u)
    maximal = p_maximal(p, u)
    by_order = [g for g in maximal if g.n >= c]
    by_join = [g for g in maximal if g.n + 1 <= MAX_ORDER and not member(p, join(K1, g))]
    if by_order != by_join:
        odd = next(g for g in maximal if (g in by_order) != (g in by_join))
        raise DecompError(f"the two descriptions of M* disagree at {to_graph6(odd)}")
    return by_order


def dc_property(p: Property, u: Universe) -> int:
    """Minimum dc over M*(P) inside ``u``; an upper bound for the untruncated value."""
    ms = m_star(p, u)
    if not ms:
        raise DecompError("M* is empty inside the universe")
    return min(dc(g) for g in ms)


# -- maximality characterisation and part matching ------------------------------


@dataclass
class MaxCharReport:
    graph: Graph
    in_m: bool
    all_partitions_clean: bool
    partitions: int
    violating: list[list[int]] | None = None
    in_m_star: bool = False
    m_star_clause: bool | None = None

    @property
    def holds(self) -> bool:
        return self.in_m == self.all_partitions_clean and self.m_star_clause is not False

    def to_json(self) -> dict:
        return {
            "graph": to_graph6(self.graph),
            "holds": self.holds,
            "in_M": self.in_m,
            "every_partition_maximal_and_joined": self.all_partitions_clean,
            "partitions": self.partitions,
            "violating_partition": self.violating,
            "in_M_star": self.in_m_star,
            "M_star_clause": self.m_star_clause,
        }


def _in_m_star(p: Property, g: Graph) -> bool:
    return g.n > 0 and is_maximal(p, g) and not member(p, join(K1, g))


def check_max_char(g: Graph, props: Sequence[Property], u: Universe) -> MaxCharReport:
    """``g`` is P-maximal iff every partition has maximal parts whose join is ``g``."""
    for q in props:
        if not _certify_hereditary(q, u):
            raise DecompError(f"factor {q.label} is not hereditary within the universe")
    prod = Product(tuple(props))
    certs = enumerate_partitions(g, props, "labelled")
    clean = True
    violating = None
    for cert in certs:
        parts = cert.parts
        ok = all(is_maximal(q, g.sub(m)) for q, m in zip(props, parts))
        joined = all(g.rows[v] & parts[j] == parts[j] for j in range(len(parts)) for v in _bits(g.vertex_mask & ~parts[j]))
        if not (ok and joined):
            clean = False
            violating = [list(_bits(m)) for m in parts]
            break
    report = MaxCharReport(g, is_maximal(prod, g), clean, len(certs), violating)
    if _in_m_star(prod, g):
        report.in_m_star = True
        report.m_star_clause = len(props) <= dc(g) and all(
            _in_m_star(q, g.sub(m)) for cert in certs for q, m in zip(props, cert.parts)
        )
    return report


@dataclass
class Gen0Result:
    g: Graph
    h: Graph
    dc_g: int
    dc_h: int
    matchings: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.dc_h <= self.dc_g and (self.dc_h < self.dc_g or bool(self.matchings))

    @property
    def matching(self) -> tuple[int, ...] | None:
        return self.matchings[0] if self.matchings else None

    def to_json(self) -> dict:
        return {
            "g": to_graph6(self.g),
            "h": to_graph6(self.h),
            "dc_g": self.dc_g,
            "dc_h": self.dc_h,
            "holds": self.holds,
            "matching": list(self.matching) if self.matching else None,
        }


def part_matchings(g: Graph, h: Graph) -> list[tuple[int, ...]]:
    """Permutations ``s`` with ``G_i <= H_s(i)`` over the sorted ind-parts (equal dc only)."""
    gp, hp = ind_parts(g).parts, ind_parts(h).parts
    if len(gp) != len(hp):
        return []
    fits = [[contains_induced(b, a) for b in hp] for a in gp]
    return [s for s in permutations(range(len(hp))) if all(fits[i][s[i]] for i in range(len(gp)))]


def check_gen0(g: Graph, h: Graph, p: Property, u: Universe) -> Gen0Result:
    """For ``g`` in M*(P) and ``g ⊆ h`` in P: dc(h) <= dc(g), with a part matching on equality."""
    if not _certify_hereditary(p, u):
        raise DecompError("property is not hereditary within the universe")
    if g not in m_star(p, u):
        raise DecompError(f"{to_graph6(g)} is not in M*")
    if not member(p, h):
        raise DecompError(f"{to_graph6(h)} is not in the property")
    if not contains_subgraph(h, g):
        raise DecompError(f"{to_graph6(g)} is not a subgraph of {to_graph6(h)}")
    res = Gen0Result(g, h, dc(g), dc(h))
    if res.dc_g == res.dc_h:
        res.matchings = part_matchings(g, h)
    return res


# -- factorisation ----------------------------------------------------------------


@dataclass
class FactorisationReport:
    property_id: str
    n: int
    dc: int
    anchor: Graph
    chain: list[Graph]
    chain_parts: list[list[Graph]]
    factors: list[GeneratedSubgraph]
    factor_bits: list[str]
    product_equal: Verdict
    chain_product_equal: Verdict
    indecomposable: list[bool]
    additive: list[Verdict] | None
    unaligned: int = 0
    partial: bool = False

    @property
    def ok(self) -> bool:
        return self.product_equal.holds and all(self.indecomposable) and (
            self.additive is None or all(v.holds for v in self.additive)
        )

    def to_json(self) -> dict:
        return {
            "property": self.property_id,
            "n": self.n,
            "dc": self.dc,
            "anchor": to_graph6(self.anchor),
            "chain": [to_graph6(h) for h in self.chain],
            "chain_parts": [[to_graph6(x) for x in row] for row in self.chain_parts],
            "factors": [[to_graph6(x) for x in f.graphs] for f in self.factors],
            "factor_bits": self.factor_bits,
            "product_equal": self.product_equal.to_json(),
            "chain_product_equal": self.chain_product_equal.to_json(),
            "indecomposable": self.indecomposable,
            "additive": None if self.additive is None else [v.to_json() for v in self.additive],
            "unaligned": self.unaligned,
            "partial": self.partial,
            "ok": self.ok,
        }


def _longest_chain(members: list[Graph], start: Graph) -> list[Graph]:
    """Longest strictly ⊆-increasing chain of ``members`` beginning at ``start``."""
    above = [h for h in members if h != start and contains_subgraph(h, start)]
    above.sort(key=lambda h: (h.n, h.edge_count(), h.key))
    best: dict[Graph, list[Graph]] = {}
    for h in reversed(above):
        tail = [best[x] for x in above if x != h and (x.n, x.edge_count()) > (h.n, h.edge_count()) and contains_subgraph(x, h)]
        best[h] = [h] + max(tail, key=len, default=[])
    tails = [best[h] for h in above]
    return [start] + max(tails, key=len, default=[])


def _align(parts: list[Graph], h: Graph, perm: tuple[int, ...]) -> list[Graph]:
    hp = ind_parts(h).parts
    return [hp[perm[i]] for i in range(len(parts))]


def _indecomposables(u: Universe) -> list[Graph]:
    return [g for g in u.graphs if dc(g) == 1]


def factorise_hereditary(p: Property, u: Universe, property_id: str | None = None) -> FactorisationReport:
    """Factor a hereditary compositive P into dc(P) indecomposable factors on ``u``.

    The anchor J is the first graph of M*(P) with dc(P) ind-parts.  A longest
    ⊆-chain of P-maximal graphs from J is built inside ``u`` and its ind-parts
    are aligned link by link with part matchings; this is reported as
    ``chain``.  Because the parts of an in-universe chain stay smaller than
    ``u.n``, factor generators are taken instead from every graph of M*(P)
    that is a join of dc(P) indecomposable graphs of ``u`` on at most
    ``u.n + dc(P) - 1`` vertices and contains J, under every part alignment
    with J.  With dc(P) = 1 the single factor is generated by all of M*(P)
    inside ``u``.
    """
    if not _certify_hereditary(p, u):
        raise DecompError("property is not hereditary within the universe")
    comp = is_compositive_up_to(p, u, "subgraph")
    if not comp.holds:
        raise DecompError("property is not hereditary compositive within the universe")
    ms = m_star(p, u)
    if not ms:
        raise DecompError("M* is empty inside the universe")
    d = min(dc(g) for g in ms)
    anchor = next(g for g in ms if dc(g) == d)
    jparts = list(ind_parts(anchor).parts)

    chain = _longest_chain(ms, anchor)
    chain_parts = [jparts]
    for prev, nxt in zip(chain, chain[1:]):
        m = part_matchings(prev, nxt)
        if not m:
            raise DecompError(f"no part matching from {to_graph6(prev)} to {to_graph6(nxt)}")
        chain_parts.append(_align(chain_parts[-1], nxt, m[0]))
    chain_factors = [GeneratedSubgraph(tuple(row[j] for row in chain_parts)) for j in range(d)]

    gens: list[list[Graph]] = [[] for _ in range(d)]
    unaligned = 0
    if d == 1:
        gens[0] = list(ms)
    else:
        pieces = _indecomposables(u)
        for combo in combinations_with_replacement(pieces, d):
            total = sum(x.n for x in combo)
            if total > min(u.n + d - 1, MAX_ORDER):
                continue
            h = _join_all(combo)
            if not contains_subgraph(h, anchor) or not _in_m_star(p, h):
                continue
            matches = part_matchings(anchor, h)
            if not matches:
                unaligned += 1
                continue
            for perm in matches:
                for j, x in enumerate(_align(jparts, h, perm)):
                    gens[j].append(x)
    factors = [GeneratedSubgraph(tuple(g)) for g in gens]

    target = materialize(p, u)
    got = product_view(factors, u)
    diff = got.first_difference(target)
    equal = Verdict(True) if diff is None else Verdict(False, (diff,))
    chain_got = product_view(chain_factors, u)
    chain_diff = chain_got.first_difference(target)
    chain_equal = Verdict(True) if chain_diff is None else Verdict(False, (chain_diff,))

    indec = []
    for f in factors:
        try:
            indec.append(dc_property(f, u) == 1)
        except DecompError:  # no clique bound inside the universe
            indec.append(False)
    additive = None
    if p.additive or is_additive_up_to(p, u).holds:
        additive = [is_additive_up_to(f, u) for f in factors]

    return FactorisationReport(
        property_id=property_id or p.label,
        n=u.n,
        dc=d,
        anchor=anchor,
        chain=chain,
        chain_parts=chain_parts,
        factors=factors,
        factor_bits=[materialize(f, u).to_hex() for f in factors],
        product_equal=equal,
        chain_product_equal=chain_equal,
        indecomposable=indec,
        additive=additive,
        unaligned=unaligned,
        partial=len(chain) < 2,
    )


@dataclass
class SuperadditivityReport:
    dc_a: int
    dc_b: int
    dc_product: int

    @property
    def consistent(self) -> bool:
        return self.dc_product >= self.dc_a + self.dc_b

    def to_json(self) -> dict:
        return {
            "dc_a": self.dc_a,
            "dc_b": self.dc_b,
            "dc_product": self.dc_product,
            "verdict": "consistent" if self.consistent else "violation",
        }


def check_dc_superadditive(pa: Property, pb: Property, u: Universe) -> SuperadditivityReport:
    """Compare truncated dc(P∘Q) with dc(P) + dc(Q); truncated values are upper bounds."""
    for q in (pa, pb):
        if not _certify_hereditary(q, u):
            raise DecompError(f"factor {q.label} is not hereditary within the universe")
    return SuperadditivityReport(dc_property(pa, u), dc_property(pb, u), dc_property(Product((pa, pb)), u))


__all__ = [
    "DecompError",
    "FactorisationReport",
    "Gen0Result",
    "JoinDecomposition",
    "MaxCharReport",
    "SuperadditivityReport",
    "check_dc_superadditive",
    "check_gen0",
    "check_max_char",
    "clique_bound",
    "dc",
    "dc_property",
    "factorise_hereditary",
    "ind_parts",
    "is_maximal",
    "m_star",
    "p_maximal",
    "part_matchings",
]
