"""All non-isomorphic graphs up to a small order, plus extensional property views."""

from __future__ import annotations

import hashlib
import threading
from typing import Iterable, Iterator, Sequence

from .graphcore import Graph, GraphError, _bits, canonical_form, popcount, to_graph6, from_graph6

MAX_UNIVERSE = 8


class UniverseError(ValueError):
    pass


def _extensions(g: Graph) -> Iterator[Graph]:
    """One-vertex extensions in which the new vertex has minimum degree.

    Every graph H of order k+1 arises this way from H - v with v of minimum
    degree, so this is enough for complete enumeration.
    """
    n = g.n
    degs = g.degrees()
    for nbrs in range(1 << n):
        d = popcount(nbrs)
        if any(degs[u] + (nbrs >> u & 1) < d for u in range(n)):
            continue
        rows = tuple(r | ((nbrs >> u & 1) << n) for u, r in enumerate(g.rows)) + (nbrs,)
        yield Graph._trusted(n + 1, rows)


def _enumerate_orders(n: int) -> list[list[Graph]]:
    levels = [[canonical_form(Graph(1))]]
    for _ in range(2, n + 1):
        seen: dict[tuple[int, int], Graph] = {}
        for g in levels[-1]:
            for h in _extensions(g):
                k = h.key
                if k not in seen:
                    seen[k] = h
        levels.append([canonical_form(h) for _, h in sorted(seen.items())])
    return levels


class Universe:
    """Every graph of order ``1..n`` (one per isomorphism class), canonically ordered."""

    def __init__(self, n: int, graphs: Sequence[Graph] | None = None):
        if not 1 <= n <= MAX_UNIVERSE:
            raise UniverseError(f"universe order {n} outside 1..{MAX_UNIVERSE}")
        self.n = n
        if graphs is None:
            graphs = [g for level in _enumerate_orders(n) for g in level]
        self.graphs: list[Graph] = list(graphs)
        self.index: dict[tuple[int, int], int] = {g.key: i for i, g in enumerate(self.graphs)}
        if len(self.index) != len(self.graphs):
            raise UniverseError("duplicate graphs in universe")
        self._lock = threading.RLock()
        self._cache: dict = {}

    def __len__(self) -> int:
        return len(self.graphs)

    def __iter__(self) -> Iterator[Graph]:
        return iter(self.graphs)

    def __contains__(self, g: Graph) -> bool:
        return g.key in self.index

    def __repr__(self) -> str:
        return f"Universe(n={self.n}, size={len(self)})"

    def position(self, g: Graph) -> int:
        try:
            return self.index[g.key]
        except KeyError:
            raise UniverseError(f"{to_graph6(g)} is not in {self!r}") from None

    def counts(self) -> list[int]:
        out = [0] * self.n
        for g in self.graphs:
            out[g.n - 1] += 1
        return out

    def of_order(self, k: int) -> list[Graph]:
        return [g for g in self.graphs if g.n == k]

    def checksum(self) -> str:
        h = hashlib.sha256()
        for g in self.graphs:
            h.update(to_graph6(g).encode() + b"\n")
        return h.hexdigest()

    # -- export / import --------------------------------------------------

    def to_graph6_lines(self) -> str:
        return "".join(to_graph6(g) + "\n" for g in self.graphs)

    @classmethod
    def from_graph6_lines(cls, text: str) -> Universe:
        graphs = [canonical_form(from_graph6(line)) for line in text.split() if line]
        if not graphs:
            raise UniverseError("no graphs in input")
        n = max(g.n for g in graphs)
        u = cls(n, sorted(graphs, key=lambda g: g.key))
        if u.counts() != cls._reference_counts(n):
            raise UniverseError("graph list is not a complete universe")
        return u

    @staticmethod
    def _reference_counts(n: int) -> list[int]:
        return enumerate_universe(n).counts()

    # -- lazily computed relations -----------------------------------------

    def _cached(self, name: str, build):
        with self._lock:
            if name not in self._cache:
                self._cache[name] = build()
            return self._cache[name]

    def vertex_deletions(self) -> list[tuple[int, ...]]:
        """Indices of the distinct ``g - v`` for each graph (order-1 graphs map to none)."""

        def build():
            out = []
            for g in self.graphs:
                if g.n == 1:
                    out.append(())
                    continue
                kids = {self.index[g.sub(g.vertex_mask & ~(1 << v)).key] for v in range(g.n)}
                out.append(tuple(sorted(kids)))
            return out

        return self._cached("vdel", build)

    def edge_deletions(self) -> list[tuple[int, ...]]:
        def build():
            out = []
            for g in self.graphs:
                kids = set()
                for u, v in g.edges():
                    rows = list(g.rows)
                    rows[u] &= ~(1 << v)
                    rows[v] &= ~(1 << u)
                    kids.add(self.index[Graph._trusted(g.n, tuple(rows)).key])
                out.append(tuple(sorted(kids)))
            return out

        return self._cached("edel", build)

    def edge_additions(self) -> list[tuple[int, ...]]:
        def build():
            out = []
            for g in self.graphs:
                kids = set()
                for u, v in g.non_edges():
                    rows = list(g.rows)
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
                    kids.add(self.index[Graph._trusted(g.n, tuple(rows)).key])
                out.append(tuple(sorted(kids)))
            return out

        return self._cached("eadd", build)

    def _topo(self) -> list[int]:
        # deletions always reduce (order, edges), so this order is topological
        return sorted(range(len(self)), key=lambda i: (self.graphs[i].n, self.graphs[i].edge_count()))

    def induced_below(self) -> list[int]:
        """For each graph, the mask of its induced subgraphs in the universe (itself included)."""

        def build():
            vdel = self.vertex_deletions()
            out = [0] * len(self)
            for i in self._topo():
                m = 1 << i
                for c in vdel[i]:
                    m |= out[c]
                out[i] = m
            return out

        return self._cached("ind_below", build)

    def subgraphs_below(self) -> list[int]:
        def build():
            vdel = self.vertex_deletions()
            edel = self.edge_deletions()
            out = [0] * len(self)
            for i in self._topo():
                m = 1 << i
                for c in vdel[i] + edel[i]:
                    m |= out[c]
                out[i] = m
            return out

        return self._cached("sub_below", build)

    def _transpose(self, below: list[int]) -> list[int]:
        above = [0] * len(self)
        for i, m in enumerate(below):
            for j in _bits(m):
                above[j] |= 1 << i
        return above

    def induced_above(self) -> list[int]:
        return self._cached("ind_above", lambda: self._transpose(self.induced_below()))

    def subgraphs_above(self) -> list[int]:
        return self._cached("sub_above", lambda: self._transpose(self.subgraphs_below()))

    def is_induced_sub(self, i: int, j: int) -> bool:
        """Universe-index form of ``graphs[i] <= graphs[j]``."""
        return bool(self.induced_below()[j] >> i & 1)

    def is_sub(self, i: int, j: int) -> bool:
        return bool(self.subgraphs_below()[j] >> i & 1)

    # -- views --------------------------------------------------------------

    def view(self, graphs: Iterable[Graph] = ()) -> PropertyView:
        bits = 0
        for g in graphs:
            if g.n == 0:
                continue
            bits |= 1 << self.position(g)
        return PropertyView(self, bits)

    def everything(self) -> PropertyView:
        return PropertyView(self, (1 << len(self)) - 1)

    def nothing(self) -> PropertyView:
        return PropertyView(self, 0)


_UNIVERSES: dict[int, Universe] = {}
_UNIVERSE_LOCK = threading.Lock()


def enumerate_universe(n: int) -> Universe:
    """Shared :class:`Universe` of order ``n`` (built once per process)."""
    if not 1 <= n <= MAX_UNIVERSE:
        raise UniverseError(f"universe order {n} outside 1..{MAX_UNIVERSE}")
    with _UNIVERSE_LOCK:
        u = _UNIVERSES.get(n)
        if u is None:
            # build from the largest smaller universe to reuse its graph list
            u = Universe(n)
            _UNIVERSES[n] = u
        return u


class PropertyView:
    """Membership bit-vector over one universe (bit i <-> ``universe.graphs[i]``)."""

    __slots__ = ("universe", "bits")

    def __init__(self, universe: Universe, bits: int):
        if bits >> len(universe):
            raise UniverseError("view has bits beyond the universe")
        self.universe = universe
        self.bits = bits

    def _same(self, other: PropertyView) -> None:
        if other.universe is not self.universe:
            raise UniverseError("views belong to different universes")

    def __contains__(self, g: Graph) -> bool:
        if g.n == 0:
            return True
        if g.n > self.universe.n:
            raise UniverseError(f"order {g.n} is beyond the universe")
        return bool(self.bits >> self.universe.position(g) & 1)

    def has(self, i: int) -> bool:
        return bool(self.bits >> i & 1)

    def __len__(self) -> int:
        return popcount(self.bits)

    def __iter__(self) -> Iterator[Graph]:
        gs = self.universe.graphs
        return (gs[i] for i in _bits(self.bits))

    def indices(self) -> list[int]:
        return list(_bits(self.bits))

    def members(self) -> list[Graph]:
        return list(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PropertyView):
            return NotImplemented
        return other.universe is self.universe and other.bits == self.bits

    def __hash__(self) -> int:
        return hash((id(self.universe), self.bits))

    def __and__(self, other: PropertyView) -> PropertyView:
        self._same(other)
        return PropertyView(self.universe, self.bits & other.bits)

    def __or__(self, other: PropertyView) -> PropertyView:
        self._same(other)
        return PropertyView(self.universe, self.bits | other.bits)

    def __sub__(self, other: PropertyView) -> PropertyView:
        self._same(other)
        return PropertyView(self.universe, self.bits & ~other.bits)

    def __invert__(self) -> PropertyView:
        return PropertyView(self.universe, ((1 << len(self.universe)) - 1) & ~self.bits)

    def __le__(self, other: PropertyView) -> bool:
        self._same(other)
        return self.bits & ~other.bits == 0

    def restrict(self, k: int) -> PropertyView:
        """Members of order at most ``k``."""
        mask = 0
        for i, g in enumerate(self.universe.graphs):
            if g.n <= k:
                mask |= 1 << i
        return PropertyView(self.universe, self.bits & mask)

    def first_difference(self, other: PropertyView) -> Graph | None:
        self._same(other)
        diff = self.bits ^ other.bits
        if not diff:
            return None
        return self.universe.graphs[(diff & -diff).bit_length() - 1]

    def __repr__(self) -> str:
        return f"PropertyView({len(self)}/{len(self.universe)} graphs, n={self.universe.n})"

    # -- export ----------------------------------------------------------

    def to_hex(self) -> str:
        width = (len(self.universe) + 3) // 4
        return format(self.bits, f"0{width}x") if width else ""

    def export(self) -> dict:
        return {"universe_n": self.universe.n, "checksum": self.universe.checksum(), "bits": self.to_hex()}

    @classmethod
    def from_export(cls, data: dict, universe: Universe) -> PropertyView:
        if data["universe_n"] != universe.n or data["checksum"] != universe.checksum():
            raise UniverseError("view was exported from a different universe")
        return cls(universe, int(data["bits"], 16) if data["bits"] else 0)


# -- closures ------------------------------------------------------------------


def induced_hereditary_closure(view: PropertyView) -> PropertyView:
    """Smallest induced-hereditary superset within the universe."""
    below = view.universe.induced_below()
    bits = 0
    for i in view.indices():
        bits |= below[i]
    return PropertyView(view.universe, bits)


def geq_closure(view: PropertyView) -> PropertyView:
    """Upward closure under induced supergraphs within the universe."""
    above = view.universe.induced_above()
    bits = 0
    for i in view.indices():
        bits |= above[i]
    return PropertyView(view.universe, bits)


def hereditary_closure_down(view: PropertyView) -> PropertyView:
    """Smallest subgraph-closed superset (vertex and edge deletions) within the universe."""
    below = view.universe.subgraphs_below()
    bits = 0
    for i in view.indices():
        bits |= below[i]
    return PropertyView(view.universe, bits)


def subgraph_up_closure(view: PropertyView) -> PropertyView:
    above = view.universe.subgraphs_above()
    bits = 0
    for i in view.indices():
        bits |= above[i]
    return PropertyView(view.universe, bits)


__all__ = [
    "GraphError",
    "PropertyView",
    "Universe",
    "UniverseError",
    "enumerate_universe",
    "geq_closure",
    "hereditary_closure_down",
    "induced_hereditary_closure",
    "subgraph_up_closure",
]
