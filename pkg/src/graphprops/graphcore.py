"""Small-graph kernel: bit-row graphs, canonical labelling, containment, compositions.

A graph is stored as ``n`` plus one integer bit row per vertex.  Equality and
hashing go through the canonical form, so two ``Graph`` values are equal exactly
when they are isomorphic.  Labelled access (``rows``) is still available for
algorithms that need vertex identities.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 16

VertexSet = int  # bit mask over the host graph's vertices


class GraphError(ValueError):
    pass


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Graph:
    """Finite simple graph on vertices ``0..n-1``; order 0 is the null graph."""

    __slots__ = ("n", "rows", "_key")

    def __init__(self, n: int, rows: Sequence[int] | None = None):
        if not 0 <= n <= MAX_ORDER:
            raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
        rows = tuple(rows) if rows is not None else (0,) * n
        if len(rows) != n:
            raise GraphError("row count does not match order")
        full = (1 << n) - 1
        for v, r in enumerate(rows):
            if r & ~full or r >> v & 1:
                raise GraphError(f"bad adjacency row for vertex {v}")
            for w in _bits(r):
                if not rows[w] >> v & 1:
                    raise GraphError(f"asymmetric edge {v}-{w}")
        self.n = n
        self.rows = rows
        self._key: tuple[int, int] | None = None

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...]) -> Graph:
        g = object.__new__(cls)
        g.n = n
        g.rows = rows
        g._key = None
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError("loops are not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    # -- identity ---------------------------------------------------------

    @property
    def key(self) -> tuple[int, int]:
        """``(order, canonical code)``; equal keys mean isomorphic graphs."""
        if self._key is None:
            self._key = (self.n, _canonical(self.n, self.rows)[0])
        return self._key

    @property
    def canonical(self) -> bool:
        return _canonical(self.n, self.rows)[1] == self.rows

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        if self.n != other.n or self.edge_count() != other.edge_count():
            return False
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __lt__(self, other: Graph) -> bool:
        return self.key < other.key

    def __repr__(self) -> str:
        return f"Graph({self.n}, {to_graph6(self)!r})"

    # -- basic queries ----------------------------------------------------

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.rows[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.rows]

    def edge_count(self) -> int:
        return sum(popcount(r) for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u]) if u < v]

    def non_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v in combinations(range(self.n), 2) if not self.rows[u] >> v & 1]

    @property
    def vertex_mask(self) -> VertexSet:
        return (1 << self.n) - 1

    def sub(self, mask: VertexSet) -> Graph:
        """Labelled induced subgraph on ``mask``, vertices renumbered in increasing order."""
        if mask & ~self.vertex_mask:
            raise GraphError("vertex set out of range")
        verts = list(_bits(mask))
        pos = {v: i for i, v in enumerate(verts)}
        rows = []
        for v in verts:
            r = 0
            for w in _bits(self.rows[v] & mask):
                r |= 1 << pos[w]
            rows.append(r)
        return Graph._trusted(len(verts), tuple(rows))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph whose vertex ``i`` is old vertex ``perm[i]``."""
        inv = {v: i for i, v in enumerate(perm)}
        rows = []
        for v in perm:
            r = 0
            for w in _bits(self.rows[v]):
                r |= 1 << inv[w]
            rows.append(r)
        return Graph._trusted(self.n, tuple(rows))


# -- canonical labelling ----------------------------------------------------


def _refine(rows: tuple[int, ...], cells: list[list[int]]) -> tuple[list[list[int]], tuple]:
    """Equitable refinement of an ordered partition; returns it with an invariant trace."""
    trace = []
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {v: tuple(popcount(rows[v] & m) for m in masks) for v in cell}
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                groups.setdefault(sig[v], []).append(v)
            if len(groups) == 1:
                out.append(cell)
                continue
            changed = True
            for s in sorted(groups):
                out.append(groups[s])
                trace.append((len(out), s))
        cells = out
        if not changed:
            trace.append(tuple(len(c) for c in cells))
            return cells, tuple(trace)


def _code(rows: tuple[int, ...], order: list[int]) -> int:
    code = 0
    n = len(order)
    for i in range(n):
        r = rows[order[i]]
        for j in range(i + 1, n):
            code = code << 1 | (r >> order[j] & 1)
    return code


@lru_cache(maxsize=1 << 18)
def _canonical(n: int, rows: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Return (canonical code, canonical rows) by individualisation-refinement.

    The initial partition orders vertices by degree.  Branches are compared by
    refinement trace first and only the lexicographically best trace is kept;
    within a target cell only one vertex per twin class is individualised.
    """
    if n == 0:
        return 0, ()
    degs = [popcount(r) for r in rows]
    start: dict[int, list[int]] = {}
    for v in range(n):
        start.setdefault(degs[v], []).append(v)
    cells = [start[d] for d in sorted(start)]

    best_trace: list = []
    best: list = [None, None]  # code, order

    def visit(cells: list[list[int]], depth: int, path: list) -> None:
        cells, tr = _refine(rows, cells)
        path = path + [tr]
        prefix = best_trace[: len(path)]
        if best[0] is not None or best_trace:
            if path < prefix:
                return
            if path > prefix:
                best_trace[:] = path
                best[0] = None
        else:
            best_trace[:] = path
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _code(rows, order)
            if best[0] is None or code > best[0]:
                best[0], best[1] = code, order
            return
        cell = cells[target]
        seen_twins: list[int] = []
        for v in cell:
            if any(_twins(rows, u, v) for u in seen_twins):
                continue
            seen_twins.append(v)
            rest = [u for u in cell if u != v]
            visit(cells[:target] + [[v], rest] + cells[target + 1 :], depth + 1, path)

    visit(cells, 0, [])
    order = best[1]
    g = Graph._trusted(n, rows).relabel(order)
    return best[0], g.rows


def _twins(rows: tuple[int, ...], u: int, v: int) -> bool:
    m = ~((1 << u) | (1 << v))
    return rows[u] & m == rows[v] & m


def canonical_form(g: Graph) -> Graph:
    """Representative labelling of ``g``'s isomorphism class (idempotent)."""
    code, rows = _canonical(g.n, g.rows)
    c = Graph._trusted(g.n, rows)
    c._key = (g.n, code)
    return c


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g == h


# -- compositions -----------------------------------------------------------


def _check_cap(n: int) -> None:
    if n > MAX_ORDER:
        raise GraphError(f"order {n} exceeds cap {MAX_ORDER}")


def disjoint_union(g: Graph, h: Graph) -> Graph:
    _check_cap(g.n + h.n)
    rows = g.rows + tuple(r << g.n for r in h.rows)
    return Graph._trusted(g.n + h.n, rows)


def join(g: Graph, h: Graph) -> Graph:
    _check_cap(g.n + h.n)
    left = g.vertex_mask
    right = h.vertex_mask << g.n
    rows = tuple(r | right for r in g.rows) + tuple((r << g.n) | left for r in h.rows)
    return Graph._trusted(g.n + h.n, rows)


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph._trusted(g.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(g.rows)))


def induced_subgraph(g: Graph, s: VertexSet | Iterable[int]) -> Graph:
    """Canonical induced subgraph on ``s``, given as a bit mask or as vertex numbers."""
    if not isinstance(s, int):
        vs = list(s)
        if any(not 0 <= v < g.n for v in vs):
            raise GraphError("vertex set out of range")
        s = sum(1 << v for v in set(vs))
    return canonical_form(g.sub(s))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise GraphError("loops are not allowed")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError("vertex out of range")
    if g.adjacent(u, v):
        raise GraphError(f"edge {u}-{v} already present")
    rows = list(g.rows)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph._trusted(g.n, tuple(rows))


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.adjacent(u, v):
        raise GraphError(f"edge {u}-{v} not present")
    rows = list(g.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph._trusted(g.n, tuple(rows))


def remove_vertex(g: Graph, v: int) -> Graph:
    return g.sub(g.vertex_mask & ~(1 << v))


def connected_components(g: Graph) -> list[VertexSet]:
    """Components as vertex masks, ordered by lowest vertex."""
    left = g.vertex_mask
    comps = []
    while left:
        frontier = left & -left
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.rows[v]
            frontier = nxt & ~comp
        comps.append(comp)
        left &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


# -- containment ------------------------------------------------------------


def _embeddings(host: Graph, pattern: Graph, induced: bool, avoid: int = 0) -> Iterator[list[int]]:
    """Yield maps pattern-vertex -> host-vertex (as lists) preserving adjacency."""
    k = pattern.n
    if k == 0:
        yield []
        return
    # pattern vertices in a connected-first, high-degree-first order
    order: list[int] = []
    placed = 0
    pdeg = pattern.degrees()
    while len(order) < k:
        frontier = [v for v in range(k) if not placed >> v & 1 and pattern.rows[v] & placed]
        pool = frontier or [v for v in range(k) if not placed >> v & 1]
        v = max(pool, key=lambda x: (pdeg[x], -x))
        order.append(v)
        placed |= 1 << v
    earlier_nbrs = []
    seen = 0
    for v in order:
        earlier_nbrs.append(pattern.rows[v] & seen)
        seen |= 1 << v
    hdeg = host.degrees()
    cmask = host.vertex_mask
    mapping = [0] * k
    image_bits = [0] * k  # image mask of the first i mapped vertices

    def rec(i: int, used: int) -> Iterator[list[int]]:
        if i == k:
            yield [mapping[v] for v in range(k)]
            return
        v = order[i]
        want = 0
        for u in _bits(earlier_nbrs[i]):
            want |= 1 << mapping[u]
        placed_img = used
        for x in _bits(cmask & ~used & ~avoid):
            if hdeg[x] < pdeg[v]:
                continue
            got = host.rows[x] & placed_img
            if induced:
                if got != want:
                    continue
            elif got & want != want:
                continue
            mapping[v] = x
            yield from rec(i + 1, used | 1 << x)

    yield from rec(0, 0)


def contains_induced(host: Graph, pattern: Graph) -> bool:
    """True iff ``pattern <= host`` (induced subgraph)."""
    if pattern.n > host.n or pattern.edge_count() > host.edge_count():
        return False
    if pattern.n == host.n:
        return pattern == host
    return next(_embeddings(host, pattern, True), None) is not None


def contains_subgraph(host: Graph, pattern: Graph) -> bool:
    """True iff ``pattern`` is a (not necessarily induced) subgraph of ``host``."""
    if pattern.n > host.n or pattern.edge_count() > host.edge_count():
        return False
    return next(_embeddings(host, pattern, False), None) is not None


def induced_copies(host: Graph, pattern: Graph, avoid: VertexSet = 0) -> Iterator[VertexSet]:
    """Distinct vertex sets of ``host`` (disjoint from ``avoid``) inducing ``pattern``."""
    seen = set()
    for m in _embeddings(host, pattern, True, avoid):
        mask = sum(1 << x for x in m)
        if mask not in seen:
            seen.add(mask)
            yield mask


def contains_disjoint_induced(host: Graph, g: Graph, h: Graph) -> bool:
    """True iff ``host`` has disjoint vertex sets inducing ``g`` and ``h``."""
    if g.n + h.n > host.n:
        return False
    for mask in induced_copies(host, g):
        if next(_embeddings(host, h, True, mask), None) is not None:
            return True
    return False


# -- named graphs -----------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._trusted(n, tuple(full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return join(empty_graph(a), empty_graph(b))


def star(k: int) -> Graph:
    return complete_bipartite(1, k)


def null_graph() -> Graph:
    return Graph(0)


# -- graph6 -----------------------------------------------------------------


def to_graph6(g: Graph) -> str:
    """Header-less graph6 encoding (orders up to 62)."""
    n = g.n
    if n > 62:
        raise GraphError("short graph6 form supports at most 62 vertices")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(g.rows[i] >> j & 1)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(63 + n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        out.append(chr(63 + val))
    return "".join(out)


def from_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise GraphError("empty graph6 string")
    n = ord(s[0]) - 63
    if not 0 <= n <= 62:
        raise GraphError(f"unsupported graph6 order byte {s[0]!r}")
    data = s[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(data) != need:
        raise GraphError(f"graph6 body has {len(data)} bytes, expected {need}")
    bits = []
    for ch in data:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise GraphError(f"invalid graph6 character {ch!r}")
        bits.extend(val >> (5 - t) & 1 for t in range(6))
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, rows)
