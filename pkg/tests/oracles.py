"""Independent brute-force oracles; none of these use graphprops internals."""

from __future__ import annotations

from itertools import combinations, permutations, product

import networkx as nx


def atlas_counts(max_order: int = 7) -> list[int]:
    """Non-isomorphic graph counts per order 1..max_order from the networkx atlas."""
    counts = [0] * max_order
    for g in nx.graph_atlas_g():
        if 1 <= g.number_of_nodes() <= max_order:
            counts[g.number_of_nodes() - 1] += 1
    return counts


def labelled_dedup_count(n: int) -> int:
    """Distinct graphs on n labelled vertices up to relabelling, by minimising over permutations."""
    pairs = list(combinations(range(n), 2))
    perms = list(permutations(range(n)))
    seen = set()
    for bits in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
        best = min(tuple(sorted(tuple(sorted((p[a], p[b]))) for a, b in edges)) for p in perms)
        seen.add(best)
    return len(seen)


def adjacency(g) -> list[set[int]]:
    """Neighbour sets from any object exposing ``n`` and ``edges()``."""
    adj = [set() for _ in range(g.n)]
    for a, b in g.edges():
        adj[a].add(b)
        adj[b].add(a)
    return adj


def brute_isomorphic(g, h) -> bool:
    if g.n != h.n or len(g.edges()) != len(h.edges()):
        return False
    eg = {frozenset(e) for e in g.edges()}
    eh = {frozenset(e) for e in h.edges()}
    return any({frozenset((p[a], p[b])) for a, b in eg} == eh for p in permutations(range(g.n)))


def to_nx(g) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return out


def two_colourable(g) -> bool:
    """BFS 2-colouring."""
    adj = adjacency(g)
    colour: dict[int, int] = {}
    for s in range(g.n):
        if s in colour:
            continue
        colour[s] = 0
        queue = [s]
        while queue:
            v = queue.pop()
            for w in adj[v]:
                if w not in colour:
                    colour[w] = 1 - colour[v]
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return False
    return True


def is_edgeless(adj, part) -> bool:
    return all(not (adj[v] & part) for v in part)


def is_clique(adj, part) -> bool:
    return all(part - {v} <= adj[v] for v in part)


def checker(name: str, bound: int | None = None):
    """Membership of a vertex set for O, K, O(s), K(s)."""
    base = is_edgeless if name == "O" else is_clique

    def check(adj, part) -> bool:
        return (bound is None or len(part) <= bound) and base(adj, part)

    return check


def partition_oracle(g, checks) -> list[tuple[int, ...]]:
    """Every labelled assignment of vertices to len(checks) parts, tested part by part."""
    adj = adjacency(g)
    out = []
    for assignment in product(range(len(checks)), repeat=g.n):
        parts = [{v for v in range(g.n) if assignment[v] == j} for j in range(len(checks))]
        if all(c(adj, part) for c, part in zip(checks, parts)):
            out.append(assignment)
    return out


def is_split_oracle(g) -> bool:
    return bool(partition_oracle(g, [checker("O"), checker("K")]))


def clique_with_pendants_oracle(g) -> bool:
    """Some vertex subset is a clique; everything else is isolated or a leaf on its own clique vertex."""
    adj = adjacency(g)
    for r in range(g.n + 1):
        for c in combinations(range(g.n), r):
            clique = set(c)
            if not is_clique(adj, clique):
                continue
            hosts = []
            ok = True
            for v in range(g.n):
                if v in clique or not adj[v]:
                    continue
                if len(adj[v]) != 1 or not adj[v] <= clique:
                    ok = False
                    break
                hosts.append(next(iter(adj[v])))
            if ok and len(hosts) == len(set(hosts)):
                return True
    return False


def is_forest_oracle(g) -> bool:
    return nx.is_forest(to_nx(g)) if g.n else True
