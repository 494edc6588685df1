"""Shared test oracles, all implemented independently of the library's
algorithms: plain dict/queue BFS, DFS connectivity, and exhaustive
subset searches over itertools combinations."""

from __future__ import annotations

import itertools
from collections import deque

from metricdim import Graph, build_graph


def naive_bfs(g: Graph, source: int, removed: frozenset[int] = frozenset()) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in g.neighbors[v]:
            if u not in dist and u not in removed:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def naive_all_pairs(g: Graph) -> list[dict[int, int]]:
    return [naive_bfs(g, s) for s in range(g.n)]


def naive_is_connected(g: Graph, removed: frozenset[int] = frozenset()) -> bool:
    alive = [v for v in range(g.n) if v not in removed]
    if not alive:
        return True
    return len(naive_bfs(g, alive[0], removed)) == len(alive)


def naive_cut_vertices(g: Graph) -> set[int]:
    return {v for v in range(g.n) if not naive_is_connected(g, frozenset({v}))}


def naive_resolves(dists: list[dict[int, int]], members: tuple[int, ...], n: int) -> bool:
    codes = {tuple(dists[v][u] for u in members) for v in range(n)}
    return len(codes) == n


def subset_connected(g: Graph, members: tuple[int, ...]) -> bool:
    if not members:
        return True
    inside = set(members)
    seen = {members[0]}
    queue = deque([members[0]])
    while queue:
        v = queue.popleft()
        for u in g.neighbors[v]:
            if u in inside and u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == len(members)


def brute_dim(g: Graph) -> tuple[int, tuple[int, ...]]:
    dists = naive_all_pairs(g)
    for k in range(1, g.n + 1):
        for comb in itertools.combinations(range(g.n), k):
            if naive_resolves(dists, comb, g.n):
                return k, comb
    raise AssertionError("unreachable")


def brute_cdim_at(g: Graph, anchor: tuple[int, ...] = ()) -> tuple[int, tuple[int, ...]]:
    dists = naive_all_pairs(g)
    anchor_set = set(anchor)
    for k in range(max(1, len(anchor_set)), g.n + 1):
        for comb in itertools.combinations(range(g.n), k):
            if not anchor_set <= set(comb):
                continue
            if not subset_connected(g, comb):
                continue
            if naive_resolves(dists, comb, g.n):
                return k, comb
    raise AssertionError("unreachable")


def brute_cdim(g: Graph) -> tuple[int, tuple[int, ...]]:
    return brute_cdim_at(g, ())


def brute_min_resolving_sets(g: Graph) -> list[tuple[int, ...]]:
    dists = naive_all_pairs(g)
    k = brute_dim(g)[0]
    return [
        comb
        for comb in itertools.combinations(range(g.n), k)
        if naive_resolves(dists, comb, g.n)
    ]


def graph_from_nx(nxg) -> Graph:
    mapping = {node: i for i, node in enumerate(sorted(nxg.nodes()))}
    edges = [(mapping[u], mapping[v]) for u, v in nxg.edges()]
    return build_graph(nxg.number_of_nodes(), edges)
