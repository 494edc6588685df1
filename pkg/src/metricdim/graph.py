"""Graph representation and metric primitives.

Vertices are dense 0-based indices; external labels live in the CLI layer.
Adjacency is kept both as neighbor tuples and as per-vertex bitmasks, the
latter being the workhorse of the subset-search solvers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import InvalidEdge, NotConnected, TooLarge, TooSmall

# Hard cap on library graph order: distances fit 16 bits with huge headroom,
# and every exact solver saturates far below this anyway.
MAX_ORDER = 4096


def bits(mask: int) -> Iterator[int]:
    """Iterate set-bit indices of a mask in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    n: int
    neighbors: tuple[tuple[int, ...], ...]
    adj_bits: tuple[int, ...]
    m: int
    had_duplicate_edges: bool = False

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj_bits[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self.neighbors[u]:
                if u < v:
                    yield (u, v)

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def neighborhood_of_set(self, mask: int) -> int:
        """Union of neighborhoods of the vertices in ``mask``, minus the set."""
        nb = 0
        for v in bits(mask):
            nb |= self.adj_bits[v]
        return nb & ~mask

    def is_connected_subset(self, mask: int) -> bool:
        """Whether the induced subgraph on ``mask`` is connected (empty set: True)."""
        if mask == 0:
            return True
        start = mask & -mask
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj_bits[v]
            nxt &= mask & ~seen
            seen |= nxt
            frontier = nxt
        return seen == mask

    def is_connected(self) -> bool:
        return self.n == 0 or self.is_connected_subset(self.vertex_mask())

    def induced(self, keep: Sequence[int]) -> "Graph":
        """Induced subgraph on ``keep``; vertices are re-indexed in the given order."""
        index = {v: i for i, v in enumerate(keep)}
        edges = [
            (index[u], index[v])
            for u in keep
            for v in self.neighbors[u]
            if u < v and v in index
        ]
        return build_graph(len(keep), edges, _allow_small=True)

    def without_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise InvalidEdge(f"no edge {u}-{v} to delete")
        edges = [e for e in self.edges() if e != (min(u, v), max(u, v))]
        return build_graph(self.n, edges, _allow_small=True)


def build_graph(
    n: int,
    edges: Iterable[tuple[int, int]],
    *,
    _allow_small: bool = False,
) -> Graph:
    """Build a simple undirected graph; duplicate edges collapse with a warning flag.

    Raises InvalidEdge for self-loops or out-of-range endpoints, TooSmall for
    n < 2 (the solvers assume order at least two) and TooLarge beyond MAX_ORDER.
    """
    if n < 2 and not _allow_small:
        raise TooSmall(f"need at least 2 vertices, got {n}")
    if n > MAX_ORDER:
        raise TooLarge(f"n={n} exceeds the library cap {MAX_ORDER}")
    rows = [0] * n
    duplicates = False
    for u, v in edges:
        if u == v:
            raise InvalidEdge(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdge(f"edge ({u},{v}) out of range for n={n}")
        if rows[u] >> v & 1:
            duplicates = True
            continue
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    neighbors = tuple(tuple(bits(r)) for r in rows)
    m = sum(len(nb) for nb in neighbors) // 2
    return Graph(
        n=n,
        neighbors=neighbors,
        adj_bits=tuple(rows),
        m=m,
        had_duplicate_edges=duplicates,
    )


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances of a connected graph, with eccentricities."""

    n: int
    rows: tuple[tuple[int, ...], ...]
    ecc: tuple[int, ...]
    rad: int
    diam: int

    def d(self, u: int, v: int) -> int:
        return self.rows[u][v]


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex. Raises NotConnected on disconnected input."""
    full = g.vertex_mask()
    rows: list[tuple[int, ...]] = []
    adj = g.adj_bits
    for s in range(g.n):
        dist = [0] * g.n
        seen = 1 << s
        frontier = 1 << s
        level = 0
        while frontier:
            level += 1
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            nxt &= ~seen
            for v in bits(nxt):
                dist[v] = level
            seen |= nxt
            frontier = nxt
        if seen != full:
            raise NotConnected("graph is not connected")
        rows.append(tuple(dist))
    ecc = tuple(max(r) for r in rows)
    return DistanceMatrix(n=g.n, rows=tuple(rows), ecc=ecc, rad=min(ecc), diam=max(ecc))


def cut_vertices(g: Graph) -> frozenset[int]:
    """Articulation points of a connected graph (iterative lowpoint DFS)."""
    if not g.is_connected():
        raise NotConnected("cut vertices are defined here for connected graphs")
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    cut: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        root_children = 0
        stack: list[tuple[int, Iterator[int]]] = [(root, iter(g.neighbors[root]))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    parent[w] = v
                    if v == root:
                        root_children += 1
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, iter(g.neighbors[w])))
                    advanced = True
                    break
                elif w != parent[v]:
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if not advanced:
                stack.pop()
                p = parent[v]
                if p != -1:
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if p != root and low[v] >= disc[p]:
                        cut.add(p)
        if root_children >= 2:
            cut.add(root)
    return frozenset(cut)


@dataclass(frozen=True)
class TwinPartition:
    """Partition of V into maximal twin classes.

    u and w are twins when N(u)-{w} == N(w)-{u}; the relation is an
    equivalence, each class being a clique or an independent set.  Any
    resolving set must contain all but one vertex of every class, which
    yields the solver's cheap lower bound.
    """

    classes: tuple[tuple[int, ...], ...]
    class_masks: tuple[int, ...] = field(repr=False, default=())

    def lower_bound(self) -> int:
        return sum(len(c) - 1 for c in self.classes)

    def class_of(self, v: int) -> tuple[int, ...]:
        for c in self.classes:
            if v in c:
                return c
        raise KeyError(v)


def twin_partition(g: Graph) -> TwinPartition:
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    # Non-adjacent twins share an open neighborhood, adjacent twins a closed
    # one; grouping by both keys covers every twin pair.
    open_groups: dict[int, int] = {}
    closed_groups: dict[int, int] = {}
    for v in range(g.n):
        row = g.adj_bits[v]
        if row in open_groups:
            union(open_groups[row], v)
        else:
            open_groups[row] = v
        closed = row | (1 << v)
        if closed in closed_groups:
            union(closed_groups[closed], v)
        else:
            closed_groups[closed] = v
    by_root: dict[int, list[int]] = {}
    for v in range(g.n):
        by_root.setdefault(find(v), []).append(v)
    classes = tuple(tuple(sorted(c)) for _, c in sorted(by_root.items()))
    masks = tuple(sum(1 << v for v in c) for c in classes)
    return TwinPartition(classes=classes, class_masks=masks)
