"""Exact brute-force solvers for metric dimension and its connected variants.

Search strategy shared by the cdim family: for each cardinality k, ascending
from a sound lower bound (twin classes plus the diameter floor), enumerate
connected vertex subsets duplicate-free by seeded growth with a per-branch
ban set, check each candidate's code table, and keep the lexicographically
smallest qualifying set.  Exceeding a cap is an error, never a silent
approximation.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

from .errors import EmptySet, InvalidAnchor, TooLarge
from .graph import DistanceMatrix, Graph, all_pairs_distances, bits, twin_partition

DIM_CAP = 24
ENUM_CAP = 16


class SolveResult(NamedTuple):
    value: int
    witness: tuple[int, ...]


@dataclass(frozen=True)
class ResolvingCertificate:
    """Full code table proving that a vertex set does or does not resolve."""

    set: tuple[int, ...]
    codes: dict[int, tuple[int, ...]]
    resolving: bool
    witness_pair: Optional[tuple[int, int]]


@dataclass(frozen=True)
class VertexProfile:
    """Connected metric dimension at every vertex, with center and periphery."""

    per_vertex: tuple[int, ...]
    rrad: int
    rdiam: int
    rc: tuple[int, ...]
    rp: tuple[int, ...]


def dim_floor_from_diameter(n: int, d: int) -> int:
    """Least k >= 1 with k + d**k >= n, a classical metric-dimension floor."""
    k = 1
    while k + d**k < n:
        k += 1
    return k


def check_resolving(g: Graph, dm: DistanceMatrix, s: Iterable[int]) -> ResolvingCertificate:
    """Certificate for the candidate set ``s`` (taken in ascending vertex order).

    The witness pair, when present, is the lexicographically smallest pair of
    vertices sharing a code.
    """
    members = tuple(sorted(set(s)))
    if not members:
        raise EmptySet("resolving-set candidates must be non-empty")
    if members[0] < 0 or members[-1] >= g.n:
        raise InvalidAnchor(f"vertices {members} not all within 0..{g.n - 1}")
    rows = dm.rows
    codes = {v: tuple(rows[v][u] for u in members) for v in range(g.n)}
    groups: dict[tuple[int, ...], list[int]] = {}
    for v in range(g.n):
        groups.setdefault(codes[v], []).append(v)
    collisions = [grp for grp in groups.values() if len(grp) >= 2]
    witness = min((grp[0], grp[1]) for grp in collisions) if collisions else None
    return ResolvingCertificate(
        set=members, codes=codes, resolving=witness is None, witness_pair=witness
    )


def _is_resolving(rows: Sequence[Sequence[int]], members: tuple[int, ...], base: int) -> bool:
    # Codes packed into one integer per vertex, base > diam, so digits never carry.
    seen = set()
    add = seen.add
    for row in rows:
        acc = 0
        for u in members:
            acc = acc * base + row[u]
        if acc in seen:
            return False
        add(acc)
    return True


def _twin_filter(mask: int, twin_reqs: Sequence[tuple[int, int]]) -> bool:
    for cmask, need in twin_reqs:
        if (mask & cmask).bit_count() < need:
            return False
    return True


# A growth state: (current mask, size, banned mask, neighborhood mask).
_State = tuple[int, int, int, int]


def _grow(adj: Sequence[int], cur: int, size: int, banned: int, nb: int, k: int) -> Iterator[int]:
    """All size-k connected-growth extensions of ``cur``, each exactly once.

    Extending only with neighbors of the current set and banning a candidate
    for the rest of its branch once its subtree is exhausted partitions the
    output family, so no visited-set is needed.
    """
    if size == k:
        yield cur
        return
    ext = nb & ~banned
    while ext:
        b = ext & -ext
        ext ^= b
        v = b.bit_length() - 1
        new_cur = cur | b
        yield from _grow(adj, new_cur, size + 1, banned, (nb | adj[v]) & ~new_cur, k)
        banned |= b


def _split_state(adj: Sequence[int], state: _State, k: int) -> list[_State]:
    """First-level branches of a growth state, for distribution to workers."""
    cur, size, banned, nb = state
    if size >= k:
        return [state]
    out: list[_State] = []
    ext = nb & ~banned
    while ext:
        b = ext & -ext
        ext ^= b
        v = b.bit_length() - 1
        new_cur = cur | b
        out.append((new_cur, size + 1, banned, (nb | adj[v]) & ~new_cur))
        banned |= b
    return out


def _root_states(g: Graph, k: int) -> list[_State]:
    """Seed states for anchor-free search: one per root, root = subset minimum."""
    states: list[_State] = []
    for root in range(g.n - k + 1):
        banned = (1 << root) - 1
        states.append((1 << root, 1, banned, g.adj_bits[root] & ~banned))
    return states


def _anchor_state(g: Graph, anchor_mask: int) -> _State:
    size = anchor_mask.bit_count()
    return (anchor_mask, size, 0, g.neighborhood_of_set(anchor_mask))


def _scan_states(
    g: Graph,
    rows: Sequence[Sequence[int]],
    base: int,
    k: int,
    states: Sequence[_State],
    twin_reqs: Sequence[tuple[int, int]],
    need_connectivity_check: bool,
) -> Optional[tuple[int, ...]]:
    """Lexicographically smallest resolving candidate of size k in these branches."""
    adj = g.adj_bits
    best: Optional[tuple[int, ...]] = None
    for state in states:
        cur, size, banned, nb = state
        for mask in _grow(adj, cur, size, banned, nb, k):
            if not _twin_filter(mask, twin_reqs):
                continue
            if need_connectivity_check and not g.is_connected_subset(mask):
                continue
            members = tuple(bits(mask))
            if _is_resolving(rows, members, base):
                if best is None or members < best:
                    best = members
    return best


def _scan_k_parallel(
    g: Graph,
    rows: Sequence[Sequence[int]],
    base: int,
    k: int,
    states: list[_State],
    twin_reqs: Sequence[tuple[int, int]],
    need_connectivity_check: bool,
    workers: int,
) -> Optional[tuple[int, ...]]:
    if workers <= 1:
        return _scan_states(g, rows, base, k, states, twin_reqs, need_connectivity_check)
    if len(states) < workers:
        split: list[_State] = []
        for st in states:
            split.extend(_split_state(g.adj_bits, st, k))
        states = split or states
    chunks: list[list[_State]] = [states[i::workers] for i in range(workers)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(
            pool.map(
                lambda ch: _scan_states(g, rows, base, k, ch, twin_reqs, need_connectivity_check),
                chunks,
            )
        )
    hits = [r for r in results if r is not None]
    return min(hits) if hits else None


def _prepare(g: Graph, dm: Optional[DistanceMatrix], cap: Optional[int], default_cap: int):
    effective_cap = default_cap if cap is None else cap
    if g.n > effective_cap:
        raise TooLarge(
            f"n={g.n} exceeds the solver cap {effective_cap}; pass cap={g.n} to override"
        )
    if dm is None:
        dm = all_pairs_distances(g)
    tp = twin_partition(g)
    twin_reqs = tuple(
        (mask, len(cls) - 1)
        for cls, mask in zip(tp.classes, tp.class_masks)
        if len(cls) >= 2
    )
    floor = max(1, tp.lower_bound(), dim_floor_from_diameter(g.n, dm.diam))
    return dm, tp, twin_reqs, floor


def dim_exact(
    g: Graph,
    dm: Optional[DistanceMatrix] = None,
    *,
    cap: Optional[int] = None,
    workers: int = 1,
) -> SolveResult:
    """Exact metric dimension with the lexicographically smallest witness."""
    dm, _, twin_reqs, floor = _prepare(g, dm, cap, DIM_CAP)
    rows = dm.rows
    base = dm.diam + 1

    def scan_first(args: tuple[int, int]) -> Optional[tuple[int, ...]]:
        first, k = args
        for rest in itertools.combinations(range(first + 1, g.n), k - 1):
            members = (first, *rest)
            mask = 0
            for u in members:
                mask |= 1 << u
            if not _twin_filter(mask, twin_reqs):
                continue
            if _is_resolving(rows, members, base):
                return members
        return None

    for k in range(floor, g.n):
        firsts = [(first, k) for first in range(g.n - k + 1)]
        if workers <= 1:
            for args in firsts:
                hit = scan_first(args)
                if hit is not None:
                    return SolveResult(k, hit)
        else:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                for hit in pool.map(scan_first, firsts):
                    if hit is not None:
                        return SolveResult(k, hit)
    raise AssertionError("unreachable: deleting any one vertex leaves a resolving set")


def cdim_at_set(
    g: Graph,
    anchor: Iterable[int] = (),
    dm: Optional[DistanceMatrix] = None,
    *,
    cap: Optional[int] = None,
    workers: int = 1,
) -> SolveResult:
    """Minimum connected resolving set containing ``anchor`` (may be empty).

    An empty anchor computes the plain connected metric dimension; a singleton
    anchor the connected metric dimension at that vertex.
    """
    anchor_set = frozenset(anchor)
    if any(v < 0 or v >= g.n for v in anchor_set):
        raise InvalidAnchor(f"anchor {sorted(anchor_set)} not within 0..{g.n - 1}")
    dm, _, twin_reqs, floor = _prepare(g, dm, cap, DIM_CAP)
    rows = dm.rows
    base = dm.diam + 1
    anchor_mask = 0
    for v in anchor_set:
        anchor_mask |= 1 << v

    floor = max(floor, len(anchor_set))
    for k in range(floor, g.n + 1):
        if anchor_mask:
            states = [_anchor_state(g, anchor_mask)]
            need_check = not g.is_connected_subset(anchor_mask)
        else:
            states = _root_states(g, k)
            need_check = False
        best = _scan_k_parallel(g, rows, base, k, states, twin_reqs, need_check, workers)
        if best is not None:
            return SolveResult(k, best)
    raise AssertionError("unreachable: the full vertex set resolves any connected graph")


def cdim_exact(
    g: Graph,
    dm: Optional[DistanceMatrix] = None,
    *,
    cap: Optional[int] = None,
    workers: int = 1,
) -> SolveResult:
    """Exact connected metric dimension with its lexicographically smallest witness."""
    return cdim_at_set(g, (), dm, cap=cap, workers=workers)


def vertex_profile(
    g: Graph,
    dm: Optional[DistanceMatrix] = None,
    *,
    cap: Optional[int] = None,
    workers: int = 1,
) -> VertexProfile:
    """Connected metric dimension at every vertex, in one sweep per cardinality.

    A vertex's value is the smallest k for which some connected resolving
    k-set contains it, so marking members of every resolving set found while
    k ascends yields the whole table without per-vertex searches.
    """
    dm, _, twin_reqs, floor = _prepare(g, dm, cap, DIM_CAP)
    rows = dm.rows
    base = dm.diam + 1
    adj = g.adj_bits
    values: list[Optional[int]] = [None] * g.n

    def sweep_chunk(args: tuple[int, list[_State]]) -> int:
        k, states = args
        marked = 0
        for cur, size, banned, nb in states:
            for mask in _grow(adj, cur, size, banned, nb, k):
                if not _twin_filter(mask, twin_reqs):
                    continue
                members = tuple(bits(mask))
                if _is_resolving(rows, members, base):
                    marked |= mask
        return marked

    for k in range(floor, g.n):
        if all(v is not None for v in values):
            break
        states = _root_states(g, k)
        if workers <= 1:
            marked = sweep_chunk((k, states))
        else:
            chunks = [(k, states[i::workers]) for i in range(workers)]
            with ThreadPoolExecutor(max_workers=workers) as pool:
                marked = 0
                for part in pool.map(sweep_chunk, chunks):
                    marked |= part
        for v in bits(marked):
            if values[v] is None:
                values[v] = k
    # Deleting any fixed non-cut vertex leaves a connected resolving set, so
    # every vertex is marked by k = n-1 at the latest.
    per_vertex = tuple(v if v is not None else g.n - 1 for v in values)
    rrad = min(per_vertex)
    rdiam = max(per_vertex)
    rc = tuple(v for v in range(g.n) if per_vertex[v] == rrad)
    rp = tuple(v for v in range(g.n) if per_vertex[v] == rdiam)
    return VertexProfile(per_vertex=per_vertex, rrad=rrad, rdiam=rdiam, rc=rc, rp=rp)


def enumerate_min_resolving_sets(
    g: Graph,
    dm: Optional[DistanceMatrix] = None,
    *,
    cap: Optional[int] = None,
) -> list[tuple[int, ...]]:
    """All minimum resolving sets, in lexicographic order."""
    effective_cap = ENUM_CAP if cap is None else cap
    if g.n > effective_cap:
        raise TooLarge(
            f"n={g.n} exceeds the enumeration cap {effective_cap}; pass cap={g.n} to override"
        )
    if dm is None:
        dm = all_pairs_distances(g)
    k = dim_exact(g, dm, cap=max(DIM_CAP, effective_cap)).value
    tp = twin_partition(g)
    twin_reqs = tuple(
        (mask, len(cls) - 1)
        for cls, mask in zip(tp.classes, tp.class_masks)
        if len(cls) >= 2
    )
    rows = dm.rows
    base = dm.diam + 1
    out: list[tuple[int, ...]] = []
    for members in itertools.combinations(range(g.n), k):
        mask = 0
        for u in members:
            mask |= 1 << u
        if not _twin_filter(mask, twin_reqs):
            continue
        if _is_resolving(rows, members, base):
            out.append(members)
    return out
