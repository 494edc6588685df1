"""Deterministic generators for the parametric graph families used throughout.

Every generator returns ``(Graph, labels)`` where ``labels[i]`` is the
figure-style name of vertex ``i``, so tests and reports can speak in names
like ``u0`` or ``w3`` instead of indices.  All generators keep the property
that every vertex beyond the first has a lower-indexed neighbor, which lets
the CLI write edge lists whose parse round-trips to the identical indexing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import GenerationFailed, InvalidSpec, RuleViolation
from .graph import Graph, build_graph

Labeled = tuple[Graph, tuple[str, ...]]


@dataclass(frozen=True)
class FamilySpec:
    """Tagged parametric description of a graph family instance."""

    kind: str
    params: tuple = ()

    def text(self) -> str:
        k, p = self.kind, self.params
        if k in ("petersen", "k33sub", "thetatails"):
            return k
        if k in ("path", "cycle", "complete", "star", "wheel", "fantail", "kite", "vdel"):
            return f"{k}:{p[0]}"
        if k in ("multipartite", "bouquet"):
            return f"{k}:" + ",".join(str(x) for x in p[0])
        if k == "grid":
            return f"grid:{p[0]}x{p[1]}"
        if k in ("paddle", "fork", "edel"):
            return f"{k}:{p[0]},{p[1]}"
        if k == "sun":
            return f"sun:{p[0]}:" + ",".join(str(x) for x in p[1])
        if k == "fr":
            return f"fr:{p[0]}:{p[1]}"
        if k == "randtree":
            return f"randtree:{p[0]}:{p[1]}"
        if k == "rand":
            return f"rand:{p[0]}:{p[1]}:{p[2]}"
        raise InvalidSpec(f"unknown family kind {k!r}")


def _fail(msg: str) -> None:
    raise InvalidSpec(msg)


def path(n: int) -> Labeled:
    n >= 2 or _fail("path needs n ≥ 2")
    g = build_graph(n, [(i, i + 1) for i in range(n - 1)])
    return g, tuple(f"u{i + 1}" for i in range(n))


def cycle(n: int) -> Labeled:
    n >= 3 or _fail("cycle needs n ≥ 3")
    g = build_graph(n, [(i, (i + 1) % n) for i in range(n)])
    return g, tuple(f"u{i + 1}" for i in range(n))


def complete(n: int) -> Labeled:
    n >= 2 or _fail("complete needs n ≥ 2")
    g = build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    return g, tuple(f"u{i + 1}" for i in range(n))


def star(n: int) -> Labeled:
    """Star on n vertices total: one center joined to n-1 leaves."""
    n >= 2 or _fail("star needs n ≥ 2")
    g = build_graph(n, [(0, i) for i in range(1, n)])
    return g, ("w",) + tuple(f"l{i}" for i in range(1, n))


def complete_multipartite(parts: Sequence[int]) -> Labeled:
    parts = tuple(sorted(parts))
    len(parts) >= 2 or _fail("multipartite needs k ≥ 2 parts")
    all(a >= 1 for a in parts) or _fail("part sizes must be ≥ 1")
    boundaries = []
    start = 0
    labels = []
    for i, a in enumerate(parts, start=1):
        boundaries.append(range(start, start + a))
        labels.extend(f"w{i}.{j}" for j in range(1, a + 1))
        start += a
    edges = [
        (u, v)
        for bi in range(len(parts))
        for bj in range(bi + 1, len(parts))
        for u in boundaries[bi]
        for v in boundaries[bj]
    ]
    return build_graph(start, edges), tuple(labels)


def wheel(n: int) -> Labeled:
    """Wheel on n+1 vertices: rim cycle u1..un plus a hub w joined to all."""
    n >= 3 or _fail("wheel needs rim length n ≥ 3")
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, n) for i in range(n)]
    return build_graph(n + 1, edges), tuple(f"u{i + 1}" for i in range(n)) + ("w",)


def petersen() -> Labeled:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    labels = tuple(f"u{i + 1}" for i in range(5)) + tuple(f"w{i + 1}" for i in range(5))
    return build_graph(10, edges), labels


def grid(s: int, t: int) -> Labeled:
    """Cartesian product of paths, row-major: vertex (i,j) at index (i-1)*t + (j-1)."""
    (s >= 2 and t >= 2) or _fail("grid needs s,t ≥ 2")

    def idx(i: int, j: int) -> int:
        return (i - 1) * t + (j - 1)

    edges = []
    for i in range(1, s + 1):
        for j in range(1, t + 1):
            if j < t:
                edges.append((idx(i, j), idx(i, j + 1)))
            if i < s:
                edges.append((idx(i, j), idx(i + 1, j)))
    labels = tuple(f"u{i}.w{j}" for i in range(1, s + 1) for j in range(1, t + 1))
    return build_graph(s * t, edges), labels


def bouquet(lengths: Sequence[int]) -> Labeled:
    """m ≥ 2 cycles sharing exactly one vertex w; cycle i walked as u{i}.1..u{i}.(c-1)."""
    lengths = tuple(lengths)
    len(lengths) >= 2 or _fail("bouquet needs m ≥ 2 cycles")
    all(c >= 3 for c in lengths) or _fail("cycle lengths must be ≥ 3")
    labels = ["w"]
    edges = []
    nxt = 1
    for i, c in enumerate(lengths, start=1):
        ring = list(range(nxt, nxt + c - 1))
        nxt += c - 1
        labels.extend(f"u{i}.{t}" for t in range(1, c))
        edges.append((0, ring[0]))
        edges.extend((ring[j], ring[j + 1]) for j in range(len(ring) - 1))
        edges.append((ring[-1], 0))
    return build_graph(nxt, edges), tuple(labels)


def paddle(a: int, b: int) -> Labeled:
    """Clique u0..u(a-1) with a pendant path w1..wb hanging off u0."""
    a >= 3 or _fail("paddle needs clique size a ≥ 3")
    b >= 1 or _fail("paddle needs tail length b ≥ 1")
    edges = [(i, j) for i in range(a) for j in range(i + 1, a)]
    edges.append((0, a))
    edges.extend((a + j, a + j + 1) for j in range(b - 1))
    labels = tuple(f"u{i}" for i in range(a)) + tuple(f"w{j + 1}" for j in range(b))
    return build_graph(a + b, edges), labels


def fork(r: int, n: int) -> Labeled:
    """Path u1..ur with the n-r independent vertices l1.. joined to ur."""
    (2 <= r <= n - 2) or _fail("fork needs 2 ≤ r ≤ n-2")
    edges = [(i, i + 1) for i in range(r - 1)]
    edges += [(r - 1, r - 1 + i) for i in range(1, n - r + 1)]
    labels = tuple(f"u{i + 1}" for i in range(r)) + tuple(f"l{i + 1}" for i in range(n - r))
    return build_graph(n, edges), labels


def generalized_sun(m: int, legs: Sequence[int]) -> Labeled:
    """Cycle u1..um with a pendant path of legs[i-1] vertices at each u_i (0 = none)."""
    m >= 3 or _fail("sun needs cycle length m ≥ 3")
    len(legs) == m or _fail(f"need exactly {m} leg lengths")
    all(x >= 0 for x in legs) or _fail("leg lengths must be ≥ 0")
    edges = [(i, (i + 1) % m) for i in range(m)]
    labels = [f"u{i + 1}" for i in range(m)]
    nxt = m
    for i, leg in enumerate(legs):
        prev = i
        for t in range(1, leg + 1):
            edges.append((prev, nxt))
            labels.append(f"u{i + 1}.{t}")
            prev = nxt
            nxt += 1
    return build_graph(nxt, edges), tuple(labels)


@dataclass(frozen=True)
class FrLevel:
    """Presence flags and edge choices for one level of a layered two-anchor graph.

    ``y_attach`` selects how a level's middle vertex reaches the level below:
    ``"steps"`` uses the two side vertices beneath it, ``"prev"`` the middle
    vertex beneath it, ``"both"`` both, and ``"auto"`` picks steps when
    available, else prev.  ``intra`` lists optional same-level edges among
    ``{"xy", "xz", "yz"}``.
    """

    x: bool = False
    y: bool = False
    z: bool = False
    y_attach: str = "auto"
    intra: frozenset = field(default_factory=frozenset)


def fr_graph(levels: Sequence[FrLevel]) -> Labeled:
    """Member of the layered family resolved by the adjacent anchor pair (u, w).

    Validity rules (violations raise RuleViolation naming the rule):
      R1  vertices are u, w and x_a/y_a/z_a for levels a = 1..r;
      R2  x_1 attaches to u;  R3  z_1 attaches to w;  R4  y_1 attaches to both;
      R5  x_a (a ≥ 2) requires x_{a-1} and the edge between them;
      R6  z_a likewise on the z side;
      R7  y_a (a ≥ 2) requires x_{a-1} and z_{a-1} (steps) or y_{a-1} (prev);
      R8  edges inside a level (xy, xz, yz) are optional;
      R9  no other edges exist.
    """
    labels = ["u", "w"]
    index: dict[str, int] = {"u": 0, "w": 1}
    edges: list[tuple[int, int]] = [(0, 1)]

    def add_vertex(name: str) -> None:
        index[name] = len(labels)
        labels.append(name)

    def add_edge(a: str, b: str) -> None:
        edges.append((index[a], index[b]))

    present: dict[str, bool] = {}
    for a, level in enumerate(levels, start=1):
        for role, flag in (("x", level.x), ("y", level.y), ("z", level.z)):
            present[f"{role}{a}"] = flag
        if level.x:
            if a == 1:
                add_vertex("x1")
                add_edge("x1", "u")
            elif present.get(f"x{a - 1}"):
                add_vertex(f"x{a}")
                add_edge(f"x{a}", f"x{a - 1}")
            else:
                raise RuleViolation("R5", f"x{a} needs x{a - 1} present")
        if level.z:
            if a == 1:
                add_vertex("z1")
                add_edge("z1", "w")
            elif present.get(f"z{a - 1}"):
                add_vertex(f"z{a}")
                add_edge(f"z{a}", f"z{a - 1}")
            else:
                raise RuleViolation("R6", f"z{a} needs z{a - 1} present")
        if level.y:
            add_vertex(f"y{a}")
            if a == 1:
                add_edge("y1", "u")
                add_edge("y1", "w")
            else:
                steps_ok = present.get(f"x{a - 1}") and present.get(f"z{a - 1}")
                prev_ok = present.get(f"y{a - 1}")
                attach = level.y_attach
                if attach == "auto":
                    attach = "steps" if steps_ok else "prev"
                if attach in ("steps", "both"):
                    if not steps_ok:
                        raise RuleViolation("R7", f"y{a} needs x{a - 1} and z{a - 1}")
                    add_edge(f"y{a}", f"x{a - 1}")
                    add_edge(f"y{a}", f"z{a - 1}")
                if attach in ("prev", "both"):
                    if not prev_ok:
                        raise RuleViolation("R7", f"y{a} needs y{a - 1}")
                    add_edge(f"y{a}", f"y{a - 1}")
                if attach not in ("steps", "prev", "both"):
                    raise RuleViolation("R7", f"unknown y_attach {attach!r}")
        for pair in sorted(level.intra):
            if pair not in ("xy", "xz", "yz"):
                raise RuleViolation("R8", f"unknown intra-level edge {pair!r}")
            p, q = f"{pair[0]}{a}", f"{pair[1]}{a}"
            if not (present.get(p) and present.get(q)):
                raise RuleViolation("R8", f"intra edge {pair} at level {a} needs both endpoints")
            add_edge(p, q)
    return build_graph(len(labels), edges), tuple(labels)


def fr_sample(r: int, seed: int) -> Labeled:
    """Random member with at most r levels; presence flags are sampled then
    repaired downward so the construction rules always hold."""
    r >= 0 or _fail("fr needs r ≥ 0")
    rng = random.Random(seed)
    levels: list[FrLevel] = []
    prev = FrLevel(x=True, y=True, z=True)  # level-0 stand-in: u and w support anything
    for a in range(1, r + 1):
        x = rng.random() < 0.7 and (a == 1 or prev.x)
        z = rng.random() < 0.7 and (a == 1 or prev.z)
        y_want = rng.random() < 0.6
        steps_ok = a == 1 or (prev.x and prev.z)
        prev_ok = a == 1 or prev.y
        y = y_want and (steps_ok or prev_ok)
        if y and steps_ok and prev_ok:
            attach = rng.choice(["steps", "prev", "both"])
        elif y and steps_ok:
            attach = "steps"
        else:
            attach = "prev"
        intra = set()
        for pair in ("xy", "xz", "yz"):
            here = {"x": x, "y": y, "z": z}
            if here[pair[0]] and here[pair[1]] and rng.random() < 0.4:
                intra.add(pair)
        level = FrLevel(x=x, y=y, z=z, y_attach=attach, intra=frozenset(intra))
        levels.append(level)
        prev = level
    return fr_graph(levels)


def kite(k: int) -> Labeled:
    """Complete graph on u1..u(k+2) with the edge u1-u(k+2) subdivided once (s)."""
    k >= 3 or _fail("kite needs k ≥ 3")
    n = k + 2
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if not (i == 0 and j == n - 1)
    ]
    edges += [(0, n), (n - 1, n)]
    return build_graph(n + 1, edges), tuple(f"u{i + 1}" for i in range(n)) + ("s",)


def subdivided_k33() -> Labeled:
    """Bipartite u1..u3 / w1..w3 with u2w2 subdivided twice and u3w1, u3w2 once."""
    labels = ("u1", "u2", "u3", "w1", "w2", "w3", "a1", "a2", "b1", "b2")
    ix = {name: i for i, name in enumerate(labels)}
    raw = [
        ("u1", "w1"), ("u1", "w2"), ("u1", "w3"),
        ("u2", "w1"), ("u2", "w3"),
        ("u3", "w3"),
        ("u2", "a1"), ("a1", "a2"), ("a2", "w2"),
        ("u3", "b1"), ("b1", "w1"),
        ("u3", "b2"), ("b2", "w2"),
    ]
    return build_graph(10, [(ix[a], ix[b]) for a, b in raw]), labels


def theta_tails() -> Labeled:
    """Two internal 4-vertex paths from b to c, with pendant edges a-b and c-d."""
    labels = (
        "a", "b",
        "p1.1", "p1.2", "p1.3", "p1.4",
        "p2.1", "p2.2", "p2.3", "p2.4",
        "c", "d",
    )
    ix = {name: i for i, name in enumerate(labels)}
    raw = [("a", "b")]
    for arm in ("p1", "p2"):
        raw.append(("b", f"{arm}.1"))
        raw.extend((f"{arm}.{t}", f"{arm}.{t + 1}") for t in range(1, 4))
        raw.append((f"{arm}.4", "c"))
    raw.append(("c", "d"))
    return build_graph(12, [(ix[a], ix[b]) for a, b in raw]), labels


def fan_tail(n: int) -> Labeled:
    """Path u1..u4 whose every vertex is joined to w1, the head of a pendant path."""
    n >= 6 or _fail("fantail needs n ≥ 6")
    edges = [(0, 1), (1, 2), (2, 3)]
    edges += [(i, 4) for i in range(4)]
    edges += [(4 + j, 5 + j) for j in range(n - 5)]
    labels = ("u1", "u2", "u3", "u4") + tuple(f"w{j + 1}" for j in range(n - 4))
    return build_graph(n, edges), labels


def vdel_pair(k: int) -> tuple[Labeled, Labeled]:
    """Graph G and the tree G-v: a (k+2)-path with leaves at u1 and uk, where v
    joins those two leaves."""
    k >= 6 or _fail("vdel needs k ≥ 6")
    # indices: u0..u(k+1) = 0..k+1, l1 = k+2, lk = k+3, v = k+4
    tree_edges = [(i, i + 1) for i in range(k + 1)]
    tree_edges += [(1, k + 2), (k, k + 3)]
    labels_tree = tuple(f"u{i}" for i in range(k + 2)) + ("l1", f"l{k}")
    g_edges = tree_edges + [(k + 2, k + 4), (k + 3, k + 4)]
    labels_g = labels_tree + ("v",)
    return (
        (build_graph(k + 5, g_edges), labels_g),
        (build_graph(k + 4, tree_edges), labels_tree),
    )


def vdel(k: int) -> Labeled:
    return vdel_pair(k)[0]


def edel_pair(k: int, a: int) -> tuple[Labeled, Labeled]:
    """Graph G and the spider G-e: center w with a long leg l1,s1..s(a-1), legs of
    length two to l2..l(k-1), a pendant lk, and the extra edge e = l1-s3."""
    k >= 3 or _fail("edel needs k ≥ 3 legs")
    a >= 4 or _fail("edel needs long-leg length a ≥ 4")
    # indices: l1 = 0, s1..s(a-1) = 1..a-1, w = a, then per middle leg (t, l), lk last
    labels = ["l1"] + [f"s{t}" for t in range(1, a)] + ["w"]
    edges = [(i, i + 1) for i in range(a)]
    w = a
    nxt = a + 1
    for i in range(2, k):
        edges.append((w, nxt))
        labels.append(f"t{i}")
        edges.append((nxt, nxt + 1))
        labels.append(f"l{i}")
        nxt += 2
    edges.append((w, nxt))
    labels.append(f"l{k}")
    nxt += 1
    tree = build_graph(nxt, edges), tuple(labels)
    g = build_graph(nxt, edges + [(0, 3)]), tuple(labels)
    return g, tree


def edel(k: int, a: int) -> Labeled:
    return edel_pair(k, a)[0]


def _bfs_relabel(n: int, edges: list[tuple[int, int]]) -> list[tuple[int, int]]:
    # Relabel by BFS from 0 so each vertex beyond the first has a smaller neighbor.
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    order = [0]
    seen = {0}
    head = 0
    while head < len(order):
        v = order[head]
        head += 1
        for u in sorted(adj[v]):
            if u not in seen:
                seen.add(u)
                order.append(u)
    new = {v: i for i, v in enumerate(order)}
    return [(min(new[u], new[v]), max(new[u], new[v])) for u, v in edges]


def random_tree(n: int, seed: int) -> Labeled:
    """Uniform random labeled tree via a random vertex sequence decode."""
    n >= 2 or _fail("randtree needs n ≥ 2")
    rng = random.Random(seed)
    if n == 2:
        edges = [(0, 1)]
    else:
        seq = [rng.randrange(n) for _ in range(n - 2)]
        degree = [1] * n
        for v in seq:
            degree[v] += 1
        import heapq

        leaves = [v for v in range(n) if degree[v] == 1]
        heapq.heapify(leaves)
        edges = []
        for v in seq:
            leaf = heapq.heappop(leaves)
            edges.append((leaf, v))
            degree[v] -= 1
            if degree[v] == 1:
                heapq.heappush(leaves, v)
        u, w = sorted(leaves)
        edges.append((u, w))
    g = build_graph(n, _bfs_relabel(n, edges))
    return g, tuple(f"v{i + 1}" for i in range(n))


def random_connected(n: int, p: float, seed: int) -> Labeled:
    """Edge-probability sample conditioned on connectivity by rejection."""
    n >= 2 or _fail("rand needs n ≥ 2")
    (0 < p <= 1) or _fail("rand needs edge probability 0 < p ≤ 1")
    rng = random.Random(seed)
    for _ in range(10_000):
        edges = [
            (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
        ]
        g = build_graph(n, edges)
        if g.is_connected():
            g = build_graph(n, _bfs_relabel(n, edges))
            return g, tuple(f"v{i + 1}" for i in range(n))
    raise GenerationFailed(f"no connected sample in 10000 draws (n={n}, p={p})")


_GENERATORS = {
    "path": lambda p: path(p[0]),
    "cycle": lambda p: cycle(p[0]),
    "complete": lambda p: complete(p[0]),
    "star": lambda p: star(p[0]),
    "multipartite": lambda p: complete_multipartite(p[0]),
    "wheel": lambda p: wheel(p[0]),
    "petersen": lambda p: petersen(),
    "grid": lambda p: grid(p[0], p[1]),
    "bouquet": lambda p: bouquet(p[0]),
    "paddle": lambda p: paddle(p[0], p[1]),
    "fork": lambda p: fork(p[0], p[1]),
    "sun": lambda p: generalized_sun(p[0], p[1]),
    "fr": lambda p: fr_sample(p[0], p[1]),
    "kite": lambda p: kite(p[0]),
    "k33sub": lambda p: subdivided_k33(),
    "thetatails": lambda p: theta_tails(),
    "fantail": lambda p: fan_tail(p[0]),
    "vdel": lambda p: vdel(p[0]),
    "edel": lambda p: edel(p[0], p[1]),
    "randtree": lambda p: random_tree(p[0], p[1]),
    "rand": lambda p: random_connected(p[0], p[1], p[2]),
}


def generate(spec: FamilySpec | str) -> Labeled:
    """Instantiate a family spec (object or canonical text) deterministically."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    if spec.kind not in _GENERATORS:
        raise InvalidSpec(f"unknown family kind {spec.kind!r}")
    return _GENERATORS[spec.kind](spec.params)


def parse_spec(text: str, *, default_seed: Optional[int] = None) -> FamilySpec:
    """Parse the canonical text grammar, e.g. wheel:9, grid:7x4, sun:8:1,0,3,1,0,2,0,0."""
    parts = text.strip().split(":")
    kind = parts[0]
    args = parts[1:]

    def ints(s: str) -> tuple[int, ...]:
        try:
            return tuple(int(tok) for tok in s.split(","))
        except ValueError as exc:
            raise InvalidSpec(f"bad integer list {s!r} in {text!r}") from exc

    def one_int(s: str) -> int:
        try:
            return int(s)
        except ValueError as exc:
            raise InvalidSpec(f"bad integer {s!r} in {text!r}") from exc

    def seed_of(s: Optional[str]) -> int:
        if s is None or s == "":
            if default_seed is None:
                raise InvalidSpec(f"{text!r} needs a seed (or pass --seed)")
            return default_seed
        return one_int(s)

    try:
        if kind in ("petersen", "k33sub", "thetatails"):
            return FamilySpec(kind)
        if kind in ("path", "cycle", "complete", "star", "wheel", "fantail", "kite", "vdel"):
            return FamilySpec(kind, (one_int(args[0]),))
        if kind in ("multipartite", "bouquet"):
            return FamilySpec(kind, (ints(args[0]),))
        if kind == "grid":
            s, t = args[0].split("x")
            return FamilySpec(kind, (one_int(s), one_int(t)))
        if kind in ("paddle", "fork", "edel"):
            a, b = ints(args[0])
            return FamilySpec(kind, (a, b))
        if kind == "sun":
            return FamilySpec(kind, (one_int(args[0]), ints(args[1])))
        if kind == "fr":
            return FamilySpec(kind, (one_int(args[0]), seed_of(args[1] if len(args) > 1 else None)))
        if kind == "randtree":
            return FamilySpec(
                kind, (one_int(args[0]), seed_of(args[1] if len(args) > 1 else None))
            )
        if kind == "rand":
            return FamilySpec(
                kind,
                (
                    one_int(args[0]),
                    float(args[1]),
                    seed_of(args[2] if len(args) > 2 else None),
                ),
            )
    except (IndexError, ValueError) as exc:
        raise InvalidSpec(f"malformed family spec {text!r}") from exc
    raise InvalidSpec(f"unknown family {kind!r}")
