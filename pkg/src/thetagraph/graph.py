"""Simple undirected graphs on indexed vertices, stored as per-vertex bit rows.

Vertex sets are plain ``int`` bit masks throughout the package; bit ``v`` is
set when vertex ``v`` belongs to the set.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 128
GRAPH6_MAX = 62


class GraphError(ValueError):
    """Raised for malformed graphs, codecs and out-of-range arguments."""


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    rows: tuple[int, ...]

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return popcount(self.rows[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.rows]

    @property
    def m(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    def complement(self) -> SimpleGraph:
        full = self.full
        return SimpleGraph(self.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(self.rows)))

    def relabel(self, perm: Sequence[int]) -> SimpleGraph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        rows = [0] * self.n
        for u, v in self.edges():
            a, b = perm[u], perm[v]
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return SimpleGraph(self.n, tuple(rows))

    def add_edges(self, pairs: Iterable[tuple[int, int]]) -> SimpleGraph:
        return build_graph(self.n, self.edges() + list(pairs))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class Link:
    """A graph with two labeled end-vertices ``x`` (origin) and ``y`` (terminus)."""

    graph: SimpleGraph
    x: int
    y: int

    def __post_init__(self) -> None:
        if self.x == self.y:
            raise GraphError("link end-vertices must be distinct")
        for v in (self.x, self.y):
            if not 0 <= v < self.graph.n:
                raise GraphError(f"end-vertex {v} out of range")

    @property
    def inner(self) -> list[int]:
        return [v for v in range(self.graph.n) if v not in (self.x, self.y)]


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return SimpleGraph(n, tuple(rows))


def complete_graph(n: int) -> SimpleGraph:
    return build_graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> SimpleGraph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> SimpleGraph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(t: int) -> SimpleGraph:
    return build_graph(t + 1, [(0, i) for i in range(1, t + 1)])


def complete_bipartite(a: int, b: int) -> SimpleGraph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> SimpleGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


# ---------------------------------------------------------------- codecs


def to_graph6(g: SimpleGraph) -> str:
    if g.n > GRAPH6_MAX:
        raise GraphError(f"graph6 short form supports n <= {GRAPH6_MAX}")
    bits = [g.rows[i] >> j & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def from_graph6(text: str) -> SimpleGraph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise GraphError("empty graph6 string")
    n = ord(s[0]) - 63
    if not 0 <= n <= GRAPH6_MAX:
        raise GraphError(f"malformed graph6 header byte {s[0]!r}")
    if n == 0:
        raise GraphError("graph6 string encodes the empty graph")
    nbits = n * (n - 1) // 2
    want = (nbits + 5) // 6
    body = s[1:]
    if len(body) != want:
        raise GraphError(f"graph6 payload has {len(body)} bytes, expected {want}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise GraphError(f"malformed graph6 byte {ch!r}")
        bits.extend((val >> (5 - k)) & 1 for k in range(6))
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return SimpleGraph(n, tuple(rows))


def to_edge_list(g: SimpleGraph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> SimpleGraph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphError("empty edge-list text")
    try:
        head = lines[0].split()
        n, m = int(head[0]), int(head[1])
        edges = [tuple(int(t) for t in ln.split()[:2]) for ln in lines[1 : 1 + m]]
    except (ValueError, IndexError) as exc:
        raise GraphError(f"malformed edge-list text: {exc}") from None
    if len(edges) != m or any(len(e) != 2 for e in edges):
        raise GraphError(f"edge-list header announces {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def parse_graph(text: str) -> SimpleGraph:
    """Decode either a graph6 line or the native edge-list format."""
    stripped = text.strip()
    if "\n" not in stripped and " " not in stripped:
        return from_graph6(stripped)
    return from_edge_list(text)


# ---------------------------------------------------------------- structure


def induced_subgraph(g: SimpleGraph, vertices: Iterable[int] | int) -> tuple[SimpleGraph, tuple[int, ...]]:
    """Induced subgraph on ``vertices``, relabeled 0..k-1 in ascending order.

    Returns the subgraph and the tuple of original vertex ids (new id -> old id).
    """
    mask = vertices if isinstance(vertices, int) else mask_of(vertices)
    if mask >> g.n:
        raise GraphError("vertex set exceeds graph range")
    keep = tuple(iter_bits(mask))
    if not keep:
        raise GraphError("induced subgraph of the empty set")
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        r = 0
        for w in iter_bits(g.rows[v] & mask):
            r |= 1 << index[w]
        rows.append(r)
    return SimpleGraph(len(keep), tuple(rows)), keep


def reach(g: SimpleGraph, start: int, within: int) -> int:
    """Vertices reachable from ``start`` inside the vertex mask ``within``."""
    seen = 1 << start
    frontier = seen
    rows = g.rows
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= rows[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def components(g: SimpleGraph, within: int | None = None) -> list[int]:
    left = g.full if within is None else within
    out = []
    while left:
        v = (left & -left).bit_length() - 1
        comp = reach(g, v, left)
        out.append(comp)
        left &= ~comp
    return out


def is_connected(g: SimpleGraph, within: int | None = None) -> bool:
    mask = g.full if within is None else within
    if not mask:
        return True
    v = (mask & -mask).bit_length() - 1
    return reach(g, v, mask) == mask


def cut_vertices(rows: Sequence[int]) -> int:
    """Mask of cut vertices of the graph given by bit rows (iterative Tarjan lowpoint)."""
    n = len(rows)
    disc = [-1] * n
    low = [0] * n
    cut = 0
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter_bits(rows[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter_bits(rows[w])))
                    advanced = True
                    break
                if w != parent and disc[w] < low[v]:
                    low[v] = disc[w]
            if not advanced:
                stack.pop()
                if parent >= 0:
                    if low[v] < low[parent]:
                        low[parent] = low[v]
                    if parent != root and low[v] >= disc[parent]:
                        cut |= 1 << parent
        if root_children > 1:
            cut |= 1 << root
    return cut


def articulation_points(g: SimpleGraph) -> int:
    return cut_vertices(g.rows)


def rows_biconnected(rows: Sequence[int]) -> bool:
    """True when the row graph is connected, has >= 3 vertices and no cut vertex."""
    n = len(rows)
    if n < 3:
        return False
    full = (1 << n) - 1
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= rows[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full and not cut_vertices(rows)


def is_biconnected(g: SimpleGraph) -> bool:
    """2-connected in the usual sense: connected, n >= 3, no cut vertex."""
    return g.n >= 3 and is_connected(g) and not articulation_points(g)


def _local_connectivity(g: SimpleGraph, s: int, t: int, cap: int) -> int:
    """Max number of internally vertex-disjoint s-t paths (s, t non-adjacent), capped.

    Unit-capacity vertex splitting: node 2v is v_in, 2v+1 is v_out.
    """
    n = g.n
    residual: dict[tuple[int, int], int] = {}
    adj: list[list[int]] = [[] for _ in range(2 * n)]

    def add(a: int, b: int, c: int) -> None:
        if (a, b) not in residual:
            adj[a].append(b)
            adj[b].append(a)
            residual[(a, b)] = 0
            residual.setdefault((b, a), 0)
        residual[(a, b)] += c

    big = n
    for v in range(n):
        add(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges():
        add(2 * u + 1, 2 * v, 1)
        add(2 * v + 1, 2 * u, 1)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < cap:
        parent = {source: source}
        queue = [source]
        for a in queue:
            if a == sink:
                break
            for b in adj[a]:
                if b not in parent and residual[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while b != source:
            a = parent[b]
            residual[(a, b)] -= 1
            residual[(b, a)] += 1
            b = a
        flow += 1
    return flow


def vertex_connectivity(g: SimpleGraph) -> int:
    """Exact kappa(G) by Menger's theorem over a restricted set of source vertices."""
    n = g.n
    if n < 2:
        raise GraphError("vertex connectivity needs n >= 2")
    if not is_connected(g):
        return 0
    best = min(n - 1, min(g.degrees()))
    for i in range(n):
        if i > best:
            break
        for j in range(i + 1, n):
            if not g.has_edge(i, j):
                best = min(best, _local_connectivity(g, i, j, best))
    return best


def is_cut(g: SimpleGraph, cut_mask: int) -> bool:
    rest = g.full & ~cut_mask
    return bool(rest) and not is_connected(g, rest)


def list_two_cuts(g: SimpleGraph) -> list[tuple[tuple[int, int], list[Link]]]:
    """Every 2-vertex cut {x, y} with the links of G it induces, pairs sorted."""
    if g.n < 4:
        raise GraphError("two-cut listing needs n >= 4")
    if not is_connected(g):
        raise GraphError("two-cut listing needs a connected graph")
    out = []
    for x, y in combinations(range(g.n), 2):
        pair = 1 << x | 1 << y
        comps = components(g, g.full & ~pair)
        if len(comps) < 2:
            continue
        links = []
        for comp in comps:
            sub, keep = induced_subgraph(g, comp | pair)
            links.append(Link(sub, keep.index(x), keep.index(y)))
        out.append(((x, y), links))
    return out


def max_clique(g: SimpleGraph, within: int | None = None) -> int:
    """Maximum clique as a vertex mask (branch and bound with greedy colouring)."""
    rows = g.rows
    best = [0, 0]  # size, mask

    def colour_order(cand: int) -> list[tuple[int, int]]:
        order = []
        colour = 0
        left = cand
        while left:
            colour += 1
            avail = left
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~rows[v] & ~(1 << v)
                left &= ~(1 << v)
                order.append((v, colour))
        return order

    def expand(clique: int, size: int, cand: int) -> None:
        order = colour_order(cand)
        for v, colour in reversed(order):
            if size + colour <= best[0]:
                return
            nc = clique | 1 << v
            sub = cand & rows[v]
            if sub:
                expand(nc, size + 1, sub)
            elif size + 1 > best[0]:
                best[0], best[1] = size + 1, nc
            cand &= ~(1 << v)

    start = g.full if within is None else within
    if start:
        expand(0, 0, start)
    return best[1]


def independence_number(g: SimpleGraph) -> int:
    return popcount(max_clique(g.complement()))


def is_complete(g: SimpleGraph) -> bool:
    return all(popcount(r) == g.n - 1 for r in g.rows)


def is_cycle(g: SimpleGraph) -> bool:
    return g.n >= 3 and all(popcount(r) == 2 for r in g.rows) and is_connected(g)


def is_locally_connected(g: SimpleGraph) -> bool:
    return all(is_connected(g, r) for r in g.rows)


@dataclass(frozen=True)
class Metrics:
    alpha: int
    is_cycle: bool
    is_complete: bool
    is_locally_connected: bool
    min_degree: int


def structural_metrics(g: SimpleGraph) -> Metrics:
    return Metrics(
        alpha=independence_number(g),
        is_cycle=is_cycle(g),
        is_complete=is_complete(g),
        is_locally_connected=is_locally_connected(g),
        min_degree=min(g.degrees()),
    )
