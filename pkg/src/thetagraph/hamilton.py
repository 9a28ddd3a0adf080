"""Exact deciders for Hamilton cycles, Hamilton paths and spanning Θ-subgraphs.

All three questions are posed as one search for a spanning subgraph H with
prescribed degrees: every vertex gets a base degree (2, or 1 at prescribed
path ends) and exactly ``extra`` vertices get one more (the two branch
vertices of a Θ). Edges are selected, rejected or undecided. Pruning:

* degree bounds per vertex, with forced selection/rejection;
* selected ∪ undecided must stay connected (2-connected for cycles and Θ);
* every cycle of a Θ passes through both branch vertices, so selected
  cycles restrict where branch vertices may go;
* a selected path may close into a cycle only if that cycle can occur in
  the target (spanning when there are no branch vertices, through both
  branch vertices otherwise);
* parity: inside each component of the undecided-edge graph the degree
  deficits must sum to an even number once branch vertices are counted.

The parity rule alone refutes most non-hamiltonian sparse instances
instantly (a degree-2-rich graph behaves like its folded multigraph).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import GraphError, Link, SimpleGraph, build_graph, is_connected, iter_bits, popcount, rows_biconnected


class _Fail(Exception):
    pass


class _Search:
    """Degree-constrained spanning subgraph search (mutable state, copied per branch)."""

    def __init__(self, g: SimpleGraph, base: Sequence[int], extra: int, two_connected: bool,
                 allowed: int, forced: Sequence[int] = ()):
        self.n = g.n
        self.edges = g.edges()
        self.index = {e: i for i, e in enumerate(self.edges)}
        self.inc: list[list[int]] = [[] for _ in range(g.n)]
        for i, (u, v) in enumerate(self.edges):
            self.inc[u].append(i)
            self.inc[v].append(i)
        self.base = list(base)
        self.extra = extra
        self.two_connected = two_connected
        self.forced = list(forced)
        self.allowed0 = allowed

    # state: status, s, a, avail rows, selected rows, undecided rows, branch mask, allowed mask
    def solve(self) -> list[tuple[int, int]] | None:
        n = self.n
        st = [0] * len(self.edges)
        s = [0] * n
        a = [len(self.inc[v]) for v in range(n)]
        rows = [0] * n
        for u, v in self.edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        state = [st, s, a, rows[:], [0] * n, rows[:], 0, self.allowed0]
        try:
            for e in self.forced:
                self._select(state, e)
            self._fixpoint(state, list(range(n)))
        except _Fail:
            return None
        result = self._branch(state)
        if result is None:
            return None
        return [self.edges[i] for i, x in enumerate(result[0]) if x == 1]

    @staticmethod
    def _copy(state):
        st, s, a, avail, sel, und, br, al = state
        return [st[:], s[:], a[:], avail[:], sel[:], und[:], br, al]

    def _select(self, state, e: int) -> None:
        st = state[0]
        if st[e] != 0:
            if st[e] == -1:
                raise _Fail
            return
        u, v = self.edges[e]
        st[e] = 1
        state[1][u] += 1
        state[1][v] += 1
        state[2][u] -= 1
        state[2][v] -= 1
        state[4][u] |= 1 << v
        state[4][v] |= 1 << u
        state[5][u] &= ~(1 << v)
        state[5][v] &= ~(1 << u)

    def _reject(self, state, e: int) -> None:
        st = state[0]
        if st[e] != 0:
            if st[e] == 1:
                raise _Fail
            return
        u, v = self.edges[e]
        st[e] = -1
        state[2][u] -= 1
        state[2][v] -= 1
        state[3][u] &= ~(1 << v)
        state[3][v] &= ~(1 << u)
        state[5][u] &= ~(1 << v)
        state[5][v] &= ~(1 << u)

    def _local(self, state, queue: list[int]) -> None:
        st, s, a = state[0], state[1], state[2]
        base = self.base
        while queue:
            v = queue.pop()
            designated = state[6] >> v & 1
            if not designated and s[v] == base[v] + 1:
                if not state[7] >> v & 1:
                    raise _Fail
                state[6] |= 1 << v
                designated = 1
                if popcount(state[6]) > self.extra:
                    raise _Fail
                if popcount(state[6]) == self.extra:
                    queue.extend(range(self.n))
            lo = base[v] + designated
            if designated or (popcount(state[6]) < self.extra and state[7] >> v & 1):
                hi = base[v] + 1
            else:
                hi = base[v]
            if s[v] > hi or s[v] + a[v] < lo:
                raise _Fail
            if a[v] == 0:
                continue
            if s[v] == hi:
                for e in self.inc[v]:
                    if st[e] == 0:
                        self._reject(state, e)
                        queue.append(self.edges[e][0] ^ self.edges[e][1] ^ v)
            elif s[v] + a[v] == lo:
                for e in self.inc[v]:
                    if st[e] == 0:
                        self._select(state, e)
                        queue.append(self.edges[e][0] ^ self.edges[e][1] ^ v)

    def _fixpoint(self, state, queue: list[int]) -> None:
        while True:
            self._local(state, queue)
            before = (state[7], sum(state[2]))
            self._global(state)
            if (state[7], sum(state[2])) == before:
                return
            queue = list(range(self.n))

    def _global(self, state) -> None:
        n = self.n
        avail, sel, und = state[3], state[4], state[5]
        # spanning connectivity of what is still available
        if self.two_connected:
            if not rows_biconnected(avail):
                raise _Fail
        else:
            full = (1 << n) - 1
            seen = frontier = 1
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= avail[v]
                frontier = nxt & ~seen
                seen |= frontier
            if seen != full:
                raise _Fail
        s, base = state[1], self.base
        branch = state[6]
        # every selected cycle must contain all branch vertices (Θ case)
        if self.extra:
            core = self._two_core(sel)
            if core:
                allowed = state[7]
                left = core
                while left:
                    v = (left & -left).bit_length() - 1
                    comp = self._reach(sel, v, core)
                    allowed &= comp
                    left &= ~comp
                if branch & ~allowed:
                    raise _Fail
                state[7] = allowed
        # closing a selected path into a cycle: without branch vertices only a
        # spanning cycle may close; in a Θ every cycle carries both branch vertices
        self._close_paths(state)
        # parity of degree deficits per component of the undecided graph
        branch, allowed = state[6], state[7]
        remaining = self.extra - popcount(branch)
        odd = 0
        free_total = 0
        left = 0
        for v in range(n):
            if und[v]:
                left |= 1 << v
        while left:
            v = (left & -left).bit_length() - 1
            comp = self._reach(und, v, left)
            left &= ~comp
            par = 0
            for w in iter_bits(comp & ~branch):
                par += base[w] - s[w]
            cand = popcount(comp & allowed & ~branch)
            free_total += cand
            if par & 1:
                odd += 1
                if not cand:
                    raise _Fail
        if odd > remaining or (remaining - odd) & 1 or free_total < remaining:
            raise _Fail

    def _close_paths(self, state) -> None:
        sel, und = state[4], state[5]
        full = (1 << self.n) - 1
        left = 0
        for v in range(self.n):
            if popcount(sel[v]) == 1:
                left |= 1 << v
        while left:
            p = (left & -left).bit_length() - 1
            comp = self._reach(sel, p, full)
            left &= ~comp
            if popcount(sel[p]) != 1:
                continue
            ends = [w for w in iter_bits(comp) if popcount(sel[w]) == 1]
            if len(ends) != 2 or any(popcount(sel[w]) > 2 for w in iter_bits(comp)):
                continue
            q = ends[0] ^ ends[1] ^ p
            if not und[p] >> q & 1:
                continue
            if self.extra:
                ok = not state[6] & ~comp and popcount(comp & state[7]) >= 2
            else:
                ok = comp == full
            if not ok:
                e = self.index[(min(p, q), max(p, q))]
                self._reject(state, e)
                self._local(state, [p, q])

    @staticmethod
    def _reach(rows, start: int, within: int) -> int:
        seen = frontier = 1 << start
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= rows[v]
            frontier = nxt & within & ~seen
            seen |= frontier
        return seen

    def _two_core(self, sel) -> int:
        deg = [popcount(r) for r in sel]
        alive = 0
        for v in range(self.n):
            if deg[v]:
                alive |= 1 << v
        stack = [v for v in iter_bits(alive) if deg[v] == 1]
        while stack:
            v = stack.pop()
            if not alive >> v & 1:
                continue
            alive &= ~(1 << v)
            for w in iter_bits(sel[v] & alive):
                deg[w] -= 1
                if deg[w] == 1:
                    stack.append(w)
        return alive

    def _pick(self, state) -> int | None:
        st, s, a = state[0], state[1], state[2]
        if self.extra:
            # an edge closing a selected path pins both branch vertices onto the
            # new cycle; deciding those first splits the undecided graph early
            sel, und = state[4], state[5]
            full = (1 << self.n) - 1
            seen = 0
            for v in range(self.n):
                if not und[v] or not sel[v] or seen >> v & 1:
                    continue
                comp = self._reach(sel, v, full)
                seen |= comp
                for w in iter_bits(comp):
                    hit = und[w] & comp
                    if hit:
                        x = (hit & -hit).bit_length() - 1
                        return self.index[(min(w, x), max(w, x))], False
        best, best_key = None, None
        for v in range(self.n):
            if a[v] == 0:
                continue
            needy = s[v] < self.base[v]
            key = (not needy, a[v], v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        if best is None:
            return None
        for e in self.inc[best]:
            if st[e] == 0:
                return e, True
        return None

    def _branch(self, state):
        picked = self._pick(state)
        if picked is None:
            if popcount(state[6]) != self.extra:
                return None
            return state
        e, first = picked
        u, v = self.edges[e]
        for choose in (first, not first):
            child = self._copy(state)
            try:
                if choose:
                    self._select(child, e)
                else:
                    self._reject(child, e)
                self._fixpoint(child, [u, v])
            except _Fail:
                continue
            found = self._branch(child)
            if found is not None:
                return found
        return None


# ---------------------------------------------------------------- certificates


@dataclass(frozen=True)
class ThetaCertificate:
    u: int
    v: int
    paths: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]

    def to_text(self) -> str:
        body = " | ".join(" ".join(map(str, p)) for p in self.paths)
        return f"theta {self.u} {self.v} | {body}"

    @classmethod
    def from_text(cls, text: str) -> ThetaCertificate:
        parts = [p.strip() for p in text.strip().split("|")]
        head = parts[0].split()
        if len(parts) != 4 or len(head) != 3 or head[0] != "theta":
            raise GraphError(f"malformed theta certificate {text!r}")
        paths = tuple(tuple(int(t) for t in p.split()) for p in parts[1:])
        return cls(int(head[1]), int(head[2]), paths)  # type: ignore[arg-type]


def _adjacency(n: int, edges) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    for lst in adj:
        lst.sort()
    return adj


def _theta_from_edges(n: int, edges) -> ThetaCertificate:
    adj = _adjacency(n, edges)
    u, v = [w for w in range(n) if len(adj[w]) == 3]
    paths = []
    for first in adj[u]:
        path = [u, first]
        while path[-1] != v:
            a, b = adj[path[-1]]
            path.append(b if a == path[-2] else a)
        paths.append(tuple(path))
    paths.sort()
    return ThetaCertificate(u, v, tuple(paths))  # type: ignore[arg-type]


def _cycle_from_edges(n: int, edges) -> list[int]:
    adj = _adjacency(n, edges)
    cycle = [0, adj[0][0]]
    while len(cycle) < n:
        a, b = adj[cycle[-1]]
        cycle.append(b if a == cycle[-2] else a)
    return cycle


# ---------------------------------------------------------------- deciders


def hamilton_cycle(g: SimpleGraph) -> list[int] | None:
    """A Hamilton cycle as a vertex list starting at 0, or None."""
    if g.n < 3:
        raise GraphError("hamilton_cycle needs n >= 3")
    if min(g.degrees()) < 2:
        return None
    chosen = _Search(g, [2] * g.n, 0, True, 0).solve()
    return None if chosen is None else _cycle_from_edges(g.n, chosen)


def hamilton_path_between(g: SimpleGraph, x: int | None = None, y: int | None = None,
                          constrained: bool = True) -> list[int] | None:
    """Hamilton path from x to y (constrained) or between any two vertices."""
    n = g.n
    if not constrained:
        if n == 1:
            return [0]
        if n == 2:
            return [0, 1] if g.has_edge(0, 1) else None
        # a Hamilton path of G is a Hamilton cycle of G plus a universal vertex
        h = build_graph(n + 1, g.edges() + [(v, n) for v in range(n)])
        cyc = hamilton_cycle(h)
        if cyc is None:
            return None
        k = cyc.index(n)
        path = cyc[k + 1:] + cyc[:k]
        return path if path[0] < path[-1] else path[::-1]
    if x is None or y is None or x == y or not (0 <= x < n and 0 <= y < n):
        raise GraphError("constrained Hamilton path needs two distinct endpoints in range")
    if n == 2:
        return [x, y] if g.has_edge(x, y) else None
    if not is_connected(g):
        return None
    # x..y is a Hamilton path iff G + xy has a Hamilton cycle through xy
    h = g if g.has_edge(x, y) else g.add_edges([(x, y)])
    xy = (min(x, y), max(x, y))
    search = _Search(h, [2] * n, 0, True, 0)
    search.forced = [search.index[xy]]
    chosen = search.solve()
    if chosen is None:
        return None
    chosen = [e for e in chosen if e != xy]
    adj = _adjacency(n, chosen)
    path = [x]
    prev = -1
    while path[-1] != y:
        nxt = [w for w in adj[path[-1]] if w != prev]
        prev = path[-1]
        path.append(nxt[0])
    return path


def spanning_theta(g: SimpleGraph) -> ThetaCertificate | None:
    if g.n < 4:
        raise GraphError("spanning_theta needs n >= 4")
    degs = g.degrees()
    if min(degs) < 2 or sum(1 for d in degs if d >= 3) < 2:
        return None
    chosen = _Search(g, [2] * g.n, 2, True, g.full).solve()
    return None if chosen is None else _theta_from_edges(g.n, chosen)


def has_spanning_theta(g: SimpleGraph) -> bool:
    """Like spanning_theta, but graphs with fewer than 4 vertices simply answer False."""
    return g.n >= 4 and spanning_theta(g) is not None


def verify_theta(g: SimpleGraph, cert: ThetaCertificate) -> bool:
    """Check every certificate invariant directly against ``g``."""
    u, v = cert.u, cert.v
    if u == v or len(cert.paths) != 3:
        return False
    inner_seen: set[int] = set()
    edge_paths = 0
    used_edges: set[tuple[int, int]] = set()
    for p in cert.paths:
        if len(p) < 2 or p[0] != u or p[-1] != v:
            return False
        if len(p) == 2:
            edge_paths += 1
        for a, b in zip(p, p[1:]):
            if not (0 <= a < g.n and 0 <= b < g.n) or not g.has_edge(a, b):
                return False
            key = (min(a, b), max(a, b))
            if key in used_edges:
                return False
            used_edges.add(key)
        inner = p[1:-1]
        if u in inner or v in inner or len(set(inner)) != len(inner) or inner_seen & set(inner):
            return False
        inner_seen |= set(inner)
    if edge_paths > 1:
        return False
    if inner_seen | {u, v} != set(range(g.n)):
        return False
    deg = [0] * g.n
    for a, b in used_edges:
        deg[a] += 1
        deg[b] += 1
    return len(used_edges) == g.n + 1 and all(d == (3 if w in (u, v) else 2) for w, d in enumerate(deg))


def verify_hamilton_cycle(g: SimpleGraph, cycle: Sequence[int]) -> bool:
    return (len(cycle) == g.n and sorted(cycle) == list(range(g.n))
            and all(g.has_edge(cycle[i], cycle[(i + 1) % g.n]) for i in range(g.n)))


def verify_hamilton_path(g: SimpleGraph, path: Sequence[int], x: int | None = None, y: int | None = None) -> bool:
    if len(path) != g.n or sorted(path) != list(range(g.n)):
        return False
    if any(not g.has_edge(a, b) for a, b in zip(path, path[1:])):
        return False
    return x is None or (path[0], path[-1]) in ((x, y), (y, x))


# ---------------------------------------------------------------- links


@dataclass(frozen=True)
class LinkClassification:
    simple: bool
    witness: tuple[int, ...] | None
    pure: bool

    @property
    def verdict(self) -> str:
        return "Simple" if self.simple else "NonSimple"


def is_pure_link(link: Link) -> bool:
    g, x, y = link.graph, link.x, link.y
    if g.n == 3 and g.m == 3:
        return True
    if g.n < 3 or g.m != g.n - 1 or not is_connected(g):
        return False
    degs = g.degrees()
    return degs[x] == 1 and degs[y] == 1 and all(d == 2 for w, d in enumerate(degs) if w not in (x, y))


def classify_link(link: Link) -> LinkClassification:
    if not is_connected(link.graph):
        raise GraphError("link graph must be connected")
    path = hamilton_path_between(link.graph, link.x, link.y)
    return LinkClassification(path is not None, None if path is None else tuple(path), is_pure_link(link))
