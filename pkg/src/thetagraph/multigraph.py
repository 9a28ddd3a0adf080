"""Loopless and semi-loopless multigraphs indexed by edge.

Edge indices identify parallel edges; every trail output refers to them.
A loop contributes 2 to the degree of its vertex.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from typing import Iterator, Sequence

MAX_ISO_VERTICES = 12
MAX_CUT_VERTICES = 16


class MultiGraphError(ValueError):
    pass


@dataclass(frozen=True)
class MultiGraph:
    n: int
    edges: tuple[tuple[int, int], ...]
    e0: int | None = None

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def is_semi(self) -> bool:
        return self.e0 is not None

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def odd_vertices(self) -> list[int]:
        return [v for v, d in enumerate(self.degrees()) if d % 2]

    def multiplicity(self) -> Counter:
        return Counter(tuple(sorted(e)) for e in self.edges)

    def incident(self, v: int) -> list[int]:
        return [i for i, e in enumerate(self.edges) if v in e]

    def is_connected(self) -> bool:
        return _connected(self.n, self.edges, range(self.n))

    def to_text(self) -> str:
        head = f"{self.n} {self.m}" + (f" e0={self.e0}" if self.e0 is not None else "")
        return "\n".join([head] + [f"{u} {v}" for u, v in self.edges]) + "\n"


# Semi-loopless multigraphs are MultiGraphs whose e0 is set; the alias keeps
# signatures readable where only the labeled flavour makes sense.
SemiLooplessMultiGraph = MultiGraph


def build_multigraph(n: int, edges: Sequence[tuple[int, int]], e0: int | None = None) -> MultiGraph:
    if n < 1:
        raise MultiGraphError("multigraph needs at least one vertex")
    edges = tuple((int(u), int(v)) for u, v in edges)
    for i, (u, v) in enumerate(edges):
        if not (0 <= u < n and 0 <= v < n):
            raise MultiGraphError(f"edge {i} = ({u}, {v}) out of range")
        if u == v and i != e0:
            raise MultiGraphError(f"edge {i} is a loop but is not the labeled edge e0")
    if e0 is not None:
        if not 0 <= e0 < len(edges):
            raise MultiGraphError(f"e0 index {e0} out of range")
        if len(edges) < 2:
            raise MultiGraphError("a semi-loopless multigraph needs at least two edges")
    touched = {v for e in edges for v in e}
    if len(touched) != n:
        missing = sorted(set(range(n)) - touched)
        raise MultiGraphError(f"isolated vertices {missing}")
    return MultiGraph(n, edges, e0)


def parse_multigraph(text: str) -> MultiGraph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise MultiGraphError("empty multigraph text")
    head = lines[0].split()
    try:
        n, m = int(head[0]), int(head[1])
        e0 = None
        for tok in head[2:]:
            if not tok.startswith("e0="):
                raise MultiGraphError(f"unknown header token {tok!r}")
            e0 = int(tok[3:])
        edges = [tuple(int(t) for t in ln.split()[:2]) for ln in lines[1 : 1 + m]]
    except (ValueError, IndexError) as exc:
        raise MultiGraphError(f"malformed multigraph text: {exc}") from None
    if len(edges) != m:
        raise MultiGraphError(f"header announces {m} edges, found {len(edges)}")
    return build_multigraph(n, edges, e0)


def _connected(n: int, edges: Sequence[tuple[int, int]], vertices) -> bool:
    verts = set(vertices)
    if not verts:
        return True
    adj: dict[int, set[int]] = {v: set() for v in verts}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    start = next(iter(verts))
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == verts


def edge_connectivity(f: MultiGraph) -> int:
    """Minimum edge cut by enumerating vertex bipartitions (loops never cross)."""
    if f.n < 2:
        raise MultiGraphError("edge connectivity needs n >= 2")
    if f.n > MAX_CUT_VERTICES:
        raise MultiGraphError(f"edge connectivity limited to n <= {MAX_CUT_VERTICES}")
    best = f.m
    # vertex 0 stays on side A so each bipartition is seen once
    for mask in range(0, 1 << (f.n - 1)):
        side = mask << 1  # bit v set -> v on side B
        if side == 0:
            continue
        cut = sum(1 for u, v in f.edges if (side >> u & 1) != (side >> v & 1))
        best = min(best, cut)
    return best


def find_euler_trail(f: MultiGraph) -> tuple[list[int], bool] | None:
    """Hierholzer's algorithm. Returns (trail, closed) with trail alternating
    vertex, edge index, vertex, ...; None when no Euler trail exists."""
    odd = f.odd_vertices()
    if len(odd) not in (0, 2) or not f.is_connected():
        return None
    start = odd[0] if odd else (f.edges[0][0] if f.edges else 0)
    inc: list[list[int]] = [[] for _ in range(f.n)]
    for i, (u, v) in enumerate(f.edges):
        inc[u].append(i)
        if v != u:
            inc[v].append(i)
    for lst in inc:
        lst.reverse()  # pop() then yields the lowest edge index first
    used = [False] * f.m
    stack: list[tuple[int, int]] = [(start, -1)]
    out: list[tuple[int, int]] = []
    while stack:
        v, via = stack[-1]
        while inc[v] and used[inc[v][-1]]:
            inc[v].pop()
        if inc[v]:
            e = inc[v].pop()
            used[e] = True
            a, b = f.edges[e]
            stack.append((b if a == v else a, e))
        else:
            out.append(stack.pop())
    out.reverse()
    trail = [out[0][0]]
    for v, e in out[1:]:
        trail += [e, v]
    return trail, not odd


def replay_trail(f: MultiGraph, trail: Sequence[int]) -> bool:
    """Check that ``trail`` walks every edge exactly once."""
    if len(trail) != 2 * f.m + 1:
        return False
    seen = set()
    for k in range(1, len(trail), 2):
        v, e, w = trail[k - 1], trail[k], trail[k + 1]
        if e in seen or not 0 <= e < f.m or sorted(f.edges[e]) != sorted((v, w)):
            return False
        seen.add(e)
    return len(seen) == f.m


def _edge_key(f: MultiGraph, perm: Sequence[int]) -> tuple:
    labeled = []
    for i, (u, v) in enumerate(f.edges):
        a, b = sorted((perm[u], perm[v]))
        labeled.append((a, b, i == f.e0))
    return tuple(sorted(labeled))


def multigraph_isomorphic(f1: MultiGraph, f2: MultiGraph) -> tuple[int, ...] | None:
    """Vertex bijection pi with pi(F1) == F2 (e0 preserved), or None."""
    if max(f1.n, f2.n) > MAX_ISO_VERTICES:
        raise MultiGraphError(f"isomorphism test limited to n <= {MAX_ISO_VERTICES}")
    if f1.n != f2.n or f1.m != f2.m or (f1.e0 is None) != (f2.e0 is None):
        return None
    d1, d2 = f1.degrees(), f2.degrees()
    if sorted(d1) != sorted(d2):
        return None
    target = _edge_key(f2, range(f2.n))
    by_degree: dict[int, list[int]] = {}
    for v, d in enumerate(d2):
        by_degree.setdefault(d, []).append(v)
    perm = [-1] * f1.n
    taken = [False] * f2.n

    def extend(v: int) -> bool:
        if v == f1.n:
            return _edge_key(f1, perm) == target
        for w in by_degree[d1[v]]:
            if not taken[w]:
                perm[v], taken[w] = w, True
                if extend(v + 1):
                    return True
                taken[w] = False
        perm[v] = -1
        return False

    return tuple(perm) if extend(0) else None


def canonical_key(f: MultiGraph) -> tuple:
    """Minimum labeled edge multiset over all vertex permutations (tiny n only)."""
    return min(_edge_key(f, p) for p in permutations(range(f.n)))


def sub_multigraphs(f: MultiGraph, keep_e0: bool = False) -> Iterator[MultiGraph]:
    """All proper sub-multigraphs with at least one edge, isolated vertices dropped.

    Parallel edges are interchangeable, so subgraphs are generated per
    multiplicity vector instead of per edge subset. With ``keep_e0`` only
    subgraphs containing e0 are produced (e0 is its own class).
    """
    classes: dict[tuple, list[int]] = {}
    for i, (u, v) in enumerate(f.edges):
        key = ("e0",) if i == f.e0 else tuple(sorted((u, v)))
        classes.setdefault(key, []).append(i)
    keys = list(classes)
    ranges = []
    for k in keys:
        lo = len(classes[k]) if keep_e0 and k == ("e0",) else 0
        ranges.append(range(lo, len(classes[k]) + 1))
    full = tuple(len(classes[k]) for k in keys)
    for counts in product(*ranges):
        if counts == full or not any(counts):
            continue
        chosen = [i for k, c in zip(keys, counts) for i in classes[k][:c]]
        chosen.sort()
        verts = sorted({v for i in chosen for v in f.edges[i]})
        index = {v: j for j, v in enumerate(verts)}
        edges = [(index[f.edges[i][0]], index[f.edges[i][1]]) for i in chosen]
        e0 = chosen.index(f.e0) if f.e0 is not None and f.e0 in chosen else None
        yield MultiGraph(len(verts), tuple(edges), e0)


def is_k_edge_connected(f: MultiGraph, k: int) -> bool:
    if f.n == 1:
        return True
    return f.is_connected() and edge_connectivity(f) >= k


def lemma_minimal_loopless(f: MultiGraph) -> bool:
    """Premise of the loopless minimality classification: 3-edge-connected,
    at least four odd vertices, and every 2-edge-connected proper subgraph
    has at most two odd vertices."""
    if not is_k_edge_connected(f, 3) or len(f.odd_vertices()) < 4:
        return False
    for sub in sub_multigraphs(f):
        if len(sub.odd_vertices()) > 2 and is_k_edge_connected(sub, 2):
            return False
    return True


def lemma_minimal_semi(f: MultiGraph) -> bool:
    """Premise of the semi-loopless classification: 3-edge-connected, at least
    two odd vertices, and every 2-edge-connected proper subgraph containing e0
    has no odd vertices."""
    if f.e0 is None:
        raise MultiGraphError("semi-loopless premise needs a labeled e0")
    if not is_k_edge_connected(f, 3) or len(f.odd_vertices()) < 2:
        return False
    for sub in sub_multigraphs(f, keep_e0=True):
        if sub.odd_vertices() and is_k_edge_connected(sub, 2):
            return False
    return True


def delete_edge(f: MultiGraph, e: int) -> MultiGraph:
    """F - e with isolated vertices dropped; indices above e shift down by one."""
    if f.e0 == e:
        raise MultiGraphError("cannot delete the labeled edge e0")
    rest = [i for i in range(f.m) if i != e]
    verts = sorted({v for i in rest for v in f.edges[i]})
    index = {v: j for j, v in enumerate(verts)}
    edges = tuple((index[f.edges[i][0]], index[f.edges[i][1]]) for i in rest)
    e0 = rest.index(f.e0) if f.e0 is not None else None
    return MultiGraph(len(verts), edges, e0)
