"""Naive reference implementations used to cross-check the fast searches.

Deliberately simple: no pruning beyond what keeps them finite.
"""

from __future__ import annotations

from itertools import combinations, permutations

from thetagraph.graph import SimpleGraph


def naive_hamilton_cycle(g: SimpleGraph) -> bool:
    n = g.n
    if n < 3:
        return False
    for perm in permutations(range(1, n)):
        order = (0,) + perm
        if order[1] > order[-1]:
            continue  # each cycle once per direction
        if all(g.has_edge(order[i], order[(i + 1) % n]) for i in range(n)):
            return True
    return False


def naive_hamilton_path(g: SimpleGraph, x: int, y: int) -> bool:
    n = g.n
    if x == y:
        return n == 1
    middle = [v for v in range(n) if v not in (x, y)]
    for perm in permutations(middle):
        order = (x, *perm, y)
        if all(g.has_edge(order[i], order[i + 1]) for i in range(n - 1)):
            return True
    return False


def _biconnected(n: int, edges) -> bool:
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)

    def connected(skip: int) -> bool:
        verts = [v for v in range(n) if v != skip]
        seen = {verts[0]}
        stack = [verts[0]]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w != skip and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(verts)

    return connected(-1) and all(connected(v) for v in range(n))


def naive_spanning_theta(g: SimpleGraph) -> bool:
    """Some spanning subgraph with degrees (3, 3, 2, ..., 2) is 2-connected.

    Such a subgraph is exactly a spanning Θ. Edge subsets are grown in
    edge order with a degree cap, then checked exactly.
    """
    n = g.n
    if n < 4:
        return False
    edges = g.edges()
    for u, v in combinations(range(n), 2):
        target = [2] * n
        target[u] = target[v] = 3
        need = sum(target) // 2
        deg = [0] * n
        chosen: list[tuple[int, int]] = []

        def grow(i: int) -> bool:
            if len(chosen) == need:
                return deg == target and _biconnected(n, chosen)
            if len(edges) - i < need - len(chosen):
                return False
            a, b = edges[i]
            if deg[a] < target[a] and deg[b] < target[b]:
                deg[a] += 1
                deg[b] += 1
                chosen.append((a, b))
                if grow(i + 1):
                    return True
                chosen.pop()
                deg[a] -= 1
                deg[b] -= 1
            return grow(i + 1)

        if grow(0):
            return True
    return False


def naive_is_isomorphic(g: SimpleGraph, h: SimpleGraph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    return any(g.relabel(p) == h for p in permutations(range(g.n)))


def naive_induced(g: SimpleGraph, pattern: SimpleGraph) -> bool:
    k = pattern.n
    for subset in combinations(range(g.n), k):
        for p in permutations(subset):
            if all(g.has_edge(p[i], p[j]) == pattern.has_edge(i, j) for i in range(k) for j in range(i + 1, k)):
                return True
    return False


def all_graphs(n: int):
    """Every labeled graph on n vertices (2^(n choose 2) of them)."""
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        rows = [0] * n
        for i, (u, v) in enumerate(pairs):
            if bits >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        yield SimpleGraph(n, tuple(rows))
