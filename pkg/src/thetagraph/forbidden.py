"""Forbidden-graph catalog and induced-subgraph search.

Catalog patterns are labeled so that index order is a connected order
(the triangle first, then each pendant path walked away from it).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import GraphError, SimpleGraph, build_graph, iter_bits, popcount

MAX_PATTERN = 16
KINDS = ("star", "path", "cycle", "z", "b", "n")


@dataclass(frozen=True)
class ForbiddenSpec:
    kind: str
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        arity = {"star": 1, "path": 1, "cycle": 1, "z": 1, "b": 2, "n": 3}
        if self.kind not in arity:
            raise GraphError(f"unknown forbidden kind {self.kind!r}")
        if len(self.params) != arity[self.kind]:
            raise GraphError(f"{self.kind} takes {arity[self.kind]} parameter(s)")
        if any(p < 0 for p in self.params):
            raise GraphError("parameters must be non-negative")
        low = {"star": 1, "path": 1, "cycle": 3}.get(self.kind, 0)
        if self.params[0] < low:
            raise GraphError(f"{self.kind} parameter must be >= {low}")

    @property
    def name(self) -> str:
        p = ",".join(map(str, self.params))
        return {"star": f"K1,{p}", "path": f"P{p}", "cycle": f"C{p}"}.get(self.kind, f"{self.kind.upper()}{p}")


def make_forbidden(kind: str | ForbiddenSpec, *params: int) -> SimpleGraph:
    spec = kind if isinstance(kind, ForbiddenSpec) else ForbiddenSpec(kind.lower(), tuple(params))
    p = spec.params
    if spec.kind == "star":
        return build_graph(p[0] + 1, [(0, i) for i in range(1, p[0] + 1)])
    if spec.kind == "path":
        return build_graph(p[0], [(i, i + 1) for i in range(p[0] - 1)])
    if spec.kind == "cycle":
        return build_graph(p[0], [(i, (i + 1) % p[0]) for i in range(p[0])])
    legs = (tuple(p) + (0, 0))[:3]
    edges = [(0, 1), (1, 2), (0, 2)]
    nxt = 3
    for corner, length in enumerate(legs):
        prev = corner
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build_graph(nxt, edges)


def parse_forbidden(text: str) -> list[ForbiddenSpec]:
    """Parse e.g. ``"K1,3, B1,5 n1,2,3"`` into specs.

    Commas separate both parameters and list items; a token is therefore
    read greedily up to its kind's arity.
    """
    arity = {"k1,": 1, "p": 1, "c": 1, "z": 1, "b": 2, "n": 3}
    kind_of = {"k1,": "star", "p": "path", "c": "cycle", "z": "z", "b": "b", "n": "n"}
    s = re.sub(r"\s+", "", text)
    out = []
    pos = 0
    while pos < len(s):
        if s[pos] == ",":
            pos += 1
            continue
        m = re.compile(r"(K1,|P|C|Z|B|N)", re.IGNORECASE).match(s, pos)
        if not m:
            raise GraphError(f"cannot parse forbidden list at {s[pos:]!r}")
        key = m.group(1).lower()
        pos = m.end()
        nums = []
        for _ in range(arity[key]):
            d = re.compile(r"\d+").match(s, pos)
            if not d:
                raise GraphError(f"{m.group(1)} expects {arity[key]} parameter(s)")
            nums.append(int(d.group()))
            pos = d.end()
            if len(nums) < arity[key]:
                if pos >= len(s) or s[pos] != ",":
                    raise GraphError(f"{m.group(1)} expects {arity[key]} parameter(s)")
                pos += 1
        out.append(ForbiddenSpec(kind_of[key], tuple(nums)))
    if not out:
        raise GraphError("empty forbidden list")
    return out


def find_induced(g: SimpleGraph, pattern: SimpleGraph) -> tuple[int, ...] | None:
    """First induced embedding of ``pattern`` in ``g`` (lexicographic on the
    image tuple), or None. Pattern vertex i maps to host vertex result[i]."""
    k = pattern.n
    if k > MAX_PATTERN:
        raise GraphError(f"pattern has {k} vertices, limit is {MAX_PATTERN}")
    if k > g.n:
        return None
    rows = g.rows
    prow = pattern.rows
    pdeg = pattern.degrees()
    hdeg = g.degrees()
    full = g.full
    deg_ok = [0] * k
    for i in range(k):
        m = 0
        for v in range(g.n):
            if hdeg[v] >= pdeg[i]:
                m |= 1 << v
        deg_ok[i] = m
    image = [0] * k

    def extend(i: int, used: int) -> bool:
        if i == k:
            return True
        cand = deg_ok[i] & ~used
        pr = prow[i]
        for j in range(i):
            w = image[j]
            cand &= rows[w] if pr >> j & 1 else full & ~rows[w]
            if not cand:
                return False
        for v in iter_bits(cand):
            image[i] = v
            if extend(i + 1, used | 1 << v):
                return True
        return False

    return tuple(image) if extend(0, 0) else None


def verify_embedding(g: SimpleGraph, pattern: SimpleGraph, image: Sequence[int]) -> bool:
    if len(image) != pattern.n or len(set(image)) != pattern.n:
        return False
    for a in range(pattern.n):
        for b in range(a + 1, pattern.n):
            if pattern.has_edge(a, b) != g.has_edge(image[a], image[b]):
                return False
    return True


def has_claw(g: SimpleGraph) -> bool:
    """Fast claw test: some vertex has three pairwise nonadjacent neighbours."""
    rows = g.rows
    for v in range(g.n):
        nb = rows[v]
        if popcount(nb) < 3:
            continue
        for a in iter_bits(nb):
            rest = nb & ~rows[a] & ~((1 << (a + 1)) - 1)
            for b in iter_bits(rest):
                if rest & ~rows[b] & ~((1 << (b + 1)) - 1):
                    return True
    return False


def _as_patterns(patterns: Iterable[SimpleGraph | ForbiddenSpec]) -> list[SimpleGraph]:
    out = [make_forbidden(p) if isinstance(p, ForbiddenSpec) else p for p in patterns]
    return sorted(out, key=lambda p: (p.n, p.m))


def is_free(g: SimpleGraph, patterns: Iterable[SimpleGraph | ForbiddenSpec]) -> bool:
    return all(find_induced(g, p) is None for p in _as_patterns(patterns))


def first_contained(g: SimpleGraph, patterns: Iterable[SimpleGraph | ForbiddenSpec]):
    """(pattern, embedding) for the first contained pattern in size order, or None."""
    for p in _as_patterns(patterns):
        emb = find_induced(g, p)
        if emb is not None:
            return p, emb
    return None


def longest_induced_path(g: SimpleGraph) -> int:
    """Number of vertices of a longest induced path."""
    rows = g.rows
    best = 1

    def grow(end: int, length: int, blocked: int) -> None:
        # blocked: path vertices plus neighbours of every path vertex except `end`
        nonlocal best
        if length > best:
            best = length
        if best == g.n:
            return
        for w in iter_bits(rows[end] & ~blocked):
            grow(w, length + 1, blocked | rows[end] | 1 << w)

    for s in range(g.n):
        if best == g.n:
            break
        grow(s, 1, 1 << s)
    return best
