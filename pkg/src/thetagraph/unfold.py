"""Unfoldments: multigraph edges become pure links, vertices become cliques.

Blue vertices are link ends, red vertices link interiors, black vertices the
two labeled ends of a colored link. Colors are the characters 'r', 'b', 'k'.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Sequence

from .forbidden import find_induced, make_forbidden
from .graph import GraphError, SimpleGraph, build_graph, from_edge_list, induced_subgraph, iter_bits, mask_of, to_edge_list
from .multigraph import MultiGraph, MultiGraphError, build_multigraph

RED, BLUE, BLACK = "r", "b", "k"
_CLAW = make_forbidden("star", 3)


@dataclass(frozen=True)
class PureLinkSpec:
    """A triangle on the two ends, or an induced path of the given length (>= 2)."""

    shape: str
    length: int = 2

    def __post_init__(self) -> None:
        if self.shape not in ("triangle", "path"):
            raise GraphError(f"unknown pure-link shape {self.shape!r}")
        if self.shape == "path" and self.length < 2:
            raise GraphError("a path pure link has length >= 2")
        if self.shape == "triangle" and self.length != 2:
            raise GraphError("a triangle pure link has no length parameter")

    @property
    def inner(self) -> int:
        return 1 if self.shape == "triangle" else self.length - 1

    @property
    def token(self) -> str:
        return "t" if self.shape == "triangle" else f"p{self.length}"

    @classmethod
    def parse(cls, token: str) -> PureLinkSpec:
        t = token.strip().lower()
        if t in ("t", "triangle"):
            return TRIANGLE
        if t.startswith("p") and t[1:].isdigit():
            return cls("path", int(t[1:]))
        raise GraphError(f"cannot parse pure-link token {token!r}")


TRIANGLE = PureLinkSpec("triangle")


def path_link(length: int) -> PureLinkSpec:
    return PureLinkSpec("path", length)


@dataclass(frozen=True)
class UnfoldmentTrace:
    ends: tuple[tuple[int, int] | None, ...]  # per edge of F: (u^e, v^e); None for e0
    inner: tuple[tuple[int, ...], ...]  # per edge: red vertices from u^e to v^e
    cliques: tuple[tuple[int, ...], ...]  # per vertex u of F: K^u

    def link_vertices(self, e: int) -> list[int]:
        if self.ends[e] is None:
            return []
        u, v = self.ends[e]
        return [u, *self.inner[e], v]

    def associated_pairs(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(p)) for p in self.ends if p is not None)


@dataclass(frozen=True)
class ColoredGraph:
    graph: SimpleGraph
    colors: tuple[str, ...]
    trace: UnfoldmentTrace | None = None

    def mask(self, color: str) -> int:
        return mask_of(v for v, c in enumerate(self.colors) if c == color)

    def to_text(self) -> str:
        return to_edge_list(self.graph) + "colors: " + " ".join(self.colors) + "\n"


@dataclass(frozen=True)
class ColoredLink(ColoredGraph):
    x0: int = 0
    y0: int = 1
    has_x0y0: bool = False

    def __post_init__(self) -> None:
        blacks = [v for v, c in enumerate(self.colors) if c == BLACK]
        if sorted(blacks) != sorted((self.x0, self.y0)) or self.x0 == self.y0:
            raise GraphError("a colored link has exactly two black vertices x0, y0")


def parse_colored(text: str) -> ColoredGraph:
    body, colors = [], None
    for ln in text.splitlines():
        if ln.strip().lower().startswith("colors:"):
            colors = tuple(ln.split(":", 1)[1].split())
        else:
            body.append(ln)
    g = from_edge_list("\n".join(body))
    if colors is None or len(colors) != g.n or any(c not in (RED, BLUE, BLACK) for c in colors):
        raise GraphError("colored graph needs a 'colors:' line with one of r/b/k per vertex")
    blacks = [v for v, c in enumerate(colors) if c == BLACK]
    if blacks:
        if len(blacks) != 2:
            raise GraphError("a colored link has exactly two black vertices")
        x0, y0 = blacks
        return ColoredLink(g, colors, None, x0, y0, g.has_edge(x0, y0))
    return ColoredGraph(g, colors)


def _assignment(f: MultiGraph, assign) -> list[PureLinkSpec | None]:
    if isinstance(assign, PureLinkSpec):
        specs = [assign] * f.m
    elif isinstance(assign, Mapping):
        specs = [assign.get(i) for i in range(f.m)]
    else:
        specs = list(assign)
        if len(specs) == f.m - 1 and f.e0 is not None:
            specs.insert(f.e0, None)
    if len(specs) != f.m:
        raise GraphError(f"assignment has {len(specs)} entries for {f.m} edges")
    for i, s in enumerate(specs):
        if i != f.e0 and not isinstance(s, PureLinkSpec):
            raise GraphError(f"edge {i} has no pure-link assignment")
    return [None if i == f.e0 else s for i, s in enumerate(specs)]


def _build(f: MultiGraph, specs, first: int):
    nxt = first
    edges: list[tuple[int, int]] = []
    ends: list[tuple[int, int] | None] = []
    inner: list[tuple[int, ...]] = []
    members: list[list[int]] = [[] for _ in range(f.n)]
    for i, (u, v) in enumerate(f.edges):
        spec = specs[i]
        if spec is None:
            ends.append(None)
            inner.append(())
            continue
        ue, ve = nxt, nxt + 1
        reds = tuple(range(nxt + 2, nxt + 2 + spec.inner))
        nxt += 2 + spec.inner
        chain = [ue, *reds, ve]
        edges += list(zip(chain, chain[1:]))
        if spec.shape == "triangle":
            edges.append((ue, ve))
        ends.append((ue, ve))
        inner.append(reds)
        members[u].append(ue)
        members[v].append(ve)
    return nxt, edges, ends, inner, members


def unfold(f: MultiGraph, assign) -> ColoredGraph:
    """Unfold a loopless multigraph. ``assign`` is one spec for every edge, a
    list indexed by edge, or a mapping edge -> spec.

    Vertex numbering: per edge in index order u^e, v^e, then the inner
    vertices from u^e towards v^e.
    """
    if f.e0 is not None:
        raise GraphError("use unfold_semi for a multigraph with a labeled e0")
    if any(u == v for u, v in f.edges):
        raise GraphError("unfold needs a loopless multigraph")
    specs = _assignment(f, assign)
    total, edges, ends, inner, members = _build(f, specs, 0)
    for clique in members:
        edges += combinations(clique, 2)
    g = build_graph(total, edges)
    colors = [BLUE] * total
    for reds in inner:
        for r in reds:
            colors[r] = RED
    trace = UnfoldmentTrace(tuple(ends), tuple(inner), tuple(tuple(c) for c in members))
    return ColoredGraph(g, tuple(colors), trace)


def unfold_semi(f: MultiGraph, assign, include_x0y0: bool) -> ColoredLink:
    """Unfold a semi-loopless multigraph into a colored link with x0 = 0, y0 = 1."""
    if f.e0 is None:
        raise GraphError("unfold_semi needs a labeled e0")
    u0, v0 = f.edges[f.e0]
    if u0 == v0 and not include_x0y0:
        raise GraphError("e0 is a loop, so the edge x0y0 is present")
    specs = _assignment(f, assign)
    total, edges, ends, inner, members = _build(f, specs, 2)
    members[u0].insert(0, 0)
    members[v0].insert(0 if u0 != v0 else 1, 1)
    for clique in members:
        edges += combinations(clique, 2)
    if include_x0y0:
        edges.append((0, 1))
    g = build_graph(total, edges)
    colors = [BLUE] * total
    colors[0] = colors[1] = BLACK
    for reds in inner:
        for r in reds:
            colors[r] = RED
    trace = UnfoldmentTrace(tuple(ends), tuple(inner), tuple(tuple(c) for c in members))
    return ColoredLink(g, tuple(colors), trace, 0, 1, include_x0y0)


# ---------------------------------------------------------------- recognition


@dataclass(frozen=True)
class ConditionReport:
    results: tuple[tuple[str, bool, tuple[int, ...]], ...]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.results)

    def failed(self) -> list[str]:
        return [name for name, ok, _ in self.results if not ok]

    def witness(self, name: str) -> tuple[int, ...]:
        for nm, _, w in self.results:
            if nm == name:
                return w
        raise KeyError(name)


def associated_pairs(cg: ColoredGraph) -> list[tuple[int, int]]:
    """Blue pairs joined by a feasible path (blue ends, red interior, length >= 2).

    Two distinct blues are associated exactly when both touch the same
    component of the red subgraph.
    """
    g = cg.graph
    red = cg.mask(RED)
    blue = cg.mask(BLUE)
    pairs = set()
    left = red
    while left:
        r = (left & -left).bit_length() - 1
        comp = _reach(g, r, red)
        left &= ~comp
        touch = 0
        for w in iter_bits(comp):
            touch |= g.rows[w]
        ends = sorted(iter_bits(touch & blue))
        pairs.update(combinations(ends, 2))
    return sorted(pairs)


def _reach(g: SimpleGraph, start: int, within: int) -> int:
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.rows[v]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def _conditions(cg: ColoredGraph, black_ok: bool) -> list[tuple[str, bool, tuple[int, ...]]]:
    g, rows = cg.graph, cg.graph.rows
    red, blue, black = cg.mask(RED), cg.mask(BLUE), cg.mask(BLACK)
    out = []
    claw = find_induced(g, _CLAW)
    out.append(("claw-free", claw is None, claw or ()))
    bad = next((v for v in iter_bits(red) if bin(rows[v]).count("1") != 2), None)
    out.append(("red-degree-2", bad is None, () if bad is None else (bad,)))
    bad = next((v for v in iter_bits(blue) if bin(rows[v] & red).count("1") != 1), None)
    out.append(("unique-red-neighbor", bad is None, () if bad is None else (bad,)))
    pairs = associated_pairs(cg)
    shared_mask = blue | (black if black_ok else 0)
    w4: tuple[int, ...] = ()
    w5: tuple[int, ...] = ()
    for x, y in pairs:
        common = rows[x] & rows[y]
        if not w4 and common & shared_mask:
            w4 = (x, y, (common & shared_mask & -(common & shared_mask)).bit_length() - 1)
        if not w5 and g.has_edge(x, y) and not common & red:
            w5 = (x, y)
    out.append(("associated-no-common-blue", not w4, w4))
    out.append(("adjacent-associated-share-red", not w5, w5))
    return out


def check_unfoldment(cg: ColoredGraph) -> ConditionReport:
    """Evaluate the five recognition conditions of a colored graph."""
    if any(c not in (RED, BLUE) for c in cg.colors):
        raise GraphError("a colored graph uses only red and blue")
    return ConditionReport(tuple(_conditions(cg, False)))


def check_semi_unfoldment(link: ColoredLink) -> ConditionReport:
    """The five conditions (common black neighbours count in the fourth) plus the black-vertex condition."""
    rows = link.graph.rows
    red, blue = link.mask(RED), link.mask(BLUE)
    out = _conditions(link, True)
    w6: tuple[int, ...] = ()
    for b in (link.x0, link.y0):
        if rows[b] & red:
            w6 = (b, (rows[b] & red & -(rows[b] & red)).bit_length() - 1)
            break
        nb = list(iter_bits(rows[b] & blue))
        pair = next(((p, q) for p, q in combinations(nb, 2) if not rows[p] >> q & 1), None)
        if pair:
            w6 = (b, *pair)
            break
    out.append(("black-neighborhood", not w6, w6))
    return ConditionReport(tuple(out))


# ---------------------------------------------------------------- folding


def _blue_classes(cg: ColoredGraph, pairs: Sequence[tuple[int, int]]) -> dict[int, int]:
    """Map each blue vertex to its clique label (minimum vertex id of its
    component in the blue graph without associated-pair edges)."""
    g = cg.graph
    blue = cg.mask(BLUE)
    assoc = {(x, y) for x, y in pairs} | {(y, x) for x, y in pairs}
    label: dict[int, int] = {}
    for b in iter_bits(blue):
        if b in label:
            continue
        stack, comp = [b], [b]
        label[b] = b
        while stack:
            v = stack.pop()
            for w in iter_bits(g.rows[v] & blue):
                if w not in label and (v, w) not in assoc:
                    label[w] = b
                    stack.append(w)
                    comp.append(w)
    return label


def _fold_parts(cg: ColoredGraph) -> tuple[list[int], list[tuple[int, int]], dict[int, int]]:
    pairs = associated_pairs(cg)
    label = _blue_classes(cg, pairs)
    vertices = sorted(set(label.values()))
    # each blue is in exactly one pair; discovery order = smaller end ascending
    edges = [(label[x], label[y]) for x, y in sorted(pairs)]
    return vertices, edges, label


def fold(cg: ColoredGraph) -> MultiGraph:
    """Recover the multigraph of a colored graph satisfying the five conditions."""
    report = check_unfoldment(cg)
    if not report.passed:
        raise GraphError(f"not an unfoldment: {', '.join(report.failed())}")
    vertices, edges, _ = _fold_parts(cg)
    index = {v: i for i, v in enumerate(vertices)}
    try:
        return build_multigraph(len(vertices), [(index[a], index[b]) for a, b in edges])
    except MultiGraphError as exc:
        raise GraphError(f"fold produced an invalid multigraph: {exc}") from None


@dataclass(frozen=True)
class SemiFold:
    multigraph: MultiGraph
    extra_vertex: bool  # an end of e0 had no blue neighbour and became a new vertex


def fold_semi(link: ColoredLink) -> SemiFold:
    report = check_semi_unfoldment(link)
    if not report.passed:
        raise GraphError(f"not a link unfoldment: {', '.join(report.failed())}")
    g = link.graph
    rest = g.full & ~(1 << link.x0 | 1 << link.y0)
    if rest:
        sub, keep = induced_subgraph(g, rest)
        inner = ColoredGraph(sub, tuple(link.colors[v] for v in keep))
        vertices, edges, label = _fold_parts(inner)
        label = {keep[b]: keep[lab] for b, lab in label.items()}
        vertices = [keep[v] for v in vertices]
        edges = [(keep[a], keep[b]) for a, b in edges]
    else:
        vertices, edges, label = [], [], {}
    blue = link.mask(BLUE)
    extra = False
    ends = []
    for z in (link.x0, link.y0):
        nb = list(iter_bits(g.rows[z] & blue))
        if nb:
            ends.append(label[nb[0]])
        else:
            extra = True
            ends.append(-1 - len(ends))  # fresh vertex
            vertices.append(ends[-1])
    vertices = sorted(vertices, key=lambda v: (v < 0, abs(v)))
    index = {v: i for i, v in enumerate(vertices)}
    edges.append((ends[0], ends[1]))
    f = build_multigraph(len(vertices), [(index[a], index[b]) for a, b in edges], len(edges) - 1)
    return SemiFold(f, extra)


def delete_link(cg: ColoredGraph, e: int) -> ColoredGraph:
    """Remove the vertices of the pure link of edge ``e`` (needs a trace)."""
    if cg.trace is None:
        raise GraphError("deleting a link needs the unfoldment trace")
    drop = mask_of(cg.trace.link_vertices(e))
    keep_mask = cg.graph.full & ~drop
    sub, keep = induced_subgraph(cg.graph, keep_mask)
    colors = tuple(cg.colors[v] for v in keep)
    if isinstance(cg, ColoredLink):
        return ColoredLink(sub, colors, None, keep.index(cg.x0), keep.index(cg.y0), cg.has_x0y0)
    return ColoredGraph(sub, colors)
