"""Generators for the named multigraphs, links, chains, minimal families
ℋ1–ℋ7, the counterexamples G1–G9 and Brousek's graphs P(k1, k2, k3).

Every generator returns its graph together with a label map from symbol
strings ("x_1", "a'_2", "H.a_1", ...) to vertex ids.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .forbidden import ForbiddenSpec, is_free, longest_induced_path
from .graph import GraphError, Link, SimpleGraph, build_graph, is_biconnected
from .multigraph import MultiGraph, build_multigraph
from .unfold import TRIANGLE, PureLinkSpec, path_link, unfold


@dataclass(frozen=True)
class LabeledGraph:
    graph: SimpleGraph
    labels: dict[str, int] = field(default_factory=dict, compare=False)

    def __getitem__(self, name: str) -> int:
        return self.labels[name]


class _Builder:
    """Accumulates labeled vertices and edges."""

    def __init__(self) -> None:
        self.labels: dict[str, int] = {}
        self.edges: list[tuple[int, int]] = []
        self.n = 0

    def vertex(self, name: str | None = None) -> int:
        v = self.n
        self.n += 1
        if name is not None:
            if name in self.labels:
                raise GraphError(f"duplicate label {name}")
            self.labels[name] = v
        return v

    def alias(self, name: str, v: int) -> None:
        self.labels[name] = v

    def path(self, vs: Sequence[int]) -> None:
        self.edges += list(zip(vs, vs[1:]))

    def clique(self, vs: Sequence[int]) -> None:
        self.edges += list(combinations(vs, 2))

    def pure_link(self, a: int, b: int, spec: PureLinkSpec, prefix: str) -> None:
        reds = [self.vertex(f"{prefix}:{i + 1}") for i in range(spec.inner)]
        self.path([a, *reds, b])
        if spec.shape == "triangle":
            self.edges.append((a, b))

    def build(self) -> LabeledGraph:
        return LabeledGraph(build_graph(self.n, self.edges), dict(self.labels))


# ---------------------------------------------------------------- multigraph catalog

# Vertex order x0, x1, x2, x3 (M6, M7: x1..x4 mapped to 0..3).
_CATALOG: dict[str, tuple[int, list[tuple[int, int]], int | None]] = {
    "M1": (4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)], None),
    "M2": (4, [(0, 1), (0, 2), (0, 2), (0, 3), (0, 3), (1, 2), (1, 3)], None),
    "M3": (4, [(0, 1), (0, 1), (0, 1), (0, 2), (0, 2), (0, 3), (0, 3), (2, 3)], None),
    "M4": (4, [(0, 1)] * 3 + [(0, 2)] * 3 + [(0, 3)] * 3, None),
    "M5": (4, [(0, 1)] * 3 + [(0, 2), (0, 3), (2, 3), (2, 3)], None),
    "M6": (4, [(0, 3), (1, 2), (0, 1), (0, 1), (2, 3), (2, 3)], None),
    "M7": (4, [(0, 1)] * 3 + [(1, 2)] * 2 + [(2, 3)] * 3, None),
    "N1": (2, [(0, 1), (0, 1), (0, 1), (1, 1)], 3),
    "N2": (2, [(0, 1), (0, 1), (0, 1)], 1),
}

# Labels of the two ends (u^e, v^e) of each edge of M1..M4 in the ℋ1..ℋ4 pictures.
_H_LABELS = {
    1: ["x'_1 x_1", "y'_2 y_2", "z'_3 z_3", "z_1 z_2", "x_2 x_3", "y_3 y_1"],
    2: ["x'_1 x_1", "x'_2 x_2", "y'_2 y_2", "x'_3 x_3", "z'_3 z_3", "z_1 z_2", "y_1 y_3"],
    3: ["x'_1 x_1", "y'_1 y_1", "z'_1 z_1", "y'_2 y_2", "z'_2 z_2", "y'_3 y_3", "z'_3 z_3", "x_2 x_3"],
    4: [f"{c}'_{i} {c}_{i}" for i in (1, 2, 3) for c in "xyz"],
}


def gen_catalog(name: str) -> MultiGraph:
    key = name.upper()
    if key not in _CATALOG:
        raise GraphError(f"unknown catalog multigraph {name!r}")
    n, edges, e0 = _CATALOG[key]
    return build_multigraph(n, edges, e0)


# ---------------------------------------------------------------- links and chains


def _specs(specs, count: int) -> list[PureLinkSpec]:
    if specs is None:
        return [TRIANGLE] * count
    if isinstance(specs, PureLinkSpec):
        return [specs] * count
    specs = list(specs)
    if len(specs) != count:
        raise GraphError(f"expected {count} pure-link specs, got {len(specs)}")
    return specs


def _add_link(b: _Builder, cls: str, specs, x: int, y: int, prefix: str) -> None:
    cls = cls.upper()
    if cls == "L1":
        s = _specs(specs, 3)
        a, bb, c = (b.vertex(f"{prefix}{t}") for t in "abc")
        a2, b2, c2 = (b.vertex(f"{prefix}{t}'") for t in "abc")
        b.clique([x, y, a, bb, c])
        b.clique([a2, b2, c2])
        for (p, q, t), spec in zip([(a, a2, "a"), (bb, b2, "b"), (c, c2, "c")], s):
            b.pure_link(p, q, spec, f"{prefix}{t}~{t}'")
    elif cls in ("L2", "L3"):
        s = _specs(specs, 2)
        a, bb = b.vertex(f"{prefix}a"), b.vertex(f"{prefix}b")
        a2, b2 = b.vertex(f"{prefix}a'"), b.vertex(f"{prefix}b'")
        b.clique([x, a, bb])
        b.clique([y, a2, b2])
        b.pure_link(a, a2, s[0], f"{prefix}a~a'")
        b.pure_link(bb, b2, s[1], f"{prefix}b~b'")
        if cls == "L3":
            b.edges.append((x, y))
    else:
        raise GraphError(f"unknown link class {cls!r}")


def gen_link(cls: str, specs=None) -> tuple[Link, dict[str, int]]:
    b = _Builder()
    x, y = b.vertex("x"), b.vertex("y")
    _add_link(b, cls, specs, x, y, "")
    lg = b.build()
    return Link(lg.graph, x, y), lg.labels


@dataclass(frozen=True)
class Bipath:
    l1: int
    l2: int

    def __post_init__(self) -> None:
        if self.l1 < 0 or self.l2 < 0:
            raise GraphError("bipath lengths are non-negative")

    @property
    def kind(self) -> str:
        return "B"


@dataclass(frozen=True)
class TriangleChain:
    k: int

    def __post_init__(self) -> None:
        if self.k < 3:
            raise GraphError("a triangle chain has k >= 3 vertices")

    @property
    def kind(self) -> str:
        return "T"


def chain_type(spec: Sequence[Bipath | TriangleChain]) -> str:
    return spec[0].kind + spec[-1].kind


def _check_chain(spec) -> list:
    spec = list(spec)
    if not spec:
        raise GraphError("a chain needs at least one pure chain")
    if len(spec) > 1 and any(isinstance(p, Bipath) and p.l1 == p.l2 == 0 for p in spec):
        raise GraphError("the trivial chain B(0,0) is only allowed on its own")
    return spec


def parse_chain(text: str) -> list[Bipath | TriangleChain]:
    """Parse e.g. ``"B(2,1) T(3)"`` (separators: space, ';', '+')."""
    out: list[Bipath | TriangleChain] = []
    pos = 0
    s = text.strip()
    pat = re.compile(r"[\s;+]*([BT])\(\s*(\d+)\s*(?:,\s*(\d+)\s*)?\)[\s;+]*", re.IGNORECASE)
    while pos < len(s):
        m = pat.match(s, pos)
        if not m:
            raise GraphError(f"cannot parse chain at {s[pos:]!r}")
        kind, p, q = m.group(1).upper(), m.group(2), m.group(3)
        if kind == "B":
            if q is None:
                raise GraphError("B(l1,l2) takes two lengths")
            out.append(Bipath(int(p), int(q)))
        else:
            if q is not None:
                raise GraphError("T(k) takes one parameter")
            out.append(TriangleChain(int(p)))
        pos = m.end()
    return _check_chain(out)


def _add_chain(b: _Builder, spec, prefix: str, origin: tuple[int, int] | None = None) -> tuple[int, int, int, int]:
    """Append a chain; returns (x1, y1, x2, y2). ``origin`` reuses existing vertices for x1, y1."""
    spec = _check_chain(spec)
    prev_end: tuple[int, int] | None = None
    first: tuple[int, int] | None = None
    for i, part in enumerate(spec, start=1):
        tag = f"{prefix}{i}"
        start = origin if (i == 1 and origin is not None) else None
        if isinstance(part, Bipath):
            a = start[0] if start else b.vertex()
            c_ = start[1] if start else b.vertex()
            px = [a] + [b.vertex() for _ in range(part.l1)]
            py = [c_] + [b.vertex() for _ in range(part.l2)]
            b.path(px)
            b.path(py)
            for j, v in enumerate(px):
                b.alias(f"{tag}.p{j}", v)
            for j, v in enumerate(py):
                b.alias(f"{tag}.q{j}", v)
            ends = (px[0], py[0], px[-1], py[-1])
        else:
            vs = [start[0], start[1]] if start else [b.vertex(), b.vertex()]
            vs += [b.vertex() for _ in range(part.k - 2)]
            for j in range(part.k):
                for jj in (j + 1, j + 2):
                    if jj < part.k:
                        b.edges.append((vs[j], vs[jj]))
                b.alias(f"{tag}.t{j + 1}", vs[j])
            k = part.k
            # the terminus vertex paired with a_1 is the end of the same parity
            x2, y2 = (vs[k - 1], vs[k - 2]) if k % 2 == 1 else (vs[k - 2], vs[k - 1])
            ends = (vs[0], vs[1], x2, y2)
        for name, v in zip(("a", "b", "c", "d"), ends):
            b.alias(f"{prefix}{name}_{i}", v)
        if prev_end is not None:
            b.clique([prev_end[0], prev_end[1], ends[0], ends[1]])
        else:
            first = (ends[0], ends[1])
        prev_end = (ends[2], ends[3])
    assert first is not None and prev_end is not None
    return first[0], first[1], prev_end[0], prev_end[1]


def gen_chain(spec) -> tuple[LabeledGraph, tuple[int, int], tuple[int, int]]:
    """Chain graph with origin pair (x1, y1) and terminus pair (x2, y2)."""
    b = _Builder()
    x1, y1, x2, y2 = _add_chain(b, spec, "")
    for name, v in (("x_1", x1), ("y_1", y1), ("x_2", x2), ("y_2", y2)):
        b.alias(name, v)
    return b.build(), (x1, y1), (x2, y2)


# ---------------------------------------------------------------- ℋ families


@dataclass(frozen=True)
class HFamilySpec:
    family: int
    links: tuple[PureLinkSpec, ...] | None = None
    chain: tuple[Bipath | TriangleChain, ...] = (Bipath(0, 0),)

    _CLASSES = {5: ("L1", "L1"), 6: ("L1", "L2"), 7: ("L2", "L2")}

    def __post_init__(self) -> None:
        if not 1 <= self.family <= 7:
            raise GraphError("family index must be 1..7")
        if self.links is not None and len(self.links) != self.link_count:
            raise GraphError(f"family {self.family} needs {self.link_count} pure-link specs")
        if self.family >= 5:
            _check_chain(self.chain)
            t = chain_type(self.chain)
            if self.family == 6 and t not in ("BB", "TB"):
                raise GraphError(f"family 6 needs chain type BB or TB, got {t}")
            if self.family == 7 and t != "BB":
                raise GraphError(f"family 7 needs chain type BB, got {t}")

    @property
    def link_classes(self) -> tuple[str, str]:
        return self._CLASSES[self.family]

    @property
    def link_count(self) -> int:
        if self.family <= 4:
            return gen_catalog(f"M{self.family}").m
        return sum(3 if c == "L1" else 2 for c in self._CLASSES[self.family])

    def specs(self) -> list[PureLinkSpec]:
        return list(self.links) if self.links is not None else [TRIANGLE] * self.link_count


def gen_H(spec: HFamilySpec | int, links=None, chain=None) -> LabeledGraph:
    if isinstance(spec, int):
        kw = {}
        if links is not None:
            kw["links"] = tuple(links)
        if chain is not None:
            kw["chain"] = tuple(chain)
        spec = HFamilySpec(spec, **kw)
    specs = spec.specs()
    if spec.family <= 4:
        cg = unfold(gen_catalog(f"M{spec.family}"), specs)
        labels: dict[str, int] = {}
        for e, names in enumerate(_H_LABELS[spec.family]):
            un, vn = names.split()
            ue, ve = cg.trace.ends[e]
            labels[un], labels[vn] = ue, ve
            for j, r in enumerate(cg.trace.inner[e]):
                labels[f"{un}~{vn}:{j + 1}"] = r
        return LabeledGraph(cg.graph, labels)
    b = _Builder()
    x1, y1, x2, y2 = _add_chain(b, spec.chain, "H.")
    for name, v in (("x_1", x1), ("y_1", y1), ("x_2", x2), ("y_2", y2)):
        b.alias(name, v)
    c1, c2 = spec.link_classes
    k1 = 3 if c1 == "L1" else 2
    _add_link(b, c1, specs[:k1], x1, y1, "L1.")
    _add_link(b, c2, specs[k1:], x2, y2, "L2.")
    return b.build()


# ---------------------------------------------------------------- Brousek graphs


def gen_brousek(k1: int, k2: int, k3: int) -> SimpleGraph:
    """P(k1,k2,k3): an unfoldment of the triple dipole (triangle for k = 2,
    a path of length k - 1 otherwise)."""
    ks = (k1, k2, k3)
    if min(ks) < 2:
        raise GraphError("Brousek parameters are >= 2")
    dipole = build_multigraph(2, [(0, 1)] * 3)
    return unfold(dipole, [TRIANGLE if k == 2 else path_link(k - 1) for k in ks]).graph


# ---------------------------------------------------------------- counterexamples G1..G9

G_MIN_K = {1: 4, 2: 4, 3: 3, 4: 4, 5: 3, 6: 5, 7: 3, 8: 3, 9: 9}

_S = ForbiddenSpec
G_FACTS: dict[int, dict] = {
    1: {},
    2: {"free": [_S("cycle", (4,))], "lip": 3},
    3: {"free": [_S("star", (5,))], "lip": 3},
    4: {"free": [_S("star", (4,))], "lip": 4},
    5: {"free": [_S("cycle", (4,)), _S("star", (5,)), _S("star", (4,))]},
    6: {"free": [_S("cycle", (4,)), _S("star", (5,)), _S("star", (4,)), _S("star", (3,))]},
    7: {"free": [_S("star", (3,)), _S("z", (6,)), _S("n", (1, 1, 5)), _S("n", (2, 2, 2))]},
    8: {"free": [_S("star", (3,)), _S("b", (3, 3))]},
    9: {"free": [_S("star", (3,)), _S("b", (2, 5)), _S("n", (1, 2, 4))], "lip": 8},
}


def g_fact_violations(i: int, g: SimpleGraph) -> list[str]:
    """Freeness and induced-path facts of G_i that ``g`` fails."""
    facts = G_FACTS[i]
    bad = [f"contains {s.name}" for s in facts.get("free", []) if not is_free(g, [s])]
    if "lip" in facts:
        lip = longest_induced_path(g)
        if lip != facts["lip"]:
            bad.append(f"longest induced path {lip} != {facts['lip']}")
    return bad


def _clique_with(b: _Builder, named: Sequence[int], k: int) -> None:
    others = [b.vertex(f"w_{j}") for j in range(k - len(named))]
    b.clique(list(named) + others)


def gen_G(i: int, k: int | None = None, validate: bool = True, row_len: int | None = None) -> LabeledGraph:
    """``row_len`` overrides the drawn length (5) of the b, c, d rows of G_6."""
    if i not in G_MIN_K:
        raise GraphError("G index must be 1..9")
    k = G_MIN_K[i] if k is None else k
    if k < G_MIN_K[i]:
        raise GraphError(f"G_{i} needs k >= {G_MIN_K[i]}")
    if row_len is not None and (i != 6 or row_len < 2):
        raise GraphError("row_len applies to G_6 only and must be >= 2")
    b = _Builder()
    V = b.vertex
    if i in (1, 2):
        u1, u2 = V("u_1"), V("u_2")
        for j in range(1, k + 1):
            v = V(f"v_{j}")
            b.edges += [(u1, v), (u2, v)]
        if i == 2:
            b.edges.append((u1, u2))
    elif i == 3:
        v1, v2 = V("v_1"), V("v_2")
        _clique_with(b, [v1, v2], k)
        for j in (1, 2, 3):
            u = V(f"u_{j}")
            b.edges += [(u, v1), (u, v2)]
    elif i == 4:
        vs = [V(f"v_{j}") for j in (1, 2, 3, 4)]
        _clique_with(b, vs, k)
        for j in (1, 2, 3, 4):
            u = V(f"u_{j}")
            pair = vs[:2] if j <= 2 else vs[2:]
            b.edges += [(u, pair[0]), (u, pair[1])]
    elif i == 5:
        xs = [V(f"x_{j}") for j in (1, 2, 3)]
        ys = [V(f"y_{j}") for j in (1, 2, 3)]
        arow = [V(f"v_{j}") for j in range(1, k + 1)]
        rows = {r: [V(f"{r}_{j}") for j in (1, 2, 3)] for r in "bcd"}
        b.path(xs)
        b.path(ys)
        b.path(arow)
        for r in "bcd":
            b.path(rows[r])
        b.edges += [(xs[0], arow[0]), (xs[0], rows["b"][0]), (xs[2], rows["c"][0]), (xs[2], rows["d"][0])]
        b.edges += [(ys[0], arow[-1]), (ys[0], rows["b"][2]), (ys[2], rows["c"][2]), (ys[2], rows["d"][2])]
    elif i == 6:
        xs = [V(f"x_{j}") for j in (1, 2, 3)]
        ys = [V(f"y_{j}") for j in (1, 2, 3)]
        z11, z12, z21, z22 = V("z_11"), V("z_12"), V("z_21"), V("z_22")
        arow = [V(f"v_{j}") for j in range(1, k + 1)]
        rows = {r: [V(f"{r}_{j}") for j in range(1, (row_len or 5) + 1)] for r in "bcd"}
        b.path([z11, *xs, z12])
        b.path([z21, *ys, z22])
        b.path(arow)
        for r in "bcd":
            b.path(rows[r])
        b.clique([arow[0], z11, rows["b"][0]])
        b.clique([rows["c"][0], z12, rows["d"][0]])
        b.clique([arow[-1], z21, rows["b"][-1]])
        b.clique([rows["c"][-1], z22, rows["d"][-1]])
    elif i == 7:
        x1, y1 = V("x_1"), V("y_1")
        _clique_with(b, [x1, y1], k)
        x2, x3, y2, y3 = V("x_2"), V("x_3"), V("y_2"), V("y_3")
        z11, z12, z21, z22 = V("z_11"), V("z_12"), V("z_21"), V("z_22")
        u1, u2, u3 = V("u_1"), V("u_2"), V("u_3")
        for tri in ([x1, x2, z11], [y1, y2, z12], [x2, x3, z21], [y2, y3, z22],
                    [z11, z12, u1], [z21, z22, u2], [x3, y3, u3]):
            b.clique(tri)
    elif i == 8:
        a0, e0 = V("a_0"), V("e_0")
        _clique_with(b, [a0, e0], k)
        a2, a3, a5 = V("a_2"), V("a_3"), V("a_5")
        e2, e3, e5 = V("e_2"), V("e_3"), V("e_5")
        b1, b4, d1, d4 = V("b_1"), V("b_4"), V("d_1"), V("d_4")
        c1, c3, c4 = V("c_1"), V("c_3"), V("c_4")
        b.path([a0, a2, a3, a5])
        b.path([e0, e2, e3, e5])
        for tri in ([a0, b1, a2], [a3, b4, a5], [e0, d1, e2], [e3, d4, e5],
                    [b1, c1, d1], [b4, c3, d4], [a5, c4, e5]):
            b.clique(tri)
        b.clique([a2, a3, e2, e3])
    else:
        xs = [V(f"x_{j}") for j in range(1, 10)]
        _clique_with(b, xs, k)
        ys = [V(f"y_{j}") for j in range(1, 10)]
        zs = [V(f"z_{j}") for j in range(1, 10)]
        for j in range(9):
            b.clique([xs[j], ys[j], zs[j]])
        for j in (0, 3, 6):
            b.clique(ys[j:j + 3])
    lg = b.build()
    if validate:
        bad = g_fact_violations(i, lg.graph)
        if bad:
            raise GraphError(f"G_{i}({k}) self-validation failed: {'; '.join(bad)}")
    return lg
