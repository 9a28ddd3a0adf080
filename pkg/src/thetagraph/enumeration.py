"""Isomorph-free enumeration of small graphs and multigraphs, canonical
forms, and exhaustive minimality scans."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable, Iterable, Iterator, Sequence

from .graph import GraphError, SimpleGraph, from_graph6, induced_subgraph, iter_bits, popcount
from .multigraph import MultiGraph, build_multigraph, canonical_key

MAX_CANON = 10
MAX_ENUM = 9
MAX_SCAN = 16


# ---------------------------------------------------------------- canonical form


def _refine(rows: Sequence[int], cells: list[int]) -> list[int]:
    """Equitable refinement of an ordered partition (cells are vertex masks).

    Splits are ordered by a label-free signature, so the result commutes
    with vertex relabeling.
    """
    changed = True
    while changed:
        changed = False
        out: list[int] = []
        for cell in cells:
            if cell & (cell - 1) == 0:
                out.append(cell)
                continue
            sig: dict[tuple[int, ...], int] = {}
            for v in iter_bits(cell):
                r = rows[v]
                key = tuple(popcount(r & c) for c in cells)
                sig[key] = sig.get(key, 0) | 1 << v
            if len(sig) > 1:
                changed = True
                out.extend(sig[k] for k in sorted(sig))
            else:
                out.append(cell)
        cells = out
    return cells


def _code(rows: Sequence[int], order: Sequence[int]) -> int:
    n = len(order)
    code = 0
    for i in range(n):
        ri = rows[order[i]]
        for j in range(i + 1, n):
            code = code << 1 | (ri >> order[j] & 1)
    return code


def canonical_form(g: SimpleGraph) -> bytes:
    """Minimum upper-triangle adjacency code over refinement-compatible labelings."""
    n = g.n
    if n > MAX_CANON:
        raise GraphError(f"canonical form limited to n <= {MAX_CANON}")
    rows = g.rows
    best = [None]
    # twin classes: u, v with equal open or closed neighbourhoods can be swapped
    twin_rep = list(range(n))
    for u in range(n):
        for v in range(u):
            if twin_rep[v] == v:
                ru, rv = rows[u] & ~(1 << v), rows[v] & ~(1 << u)
                if ru == rv:
                    twin_rep[u] = v
                    break

    def search(cells: list[int]) -> None:
        cells = _refine(rows, cells)
        for idx, cell in enumerate(cells):
            if cell & (cell - 1):
                break
        else:
            order = [c.bit_length() - 1 for c in cells]
            code = _code(rows, order)
            if best[0] is None or code < best[0]:
                best[0] = code
            return
        tried = set()
        for v in iter_bits(cell):
            rep = twin_rep[v]
            if rep in tried or (rep != v and cell >> rep & 1):
                continue
            tried.add(rep)
            search(cells[:idx] + [1 << v, cell & ~(1 << v)] + cells[idx + 1:])

    degree_cells: dict[int, int] = {}
    for v in range(n):
        d = popcount(rows[v])
        degree_cells[d] = degree_cells.get(d, 0) | 1 << v
    search([degree_cells[d] for d in sorted(degree_cells)])
    nbits = n * (n - 1) // 2
    return bytes([n]) + best[0].to_bytes((nbits + 7) // 8 or 1, "big")


# ---------------------------------------------------------------- simple graphs


def _extend(g: SimpleGraph, nbrs: int) -> SimpleGraph:
    n = g.n
    rows = [r | ((nbrs >> v & 1) << n) for v, r in enumerate(g.rows)]
    rows.append(nbrs)
    return SimpleGraph(n + 1, tuple(rows))


def graph_levels(max_n: int, prune: Callable[[SimpleGraph], bool] | None = None,
                 min_n: int = 1) -> dict[int, list[SimpleGraph]]:
    """Isomorphism-class representatives for every order min_n..max_n among
    graphs all of whose induced subgraphs pass ``prune`` (a hereditary
    property), each level sorted by (edge count, canonical form).

    Built by vertex augmentation: every graph on n vertices is some graph on
    n - 1 vertices plus a vertex, and induced subgraphs of pruned graphs are
    pruned too, so extending only surviving classes is complete.
    """
    if not 1 <= max_n <= MAX_CANON:
        raise GraphError(f"enumeration supports 1 <= n <= {MAX_CANON}")
    single = SimpleGraph(1, (0,))
    level = {canonical_form(single): single} if prune is None or prune(single) else {}
    out: dict[int, list[SimpleGraph]] = {}
    for size in range(1, max_n + 1):
        if size > 1:
            nxt: dict[bytes, SimpleGraph] = {}
            for g in level.values():
                for nbrs in range(1 << g.n):
                    h = _extend(g, nbrs)
                    if prune is not None and not prune(h):
                        continue
                    key = canonical_form(h)
                    if key not in nxt:
                        nxt[key] = h
            level = nxt
        if size >= min_n:
            items = sorted(level.items(), key=lambda kv: (kv[1].m, kv[0]))
            out[size] = [_canonical_graph(k) for k, _ in items]
    return out


def graph_classes(n: int, prune: Callable[[SimpleGraph], bool] | None = None) -> list[SimpleGraph]:
    """One representative per isomorphism class on n vertices (see graph_levels)."""
    return graph_levels(n, prune, n)[n]


def _canonical_graph(key: bytes) -> SimpleGraph:
    n = key[0]
    nbits = n * (n - 1) // 2
    code = int.from_bytes(key[1:], "big")
    rows = [0] * n
    k = nbits - 1
    for i in range(n):
        for j in range(i + 1, n):
            if code >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return SimpleGraph(n, tuple(rows))


def enumerate_graphs(n: int, predicate: Callable[[SimpleGraph], bool] | None = None,
                     prune: Callable[[SimpleGraph], bool] | None = None) -> Iterator[SimpleGraph]:
    """Non-isomorphic graphs on n vertices satisfying ``predicate``, ordered
    by (edge count, canonical form). Each is returned in canonical labeling."""
    if not 1 <= n <= MAX_ENUM:
        raise GraphError(f"enumerate_graphs supports 1 <= n <= {MAX_ENUM}")
    for g in graph_classes(n, prune):
        if predicate is None or predicate(g):
            yield g


def graphs_from_graph6(lines: Iterable[str]) -> Iterator[SimpleGraph]:
    for ln in lines:
        ln = ln.strip()
        if ln and not ln.startswith("#"):
            yield from_graph6(ln)


# ---------------------------------------------------------------- multigraphs


def enumerate_multigraphs(max_n: int, max_mult: int, semi: bool = False) -> Iterator[MultiGraph]:
    """One multigraph per isomorphism class with 1..max_n vertices, per-pair
    multiplicity <= max_mult and no isolated vertices.

    In semi mode each class additionally labels one edge e0, which is either
    a loop (counted outside the multiplicity) or one of the parallel edges of
    a pair (counted inside it); e0 is always the last edge index.
    """
    if max_mult > 4 or max_n > (3 if semi else 4) or max_n < 1:
        raise GraphError("multigraph enumeration caps: n <= 4 (n <= 3 with e0), multiplicity <= 4")
    seen: set[tuple] = set()
    out: list[tuple[tuple, MultiGraph]] = []
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        for mult in product(range(max_mult + 1), repeat=len(pairs)):
            edges = [p for p, m in zip(pairs, mult) for _ in range(m)]
            options: list[tuple[list[tuple[int, int]], int | None]] = []
            if not semi:
                options.append((edges, None))
            else:
                for v in range(n):
                    options.append((edges + [(v, v)], len(edges)))
                for p, m in zip(pairs, mult):
                    if m:
                        rest = list(edges)
                        rest.remove(p)
                        options.append((rest + [p], len(edges) - 1))
            for es, e0 in options:
                if not es or (e0 is not None and len(es) < 2):
                    continue
                if len({v for e in es for v in e}) != n:
                    continue
                f = build_multigraph(n, es, e0)
                key = (n, canonical_key(f))
                if key not in seen:
                    seen.add(key)
                    out.append((key, f))
    out.sort(key=lambda kv: kv[0])
    for _, f in out:
        yield f


# ---------------------------------------------------------------- minimality


@dataclass(frozen=True)
class MinimalityVerdict:
    is_minimal: bool
    witness: tuple[int, ...] | None = None
    examined: int = 0


def minimality_scan(g: SimpleGraph, prop: Callable[[SimpleGraph], bool],
                    min_size: int = 1) -> MinimalityVerdict:
    """Check that no proper induced subgraph satisfies ``prop``.

    Subsets are scanned by decreasing size, each size in lexicographic order,
    stopping at the first witness. ``min_size`` skips subsets below a size
    where ``prop`` is known to fail.
    """
    n = g.n
    if n > MAX_SCAN:
        raise GraphError(f"minimality scan limited to n <= {MAX_SCAN}")
    examined = 0
    for size in range(n - 1, max(min_size, 1) - 1, -1):
        for subset in combinations(range(n), size):
            examined += 1
            sub, _ = induced_subgraph(g, subset)
            if prop(sub):
                return MinimalityVerdict(False, subset, examined)
    return MinimalityVerdict(True, None, examined)
