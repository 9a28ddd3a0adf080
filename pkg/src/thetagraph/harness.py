"""Named verification tasks, JSON-lines reports and the key-value config file.

Every task returns a VerificationReport whose body (everything except wall
time) is a deterministic function of the task id and its parameters.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from multiprocessing import Pool
from typing import Any, Callable, Iterable

from .enumeration import MAX_ENUM, enumerate_multigraphs, graph_levels, minimality_scan
from .families import (G_MIN_K, Bipath, HFamilySpec, TriangleChain, chain_type, g_fact_violations,
                       gen_catalog, gen_G, gen_H)
from .forbidden import ForbiddenSpec, find_induced, has_claw, make_forbidden, parse_forbidden
from .graph import (GraphError, SimpleGraph, from_graph6, independence_number, is_biconnected, is_complete,
                    is_connected, is_cut, is_cycle, is_locally_connected, list_two_cuts, to_edge_list, to_graph6,
                    vertex_connectivity)
from .hamilton import (hamilton_cycle, hamilton_path_between, spanning_theta, verify_hamilton_cycle,
                       verify_hamilton_path, verify_theta)
from .multigraph import (MultiGraph, find_euler_trail, is_k_edge_connected, lemma_minimal_loopless,
                         lemma_minimal_semi, multigraph_isomorphic)
from .unfold import (BLUE, RED, ColoredGraph, PureLinkSpec, associated_pairs, check_semi_unfoldment,
                     check_unfoldment, fold, path_link, unfold, unfold_semi, TRIANGLE)

MAIN_FORBIDDEN = "B1,5,B2,4,N1,1,4,N1,2,3"
LINK_CHOICES = (TRIANGLE, path_link(2), path_link(3))


class TaskError(ValueError):
    """Unknown task or parameters outside the caps."""


def graph_text(g: SimpleGraph) -> str:
    return to_graph6(g) if g.n <= 62 else to_edge_list(g)


@dataclass
class VerificationReport:
    task: str
    params: dict[str, Any]
    examined: int = 0
    violations: list[tuple[str, str]] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def body_lines(self) -> list[str]:
        """Header, one line per violation, then a summary; no timing."""
        head = {"record": "report", "task": self.task, "params": self.params}
        lines = [json.dumps(head, sort_keys=True)]
        for inst, reason in self.violations:
            lines.append(json.dumps({"record": "violation", "instance": inst, "reason": reason}, sort_keys=True))
        summary = {"record": "summary", "examined": self.examined, "counts": self.counts,
                   "violations": len(self.violations), "pass": self.passed}
        lines.append(json.dumps(summary, sort_keys=True))
        return lines

    def body(self) -> str:
        return "\n".join(self.body_lines()) + "\n"

    def to_jsonl(self) -> str:
        timing = json.dumps({"record": "timing", "wall_time": round(self.wall_time, 3)})
        return self.body() + timing + "\n"


# ---------------------------------------------------------------- per-graph checks
# Each check maps a graph to None (premise fails, not counted), "" (holds)
# or a violation reason. They are top-level so worker processes can use them.


def _theta_reason(g: SimpleGraph) -> str:
    cert = spanning_theta(g)
    if cert is None:
        return "no spanning theta"
    if not verify_theta(g, cert):
        return "theta certificate fails verification"
    return ""


def check_theta_sweep(g: SimpleGraph) -> str | None:
    if g.n < 4 or is_cycle(g) or not is_biconnected(g):
        return None
    return _theta_reason(g)


def check_obs_p3(g: SimpleGraph) -> str | None:
    if g.n < 3 or is_cycle(g) or not is_biconnected(g):
        return None
    if not is_complete(g) or g.n < 4:
        return "2-connected P3-free non-cycle graph is not a complete graph on >= 4 vertices"
    return _theta_reason(g)


def check_theorem_a(g: SimpleGraph) -> str | None:
    if g.n < 3 or not is_connected(g) or not is_locally_connected(g):
        return None
    cyc = hamilton_cycle(g)
    if cyc is None:
        return "connected locally connected claw-free graph without Hamilton cycle"
    return "" if verify_hamilton_cycle(g, cyc) else "Hamilton cycle fails verification"


def check_theorem_b(g: SimpleGraph) -> str | None:
    if g.n < 2 or not is_connected(g) or is_complete(g):
        return None
    k = vertex_connectivity(g)
    for cut in combinations(range(g.n), k):
        mask = sum(1 << v for v in cut)
        if not is_cut(g, mask):
            continue
        outside = g.full & ~mask
        for v in cut:
            if g.rows[v] & outside != outside:
                return f"vertex {v} of minimum cut {list(cut)} misses a vertex outside the cut"
    return ""


def check_theorem_d(g: SimpleGraph) -> str | None:
    if g.n < 3 or not is_biconnected(g):
        return None
    if independence_number(g) > vertex_connectivity(g):
        return None
    cyc = hamilton_cycle(g)
    if cyc is None:
        return "alpha <= kappa but no Hamilton cycle"
    return "" if verify_hamilton_cycle(g, cyc) else "Hamilton cycle fails verification"


CHECKS: dict[str, Callable[[SimpleGraph], str | None]] = {
    "theta": check_theta_sweep,
    "obs-p3": check_obs_p3,
    "thm-a": check_theorem_a,
    "thm-b": check_theorem_b,
    "thm-d": check_theorem_d,
}


def _run_shard(args: tuple[str, int, int, list[str]]) -> tuple[int, int, int, list[tuple[str, str]]]:
    check, n, m, codes = args
    fn = CHECKS[check]
    examined = 0
    bad = []
    for code in codes:
        reason = fn(from_graph6(code))
        if reason is None:
            continue
        examined += 1
        if reason:
            bad.append((code, reason))
    return n, m, examined, bad


def sweep(check: str, levels: dict[int, list[SimpleGraph]], workers: int = 1,
          label: str = "") -> tuple[int, list[tuple[str, str]], dict[str, int]]:
    """Run a per-graph check over enumerated classes, sharded by (n, m).

    Shard results are merged and sorted, so the outcome does not depend on
    the worker count or scheduling order.
    """
    shards: dict[tuple[int, int], list[str]] = {}
    for n, graphs in levels.items():
        for g in graphs:
            shards.setdefault((n, g.m), []).append(to_graph6(g))
    jobs = [(check, n, m, codes) for (n, m), codes in sorted(shards.items())]
    if workers > 1 and len(jobs) > 1:
        with Pool(workers) as pool:
            results = pool.map(_run_shard, jobs, chunksize=1)
    else:
        results = [_run_shard(j) for j in jobs]
    results.sort(key=lambda r: (r[0], r[1]))
    examined = sum(r[2] for r in results)
    prefix = f"{label} " if label else ""
    violations = sorted((code, prefix + reason) for r in results for code, reason in r[3])
    counts: dict[str, int] = {}
    for n, _, ex, _ in results:
        key = f"{prefix}n={n}"
        counts[key] = counts.get(key, 0) + ex
    return examined, violations, counts


def _free_prune(specs: Iterable[ForbiddenSpec]) -> Callable[[SimpleGraph], bool]:
    patterns = sorted((make_forbidden(s) for s in specs), key=lambda p: p.n)
    return lambda g: all(find_induced(g, p) is None for p in patterns)


# ---------------------------------------------------------------- tasks


def _task_thm_main(p: dict, rep: VerificationReport) -> None:
    claw = ForbiddenSpec("star", (3,))
    for s in parse_forbidden(p["forbid"]):
        levels = graph_levels(p["max_n"], _free_prune([claw, s]), 4)
        ex, bad, counts = sweep("theta", levels, p["workers"], s.name)
        rep.examined += ex
        rep.violations += bad
        rep.counts.update(counts)


def _task_k14p4(p: dict, rep: VerificationReport) -> None:
    levels = graph_levels(p["max_n"], _free_prune([ForbiddenSpec("star", (4,)), ForbiddenSpec("path", (4,))]), 4)
    rep.examined, rep.violations, rep.counts = sweep("theta", levels, p["workers"])


def _task_obs_p3(p: dict, rep: VerificationReport) -> None:
    levels = graph_levels(p["max_n"], _free_prune([ForbiddenSpec("path", (3,))]), 3)
    rep.examined, rep.violations, rep.counts = sweep("obs-p3", levels, p["workers"])


def _task_classic(p: dict, rep: VerificationReport) -> None:
    n = p["max_n"]
    runs = [
        ("thm-a", "A", graph_levels(n, lambda g: not has_claw(g), 3)),
        ("thm-b", "B", graph_levels(n, _free_prune([ForbiddenSpec("path", (4,))]), 2)),
        ("thm-d", "D", graph_levels(n, None, 3)),
    ]
    for check, label, levels in runs:
        ex, bad, counts = sweep(check, levels, p["workers"], label)
        rep.examined += ex
        rep.violations += bad
        rep.counts.update(counts)


def _task_counterexamples(p: dict, rep: VerificationReport) -> None:
    for i in range(1, 10):
        for k in range(G_MIN_K[i], G_MIN_K[i] + p["k_extra"] + 1):
            g = gen_G(i, k, validate=False).graph
            rep.examined += 1
            for reason in counterexample_violations(i, g):
                rep.violations.append((graph_text(g), f"G{i}(k={k}): {reason}"))


def counterexample_violations(i: int, g: SimpleGraph) -> list[str]:
    """Everything G_i must satisfy: 2-connected, not a cycle, no spanning
    theta, and its listed freeness / induced-path facts."""
    bad = []
    if not is_biconnected(g):
        bad.append("not 2-connected")
    if is_cycle(g):
        bad.append("is a cycle")
    if spanning_theta(g) is not None:
        bad.append("has a spanning theta")
    return bad + g_fact_violations(i, g)


def h_family_violations(g: SimpleGraph) -> list[str]:
    bad = []
    if not is_biconnected(g):
        bad.append("not 2-connected")
    if has_claw(g):
        bad.append("contains a claw")
    if is_cycle(g):
        bad.append("is a cycle")
    if spanning_theta(g) is not None:
        bad.append("has a spanning theta")
    for s in parse_forbidden(MAIN_FORBIDDEN):
        if find_induced(g, make_forbidden(s)) is None:
            bad.append(f"no induced {s.name}")
    return bad


def random_h_spec(family: int, rng: random.Random) -> HFamilySpec:
    """A seeded ℋ member: random pure links and, for families 5-7, a random
    chain of one or two pure chains with an allowed type."""
    count = HFamilySpec(family).link_count
    links = tuple(rng.choice(LINK_CHOICES) for _ in range(count))
    if family <= 4:
        return HFamilySpec(family, links)
    allowed = {5: ("BB", "BT", "TB", "TT"), 6: ("BB", "TB"), 7: ("BB",)}[family]
    while True:
        chain = []
        for _ in range(rng.randint(1, 2)):
            if rng.random() < 0.5:
                chain.append(Bipath(rng.randint(0, 2), rng.randint(0, 2)))
            else:
                chain.append(TriangleChain(rng.randint(3, 5)))
        try:
            if chain_type(chain) in allowed:
                return HFamilySpec(family, links, tuple(chain))
        except GraphError:
            pass


def _spec_text(spec: HFamilySpec) -> str:
    links = ",".join(s.token for s in spec.specs())
    chain = " ".join(f"B({c.l1},{c.l2})" if isinstance(c, Bipath) else f"T({c.k})" for c in spec.chain)
    return f"H{spec.family} links={links}" + (f" chain={chain}" if spec.family >= 5 else "")


def _task_families(p: dict, rep: VerificationReport) -> None:
    rng = random.Random(p["seed"])
    for family in range(1, 8):
        specs = [HFamilySpec(family)] + [random_h_spec(family, rng) for _ in range(p["variants"])]
        for spec in specs:
            g = gen_H(spec).graph
            rep.examined += 1
            for reason in h_family_violations(g):
                rep.violations.append((graph_text(g), f"{_spec_text(spec)}: {reason}"))


def _two_cut_condition(cg: ColoredGraph) -> bool:
    """Every 2-cut of the (2-connected) unfoldment with both ends blue is an associated pair."""
    g = cg.graph
    assoc = {frozenset(pr) for pr in associated_pairs(cg)}
    blue = cg.mask(BLUE)
    for (x, y), _ in list_two_cuts(g):
        if blue >> x & 1 and blue >> y & 1 and frozenset((x, y)) not in assoc:
            return False
    return True


def unfold_equivalence_violations(f: MultiGraph, assign: list[PureLinkSpec]) -> list[str]:
    """Multigraph-side vs graph-side predicates for one unfoldment. All
    equivalences are skipped when the unfoldment is a cycle."""
    cg = unfold(f, assign)
    g = cg.graph
    bad = []
    if not check_unfoldment(cg).passed:
        bad.append("unfoldment fails its own conditions")
    if multigraph_isomorphic(fold(cg), f) is None:
        bad.append("fold(unfold(F)) is not isomorphic to F")
    if is_cycle(g):
        return bad
    two_ec = is_k_edge_connected(f, 2) and f.is_connected()
    g2 = is_biconnected(g)
    if two_ec != g2:
        bad.append(f"(1) F 2-edge-connected={two_ec} but G 2-connected={g2}")
    three_ec = is_k_edge_connected(f, 3) and f.is_connected()
    side = g2 and _two_cut_condition(cg)
    if three_ec != side:
        bad.append(f"(2) F 3-edge-connected={three_ec} but graph side={side}")
    trail = find_euler_trail(f)
    tour = trail is not None and trail[1]
    cyc = hamilton_cycle(g)
    if cyc is not None and not verify_hamilton_cycle(g, cyc):
        bad.append("Hamilton cycle fails verification")
    if (cyc is not None) != tour:
        bad.append(f"(3) Euler tour={tour} but Hamilton cycle={cyc is not None}")
    cert = spanning_theta(g)
    if cert is not None and not verify_theta(g, cert):
        bad.append("theta certificate fails verification")
    want = two_ec and trail is not None
    if (cert is not None) != want:
        bad.append(f"(4) 2-edge-connected with Euler trail={want} but spanning theta={cert is not None}")
    return bad


def _assignments(fs: list[MultiGraph], samples: int, seed: int) -> list[tuple[MultiGraph, list]]:
    """All-triangle assignment for every F, then ``samples`` seeded random
    assignments dealt round-robin over the Fs."""
    rng = random.Random(seed)
    out = [(f, [TRIANGLE] * f.m) for f in fs]
    for j in range(samples):
        f = fs[j % len(fs)]
        out.append((f, [rng.choice(LINK_CHOICES) for _ in range(f.m)]))
    return out


def _assign_text(assign) -> str:
    return ",".join("-" if s is None else s.token for s in assign)


def _task_lemma_unfold(p: dict, rep: VerificationReport) -> None:
    fs = list(enumerate_multigraphs(p["max_n"], p["max_mult"]))
    for f, assign in _assignments(fs, p["samples"], p["seed"]):
        rep.examined += 1
        for reason in unfold_equivalence_violations(f, assign):
            rep.violations.append((f.to_text(), f"links={_assign_text(assign)}: {reason}"))
    rep.counts = {"multigraphs": len(fs)}


def semi_equivalence_violations(f: MultiGraph, assign, with_edge: bool) -> list[str]:
    link = unfold_semi(f, assign, with_edge)
    bad = []
    if not check_semi_unfoldment(link).passed:
        bad.append("link unfoldment fails its own conditions")
    trail = find_euler_trail(f)
    tour = trail is not None and trail[1]
    path = hamilton_path_between(link.graph, link.x0, link.y0)
    if path is not None and not verify_hamilton_path(link.graph, path, link.x0, link.y0):
        bad.append("Hamilton path fails verification")
    if (path is not None) != tour:
        bad.append(f"(3) Euler tour={tour} but Hamilton x0-y0 path={path is not None}")
    return bad


def _task_lemma_semi(p: dict, rep: VerificationReport) -> None:
    fs = list(enumerate_multigraphs(p["max_n"], p["max_mult"], semi=True))
    for f, assign in _assignments(fs, p["samples"], p["seed"]):
        assign = [None if i == f.e0 else s for i, s in enumerate(assign)]
        loop = f.edges[f.e0][0] == f.edges[f.e0][1]
        for flag in ((True,) if loop else (False, True)):
            rep.examined += 1
            for reason in semi_equivalence_violations(f, assign, flag):
                rep.violations.append((f.to_text(), f"links={_assign_text(assign)} x0y0={flag}: {reason}"))
    rep.counts = {"multigraphs": len(fs)}


def _classify(p: dict, rep: VerificationReport, semi: bool) -> None:
    names = ["N1", "N2"] if semi else ["M1", "M2", "M3", "M4"]
    premise = lemma_minimal_semi if semi else lemma_minimal_loopless
    targets = {nm: gen_catalog(nm) for nm in names}
    found = set()
    hits = 0
    for f in enumerate_multigraphs(p["max_n"], p["max_mult"], semi=semi):
        rep.examined += 1
        if not premise(f):
            continue
        hits += 1
        match = [nm for nm, t in targets.items() if multigraph_isomorphic(f, t) is not None]
        if match:
            found.update(match)
        else:
            rep.violations.append((f.to_text(), "satisfies the premise but matches no catalog member"))
    for nm in names:
        if nm not in found:
            rep.violations.append((targets[nm].to_text(), f"{nm} not produced by the filtered enumeration"))
    rep.counts = {"premise": hits, "matched": len(found)}


def _task_minimal_m(p: dict, rep: VerificationReport) -> None:
    _classify(p, rep, semi=False)


def _task_minimal_n(p: dict, rep: VerificationReport) -> None:
    _classify(p, rep, semi=True)


def h_property(g: SimpleGraph) -> bool:
    """2-connected, claw-free, not a cycle, and no spanning theta."""
    return g.n >= 4 and is_biconnected(g) and not is_cycle(g) and not has_claw(g) and spanning_theta(g) is None


def colored_h(i: int) -> ColoredGraph:
    """gen_H(i) for i <= 4 colored from its labels (inner link vertices red)."""
    lg = gen_H(i)
    red = {v for name, v in lg.labels.items() if "~" in name}
    return ColoredGraph(lg.graph, tuple(RED if v in red else BLUE for v in range(lg.graph.n)))


def _task_minimality_h(p: dict, rep: VerificationReport) -> None:
    g = gen_H(7).graph
    rep.examined += 1
    if not h_property(g):
        rep.violations.append((graph_text(g), "H7 minimal member lacks the property"))
    verdict = minimality_scan(g, h_property, min_size=4)
    rep.counts = {"subsets": verdict.examined}
    if not verdict.is_minimal:
        rep.violations.append((graph_text(g), f"proper induced subgraph {list(verdict.witness)} has the property"))
    for i in range(1, 5):
        rep.examined += 1
        cg = colored_h(i)
        if multigraph_isomorphic(fold(cg), gen_catalog(f"M{i}")) is None:
            rep.violations.append((graph_text(cg.graph), f"fold(H{i}) is not isomorphic to M{i}"))


# ---------------------------------------------------------------- registry, config

_BASE = {"seed": 1, "workers": 1}
TASKS: dict[str, tuple[Callable[[dict, VerificationReport], None], dict[str, Any]]] = {
    "obs-p3": (_task_obs_p3, {"max_n": 9}),
    "thm-main": (_task_thm_main, {"max_n": 8, "forbid": MAIN_FORBIDDEN}),
    "thm-k14p4": (_task_k14p4, {"max_n": 8}),
    "counterexamples": (_task_counterexamples, {"k_extra": 1}),
    "families": (_task_families, {"variants": 3}),
    "lemma-unfold": (_task_lemma_unfold, {"max_n": 4, "max_mult": 3, "samples": 200}),
    "lemma-semi": (_task_lemma_semi, {"max_n": 3, "max_mult": 3, "samples": 100}),
    "minimal-m": (_task_minimal_m, {"max_n": 4, "max_mult": 4}),
    "minimal-n": (_task_minimal_n, {"max_n": 3, "max_mult": 4}),
    "minimality-h": (_task_minimality_h, {}),
    "classic": (_task_classic, {"max_n": 8}),
}
_CAPS = {"max_n": {"lemma-unfold": 4, "minimal-m": 4, "lemma-semi": 3, "minimal-n": 3}, "max_mult": 4}
_INT_KEYS = {"seed", "workers", "max_n", "max_mult", "samples", "k_extra", "variants"}


def task_params(task: str, overrides: dict[str, Any] | None = None) -> dict[str, Any]:
    """Defaults for ``task`` merged with overrides; keys the task does not use are dropped."""
    if task not in TASKS:
        raise TaskError(f"unknown task {task!r}; known: {', '.join(TASKS)}")
    params = {**_BASE, **TASKS[task][1]}
    for key, value in (overrides or {}).items():
        if key in params and value is not None:
            params[key] = int(value) if key in _INT_KEYS else str(value)
    cap = _CAPS["max_n"].get(task, MAX_ENUM)
    if "max_n" in params and not 1 <= params["max_n"] <= cap:
        raise TaskError(f"max_n for {task} must be in 1..{cap}")
    if "max_mult" in params and not 1 <= params["max_mult"] <= _CAPS["max_mult"]:
        raise TaskError(f"max_mult must be in 1..{_CAPS['max_mult']}")
    for key in ("samples", "k_extra", "variants"):
        if key in params and params[key] < 0:
            raise TaskError(f"{key} must be >= 0")
    if params["workers"] < 1:
        raise TaskError("workers must be >= 1")
    if "forbid" in params:
        try:
            parse_forbidden(params["forbid"])
        except GraphError as exc:
            raise TaskError(str(exc)) from None
    return params


def run_verification(task: str, params: dict[str, Any] | None = None) -> VerificationReport:
    p = task_params(task, params)
    rep = VerificationReport(task, {k: v for k, v in p.items() if k != "workers"})
    start = time.perf_counter()
    TASKS[task][0](p, rep)
    rep.wall_time = time.perf_counter() - start
    return rep


def load_config(path: str) -> dict[str, str]:
    """Plain ``key = value`` lines; ``#`` starts a comment. Dashes in keys
    are read as underscores."""
    out: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise TaskError(f"{path}:{lineno}: expected key = value")
            key, value = (part.strip() for part in line.split("=", 1))
            out[key.replace("-", "_")] = value
    return out
