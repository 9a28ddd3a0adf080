"""Command line: ``thetagraph check|gen|enum|unfold|fold|verify``.

Exit codes: 0 pass, 1 violations (or the checked property fails), 2 usage
or input error. Structured output is JSON lines.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from .enumeration import MAX_ENUM, enumerate_graphs
from .families import HFamilySpec, gen_brousek, gen_catalog, gen_G, gen_H, gen_link, parse_chain
from .forbidden import ForbiddenSpec, find_induced, make_forbidden, parse_forbidden
from .graph import (GraphError, SimpleGraph, from_edge_list, from_graph6, is_biconnected, is_connected,
                    structural_metrics, to_edge_list, vertex_connectivity)
from .hamilton import hamilton_cycle, spanning_theta
from .harness import TASKS, TaskError, graph_text, load_config, run_verification
from .multigraph import MultiGraphError, parse_multigraph
from .unfold import ColoredLink, PureLinkSpec, fold, fold_semi, parse_colored, unfold, unfold_semi

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def read_graphs(path: str) -> list[SimpleGraph]:
    """A native edge list (first line ``n m``) or one graph6 string per line."""
    text = _read(path)
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise UsageError(f"{path}: no graph found")
    if len(lines[0].split()) == 2:
        return [from_edge_list("\n".join(lines))]
    return [from_graph6(ln) for ln in lines]


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _emit(record: dict) -> None:
    print(json.dumps(record, sort_keys=True))


def _specs(text: str | None) -> list[PureLinkSpec] | None:
    if text is None:
        return None
    return [PureLinkSpec.parse(tok) for tok in text.split(",") if tok.strip()]


# ---------------------------------------------------------------- commands


def cmd_check(args) -> int:
    graphs = read_graphs(args.file)
    patterns = parse_forbidden(args.forbid) if args.forbid else []
    if args.what == "free" and not patterns:
        raise UsageError("check free needs --forbid LIST")
    ok = True
    for g in graphs:
        rec: dict = {"graph": graph_text(g)}
        if args.what == "theta":
            cert = spanning_theta(g) if g.n >= 4 else None
            rec["theta"] = cert.to_text() if cert else None
            ok &= cert is not None
        elif args.what == "hamilton":
            cyc = hamilton_cycle(g) if g.n >= 3 else None
            rec["hamilton_cycle"] = cyc
            ok &= cyc is not None
        elif args.what == "free":
            hit = first_forbidden(g, patterns)
            if hit is None:
                rec["free"] = True
            else:
                spec, image = hit
                rec.update(free=False, contains=spec.name, embedding=list(image))
                ok = False
        else:
            rec.update(metrics_record(g))
            if patterns:
                hit = first_forbidden(g, patterns)
                rec["contains"] = None if hit is None else hit[0].name
        _emit(rec)
    return EXIT_OK if ok else EXIT_FAIL


def first_forbidden(g: SimpleGraph, specs: list[ForbiddenSpec]) -> tuple[ForbiddenSpec, tuple[int, ...]] | None:
    for spec in sorted(specs, key=lambda sp: make_forbidden(sp).n):
        emb = find_induced(g, make_forbidden(spec))
        if emb is not None:
            return spec, emb
    return None


def metrics_record(g: SimpleGraph) -> dict:
    out = {"n": g.n, "m": g.m, "connected": is_connected(g), "biconnected": is_biconnected(g)}
    out["kappa"] = vertex_connectivity(g) if g.n >= 2 else 0
    out.update(asdict(structural_metrics(g)))
    return out


def cmd_gen(args) -> int:
    fam = args.family.upper()
    labels: dict[str, int] = {}
    if fam in ("M1", "M2", "M3", "M4", "M5", "M6", "M7", "N1", "N2"):
        sys.stdout.write(gen_catalog(fam).to_text())
        return EXIT_OK
    if fam.startswith("H") and fam[1:].isdigit():
        i = int(fam[1:])
        kw = {}
        if args.links:
            kw["links"] = tuple(_specs(args.links))
        if args.chain:
            kw["chain"] = tuple(parse_chain(args.chain))
        lg = gen_H(HFamilySpec(i, **kw))
        g, labels = lg.graph, lg.labels
    elif fam.startswith("G") and fam[1:].isdigit():
        lg = gen_G(int(fam[1:]), args.k, validate=not args.no_validate, row_len=args.row_len)
        g, labels = lg.graph, lg.labels
    elif fam in ("L1", "L2", "L3"):
        link, labels = gen_link(fam, _specs(args.links))
        g = link.graph
    elif fam in ("P", "BROUSEK"):
        if not args.params:
            raise UsageError("Brousek graphs need --params k1,k2,k3")
        ks = [int(t) for t in args.params.split(",")]
        if len(ks) != 3:
            raise UsageError("--params takes three integers")
        g = gen_brousek(*ks)
    else:
        raise UsageError(f"unknown family {args.family!r}")
    if args.format == "edges" or g.n > 62:
        sys.stdout.write(to_edge_list(g))
    else:
        print(graph_text(g))
    for name, v in sorted(labels.items(), key=lambda kv: (kv[1], kv[0])):
        print(f"# {v} {name}")
    return EXIT_OK


def cmd_enum(args) -> int:
    if not 1 <= args.n <= MAX_ENUM:
        raise UsageError(f"n must be in 1..{MAX_ENUM}")
    prune = None
    if args.forbid:
        patterns = [make_forbidden(s) for s in parse_forbidden(args.forbid)]

        def prune(g: SimpleGraph) -> bool:
            return all(find_induced(g, pat) is None for pat in patterns)
    pred = {"all": None, "connected": is_connected, "biconnected": is_biconnected}[args.filter]
    for g in enumerate_graphs(args.n, pred, prune):
        print(graph_text(g))
    return EXIT_OK


def cmd_unfold(args) -> int:
    f = parse_multigraph(_read(args.file))
    specs = _specs(args.links)
    if specs is None:
        specs = [PureLinkSpec("triangle")] * (f.m - (f.e0 is not None))
    elif len(specs) == 1:
        specs = specs * (f.m - (f.e0 is not None))
    if f.e0 is None:
        cg = unfold(f, specs)
    else:
        loop = f.edges[f.e0][0] == f.edges[f.e0][1]
        cg = unfold_semi(f, specs, args.x0y0 or loop)
    sys.stdout.write(cg.to_text())
    return EXIT_OK


def cmd_fold(args) -> int:
    cg = parse_colored(_read(args.file))
    if isinstance(cg, ColoredLink):
        res = fold_semi(cg)
        sys.stdout.write(res.multigraph.to_text())
        if res.extra_vertex:
            print("# an end of e0 had no blue neighbour and became an extra vertex")
    else:
        sys.stdout.write(fold(cg).to_text())
    return EXIT_OK


_VERIFY_FLAGS = ("max_n", "seed", "samples", "workers", "max_mult", "k_extra", "variants", "forbid")


def cmd_verify(args) -> int:
    params: dict = load_config(args.config) if args.config else {}
    for key in _VERIFY_FLAGS:
        value = getattr(args, key)
        if value is not None:
            params[key] = value
    report = run_verification(args.task, params)
    text = report.to_jsonl()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    sys.stdout.write(text)
    return EXIT_OK if report.passed else EXIT_FAIL


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="thetagraph", description="Spanning theta-subgraphs, forbidden pairs and unfoldments.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="decide a property of each graph in a file")
    c.add_argument("what", choices=["theta", "hamilton", "free", "metrics"])
    c.add_argument("file", help="edge-list file or graph6 lines ('-' for stdin)")
    c.add_argument("--forbid", help="forbidden list, e.g. 'K1,3,B1,5'")
    c.set_defaults(func=cmd_check)

    g = sub.add_parser("gen", help="generate a named graph or multigraph")
    g.add_argument("--family", required=True, help="M1..M7, N1, N2, H1..H7, G1..G9, L1..L3, P")
    g.add_argument("--links", help="pure links, e.g. t,p3,t")
    g.add_argument("--chain", help="chain, e.g. 'B(0,0)' or 'T(3) B(1,2)'")
    g.add_argument("--k", type=int, help="parameter k of G1..G9")
    g.add_argument("--row-len", dest="row_len", type=int, help="length of the b, c, d rows of G6")
    g.add_argument("--params", help="k1,k2,k3 for Brousek graphs")
    g.add_argument("--format", choices=["g6", "edges"], default="g6")
    g.add_argument("--no-validate", action="store_true", help="skip the G_i self-validation")
    g.set_defaults(func=cmd_gen)

    e = sub.add_parser("enum", help="graph6 lines of non-isomorphic graphs on n vertices")
    e.add_argument("n", type=int)
    e.add_argument("--forbid", help="hereditary filter: forbidden induced subgraphs")
    e.add_argument("--filter", choices=["all", "connected", "biconnected"], default="all")
    e.set_defaults(func=cmd_enum)

    u = sub.add_parser("unfold", help="unfold a multigraph file into a colored graph")
    u.add_argument("file")
    u.add_argument("--links", help="one spec for every edge or a comma list per edge (e0 excluded)")
    u.add_argument("--x0y0", action="store_true", help="add the edge x0y0 (semi-loopless input)")
    u.set_defaults(func=cmd_unfold)

    f = sub.add_parser("fold", help="fold a colored graph file back to its multigraph")
    f.add_argument("file")
    f.set_defaults(func=cmd_fold)

    v = sub.add_parser("verify", help="run a named verification task")
    v.add_argument("task", choices=sorted(TASKS))
    v.add_argument("--config", help="key = value file; flags override it")
    v.add_argument("--max-n", dest="max_n", type=int)
    v.add_argument("--seed", type=int)
    v.add_argument("--samples", type=int)
    v.add_argument("--workers", type=int)
    v.add_argument("--max-mult", dest="max_mult", type=int)
    v.add_argument("--k-extra", dest="k_extra", type=int)
    v.add_argument("--variants", type=int)
    v.add_argument("--forbid")
    v.add_argument("--out", help="also write the report to this file")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, GraphError, MultiGraphError, TaskError, ValueError) as exc:
        print(f"thetagraph: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
