"""Command-line front end.

Exit codes: 0 on success, 1 on an internal failure (or a verification
failure for ``verify``), 2 on bad input or unsatisfiable parameters.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import families as fam
from .classifier import characterization_failures, classify
from .corpus import builtin_corpus
from .expansions import (
    PATTERN_SIZES,
    clique_expansion,
    contract,
    enumerate_c4_expansions,
    find_pattern_partitions,
    k_expansion,
)
from .graph import Graph, contract_partition, is_connected, line_graph, to_dot
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .suites import SUITE_IDS, run_suite
from .symmetry import (
    automorphism_group,
    canonical_form,
    is_arc_transitive,
    is_edge_transitive,
    is_vertex_transitive,
    orbits,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
CHARACTERIZATION = "characterization"
VERIFY_IDS = (CHARACTERIZATION,) + SUITE_IDS


class UsageError(Exception):
    """Bad input or parameters; maps to exit code 2."""


def _out(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _dump(obj) -> None:
    _out(json.dumps(obj, indent=2, sort_keys=False))


def _read_lines(args) -> list[str]:
    if args.graphs:
        lines = list(args.graphs)
    elif getattr(args, "file", None):
        with open(args.file, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    else:
        lines = sys.stdin.read().splitlines()
    return [ln.strip() for ln in lines if ln.strip()]


def _fmt(args, default: str) -> str:
    if getattr(args, "json", False):
        return "json"
    return args.format or default


def _emit_graphs(graphs: list[tuple[str, Graph]], fmt: str) -> None:
    if fmt == "dot":
        for i, (name, g) in enumerate(graphs):
            _out(to_dot(g, name=f"G{i}"))
    elif fmt == "json":
        _dump({"schema": 1, "graphs": [{"name": name, "n": g.n, "m": g.m, "graph6": emit_graph6(g)}
                                       for name, g in graphs]})
    else:
        for _, g in graphs:
            _out(emit_graph6(g))


def _map(fn, items, parallel: int):
    if parallel and parallel > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


# -- classify -------------------------------------------------------------

def _classify_line(job):
    line, max_length = job
    try:
        g = parse_graph6(line)
    except Graph6Error as exc:
        return {"input": line, "error": str(exc)}, EXIT_USAGE
    if g.n == 0 or not is_connected(g):
        return {"input": line, "error": "graph is not connected"}, EXIT_USAGE
    c = classify(g, max_length)
    rec = {"input": line, **c.to_json(), "failures": characterization_failures(g, c)}
    rec["headline"] = c.headline()
    return rec, EXIT_OK


def cmd_classify(args) -> int:
    lines = _read_lines(args)
    results = _map(_classify_line, [(ln, args.max_length) for ln in lines], args.parallel)
    code = max((c for _, c in results), default=EXIT_OK)
    records = [r for r, _ in results]
    if _fmt(args, "json") == "json":
        _dump({"schema": 1, "records": records})
    else:
        for r in records:
            if "error" in r:
                _out(f"{r['input']}\terror: {r['error']}")
                continue
            vt = "yes" if r["flags"]["vertex_transitive"] else "no"
            head = r["headline"] or "-"
            _out(f"{r['input']}\tn={r['n']}\tvertex-transitive={vt}\t{head}\t"
                 f"{','.join(b['branch'] for b in r['branches'])}")
            for note in r["notes"]:
                _out(f"  note: {note}")
    return code


# -- generate -------------------------------------------------------------

def _expand(g: Graph, pattern: str) -> list[Graph]:
    if pattern == "K3":
        if not g.is_regular(3):
            raise UsageError("K3-expansion needs a 3-regular base graph")
        return [clique_expansion(g)]
    if pattern == "K4":
        if not g.is_regular(4):
            raise UsageError("K4-expansion needs a 4-regular base graph")
        return [k_expansion(g, 4)]
    if not g.is_regular(4):
        raise UsageError("C4-expansion needs a 4-regular base graph")
    try:
        found = enumerate_c4_expansions(g)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return sorted(found, key=lambda h: canonical_form(h).word)


def cmd_generate(args) -> int:
    if not fam.feasible(args.family, args.length):
        raise UsageError(f"{args.family} has no member of length {args.length}")
    built = fam.construct_all(args.family, args.length)
    if args.all:
        chosen = list(enumerate(built))
    else:
        if not 0 <= args.index < len(built):
            raise UsageError(f"variant index {args.index} out of range 0..{len(built) - 1}")
        chosen = [(args.index, built[args.index])]
    graphs = []
    for i, (g, _) in chosen:
        name = f"{args.family}:{args.length}:{i}"
        if args.expand:
            for j, h in enumerate(_expand(g, args.expand)):
                graphs.append((f"{args.expand}-expansion({name})#{j}", h))
        else:
            graphs.append((name, g))
    _emit_graphs(graphs, _fmt(args, "graph6"))
    return EXIT_OK


# -- verify ---------------------------------------------------------------

def _load_corpus(source: str):
    if source == "builtin":
        return list(builtin_corpus())
    if not os.path.exists(source):
        raise UsageError(f"unknown corpus source {source!r}")
    out = []
    with open(source, encoding="utf-8") as fh:
        for i, line in enumerate(ln.strip() for ln in fh):
            if not line:
                continue
            try:
                out.append((f"{source}:{i + 1}", parse_graph6(line)))
            except Graph6Error as exc:
                raise UsageError(f"{source}:{i + 1}: {exc}") from exc
    return out


def _char_job(item):
    name, g, max_length = item
    c = classify(g, max_length)
    return {"name": name, "vertex_transitive": c.vertex_transitive,
            "branches": c.branch_ids(), "failures": characterization_failures(g, c)}


def _characterization(corpus, max_length, parallel):
    items = [(name, g, max_length) for name, g in corpus if is_connected(g)]
    records = _map(_char_job, items, parallel)
    failures = [{"name": r["name"], "failure": f} for r in records for f in r["failures"]]
    return {"schema": 1, "suite": CHARACTERIZATION, "checked": len(records),
            "skipped": len(corpus) - len(records), "records": records, "failures": failures}


def _split_verify_args(tokens):
    suite, source = None, None
    for tok in tokens:
        if tok in VERIFY_IDS or tok == "all":
            if suite is not None:
                raise UsageError("more than one suite given")
            suite = tok
        elif source is None:
            source = tok
        else:
            raise UsageError(f"unknown suite {tok!r}")
    if suite is None:
        if source is not None and source != "builtin" and not os.path.exists(source):
            raise UsageError(f"unknown suite {source!r}")
        suite = "all"
    return suite, source or "builtin"


def cmd_verify(args) -> int:
    suite, source = _split_verify_args(args.targets)
    ids = VERIFY_IDS if suite == "all" else (suite,)
    corpus = None
    reports = []
    for sid in ids:
        if sid == CHARACTERIZATION:
            corpus = corpus if corpus is not None else _load_corpus(source)
            reports.append(_characterization(corpus, args.max_length, args.parallel))
            continue
        if sid == "c4-expansion-count-lq3":
            reports.append(run_suite(sid).to_json())
            continue
        corpus = corpus if corpus is not None else _load_corpus(source)
        reports.append(run_suite(sid, corpus).to_json())
    failed = sum(len(r["failures"]) for r in reports)
    if _fmt(args, "json") == "json":
        _dump({"schema": 1, "corpus": source, "reports": reports, "failures": failed})
    else:
        for r in reports:
            status = "pass" if not r["failures"] else "FAIL"
            extra = ""
            if r["suite"] == "c4-expansion-count-lq3":
                extra = f" count={r['records'][0]['count']}"
            _out(f"{status}  {r['suite']}  checked={r['checked']} skipped={r['skipped']}"
                 f" failures={len(r['failures'])}{extra}")
            for f in r["failures"]:
                _out(f"      {f['name']}: {f['failure']}")
    return EXIT_OK if failed == 0 else EXIT_FAIL


# -- transform ------------------------------------------------------------

def _single_graph(args) -> Graph:
    lines = _read_lines(args)
    if len(lines) != 1:
        raise UsageError(f"expected exactly one input graph, got {len(lines)}")
    try:
        return parse_graph6(lines[0])
    except Graph6Error as exc:
        raise UsageError(str(exc)) from exc


def cmd_transform(args) -> int:
    g = _single_graph(args)
    if args.op == "linegraph":
        out = line_graph(g)[0]
    elif args.op == "clique-expand":
        if g.n == 0 or min(g.degrees()) == 0:
            raise UsageError("clique-expansion needs a graph without isolated vertices")
        out = clique_expansion(g)
    else:
        if args.partition:
            try:
                blocks = json.loads(args.partition)
                out = contract_partition(g, blocks)
            except (ValueError, TypeError) as exc:
                raise UsageError(f"bad partition: {exc}") from exc
        else:
            if args.pattern is None:
                raise UsageError("contract needs --pattern or --partition")
            found = find_pattern_partitions(g, args.pattern)
            if not found:
                raise UsageError(f"no {args.pattern}-partition found")
            best = min(found, key=lambda p: sorted(sorted(b) for b in p))
            out = contract(g, best)
    if out.n > 62 and _fmt(args, "graph6") != "dot":
        raise UsageError(f"result has {out.n} vertices; graph6 output supports at most 62")
    _emit_graphs([(args.op, out)], _fmt(args, "graph6"))
    return EXIT_OK


# -- aut ------------------------------------------------------------------

def _aut_record(line: str) -> dict:
    g = parse_graph6(line)
    grp = automorphism_group(g)
    return {
        "input": line,
        "n": g.n,
        "m": g.m,
        "order": grp.order,
        "generators": [list(p) for p in grp.generators],
        "vertex_orbits": len(orbits(grp, "vertices").orbits),
        "edge_orbits": len(orbits(grp, "edges").orbits),
        "arc_orbits": len(orbits(grp, "arcs").orbits),
        "vertex_transitive": is_vertex_transitive(g),
        "edge_transitive": is_edge_transitive(g),
        "arc_transitive": is_arc_transitive(g),
    }


def cmd_aut(args) -> int:
    records = []
    code = EXIT_OK
    for line in _read_lines(args):
        try:
            records.append(_aut_record(line))
        except Graph6Error as exc:
            records.append({"input": line, "error": str(exc)})
            code = EXIT_USAGE
    if _fmt(args, "text") == "json":
        _dump({"schema": 1, "records": records})
    else:
        yn = {True: "yes", False: "no"}
        for r in records:
            if "error" in r:
                _out(f"{r['input']}\terror: {r['error']}")
                continue
            _out(f"{r['input']}\torder={r['order']}\tvertex-orbits={r['vertex_orbits']}"
                 f"\tedge-orbits={r['edge_orbits']}\tarc-orbits={r['arc_orbits']}"
                 f"\tvertex-transitive={yn[r['vertex_transitive']]}"
                 f"\tedge-transitive={yn[r['edge_transitive']]}"
                 f"\tarc-transitive={yn[r['arc_transitive']]}")
    return code


# -- corpus ---------------------------------------------------------------

def cmd_corpus(args) -> int:
    items = list(builtin_corpus(args.max_n))
    if args.transitive_only:
        items = [(name, g) for name, g in items if is_vertex_transitive(g)]
    fmt = _fmt(args, "graph6")
    if fmt == "text":
        for name, g in items:
            _out(f"{name}\t{emit_graph6(g)}")
    else:
        _emit_graphs(items, fmt)
    return EXIT_OK


# -- parser ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="symmetry-atlas",
                                description="Vertex-transitive graph classification toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def io_opts(sp, formats, inputs=True):
        if inputs:
            sp.add_argument("graphs", nargs="*", help="graph6 words (default: read stdin)")
            sp.add_argument("--file", help="read graph6 lines from this file")
        out = sp.add_mutually_exclusive_group()
        out.add_argument("--format", choices=formats)
        out.add_argument("--json", action="store_true", help="shorthand for --format json")

    sp = sub.add_parser("classify", help="report every matching branch")
    io_opts(sp, ["json", "text"])
    sp.add_argument("--max-length", type=int, default=fam.DEFAULT_MAX_LENGTH)
    sp.add_argument("--parallel", type=int, default=1, metavar="N")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("generate", help="emit members of a family")
    sp.add_argument("family", choices=fam.FAMILIES)
    sp.add_argument("length", type=int)
    sp.add_argument("index", type=int, nargs="?", default=0)
    sp.add_argument("--all", action="store_true", help="emit every gluing variant")
    sp.add_argument("--expand", choices=sorted(PATTERN_SIZES))
    io_opts(sp, ["graph6", "dot", "json"], inputs=False)
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("verify", help="run property suites")
    sp.add_argument("targets", nargs="*", metavar="SUITE|CORPUS",
                    help=f"'all' or one of {', '.join(VERIFY_IDS)}; corpus is 'builtin' or a graph6 file")
    sp.add_argument("--max-length", type=int, default=fam.DEFAULT_MAX_LENGTH)
    sp.add_argument("--parallel", type=int, default=1, metavar="N")
    io_opts(sp, ["json", "text"], inputs=False)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("transform", help="line graph, clique-expansion or contraction")
    sp.add_argument("op", choices=["linegraph", "clique-expand", "contract"])
    io_opts(sp, ["graph6", "dot", "json"])
    sp.add_argument("--pattern", choices=sorted(PATTERN_SIZES))
    sp.add_argument("--partition", help="JSON list of vertex blocks")
    sp.set_defaults(func=cmd_transform)

    sp = sub.add_parser("aut", help="automorphism group summary")
    io_opts(sp, ["text", "json"])
    sp.set_defaults(func=cmd_aut)

    sp = sub.add_parser("corpus", help="emit the built-in corpus")
    sp.add_argument("--max-n", type=int, default=48)
    sp.add_argument("--transitive-only", action="store_true")
    io_opts(sp, ["graph6", "text", "dot", "json"], inputs=False)
    sp.set_defaults(func=cmd_corpus)
    return p


def main(argv=None) -> int:
    # accepted for compatibility; every algorithm here is deterministic
    os.environ.get("SYMMETRY_ATLAS_SEED")
    parser = build_parser()
    try:
        args, extra = parser.parse_known_args(argv)
        # graph6 words never start with '-', so words after options are inputs
        if extra:
            if not hasattr(args, "graphs") or any(t.startswith("-") for t in extra):
                parser.error(f"unrecognized arguments: {' '.join(extra)}")
            args.graphs = list(args.graphs) + extra
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
