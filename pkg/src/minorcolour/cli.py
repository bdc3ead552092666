"""Batch front-end.

Every run prints one JSON report per input graph (line-delimited, keys
sorted) holding the claimed bounds, the independently measured values and
a pass flag. Exit status is 0 when every report passes, 2 when some bound is
violated or a minor certificate is produced, and 1 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Callable, Sequence

from . import bipartite, colnums, generators, immersion, ktdecomp, oracles
from .errors import BoundViolation, DecompositionError, GraphError
from .graph import Graph, from_edge_list, from_json, to_dot, to_edge_list, to_json
from .minors import DecompositionOutcome, MinorModel, Pattern
from .ordering import VertexOrdering
from .partition import Colouring, ConnectedPartition, partition_ordering, validate_partition

EXIT_PASS, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2


class UsageError(Exception):
    pass


# -- reports -----------------------------------------------------------------------


def make_report(source: str, operation: str, params: dict, outcome: str, claimed: dict, measured: dict, result=None, extra: dict | None = None) -> dict:
    ok = all(k in measured and measured[k] <= v for k, v in claimed.items())
    if outcome == "certificate":
        ok = False
    report = {
        "input": source,
        "operation": operation,
        "parameters": params,
        "outcome": outcome,
        "claimed": claimed,
        "measured": measured,
        "pass": ok,
    }
    if result is not None:
        report["result"] = result
    if extra:
        report.update(extra)
    return report


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _certificate_report(g: Graph, source: str, op: str, params: dict, model: MinorModel) -> tuple[dict, list[int]]:
    check = oracles.validate_minor_model(g, model)
    rep = make_report(
        source, op, params, "certificate", {}, {"model_valid": bool(check)},
        model.to_json_obj(), {"pattern_name": model.pattern.name},
    )
    owner = [0] * g.n
    for i, b in enumerate(model.branch_sets):
        for v in b:
            owner[v] = i + 1
    return rep, owner


def _colouring_report(g: Graph, source: str, op: str, params: dict, col: Colouring, extra: dict | None = None) -> tuple[dict, list[int]]:
    claimed = dict(col.bounds)
    measured = {name: getattr(col, name) for name in ("num_colours", "defect", "clustering")}
    return make_report(source, op, params, "colouring", claimed, measured, col.to_json_obj(), extra), list(col.colour)


def _partition_report(g: Graph, source: str, op: str, params: dict, p: ConnectedPartition, extra_claims: dict | None = None) -> tuple[dict, list[int]]:
    report = validate_partition(g, p, strict=False)
    claimed = {"width": p.width}
    measured = {"width": report.width}
    for name, (bound, value) in (extra_claims or {}).items():
        claimed[name] = bound
        measured[name] = value
    rep = make_report(source, op, params, "partition", claimed, measured, p.to_json_obj())
    return rep, [i + 1 for i in p.part_of()]


# -- subcommands ---------------------------------------------------------------------


def _decompose(g: Graph, args) -> DecompositionOutcome:
    if args.family == "kt":
        return ktdecomp.decompose_kt(g, args.t)
    if args.family == "k2t":
        return bipartite.decompose_k2t(g, args.t)
    if args.family == "k3t":
        return bipartite.decompose_k3t(g, args.t)
    s = args.s if args.s is not None else 2
    if s == 2:
        # the dedicated routine gives the tighter width for s = 2
        return bipartite.decompose_k2t(g, args.t)
    return bipartite.decompose_kst(g, s, args.t)


def cmd_decomp(g: Graph, source: str, args):
    params = {"family": args.family, "t": args.t}
    if args.family == "kst":
        params["s"] = args.s if args.s is not None else 2
    out = _decompose(g, args)
    op = f"decomp {args.family}"
    if out.certificate is not None:
        return _certificate_report(g, source, op, params, out.certificate)
    p = out.partition
    extra = {}
    if args.family == "k3t":
        extra["leaves"] = (2 * args.t + 1, p.max_leaves)
    elif args.family == "k2t" or (args.family == "kst" and params["s"] == 2):
        extra["leaves"] = (args.t - 1, p.max_leaves)
    elif args.family == "kst":
        extra["pieces"] = (params["s"] * (args.t - 1), p.max_pieces)
    return _partition_report(g, source, op, params, p, extra)


def cmd_colour(g: Graph, source: str, args):
    fam, mode, t = args.family, args.mode, args.t
    params = {"family": fam, "mode": mode, "t": t}
    op = f"colour {fam}"
    try:
        if fam == "kt":
            col = ktdecomp.colour_kt(g, t, mode or "defect")
            params["mode"] = mode or "defect"
        elif fam == "k2t":
            params["mode"] = mode = mode or "defect"
            if mode == "defect":
                col = bipartite.colour_k2t_defect(g, t)
            elif mode == "three":
                anchor = tuple(args.anchor) if args.anchor else None
                res = bipartite.three_colour_k2t(g, t, anchor)
                if isinstance(res, MinorModel):
                    raise DecompositionError(f"graph contains a K*2,{t} minor", res)
                col = res
            else:
                raise UsageError("k2t modes are 'defect' and 'three'")
        elif fam == "k3t":
            params["mode"] = mode = mode or "defect"
            col = bipartite.colour_k3t(g, t, mode)
            if mode == "defect":
                extra = {"sharper_claim": {"defect": 4 * t}, "sharper_pass": col.defect <= 4 * t}
                return _colouring_report(g, source, op, params, col, extra)
        elif fam in ("cuttree", "tpartition"):
            if not args.tree:
                raise UsageError(f"colour {fam} needs --tree FILE")
            obj = json.loads(_read(args.tree))
            params = {"family": fam, "tree": args.tree}
            if fam == "cuttree":
                col = immersion.tree_cut_2colour(g, immersion.CutTree.from_json_obj(obj))
            else:
                params["multiplicity"] = args.multiplicity
                col = immersion.tpartition_2colour(g, immersion.TPartition.from_json_obj(obj), args.multiplicity)
        else:
            raise UsageError(f"unknown colouring family {fam!r}")
    except DecompositionError as exc:
        return _certificate_report(g, source, op, params, exc.model)
    return _colouring_report(g, source, op, params, col)


def _is_grid(g: Graph, p: int, q: int) -> bool:
    return set(g.edges()) == set(generators.grid(p, q).edges())


def _layered_td_for(g: Graph, args) -> colnums.LayeredTD:
    if args.ltd:
        return colnums.LayeredTD.from_json_obj(json.loads(_read(args.ltd)))
    for p in range(1, g.n + 1):
        if g.n % p == 0 and _is_grid(g, p, g.n // p):
            return colnums.grid_layered_td(p, g.n // p)
    raise UsageError("layered ordering needs --ltd FILE unless the input is a grid")


def cmd_colnum(g: Graph, source: str, args):
    r, kind = args.r, args.ordering
    params = {"ordering": kind, "r": r}
    claimed: dict = {}
    if kind == "identity":
        order = VertexOrdering.identity(g.n)
    elif kind == "layered":
        ltd = _layered_td_for(g, args)
        order = colnums.layered_ordering(g, ltd, check_radii=())
        params["layered_width"] = ltd.layered_width
        claimed["scol"] = ltd.layered_width * (2 * r + 1)
    elif kind in ("exact-scol", "exact-wcol"):
        if g.n > colnums.EXACT_CAP:
            raise UsageError(f"exact colouring numbers are capped at n = {colnums.EXACT_CAP}")
        value, order = (colnums.exact_scol if kind == "exact-scol" else colnums.exact_wcol)(g, r)
    elif kind in ("k2t", "k3t", "kst"):
        t = args.t
        params["t"] = t
        if kind == "k2t":
            out = bipartite.decompose_k2t(g, t)
            claimed["scol"] = 2 * (t - 1) * (2 * r + 1)
        elif kind == "k3t":
            out = bipartite.decompose_k3t(g, t)
            claimed["scol"] = 3 * (2 * t + 1) * (2 * r + 1)
        else:
            s = args.s if args.s is not None else 2
            params["s"] = s
            out = bipartite.decompose_kst(g, s, t)
            claimed["scol"], claimed["wcol"] = colnums.kst_bounds(s, t, r)
        if out.certificate is not None:
            return _certificate_report(g, source, f"colnum {kind}", params, out.certificate)
        order = partition_ordering(g, out.partition)
    else:
        raise UsageError(f"unknown ordering {kind!r}")
    measured = {"scol": colnums.scol(g, order, r), "wcol": colnums.wcol(g, order, r)}
    rep = make_report(source, "colnum", params, "metrics", claimed, measured, {"ordering": order.to_json_obj()})
    return rep, None


def cmd_verify(g: Graph, source: str, args):
    if not args.cert:
        raise UsageError("verify needs --cert FILE|-")
    reports = []
    text = sys.stdin.read() if args.cert == "-" else _read(args.cert)
    for line in text.splitlines():
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise GraphError(f"bad certificate JSON: {exc.msg}") from None
        reports.append(_verify_one(g, source, obj.get("result", obj) if isinstance(obj, dict) else obj))
    if not reports:
        raise GraphError("no certificate to verify")
    return reports, None


def _verify_one(g: Graph, source: str, obj) -> dict:
    if isinstance(obj, dict) and "branch_sets" in obj:
        model = MinorModel.from_json_obj(obj)
        check = oracles.validate_minor_model(g, model)
        return make_report(source, "verify", {"kind": "minor_model"}, "certificate", {}, {"model_valid": bool(check)},
                           extra={"valid": bool(check), "detail": check.detail, "pass": bool(check)})
    if isinstance(obj, dict) and "parts" in obj:
        p = ConnectedPartition.from_json_obj(obj)
        rep = validate_partition(g, p, strict=False)
        return make_report(source, "verify", {"kind": "partition"}, "partition", {"width": p.width}, {"width": rep.width})
    if isinstance(obj, dict) and "colour" in obj:
        m = oracles.validate_colouring(g, obj["colour"])
        measured = {"num_colours": m.num_colours, "defect": m.defect, "clustering": m.clustering}
        claimed = {k: obj[k] for k in measured if k in obj}
        return make_report(source, "verify", {"kind": "colouring"}, "colouring", claimed, measured)
    if isinstance(obj, dict) and "ordering" in obj:
        order = VertexOrdering.of(obj["ordering"])
        return make_report(source, "verify", {"kind": "ordering"}, "metrics", {}, {"n": len(order.order)},
                           extra={"pass": len(order.order) == g.n})
    raise GraphError("unrecognised certificate object")


def cmd_oracle(g: Graph, source: str, args):
    what = args.what
    params: dict = {"oracle": what}
    if what == "has-minor":
        if not args.pattern:
            raise UsageError("has-minor needs --pattern, e.g. K5 or K*2,3")
        pat = Pattern.parse(args.pattern)
        params["pattern"] = pat.name
        model = oracles.has_minor(g, pat)
        measured = {"has_minor": model is not None}
        result = None if model is None else model.to_json_obj()
    elif what == "treewidth":
        measured, result = {"treewidth": oracles.exact_treewidth(g)}, None
    elif what == "chordal":
        res = oracles.is_chordal(g)
        if res.chordal:
            measured, result = {"chordal": True, "max_clique": res.max_clique}, {"peo": list(res.peo)}
        else:
            measured, result = {"chordal": False}, {"chordless_cycle": list(res.witness)}
    elif what == "degeneracy":
        measured, result = {"degeneracy": oracles.degeneracy(g)}, None
    elif what == "cluster":
        params.update(k=args.k, c=args.c)
        measured, result = {"colourable": oracles.exhaustive_cluster_colourable(g, args.k, args.c)}, None
    else:
        raise UsageError(f"unknown oracle {what!r}")
    return make_report(source, "oracle", params, "metrics", {}, measured, result), None


COMMANDS: dict[str, Callable] = {
    "decomp": cmd_decomp,
    "colour": cmd_colour,
    "colnum": cmd_colnum,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
}


# -- argument parsing ----------------------------------------------------------------


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", action="append", metavar="FILE|-", default=argparse.SUPPRESS,
                        help="input graph (repeatable; '-' reads standard input)")
    common.add_argument("--format", choices=("edgelist", "json"), default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--out", metavar="FILE", default=argparse.SUPPRESS)
    common.add_argument("--dot", metavar="FILE", default=argparse.SUPPRESS)
    common.add_argument("--timing", action="store_true", default=argparse.SUPPRESS,
                        help="add wall time to reports (makes output non-reproducible)")

    parser = argparse.ArgumentParser(prog="minorcolour", description="Decompositions and improper colourings of graphs excluding a minor.")
    parser.add_argument("--input", action="append", metavar="FILE|-")
    parser.add_argument("--format", choices=("edgelist", "json"), default="edgelist")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", metavar="FILE")
    parser.add_argument("--dot", metavar="FILE")
    parser.add_argument("--timing", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", parents=[common], help="generate a graph")
    gen.add_argument("graph_family", choices=sorted(generators.FAMILIES))
    gen.add_argument("params", nargs="*", type=int)

    def fam_args(p, families):
        p.add_argument("family", choices=families)
        p.add_argument("--t", type=int, required=True)
        p.add_argument("--s", type=int)

    dec = sub.add_parser("decomp", parents=[common], help="connected partition or minor certificate")
    fam_args(dec, ("kt", "k2t", "k3t", "kst"))

    col = sub.add_parser("colour", parents=[common], help="improper colouring")
    col.add_argument("family", choices=("kt", "k2t", "k3t", "cuttree", "tpartition"))
    col.add_argument("--t", type=int, default=0)
    col.add_argument("--mode")
    col.add_argument("--anchor", type=int, nargs=2, metavar=("U", "V"))
    col.add_argument("--tree", metavar="FILE", help="CutTree or TPartition JSON")
    col.add_argument("--multiplicity", type=int, default=1)

    cn = sub.add_parser("colnum", parents=[common], help="strong and weak colouring numbers of an ordering")
    cn.add_argument("--ordering", required=True,
                    choices=("identity", "layered", "k2t", "k3t", "kst", "exact-scol", "exact-wcol"))
    cn.add_argument("--r", type=int, required=True)
    cn.add_argument("--t", type=int, default=3)
    cn.add_argument("--s", type=int)
    cn.add_argument("--ltd", metavar="FILE", help="layered tree decomposition JSON")

    ver = sub.add_parser("verify", parents=[common], help="re-validate emitted certificates")
    ver.add_argument("--cert", metavar="FILE|-", help="report lines or certificate JSON")

    orc = sub.add_parser("oracle", parents=[common], help="brute-force oracles")
    orc.add_argument("what", choices=("has-minor", "treewidth", "chordal", "degeneracy", "cluster"))
    orc.add_argument("--pattern")
    orc.add_argument("--k", type=int, default=2)
    orc.add_argument("--c", type=int, default=1)
    return parser


def _parse_graph(text: str, fmt: str) -> Graph:
    return from_json(text) if fmt == "json" else from_edge_list(text)


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PASS if exc.code == 0 else EXIT_USAGE
    try:
        return _run(args, stdout)
    except (UsageError, GraphError, json.JSONDecodeError) as exc:
        print(f"minorcolour: error: {exc}", file=stderr)
        return EXIT_USAGE


def _run(args, stdout) -> int:
    if args.command == "gen":
        g = generators.generate(args.graph_family, tuple(args.params), args.seed)
        text = to_json(g) + "\n" if args.format == "json" else to_edge_list(g)
        _emit(args, text, stdout)
        if args.dot:
            _write(args.dot, to_dot(g))
        return EXIT_PASS
    if args.command == "verify" and args.cert == "-" and (not args.input or "-" in args.input):
        raise UsageError("verify cannot read both the graph and the certificate from standard input")
    sources = args.input or ["-"]
    lines, code, dots = [], EXIT_PASS, []
    for source in sources:
        text = sys.stdin.read() if source == "-" else _read(source)
        g = _parse_graph(text, args.format)
        start = time.perf_counter()
        try:
            reports, colour = COMMANDS[args.command](g, source, args)
        except BoundViolation as exc:
            reports, colour = make_report(source, args.command, {}, "violation", {}, {}, extra={"error": str(exc), "pass": False}), None
        elapsed = time.perf_counter() - start
        if isinstance(reports, dict):
            reports = [reports]
        for rep in reports:
            if args.timing:
                rep["wall_time"] = round(elapsed, 6)
            if not rep["pass"]:
                code = EXIT_VIOLATION
            lines.append(dumps(rep))
        dots.append(to_dot(g, colour, name=f"G{len(dots)}"))
    _emit(args, "".join(line + "\n" for line in lines), stdout)
    if args.dot:
        _write(args.dot, "".join(dots))
    return code


def _emit(args, text: str, stdout) -> None:
    if args.out:
        _write(args.out, text)
    else:
        stdout.write(text)


def _write(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
