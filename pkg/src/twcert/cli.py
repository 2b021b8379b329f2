"""Command-line entry point.

Subcommands: gen, detect, tw, sep, centralbag, decompose, verify, recheck.
Exit codes: 0 all-pass / found, 1 any-fail / absent, 2 budget or hypothesis
unmet, 64 usage error.  Every run that produces verdicts can write a
certificate JSON whose pass/fail entries re-validate from their witnesses.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Optional

from .centralbag import run_master_pipeline
from .certify import Certificate, canonical_json, graph_witness, recheck
from .config import RunConfig, load_config
from .decompose import (
    NotChordal,
    chordal_td,
    fuzzy_lci_td,
    strip_assembly,
    validate_td,
)
from .detect import (
    find_creature,
    find_induced,
    find_line_of_subdivided_wall,
    find_subdivided_claw,
    find_t_pyramid,
    find_t_theta,
)
from .generators import (
    CaterpillarSpec,
    CircularIntervalModel,
    LciThickening,
    StripStructure,
    ThickeningSpec,
    caterpillar,
    circular_interval_graph,
    creature,
    cycle_interval_model,
    pyramid,
    strip_structure_instance,
    subdivided_claw,
    theta,
    wall,
)
from .graphs import BudgetExhausted, CapExceeded, Graph
from .io import (
    graph_from_json,
    read_gr,
    read_graph_json,
    write_gr,
    write_graph_json,
    write_td,
)
from .separators import exact_treewidth, separation_number, treewidth_or_bounds
from .suites import SUITES, verify_suite
from .weights import WeightFunction, parse_fraction

USAGE_ERROR = 64


def _load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        if path.endswith(".gr"):
            return read_gr(fh)
        return read_graph_json(fh)


def _save_graph(g: Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        if path.endswith(".gr"):
            write_gr(g, fh)
        else:
            write_graph_json(g, fh)


def _load_weights(path: Optional[str], g: Graph) -> WeightFunction:
    if path is None:
        return WeightFunction.uniform(g)
    with open(path, "r", encoding="utf-8") as fh:
        return WeightFunction.from_json(json.load(fh))


def _dump_json(payload: Any, path: Optional[str]) -> None:
    text = canonical_json(payload)
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


# -- gen ------------------------------------------------------------------------


def cmd_gen(args: argparse.Namespace) -> int:
    witness: dict[str, Any] = {"family": args.family}
    if args.family == "wall":
        g = wall(args.n, args.m)
    elif args.family == "claw":
        wit = subdivided_claw(args.t1, args.t2, args.t3)
        g = wit.graph
        witness.update(root=wit.root, legs=[list(l) for l in wit.legs])
    elif args.family == "theta":
        wit = theta(args.l1, args.l2, args.l3)
        g = wit.graph
        witness.update(ends=list(wit.ends), paths=[list(p) for p in wit.paths])
    elif args.family == "pyramid":
        wit = pyramid(args.l1, args.l2, args.l3)
        g = wit.graph
        witness.update(
            apex=wit.apex,
            triangle=list(wit.triangle),
            paths=[list(p) for p in wit.paths],
        )
    elif args.family == "caterpillar":
        legs = tuple(
            tuple(int(x) for x in part.split(",") if x)
            for part in (args.legs.split(";") if args.legs else [])
        )
        wit = caterpillar(CaterpillarSpec(args.spine, legs))
        g = wit.graph
        witness.update(
            spine=list(wit.spine.vertices),
            legs=[[v, list(leg)] for v, leg in wit.legs],
        )
    elif args.family == "creature":
        wit = creature(args.k, args.t, args.spacing)
        g = wit.graph
        witness.update(
            body=list(wit.body),
            paths=[list(p) for p in wit.paths],
            joints=list(wit.joints),
        )
    elif args.family == "cycle-lci":
        model = cycle_interval_model(args.k)
        lci = LciThickening(
            model,
            ThickeningSpec(
                base=circular_interval_graph(model), sizes=(args.size,) * args.k
            ),
        )
        g = lci.graph
        witness.update(points=[str(p) for p in model.points])
    elif args.family == "strip":
        ss = strip_structure_instance(args.kind)
        g = ss.host
        witness.update(
            pattern_n=ss.pattern_n,
            pattern_edges=[list(e) for e in ss.pattern_edges],
            eta=[list(s) for s in ss.eta],
            eta_end=[[list(l), list(r)] for l, r in ss.eta_end],
        )
    else:
        print(f"unknown family {args.family!r}", file=sys.stderr)
        return USAGE_ERROR
    _save_graph(g, args.output)
    if args.witness:
        _dump_json(witness, args.witness)
    return 0


# -- detect ---------------------------------------------------------------------


def cmd_detect(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    try:
        if args.pattern == "theta":
            match = find_t_theta(g, args.t)
        elif args.pattern == "pyramid":
            match = find_t_pyramid(g, args.t)
        elif args.pattern == "claw":
            match = find_subdivided_claw(g, args.t1, args.t2, args.t3)
        elif args.pattern == "creature":
            got = find_creature(g, args.k, args.t)
            match = got
        elif args.pattern == "wall-line":
            match = find_line_of_subdivided_wall(g, args.k)
        elif args.pattern == "induced":
            if not args.pattern_file:
                print("--pattern-file required for induced", file=sys.stderr)
                return USAGE_ERROR
            match = find_induced(g, _load_graph(args.pattern_file))
        else:
            print(f"unknown pattern {args.pattern!r}", file=sys.stderr)
            return USAGE_ERROR
    except (BudgetExhausted, CapExceeded) as exc:
        _dump_json({"status": "budget", "detail": str(exc)}, args.output)
        return 2
    if match is None:
        _dump_json({"status": "absent"}, args.output)
        return 1
    payload: dict[str, Any]
    if hasattr(match, "roles"):
        payload = {
            "status": "found",
            "image": list(match.image),
            "roles": {k: list(v) for k, v in match.roles},
        }
    else:
        payload = {
            "status": "found",
            "image": list(match.image),
            "body": list(match.body),
            "paths": [list(p) for p in match.paths],
        }
    _dump_json(payload, args.output)
    return 0


# -- tw / sep ---------------------------------------------------------------------


def cmd_tw(args: argparse.Namespace, cfg: RunConfig) -> int:
    g = _load_graph(args.input)
    bounds = treewidth_or_bounds(g, cap=cfg.max_tw_n)
    if args.td:
        with open(args.td, "w", encoding="utf-8") as fh:
            write_td(bounds.td, g.n, fh)
    cert = Certificate(command=["tw", args.input], seed=cfg.seed)
    cert.record_input("graph", graph_witness(g))
    rep = validate_td(g, bounds.td)
    cert.add(
        "tw.witness",
        f"witness decomposition of width {bounds.upper} validates",
        rep.ok,
        {
            "kind": "td-valid",
            "graph": graph_witness(g),
            "bags": [list(b) for b in bounds.td.bags],
            "tree_edges": [list(e) for e in bounds.td.tree_edges],
            "width_at_most": bounds.upper,
        },
    )
    payload = {
        "lower": bounds.lower,
        "upper": bounds.upper,
        "exact": bounds.exact,
        "certificate": cert.to_json(),
    }
    _dump_json(payload, args.output)
    return cert.exit_code() if bounds.exact is not None else 2


def cmd_sep(args: argparse.Namespace, cfg: RunConfig) -> int:
    g = _load_graph(args.input)
    c = parse_fraction(args.c)
    try:
        value = separation_number(g, c, cap=cfg.max_sep_n)
    except CapExceeded as exc:
        _dump_json({"status": "budget", "detail": str(exc)}, args.output)
        return 2
    _dump_json({"separation_number": value, "c": str(c)}, args.output)
    return 0


# -- centralbag ---------------------------------------------------------------------


def cmd_centralbag(args: argparse.Namespace, cfg: RunConfig) -> int:
    g = _load_graph(args.input)
    pattern = _load_graph(args.pattern)
    forcers = [_load_graph(p) for p in args.forcer or []]
    w = _load_weights(args.weights, g)
    c = parse_fraction(args.c)
    rep = run_master_pipeline(
        g, pattern, forcers, c=c, d=args.d, w=w, tw_cap=cfg.max_tw_n
    )
    cert = Certificate(command=["centralbag", args.input], seed=cfg.seed)
    cert.record_input("graph", graph_witness(g))
    cert.record_input("pattern", graph_witness(pattern))
    cert.add(
        "bag.algebra",
        "per-level bag algebra holds",
        rep.algebra_holds,
        {"kind": "equal", "got": rep.algebra_holds, "expected": True},
    )
    cert.add(
        "bag.audit",
        "every dropped separation is justified",
        rep.audit_complete,
        {"kind": "equal", "got": rep.audit_complete, "expected": True},
    )
    cert.add(
        "bag.dimension",
        "class count stays within the ball bound",
        rep.dimension_bound_holds,
        {"kind": "equal", "got": rep.dimension_bound_holds, "expected": True},
    )
    for i, (premise, clean) in enumerate(zip(rep.forcer_premises, rep.bag_forcer_free)):
        cert.add(
            f"bag.forcer.{i}",
            "verified forcer absent from the bag",
            clean,
            {"kind": "equal", "got": clean, "expected": True},
            hypothesis_met=premise,
        )
    for chk in rep.transfer_checks:
        cert.add(
            "bag.transfer",
            chk.claim,
            chk.conclusion_holds,
            {"kind": "equal", "got": chk.conclusion_holds, "expected": True},
            hypothesis_met=chk.hypothesis_met,
        )
    result = rep.result
    payload = {
        "bag": list(rep.bag),
        "bag_weights": {str(v): str(x) for v, x in sorted(result.weights.items())}
        if result
        else {},
        "bag_treewidth": rep.bag_treewidth,
        "sequence": [
            {
                "a": list(s.a),
                "c": list(s.c),
                "b": list(s.b),
                "center": list(s.center or ()),
                "anchor": s.anchor,
                "skew": [str(w.of(s.a)), str(w.of(s.b))],
            }
            for s in rep.sequence.separations
        ],
        "skipped_copies": [list(r.copy) for r in rep.sequence.skipped],
        "partition": [list(cls) for cls in rep.partition.classes]
        if rep.partition
        else [],
        "generator": [list(cls) for cls in result.generator] if result else [],
        "drops": [
            {"index": d.index, "reason": d.reason, "witness": d.witness}
            for d in result.drops
        ]
        if result
        else [],
        "classes": rep.dimension_classes,
        "goodness": list(rep.goodness),
        "symbolic_bound": rep.symbolic_bound,
        "certificate": cert.to_json(),
    }
    _dump_json(payload, args.output)
    return cert.exit_code()


# -- decompose ---------------------------------------------------------------------


def _strip_structure_from_json(data: dict[str, Any]) -> StripStructure:
    return StripStructure(
        host=graph_from_json(data["host"]),
        pattern_n=int(data["pattern_n"]),
        pattern_edges=tuple(tuple(e) for e in data["pattern_edges"]),
        eta=tuple(tuple(s) for s in data["eta"]),
        eta_end=tuple((tuple(l), tuple(r)) for l, r in data["eta_end"]),
    )


def cmd_decompose(args: argparse.Namespace, cfg: RunConfig) -> int:
    if args.method == "chordal":
        g = _load_graph(args.input)
        try:
            td = chordal_td(g)
        except NotChordal as exc:
            _dump_json({"status": "fail", "hole": list(exc.hole)}, args.output)
            return 1
        host = g
    elif args.method == "lci":
        with open(args.input, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        model = CircularIntervalModel(
            points=tuple(Fraction(p) for p in data["points"]),
            arcs=tuple((Fraction(s), Fraction(e)) for s, e in data["arcs"]),
        )
        base = graph_from_json(data["base"]) if "base" in data else None
        spec = ThickeningSpec(
            base=base if base is not None else circular_interval_graph(model),
            sizes=tuple(data.get("sizes", [1] * len(model.points))),
            fuzz=tuple(tuple(p) for p in data.get("fuzz", [])),
            patterns=tuple(
                tuple(tuple(c) for c in pat) for pat in data.get("patterns", [])
            ),
        )
        lci = LciThickening(model, spec)
        host = lci.graph
        td = fuzzy_lci_td(lci).td
    elif args.method == "strip":
        with open(args.input, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        ss = _strip_structure_from_json(data)
        simple = Graph(
            ss.pattern_n, [(a, b) for a, b in ss.pattern_edges if a != b]
        )
        _, td0 = exact_treewidth(simple, cap=cfg.max_tw_n)
        strips = {}
        for i in range(len(ss.pattern_edges)):
            sg, _ = ss.strip_graph(i)
            try:
                strips[i] = chordal_td(sg)
            except NotChordal:
                strips[i] = exact_treewidth(sg, cap=cfg.max_tw_n)[1]
        rep = strip_assembly(ss, td0, strips)
        td = rep.td
        host = ss.host
    else:
        print(f"unknown method {args.method!r}", file=sys.stderr)
        return USAGE_ERROR
    check = validate_td(host, td)
    if args.td:
        with open(args.td, "w", encoding="utf-8") as fh:
            write_td(td, host.n, fh)
    _dump_json(
        {"status": "ok" if check.ok else "fail", "width": check.width,
         "violations": list(check.violations)},
        args.output,
    )
    return 0 if check.ok else 1


# -- verify / recheck -----------------------------------------------------------------


def cmd_verify(args: argparse.Namespace, cfg: RunConfig) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    worst = 0
    for name in names:
        try:
            if name == "harvey-wood" and args.max_n:
                from .suites import suite_harvey_wood

                cert = suite_harvey_wood(cfg, max_n=args.max_n)
            else:
                cert = verify_suite(name, cfg)
        except ValueError as exc:
            print(str(exc), file=sys.stderr)
            return USAGE_ERROR
        out = None
        if args.output:
            out = args.output if len(names) == 1 else f"{args.output}.{name}.json"
        _dump_json(cert.to_json(), out)
        worst = max(worst, cert.exit_code())
    return worst


def cmd_recheck(args: argparse.Namespace) -> int:
    with open(args.input, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    cert = data.get("certificate", data)
    checked, confirmed, problems = recheck(cert)
    _dump_json(
        {"checked": checked, "confirmed": confirmed, "problems": problems},
        args.output,
    )
    return 0 if not problems else 1


# -- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="twcert",
        description="treewidth certification toolkit: generators, detectors, "
        "separators, central bags, and tree decompositions",
    )
    ap.add_argument("--config", help="key=value config file (env TWCERT_CONFIG)")
    ap.add_argument("--seed", type=int, help="seed for seeded corpora")
    sub = ap.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit a graph family instance")
    gen.add_argument("family", choices=[
        "wall", "claw", "theta", "pyramid", "caterpillar", "creature",
        "cycle-lci", "strip",
    ])
    gen.add_argument("--n", type=int, default=3)
    gen.add_argument("--m", type=int, default=3)
    gen.add_argument("--t1", type=int, default=1)
    gen.add_argument("--t2", type=int, default=1)
    gen.add_argument("--t3", type=int, default=1)
    gen.add_argument("--l1", type=int, default=2)
    gen.add_argument("--l2", type=int, default=2)
    gen.add_argument("--l3", type=int, default=2)
    gen.add_argument("--spine", type=int, default=2)
    gen.add_argument("--legs", default="", help='per spine vertex, e.g. "1;2,1;"')
    gen.add_argument("--k", type=int, default=3)
    gen.add_argument("--t", type=int, default=1)
    gen.add_argument("--spacing", type=int, default=2)
    gen.add_argument("--size", type=int, default=1)
    gen.add_argument("--kind", default="trivial_single_edge")
    gen.add_argument("-o", "--output", required=True)
    gen.add_argument("--witness")

    det = sub.add_parser("detect", help="exact induced pattern detection")
    det.add_argument("--pattern", required=True,
                     choices=["theta", "pyramid", "claw", "creature", "wall-line", "induced"])
    det.add_argument("--pattern-file")
    det.add_argument("--t", type=int, default=2)
    det.add_argument("--t1", type=int, default=1)
    det.add_argument("--t2", type=int, default=1)
    det.add_argument("--t3", type=int, default=1)
    det.add_argument("--k", type=int, default=3)
    det.add_argument("-i", "--input", required=True)
    det.add_argument("-o", "--output")

    tw = sub.add_parser("tw", help="exact treewidth or certified bounds")
    tw.add_argument("-i", "--input", required=True)
    tw.add_argument("-o", "--output")
    tw.add_argument("--td", help="write the witness decomposition (.td)")

    sep = sub.add_parser("sep", help="exact separation number")
    sep.add_argument("-i", "--input", required=True)
    sep.add_argument("--c", default="1/2")
    sep.add_argument("-o", "--output")

    cb = sub.add_parser("centralbag", help="run the central-bag pipeline")
    cb.add_argument("-i", "--input", required=True)
    cb.add_argument("--pattern", required=True, help="pattern graph file")
    cb.add_argument("--forcer", action="append", help="forcer graph file; repeatable")
    cb.add_argument("--weights", help='vertex weights JSON {"0": "1/7", ...}')
    cb.add_argument("--c", default="1/2")
    cb.add_argument("--d", type=int, default=2)
    cb.add_argument("-o", "--output")

    dec = sub.add_parser("decompose", help="constructive tree decompositions")
    dec.add_argument("--method", required=True, choices=["chordal", "lci", "strip"])
    dec.add_argument("-i", "--input", required=True)
    dec.add_argument("--td", help="write the decomposition (.td)")
    dec.add_argument("-o", "--output")

    ver = sub.add_parser("verify", help="run a named verification battery")
    ver.add_argument("suite", help=f"one of: all, {', '.join(sorted(SUITES))}")
    ver.add_argument("-o", "--output")
    ver.add_argument("--max-n", type=int, dest="max_n")
    ver.add_argument("--c", default=None)

    rec = sub.add_parser("recheck", help="re-validate a certificate from witnesses")
    rec.add_argument("-i", "--input", required=True)
    rec.add_argument("-o", "--output")
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    overrides: dict[str, Any] = {}
    if getattr(args, "seed", None) is not None:
        overrides["seed"] = args.seed
    if getattr(args, "c", None) not in (None, "1/2") and args.command == "verify":
        overrides["c"] = parse_fraction(args.c)
    try:
        cfg = load_config(args.config, **overrides)
    except (OSError, ValueError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    try:
        if args.command == "gen":
            return cmd_gen(args)
        if args.command == "detect":
            return cmd_detect(args)
        if args.command == "tw":
            return cmd_tw(args, cfg)
        if args.command == "sep":
            return cmd_sep(args, cfg)
        if args.command == "centralbag":
            return cmd_centralbag(args, cfg)
        if args.command == "decompose":
            return cmd_decompose(args, cfg)
        if args.command == "verify":
            return cmd_verify(args, cfg)
        if args.command == "recheck":
            return cmd_recheck(args)
    except FileNotFoundError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
