"""Batch front door: parse, classify, decide, reduce, compute invariants,
run the graph search.

Exit codes: 0 success, 2 parse error, 3 precondition failure.  Reports go
to standard output (human text, or machine JSON with ``--json``); traces
are JSON lines; the graph-search report can also render a matplotlib
summary figure next to its JSONL stream.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import codec
from .bracket import kauffman_bracket, linking_matrix, writhe
from .classify import alternation_report, hopf_degeneracy_check, is_prime, is_reduced
from .diagram import Diagram, link_components, shadow_components
from .errors import (
    AaltError,
    ArcCountError,
    DisconnectedError,
    NoCrossingsError,
    NonPlanarError,
    NotAlmostAlternatingError,
    NotRealizableError,
    ParseError,
    PreconditionError,
    TooLargeError,
)
from .rules import RuleSet

PARSE_ERRORS = (ParseError, ArcCountError, NonPlanarError, NotRealizableError)
PRECONDITION_ERRORS = (
    PreconditionError,
    DisconnectedError,
    NoCrossingsError,
    NotAlmostAlternatingError,
    TooLargeError,
)


def read_diagram(path: str, fmt: str | None) -> Diagram:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    if fmt is None:
        if path.endswith(".gauss"):
            fmt = "gauss"
        elif path.endswith(".json"):
            fmt = "json"
        else:
            fmt = "pd"
    if fmt == "pd":
        return codec.parse_pd(text)
    if fmt == "gauss":
        return codec.parse_gauss(text)
    if fmt == "json":
        return codec.parse_json(text)
    raise ParseError(f"unknown format {fmt}")


def load_rules(args) -> RuleSet:
    if getattr(args, "rules", None):
        return RuleSet.load(args.rules)
    return RuleSet.default()


def cmd_classify(args) -> int:
    d = read_diagram(args.input, args.format)
    rules = load_rules(args)
    out: dict = {
        "crossings": d.n_crossings,
        "circles": d.circles,
        "link_components": link_components(d),
        "shadow_components": shadow_components(d),
    }
    if shadow_components(d) == 1:
        rep = alternation_report(d)
        out["alternating"] = rep.is_alternating
        out["almost_alternating"] = rep.is_almost_alternating
        out["dealternators"] = list(rep.dealternators)
        if d.n_crossings:
            out["prime"] = is_prime(d)
        if rep.is_almost_alternating and len(rep.dealternators) == 1 and out.get("prime"):
            out["reduced"] = is_reduced(d, rules).kind
        if len(rep.dealternators) > 1:
            out["degenerate_two_crossing_diagram"] = hopf_degeneracy_check(d)
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(codec.emit_svg(d))
    if args.json:
        print(json.dumps(out))
    else:
        bits = [f"{d.n_crossings} crossings", f"{out['link_components']} link component(s)"]
        if out.get("alternating"):
            bits.append("alternating")
        elif out.get("almost_alternating"):
            n = len(out.get("dealternators", []))
            note = " (degenerate two-dealternator diagram)" if n > 1 else ""
            bits.append(f"almost alternating, {n} dealternator(s){note}")
        if "prime" in out:
            bits.append("prime" if out["prime"] else "composite")
        if "reduced" in out:
            bits.append(out["reduced"].replace("_", " "))
        print(", ".join(bits))
    return 0


def cmd_decide(args) -> int:
    from .rewrite import decide_splittable

    d = read_diagram(args.input, args.format)
    rules = load_rules(args)
    verdict, trace = decide_splittable(d, rules)
    if args.trace:
        with open(args.trace, "w") as fh:
            fh.write(trace.to_jsonl() + "\n")
    obj = {
        "verdict": verdict.kind,
        "certificate": verdict.certificate,
        "moves": trace.moves_applied(),
        "sublinks": [codec.emit_pd(p) for p in verdict.sublinks],
    }
    if verdict.exhibited is not None:
        obj["exhibited"] = codec.emit_pd(verdict.exhibited)
    if args.json:
        obj["trace"] = [json.loads(s.to_json()) for s in trace.steps]
        print(json.dumps(obj))
    else:
        line = f"{obj['verdict']} (certificate: {obj['certificate']}, moves: {obj['moves']})"
        if "exhibited" in obj:
            line += f"\nexhibited split diagram: {obj['exhibited']}"
        print(line)
    return 0


def cmd_reduce(args) -> int:
    from .rewrite import decide_splittable

    d = read_diagram(args.input, args.format)
    rules = load_rules(args)
    verdict, trace = decide_splittable(d, rules)
    final = verdict.exhibited
    if final is None:
        final = d
        for step in trace.steps:
            if step.move in ("I", "II"):
                final = codec.parse_pd(step.after_pd)
    if args.trace:
        with open(args.trace, "w") as fh:
            fh.write(trace.to_jsonl() + "\n")
    if args.fig:
        from .report import trace_figure

        trace_figure([json.loads(s.to_json()) for s in trace.steps], args.fig)
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(codec.emit_svg(final))
    obj = {
        "final": codec.emit_pd(final),
        "moves": trace.moves_applied(),
        "verdict": verdict.kind,
    }
    print(json.dumps(obj) if args.json else f"{obj['final']}  ({obj['moves']} moves, {obj['verdict']})")
    return 0


def cmd_bracket(args) -> int:
    d = read_diagram(args.input, args.format)
    b = kauffman_bracket(d)
    obj = {
        "bracket": str(b),
        "writhe": writhe(d) if d.n_crossings else 0,
        "linking_matrix": [list(r) for r in linking_matrix(d).entries],
    }
    if args.json:
        print(json.dumps(obj))
    else:
        print(f"bracket: {obj['bracket']}")
        print(f"writhe: {obj['writhe']}")
        print(f"linking matrix: {obj['linking_matrix']}")
    return 0


def cmd_convert(args) -> int:
    d = read_diagram(args.input, args.format)
    to = args.to
    if to == "pd":
        text = codec.emit_pd(d)
    elif to == "gauss":
        text = codec.emit_gauss(d)
    elif to == "json":
        text = codec.emit_json(d)
    elif to == "svg":
        text = codec.emit_svg(d)
    else:
        raise ParseError(f"unknown output format {to}")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + ("\n" if not text.endswith("\n") else ""))
    else:
        print(text)
    return 0


def cmd_graphsearch(args) -> int:
    from . import dischargelab as lab

    records = []
    stream = open(args.jsonl, "w") if args.jsonl else None
    compliant = 0
    total = 0
    sizes = tuple(range(1, args.black_class + 1)) if args.black_class > 1 else (1,)
    for g, rep in lab.enumerate_candidates(args.max_vertices, black_class_sizes=sizes):
        total += 1
        if rep.compliant:
            compliant += 1
            outcome = "compliant"
        elif rep.violations:
            outcome = rep.violations[0].split(" ")[0] + "-constraint"
            outcome = _classify_violation(rep.violations[0])
        else:
            outcome = _classify_note(rep.weight_notes[0])
        rec = {
            "vertices": g.n_vertices,
            "black": sorted(g.black),
            "table": [list(r) for r in g.table],
            "census": {str(k): v for k, v in sorted(rep.census.items())},
            "violations": list(rep.violations),
            "weight_notes": list(rep.weight_notes),
            "blocks": [
                {"kind": b.kind, "faces": list(b.faces), "weight": b.weight}
                for b in (rep.blocks or ())
            ],
            "outcome": outcome,
        }
        records.append(rec)
        if stream:
            stream.write(json.dumps(rec) + "\n")
    if stream:
        stream.close()
    if args.fig:
        from .report import graphsearch_figure

        graphsearch_figure(records, args.fig)
    summary = f"{compliant} compliant graphs / {total} candidates (max {args.max_vertices} vertices)"
    if args.json:
        print(json.dumps({"candidates": total, "compliant": compliant}))
    else:
        print(summary)
    return 0


def _classify_violation(text: str) -> str:
    if "black class" in text:
        return "black-class-visit"
    if "share an edge" in text:
        return "adjacent-bigons"
    if "white vertex" in text:
        return "bigons-at-white-vertex"
    return "odd-or-degenerate-face"


def _classify_note(text: str) -> str:
    if "Z_44" in text:
        return "contains-Z44"
    if "nonnegative" in text:
        return "charge-contradiction"
    return "ungroupable"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aalt",
        description="Link-diagram analysis: splittability of almost alternating diagrams.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p, svg=False):
        p.add_argument("input", help="diagram file (.pd, .gauss, .json) or - for stdin")
        p.add_argument("--format", choices=["pd", "gauss", "json"], default=None)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--rules", default=None, help="rules file overriding the default patterns")
        if svg:
            p.add_argument("--svg", default=None, help="write an SVG rendering here")

    p = sub.add_parser("classify", help="alternation, primeness and reducedness report")
    add_io(p, svg=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("decide", help="decide splittability with an audited trace")
    add_io(p)
    p.add_argument("--trace", default=None, help="write the move trace as JSON lines")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("reduce", help="apply reducing moves and print the final diagram")
    add_io(p, svg=True)
    p.add_argument("--trace", default=None, help="write the move trace as JSON lines")
    p.add_argument("--fig", default=None, help="render the crossing-count trace figure (PNG)")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("bracket", help="Kauffman bracket, writhe and linking matrix")
    add_io(p)
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("convert", help="convert between diagram encodings")
    add_io(p)
    p.add_argument("--to", choices=["pd", "gauss", "json", "svg"], required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("graphsearch", help="bounded search for admissible intersection graphs")
    p.add_argument("--max-vertices", type=int, default=4)
    p.add_argument("--black-class", type=int, default=1, help="largest black class size to try")
    p.add_argument("--jsonl", default=None, help="write one JSON record per candidate here")
    p.add_argument("--fig", default=None, help="render the summary figure (PNG)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_graphsearch)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PARSE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PRECONDITION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except AaltError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
