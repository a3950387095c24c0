"""``lexcycle`` command-line front end.

Exit codes: 0 success, 1 bad input or usage, 2 a verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import TextIO

from .graph import (
    Cycle,
    DisconnectedError,
    GraphError,
    NotSimpleError,
    WeightedGraph,
    parse_graph,
    serialize_graph,
)
from .generators import GeneratorSpec, generate
from .lexpath import LspTable, brute_force_lsp, lex_shortest_paths_from
from .lsc import brute_force_lex_short_cycles, enumerate_lex_short_cycles
from .mcb import (
    CycleBasis,
    VerificationError,
    horton_mcb,
    mcb_partial_2tree,
    verify_cycle_basis,
)
from .structure import (
    decomp,
    find_three_component_separator,
    is_outerplanar,
    is_partial_2tree,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_MISMATCH = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _read_graph(path: str) -> WeightedGraph:
    if path == "-":
        return parse_graph(sys.stdin)
    try:
        with open(path) as fh:
            return parse_graph(fh)
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc.strerror}") from None


def _cycle_json(c: Cycle) -> dict:
    return {"vertices": list(c.vertex_sequence()), "edges": [list(e) for e in c.edges], "weight": c.weight}


def _cycles_json(g: WeightedGraph, cycles) -> dict:
    cycles = list(cycles)
    return {
        "n": g.n,
        "m": g.m,
        "count": len(cycles),
        "total_weight": sum(c.weight for c in cycles),
        "cycles": [_cycle_json(c) for c in cycles],
    }


def _cycles_text(g: WeightedGraph, cycles) -> list[str]:
    cycles = list(cycles)
    lines = [f"n {g.n} m {g.m}"]
    lines += [f"cycle {c} weight {c.weight}" for c in cycles]
    lines += [f"count {len(cycles)}", f"total_weight {sum(c.weight for c in cycles)}"]
    return lines


def _emit(out: TextIO, args, payload: dict, lines: list[str]) -> None:
    if args.format == "json":
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


def cmd_mcb(args, out) -> int:
    g = _read_graph(args.input)
    basis = mcb_partial_2tree(g) if args.method == "lsc" else horton_mcb(g)
    report = verify_cycle_basis(g, basis)
    payload = _cycles_json(g, basis.cycles) | {"method": args.method, "report": report.as_dict()}
    lines = _cycles_text(g, basis.cycles)
    lines.append(
        "verification "
        + " ".join(f"{k}={str(v).lower()}" for k, v in report.as_dict().items() if isinstance(v, bool))
    )
    _emit(out, args, payload, lines)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_lsc(args, out) -> int:
    g = _read_graph(args.input)
    cycles = brute_force_lex_short_cycles(g, LspTable.brute_force(g)) if args.oracle else enumerate_lex_short_cycles(g)
    _emit(out, args, _cycles_json(g, cycles), _cycles_text(g, cycles))
    return EXIT_OK


def cmd_lsp(args, out) -> int:
    g = _read_graph(args.input)
    for v in (args.source, args.target):
        if v not in g:
            raise GraphError(f"vertex {v} not in graph")
    if args.oracle:
        p = brute_force_lsp(g, args.source, args.target)
    else:
        p = lex_shortest_paths_from(g, args.source)[args.target]
    payload = {
        "source": args.source,
        "target": args.target,
        "vertices": list(p.vertices),
        "weight": p.weight,
        "length": p.length,
    }
    _emit(out, args, payload, [f"path {p}", f"weight {p.weight}", f"length {p.length}"])
    return EXIT_OK


def cmd_check(args, out) -> int:
    report = {"simple": True, "connected": True, "partial_2tree": None, "outerplanar": None, "separator": None}
    status = EXIT_OK
    try:
        g = _read_graph(args.input)
    except NotSimpleError as exc:
        report.update(simple=False, connected=None, error=str(exc))
        status = EXIT_INPUT
    except DisconnectedError as exc:
        report.update(connected=False, error=str(exc))
        status = EXIT_INPUT
    else:
        report.update(n=g.n, m=g.m, partial_2tree=is_partial_2tree(g))
        if report["partial_2tree"]:
            report["outerplanar"] = is_outerplanar(g)
            sep = find_three_component_separator(g)
            report["separator"] = list(sep) if sep else None
    lines = []
    for key in ("simple", "connected", "partial_2tree", "outerplanar", "separator", "error"):
        if key not in report:
            continue
        val = report[key]
        if isinstance(val, list):
            val = " ".join(map(str, val))
        elif val is None:
            val = "n/a" if key != "separator" else "none"
        else:
            val = str(val).lower()
        lines.append(f"{key.replace('_', '-')}: {val}")
    _emit(out, args, report, lines)
    return status


def cmd_decomp(args, out) -> int:
    g = _read_graph(args.input)
    try:
        res = decomp(g, args.u, args.v)
    except ValueError as exc:
        raise GraphError(str(exc)) from None
    violations = res.invariant_violations(g)
    payload = {
        "separator": list(res.separator),
        "sep_path": list(res.sep_path.vertices),
        "avoided": sorted(res.avoided),
        "g1": {"vertices": list(res.g1.vertices), "graph": serialize_graph(res.g1)},
        "g2": {"vertices": list(res.g2.vertices), "graph": serialize_graph(res.g2)},
        "violations": violations,
    }
    lines = [
        f"# separator {res.separator[0]} {res.separator[1]}",
        f"# lsp {res.sep_path}",
        "# avoided " + " ".join(map(str, sorted(res.avoided))),
    ]
    for name, sub in (("g1", res.g1), ("g2", res.g2)):
        lines.append(f"# {name}")
        lines.append(serialize_graph(sub).rstrip("\n"))
    lines += [f"# violation: {v}" for v in violations]
    _emit(out, args, payload, lines)
    return EXIT_MISMATCH if violations else EXIT_OK


def cmd_gen(args, out) -> int:
    try:
        spec = GeneratorSpec(
            family=args.family,
            n=args.n,
            delete_count=args.delete,
            max_weight=args.max_weight,
            rim_weight=args.rim_weight,
            spoke_weight=args.spoke_weight,
            chords=args.chords,
            seed=args.seed,
        )
        g = generate(spec)
    except ValueError as exc:
        raise GraphError(str(exc)) from None
    if args.format == "json":
        text = json.dumps({"n": g.n, "m": g.m, "edges": [list(t) for t in g.weighted_edges()]}, sort_keys=True) + "\n"
    else:
        text = serialize_graph(g)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    g = _read_graph(args.input)
    try:
        lsc_basis: CycleBasis | None = mcb_partial_2tree(g)
        problem = None
    except VerificationError as exc:
        lsc_basis, problem = None, str(exc)
    horton = horton_mcb(g)
    report = verify_cycle_basis(g, lsc_basis) if lsc_basis is not None else None
    match = lsc_basis is not None and lsc_basis.total_weight == horton.total_weight and report.ok
    payload = {
        "n": g.n,
        "m": g.m,
        "lsc_weight": lsc_basis.total_weight if lsc_basis else None,
        "horton_weight": horton.total_weight,
        "report": report.as_dict() if report is not None else None,
        "match": match,
        "error": problem,
    }
    lines = [
        f"n {g.n} m {g.m}",
        f"lsc_weight {payload['lsc_weight']}",
        f"horton_weight {horton.total_weight}",
        f"match {str(match).lower()}",
    ]
    if problem:
        lines.append(f"error {problem}")
    _emit(out, args, payload, lines)
    return EXIT_OK if match else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0)

    def with_input(p):
        p.add_argument("--input", required=True, help="graph file, or - for stdin")
        return p

    parser = _Parser(prog="lexcycle", description="Lex short cycles and minimum cycle bases.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = with_input(sub.add_parser("mcb", parents=[common], help="minimum cycle basis"))
    p.add_argument("--method", choices=("lsc", "horton"), default="lsc")
    p.set_defaults(func=cmd_mcb)

    p = with_input(sub.add_parser("lsc", parents=[common], help="list lex short cycles"))
    p.add_argument("--oracle", action="store_true", help="brute-force enumeration")
    p.set_defaults(func=cmd_lsc)

    p = with_input(sub.add_parser("lsp", parents=[common], help="one lex shortest path"))
    p.add_argument("--source", type=int, required=True)
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="brute-force path enumeration")
    p.set_defaults(func=cmd_lsp)

    p = with_input(sub.add_parser("check", parents=[common], help="structural report"))
    p.set_defaults(func=cmd_check)

    p = with_input(sub.add_parser("decomp", parents=[common], help="split at a separator pair"))
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    p.set_defaults(func=cmd_decomp)

    p = sub.add_parser("gen", parents=[common], help="generate a random instance")
    p.add_argument("--family", choices=("partial2tree", "outerplanar", "wheel"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delete", type=int, default=0)
    p.add_argument("--max-weight", type=int, default=100)
    p.add_argument("--rim-weight", type=int, default=1)
    p.add_argument("--spoke-weight", type=int, default=100)
    p.add_argument("--chords", type=int, default=None)
    p.add_argument("--output")
    p.set_defaults(func=cmd_gen)

    p = with_input(sub.add_parser("verify", parents=[common], help="LSC basis vs Horton"))
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: list[str], out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        err.write(str(exc) + "\n")
        return EXIT_INPUT
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_INPUT
    try:
        return args.func(args, out)
    except ValueError as exc:  # GraphError, NotPartial2TreeError, oracle size guards
        err.write(f"lexcycle: error: {exc}\n")
        return EXIT_INPUT
    except VerificationError as exc:
        err.write(f"lexcycle: verification failed: {exc}\n")
        return EXIT_MISMATCH


def main() -> None:
    sys.exit(run(sys.argv[1:]))
