"""Command-line interface: one subcommand per library capability.

All input and output uses the JSON interchange formats of the library;
output bytes are deterministic for a fixed invocation.  Exit codes:
0 success / realizable, 1 not realizable, 2 invalid input or flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import data as data_mod
from . import graphs as graphs_mod
from . import ops as ops_mod
from .data import ParseError
from .decide import ValidationFailedError, decide
from .enumeration import classify_small, enumerate_data, signature_spectrum
from .invariants import report_to_obj, structural_checks

EXIT_OK = 0
EXIT_NOT_REALIZABLE = 1
EXIT_INVALID = 2


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _dump(obj: object, pretty: bool) -> str:
    if pretty:
        return json.dumps(obj, indent=2)
    return json.dumps(obj, separators=(",", ":"))


def _decision_obj(decision) -> dict:
    obj: dict = {"realizable": decision.realizable}
    if decision.realizable:
        obj["trace"] = ops_mod.trace_to_obj(decision.trace)
        obj["obstruction"] = None
    else:
        obj["trace"] = None
        obj["obstruction"] = {
            "code": decision.obstruction.code,
            "detail": decision.obstruction.detail,
            "weight": decision.obstruction.weight,
        }
    return obj


def _cmd_check(args) -> int:
    decision = decide(data_mod.parse(_read(args.file)))
    print(_dump(_decision_obj(decision), args.pretty))
    return EXIT_OK if decision.realizable else EXIT_NOT_REALIZABLE


def _cmd_trace(args) -> int:
    decision = decide(data_mod.parse(_read(args.file)))
    if not decision.realizable:
        print(_dump(_decision_obj(decision), args.pretty))
        return EXIT_NOT_REALIZABLE
    print(ops_mod.serialize_trace(decision.trace, pretty=args.pretty))
    return EXIT_OK


def _cmd_invariants(args) -> int:
    report = structural_checks(data_mod.parse(_read(args.file)))
    print(_dump(report_to_obj(report), args.pretty))
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    corpus = enumerate_data(args.points, args.max_weight)
    if args.with_traces:
        for entry, trace in corpus.items():
            line = {
                "data": data_mod.to_obj(entry),
                "trace": ops_mod.trace_to_obj(trace),
            }
            print(_dump(line, False))
    else:
        for entry in corpus:
            print(data_mod.serialize(entry))
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    spectrum = signature_spectrum(args.points, args.max_weight)
    print(_dump(sorted(spectrum), args.pretty))
    return EXIT_OK


def _cmd_classify(args) -> int:
    for match in classify_small(args.points, args.max_weight):
        line = {
            "data": data_mod.to_obj(match.data),
            "family": match.family,
            "parameters": match.parameters,
            "signature": match.signature,
        }
        print(_dump(line, False))
    return EXIT_OK


def _graph_from_args(args):
    """Build a graph from --trace directly, or from --data via the decider.

    Returns (graph, None) or (None, exit_code) when the data is not
    realizable (no graph exists to draw).
    """
    if args.trace is not None:
        trace = ops_mod.parse_trace(_read(args.trace))
        try:
            return graphs_mod.graph_of(trace), None
        except graphs_mod.TraceInvalidError as exc:
            raise ParseError(str(exc)) from exc
    decision = decide(data_mod.parse(_read(args.data)))
    if not decision.realizable:
        print(_dump(_decision_obj(decision), args.pretty))
        return None, EXIT_NOT_REALIZABLE
    return graphs_mod.graph_of(decision.trace), None


def _cmd_graph(args) -> int:
    graph, code = _graph_from_args(args)
    if graph is None:
        return code
    print(graphs_mod.serialize_graph(graph, pretty=args.pretty))
    return EXIT_OK


def _cmd_dot(args) -> int:
    graph, code = _graph_from_args(args)
    if graph is None:
        return code
    sys.stdout.write(graphs_mod.to_dot(graph))
    return EXIT_OK


def _add_io_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--pretty", action="store_true", help="indented human-oriented output"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circleact",
        description="Fixed point data of circle actions on oriented 4-manifolds: "
        "decide realizability, verify invariants, enumerate, and draw multigraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide realizability of a data file")
    p.add_argument("file", help="data JSON file, or - for stdin")
    _add_io_flags(p)
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("trace", help="print a witness construction trace")
    p.add_argument("file", help="data JSON file, or - for stdin")
    _add_io_flags(p)
    p.set_defaults(fn=_cmd_trace)

    p = sub.add_parser("invariants", help="print the invariant report")
    p.add_argument("file", help="data JSON file, or - for stdin")
    _add_io_flags(p)
    p.set_defaults(fn=_cmd_invariants)

    p = sub.add_parser("enumerate", help="stream all realizable data within bounds")
    p.add_argument("--points", type=int, required=True, metavar="K")
    p.add_argument("--max-weight", type=int, required=True, metavar="W")
    p.add_argument("--with-traces", action="store_true")
    p.add_argument(
        "--jobs",
        type=int,
        default=1,
        metavar="N",
        help="accepted for compatibility; enumeration is fast enough serially "
        "and the output order is canonical either way",
    )
    _add_io_flags(p)
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("spectrum", help="signatures realized with exactly K points")
    p.add_argument("--points", type=int, required=True, metavar="K")
    p.add_argument("--max-weight", type=int, required=True, metavar="W")
    _add_io_flags(p)
    p.set_defaults(fn=_cmd_spectrum)

    p = sub.add_parser("classify", help="match entries to closed-form families")
    p.add_argument("--points", type=int, required=True, choices=(2, 3, 4))
    p.add_argument("--max-weight", type=int, required=True, metavar="W")
    _add_io_flags(p)
    p.set_defaults(fn=_cmd_classify)

    for name, fn, help_text in (
        ("graph", _cmd_graph, "multigraph of a trace or of realizable data"),
        ("dot", _cmd_dot, "DOT rendering of a trace or of realizable data"),
    ):
        p = sub.add_parser(name, help=help_text)
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--data", metavar="FILE")
        group.add_argument("--trace", metavar="FILE")
        _add_io_flags(p)
        p.set_defaults(fn=fn)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, ValidationFailedError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
