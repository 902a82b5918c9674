"""Command-line interface.

Exit status: 0 success, 1 usage or parse error, 2 ``unknown`` verdict,
3 internal limit (overflow or canonicalization cap).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import List, Optional

from .canonical import DEFAULT_CANON_LIMIT, CanonicalizationLimitError, canonicalize
from .decider import (
    CyclicSubquiver,
    ExhaustedClass,
    MutationAcyclic,
    MutationCyclic,
    ThreeVertexInvariant,
    Unknown,
    decide,
)
from .explorer import (
    DEFAULT_MAX_DEPTH,
    DEFAULT_MAX_ENTRY,
    DEFAULT_MAX_QUIVERS,
    Budget,
    BudgetError,
    explore,
)
from .quiver import MutationOverflowError, QuiverError, full_subquiver, mutate_seq
from .textio import ParseError, emit_dot, emit_json, emit_quiver, read_quiver

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNKNOWN = 2
EXIT_LIMIT = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _add_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-quivers", type=int, default=DEFAULT_MAX_QUIVERS)
    p.add_argument("--max-depth", type=int, default=DEFAULT_MAX_DEPTH)
    p.add_argument("--max-entry", type=int, default=DEFAULT_MAX_ENTRY)
    p.add_argument("--canon-limit", type=int, default=DEFAULT_CANON_LIMIT,
                   help="largest vertex count accepted for canonicalization")


def _budget(args) -> Budget:
    return Budget(args.max_quivers, args.max_depth, args.max_entry)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quivermut", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("mutate", help="apply a mutation sequence and print the quiver")
    p.add_argument("file")
    p.add_argument("steps", nargs="+", type=int)
    p.add_argument("--dot", action="store_true", help="print DOT instead of text")

    p = sub.add_parser("class", help="enumerate the mutation class")
    p.add_argument("file")
    _add_budget(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("decide", help="semi-decide mutation-acyclicity")
    p.add_argument("file")
    _add_budget(p)
    p.add_argument("--recurse-subquivers", type=int, default=0, metavar="D")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("iso", help="test two quivers for isomorphism")
    p.add_argument("file1")
    p.add_argument("file2")

    p = sub.add_parser("canon", help="print the canonical matrix and hash")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("subquiver", help="print a full subquiver")
    p.add_argument("file")
    p.add_argument("vertices", help="comma-separated vertex list, e.g. 0,2,3")
    p.add_argument("--dot", action="store_true")
    return parser


def _format_certificate(cert, indent: int = 0) -> List[str]:
    pad = "  " * indent
    if isinstance(cert, ThreeVertexInvariant):
        return [
            f"{pad}{cert.kind} vertices={','.join(map(str, cert.vertices))} "
            f"weights={','.join(map(str, cert.weights))} constant={cert.constant}"
        ]
    if isinstance(cert, CyclicSubquiver):
        head = f"{pad}{cert.kind} vertices={','.join(map(str, cert.vertices))}"
        return [head] + _format_certificate(cert.inner, indent + 1)
    if isinstance(cert, ExhaustedClass):
        return [f"{pad}{cert.kind} forms={len(cert.report.representatives)}"]
    return [f"{pad}{cert!r}"]


def format_verdict(verdict) -> str:
    lines = [verdict.name]
    if isinstance(verdict, MutationAcyclic):
        lines.append("witness: " + (" ".join(map(str, verdict.witness)) or "-"))
    elif isinstance(verdict, MutationCyclic):
        lines.append("certificate:")
        lines.extend(_format_certificate(verdict.certificate, 1))
    else:
        rep = verdict.report
        lines.append(f"explored: {len(rep.representatives)}")
        lines.append("bound: " + ", ".join(rep.truncated_reasons))
    lines.append(f"stage: {verdict.stats.stage}")
    return "\n".join(lines) + "\n"


def format_report(rep) -> str:
    lines = [
        f"forms: {len(rep.representatives)}",
        f"complete: {'true' if rep.complete else 'false'}",
    ]
    if rep.truncated_reasons:
        lines.append("bound: " + ", ".join(rep.truncated_reasons))
    for idx, form in enumerate(rep.representatives):
        word = " ".join(map(str, rep.witness_for(form))) or "-"
        lines.append(f"[{idx}] {form.hash[:16]} witness: {word}")
        width = max(len(str(v)) for row in form.matrix for v in row)
        lines.extend(
            "    " + " ".join(str(v).rjust(width) for v in row) for row in form.matrix
        )
    return "\n".join(lines) + "\n"


def _parse_vertices(text: str) -> List[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"bad vertex list {text!r}") from None


def run(args, out) -> int:
    cmd = args.command
    if cmd == "mutate":
        q = mutate_seq(read_quiver(args.file), args.steps)
        out.write(emit_dot(q) if args.dot else emit_quiver(q))
        return EXIT_OK
    if cmd == "class":
        rep = explore(read_quiver(args.file), _budget(args), args.canon_limit)
        out.write(emit_json(rep) + "\n" if args.json else format_report(rep))
        return EXIT_OK
    if cmd == "decide":
        if args.recurse_subquivers < 0:
            raise UsageError("--recurse-subquivers must be non-negative")
        verdict = decide(
            read_quiver(args.file), _budget(args), args.recurse_subquivers,
            args.canon_limit,
        )
        out.write(emit_json(verdict) + "\n" if args.json else format_verdict(verdict))
        return EXIT_UNKNOWN if isinstance(verdict, Unknown) else EXIT_OK
    if cmd == "iso":
        a, b = read_quiver(args.file1), read_quiver(args.file2)
        same = a.n == b.n and canonicalize(a).matrix == canonicalize(b).matrix
        out.write("true\n" if same else "false\n")
        return EXIT_OK
    if cmd == "canon":
        form = canonicalize(read_quiver(args.file))
        if args.json:
            out.write(json.dumps({
                "matrix": [list(r) for r in form.matrix],
                "hash": form.hash,
                "perm": list(form.perm),
            }, separators=(",", ":")) + "\n")
        else:
            out.write(emit_quiver(form.quiver()) + f"# hash {form.hash}\n")
        return EXIT_OK
    if cmd == "subquiver":
        q = full_subquiver(read_quiver(args.file), _parse_vertices(args.vertices))
        out.write(emit_dot(q) if args.dot else emit_quiver(q))
        return EXIT_OK
    raise UsageError("a subcommand is required (mutate, class, decide, iso, canon, subquiver)")


def main(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return run(args, out)
    except (CanonicalizationLimitError, MutationOverflowError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_LIMIT
    except ParseError as exc:
        err.write(f"{getattr(args, 'file', '')}: {exc}\n")
        return EXIT_USAGE
    except (UsageError, QuiverError, BudgetError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
