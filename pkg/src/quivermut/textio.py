"""Quiver text format, DOT and JSON emitters.

Quiver text::

    3
    0 2 -2
    -2 0 2
    2 -2 0
    # label 0 x

Line 1 is the vertex count, then one matrix row per line. Trailing
``# label <i> <name>`` lines name vertices; any other ``#`` line is a comment.
The canonical spelling (single spaces, newline-terminated, either no labels
or one label line per vertex in order) round-trips byte for byte.
"""

from __future__ import annotations

import json
import re
from typing import List, Optional

from .quiver import Quiver, validate

_INT = re.compile(r"[+-]?\d+\Z")


class ParseError(ValueError):
    """Malformed quiver text; ``line`` and ``col`` are 1-based."""

    def __init__(self, message: str, line: int, col: int = 1):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col
        self.reason = message


def _tokens(text: str):
    """Yield ``(token, column)`` for whitespace-separated tokens of one line."""
    for m in re.finditer(r"\S+", text):
        yield m.group(), m.start() + 1


def parse_quiver(text: str) -> Quiver:
    """Parse quiver text.

    Raises
    ------
    ParseError
        On a malformed integer, a ragged row, a bad label line or a broken
        quiver invariant (loop or skew-symmetry), with the offending position.
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or not lines[0].strip():
        raise ParseError("missing vertex count", 1)
    head = list(_tokens(lines[0]))
    if len(head) != 1 or not _INT.match(head[0][0]):
        raise ParseError(f"expected a vertex count, got {lines[0]!r}", 1)
    n = int(head[0][0])
    if n < 1:
        raise ParseError(f"vertex count must be positive, got {n}", 1, head[0][1])
    if len(lines) < n + 1:
        raise ParseError(
            f"expected {n} matrix rows, found {len(lines) - 1}", len(lines) + 1
        )

    rows: List[List[int]] = []
    cols: List[List[int]] = []
    for r in range(n):
        lineno = r + 2
        toks = list(_tokens(lines[r + 1]))
        if len(toks) != n:
            col = toks[n][1] if len(toks) > n else len(lines[r + 1]) + 1
            raise ParseError(
                f"row {r} has {len(toks)} entries, expected {n}", lineno, col
            )
        row = []
        for tok, col in toks:
            if not _INT.match(tok):
                raise ParseError(f"malformed integer {tok!r}", lineno, col)
            row.append(int(tok))
        rows.append(row)
        cols.append([c for _, c in toks])

    labels: List[Optional[str]] = [None] * n
    for offset, line in enumerate(lines[n + 1 :]):
        lineno = n + 2 + offset
        stripped = line.strip()
        if not stripped:
            continue
        if not stripped.startswith("#"):
            raise ParseError(f"unexpected content after matrix: {line!r}", lineno)
        body = stripped[1:].split(None, 2)
        if body[:1] != ["label"]:
            continue
        if len(body) < 3 or not _INT.match(body[1]):
            raise ParseError("label line must read '# label <i> <name>'", lineno)
        i = int(body[1])
        if not 0 <= i < n:
            raise ParseError(f"label for vertex {i} out of range", lineno)
        labels[i] = body[2]

    problem = validate(rows)
    if problem is not None:
        raise ParseError(
            problem.message,
            problem.row + 2,
            cols[problem.row][problem.col] if problem.kind != "shape" else 1,
        )
    if all(lab is None for lab in labels):
        return Quiver(rows)
    return Quiver(rows, [str(i) if lab is None else lab for i, lab in enumerate(labels)])


def read_quiver(path: str) -> Quiver:
    with open(path, encoding="utf-8") as fh:
        return parse_quiver(fh.read())


def emit_quiver(q: Quiver) -> str:
    """Canonical text for ``q``; inverse of :func:`parse_quiver`."""
    out = [str(q.n)]
    out.extend(" ".join(str(v) for v in row) for row in q.b)
    if q.labels is not None:
        out.extend(f"# label {i} {name}" for i, name in enumerate(q.labels))
    return "\n".join(out) + "\n"


def _dot_id(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(q: Quiver, name: str = "quiver") -> str:
    """Graphviz digraph with ``b[i][j]`` parallel edges ``i -> j`` when positive."""
    out = [f"digraph {name} {{"]
    for i in range(q.n):
        if q.labels is not None:
            out.append(f"  {i} [label={_dot_id(q.labels[i])}];")
        else:
            out.append(f"  {i};")
    for i, j, m in q.arrows():
        out.extend(f"  {i} -> {j};" for _ in range(m))
    out.append("}")
    return "\n".join(out) + "\n"


def emit_json(obj, **kwargs) -> str:
    """Compact JSON for any object with ``to_dict`` (reports, verdicts, forms)."""
    data = obj.to_dict(**kwargs) if hasattr(obj, "to_dict") else obj
    return json.dumps(data, separators=(",", ":"))
