"""Plain-text distance-matrix format.

::

    # comments run to end of line
    3
    0    1/2  1
    1/2  0    0.5
    1    0.5  0

Line 1 holds ``n``; the next ``n`` non-blank lines hold ``n`` entries each.
Entries are integers, decimals (converted exactly) or ``p/q``.
"""

from __future__ import annotations

import hashlib
from pathlib import Path

from . import errors
from .metric import FiniteMetricSpace, format_rational, to_rational


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_matrix(text: str) -> FiniteMetricSpace:
    lines = list(_content_lines(text))
    if not lines:
        raise errors.ParseError("no matrix size found", 1)
    lineno, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise errors.ParseError(f"expected point count, got {head!r}", lineno) from None
    if n < 1:
        raise errors.ParseError(f"point count must be at least 1, got {n}", lineno)
    rows = lines[1:]
    if len(rows) != n:
        last = rows[-1][0] if rows else lineno
        raise errors.ParseError(f"expected {n} matrix rows, found {len(rows)}", last)
    matrix = []
    for lineno, line in rows:
        fields = line.split()
        if len(fields) != n:
            raise errors.ParseError(f"expected {n} entries, found {len(fields)}", lineno)
        try:
            matrix.append([to_rational(f) for f in fields])
        except errors.ParseError as exc:
            raise errors.ParseError(str(exc), lineno) from None
    return FiniteMetricSpace(matrix)


def format_matrix(X: FiniteMetricSpace) -> str:
    cells = [[format_rational(v) for v in row] for row in X.d]
    width = max(len(c) for row in cells for c in row)
    body = "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)
    return f"{X.n}\n{body}\n"


def read_space(path) -> FiniteMetricSpace:
    return parse_matrix(Path(path).read_text())


def write_space(path, X: FiniteMetricSpace) -> None:
    Path(path).write_text(format_matrix(X))


def file_digest(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()
