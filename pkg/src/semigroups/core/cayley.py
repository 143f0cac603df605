"""
The ".cay" Cayley file format.

    line 1         n
    next n lines   n whitespace-separated base-10 indices (row i, column j = i·j)
    "#" lines      comments, anywhere after the table
    "# labels: a b c" assigns display names positionally
"""
from __future__ import annotations

import logging
import os

from ..config import Caps, resolve
from ..errors import CayleyFormatError
from .semigroup import FiniteSemigroup

logger = logging.getLogger(__name__)

LABELS_PREFIX = "# labels:"


def parse_cayley(text: str, name=None, caps: Caps | None = None) -> FiniteSemigroup:
    labels = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if line.lower().startswith(LABELS_PREFIX):
                labels = line[len(LABELS_PREFIX):].split()
            continue
        try:
            rows.append([int(token) for token in line.split()])
        except ValueError:
            raise CayleyFormatError(f"line {lineno}: expected integers, got {raw!r}", witness={"line": lineno})
    if not rows:
        raise CayleyFormatError("empty Cayley file", witness={"line": 0})
    header, table = rows[0], rows[1:]
    if len(header) != 1 or header[0] < 1:
        raise CayleyFormatError("first line must hold the order n >= 1", witness={"line": 1})
    n = header[0]
    resolve(caps).check("max_elements", n)
    if len(table) != n or any(len(row) != n for row in table):
        raise CayleyFormatError(f"expected {n} rows of {n} entries", witness={"rows": len(table)})
    return FiniteSemigroup(table, labels=labels, name=name)


def read_cayley(path, caps: Caps | None = None) -> FiniteSemigroup:
    with open(path, "r", encoding="utf-8") as f:
        text = f.read()
    semigroup = parse_cayley(text, name=os.path.basename(str(path)), caps=caps)
    logger.info(f"read {path} (order {semigroup.order})")
    return semigroup


def format_cayley(S: FiniteSemigroup, comments=()) -> str:
    lines = [str(S.order)]
    lines += [" ".join(str(v) for v in row) for row in S.rows]
    if S.labels is not None:
        lines.append(f"{LABELS_PREFIX} " + " ".join(S.labels))
    lines += [f"# {comment}" for comment in comments]
    return "\n".join(lines) + "\n"


def write_cayley(S: FiniteSemigroup, path, comments=()) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(format_cayley(S, comments))
    logger.info(f"wrote {path}")
