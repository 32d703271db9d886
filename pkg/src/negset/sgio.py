"""Reading and writing the plain-text ``.sg`` signed-graph format.

Format, line by line:

* optional comment lines starting with ``c`` (ignored), blank lines ignored;
* one header ``p sg <n> <m>``;
* exactly ``m`` edge lines ``e <u> <v> <+|->`` with ``0 <= u < v < n``.

Parsing is strict: loops, duplicate edges, bad signs, endpoint order
violations, and header/edge-count mismatches all raise
:class:`~negset.errors.SgParseError` carrying the offending line number.
:func:`serialize` emits edges sorted lexicographically, so
``serialize(parse(text))`` is byte-identical for canonically ordered input.
"""

from __future__ import annotations

import io
from typing import TextIO

from .errors import SgParseError
from .graph import NEG, POS, SignedGraph

_SIGN_CHAR = {POS: "+", NEG: "-"}
_CHAR_SIGN = {"+": POS, "-": NEG}


def parse(text: str) -> SignedGraph:
    """Parse ``.sg`` text into a :class:`SignedGraph`."""
    n = -1
    m = -1
    edges: list[tuple[int, int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n != -1:
                raise SgParseError("duplicate header", line=lineno)
            if len(fields) != 4 or fields[1] != "sg":
                raise SgParseError("header must be 'p sg <n> <m>'", line=lineno)
            try:
                n, m = int(fields[2]), int(fields[3])
            except ValueError:
                raise SgParseError("header counts must be integers", line=lineno) from None
            if n < 0 or m < 0:
                raise SgParseError("header counts must be nonnegative", line=lineno)
        elif fields[0] == "e":
            if n == -1:
                raise SgParseError("edge line before header", line=lineno)
            if len(fields) != 4:
                raise SgParseError("edge line must be 'e <u> <v> <+|->'", line=lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise SgParseError("edge endpoints must be integers", line=lineno) from None
            if fields[3] not in _CHAR_SIGN:
                raise SgParseError(f"invalid sign {fields[3]!r}", line=lineno)
            if u == v:
                raise SgParseError(f"loop at vertex {u}", line=lineno)
            if not (0 <= u < v < n):
                raise SgParseError(
                    f"edge ({u}, {v}) violates 0 <= u < v < {n}", line=lineno
                )
            if (u, v) in seen:
                raise SgParseError(f"duplicate edge ({u}, {v})", line=lineno)
            seen.add((u, v))
            edges.append((u, v, _CHAR_SIGN[fields[3]]))
        else:
            raise SgParseError(f"unrecognized line type {fields[0]!r}", line=lineno)
    if n == -1:
        raise SgParseError("missing 'p sg' header")
    if len(edges) != m:
        raise SgParseError(f"header promised {m} edges, found {len(edges)}")
    return SignedGraph(n, edges)


def serialize(g: SignedGraph) -> str:
    """Canonical ``.sg`` text: header then edges sorted lexicographically."""
    out = io.StringIO()
    out.write(f"p sg {g.n} {g.edge_count}\n")
    for u, v, s in g.edges():
        out.write(f"e {u} {v} {_SIGN_CHAR[s]}\n")
    return out.getvalue()


def load(fp: TextIO) -> SignedGraph:
    return parse(fp.read())


def load_path(path) -> SignedGraph:
    with open(path, "r", encoding="utf-8") as fp:
        return load(fp)


def dump(g: SignedGraph, fp: TextIO) -> None:
    fp.write(serialize(g))
