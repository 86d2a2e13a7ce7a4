"""DIMACS ASCII clique-format reader and writer.

Comment lines start with 'c', one 'p edge <n> <m>' line precedes the
'e <u> <v>' lines, endpoints are 1-indexed.  Duplicate edge lines are
accepted silently (the bit is simply set twice); everything else that
deviates aborts with the offending line number.
"""
from __future__ import annotations

import io
from typing import IO, Iterable

import numpy as np

from .graph import Graph, _nwords

__all__ = ["DimacsError", "from_dimacs", "emit_dimacs"]


class DimacsError(ValueError):
    """Parse failure, carrying the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _iter_lines(source: str | IO[str] | Iterable[str]) -> Iterable[str]:
    if isinstance(source, str):
        return source.splitlines()
    return source


def from_dimacs(source: str | IO[str] | Iterable[str]) -> Graph:
    """Parse DIMACS text (string, stream or line iterable) into a Graph."""
    n = -1
    us: list[int] = []
    vs: list[int] = []
    line_no = 0
    for line_no, raw in enumerate(_iter_lines(source), start=1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if n >= 0:
                raise DimacsError(line_no, "duplicate problem line")
            if len(tokens) != 4 or tokens[1] != "edge":
                raise DimacsError(line_no, f"malformed problem line {line!r}")
            try:
                n, m_declared = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise DimacsError(line_no, f"malformed problem line {line!r}") from None
            if n < 0 or m_declared < 0:
                raise DimacsError(line_no, f"malformed problem line {line!r}")
        elif tokens[0] == "e":
            if n < 0:
                raise DimacsError(line_no, "edge line before problem line")
            if len(tokens) != 3:
                raise DimacsError(line_no, f"malformed edge line {line!r}")
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise DimacsError(line_no, f"malformed edge line {line!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsError(line_no, f"endpoint out of range [1, {n}]")
            if u == v:
                raise DimacsError(line_no, f"self-loop e {u} {v}")
            us.append(u - 1)
            vs.append(v - 1)
        else:
            raise DimacsError(line_no, f"unrecognized line type {tokens[0]!r}")
    if n < 0:
        raise DimacsError(line_no, "missing problem line")

    adj = np.zeros((n, _nwords(n)), np.uint64)
    if us:
        ua = np.array(us + vs, np.int64)
        va = np.array(vs + us, np.int64)
        np.bitwise_or.at(adj, (ua, va >> 6),
                         np.uint64(1) << (va & 63).astype(np.uint64))
    return Graph(n, adj)


def emit_dimacs(g: Graph, sink: IO[str] | None = None) -> str | None:
    """Write 'p edge n m' plus one 'e u v' line per edge, u < v, 1-indexed."""
    out = sink if sink is not None else io.StringIO()
    out.write(f"p edge {g.n} {g.m}\n")
    for u, v in g.edges():
        out.write(f"e {u + 1} {v + 1}\n")
    if sink is None:
        return out.getvalue()
    return None
