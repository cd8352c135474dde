"""Text formats: whitespace edge lists and DIMACS ``p edge`` files."""

from __future__ import annotations

import logging

from .graph import Graph, build_graph

__all__ = ["ParseError", "parse_edgelist", "parse_arcs", "parse_dimacs", "format_edgelist",
           "format_cycle"]

log = logging.getLogger(__name__)


class ParseError(ValueError):
    """Malformed input; ``lineno`` is 1-based (0 when not tied to a line)."""

    def __init__(self, msg: str, lineno: int = 0):
        super().__init__(f"line {lineno}: {msg}" if lineno else msg)
        self.lineno = lineno


def _read_pairs(text):
    ids: dict[str, int] = {}
    pairs, linenos = [], []
    for lineno, line in enumerate(text.splitlines(), 1):
        tokens = line.split("#", 1)[0].split()
        if not tokens:
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected 2 tokens, got {len(tokens)}: {line.strip()!r}", lineno)
        a, b = (ids.setdefault(tok, len(ids)) for tok in tokens)
        pairs.append((a, b))
        linenos.append(lineno)
    return list(ids), pairs, linenos


def parse_arcs(text: str) -> tuple[list[str], list[tuple[int, int]]]:
    """Read ``a b`` token pairs; names get ids in order of first appearance.

    ``#`` starts a comment, blank lines are skipped. Returns the name table
    and the pairs in file order (orientation preserved, duplicates kept).
    """
    names, pairs, _ = _read_pairs(text)
    return names, pairs


def parse_edgelist(text: str) -> Graph:
    names, pairs, linenos = _read_pairs(text)
    for (a, b), lineno in zip(pairs, linenos):
        if a == b:
            raise ParseError(f"self-loop at {names[a]!r}", lineno)
    return build_graph(len(names), pairs, names, max_vertices=None)


def parse_dimacs(text: str) -> Graph:
    """Parse ``p edge n m`` followed by 1-based ``e u v`` lines (``c`` = comment).

    A declared edge count that differs from the deduplicated count is logged
    as a warning, not rejected.
    """
    n = declared = None
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        tokens = line.split()
        if not tokens or tokens[0] == "c":
            continue
        kind = tokens[0]
        if kind == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise ParseError(f"expected 'p edge N M', got {line.strip()!r}", lineno)
            try:
                n, declared = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise ParseError(f"non-integer size in {line.strip()!r}", lineno) from None
        elif kind == "e":
            if n is None:
                raise ParseError("edge line before 'p edge' header", lineno)
            if len(tokens) != 3:
                raise ParseError(f"expected 'e U V', got {line.strip()!r}", lineno)
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise ParseError(f"non-integer vertex in {line.strip()!r}", lineno) from None
            for w in (u, v):
                if not 1 <= w <= n:
                    raise ParseError(f"vertex {w} out of range 1..{n}", lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unknown line type {kind!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge N M' header")
    g = build_graph(n, edges, [str(i) for i in range(1, n + 1)], max_vertices=None)
    if g.m != declared:
        log.warning("DIMACS header declares %d edges, found %d distinct", declared, g.m)
    return g


def format_edgelist(g: Graph) -> str:
    """One ``name name`` line per edge; isolated vertices are not representable."""
    return "".join(f"{g.names[u]} {g.names[v]}\n" for u, v in g.edges())


def format_cycle(g: Graph, cycle) -> str:
    return " ".join(g.names[v] for v in cycle)
