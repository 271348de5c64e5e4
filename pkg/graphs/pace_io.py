"""Reader and writer for the PACE 2017 ``.gr`` graph format.

Files use 1-based vertex ids::

    c optional comments
    p tw <n> <m>
    <u> <v>
    ...

Products written by :func:`write_gr` carry a ``c factors <g> <h>`` comment
holding the family specs of both factors, so they can be rebuilt on read.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import TextIO

from graphs.core import Graph
from graphs.exceptions import InvalidInputError, ParseError
from utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class GrFile:
    graph: Graph
    factors: tuple[str, str] | None = None


def format_gr(g: Graph, factors: tuple[str, str] | None = None) -> str:
    lines = []
    if factors is not None:
        lines.append(f"c factors {factors[0]} {factors[1]}")
    lines.append(f"p tw {g.vertex_count} {g.edge_count}")
    lines.extend(f"{u + 1} {v + 1}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def write_gr(
    g: Graph, path: str | Path, factors: tuple[str, str] | None = None
) -> None:
    Path(path).write_text(format_gr(g, factors))
    logger.info(f"Wrote graph with {g.vertex_count} vertices to {path}.")


def parse_gr(stream: TextIO) -> GrFile:
    header: tuple[int, int] | None = None
    factors: tuple[str, str] | None = None
    edges: list[tuple[int, int]] = []

    for line_number, raw in enumerate(stream, 1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "c":
            if len(parts) == 4 and parts[1] == "factors":
                factors = (parts[2], parts[3])
            continue
        if parts[0] == "p":
            if header is not None:
                raise ParseError("duplicate 'p' line", line_number)
            if len(parts) != 4 or parts[1] != "tw":
                raise ParseError(f"malformed header '{line}'", line_number)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ParseError(f"non-integer header '{line}'", line_number) from None
            continue
        if header is None:
            raise ParseError("edge line before 'p tw' header", line_number)
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got '{line}'", line_number)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer edge '{line}'", line_number) from None
        if not (1 <= u <= header[0] and 1 <= v <= header[0]):
            raise ParseError(f"edge '{line}' outside 1..{header[0]}", line_number)
        edges.append((u - 1, v - 1))

    if header is None:
        raise ParseError("missing 'p tw' header")
    n, m = header
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}")
    try:
        graph = Graph.from_edges(n, edges)
    except InvalidInputError as exc:
        raise ParseError(str(exc)) from None
    return GrFile(graph=graph, factors=factors)


def read_gr(path: str | Path) -> GrFile:
    with open(path, "r") as f:
        return parse_gr(f)
