"""Reader and writer for the PACE 2017 ``.td`` decomposition format::

    s td <bag_count> <max_bag_size> <n>
    b <bag_id> <v1> <v2> ...
    <i> <j>

Bag ids and vertex ids are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import TextIO

from decomposition.tree_decomposition import TreeDecomposition
from graphs.exceptions import ParseError
from utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class TdFile:
    decomposition: TreeDecomposition
    declared_max_bag: int
    declared_vertices: int


def format_td(td: TreeDecomposition, vertex_count: int) -> str:
    max_bag = max((len(b) for b in td.bags), default=0)
    lines = [f"s td {td.bag_count} {max_bag} {vertex_count}"]
    for x, bag in enumerate(td.bags):
        lines.append(" ".join(["b", str(x + 1), *(str(v + 1) for v in sorted(bag))]))
    lines.extend(f"{a + 1} {b + 1}" for a, b in sorted(td.tree_edges))
    return "\n".join(lines) + "\n"


def write_td(td: TreeDecomposition, vertex_count: int, path: str | Path) -> None:
    Path(path).write_text(format_td(td, vertex_count))
    logger.info(f"Wrote decomposition with {td.bag_count} bags to {path}.")


def _ints(parts: list[str], line_number: int) -> list[int]:
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"non-integer token in '{' '.join(parts)}'", line_number) from None


def parse_td(stream: TextIO) -> TdFile:
    header: list[int] | None = None
    bags: dict[int, frozenset[int]] = {}
    edges: list[tuple[int, int]] = []

    for line_number, raw in enumerate(stream, 1):
        line = raw.strip()
        if not line or line.split()[0] == "c":
            continue
        parts = line.split()
        if parts[0] == "s":
            if header is not None:
                raise ParseError("duplicate 's td' line", line_number)
            if len(parts) != 5 or parts[1] != "td":
                raise ParseError(f"malformed header '{line}'", line_number)
            header = _ints(parts[2:], line_number)
            continue
        if header is None:
            raise ParseError("content before 's td' header", line_number)
        if parts[0] == "b":
            values = _ints(parts[1:], line_number)
            if not values:
                raise ParseError("bag line without an id", line_number)
            bag_id, vertices = values[0], values[1:]
            if not 1 <= bag_id <= header[0]:
                raise ParseError(f"bag id {bag_id} outside 1..{header[0]}", line_number)
            if bag_id in bags:
                raise ParseError(f"duplicate bag {bag_id}", line_number)
            if any(not 1 <= v <= header[2] for v in vertices):
                raise ParseError(f"bag {bag_id} names a vertex outside 1..{header[2]}", line_number)
            bags[bag_id] = frozenset(v - 1 for v in vertices)
            continue
        values = _ints(parts, line_number)
        if len(values) != 2:
            raise ParseError(f"expected a tree edge 'i j', got '{line}'", line_number)
        edges.append((values[0] - 1, values[1] - 1))

    if header is None:
        raise ParseError("missing 's td' header")
    bag_count, max_bag, n = header
    missing = [x for x in range(1, bag_count + 1) if x not in bags]
    if missing:
        raise ParseError(f"bags {missing} declared but not listed")
    td = TreeDecomposition.build([bags[x] for x in range(1, bag_count + 1)], edges)
    return TdFile(decomposition=td, declared_max_bag=max_bag, declared_vertices=n)


def read_td(path: str | Path) -> TdFile:
    with open(path, "r") as f:
        return parse_td(f)
