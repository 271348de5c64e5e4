"""Refutation transcripts: a text record of one refuter run.

All vertex ids are 1-based::

    refutation avoiding|size
    product <g_size> <h_size>
    k <k>
    s0 <|S_0|>
    t0 <|T_0|>
    j <ids of J>
    s <G-vertices>          avoiding only
    t <H-vertices>          avoiding only
    element <flat ids>      avoiding only
    axis rows|columns       size only
    copies <copy ids>       size only
    bound <implied bound>   size only
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import TextIO

from graphs.connectivity import is_connected_subset
from graphs.core import Graph
from graphs.exceptions import ParseError
from product_bramble.refuter import AvoidingElement, RefutationOutcome
from utils.logging import get_logger

logger = get_logger(__name__)

_SCALARS = {"k", "s0", "t0", "bound"}
_LISTS = {"j", "s", "t", "element", "copies"}
_KIND_RECORDS = {
    "avoiding": {"s", "t", "element"},
    "size": {"axis", "copies", "bound"},
}


@dataclass
class Transcript:
    kind: str
    g_size: int
    h_size: int
    k: int
    s0_size: int
    t0_size: int
    j: tuple[int, ...]
    s: tuple[int, ...] = ()
    t: tuple[int, ...] = ()
    element: tuple[int, ...] = ()
    axis: str | None = None
    copies: tuple[int, ...] = ()
    bound: int | None = None

    @classmethod
    def from_outcome(
        cls, g_size: int, h_size: int, k: int, j, outcome: RefutationOutcome
    ) -> "Transcript":
        common = dict(
            g_size=g_size,
            h_size=h_size,
            k=k,
            s0_size=outcome.s0_size,
            t0_size=outcome.t0_size,
            j=tuple(sorted(j)),
        )
        if isinstance(outcome, AvoidingElement):
            return cls(
                kind="avoiding",
                s=tuple(sorted(outcome.spec.s)),
                t=tuple(sorted(outcome.spec.t)),
                element=tuple(sorted(outcome.vertices)),
                **common,
            )
        return cls(
            kind="size",
            axis=outcome.axis,
            copies=outcome.copies,
            bound=outcome.implied_bound,
            **common,
        )


def _ids(values) -> str:
    return " ".join(str(v + 1) for v in values)


def format_transcript(tr: Transcript) -> str:
    lines = [
        f"refutation {tr.kind}",
        f"product {tr.g_size} {tr.h_size}",
        f"k {tr.k}",
        f"s0 {tr.s0_size}",
        f"t0 {tr.t0_size}",
        f"j {_ids(tr.j)}".rstrip(),
    ]
    if tr.kind == "avoiding":
        lines += [f"s {_ids(tr.s)}", f"t {_ids(tr.t)}", f"element {_ids(tr.element)}"]
    else:
        lines += [f"axis {tr.axis}", f"copies {_ids(tr.copies)}".rstrip(), f"bound {tr.bound}"]
    return "\n".join(lines) + "\n"


def write_transcript(tr: Transcript, path: str | Path) -> None:
    Path(path).write_text(format_transcript(tr))
    logger.info(f"Wrote {tr.kind} refutation transcript to {path}.")


def parse_transcript(stream: TextIO) -> Transcript:
    fields: dict = {}
    for line_number, raw in enumerate(stream, 1):
        line = raw.strip()
        if not line or line.split()[0] == "c":
            continue
        key, *rest = line.split()
        try:
            if key == "refutation":
                if rest not in (["avoiding"], ["size"]):
                    raise ParseError(f"unknown refutation kind '{line}'", line_number)
                fields["kind"] = rest[0]
            elif key == "product":
                fields["g_size"], fields["h_size"] = (int(x) for x in rest)
            elif key == "axis":
                if rest not in (["rows"], ["columns"]):
                    raise ParseError(f"unknown axis '{line}'", line_number)
                fields["axis"] = rest[0]
            elif key in _SCALARS:
                (value,) = rest
                fields[{"s0": "s0_size", "t0": "t0_size"}.get(key, key)] = int(value)
            elif key in _LISTS:
                fields[key] = tuple(int(x) - 1 for x in rest)
            else:
                raise ParseError(f"unknown record '{key}'", line_number)
        except ValueError:
            raise ParseError(f"malformed record '{line}'", line_number) from None
    if "kind" not in fields:
        raise ParseError("missing 'refutation' line")
    missing = {"g_size", "k", "s0_size", "t0_size", "j"} - fields.keys()
    missing |= _KIND_RECORDS[fields["kind"]] - fields.keys()
    if missing:
        raise ParseError(f"missing records: {sorted(missing)}")
    return Transcript(**fields)


def read_transcript(path: str | Path) -> Transcript:
    with open(path, "r") as f:
        return parse_transcript(f)


@dataclass
class TranscriptCheck:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_transcript(tr: Transcript, host: Graph) -> TranscriptCheck:
    """Re-check a transcript against the product graph alone."""
    check = TranscriptCheck()
    v_all = tr.g_size * tr.h_size
    if host.vertex_count != v_all:
        check.violations.append(f"product of {v_all} vertices, graph has {host.vertex_count}")
        return check
    hs, k, size = tr.h_size, tr.k, 2 * tr.k - 1
    js = set(tr.j)
    if any(not 0 <= x < v_all for x in js):
        check.violations.append("J names a vertex outside the product")
    if any(not 0 <= v < tr.g_size for v in tr.s) or any(not 0 <= w < hs for w in tr.t):
        check.violations.append("S or T names a vertex outside its factor")
    limit = tr.g_size if tr.axis == "rows" else hs
    if any(not 0 <= i < limit for i in tr.copies):
        check.violations.append("copy id outside its axis")
    if check.violations:
        return check

    def row(v: int) -> set[int]:
        return {v * hs + w for w in range(hs)}

    def col(w: int) -> set[int]:
        return {v * hs + w for v in range(tr.g_size)}

    if tr.kind == "avoiding":
        element = set(tr.element)
        if len(set(tr.s)) != size or len(set(tr.t)) != size:
            check.violations.append(f"|S| and |T| must both be {size}")
            return check
        union = set().union(*(row(v) for v in tr.s), *(col(w) for w in tr.t))
        if not element <= union:
            check.violations.append("element leaves the chosen copies")
        deleted = union - element
        for v in tr.s:
            if len(deleted & row(v)) > k - 1:
                check.violations.append(f"row {v + 1} loses more than {k - 1} vertices")
        for w in tr.t:
            if len(deleted & col(w)) > k - 1:
                check.violations.append(f"column {w + 1} loses more than {k - 1} vertices")
        if element & js:
            check.violations.append("element meets J")
        if not is_connected_subset(host, element):
            check.violations.append("element is not connected")
        return check

    copy = row if tr.axis == "rows" else col
    n = min(tr.g_size, tr.h_size)
    for i in tr.copies:
        if len(copy(i) & js) < k:
            check.violations.append(f"{tr.axis} copy {i + 1} holds fewer than {k} vertices of J")
    if len(set(tr.copies)) < n - (2 * k - 2):
        check.violations.append("too few heavy copies")
    if tr.bound is None or tr.bound > len(js) or tr.bound != k * (n - 2 * k + 2):
        check.violations.append("claimed bound is not implied by the copies")
    return check
