"""Bramble certificate files and their verification.

Format (vertex ids and element indices 1-based)::

    bramble <element_count> <host_n>
    <v1> <v2> ...            one line per element, increasing ids
    claim <order>            optional: claimed lower bound on the order
    disjoint <i1> <i2> ...   optional: pairwise disjoint elements proving it
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import TextIO

from bramble.bramble import Bramble, validate_bramble
from bramble.hitting_set import bramble_order, disjoint_packing
from graphs.core import Graph
from graphs.exceptions import ParseError
from utils.budget import Budget
from utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class BrambleCertificate:
    host_n: int
    elements: tuple[frozenset[int], ...]
    claim: int | None = None
    disjoint: tuple[int, ...] | None = None


@dataclass
class CertificateCheck:
    violations: list[str] = field(default_factory=list)
    resource_exhausted: bool = False
    proven_order: int | None = None

    @property
    def ok(self) -> bool:
        return not self.violations and not self.resource_exhausted


def certificate_for(
    b: Bramble, claim: int | None = None, with_packing: bool = False
) -> BrambleCertificate:
    disjoint = tuple(disjoint_packing(b)) if with_packing else None
    return BrambleCertificate(b.host.vertex_count, b.elements, claim, disjoint)


def format_certificate(cert: BrambleCertificate) -> str:
    lines = [f"bramble {len(cert.elements)} {cert.host_n}"]
    lines.extend(" ".join(str(v + 1) for v in sorted(e)) for e in cert.elements)
    if cert.claim is not None:
        lines.append(f"claim {cert.claim}")
    if cert.disjoint is not None:
        lines.append(" ".join(["disjoint", *(str(i + 1) for i in cert.disjoint)]))
    return "\n".join(lines) + "\n"


def write_certificate(cert: BrambleCertificate, path: str | Path) -> None:
    Path(path).write_text(format_certificate(cert))
    logger.info(f"Wrote bramble certificate with {len(cert.elements)} elements to {path}.")


def _ints(parts: list[str], line_number: int) -> list[int]:
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"non-integer token in '{' '.join(parts)}'", line_number) from None


def parse_certificate(stream: TextIO) -> BrambleCertificate:
    header: list[int] | None = None
    elements: list[frozenset[int]] = []
    claim: int | None = None
    disjoint: tuple[int, ...] | None = None

    for line_number, raw in enumerate(stream, 1):
        line = raw.strip()
        if not line or line.split()[0] == "c":
            continue
        parts = line.split()
        if header is None:
            if parts[0] != "bramble" or len(parts) != 3:
                raise ParseError(f"expected 'bramble <count> <n>', got '{line}'", line_number)
            header = _ints(parts[1:], line_number)
            continue
        if parts[0] == "claim":
            values = _ints(parts[1:], line_number)
            if len(values) != 1:
                raise ParseError("claim takes a single order", line_number)
            claim = values[0]
            continue
        if parts[0] == "disjoint":
            disjoint = tuple(i - 1 for i in _ints(parts[1:], line_number))
            continue
        values = _ints(parts, line_number)
        if any(not 1 <= v <= header[1] for v in values):
            raise ParseError(f"element names a vertex outside 1..{header[1]}", line_number)
        elements.append(frozenset(v - 1 for v in values))

    if header is None:
        raise ParseError("missing 'bramble' header")
    if len(elements) != header[0]:
        raise ParseError(f"header declares {header[0]} elements, found {len(elements)}")
    return BrambleCertificate(header[1], tuple(elements), claim, disjoint)


def read_certificate(path: str | Path) -> BrambleCertificate:
    with open(path, "r") as f:
        return parse_certificate(f)


def verify_certificate(
    cert: BrambleCertificate, host: Graph, budget: Budget | None = None
) -> CertificateCheck:
    """Re-check validity and the claimed order.

    A claim is accepted from a listed disjoint subfamily of at least that
    many elements, otherwise by re-running the exact hitting set solver.
    """
    check = CertificateCheck()
    if cert.host_n != host.vertex_count:
        check.violations.append(
            f"certificate is for {cert.host_n} vertices, graph has {host.vertex_count}"
        )
        return check
    for i, e in enumerate(cert.elements):
        if not e:
            check.violations.append(f"element {i + 1} is empty")
    if check.violations:
        return check

    # keep duplicates so reported indices match the file
    b = Bramble(host, cert.elements)
    check.violations.extend(validate_bramble(b).violations())
    if check.violations or cert.claim is None:
        return check

    if cert.disjoint is not None:
        bad = [i + 1 for i in cert.disjoint if not 0 <= i < len(cert.elements)]
        if bad:
            check.violations.append(f"disjoint list names missing elements {bad}")
            return check
        for i, j in combinations(cert.disjoint, 2):
            if cert.elements[i] & cert.elements[j]:
                check.violations.append(f"elements {i + 1} and {j + 1} are not disjoint")
        if check.violations:
            return check
        check.proven_order = len(set(cert.disjoint))
        if check.proven_order < cert.claim:
            check.violations.append(
                f"{check.proven_order} disjoint elements do not prove order {cert.claim}"
            )
        return check

    hs = bramble_order(b, budget)
    check.proven_order = hs.size if hs.certified_minimum else hs.lower_bound
    if check.proven_order >= cert.claim:
        return check
    if hs.certified_minimum:
        check.violations.append(f"order is {hs.size}, below the claimed {cert.claim}")
    else:
        check.resource_exhausted = True
    return check
