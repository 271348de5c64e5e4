"""The ``gen``, ``bounds``, ``verify`` and ``table`` commands.

Each ``cmd_*`` takes the parsed arguments and the solver settings and
returns a process exit code. Reports go to stdout, logs to stderr.
"""

from __future__ import annotations

import argparse
import io
import sys
from pathlib import Path
from typing import Iterable

import pandas as pd
from rich.console import Console
from rich.table import Table

from bramble.certificate import (
    certificate_for,
    parse_certificate,
    verify_certificate,
    write_certificate,
)
from cli.family_spec import (
    Instance,
    load_instance,
    parse_instance,
    parse_sweep,
    split_family,
)
from cli.reports import BoundsReport, ReportedBound
from decomposition.chordal import is_chordal
from decomposition.elimination import best_heuristic, decomposition_from_elimination_order
from decomposition.exact import exact_treewidth
from decomposition.lift import chordal_lift, chordal_lift_second
from decomposition.pace_io import parse_td
from decomposition.tree_decomposition import validate, width
from graphs.connectivity import is_k_connected, vertex_connectivity
from graphs.core import Graph, ProductGraph
from graphs.exceptions import (
    CartwidthError,
    InvariantViolation,
    ParseError,
    PreconditionError,
    ResourceLimitError,
)
from graphs.pace_io import format_gr, write_gr
from ordering.bandwidth import exact_bandwidth
from ordering.orderings import (
    VertexOrdering,
    improved_ordering,
    ordering_width,
    product_ordering,
    row_major_ordering,
    transposed_product_ordering,
)
from product_bramble.certify import ProductCertificate, certify_lower_bound
from product_bramble.theorem import theorem_lower_bound
from product_bramble.transcript import (
    Transcript,
    parse_transcript,
    verify_transcript,
    write_transcript,
)
from user_data.user_config import SolverSettings
from utils.budget import Budget
from utils.logging import get_logger
from utils.provenance import Bound, Provenance

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

TABLE_COLUMNS = [
    ("theorem_lower", "formula"),
    ("certified_lower", "certified"),
    ("heuristic_upper", "heuristic"),
    ("lift_upper", "lift"),
    ("ordering_upper", "ordering"),
    ("exact", "exact"),
]


def _kappa(g: Graph) -> int:
    return vertex_connectivity(g) if g.vertex_count >= 2 else 0


def _lift_upper(p: ProductGraph) -> Bound | None:
    """Width of the lifted decomposition over whichever factor is chordal."""
    widths = []
    for side, factor in (("G", p.g), ("H", p.h)):
        chordal = is_chordal(factor)
        if not chordal:
            continue
        order = list(chordal.elimination_order or ())
        td = decomposition_from_elimination_order(factor, order)
        if side == "G":
            lifted = chordal_lift(td, p.g, p.h)
        else:
            lifted = chordal_lift_second(p.g, td, p.h)
        if not validate(lifted, p.base).ok:
            raise InvariantViolation(f"lift over chordal factor {side} does not validate")
        widths.append(width(lifted))
    return Bound(min(widths), Provenance.CERTIFIED) if widths else None


def _orderings(
    instance: Instance, p: ProductGraph, settings: SolverSettings
) -> list[VertexOrdering]:
    out: list[VertexOrdering] = []
    ceiling = settings.bandwidth_ceiling
    if max(p.g_size, p.h_size) <= ceiling:
        bg = exact_bandwidth(p.g, Budget(time_ms=settings.budget_ms), ceiling)
        bh = exact_bandwidth(p.h, Budget(time_ms=settings.budget_ms), ceiling)
        out += [
            product_ordering(p, bg.ordering, bh.ordering),
            transposed_product_ordering(p, bg.ordering, bh.ordering),
        ]
    if instance.factor_specs and instance.factor_specs[0] == instance.factor_specs[1]:
        family, params = split_family(instance.factor_specs[0])
        if family == "pathpower":
            out += [
                row_major_ordering(params["n"], params["k"]),
                improved_ordering(params["n"], params["k"]),
            ]
    return out


def _ordering_upper(
    instance: Instance, p: ProductGraph, settings: SolverSettings
) -> Bound | None:
    orderings = _orderings(instance, p, settings)
    if not orderings:
        return None
    return Bound(min(ordering_width(p.base, o) for o in orderings), Provenance.CERTIFIED)


def _exact(g: Graph, settings: SolverSettings) -> Bound | None:
    if g.vertex_count > settings.exact_ceiling:
        return None
    budget = Budget(time_ms=settings.budget_ms, max_nodes=settings.max_states)
    try:
        result = exact_treewidth(g, budget, settings.exact_ceiling)
    except ResourceLimitError as exc:
        logger.warning(f"Exact treewidth skipped: {exc}")
        return None
    return Bound(result.treewidth, Provenance.EXACT)


def _emit(cert: ProductCertificate, p: ProductGraph, k: int, path: str | Path) -> None:
    if cert.family is not None:
        write_certificate(certificate_for(cert.family, claim=cert.bound.value + 1), path)
    elif cert.probe is not None:
        js, outcome = cert.probe
        write_transcript(Transcript.from_outcome(p.g_size, p.h_size, k, js, outcome), path)
    else:
        logger.warning("No certificate to emit for a vacuous bound.")


def compute_bounds(
    instance: Instance,
    k: int,
    settings: SolverSettings,
    seed: int = 0,
    emit_certificate: str | Path | None = None,
    name: str | None = None,
) -> BoundsReport:
    """Every applicable bound for a product instance."""
    p = instance.product
    if p is None:
        raise PreconditionError(f"{instance.name} is not a product with known factors")
    if k < 1:
        raise PreconditionError(f"k must be positive, got {k}")
    kappa_g, kappa_h = _kappa(p.g), _kappa(p.h)
    for side, factor, kappa in (("G", p.g, kappa_g), ("H", p.h, kappa_h)):
        if not is_k_connected(factor, k):
            raise PreconditionError(f"factor {side} is not {k}-connected (kappa={kappa})")

    report = BoundsReport(
        instance=name or instance.name, n=p.n, k=k, kappa_g=kappa_g, kappa_h=kappa_h
    )
    theorem = theorem_lower_bound(k, p.n)
    report.theorem_lower = ReportedBound.of(theorem)
    if theorem.provenance is Provenance.VACUOUS:
        report.notes.append(f"n={p.n} <= 2k-2: product bound is vacuous")
    else:
        budget = Budget(time_ms=settings.budget_ms, max_nodes=settings.hitting_set_nodes)
        cert = certify_lower_bound(
            p, k, seed=seed, family_limit=settings.family_limit, budget=budget
        )
        report.certified_lower = ReportedBound.of(cert.bound)
        if emit_certificate is not None:
            _emit(cert, p, k, emit_certificate)

    heuristic, _, _ = best_heuristic(p.base)
    report.heuristic_upper = ReportedBound.of(Bound(heuristic, Provenance.HEURISTIC))
    report.lift_upper = ReportedBound.of(_lift_upper(p))
    report.ordering_upper = ReportedBound.of(_ordering_upper(instance, p, settings))
    report.exact = ReportedBound.of(_exact(p.base, settings))
    if report.exact is None:
        report.notes.append("exact treewidth not computed within the ceiling or budget")
    logger.info(f"Bounds for {report.instance}: lower={report.lower}, upper={report.upper}.")
    return report


def _cell(bound: ReportedBound | None) -> str:
    return "-" if bound is None else str(bound)


def render_reports(
    reports: Iterable[BoundsReport], fmt: str, console: Console | None = None
) -> str | None:
    """Print reports as a rich table (``text``) or return JSON records."""
    reports = list(reports)
    if fmt == "json":
        frame = pd.DataFrame.from_records([r.as_record() for r in reports])
        return frame.to_json(orient="records", indent=2)

    table = Table(title="treewidth bounds")
    table.add_column("instance", no_wrap=True)
    for column in ("n", "k", "κ(G)", "κ(H)"):
        table.add_column(column)
    for _, header in TABLE_COLUMNS:
        table.add_column(header, justify="right")
    table.add_column("status")
    for r in reports:
        table.add_row(
            r.instance,
            *("-" if x is None else str(x) for x in (r.n, r.k, r.kappa_g, r.kappa_h)),
            *(_cell(getattr(r, key)) for key, _ in TABLE_COLUMNS),
            r.status if r.error is None else f"{r.status}: {r.error}",
        )
    (console or Console(width=240)).print(table)
    return None


def cmd_gen(args: argparse.Namespace, settings: SolverSettings) -> int:
    instance = parse_instance(args.spec)
    if args.output in (None, "-"):
        sys.stdout.write(format_gr(instance.graph, instance.factor_specs))
    else:
        write_gr(instance.graph, args.output, instance.factor_specs)
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace, settings: SolverSettings) -> int:
    instance = load_instance(args.instance)
    seed = settings.default_seed if args.seed is None else args.seed
    report = compute_bounds(instance, args.k, settings, seed, args.emit_certificate)
    report.check()
    out = render_reports([report], args.format)
    if out is not None:
        print(out)
    for note in report.notes:
        logger.info(note)
    return EXIT_OK


def _certificate_kind(text: str) -> str:
    for line in text.splitlines():
        parts = line.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "bramble":
            return "bramble"
        if parts[:2] == ["s", "td"]:
            return "td"
        if parts[0] == "refutation":
            return "refutation"
        break
    raise ParseError("not a bramble certificate, decomposition or refutation transcript")


def verify_file(
    text: str, instance: Instance, settings: SolverSettings
) -> tuple[str, list[str], bool]:
    """Check one certificate; returns (summary, violations, resource_exhausted)."""
    host = instance.graph
    kind = _certificate_kind(text)
    stream = io.StringIO(text)
    if kind == "bramble":
        cert = parse_certificate(stream)
        budget = Budget(time_ms=settings.budget_ms, max_nodes=settings.hitting_set_nodes)
        check = verify_certificate(cert, host, budget)
        summary = (
            f"bramble of {len(cert.elements)} elements, claim {cert.claim}, "
            f"proven order {check.proven_order}"
        )
        return summary, check.violations, check.resource_exhausted

    if kind == "td":
        td_file = parse_td(stream)
        violations = []
        if td_file.declared_vertices != host.vertex_count:
            violations.append(
                f"decomposition is for {td_file.declared_vertices} vertices, "
                f"graph has {host.vertex_count}"
            )
        else:
            violations.extend(validate(td_file.decomposition, host).violations())
        actual = max((len(b) for b in td_file.decomposition.bags), default=0)
        if actual != td_file.declared_max_bag:
            violations.append(
                f"header declares bags of {td_file.declared_max_bag}, largest is {actual}"
            )
        return f"decomposition of width {actual - 1}", violations, False

    tr = parse_transcript(stream)
    check = verify_transcript(tr, host)
    violations = list(check.violations)
    p = instance.product
    if p is not None and (p.g_size, p.h_size) != (tr.g_size, tr.h_size):
        violations.append(
            f"transcript is for a {tr.g_size}x{tr.h_size} product, "
            f"graph is {p.g_size}x{p.h_size}"
        )
    return f"{tr.kind} refutation of |J|={len(tr.j)} with k={tr.k}", violations, False


def cmd_verify(args: argparse.Namespace, settings: SolverSettings) -> int:
    instance = load_instance(args.graph)
    text = Path(args.certificate).read_text()
    summary, violations, exhausted = verify_file(text, instance, settings)
    if args.format == "json":
        record = {
            "summary": summary,
            "valid": not violations and not exhausted,
            "resource_exhausted": exhausted,
            "violations": violations,
        }
        print(pd.Series(record).to_json(indent=2))
    else:
        console = Console(width=240, markup=False, highlight=False)
        console.print(summary)
        for v in violations:
            console.print(f"  violation: {v}")
        console.print("valid" if not violations and not exhausted else "invalid")
    if violations:
        logger.info(f"{args.certificate}: {len(violations)} violation(s).")
        return EXIT_INVALID
    if exhausted:
        logger.warning(f"{args.certificate}: claim not settled within the budget.")
        return EXIT_RESOURCE
    return EXIT_OK


def cmd_table(args: argparse.Namespace, settings: SolverSettings) -> int:
    seed = settings.default_seed if args.seed is None else args.seed
    reports: list[BoundsReport] = []
    for row in parse_sweep(args.sweep, seed):
        name = f"{row.family} n={row.n} k={row.k}"
        try:
            report = compute_bounds(parse_instance(row.spec), row.k, settings, seed, name=name)
            report.check()
        except InvariantViolation:
            raise
        except CartwidthError as exc:
            logger.warning(f"{name} failed: {exc}")
            report = BoundsReport.failed(name, exc, n=row.n, k=row.k)
        reports.append(report)

    out = render_reports(reports, args.format)
    if out is not None:
        print(out)
    if args.json_out:
        Path(args.json_out).write_text(render_reports(reports, "json") or "")
        logger.info(f"Wrote {len(reports)} rows to {args.json_out}.")
    return EXIT_OK
