"""Command-line interface.

Reports are tab-delimited: ``key<TAB>value`` lines followed by a
``degree / states / rank`` table, or a single JSON document with
``--format json``.  Errors exit with the status of their family
(parse 2, disconnected 3, arithmetic 4, fallback too large 5).
"""

from __future__ import annotations

import functools
import json
import logging
import sys
from pathlib import Path

import click

from . import catalog
from .complex import assemble, verify_d_squared
from .diagram import LinkDiagram, parse_pd
from .errors import BosError
from .homology import DEFAULT_SEED, HomologyReport, degree_label, diagram_cohomology
from .invariants import (
    CheckOutcome,
    check_base_points,
    check_euler,
    check_reidemeister_pair,
    check_state_count,
    check_thin,
    determinant_goeritz,
    skein_consistency,
)
from .tait import build_tait

MODES = ["exact", "specialized", "cancelled", "auto"]


def _guard(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except BosError as exc:
            click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
            sys.exit(exc.exit_code)

    return wrapper


def load_diagram(source: str | None, pd: str | None) -> LinkDiagram:
    """Inline PD text, a catalog name, or a file holding one PD code."""
    if pd is not None:
        return parse_pd(pd)
    if source is None:
        raise click.UsageError("give a catalog name, a PD file, or --pd")
    if source in catalog.load_catalog():
        return catalog.get(source)
    path = Path(source)
    if path.is_file():
        text = "\n".join(line.split("#", 1)[0] for line in path.read_text().splitlines())
        d = parse_pd(text)
        return LinkDiagram(d.crossings, d.free_loops, name=path.stem)
    return parse_pd(source)


def _rows(rows) -> str:
    return "".join("\t".join(str(v) for v in row) + "\n" for row in rows)


def report_table(d: LinkDiagram, report: HomologyReport) -> str:
    head = [
        ("diagram", d.name or "-"),
        ("pd", d.pd_text()),
        ("mode", report.mode),
        ("certification", report.certification),
        ("seed", report.seed if report.seed is not None else "-"),
        ("chi", report.euler_characteristic),
        ("abs_chi", abs(report.euler_characteristic)),
        ("total_rank", report.total_rank),
    ]
    table = [("degree", "states", "rank")]
    for D in sorted(report.state_counts):
        table.append((degree_label(D), report.state_counts[D], report.ranks.get(D, 0)))
    return _rows(head) + "\n" + _rows(table)


def report_json(d: LinkDiagram, report: HomologyReport) -> str:
    doc = {"diagram": d.name or None, "pd": d.pd_text(), **report.to_dict()}
    return json.dumps(doc, indent=1)


def _outcomes_table(outcomes: list[CheckOutcome]) -> str:
    rows = [("check", "status", "details")]
    for o in outcomes:
        rows.append((o.name, o.status, json.dumps(o.details, sort_keys=True)))
    return _rows(rows)


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).parent.mkdir(parents=True, exist_ok=True)
        Path(output).write_text(text)
    click.echo(text, nl=not text.endswith("\n"))


_source = click.argument("source", required=False)
_pd = click.option("--pd", "pd", help="inline PD code, e.g. 'X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)'")
_mode = click.option("--mode", type=click.Choice(MODES), default="auto", show_default=True)
_seed = click.option("--seed", type=int, default=DEFAULT_SEED, show_default=True)
_fmt = click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="table", show_default=True)
_threads = click.option("--threads", type=int, default=1, show_default=True)


@click.group()
@click.option("-v", "--verbose", is_flag=True)
def main(verbose: bool) -> None:
    """Cohomology of link diagrams from spanning-tree complexes over GF(2)."""
    logging.basicConfig(level=logging.INFO if verbose else logging.WARNING, format="%(levelname)s %(message)s")


@main.command()
@_source
@_pd
@_mode
@_seed
@_fmt
@_threads
@click.option("--base-arc", type=int, default=None)
@click.option("--figure", type=click.Path(dir_okay=False), default=None, help="write a bar chart here")
@click.option("--output", type=click.Path(dir_okay=False), default=None, help="also write the report here")
@_guard
def homology(source, pd, mode, seed, fmt, threads, base_arc, figure, output):
    """Per-degree cohomology ranks of a diagram."""
    d = load_diagram(source, pd)
    report = diagram_cohomology(d, mode, seed, base_arc=base_arc, threads=threads)
    text = report_json(d, report) if fmt == "json" else report_table(d, report)
    _emit(text, output)
    if output and not figure:
        figure = str(Path(output).with_suffix(".png"))
    if figure:
        from .plotting import plot_report

        plot_report(report, figure, title=d.name or "")


@main.command()
@_source
@_pd
@_mode
@_seed
@_fmt
@_threads
@_guard
def verify(source, pd, mode, seed, fmt, threads):
    """d^2 = 0, base points, Euler/determinant, Kirchhoff, Reidemeister pairs; thinness is reported."""
    d = load_diagram(source, pd)

    def compute(x):
        return diagram_cohomology(x, mode, seed, threads=threads)

    c = assemble(build_tait(d))
    outcomes = [
        CheckOutcome("d-squared", "pass" if verify_d_squared(c) else "fail", {"states": c.counts()}),
        check_base_points(d),
        check_euler(d),
        check_state_count(d),
    ]
    for a, b in catalog.REIDEMEISTER_PAIRS:
        if d.name in (a, b):
            outcomes.append(check_reidemeister_pair(catalog.get(a), catalog.get(b), compute))
    report = compute(d)
    thin = check_thin(report, determinant_goeritz(d), catalog.REFERENCE_SIGNATURE.get(d.name))
    failed = [o.name for o in outcomes if not o.passed]
    if fmt == "json":
        doc = {
            "diagram": d.name or None,
            "checks": [o.to_dict() for o in outcomes],
            "thin": thin.to_dict(),
            "report": report.to_dict(),
            "passed": not failed,
        }
        click.echo(json.dumps(doc, indent=1))
    else:
        click.echo(_outcomes_table(outcomes + [thin]) + "\n" + report_table(d, report), nl=False)
        click.echo(f"\nresult\t{'pass' if not failed else 'fail'}\tthin={thin.status}")
    if failed:
        sys.exit(1)


@main.command()
@_source
@_pd
@_mode
@_seed
@_fmt
@click.option("-c", "--crossing", "crossings", type=int, multiple=True, help="crossing index (repeatable)")
@_guard
def skein(source, pd, mode, seed, fmt, crossings):
    """Compare a diagram with its two resolutions at one or more crossings."""
    d = load_diagram(source, pd)
    todo = crossings or range(d.n_crossings)
    outcomes = [skein_consistency(d, c, lambda x: diagram_cohomology(x, mode, seed)) for c in todo]
    if fmt == "json":
        click.echo(json.dumps([o.to_dict() for o in outcomes], indent=1))
    else:
        click.echo(_outcomes_table(outcomes), nl=False)
    if any(not o.passed for o in outcomes):
        sys.exit(1)


@main.command("catalog")
@click.option("--run", is_flag=True, help="compute ranks for every entry (long-running ones skipped)")
@_mode
@_seed
@_fmt
@_guard
def catalog_cmd(run, mode, seed, fmt):
    """List the bundled diagrams."""
    rows = []
    for name in catalog.names():
        d = catalog.get(name)
        row = {
            "name": name,
            "crossings": d.n_crossings,
            "components": d.n_components,
            "alternating": d.is_alternating(),
            "det": determinant_goeritz(d),
            "long_running": name in catalog.LONG_RUNNING,
        }
        if run and name not in catalog.LONG_RUNNING:
            r = diagram_cohomology(d, mode, seed)
            row["ranks"] = r.nonzero_by_label()
            row["certification"] = r.certification
        rows.append(row)
    if fmt == "json":
        click.echo(json.dumps(rows, indent=1))
        return
    keys = list(rows[0])
    if run:
        keys += [k for k in ("ranks", "certification") if k not in keys]
    table = [keys] + [[json.dumps(r[k]) if k == "ranks" and k in r else r.get(k, "-") for k in keys] for r in rows]
    click.echo(_rows(table), nl=False)


@main.command("dump-complex")
@_source
@_pd
@click.option("--base-arc", type=int, default=None)
@_guard
def dump_complex(source, pd, base_arc):
    """Tait data and the sparse differentials as JSON."""
    d = load_diagram(source, pd)
    t = build_tait(d, base_arc=base_arc)
    c = assemble(t)
    click.echo(json.dumps({"tait": t.to_report(), "complex": c.dump()}, indent=1))


if __name__ == "__main__":  # pragma: no cover
    main()
