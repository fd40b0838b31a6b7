"""Command-line front end.

Exit status: 0 on success, 1 on a domain or validation error, 2 when an
input cannot be read or parsed.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .assess import (
    INDICATORS,
    assess_country,
    envelope_check,
    export_assessments,
    plan_targets,
    solve_gini_for_bottom40,
    summarize,
)
from .benchmark import (
    GRID_STEP,
    FairnessBenchmark,
    dump_benchmark,
    fit_benchmark,
    load_benchmark,
    published_benchmark,
    validate,
)
from .errors import FairshareError, ParseError, ValidationError
from .ingest import describe, parse_country_table, parse_salary_table, read_text
from .lorenz import fit_values, gini_of, quintile_shares
from .reference import data_text
from .svg import render_benchmark_svg

BUNDLED = "bundled"
SUBCOMMANDS = ("fit", "benchmark", "assess", "plan", "plot", "describe", "envelope")
SHARE_LABELS = ("Lowest 20%", "Second 20%", "Third 20%", "Fourth 20%", "Top 20%")


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    inputs: dict[str, str] = field(default_factory=dict)
    benchmark: str = "published"
    out: str | None = None
    fmt: str = "text"
    grid_step: float = GRID_STEP
    options: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.subcommand not in SUBCOMMANDS:
            raise ValidationError(f"unknown subcommand {self.subcommand!r}")
        if self.fmt == "svg" and self.subcommand != "plot":
            raise ValidationError("--format svg is only valid for plot")
        if self.fmt not in ("text", "csv", "svg"):
            raise ValidationError(f"unknown format {self.fmt!r}")
        if not 0.0 < self.grid_step <= 0.5:
            raise ValidationError(f"--grid-step must lie in (0, 0.5], got {self.grid_step}")


class InputError(ParseError):
    """An input file could not be read or parsed; carries the path."""


def _text(path, bundled=None):
    if path == BUNDLED and bundled:
        return data_text(bundled)
    try:
        return read_text(path)
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"{path}: cannot read ({exc.__class__.__name__}: {exc})") from exc


def _load(path, parser, bundled=None):
    """Read ``path`` (or a bundled data file) and parse it; errors name the path."""
    text = _text(path, bundled)
    try:
        return parser(text)
    except ParseError as exc:
        raise InputError(f"{path}: {exc}") from exc
    except ValidationError as exc:
        raise ValidationError(f"{path}: {exc}") from exc


def _points(text):
    header = text.lstrip("﻿").split("\n", 1)[0]
    label = "sport" if "sport" in [h.strip() for h in header.split(",")] else "country"
    return parse_country_table(text, label=label)


def _benchmark(config) -> FairnessBenchmark:
    if config.benchmark == "published":
        return published_benchmark()
    return _load(config.benchmark, load_benchmark)


def _emit(config, text):
    if config.out:
        try:
            Path(config.out).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise InputError(f"{config.out}: cannot write ({exc})") from exc
    else:
        sys.stdout.write(text)


def _csv(rows):
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _table(header, rows):
    widths = [max(len(str(r[i])) for r in [header, *rows]) for i in range(len(header))]
    fmt = "  ".join(f"{{:<{w}}}" if i == 0 else f"{{:>{w}}}" for i, w in enumerate(widths))
    lines = [fmt.format(*header), "  ".join("-" * w for w in widths)]
    lines += [fmt.format(*r) for r in rows]
    return "\n".join(lines) + "\n"


def cmd_fit(config) -> int:
    table = _load(config.inputs["input"], parse_salary_table)
    header = ["sport", "k", "P", "gini", "r2", "q1", "q2", "q3", "q4", "q5", "n"]
    rows = []
    for sport in table.sports:
        fit = fit_values(table.entries[sport])
        p = fit.params
        rows.append((sport, p.weight, p.power, gini_of(p), fit.r2, *quintile_shares(p), fit.n))
    if config.fmt == "csv":
        body = [header] + [[r[0], *(repr(float(v)) for v in r[1:-1]), r[-1]] for r in rows]
        _emit(config, _csv(body))
    else:
        _emit(config, _table(header, [[r[0], *(f"{v:.4f}" for v in r[1:-1]), r[-1]] for r in rows]))
    return 0


def cmd_benchmark(config) -> int:
    if config.options.get("published"):
        bench = published_benchmark()
        report = validate(bench, grid_step=config.grid_step)
    else:
        points = _load(config.inputs["input"], _points, "sports_2019.csv")
        bench, _ = fit_benchmark(points)
        report = validate(bench, grid_step=config.grid_step)
    text = dump_benchmark(bench)
    for line in bench.lines:
        if line.r2 is not None:
            text += f"# r2 quintile {line.quintile}: {line.r2:.4f}\n"
    text += "".join(f"# {s}\n" for s in report.summary_lines())
    _emit(config, text)
    return 0


def _assessment_text(assessments, summary):
    order = (5, 4, 3, 2, 1)
    header = ["country", "gini", "share"]
    for q in order:
        header += [SHARE_LABELS[q - 1], "%dev"]
    rows = []
    for a in assessments:
        actual = [a.name, f"{a.gini:.4f}", "actual"]
        fair = ["", "", "fair"]
        for q in order:
            r = a[q]
            actual += [f"{r.actual:.4f}", f"{r.pct_dev:.2f}"]
            fair += [f"{r.fair:.4f}", ""]
        rows += [actual, fair]
    out = _table(header, rows)
    out += f"\nCohort summary ({summary.size} countries, |%dev|)\n"
    srows = []
    for s in summary.quintiles:
        srows.append([SHARE_LABELS[s.quintile - 1], s.above, s.below, s.on,
                      f"{s.minimum.value:.2f} {s.minimum.name}",
                      f"{s.median.value:.2f} {s.median.name}",
                      f"{s.maximum.value:.2f} {s.maximum.name}",
                      f"{s.mean:.2f}"])
    out += _table(["quintile", "above", "below", "on", "min", "median", "max", "mean"], srows)
    return out


def cmd_assess(config) -> int:
    records = _load(config.inputs["input"], parse_country_table, "countries_2015.csv")
    bench = _benchmark(config)
    assessments = [assess_country(r, bench) for r in records]
    if config.fmt == "csv":
        _emit(config, export_assessments(assessments))
    else:
        _emit(config, _assessment_text(assessments, summarize(assessments)))
    return 0


def cmd_plan(config) -> int:
    bench = _benchmark(config)
    gini = config.options.get("gini")
    target = config.options.get("bottom40")
    if target is not None:
        gini = solve_gini_for_bottom40(bench, target)
    plan = plan_targets(bench, gini)
    if config.fmt == "csv":
        rows = [["field", "value"], ["gini", repr(plan.gini)]]
        rows += [[f"q{i}", repr(v)] for i, v in enumerate(plan.shares, start=1)]
        rows += [["bottom40", repr(plan.bottom40)], ["gap_ratio", repr(plan.gap_ratio)]]
        _emit(config, _csv(rows))
    else:
        lines = [f"gini        {plan.gini:.4f}"]
        for i, v in enumerate(plan.shares, start=1):
            lines.append(f"q{i}          {v:.4f}  ({100 * v:.2f}%)  {SHARE_LABELS[i - 1]}")
        lines.append(f"bottom40    {plan.bottom40:.4f}  ({100 * plan.bottom40:.2f}%)")
        lines.append(f"gap_ratio   {plan.gap_ratio:.2f}  (top 20% / lowest 20%)")
        _emit(config, "\n".join(lines) + "\n")
    return 0


def cmd_plot(config) -> int:
    bench = _benchmark(config)
    sports = countries = None
    if config.inputs.get("sports"):
        sports = _load(config.inputs["sports"], _points, "sports_2019.csv")
    if config.inputs.get("countries"):
        countries = _load(config.inputs["countries"], parse_country_table, "countries_2015.csv")
    _emit(config, render_benchmark_svg(bench, sports=sports, countries=countries,
                                       step=config.grid_step, title=config.options.get("title")))
    return 0


def _describe_rows(labelled):
    rows = []
    for label, values in labelled:
        s = describe(values)
        rows.append((label, s.mean, s.median, s.mode, s.minimum, s.maximum, s.std, s.count))
    return rows


def cmd_describe(config) -> int:
    path = config.inputs["input"]
    text = _text(path, "countries_2015.csv")
    header = [h.strip() for h in text.lstrip("﻿").split("\n", 1)[0].split(",")]
    if "salary" in header:
        table = _load(path, parse_salary_table)
        rows = _describe_rows((s, table.entries[s]) for s in table.sports)
        decimals = 2
    else:
        records = _load(path, _points, "countries_2015.csv")
        labelled = [("gini", [r.gini for r in records])]
        labelled += [(f"q{q}", [r.shares[q - 1] for r in records]) for q in (5, 4, 3, 2, 1)]
        rows = _describe_rows(labelled)
        decimals = 4
    header = ["indicator", "mean", "median", "mode", "min", "max", "sd", "n"]
    if config.fmt == "csv":
        body = [header] + [[r[0], *("" if v is None else repr(v) for v in r[1:7]), r[7]] for r in rows]
        _emit(config, _csv(body))
    else:
        shown = [[r[0], *("-" if v is None else f"{v:,.{decimals}f}" for v in r[1:7]), r[7]]
                 for r in rows]
        _emit(config, _table(header, shown))
    return 0


def cmd_envelope(config) -> int:
    records = _load(config.inputs["input"], parse_country_table, "countries_2015.csv")
    reference = _load(config.inputs.get("reference") or BUNDLED, _points, "sports_2019.csv")
    report = envelope_check(records, reference)
    if config.fmt == "csv":
        rows = [["country", "indicator", "value", "side", "ref_min", "ref_max"]]
        for v in report.violations:
            lo, hi = report.bounds[v.indicator]
            rows.append([v.name, v.indicator, repr(v.value), v.side, repr(lo), repr(hi)])
        _emit(config, _csv(rows))
        return 0
    lines = []
    for ind in INDICATORS:
        lo, hi = report.bounds[ind]
        vals = [r.gini if ind == "gini" else r.shares[int(ind[1]) - 1] for r in records]
        bad = report.for_indicator(ind)
        lines.append(f"{ind:<5} reference [{lo:.4f}, {hi:.4f}]  input [{min(vals):.4f}, {max(vals):.4f}]  "
                     f"{len(bad)} outside")
        for v in bad:
            lines.append(f"      {v.name}: {v.value:.4f} ({v.side})")
    lines.append("no violations" if report.ok else f"{len(report.violations)} violation(s)")
    _emit(config, "\n".join(lines) + "\n")
    return 0


COMMANDS = {
    "fit": cmd_fit,
    "benchmark": cmd_benchmark,
    "assess": cmd_assess,
    "plan": cmd_plan,
    "plot": cmd_plot,
    "describe": cmd_describe,
    "envelope": cmd_envelope,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fairshare",
        description="Lorenz-curve fitting and quintile fairness benchmarks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, fmt=("text", "csv"), benchmark=True):
        p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
        p.add_argument("--format", dest="fmt", choices=fmt, default=fmt[0])
        p.add_argument("--grid-step", type=float, default=GRID_STEP, metavar="FLOAT")
        if benchmark:
            p.add_argument("--benchmark", default="published", metavar="{published|PATH}",
                           help="fairness lines to use (default: published)")

    p = sub.add_parser("fit", help="fit the Lorenz curve per sport in a salary file")
    p.add_argument("--input", required=True, metavar="PATH", help="sport,player,salary CSV")
    common(p, benchmark=False)

    p = sub.add_parser("benchmark", help="write fairness lines and their condition report")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--published", action="store_true", help="use the published coefficients")
    src.add_argument("--input", metavar="PATH", help="points CSV: sport,gini,q1..q5")
    common(p, benchmark=False)

    p = sub.add_parser("assess", help="compare country shares with fair shares")
    p.add_argument("--input", required=True, metavar="PATH|bundled",
                   help="country,gini,q1..q5 CSV, or 'bundled' for the 2015 cohort")
    common(p)

    p = sub.add_parser("plan", help="fair shares for a target gini or bottom-40%% share")
    goal = p.add_mutually_exclusive_group(required=True)
    goal.add_argument("--gini", type=float)
    goal.add_argument("--bottom40", type=float)
    common(p)

    p = sub.add_parser("plot", help="SVG of the fairness lines with optional scatter points")
    p.add_argument("--sports", metavar="PATH|bundled")
    p.add_argument("--countries", metavar="PATH|bundled")
    p.add_argument("--title")
    common(p, fmt=("svg",))

    p = sub.add_parser("describe", help="descriptive statistics of a salary or country file")
    p.add_argument("--input", required=True, metavar="PATH|bundled")
    common(p, benchmark=False)

    p = sub.add_parser("envelope", help="check country values against the sports min-max range")
    p.add_argument("--input", required=True, metavar="PATH|bundled")
    p.add_argument("--reference", metavar="PATH|bundled", help="default: bundled sports points")
    common(p, benchmark=False)
    return parser


def config_from_args(args) -> RunConfig:
    ns = vars(args).copy()
    inputs = {k: ns.pop(k) for k in ("input", "sports", "countries", "reference") if ns.get(k)}
    for k in ("input", "sports", "countries", "reference"):
        ns.pop(k, None)
    return RunConfig(
        subcommand=ns.pop("subcommand"),
        inputs=inputs,
        benchmark=ns.pop("benchmark", "published"),
        out=ns.pop("out", None),
        fmt=ns.pop("fmt", "text"),
        grid_step=ns.pop("grid_step", GRID_STEP),
        options=ns,
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
        return COMMANDS[config.subcommand](config)
    except ParseError as exc:
        print(f"fairshare: error: {exc}", file=sys.stderr)
        return 2
    except (FairshareError, ValueError) as exc:
        print(f"fairshare: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
