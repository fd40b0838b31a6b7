"""Scoring countries against a fairness benchmark."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np
from scipy.optimize import bisect

from .benchmark import FairnessBenchmark, fair_shares
from .errors import DomainError, UnattainableTarget, ValidationError
from .ingest import CountryRecord
from .lorenz import QuintileShares

ON_LINE_TOL = 1e-9
INDICATORS = ("gini", "q1", "q2", "q3", "q4", "q5")


@dataclass(frozen=True)
class QuintileAssessment:
    quintile: int
    actual: float
    fair: float
    pct_dev: float
    direction: str


@dataclass(frozen=True)
class CountryAssessment:
    name: str
    gini: float
    quintiles: tuple[QuintileAssessment, ...]

    def __getitem__(self, quintile: int) -> QuintileAssessment:
        return self.quintiles[quintile - 1]


def _direction(pct):
    if abs(pct) < ON_LINE_TOL:
        return "on"
    return "above" if pct > 0 else "below"


def assess_country(record: CountryRecord, benchmark: FairnessBenchmark) -> CountryAssessment:
    """Signed percentage deviation of each actual share from its fair share.

    Positive means the quintile holds more than the benchmark's fair share.
    """
    fair = fair_shares(benchmark, record.gini)
    rows = []
    for q, (actual, f) in enumerate(zip(record.shares, fair), start=1):
        if f == 0.0:
            raise DomainError(f"{record.name}: fair share of quintile {q} is zero at gini {record.gini}")
        pct = (actual - f) / f * 100.0
        rows.append(QuintileAssessment(q, float(actual), f, pct, _direction(pct)))
    return CountryAssessment(record.name, record.gini, tuple(rows))


@dataclass(frozen=True)
class Ranked:
    value: float
    name: str


@dataclass(frozen=True)
class QuintileSummary:
    quintile: int
    above: int
    below: int
    on: int
    minimum: Ranked
    median: Ranked
    maximum: Ranked
    mean: float


@dataclass(frozen=True)
class CohortSummary:
    size: int
    quintiles: tuple[QuintileSummary, ...]

    def __getitem__(self, quintile: int) -> QuintileSummary:
        return self.quintiles[quintile - 1]


def summarize(assessments) -> CohortSummary:
    """Counts above/below and min/median/max/mean of |pct_dev| per quintile.

    For an even cohort the lower-middle element is the median, so the
    median always names a country. Ties in |pct_dev| are broken by name.
    """
    assessments = list(assessments)
    if not assessments:
        raise ValidationError("cannot summarise an empty cohort")
    out = []
    for q in range(1, 6):
        devs = sorted((abs(a[q].pct_dev), a.name) for a in assessments)
        dirs = [a[q].direction for a in assessments]
        mid = devs[(len(devs) - 1) // 2]
        out.append(QuintileSummary(
            quintile=q,
            above=dirs.count("above"),
            below=dirs.count("below"),
            on=dirs.count("on"),
            minimum=Ranked(*devs[0]),
            median=Ranked(*mid),
            maximum=Ranked(*devs[-1]),
            mean=float(np.mean([d for d, _ in devs])),
        ))
    return CohortSummary(len(assessments), tuple(out))


@dataclass(frozen=True)
class EnvelopeEntry:
    name: str
    indicator: str
    value: float
    side: str  # "below" the reference minimum or "above" the maximum


@dataclass(frozen=True)
class EnvelopeReport:
    bounds: dict[str, tuple[float, float]]
    violations: list[EnvelopeEntry]

    @property
    def ok(self) -> bool:
        return not self.violations

    def for_indicator(self, indicator: str) -> list[EnvelopeEntry]:
        return [v for v in self.violations if v.indicator == indicator]


def _indicator_rows(items):
    rows = []
    for item in items:
        if isinstance(item, CountryRecord):
            rows.append((item.name, item.gini, tuple(item.shares)))
        else:
            g, shares = item
            rows.append(("", float(g), tuple(shares)))
    return rows


def envelope_check(records, reference) -> EnvelopeReport:
    """List every record indicator outside the reference set's min-max range.

    ``reference`` holds ``(gini, shares)`` pairs or `CountryRecord` objects,
    normally the fitted sports distributions without the anchor rows.
    """
    ref = _indicator_rows(reference)
    if not ref:
        raise ValidationError("envelope reference set is empty")
    table = np.array([[g, *s] for _, g, s in ref])
    bounds = {ind: (float(table[:, i].min()), float(table[:, i].max()))
              for i, ind in enumerate(INDICATORS)}
    found = []
    for name, g, shares in _indicator_rows(records):
        for ind, v in zip(INDICATORS, (g, *shares)):
            lo, hi = bounds[ind]
            if v < lo - 1e-12:
                found.append(EnvelopeEntry(name, ind, v, "below"))
            elif v > hi + 1e-12:
                found.append(EnvelopeEntry(name, ind, v, "above"))
    return EnvelopeReport(bounds, found)


@dataclass(frozen=True)
class TargetPlan:
    gini: float
    shares: QuintileShares
    bottom40: float
    gap_ratio: float


def plan_targets(benchmark: FairnessBenchmark, gini: float) -> TargetPlan:
    """Fair shares at ``gini`` with the bottom-40% share and top/bottom ratio."""
    if not 0.0 <= gini < 1.0:
        raise DomainError(f"planning gini must lie in [0, 1), got {gini}")
    shares = fair_shares(benchmark, gini)
    if shares.q1 <= 0.0:
        raise DomainError(f"lowest-quintile fair share is {shares.q1:.3g} at gini {gini}")
    return TargetPlan(gini, shares, shares.q1 + shares.q2, shares.q5 / shares.q1)


def solve_gini_for_bottom40(benchmark: FairnessBenchmark, target: float,
                            grid_points: int = 1001) -> float:
    """Smallest Gini at which the fair bottom-40% share equals ``target``.

    A grid scan finds the first sign change of ``q1 + q2 - target``, then
    bisection narrows it to ``|q1 + q2 - target| <= 1e-9``.
    """
    lines = benchmark.lines[:2]

    def excess(g):
        return float(lines[0](g) + lines[1](g)) - target

    grid = np.linspace(0.0, 1.0, grid_points)
    vals = np.array([excess(g) for g in grid])
    lo, hi = float(vals.min() + target), float(vals.max() + target)
    if not 0.0 < target <= 0.4 or not lo - 1e-12 <= target <= hi + 1e-12:
        raise UnattainableTarget(
            f"bottom-40% target {target} outside attainable range [{lo:.4f}, {hi:.4f}]")
    for i in range(grid.size):
        if vals[i] == 0.0:
            return float(grid[i])
        if i + 1 < grid.size and (vals[i] > 0.0) != (vals[i + 1] > 0.0):
            root = bisect(excess, grid[i], grid[i + 1], xtol=1e-15, rtol=1e-15, maxiter=200)
            return float(root)
    # target equals an extremum approached but not crossed on the grid
    i = int(np.argmin(np.abs(vals)))
    if abs(vals[i]) <= 1e-9:
        return float(grid[i])
    raise UnattainableTarget(f"no grid bracket found for bottom-40% target {target}")


def export_assessments(assessments) -> str:
    """CSV with one row per country and quintile, floats at full precision."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["country", "gini", "quintile", "actual", "fair", "pct_dev", "direction"])
    for a in assessments:
        for r in a.quintiles:
            w.writerow([a.name, repr(a.gini), r.quintile, repr(r.actual), repr(r.fair),
                        repr(r.pct_dev), r.direction])
    return buf.getvalue()
