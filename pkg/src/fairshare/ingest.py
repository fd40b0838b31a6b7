"""Reading and summarising salary and country income tables.

Both file types are comma-delimited UTF-8 with a single header row:

* salaries: ``sport,player,salary``
* countries: ``country,gini,q1,q2,q3,q4,q5`` (shares lowest to top quintile)

Extra columns are ignored, so the CSV written by ``fairshare fit`` can be
read back as a table of (gini, shares) points.
"""

from __future__ import annotations

import csv
import io
import math
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    EmptyInput,
    GiniOutOfRange,
    MalformedRow,
    NegativeSalary,
    NonMonotoneShares,
    ShareSumError,
    TooFewObservations,
    ValidationError,
)

MIN_OBSERVATIONS = 10
SHARE_SUM_TOLERANCE = 0.005
SHARE_COLUMNS = ("q1", "q2", "q3", "q4", "q5")


@dataclass(frozen=True)
class SalaryTable:
    """Salaries grouped by sport, in file order.

    ``players`` runs parallel to ``entries`` and is carried only for
    reporting.
    """

    entries: dict[str, list[float]]
    players: dict[str, list[str]]

    def __len__(self):
        return sum(len(v) for v in self.entries.values())

    @property
    def sports(self) -> list[str]:
        return list(self.entries)


@dataclass(frozen=True)
class CountryRecord:
    name: str
    gini: float
    shares: tuple[float, float, float, float, float]

    def __post_init__(self):
        check_share_record(self.name, self.gini, self.shares)


@dataclass(frozen=True)
class DescriptiveStats:
    mean: float
    median: float
    mode: float | None
    minimum: float
    maximum: float
    std: float
    count: int


def check_share_record(name, gini, shares):
    """Raise if a (gini, five shares) record is not a plausible quintile split."""
    if len(shares) != 5:
        raise ValidationError(f"{name}: expected 5 shares, got {len(shares)}")
    if not 0.0 <= gini <= 1.0:
        raise GiniOutOfRange(f"{name}: gini {gini} outside [0, 1]")
    for i, s in enumerate(shares, start=1):
        if not 0.0 <= s <= 1.0:
            raise ValidationError(f"{name}: share q{i}={s} outside [0, 1]")
    total = math.fsum(shares)
    if abs(total - 1.0) > SHARE_SUM_TOLERANCE:
        raise ShareSumError(f"{name}: shares sum to {total:.4f}, outside 1 +/- {SHARE_SUM_TOLERANCE}")
    for i in range(4):
        if shares[i] > shares[i + 1]:
            raise NonMonotoneShares(
                f"{name}: q{i + 1}={shares[i]} exceeds q{i + 2}={shares[i + 1]}"
            )


def _reader(source: str, required: tuple[str, ...]):
    if not source.strip():
        raise EmptyInput("input is empty")
    reader = csv.DictReader(io.StringIO(source.lstrip("﻿")))
    header = [h.strip() for h in (reader.fieldnames or [])]
    reader.fieldnames = header
    missing = [c for c in required if c not in header]
    if missing:
        raise MalformedRow(1, f"header lacks column(s) {', '.join(missing)}; got {','.join(header)}")
    return reader


def _number(text, row, column):
    try:
        value = float(text)
    except (TypeError, ValueError):
        raise MalformedRow(row, f"{column} {text!r} is not a number") from None
    if not math.isfinite(value):
        raise MalformedRow(row, f"{column} {text!r} is not finite")
    return value


def parse_salary_table(source: str) -> SalaryTable:
    """Parse ``sport,player,salary`` text into a validated `SalaryTable`."""
    reader = _reader(source, ("sport", "player", "salary"))
    entries: dict[str, list[float]] = {}
    players: dict[str, list[str]] = {}
    for record in reader:
        row = reader.line_num
        if None in record or any(record.get(c) is None for c in ("sport", "player", "salary")):
            raise MalformedRow(row, "wrong number of fields")
        sport = record["sport"].strip()
        if not sport:
            raise MalformedRow(row, "empty sport name")
        value = _number(record["salary"].strip(), row, "salary")
        if value < 0:
            raise NegativeSalary(row, value)
        entries.setdefault(sport, []).append(value)
        players.setdefault(sport, []).append(record["player"].strip())
    if not entries:
        raise EmptyInput("no salary rows after the header")
    for sport, values in entries.items():
        if len(values) < MIN_OBSERVATIONS:
            raise TooFewObservations(
                f"{sport}: {len(values)} salaries, need at least {MIN_OBSERVATIONS}"
            )
        if not any(v > 0 for v in values):
            raise ValidationError(f"{sport}: every salary is zero")
    return SalaryTable(entries, players)


def parse_country_table(source: str, label: str = "country") -> list[CountryRecord]:
    """Parse ``country,gini,q1,...,q5`` text into validated records.

    ``label`` names the first column; ``sport`` reads benchmark point files.
    """
    reader = _reader(source, (label, "gini") + SHARE_COLUMNS)
    records = []
    for record in reader:
        row = reader.line_num
        if None in record or any(record.get(c) is None for c in (label, "gini") + SHARE_COLUMNS):
            raise MalformedRow(row, "wrong number of fields")
        gini = _number(record["gini"].strip(), row, "gini")
        shares = tuple(_number(record[c].strip(), row, c) for c in SHARE_COLUMNS)
        records.append(CountryRecord(record[label].strip(), gini, shares))
    if not records:
        raise EmptyInput("no rows after the header")
    return records


def parse_points_table(source: str) -> list[CountryRecord]:
    """Read (gini, shares) benchmark points keyed by ``sport``."""
    return parse_country_table(source, label="sport")


def read_text(path) -> str:
    return Path(path).read_text(encoding="utf-8")


def describe(values) -> DescriptiveStats:
    """Mean, median, mode, range, standard deviation and count.

    The standard deviation uses the n-1 denominator (0 for a single value).
    The mode is the most frequent exact value occurring at least twice,
    smallest value on ties, and ``None`` when nothing repeats.
    """
    x = np.asarray(values, dtype=float)
    if x.size == 0:
        raise ValidationError("cannot describe an empty list")
    counts = Counter(x.tolist())
    top = max(counts.values())
    mode = min(v for v, c in counts.items() if c == top) if top >= 2 else None
    if x.min() == x.max():
        # summation round-off would otherwise leak into mean and std
        mean, std = float(x[0]), 0.0
    else:
        mean, std = float(np.mean(x)), float(np.std(x, ddof=1))
    return DescriptiveStats(
        mean=mean,
        median=float(np.median(x)),
        mode=mode,
        minimum=float(x.min()),
        maximum=float(x.max()),
        std=std,
        count=int(x.size),
    )
