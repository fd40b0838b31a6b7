import csv
from pathlib import Path

import pytest

from fairshare.benchmark import published_benchmark
from fairshare.reference import countries_2015, sports_lorenz_params, sports_points

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def published():
    return published_benchmark()


@pytest.fixture(scope="session")
def countries():
    return countries_2015()


@pytest.fixture(scope="session")
def sports():
    return sports_points()


@pytest.fixture(scope="session")
def lorenz_params():
    return sports_lorenz_params()


@pytest.fixture(scope="session")
def golden_rows():
    """Per-country actual shares, fair shares and % deviations, 3 and 2 decimals."""
    with open(DATA / "table_a1.csv", newline="", encoding="utf-8") as fh:
        rows = list(csv.DictReader(fh))
    out = []
    for r in rows:
        out.append({
            "country": r["country"],
            "gini": float(r["gini"]),
            "actual": [float(r[f"actual_q{q}"]) for q in range(1, 6)],
            "fair": [float(r[f"fair_q{q}"]) for q in range(1, 6)],
            "pct": [float(r[f"pct_q{q}"]) for q in range(1, 6)],
        })
    return out
