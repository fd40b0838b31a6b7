"""Bundled reference data.

* ``countries_2015.csv``: Gini index and quintile income shares of 75
  countries in 2015 (World Bank).
* ``sports_2019.csv``: Gini index and quintile salary shares of 11
  professional sports leagues, computed from fitted Lorenz curves.
* ``lorenz_params_2019.csv``: the fitted (k, P) and R^2 for those leagues.
"""

from __future__ import annotations

import csv
import io
from importlib.resources import files

from .ingest import CountryRecord, parse_country_table, parse_points_table
from .lorenz import LorenzParams


def data_text(name: str) -> str:
    return files("fairshare").joinpath("data", name).read_text(encoding="utf-8")


def countries_2015() -> list[CountryRecord]:
    return parse_country_table(data_text("countries_2015.csv"))


def sports_points() -> list[CountryRecord]:
    return parse_points_table(data_text("sports_2019.csv"))


def sports_lorenz_params() -> dict[str, tuple[LorenzParams, float]]:
    """League name -> (fitted parameters, reported R^2), in table order."""
    out = {}
    for row in csv.DictReader(io.StringIO(data_text("lorenz_params_2019.csv"))):
        out[row["sport"]] = (LorenzParams(float(row["k"]), float(row["P"])), float(row["r2"]))
    return out
