"""Fit Lorenz curves, build quintile fairness benchmarks, assess countries."""

from .assess import (
    CohortSummary,
    CountryAssessment,
    EnvelopeReport,
    TargetPlan,
    assess_country,
    envelope_check,
    plan_targets,
    solve_gini_for_bottom40,
    summarize,
)
from .benchmark import (
    ConditionReport,
    FairnessBenchmark,
    FairnessLine,
    dump_benchmark,
    fair_shares,
    fit_benchmark,
    load_benchmark,
    published_benchmark,
    validate,
)
from .ingest import (
    CountryRecord,
    DescriptiveStats,
    SalaryTable,
    describe,
    parse_country_table,
    parse_points_table,
    parse_salary_table,
)
from .lorenz import (
    EmpiricalLorenz,
    LorenzFit,
    LorenzParams,
    QuintileShares,
    area_under,
    build_empirical_lorenz,
    fit_lorenz,
    gini_of,
    lorenz_slope,
    lorenz_value,
    quintile_shares,
    r_squared,
)

__version__ = "0.1.0"
