import csv
import io

import numpy as np
import pytest

from fairshare.assess import (
    assess_country,
    envelope_check,
    export_assessments,
    plan_targets,
    solve_gini_for_bottom40,
    summarize,
)
from fairshare.benchmark import fair_shares
from fairshare.errors import DomainError, UnattainableTarget, ValidationError
from fairshare.ingest import CountryRecord


def test_on_line_country(published):
    fair = fair_shares(published, 0.3)
    a = assess_country(CountryRecord("x", 0.3, tuple(fair)), published)
    assert all(r.direction == "on" and r.pct_dev == 0.0 for r in a.quintiles)


def test_sign_convention(published):
    rec = CountryRecord("x", 0.254, (0.096, 0.145, 0.182, 0.226, 0.351))
    a = assess_country(rec, published)
    assert a[1].direction == "above" and a[1].pct_dev > 0
    assert a[4].direction == "below" and a[4].pct_dev < 0


def test_summarize_counts_and_order(published, countries):
    s = summarize([assess_country(r, published) for r in countries])
    assert s.size == 75
    for q in s.quintiles:
        assert q.above + q.below + q.on == 75
        assert q.minimum.value <= q.median.value <= q.maximum.value
    assert (s[1].above, s[2].above, s[3].above, s[4].above, s[5].above) == (74, 35, 0, 0, 75)
    assert s[4].maximum.name == "Pakistan" and s[4].minimum.name == "Romania"


def test_summarize_even_cohort_uses_lower_middle(published):
    recs = [CountryRecord(n, 0.3, tuple(fair_shares(published, 0.3))) for n in "dcba"]
    s = summarize([assess_country(r, published) for r in recs])
    assert s[1].median.name == "b" and s[1].minimum.name == "a" and s[1].maximum.name == "d"
    with pytest.raises(ValidationError):
        summarize([])


def test_export_round_trip(published, countries):
    assessed = [assess_country(r, published) for r in countries[:5]]
    rows = list(csv.DictReader(io.StringIO(export_assessments(assessed))))
    assert len(rows) == 25
    for row, (a, q) in zip(rows, [(a, q) for a in assessed for q in range(1, 6)]):
        assert row["country"] == a.name and int(row["quintile"]) == q
        assert float(row["pct_dev"]) == a[q].pct_dev and float(row["fair"]) == a[q].fair


def test_envelope_against_itself_is_clean(sports):
    rep = envelope_check(sports, sports)
    assert rep.ok and rep.bounds["gini"] == (min(s.gini for s in sports), max(s.gini for s in sports))


def test_envelope_accepts_pairs():
    ref = [(0.3, (0.1, 0.15, 0.2, 0.25, 0.3)), (0.5, (0.05, 0.1, 0.15, 0.2, 0.5))]
    rep = envelope_check([(0.6, (0.05, 0.1, 0.15, 0.2, 0.5))], ref)
    assert [(v.indicator, v.side) for v in rep.violations] == [("gini", "above")]
    with pytest.raises(ValidationError):
        envelope_check(ref, [])


def test_plan_identities(published):
    p = plan_targets(published, 0.226)
    assert p.bottom40 == p.shares.q1 + p.shares.q2
    assert p.gap_ratio == p.shares.q5 / p.shares.q1
    eq = plan_targets(published, 0.0)
    assert eq.gap_ratio == pytest.approx(1.0) and eq.bottom40 == pytest.approx(0.4)
    with pytest.raises(DomainError):
        plan_targets(published, 1.0)


def test_solve_round_trip(published):
    for target in (0.1, 0.2, 0.25, 0.3, 0.39):
        g = solve_gini_for_bottom40(published, target)
        assert plan_targets(published, g).bottom40 == pytest.approx(target, abs=1e-9)
    assert solve_gini_for_bottom40(published, 0.4) == 0.0


@pytest.mark.parametrize("target", [0.0, 0.41, -0.1])
def test_solve_unattainable(published, target):
    with pytest.raises(UnattainableTarget):
        solve_gini_for_bottom40(published, target)


def test_solve_is_smallest_root(published):
    g = solve_gini_for_bottom40(published, 0.3)
    grid = np.linspace(0, g, 200, endpoint=False)
    assert np.all(published[1](grid) + published[2](grid) > 0.3)
