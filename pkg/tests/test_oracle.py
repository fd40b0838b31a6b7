import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fairshare.errors import DomainError, ValidationError, ZeroTotal
from fairshare.lorenz import LorenzParams, area_under, gini_of, quintile_shares
from fairshare.oracle import (
    OracleResult,
    empirical_gini,
    empirical_quintile_shares,
    lorenz_sample,
    numeric_gini,
    numeric_lorenz_area,
)

values = st.lists(st.floats(0.0, 1e6), min_size=5, max_size=80).filter(lambda v: sum(v) > 0)


def test_gini_extremes():
    assert empirical_gini([3.0] * 8) == 0.0
    assert empirical_gini([0, 0, 0, 0, 1]) == pytest.approx(0.8)
    with pytest.raises(ZeroTotal):
        empirical_gini([0, 0])
    with pytest.raises(ValidationError):
        empirical_gini([1])


@settings(max_examples=60, deadline=None)
@given(values, st.floats(0.01, 100.0), st.randoms(use_true_random=False))
def test_gini_scale_and_permutation_invariant(v, scale, rnd):
    shuffled = list(v)
    rnd.shuffle(shuffled)
    g = empirical_gini(v)
    assert 0.0 <= g <= (len(v) - 1) / len(v) + 1e-12
    assert empirical_gini(shuffled) == pytest.approx(g, abs=1e-12)
    assert empirical_gini([x * scale for x in v]) == pytest.approx(g, abs=1e-12)


def test_sampled_gini_matches_closed_form():
    p = LorenzParams(0.31, 3.52)
    assert empirical_gini(lorenz_sample(p, 100_000, np.random.default_rng(0))) == pytest.approx(gini_of(p), abs=0.01)
    assert empirical_gini(lorenz_sample(p, 100_000)) == pytest.approx(gini_of(p), abs=1e-4)


def test_area_examples():
    assert numeric_lorenz_area(LorenzParams(0.7, 1.0)) == pytest.approx(0.5, abs=1e-10)
    assert numeric_lorenz_area(LorenzParams(0.25, 3.0)) == pytest.approx(0.25, abs=1e-8)
    for bad in (99, 101, 0):
        with pytest.raises(DomainError):
            numeric_lorenz_area(LorenzParams(0.5, 2.0), bad)


def test_area_sweep():
    rng = np.random.default_rng(11)
    for _ in range(100):
        p = LorenzParams(float(rng.uniform(0, 1)), float(rng.uniform(1, 30)))
        assert abs(numeric_lorenz_area(p) - area_under(p)) <= 1e-8


def test_numeric_gini_descriptor():
    r = numeric_gini(LorenzParams(0.5, 3.0))
    assert r.value == pytest.approx(0.5, abs=1e-8) and "simpson" in r.method
    with pytest.raises(ValidationError):
        OracleResult(0.1, "")


def test_quintile_examples():
    assert empirical_quintile_shares([4.0] * 10) == pytest.approx((0.2,) * 5)
    s = empirical_quintile_shares(range(1, 11))
    assert s.q1 == pytest.approx(3 / 55, abs=1e-15) and s.q5 == pytest.approx(19 / 55, abs=1e-15)


def test_quintile_split_for_uneven_n():
    # seven equal values: each fifth holds 1.4 observations
    assert empirical_quintile_shares([1.0] * 7) == pytest.approx((0.2,) * 5, abs=1e-15)
    s = empirical_quintile_shares([1, 2, 3, 4, 5, 6])
    assert s.q1 == pytest.approx(1.4 / 21, abs=1e-15)  # 1 + 0.2 * 2


@settings(max_examples=60, deadline=None)
@given(values)
def test_quintile_sum(v):
    assert abs(sum(empirical_quintile_shares(v)) - 1.0) <= 1e-12


def test_sampled_quintiles_match_curve():
    p = LorenzParams(0.4, 2.5)
    got = empirical_quintile_shares(lorenz_sample(p, 100_000, np.random.default_rng(5)))
    assert np.abs(np.array(got) - np.array(quintile_shares(p))).max() <= 0.01
