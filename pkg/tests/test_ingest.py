import math

import numpy as np
import pytest

from fairshare.errors import (
    EmptyInput,
    GiniOutOfRange,
    MalformedRow,
    NegativeSalary,
    NonMonotoneShares,
    ParseError,
    ShareSumError,
    TooFewObservations,
    ValidationError,
)
from fairshare.ingest import (
    CountryRecord,
    describe,
    parse_country_table,
    parse_points_table,
    parse_salary_table,
)


def salary_csv(rows):
    return "sport,player,salary\n" + "".join(f"{s},{p},{v}\n" for s, p, v in rows)


def test_salary_table_groups_by_sport_in_input_order():
    rows = [("B", f"b{i}", 100 + i) for i in range(10)] + [("A", f"a{i}", i) for i in range(12)]
    t = parse_salary_table(salary_csv(rows))
    assert t.sports == ["B", "A"]
    assert len(t.entries["A"]) == 12 and t.entries["A"][3] == 3.0
    assert t.players["B"][0] == "b0"


def test_duplicate_player_rows_each_count():
    rows = [("A", "same", 5)] * 10
    assert len(parse_salary_table(salary_csv(rows)).entries["A"]) == 10


def test_negative_salary_names_row():
    rows = [("A", f"p{i}", 1) for i in range(10)] + [("A", "bad", -3)]
    with pytest.raises(NegativeSalary) as exc:
        parse_salary_table(salary_csv(rows))
    assert exc.value.row == 12 and exc.value.value == -3


def test_too_few_rows_per_sport():
    with pytest.raises(TooFewObservations):
        parse_salary_table(salary_csv([("A", f"p{i}", 1) for i in range(9)]))


def test_all_zero_sport_rejected():
    with pytest.raises(ValidationError):
        parse_salary_table(salary_csv([("A", f"p{i}", 0) for i in range(10)]))


@pytest.mark.parametrize("text", ["", "   \n", "sport,player,salary\n"])
def test_empty_inputs(text):
    with pytest.raises(EmptyInput):
        parse_salary_table(text)


def test_missing_column_and_bad_number():
    with pytest.raises(MalformedRow, match="line 1"):
        parse_salary_table("sport,player\nA,x\n")
    with pytest.raises(MalformedRow, match="line 3"):
        parse_salary_table("sport,player,salary\nA,x,1\nA,y,abc\n")
    with pytest.raises(MalformedRow):
        parse_salary_table("sport,player,salary\nA,x,nan\n")


def test_parse_errors_are_not_validation_errors():
    assert not issubclass(MalformedRow, ValidationError)
    assert issubclass(EmptyInput, ParseError)


def test_country_table_quoted_names_and_bom():
    text = '﻿country,gini,q1,q2,q3,q4,q5\n"Egypt, Arab Rep.",0.318,0.09,0.13,0.16,0.21,0.41\n'
    (rec,) = parse_country_table(text)
    assert rec.name == "Egypt, Arab Rep." and rec.gini == 0.318
    assert math.isclose(sum(rec.shares), 1.0)


def test_points_table_uses_sport_label():
    (rec,) = parse_points_table("sport,gini,q1,q2,q3,q4,q5\nX,0.5,0.05,0.1,0.15,0.2,0.5\n")
    assert rec.name == "X"


@pytest.mark.parametrize("gini, shares, err", [
    (1.2, (0.2,) * 5, GiniOutOfRange),
    (0.3, (0.1, 0.1, 0.2, 0.2, 0.3), ShareSumError),
    (0.3, (0.1, 0.2, 0.15, 0.25, 0.3), NonMonotoneShares),
    (0.3, (0.2, 0.2, 0.2, 0.4), ValidationError),
])
def test_country_record_invariants(gini, shares, err):
    with pytest.raises(err):
        CountryRecord("x", gini, shares)


def test_share_sum_tolerance_accepts_rounding():
    CountryRecord("x", 0.3, (0.07, 0.12, 0.16, 0.22, 0.434))


def test_describe_constant():
    s = describe([5, 5, 5])
    assert (s.mean, s.median, s.mode, s.std, s.count) == (5.0, 5.0, 5.0, 0.0, 3)


def test_describe_no_repeat_even_count():
    s = describe([4, 1, 3, 2])
    assert s.median == 2.5 and s.mode is None
    assert s.std == pytest.approx(math.sqrt(sum((v - 2.5) ** 2 for v in range(1, 5)) / 3), abs=1e-15)


def test_describe_mode_ties_take_smallest():
    assert describe([3, 3, 1, 1, 2]).mode == 1.0


def test_describe_single_value_and_empty():
    assert describe([7.5]).std == 0.0
    with pytest.raises(ValidationError):
        describe([])


def test_describe_constant_has_exact_mean():
    s = describe([0.1] * 7)
    assert s.mean == 0.1 and s.std == 0.0


def test_describe_country_table(countries):
    s = describe([c.gini for c in countries])
    assert (round(s.mean, 3), round(s.median, 3), s.mode, s.minimum, s.maximum, round(s.std, 3)) == \
        (0.369, 0.356, 0.318, 0.254, 0.591, 0.081)
    assert s.count == 75
    q1 = describe([c.shares[0] for c in countries])
    assert np.isclose(q1.maximum, 0.100) and np.isclose(q1.minimum, 0.028)
