import json
from fractions import Fraction
from importlib import resources
from itertools import product

import jsonschema
import pytest
from hypothesis import given
from hypothesis import strategies as st

from factor_forge.errors import OutOfScopeError, SearchExhaustedError
from factor_forge.thresholds import (INFINITY, ThresholdParams, beta, big_n, ceil_div, crosscheck,
                                     feasible_count, feasible_x_set, mu_bounds, pi, pi_status,
                                     sigma, sigma_a1_formula, sigma_bounds, sigma_by_search,
                                     sigma_regular_a1, sigma_upper_formula)

GRID = list(product(range(1, 7), range(0, 5), range(1, 7), range(1, 5)))

# Cells where the (r even, a odd) closed form exceeds the interval search.
# At these parameters the formula's own witness degree d has d + s <= r + a,
# so every (d, d+s)-graph is already a single (r, r+a)-factor.
EO_SMALL_D_CELLS = {
    (2, 0, 1, 1): (4, 2), (2, 0, 3, 2): (6, 4), (2, 0, 5, 3): (8, 6),
    (2, 2, 3, 1): (4, 2), (2, 2, 5, 2): (6, 4), (2, 4, 5, 1): (4, 2),
    (4, 0, 3, 1): (8, 4), (4, 2, 5, 1): (8, 4), (6, 0, 5, 1): (12, 6),
}


def test_ceil_div():
    assert ceil_div(7, 2) == 4 and ceil_div(-1, 3) == 0 and ceil_div(6, 3) == 2
    with pytest.raises(ZeroDivisionError):
        ceil_div(1, 0)


def test_parity_labels():
    assert ThresholdParams(2, 0, 2).parity == "EE"
    assert ThresholdParams(1, 0, 2).parity == "OE"
    assert ThresholdParams(2, 0, 1).parity == "EO"
    assert ThresholdParams(3, 0, 1).parity == "OO"
    with pytest.raises(OutOfScopeError):
        ThresholdParams(1, 0, 1, 0)


@pytest.mark.parametrize("params, expected", [
    # 2 * ceil(9 / 1) + 4 * 2 = 26; N sits strictly below sigma here
    ((2, 0, 2, 1), 2), ((2, 0, 1, 5), 26), ((1, 0, 1, 1), 0),
])
def test_big_n_and_beta(params, expected):
    assert big_n(*params) == expected
    assert beta(*params) == expected


def test_big_n_undefined_for_a_zero():
    with pytest.raises(ZeroDivisionError):
        big_n(2, 0, 0, 1)
    with pytest.raises(ZeroDivisionError):
        beta(2, 0, 0, 1)


@pytest.mark.parametrize("params, expected", [
    ((2, 0, 1, 5), 28), ((1, 0, 1, 1), 1), ((4, 0, 1, 1), 16), ((3, 0, 1, 1), 10),
    ((2, 0, 2, 1), 2), ((3, 0, 2, 2), 16),
])
def test_sigma_values(params, expected):
    assert sigma(*params) == expected


def test_sigma_exception_branches():
    # r odd, a even, t = 1, a >= r + s + 1
    assert sigma(1, 0, 2, 1) == 1
    assert sigma(1, 1, 2, 1) == 1 * ceil_div(3, 2) + 1
    # r, a odd, t = 1, a >= r + s
    assert sigma(1, 0, 1, 1) == 1
    assert sigma(3, 0, 3, 1) == 3
    assert sigma(3, 1, 3, 1) == 3 * ceil_div(4, 3) + 1


def test_sigma_out_of_scope():
    for params in ((0, 0, 1, 1), (2, 0, 0, 1)):
        with pytest.raises(OutOfScopeError):
            sigma(*params)


@pytest.mark.parametrize("r", [3, 4, 5, 6, 7, 8])
def test_regular_a1_matches_general_form(r):
    expected = r * r if r % 2 == 0 else r * r + 1
    assert sigma_regular_a1(r) == sigma(r, 0, 1, 1) == expected
    assert sigma_a1_formula(r, 0, 1, 1) == expected


def test_a1_formula_branches():
    assert sigma_a1_formula(2, 0, 1, 5) == 28
    assert sigma_a1_formula(3, 1, 1, 2) == 2 * 9 + 6 + 3 - 3 + 1
    assert sigma_a1_formula(2, 2, 1, 1) == 11
    with pytest.raises(OutOfScopeError):
        sigma_a1_formula(2, 0, 2, 1)


def test_feasible_worked_example():
    fs = feasible_x_set(29, 0, 2, 1)
    assert list(fs.members) == [10, 11, 12, 13, 14]
    assert fs.lower == Fraction(29, 3) and fs.upper == Fraction(29, 2)
    assert (fs.lower_open, fs.upper_open) == (True, False)
    assert fs.side_condition_met


def test_feasible_closed_both_ends():
    fs = feasible_x_set(4, 0, 2, 2)
    assert list(fs.members) == [1, 2]
    assert not fs.lower_open and not fs.upper_open


def test_feasible_side_condition_fallback():
    fs = feasible_x_set(3, 0, 3, 1)
    assert list(fs.members) == [1]
    assert not fs.side_condition_met
    assert not fs.interval_contains(1)


def test_feasible_open_ends_exclude_integers():
    fs = feasible_x_set(9, 0, 3, 2)   # r odd, a even: (9/5, 3)
    assert list(fs.members) == [2]
    fs = feasible_x_set(12, 3, 3, 2)  # 15/5 = 3 excluded, 12/3 = 4 excluded
    assert list(fs.members) == []


def test_feasible_out_of_scope():
    with pytest.raises(OutOfScopeError):
        feasible_x_set(4, 0, 0, 1)


@given(st.integers(1, 60), st.integers(0, 8), st.integers(1, 8), st.integers(0, 8),
       st.integers(-2, 70))
def test_feasible_membership_probe(d, s, r, a, x):
    fs = feasible_x_set(d, s, r, a)
    members = list(fs.members)
    assert members == list(range(members[0], members[-1] + 1)) if members else True
    lo, hi = Fraction(d + s, r + a) if r + a else None, Fraction(d, r)
    above = lo is None or (x > lo if fs.lower_open else x >= lo)
    below = x < hi if fs.upper_open else x <= hi
    direct = above and below
    if not fs.side_condition_met and x == 1 and r <= d and d + s <= r + a:
        direct = True
    assert (x in fs) == direct


@given(st.integers(1, 60), st.integers(0, 8), st.integers(1, 4), st.integers(1, 4))
def test_even_even_endpoints_are_members(d, s, half_r, half_a):
    r, a = 2 * half_r, 2 * half_a
    fs = feasible_x_set(d, s, r, a)
    lo, hi = ceil_div(d + s, r + a), d // r
    if lo <= hi:
        assert lo in fs and hi in fs


@pytest.mark.parametrize("params, cap, expected", [
    ((2, 0, 1, 5), 60, 28), ((2, 0, 2, 1), 20, 2), ((3, 0, 2, 2), 60, 16),
])
def test_sigma_by_search_examples(params, cap, expected):
    assert sigma_by_search(ThresholdParams(*params), cap) == expected


def test_sigma_by_search_exhausted():
    with pytest.raises(SearchExhaustedError):
        sigma_by_search(ThresholdParams(2, 0, 1, 5), 20)


def test_sigma_bounds():
    assert sigma_bounds(2, 0, 2, 1) == (2, 5)
    lo, hi = sigma_bounds(3, 1, 2, 2)
    assert lo <= sigma(3, 1, 2, 2) <= hi
    assert sigma_upper_formula(2, 0, 1, 5) == 31
    with pytest.raises(OutOfScopeError):
        sigma_bounds(2, 0, 1, 5)


def test_bound_chain_on_grid():
    for r, s, a, t in GRID:
        assert big_n(r, s, a, t) <= sigma(r, s, a, t) <= sigma_upper_formula(r, s, a, t)


def test_search_agrees_with_closed_form_except_known_cells():
    mismatched = {}
    for cell in GRID:
        p = ThresholdParams(*cell)
        value = sigma(p)
        found = sigma_by_search(p, value + 3 * (p.r + p.a))
        if found != value:
            mismatched[cell] = (value, found)
    assert mismatched == EO_SMALL_D_CELLS


@pytest.mark.parametrize("cell", sorted(EO_SMALL_D_CELLS))
def test_known_cells_are_small_degree_artifacts(cell):
    r, s, a, t = cell
    formula, found = EO_SMALL_D_CELLS[cell]
    assert ThresholdParams(*cell).parity == "EO"
    for d in range(found, formula):
        fs = feasible_x_set(d, s, r, a)
        assert len(fs.members) >= t
        if not fs.side_condition_met:
            assert d + s <= r + a and 1 in fs


@pytest.mark.parametrize("params, expected", [
    ((3, 2, 0, 1), INFINITY), ((1, 0, 1, 1), 1), ((2, 0, 1, 1), 2), ((2, 0, 2, 1), 2),
    ((2, 1, 1, 1), INFINITY),
])
def test_pi_values(params, expected):
    assert pi(*params) == expected


def test_pi_status_labels():
    assert pi_status(1, 0, 2, 1) == (1, "conjectured")
    assert pi_status(3, 2, 2, 1) == (INFINITY, "conjectured")
    assert pi_status(3, 0, 4, 1)[1] == "conjectured"
    assert pi_status(3, 0, 3, 1)[1] == "proved"
    with pytest.raises(OutOfScopeError):
        pi_status(3, 0, 2, 1)


def test_pi_case_formulas():
    # r, a odd
    assert pi(1, 0, 3, 1) == big_n(2, 0, 2, 1) - 2 - 1  # 2*1 + 0 = 2 is 0 mod 2
    assert pi(1, 1, 3, 1) == big_n(2, 1, 2, 1) - 1
    # r even, a odd
    assert pi(2, 0, 3, 1) == big_n(2, 0, 2, 1) - 2
    assert pi(2, 1, 3, 1) == big_n(2, 1, 2, 1)


@pytest.mark.parametrize("r, expected", [(3, (10, 10)), (4, (15, 37)), (1, (2, 2))])
def test_mu_bounds(r, expected):
    assert mu_bounds(r) == expected


def test_crosscheck_all_agree_at_28():
    rep = crosscheck(2, 0, 1, 5)
    for k in ("sigma", "sigma_a1", "sigma_search"):
        assert rep.values[k] == 28
    assert rep.values["N"] == 26
    assert not rep.discrepancies
    assert not rep.violations


def test_crosscheck_reports_a1_conflict():
    rep = crosscheck(2, 2, 1, 1)
    assert rep.values["sigma_a1"] == 11 and rep.values["sigma"] == 8
    assert rep.discrepancy("sigma_a1", "sigma") == 3
    assert rep.discrepancy("sigma", "sigma_a1") == -3


def test_crosscheck_even_even():
    rep = crosscheck(4, 0, 2, 2)
    assert rep.values["sigma"] == rep.values["N"] == rep.values["sigma_search"]
    assert ("sigma", "sigma_even_even") in rep.agreements


def test_crosscheck_formula_names_unique_and_json_valid():
    schema = json.loads(resources.files("factor_forge").joinpath("schemas/crosscheck.json")
                        .read_text(encoding="utf-8"))
    for cell in [(2, 2, 1, 1), (3, 0, 2, 1), (3, 0, 1, 1), (2, 0, 2, 3), (1, 4, 6, 4)]:
        doc = crosscheck(*cell).to_json()
        jsonschema.validate(doc, schema)
        assert len(doc["values"]) == len(set(doc["values"]))
        json.dumps(doc)


def test_a1_conflict_differences_on_grid():
    for r, s, a, t in GRID:
        if a != 1 or s < 2:
            continue
        diff = crosscheck(r, s, a, t).discrepancy("sigma_a1", "sigma")
        assert diff == (r + 1 if r % 2 == 0 else r)


def test_feasible_count():
    assert feasible_count(29, 0, 2, 1) == 5
