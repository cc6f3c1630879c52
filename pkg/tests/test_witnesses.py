"""Witness fixture integrity and the check_witness reports."""

import math

import pytest

from sym3inv import check_witness, witness_tensor
from sym3inv.witnesses import (
    j4_tensor,
    load_fixture,
    m6_harmonic_parts,
)


def test_all_cases_load():
    for case in ("L6", "K4", "J6", "L4", "M6", "J4"):
        fix = load_fixture(case)
        assert fix["case"] == case


def test_unknown_case_rejected():
    with pytest.raises(ValueError):
        load_fixture("X9")
    with pytest.raises(ValueError):
        check_witness("X9")


def test_family_cases_have_no_single_tensor():
    with pytest.raises(ValueError):
        witness_tensor("M6")


def test_k4_fixture_matches_independent_closed_form_evaluation():
    # recompute the frozen component values from scratch
    s2, s3, s6 = math.sqrt(2), math.sqrt(3), math.sqrt(6)
    expected = [
        3 / (5 * s2), s3 / 10, 1 / 10, 4 * s2 / 15 - 1 / s3, 1 / 3 + 1 / s6,
        -s2 / 15 + 1 / s3, 3 * s3 / 10, -9 / 10, s3 / 10, 13 / 10,
    ]
    stored = load_fixture("K4")["components"]
    assert all(abs(a - b) < 1e-15 for a, b in zip(stored, expected))


def test_j6_fixture_matches_independent_closed_form_evaluation():
    r = math.sqrt(313)
    x = math.sqrt(0.5 * (149 - r)) / 6
    y = (-215 + 7 * r) / (5 * math.sqrt(8053043 - 308071 * r))
    q = (121 * (2963 - 103 * r) / (10 * (-215 + 7 * r))) * math.sqrt(
        (298 - 2 * r) / (648164815 - 26977811 * r))
    z = (3966519 - 219867 * r) / (
        5 * math.sqrt(648164815 - 26977811 * r) * (-215 + 7 * r))
    expected = [x - 18 * y, q, z, -6 * y, 1.0, -x - 6 * y, 3 * q, 1 + z, q, -1 + 3 * z]
    stored = load_fixture("J6")["components"]
    assert all(abs(a - b) < 1e-15 for a, b in zip(stored, expected))


def test_j6_fixture_consistent_with_decimal_components():
    fix = load_fixture("J6")
    for exact, rounded in zip(fix["components"], fix["decimal_components"]):
        assert abs(exact - rounded) < 5e-4


def test_check_l6_passes():
    report = check_witness("L6")
    assert report["pass"]
    assert report["invariants"]["L6"] == "-2/1"
    checked = {c["invariant"] for c in report["checks"]}
    assert checked == {"I2", "J2", "I4", "J4", "I6", "L6", "I10", "K4", "L4", "J6", "M6"}


def test_check_k4_passes():
    report = check_witness("K4")
    assert report["pass"]
    assert abs(report["invariants"]["K4"] - 8 / 9) < 1e-10


def test_check_j6_passes():
    report = check_witness("J6")
    assert report["pass"]
    # designated zeros vanish at closed-form precision
    zero_checks = {c["invariant"]: c for c in report["checks"]
                   if c["invariant"] in ("K4", "L4", "L6")}
    assert all(abs(c["computed"]) < 1e-12 for c in zero_checks.values())


def test_check_l4_reports_known_precision_issue():
    report = check_witness("L4")
    assert not report["pass"]
    assert "known_issue" in report
    by_name = {c["invariant"]: c for c in report["checks"]}
    # all stated values agree; only the L6 zero misses its tolerance
    failing = [c["invariant"] for c in report["checks"] if not c["ok"]]
    assert failing == ["L6"]
    assert 5e-3 < abs(by_name["L6"]["computed"]) < 1e-2


def test_check_m6_pair_passes():
    report = check_witness("M6")
    assert report["pass"]
    assert len(report["instances"]) == 2
    first, second = report["instances"]
    assert first["invariants"]["M6"] == "0/1"
    assert abs(second["invariants"]["M6"] - 625) < 1e-9


def test_check_m6_custom_params():
    report = check_witness("M6", params=(1, 2, 3, 2))
    assert report["pass"]
    inst = report["instances"][0]
    assert inst["invariants"]["K4"] == "0/1"
    assert inst["invariants"]["I10"] == "0/1"
    # L4 = 750*a*b*c*d is nonzero here and no check constrains it
    assert inst["invariants"]["L4"] != "0/1"


def test_check_m6_explicit_params_match_recorded_instance():
    r = math.sqrt(2) / 2
    report = check_witness("M6", params=(r, r, 0, 1))
    assert report["pass"]
    inst = report["instances"][0]
    assert abs(inst["invariants"]["M6"] - 625) < 1e-9
    checked = {c["invariant"] for c in inst["checks"]}
    assert {"I2", "J2", "I4", "J4", "M6"} <= checked


def test_m6_family_construction():
    h = m6_harmonic_parts(0, 0, 1, 1)
    assert h.vector == (0, 0, 5)
    assert h.deviator.components == (0, 0, 0, 0, 1, 0, 0)


def test_check_j4_family_passes_and_reports_discrepancy():
    report = check_witness("J4")
    assert report["pass"]
    assert len(report["thetas"]) == 32
    assert report["j4_monotone_on_first_quarter"]
    assert abs(report["j4_at_zero"] - 2.0) < 1e-9
    cf = report["closed_form_report"]
    assert cf["j4_max_deviation"] < 1e-9
    assert not cf["m6_form_matches"]
    assert cf["m6_max_deviation"] > 0.1


def test_check_j4_single_theta():
    report = check_witness("J4", theta=3 * math.pi / 4)
    assert report["pass"]
    assert len(report["thetas"]) == 1


def test_j4_construction_at_reference_angle():
    from sym3inv import invariants_of

    iv = invariants_of(j4_tensor(3 * math.pi / 4))
    assert abs(iv["J4"] - 1.0) < 1e-12
    assert abs(iv["M6"] - 0.25) < 1e-12
