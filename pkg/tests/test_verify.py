"""Verification registry: report structure, determinism, pass behavior."""

import importlib

import pytest

from maxdiv import (
    CHECK_IDS,
    VerificationReport,
    format_report,
    report_to_dict,
    verify,
    verify_all,
)

verify_module = importlib.import_module("maxdiv.verify")

ALGEBRAIC_IDS = ("T2_1", "T2_2", "T2_5", "T2_6", "T2_7", "R2_1")
CONVERGENCE_IDS = ("T2_3", "T2_4")
MONTE_CARLO_IDS = ("T3_1", "T3_2", "T3_3")


def test_registry_lists_eleven_checks():
    assert len(CHECK_IDS) == 11
    assert set(ALGEBRAIC_IDS) | set(CONVERGENCE_IDS) | set(MONTE_CARLO_IDS) == set(CHECK_IDS)


def test_unknown_id_is_rejected():
    with pytest.raises(ValueError):
        verify("T9_9", seed=0)


@pytest.mark.parametrize("theorem_id", ALGEBRAIC_IDS)
def test_algebraic_checks_pass_within_1e_12(theorem_id):
    report = verify(theorem_id, seed=0)
    assert report.mode == "algebraic"
    assert report.tolerance == 1e-12
    assert report.passed, format_report(report)
    assert report.discrepancy < 1e-12


@pytest.mark.parametrize("theorem_id", CONVERGENCE_IDS)
def test_convergence_checks_pass_within_1e_3(theorem_id):
    report = verify(theorem_id, seed=0)
    assert report.mode == "algebraic"
    assert report.tolerance == 1e-3
    assert report.passed, format_report(report)
    assert "sup@n10000" in report.detail


def test_monte_carlo_checks_use_the_ks_band():
    report = verify("T3_1", seed=0)
    assert report.mode == "monte-carlo"
    assert report.tolerance == pytest.approx(1.628 / 100_000**0.5, rel=0, abs=1e-15)
    assert report.passed, format_report(report)


def test_reports_are_deterministic_per_seed():
    a = verify("T3_2", seed=3)
    b = verify("T3_2", seed=3)
    c = verify("T3_2", seed=4)
    assert a == b
    assert a.discrepancy != c.discrepancy


def test_passed_mirrors_discrepancy_against_tolerance():
    for theorem_id in ("T2_1", "T3_3"):
        report = verify(theorem_id, seed=0)
        assert report.passed == (report.discrepancy < report.tolerance)


def test_negative_control_detail_is_reported():
    report = verify("T3_3", seed=0)
    assert "control" in report.detail
    assert "must fail" in report.detail
    assert report.passed, format_report(report)


def test_report_dict_shape():
    report = verify("T2_1", seed=5)
    payload = report_to_dict(report)
    assert payload == {
        "theorem_id": "T2_1",
        "mode": "algebraic",
        "discrepancy": report.discrepancy,
        "tolerance": 1e-12,
        "pass": True,
        "seed": 5,
        "detail": "",
    }


def test_format_report_line():
    report = VerificationReport("T2_1", "algebraic", 1e-15, 1e-12, True, 0, "")
    line = format_report(report)
    assert line.startswith("T2_1")
    assert "PASS" in line and "FAIL" not in line
    assert "discrepancy=1.000000e-15" in line
    failing = VerificationReport("T3_3", "monte-carlo", 0.5, 0.005, False, 0, "note")
    assert "FAIL" in format_report(failing)
    assert "[note]" in format_report(failing)


def test_verify_all_runs_every_check_in_order():
    reports = verify_all(seed=0)
    assert [r.theorem_id for r in reports] == list(CHECK_IDS)
    assert all(r.passed for r in reports), [format_report(r) for r in reports]


def test_checks_draw_from_a_reserved_stream_block():
    assert verify_module.STREAM_BLOCK >= len(CHECK_IDS)
