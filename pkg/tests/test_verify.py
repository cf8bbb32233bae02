"""Verification layer: individual checks, negative controls, suite driver."""

from __future__ import annotations

import pytest

from hesscoh.hessenberg import parse_hessenberg
from hesscoh.verify import (
    CHECK_NAMES,
    CheckResult,
    VerificationReport,
    check_closed_form,
    check_closed_form_at,
    check_example_n4,
    check_fixed_point_exactness,
    check_flag_borel,
    check_hilbert,
    check_localization_vanishing,
    check_peterson,
    check_t_zero_at,
    negative_controls,
    poincare_product,
    run_suite,
)


def test_example_n4_passes():
    result = check_example_n4()
    assert result.passed
    assert result.scope == {"n": 4, "entries": 10}
    assert result.witness is None
    assert result.elapsed > 0


def test_closed_form_checks():
    assert check_closed_form_at(4).passed
    results = check_closed_form(3)
    assert [r.scope["n"] for r in results] == [1, 2, 3]
    assert all(r.passed and r.name == "closed-form" for r in results)


def test_t_zero_check():
    result = check_t_zero_at(4)
    assert result.passed and result.name == "t-zero"


def test_localization_check():
    result = check_localization_vanishing(parse_hessenberg((2, 3, 3)))
    assert result.passed
    assert result.scope["fixedPoints"] == 4
    assert result.scope["h"] == [2, 3, 3]


def test_exactness_check():
    result = check_fixed_point_exactness(parse_hessenberg((2, 3, 3)))
    assert result.passed
    assert result.scope["fixedPoints"] == 4
    minimal = check_fixed_point_exactness(parse_hessenberg((1, 2, 3)))
    assert minimal.passed and minimal.scope["fixedPoints"] == 1


def test_peterson_check():
    result = check_peterson(3)
    assert result.passed
    assert result.scope == {"n": 3, "h": [2, 3, 3]}
    with pytest.raises(ValueError):
        check_peterson(1)


def test_flag_borel_check_full_depth():
    result = check_flag_borel(3)
    assert result.passed
    assert result.scope["dimension"] == 6
    assert result.scope["parts"] == [
        "q-equals-f",
        "newton-expansion",
        "borel-equality",
        "dimension",
        "equivariant-borel-equality",
    ]


def test_flag_borel_check_beyond_groebner_cap():
    result = check_flag_borel(5)
    assert result.passed
    assert result.scope["parts"] == ["q-equals-f", "newton-expansion"]
    assert "dimension" not in result.scope


def test_poincare_product():
    assert poincare_product(parse_hessenberg((2, 3, 3))) == [1, 2, 1]
    assert poincare_product(parse_hessenberg((3, 3, 3))) == [1, 2, 2, 1]
    assert poincare_product(parse_hessenberg((1, 2, 3))) == [1]
    assert poincare_product(parse_hessenberg((1,))) == [1]


def test_hilbert_check():
    result = check_hilbert(parse_hessenberg((2, 3, 3)))
    assert result.passed
    assert result.scope["dimension"] == 4
    assert result.scope["fixedPointCount"] == 4


def test_check_result_contract():
    ok = CheckResult(name="demo", scope={}, passed=True)
    assert ok.to_dict() == {
        "name": "demo", "scope": {}, "passed": True, "witness": None,
        "elapsedSeconds": 0.0,
    }
    assert "elapsedSeconds" not in ok.to_dict(include_timing=False)
    with pytest.raises(ValueError):
        CheckResult(name="demo", scope={}, passed=False)
    bad = CheckResult(name="demo", scope={}, passed=False, witness={"j": 1})
    assert bad.witness == {"j": 1}


def test_negative_controls_all_catch():
    results = negative_controls()
    assert len(results) == 8
    for r in results:
        assert r.name.startswith("negative:")
        assert r.passed
        assert r.scope["mutation"] == "caught"
        assert r.scope["witness"] is not None
    targets = {r.name.removeprefix("negative:") for r in results}
    assert targets == set(CHECK_NAMES) - {"negative-controls"}


def test_run_suite_single_check():
    report = run_suite(["example-n4"])
    assert report.passed
    assert len(report.results) == 1
    payload = report.to_dict()
    assert payload["schemaVersion"] == 1
    assert payload["summary"] == {"total": 1, "passed": 1, "failed": 0}
    assert report.counts() == (1, 0)


def test_run_suite_rejects_unknown_names():
    with pytest.raises(ValueError, match="unknown check"):
        run_suite(["nonsense"])


def test_run_suite_all_small_cap():
    report = run_suite("all", n_max=3)
    assert report.passed
    local_n3 = [
        r for r in report.results if r.name == "localization" and r.scope["n"] == 3
    ]
    assert len(local_n3) == 5  # one per Hessenberg function at n = 3
    names = {r.name.split(":")[0] for r in report.results}
    assert names.issuperset({"example-n4", "closed-form", "hilbert", "negative"})


def test_run_suite_deterministic_order():
    first = run_suite(["closed-form", "t-zero"], n_max=3)
    second = run_suite(["closed-form", "t-zero"], n_max=3)
    assert [r.name for r in first.results] == [r.name for r in second.results]
    assert first.to_dict(include_timing=False) == second.to_dict(include_timing=False)


def test_run_suite_parallel_matches_serial():
    serial = run_suite(["closed-form", "t-zero", "localization"], n_max=3, jobs=1)
    parallel = run_suite(["closed-form", "t-zero", "localization"], n_max=3, jobs=2)
    assert serial.to_dict(include_timing=False) == parallel.to_dict(include_timing=False)


def test_report_rendering():
    passing = check_example_n4()
    failing = CheckResult(
        name="demo", scope={"n": 2}, passed=False, witness={"j": 1}
    )
    report = VerificationReport(results=[passing, failing], elapsed=0.5)
    assert not report.passed
    text = report.render_text()
    assert "PASS example-n4 n=4 entries=10 [" in text
    assert "FAIL demo n=2" in text
    assert "witness: {'j': 1}" in text
    assert text.endswith("1 passed, 1 failed out of 2 checks")
    bare = report.render_text(include_timing=False)
    assert "[" not in bare.replace("witness: {'j': 1}", "")
    payload = report.to_dict()
    assert payload["summary"] == {"total": 2, "passed": 1, "failed": 1}
    assert payload["elapsedSeconds"] == 0.5
