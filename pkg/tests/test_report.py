import json

import pytest

from zdg.report import CharpolyRow, VerificationReport, known_errata, run_verification
from zdg.spectra import IntPolynomial
from zdg.wiener import WienerRow


@pytest.fixture(scope="module")
def report():
    return run_verification(12, timestamp="2026-01-01T00:00:00Z")


def test_rows_and_pass(report):
    assert [r.n for r in report.charpoly] == list(range(2, 13))
    assert [r.n for r in report.wiener] == list(range(2, 13))
    assert report.overall_pass


def test_round_trip(report):
    assert VerificationReport.loads(report.dumps()) == report
    assert VerificationReport.loads(report.dumps()).dumps() == report.dumps()


def test_schema(report):
    doc = json.loads(report.dumps())
    assert list(doc) == ["version", "timestamp", "charpoly", "wiener", "errata", "overall_pass"]
    assert doc["wiener"][0] == {"n": 2, "bfs": 0, "closed_form": 0, "match": True}
    assert all(isinstance(c, str) for c in doc["charpoly"][0]["oracle"]["coeffs"])


def test_errata_are_flagged(report):
    names = {e.name: e for e in report.errata}
    assert set(names) == {"charpoly-n7-constant", "charpoly-sign-expression", "wiener-denominator"}
    assert all(e.confirmed for e in report.errata)
    assert "x - 1" in names["charpoly-n7-constant"].computed
    assert names["charpoly-n7-constant"].printed.endswith("x + 1")
    assert "28" in names["wiener-denominator"].printed and "42" in names["wiener-denominator"].printed


def test_overall_pass_is_conjunction(report):
    bad = VerificationReport(
        report.version, report.timestamp, report.charpoly,
        report.wiener + (WienerRow(99, 1, 2),), report.errata)
    assert not bad.overall_pass
    assert "FAIL" in bad.summary()
    assert VerificationReport.loads(bad.dumps()) == bad


def test_tampered_flags_rejected(report):
    doc = report.to_json()
    doc["overall_pass"] = False
    with pytest.raises(ValueError):
        VerificationReport.from_json(doc)
    row = CharpolyRow(3, IntPolynomial((1,)), IntPolynomial((2,))).to_json()
    row["match"] = True
    with pytest.raises(ValueError):
        CharpolyRow.from_json(row)


def test_timestamp_from_source_date_epoch(monkeypatch):
    monkeypatch.setenv("SOURCE_DATE_EPOCH", "0")
    assert run_verification(2).timestamp == "1970-01-01T00:00:00Z"


def test_known_errata_stable():
    assert known_errata() == known_errata()
