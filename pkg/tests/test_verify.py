import csv
import io
import json

import pytest

from quadclass.verify import (
    CHECK_KEYS,
    DEFAULT_BASES,
    columns,
    fundamental_discriminants,
    record_row,
    to_csv,
    to_json,
    to_text,
    verify_discriminant,
    verify_range,
)

from helpers import h_by_reduced_forms, is_fundamental


class TestEnumeration:
    def test_matches_oracle_to_2000(self):
        got = [d.D for d in fundamental_discriminants(-2000, -5)]
        want = [D for D in range(-5, -2001, -1) if is_fundamental(D)]
        assert got == want

    def test_descending_and_edges(self):
        ds = [d.D for d in fundamental_discriminants(-40, -5)]
        assert ds == sorted(ds, reverse=True)
        assert -7 in ds and -8 in ds
        assert -12 not in ds  # 4 * (-3): not fundamental
        assert -9 not in ds

    def test_excluded_pair_skipped(self):
        ds = [d.D for d in fundamental_discriminants(-10, -1)]
        assert -3 not in ds and -4 not in ds
        assert ds == [-7, -8]


class TestVerifyDiscriminant:
    def test_record_shape(self):
        rec = verify_discriminant(-15, bases=(2, 3, 4, 5))
        assert (rec.D, rec.N, rec.case, rec.h) == (-15, 15, "Odd", 2)
        # 3 and 5 divide N = 15: those columns are empty for every family
        for family in ("cycle", "floor", "interval"):
            assert rec.formulas[f"{family}_B3"] is None
            assert rec.formulas[f"{family}_B5"] is None
            assert rec.formulas[f"{family}_B2"] == 2
            assert rec.formulas[f"{family}_B4"] == 2
        # only 4 = 2 * 2 regroups; 4 is coprime to 15 so it runs
        assert rec.factored_ok is True
        assert rec.checks["base2"] is True
        assert rec.checks["base4"] is True
        # 3 | 15: the mod-3 checks don't apply, nor do the even-D ones
        for key in ("base6", "sixth", "base12", "quarter", "sixth_pair"):
            assert rec.checks[key] is None
        assert rec.agree and rec.passed and rec.error is None

    def test_even_record(self):
        rec = verify_discriminant(-40, bases=(3, 7, 9))
        assert rec.case == "D3" and rec.h == 2
        assert rec.checks["quarter"] is True
        assert rec.checks["sixth_pair"] is True
        for key in ("base2", "base4", "base6", "sixth", "base12"):
            assert rec.checks[key] is None
        assert rec.passed

    def test_no_factored_bases(self):
        rec = verify_discriminant(-7, bases=(2, 3, 5))  # no composite base
        assert rec.factored_ok is None
        assert rec.passed


class TestVerifyRange:
    def test_agrees_with_form_counting(self):
        report = verify_range(-300, -5, bases=(2, 3, 5, 10))
        assert report.ok
        for rec in report.records:
            assert rec.h == h_by_reduced_forms(rec.D)

    def test_summary(self):
        report = verify_range(-100, -5, bases=(2, 3))
        s = report.summary
        assert s["discriminants"] == len(report.records)
        assert s["passed"] == s["discriminants"]
        assert s["failed"] == 0
        assert s["first_failure"] is None
        assert s["all_passed"] is True
        assert s["elapsed_seconds"] >= 0

    def test_jobs_deterministic(self):
        one = verify_range(-150, -5, bases=(2, 3, 4), jobs=1)
        two = verify_range(-150, -5, bases=(2, 3, 4), jobs=2)
        assert one.records == two.records

    def test_bases_sorted_deduped(self):
        report = verify_range(-20, -5, bases=(5, 2, 5, 3))
        assert report.bases == (2, 3, 5)

    def test_validation(self):
        with pytest.raises(ValueError):
            verify_range(-5, -100)
        with pytest.raises(ValueError):
            verify_range(-100, -5, bases=())
        with pytest.raises(ValueError):
            verify_range(-100, -5, bases=(1, 2))
        with pytest.raises(ValueError):
            verify_range(-100, -5, jobs=0)

    def test_range_with_no_fundamentals(self):
        report = verify_range(-6, -5, bases=(2,))
        assert report.records == [] and report.ok
        assert report.summary["discriminants"] == 0


class TestReports:
    def test_csv_round_trip(self):
        report = verify_range(-60, -5, bases=(2, 3, 4))
        rows = list(csv.DictReader(io.StringIO(to_csv(report))))
        assert len(rows) == len(report.records)
        assert list(rows[0]) == columns(report.bases)
        first = rows[0]
        rec = report.records[0]
        assert int(first["D"]) == rec.D
        assert int(first["h"]) == rec.h
        assert first["passed"] == "true"
        assert first["error"] == ""
        # None formula cells serialize as empty strings
        for key, value in rec.formulas.items():
            assert first[key] == ("" if value is None else str(value))

    def test_json_round_trip(self):
        report = verify_range(-60, -5, bases=(2, 3))
        payload = json.loads(to_json(report))
        assert payload["from"] == -60 and payload["to"] == -5
        assert payload["bases"] == [2, 3]
        assert payload["summary"] == report.summary
        assert len(payload["records"]) == len(report.records)
        assert payload["records"][0]["D"] == report.records[0].D
        assert payload["records"][0]["passed"] is True

    def test_text_report(self):
        report = verify_range(-40, -5, bases=(2,))
        text = to_text(report)
        lines = text.splitlines()
        assert all(line.startswith("pass") for line in lines[:-1])
        assert "D=-7" in text and "D=-40" in text
        assert "passed, 0 failed" in lines[-1]
        assert "first failure" not in text

    def test_row_schema_complete(self):
        report = verify_range(-30, -5, bases=(2, 3))
        cols = columns(report.bases)
        row = record_row(report.records[0], report.bases)
        assert list(row) == cols


class TestFailurePath:
    def test_wrong_formula_is_caught(self, monkeypatch):
        import quadclass.verify as V

        real = V.h_from_ek

        def skewed(disc, base):
            res = real(disc, base)
            if disc.D == -23 and base == 3:
                return type(res)(res.disc, res.h + 1, res.method, res.raw_sum)
            return res

        monkeypatch.setattr(V, "h_from_ek", skewed)
        report = verify_range(-30, -5, bases=(2, 3))
        assert not report.ok
        bad = [r for r in report.records if not r.passed]
        assert [r.D for r in bad] == [-23]
        assert bad[0].formulas["interval_B3"] == 4  # h(-23) = 3
        assert report.summary["first_failure"] == -23
        text = to_text(report)
        assert "FAIL" in text and "interval_B3" in text
        assert "first failure: D=-23" in text


def test_default_bases():
    assert DEFAULT_BASES == tuple(range(2, 14))
    assert CHECK_KEYS == (
        "base2", "base4", "base6", "sixth", "base12", "quarter", "sixth_pair",
    )
