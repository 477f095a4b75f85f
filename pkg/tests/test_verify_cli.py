"""Registry behaviour, class counts and the command-line interface."""

from __future__ import annotations

import json

import pytest

from tcorelab import verify
from tcorelab.cli import main


class TestClassCounts:
    def test_table1_counts(self):
        counts = verify.class_counts(9, "st-crank", 5, "srank-0-mod-4")
        assert counts == {k: 4 for k in range(5)}
        counts = verify.class_counts(9, "st-crank", 5, "srank-2-mod-4")
        assert counts == {k: 2 for k in range(5)}

    def test_weight_zero(self):
        for statistic in ("srank", "dyson-rank", "ag-crank", "st-crank",
                          "two-quotient-rank", "bg-rank"):
            counts = verify.class_counts(0, statistic, 5)
            assert counts[0] == 1
            assert sum(counts.values()) == 1

    def test_unknown_names(self):
        with pytest.raises(ValueError):
            verify.class_counts(5, "no-such-stat", 5)
        with pytest.raises(ValueError):
            verify.class_counts(5, "srank", 5, "no-such-filter")

    def test_five_core_filter(self):
        counts = verify.class_counts(9, "five-core-crank", 5, "is-5-core")
        assert counts == {k: 1 for k in range(5)}


class TestRegistry:
    def test_unknown_id(self):
        with pytest.raises(ValueError):
            verify.run_check("CHK-NOPE")

    def test_unknown_param(self):
        with pytest.raises(ValueError):
            verify.run_check("CHK-RAMBEST", bogus=3)

    def test_reports_are_stable(self):
        a = verify.run_check("CHK-RAMBEST", order=12)
        verify.clear_memo()
        b = verify.run_check("CHK-RAMBEST", order=12)
        assert a.to_json() == b.to_json()

    def test_memoized(self):
        a = verify.run_check("CHK-JTP", order=40)
        b = verify.run_check("CHK-JTP", order=40)
        assert a is b

    def test_counterexample_search(self):
        report = verify.search_counterexample("ab5jr", 60)
        assert report.status == "counterexample-found"
        assert report.ok()
        # pinned regression value from the scan: the lone 5-core of weight 0
        assert report.witness == {"n": 0, "r": 0, "j": 0, "weight": 0, "count": 1}

    def test_search_empty_bounds_fails_to_find(self):
        report = verify._scan_bg_counterexample(-1)
        assert report is None

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            verify.search_counterexample("nope", 10)

    def test_registry_ids_are_prefixed(self):
        assert all(cid.startswith("CHK-") for cid in verify.REGISTRY)
        assert len(verify.REGISTRY) >= 30


class TestCli:
    def test_stat(self, capsys):
        assert main(["stat", "--stat", "srank", "--partition", "5,3,1,1"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["value"] == 2

    def test_stat_empty_partition(self, capsys):
        assert main(["stat", "--stat", "ag-crank", "--partition", ""]) == 0
        assert json.loads(capsys.readouterr().out)["value"] == 0

    def test_decompose(self, capsys):
        assert main(["decompose", "--t", "5", "--partition", "9"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["core"]["parts"] == [4]
        assert out["quotient"][3]["parts"] == [1]

    def test_table_text(self, capsys):
        assert main(["table", "--name", "table1"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("Table 1")
        assert "(3^3)" in out

    def test_table_json(self, capsys):
        assert main(["table", "--name", "table2", "--json"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert len(out["orbits"]) == 6

    def test_verify_single(self, capsys):
        assert main(["verify", "--check", "CHK-RAMBEST", "--order", "12"]) == 0
        captured = capsys.readouterr()
        report = json.loads(captured.out)
        assert report["status"] == "pass"
        assert "PASS CHK-RAMBEST" in captured.err

    def test_verify_unknown_check(self, capsys):
        assert main(["verify", "--check", "CHK-NOPE"]) == 2

    def test_verify_counterexample_counts_as_pass(self, capsys):
        assert main(["verify", "--check", "CHK-AB5JR"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["status"] == "counterexample-found"

    def test_search(self, capsys):
        assert main(["search", "--family", "ab5jr", "--max-weight", "20"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["witness"]["weight"] == 0

    def test_series_integer(self, capsys):
        assert main(["series", "--expr", "partition-gf", "--order", "10"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["coefficients"] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]

    def test_series_tcore(self, capsys):
        assert main(["series", "--expr", "tcore-gf:5", "--order", "10"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["coefficients"][4] == 5

    def test_series_laurent_json(self, capsys):
        assert main(["series", "--expr", "crank-gf", "--order", "3"]) == 0
        out = json.loads(capsys.readouterr().out)
        # q^1 coefficient of the crank product is x + 1/x - 1
        assert {"monomial": {"x": 1}, "coeff": 1} in out["coefficients"][1]
        assert {"monomial": {"x": -1}, "coeff": 1} in out["coefficients"][1]
        assert {"monomial": {}, "coeff": -1} in out["coefficients"][1]

    def test_series_unknown(self, capsys):
        assert main(["series", "--expr", "nope"]) == 2

    def test_usage_error_exit_code(self):
        with pytest.raises(SystemExit) as exc:
            main(["table"])
        assert exc.value.code == 2
