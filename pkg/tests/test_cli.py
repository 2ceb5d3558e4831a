"""Tests for the command-line front end and the export formats."""

from __future__ import annotations

import json
import re

import pytest

from layerlens.cli import analyze_drawing, main
from layerlens.core import Drawing, drawing_from_json, drawing_to_json
from layerlens.export import to_csv, to_dot, to_svg
from layerlens.families import opt2planar, planar4_family, special_s


@pytest.fixture
def k23_file(tmp_path):
    path = tmp_path / "k23.json"
    path.write_text(json.dumps(drawing_to_json(opt2planar(1))))
    return str(path)


class TestGen:
    def test_gen_analyze_round_trip(self, tmp_path, capsys):
        out = tmp_path / "s.json"
        assert main(["gen", "--family", "special_s", "--out", str(out)]) == 0
        assert main(["analyze", str(out)]) == 0
        text = capsys.readouterr().out
        assert "m=14" in text
        assert "max per edge=5" in text

    def test_gen_stdout(self, capsys):
        assert main(["gen", "--family", "planar4", "--size", "2"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert drawing_from_json(data) == planar4_family(2)

    def test_gen_bad_family_is_usage_error(self, capsys):
        assert main(["gen", "--family", "nosuch"]) == 1

    def test_gen_bad_size_is_usage_error(self, capsys):
        assert main(["gen", "--family", "planar5", "--size", "1"]) == 1


class TestAnalyze:
    def test_json_report(self, k23_file, capsys):
        assert main(["analyze", k23_file, "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["m"] == 6
        assert data["total_crossings"] == 3
        assert data["max_per_edge"] == 2
        assert data["brick_count"] == 1
        assert data["planar_edges"] == [[1, 1], [2, 3]]

    def test_malformed_json_is_data_error(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{nope")
        assert main(["analyze", str(bad)]) == 2

    def test_invalid_edge_reported_with_location(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text('{"p": 2, "q": 2, "edges": [[1, 1], [9, 1]]}')
        assert main(["analyze", str(bad)]) == 2
        assert "(9, 1)" in capsys.readouterr().err

    def test_empty_drawing_all_zero(self, tmp_path, capsys):
        path = tmp_path / "empty.json"
        path.write_text('{"p": 1, "q": 1, "edges": []}')
        assert main(["analyze", str(path), "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["m"] == 0
        assert data["total_crossings"] == 0
        assert data["max_per_edge"] == 0
        assert data["mutually_crossing"] == 0
        assert data["brick_count"] == 0
        assert data["pathwidth_width"] == 0

    def test_report_fields_match_library(self):
        r = analyze_drawing(special_s())
        assert (r.p, r.q, r.n, r.m) == (4, 4, 8, 14)
        assert r.max_per_edge == 5
        assert r.total_crossings == 19
        assert r.linear_bound_holds  # 19 >= 35/2


class TestSearchCommand:
    def test_basic(self, capsys):
        assert main(["search", "--n", "6", "--k", "2"]) == 0
        out = capsys.readouterr().out
        assert "best_m=7" in out

    def test_exceptional_case_labeled(self, capsys):
        assert main(["search", "--n", "8", "--k", "5"]) == 0
        out = capsys.readouterr().out
        assert "best_m=14" in out
        assert "exceeds" in out

    def test_csv_and_witness(self, tmp_path, capsys):
        csv = tmp_path / "row.csv"
        wit = tmp_path / "w.json"
        assert main(["search", "--n", "6", "--quasi", "3", "--csv", str(csv), "--witness", str(wit)]) == 0
        lines = csv.read_text().strip().splitlines()
        assert lines[0] == "n,constraint,best_m,nodes,millis"
        assert lines[1].startswith("6,h=3,8,")
        w = drawing_from_json(json.loads(wit.read_text()))
        assert w.m == 8

    def test_out_of_range_n_is_usage_error(self, capsys):
        assert main(["search", "--n", "40", "--k", "2"]) == 1

    def test_requires_exactly_one_constraint(self, capsys):
        assert main(["search", "--n", "6"]) == 1
        assert main(["search", "--n", "6", "--k", "1", "--quasi", "3"]) == 1


class TestMinimaxCommand:
    def test_complete(self, capsys):
        assert main(["minimax", "--complete", "2", "4"]) == 0
        assert ": 3" in capsys.readouterr().out

    def test_from_file(self, k23_file, capsys):
        assert main(["minimax", k23_file]) == 0
        assert ": 2" in capsys.readouterr().out

    def test_oversize_is_data_error(self, tmp_path, capsys):
        path = tmp_path / "big.json"
        edges = [[i, x] for i in range(1, 7) for x in range(1, 7)]
        path.write_text(json.dumps({"p": 6, "q": 6, "edges": edges}))
        assert main(["minimax", str(path)]) == 2

    def test_missing_input_is_usage_error(self, capsys):
        assert main(["minimax"]) == 1


class TestPathwidthCommand:
    def test_output_schema(self, k23_file, tmp_path, capsys):
        out = tmp_path / "pd.json"
        assert main(["pathwidth", k23_file, "--out", str(out)]) == 0
        assert "valid=True" in capsys.readouterr().out
        data = json.loads(out.read_text())
        assert set(data) == {"bags", "width"}
        assert all(re.fullmatch(r"[uv]\d+", v) for bag in data["bags"] for v in bag)


class TestBoundsCommands:
    def test_small_k_row(self, capsys):
        assert main(["bounds", "--k", "2", "--n", "11"]) == 0
        out = capsys.readouterr().out
        assert "5/3*n - 7/3 = 16" in out

    def test_large_k(self, capsys):
        assert main(["bounds", "--k", "6", "--n", "10"]) == 0
        out = capsys.readouterr().out
        assert "3.19*n" in out
        assert "h = 6" in out

    def test_crossing_bound(self, capsys):
        assert main(["crossing-bound", "--n", "8", "--m", "14"]) == 0
        out = capsys.readouterr().out
        assert "35/2" in out
        assert "inapplicable" in out  # 14 < 125/48 * 8

    def test_crossing_bound_applicable(self, capsys):
        assert main(["crossing-bound", "--n", "48", "--m", "125"]) == 0
        out = capsys.readouterr().out
        assert "cr >= 250" in out
        assert "[applicable]" in out

    def test_custom_table(self, tmp_path, capsys):
        table = tmp_path / "t.json"
        table.write_text(json.dumps({"t": 2, "alpha": ["1", "3/2"], "beta": ["1", "2"]}))
        assert main(["crossing-bound", "--n", "8", "--m", "14", "--table", str(table)]) == 0
        assert main(["crossing-bound", "--n", "8", "--m", "14", "--table", "/nonexistent.json"]) == 2

    def test_bad_table_is_data_error(self, tmp_path, capsys):
        table = tmp_path / "t.json"
        table.write_text(json.dumps({"alpha": ["1/2"], "beta": ["0"]}))
        assert main(["bounds", "--k", "0", "--table", str(table)]) == 2


class TestExport:
    def test_dot_round_trip(self, k23_file, capsys):
        assert main(["export", k23_file, "--format", "dot"]) == 0
        out = capsys.readouterr().out
        edges = set(re.findall(r"u(\d+) -- v(\d+)", out))
        assert {(int(a), int(b)) for a, b in edges} == set(opt2planar(1).edges)

    def test_svg_crossing_annotation(self):
        svg = to_svg(opt2planar(1))
        assert "crossings: 3" in svg
        assert svg.count("<line") == 6

    def test_csv_rows(self):
        csv = to_csv(planar4_family(2))
        lines = csv.strip().splitlines()
        assert lines[0] == "u,v"
        assert len(lines) == 1 + 17

    def test_dot_ranks(self):
        dot = to_dot(Drawing(2, 1, frozenset([(1, 1)])))
        assert "rank=same" in dot

    def test_unknown_format_is_usage_error(self, k23_file, capsys):
        assert main(["export", k23_file, "--format", "png"]) == 1

    def test_export_to_file(self, k23_file, tmp_path):
        out = tmp_path / "d.svg"
        assert main(["export", k23_file, "--format", "svg", "--out", str(out)]) == 0
        assert out.read_text().startswith("<svg")


def test_json_round_trip_property():
    for d in (opt2planar(3), special_s(), Drawing(1, 1, frozenset())):
        assert drawing_from_json(json.loads(json.dumps(drawing_to_json(d)))) == d
