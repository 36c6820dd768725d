import json

import pytest

import skewcount.cli as cli
from skewcount.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCount:
    @pytest.mark.parametrize("method", ["det", "dp", "enum", "tilings", "gv"])
    def test_methods_agree(self, capsys, method):
        code, out, _ = run(capsys, "count", "2,1", "--method", method)
        assert code == 0
        assert out == "5\n"

    def test_default_method(self, capsys):
        code, out, _ = run(capsys, "count", "9,7,6,2/3,1")
        assert code == 0
        assert out == "399\n"

    def test_unit_hexagon_tilings(self, capsys):
        code, out, _ = run(capsys, "count", "1", "--method", "tilings")
        assert code == 0
        assert out == "2\n"

    def test_parse_error(self, capsys):
        code, out, err = run(capsys, "count", "1,2")
        assert code == 2
        assert out == ""
        assert err.startswith("error:")

    def test_cap_exceeded(self, capsys):
        code, _, err = run(capsys, "count", "3,2,1", "--method", "enum", "--cap", "2")
        assert code == 3
        assert "cap" in err

    def test_env_cap(self, capsys, monkeypatch):
        monkeypatch.setenv("SKEWCOUNT_CAP", "2")
        code, _, _ = run(capsys, "count", "3,2,1", "--method", "enum")
        assert code == 3

    def test_flag_overrides_env(self, capsys, monkeypatch):
        monkeypatch.setenv("SKEWCOUNT_CAP", "2")
        code, out, _ = run(capsys, "count", "3,2,1", "--method", "enum", "--cap", "100")
        assert code == 0
        assert out == "14\n"

    def test_bad_env_cap(self, capsys, monkeypatch):
        monkeypatch.setenv("SKEWCOUNT_CAP", "lots")
        code, _, err = run(capsys, "count", "1", "--method", "enum")
        assert code == 2
        assert "SKEWCOUNT_CAP" in err

    def test_det_ignores_cap(self, capsys):
        code, out, _ = run(capsys, "count", "5,4,3,2,1", "--cap", "1")
        assert code == 0
        assert out == "132\n"


class TestVerify:
    def test_single_shape_report(self, capsys):
        code, out, _ = run(capsys, "verify", "3,1/2")
        assert code == 0
        (line,) = out.splitlines()
        report = json.loads(line)
        assert report["shape"] == "3,1/2"
        assert report["agree"] is True
        assert set(report["counts"]) == {"det", "dp", "enum", "tilings", "gv_enum", "gv_det"}
        assert set(report["counts"].values()) == {"4"}
        assert set(report["elapsed_ms"]) == set(report["counts"])

    def test_box_sweep(self, capsys):
        code, out, _ = run(capsys, "verify", "--box", "2x2")
        assert code == 0
        lines = out.splitlines()
        # 6 partitions in the box, each with its subpartitions: 1+2+3+3+5+6
        assert len(lines) == 20
        reports = [json.loads(line) for line in lines]
        assert all(r["agree"] for r in reports)
        shapes = [r["shape"] for r in reports]
        assert shapes[0] == "0"
        assert len(set(shapes)) == len(shapes)

    def test_box_sweep_parallel_matches_serial(self, capsys):
        code, serial, _ = run(capsys, "verify", "--box", "2x1")
        assert code == 0
        code, parallel, _ = run(capsys, "verify", "--box", "2x1", "--jobs", "2")
        assert code == 0

        def strip_timings(text):
            rows = [json.loads(line) for line in text.splitlines()]
            for row in rows:
                row.pop("elapsed_ms")
            return rows

        assert strip_timings(serial) == strip_timings(parallel)

    def test_disagreement_exits_1(self, capsys, monkeypatch):
        monkeypatch.setattr(cli, "kreweras_count", lambda shape: 999)
        code, out, err = run(capsys, "verify", "1")
        assert code == 1
        report = json.loads(out.splitlines()[0])
        assert report["agree"] is False
        assert report["counts"]["det"] == "999"
        assert "disagree" in err and "1" in err

    def test_bad_box(self, capsys):
        code, _, err = run(capsys, "verify", "--box", "2by2")
        assert code == 2
        assert err.startswith("error:")

    def test_box_and_shapes_conflict(self, capsys):
        code, _, err = run(capsys, "verify", "--box", "2x2", "1")
        assert code == 2
        assert err.startswith("error:")

    def test_no_target(self, capsys):
        code, _, err = run(capsys, "verify")
        assert code == 2
        assert err.startswith("error:")


class TestEnumerate:
    def test_paths_text(self, capsys):
        code, out, _ = run(capsys, "enumerate", "1", "paths")
        assert code == 0
        assert out == "NE\nEN\n"

    def test_paths_limit_marker(self, capsys):
        code, out, _ = run(capsys, "enumerate", "2,1", "paths", "--limit", "2")
        assert code == 0
        assert out.splitlines() == ["NNEE", "NENE", "... truncated: showing 2 of 5"]

    def test_limit_covers_everything(self, capsys):
        code, out, _ = run(capsys, "enumerate", "1", "paths", "--limit", "9")
        assert code == 0
        assert "truncated" not in out

    def test_paths_json(self, capsys):
        code, out, _ = run(capsys, "enumerate", "1", "paths", "--format", "json")
        assert code == 0
        items = [json.loads(line) for line in out.splitlines()]
        assert [p["steps"] for p in items] == ["NE", "EN"]
        assert items[0]["vertices"] == [[0, 0], [0, 1], [1, 1]]

    def test_json_truncation(self, capsys):
        code, out, _ = run(capsys, "enumerate", "2,1", "paths", "--limit", "2", "--format", "json")
        assert code == 0
        lines = [json.loads(line) for line in out.splitlines()]
        assert lines[-1] == {"truncated": True, "shown": 2, "total": 5}
        assert [p["steps"] for p in lines[:-1]] == ["NNEE", "NENE"]

    def test_tilings_text(self, capsys):
        code, out, _ = run(capsys, "enumerate", "1", "tilings")
        assert code == 0
        assert out.splitlines() == [
            "T1(0,0) T2(1,-1) T3(1,0)",
            "T1(1,-1) T2(1,0) T3(0,0)",
        ]

    def test_families_text(self, capsys):
        code, out, _ = run(capsys, "enumerate", "1", "families")
        assert code == 0
        assert out.splitlines() == ["(-1,1):NE", "(-1,1):EN"]

    def test_families_json(self, capsys):
        code, out, _ = run(capsys, "enumerate", "2,1", "families", "--format", "json")
        assert code == 0
        items = [json.loads(line) for line in out.splitlines()]
        assert len(items) == 5
        first = items[0]["paths"]
        assert [p["start"] for p in first] == [[-1, 1], [-2, 2]]

    def test_cap_applies(self, capsys):
        code, _, err = run(capsys, "enumerate", "3,2,1", "paths", "--cap", "3")
        assert code == 3
        assert "cap" in err


class TestRender:
    def test_tiling_index(self, capsys, tmp_path):
        out_file = tmp_path / "hex.svg"
        code, _, _ = run(capsys, "render", "1", "--tiling", "0", "-o", str(out_file))
        assert code == 0
        text = out_file.read_text()
        assert text.startswith("<svg ")
        assert text.count("<polygon") == 4

    def test_deterministic_output(self, capsys, tmp_path):
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        run(capsys, "render", "2,1", "--tiling", "1", "-o", str(a))
        run(capsys, "render", "2,1", "--tiling", "1", "-o", str(b))
        assert a.read_bytes() == b.read_bytes()

    def test_path_render_matches_tiling_render(self, capsys, tmp_path):
        by_path, by_index = tmp_path / "p.svg", tmp_path / "i.svg"
        run(capsys, "render", "1", "--path", "EN", "-o", str(by_path))
        run(capsys, "render", "1", "--tiling", "0", "-o", str(by_index))
        assert by_path.read_bytes() == by_index.read_bytes()

    def test_shade_flag(self, capsys, tmp_path):
        out_file = tmp_path / "shade.svg"
        code, _, _ = run(capsys, "render", "1", "--tiling", "0", "--shade", "a", "-o", str(out_file))
        assert code == 0
        assert "#7a7a7a" not in out_file.read_text()

    def test_index_out_of_range(self, capsys, tmp_path):
        code, _, err = run(capsys, "render", "1", "--tiling", "99", "-o", str(tmp_path / "x.svg"))
        assert code == 2
        assert err.startswith("error:")

    def test_inadmissible_path(self, capsys, tmp_path):
        code, _, err = run(capsys, "render", "2,1", "--path", "EENN", "-o", str(tmp_path / "x.svg"))
        assert code == 2
        assert err.startswith("error:")

    def test_bad_step_characters(self, capsys, tmp_path):
        code, _, _ = run(capsys, "render", "1", "--path", "EX", "-o", str(tmp_path / "x.svg"))
        assert code == 2

    def test_tiling_and_path_conflict(self, capsys, tmp_path):
        with pytest.raises(SystemExit) as exc:
            run(capsys, "render", "1", "--tiling", "0", "--path", "EN", "-o", str(tmp_path / "x.svg"))
        assert exc.value.code == 2
