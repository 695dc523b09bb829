import io
import json
import subprocess
import sys

import pytest

from weakcover import gen_family, write_dimacs
from weakcover.battery import CriterionResult
from weakcover.cli import RunConfig, main
from weakcover.exact import LIMIT_ENV

K4 = ["--family", "complete", "-n", "4"]


def run_cli(argv):
    try:
        return main(argv)
    except SystemExit as exc:
        return exc.code


@pytest.fixture(autouse=True)
def clean_limit_env(monkeypatch):
    monkeypatch.delenv(LIMIT_ENV, raising=False)


class TestGen:
    def test_dimacs_output(self, capsys):
        assert run_cli(["gen", *K4]) == 0
        assert capsys.readouterr().out == write_dimacs(gen_family("complete", 4))

    def test_json_output(self, capsys):
        assert run_cli(["gen", *K4, "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["n"] == 4
        assert payload["edges"] == [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]

    def test_family_is_required(self):
        assert run_cli(["gen", "-n", "4"]) == 1

    def test_random_family_flags(self, capsys):
        args = ["gen", "--family", "random", "-n", "6", "-p", "0.5", "--seed", "3"]
        assert run_cli(args) == 0
        first = capsys.readouterr().out
        assert run_cli(args) == 0
        assert capsys.readouterr().out == first


class TestGraphInput:
    def test_from_file(self, tmp_path, capsys):
        path = tmp_path / "g.col"
        path.write_text(write_dimacs(gen_family("complete", 4)))
        assert run_cli(["lpr", str(path)]) == 0
        assert json.loads(capsys.readouterr().out)["z"] == "2"

    def test_from_stdin(self, monkeypatch, capsys):
        monkeypatch.setattr(
            sys, "stdin", io.StringIO(write_dimacs(gen_family("cycle", 5)))
        )
        assert run_cli(["elp", "-"]) == 0
        assert json.loads(capsys.readouterr().out)["z"] == "3"

    def test_file_and_family_conflict(self, capsys):
        assert run_cli(["lpr", "whatever.col", *K4]) == 1
        assert "not both" in capsys.readouterr().err

    def test_no_input_at_all(self, capsys):
        assert run_cli(["lpr"]) == 1
        assert capsys.readouterr().err.startswith("error:")

    def test_missing_file(self):
        assert run_cli(["lpr", "/no/such/file.col"]) == 1

    def test_family_without_n(self):
        assert run_cli(["lpr", "--family", "complete"]) == 1

    def test_config_invariant(self):
        with pytest.raises(ValueError):
            RunConfig(command="lpr", input="g.col", family="complete", n=4)


class TestSubcommands:
    def test_restricted_relaxation(self, capsys):
        assert run_cli(["relp", *K4, "--edge", "1,2"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["z"] == "3"
        assert payload["integral"] is True

    def test_scan(self, capsys):
        assert run_cli(["scan-z", *K4]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert len(payload["scan"]) == 6
        assert payload["best"] == {"edge": [1, 2], "z": "3"}

    def test_sigma_on_the_axis(self, capsys):
        args = ["sigma", "--family", "double_wheel", "-n", "8", "--edge", "7,8"]
        assert run_cli(args) == 0
        assert json.loads(capsys.readouterr().out) == {
            "edge": [7, 8], "delta": 5, "delta_bar": 7, "sigma": 2,
        }

    def test_classify(self, capsys):
        args = ["classify", "--family", "double_wheel", "-n", "8", "--edge", "7,8"]
        assert run_cli(args) == 0
        assert json.loads(capsys.readouterr().out) == {
            "edge": [7, 8], "weak": False, "strong": True, "uniformly_strong": True,
        }

    def test_exact(self, capsys):
        assert run_cli(["exact", *K4]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["size"] == 3 and len(payload["cover"]) == 3

    def test_reducers_and_baseline(self, capsys):
        for command in ("wer", "awer", "baseline"):
            assert run_cli([command, "--family", "wheel", "-n", "6"]) == 0
            payload = json.loads(capsys.readouterr().out)
            assert payload["cover"] == sorted(payload["cover"])
            if command != "baseline":
                assert payload["size"] == 4  # hub plus three rim vertices

    def test_audited_reducer(self, capsys):
        assert run_cli(["awer", *K4, "--audit"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["audit"] == "done"
        assert payload["sigma_bound"] == {"max_sigma": 0, "guarantee": "1"}

    def test_edge_flag_is_validated(self):
        assert run_cli(["relp", *K4, "--edge", "12"]) == 1
        assert run_cli(["relp", *K4, "--edge", "a,b"]) == 1
        assert run_cli(["relp", *K4]) == 1

    def test_non_edge_is_a_usage_error(self, capsys):
        assert run_cli(["sigma", "--family", "cycle", "-n", "5", "--edge", "1,3"]) == 1
        assert "not an edge" in capsys.readouterr().err

    def test_unknown_subcommand(self):
        assert run_cli(["frobnicate"]) == 1


class TestExactLimit:
    K6 = ["exact", "--family", "complete", "-n", "6"]

    def test_flag_blocks_oversized_graphs(self, capsys):
        assert run_cli([*self.K6, "--exact-limit", "4"]) == 1
        assert "exceeds the exact limit" in capsys.readouterr().err

    def test_environment_overrides_the_flag(self, monkeypatch, capsys):
        monkeypatch.setenv(LIMIT_ENV, "10")
        assert run_cli([*self.K6, "--exact-limit", "4"]) == 0
        capsys.readouterr()
        monkeypatch.setenv(LIMIT_ENV, "4")
        assert run_cli([*self.K6, "--exact-limit", "50"]) == 1

    def test_unparseable_environment_value(self, monkeypatch, capsys):
        monkeypatch.setenv(LIMIT_ENV, "soon")
        assert run_cli(self.K6) == 1
        assert LIMIT_ENV in capsys.readouterr().err


class TestOutputFile:
    def test_report_written_to_path(self, tmp_path, capsys):
        target = tmp_path / "out.json"
        assert run_cli(["lpr", *K4, "--output", str(target)]) == 0
        assert capsys.readouterr().out == ""
        assert json.loads(target.read_text())["z"] == "2"


class TestReproduce:
    @staticmethod
    def fake_battery(results):
        def run(on_result=None):
            for r in results:
                if on_result is not None:
                    on_result(r)
            return tuple(results)

        return run

    def test_all_green(self, monkeypatch, capsys):
        results = [
            CriterionResult(1, "first-check", True, "fine"),
            CriterionResult(2, "second-check", True, "also fine"),
        ]
        monkeypatch.setattr("weakcover.cli.run_battery", self.fake_battery(results))
        assert run_cli(["reproduce"]) == 0
        out = capsys.readouterr().out
        assert out.count("ok ") == 2
        assert "2/2 checks passed" in out

    def test_failure_exits_two(self, monkeypatch, capsys):
        results = [
            CriterionResult(1, "first-check", True, "fine"),
            CriterionResult(2, "second-check", False, "broken"),
        ]
        monkeypatch.setattr("weakcover.cli.run_battery", self.fake_battery(results))
        assert run_cli(["reproduce"]) == 2
        out = capsys.readouterr().out
        assert "FAIL" in out
        assert "1/2 checks passed" in out

    def test_table_written_to_file(self, monkeypatch, tmp_path):
        results = [CriterionResult(1, "first-check", True, "fine")]
        monkeypatch.setattr("weakcover.cli.run_battery", self.fake_battery(results))
        target = tmp_path / "table.txt"
        assert run_cli(["reproduce", "--output", str(target)]) == 0
        assert "1/1 checks passed" in target.read_text()


def test_console_script_end_to_end():
    done = subprocess.run(
        [sys.executable, "-m", "weakcover", "gen", "--family", "cycle", "-n", "5"],
        capture_output=True,
        text=True,
    )
    assert done.returncode == 0
    assert done.stdout.startswith("p edge 5 5")
