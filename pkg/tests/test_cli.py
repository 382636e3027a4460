"""Tests for the command-line interface."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from rhombil.__main__ import EXIT_FAILED, EXIT_OK, EXIT_USAGE, run
from rhombil.schemas.report import CalibrationReport, SwitchOutcome


@pytest.mark.parametrize(
    ("argv", "expected"),
    [
        (["count", "--family", "P", "--a", "1", "--b", "1", "--c", "1"], "2"),
        (["count", "--family", "Pp", "--a", "1", "--b", "1", "--c", "1"], "3/2"),
        (["count", "--family", "Q", "--holes", "1,2"], "5"),
        (["formula", "--family", "H1", "--x", "0", "--y", "1", "--z", "1", "--holes", "1,1"], "20"),
        (["formula", "--family", "H3", "--x", "0", "--y", "0", "--z", "0", "--holes", "1,1"], "3/2"),
        (["formula", "--family", "S", "--x", "0", "--y", "1", "--z", "0", "--holes", "2"], "1"),
    ],
)
def test_values(argv: list[str], expected: str, capsys: pytest.CaptureFixture[str]) -> None:
    assert run(argv) == EXIT_OK
    assert capsys.readouterr().out.strip() == expected


def test_empty_holes_argument(capsys: pytest.CaptureFixture[str]) -> None:
    assert run(["formula", "--family", "Q", "--holes", ""]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "1"


class TestJsonOutput:
    def test_count_report(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["count", "--family", "P", "--a", "1", "--b", "1", "--c", "1", "--format", "json"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["value"] == {"num": 2, "den": 1}
        assert payload["params"] == {"a": 1, "b": 1, "c": 1}
        assert payload["cells"] == 6
        assert "elapsed_ms" not in payload

    def test_timings_are_opt_in(self, capsys: pytest.CaptureFixture[str]) -> None:
        argv = ["count", "--family", "P", "--a", "1", "--b", "1", "--c", "1", "--format", "json", "--timings"]
        assert run(argv) == EXIT_OK
        assert "elapsed_ms" in json.loads(capsys.readouterr().out)

    def test_render_then_count_from_file(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["render", "--family", "Pp", "--a", "1", "--b", "1", "--c", "1", "--format", "json"]) == EXIT_OK
        document = tmp_path / "region.json"
        document.write_text(capsys.readouterr().out, encoding="utf-8")

        assert run(["count", "--from-json", str(document)]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "3/2"


class TestRender:
    def test_ascii_is_default(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["render", "--family", "P", "--a", "1", "--b", "1", "--c", "1"]) == EXIT_OK
        assert capsys.readouterr().out.splitlines()[2] == "^v^"

    def test_svg(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["render", "--family", "P", "--a", "1", "--b", "1", "--c", "1", "--format", "svg"]) == EXIT_OK
        assert capsys.readouterr().out.startswith("<svg")


class TestUsageErrors:
    def test_missing_parameter_is_named(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["count", "--family", "P", "--a", "1"]) == EXIT_USAGE
        assert "--b" in capsys.readouterr().err

    def test_missing_family(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["formula", "--x", "1"]) == EXIT_USAGE
        assert "--family" in capsys.readouterr().err

    def test_parameter_order(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["formula", "--family", "P", "--a", "2", "--b", "1", "--c", "0"]) == EXIT_USAGE
        assert capsys.readouterr().err.startswith("Error:")

    def test_parity_mismatch(self) -> None:
        assert run(["formula", "--family", "S", "--x", "1", "--y", "1", "--z", "0", "--holes", "2"]) == EXIT_USAGE

    def test_negative_value_is_rejected_by_the_parser(self, capsys: pytest.CaptureFixture[str]) -> None:
        with pytest.raises(SystemExit) as excinfo:
            run(["count", "--family", "P", "--a", "-1", "--b", "1", "--c", "1"])
        assert excinfo.value.code == EXIT_USAGE
        assert "--a" in capsys.readouterr().err

    def test_malformed_holes(self, capsys: pytest.CaptureFixture[str]) -> None:
        with pytest.raises(SystemExit):
            run(["formula", "--family", "Q", "--holes", "1,x"])
        assert "--holes" in capsys.readouterr().err


def test_state_cap_from_environment(monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]) -> None:
    monkeypatch.setenv("RHOMBIL_STATE_CAP", "1")
    assert run(["count", "--family", "P", "--a", "2", "--b", "2", "--c", "1"]) == EXIT_FAILED
    assert "frontier exceeded" in capsys.readouterr().err


class TestVerify:
    def test_claims_suite(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["verify", "--suite", "claims", "--samples", "2"]) == EXIT_OK
        assert capsys.readouterr().out.splitlines()[-1].endswith("0 failures")

    def test_claims_suite_json(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["verify", "--suite", "claims", "--samples", "1", "--format", "json"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert all(json.loads(line)["suite"] == "claims" for line in lines)

    def test_sweep(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["sweep", "--family", "P", "--max", "1"]) == EXIT_OK
        assert "6 checks, 0 failures" in capsys.readouterr().out


def test_unresolved_calibration_exits_nonzero(mocker, capsys: pytest.CaptureFixture[str]) -> None:
    report = CalibrationReport(
        outcomes=[SwitchOutcome(switch="odd_length", variants=["drop_leading_zero", "append_zero"], passing=[])]
    )
    mocker.patch("rhombil.__main__.calibrate_geometry", return_value=report)

    assert run(["calibrate"]) == EXIT_FAILED
    assert "UNRESOLVED" in capsys.readouterr().out
