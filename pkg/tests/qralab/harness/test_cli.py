import pytest

from qralab.harness import cli, format_spec, read_csv
from qralab.harness.validation import CheckResult

from .helpers import tiny_spec


@pytest.fixture
def spec_path(tmp_path):
    path = tmp_path / "tiny.spec"
    path.write_text(format_spec(tiny_spec(id="tiny", noise="shot", n_shots=100)), encoding="utf-8")
    return path


def test_run_spec_file(spec_path, tmp_path, capsys):
    out = tmp_path / "results"
    code = cli.main(["run", "--exp", str(spec_path), "--out", str(out), "--no-timing"])
    assert code == cli.EXIT_OK
    records = read_csv(out / "exptiny.csv")
    assert len(records) == 8
    assert (out / "exptiny_summary.txt").read_text(encoding="utf-8").startswith("experiment")
    assert "8 records written" in capsys.readouterr().out


def test_repeated_runs_are_byte_identical(spec_path, tmp_path):
    for name, threads in (("one", "1"), ("two", "2")):
        argv = ["run", "--exp", str(spec_path), "--out", str(tmp_path / name), "--no-timing"]
        assert cli.main([*argv, "--threads", threads]) == cli.EXIT_OK
    first = (tmp_path / "one" / "exptiny.csv").read_bytes()
    assert first == (tmp_path / "two" / "exptiny.csv").read_bytes()


def test_report_on_identical_runs(spec_path, tmp_path, capsys):
    out = tmp_path / "results"
    cli.main(["run", "--exp", str(spec_path), "--out", str(out), "--no-timing"])
    capsys.readouterr()
    csv_path = str(out / "exptiny.csv")
    assert cli.main(["report", "--a", csv_path, "--b", csv_path]) == cli.EXIT_OK
    assert "tiny vs tiny" in capsys.readouterr().out


def test_unknown_experiment_is_a_configuration_error(tmp_path):
    assert cli.main(["run", "--exp", "99", "--out", str(tmp_path)]) == cli.EXIT_CONFIGURATION


def test_missing_spec_file_is_an_io_error(tmp_path):
    missing = str(tmp_path / "absent.spec")
    assert cli.main(["run", "--exp", missing, "--out", str(tmp_path)]) == cli.EXIT_IO


def test_missing_csv_is_an_io_error(tmp_path):
    missing = str(tmp_path / "absent.csv")
    assert cli.main(["report", "--a", missing, "--b", missing]) == cli.EXIT_IO


def test_validate_exit_codes(mocker, capsys):
    mocker.patch.object(cli, "validate", return_value=[CheckResult("a", True, "fine")])
    assert cli.main(["validate"]) == cli.EXIT_OK
    assert "ok  a: fine" in capsys.readouterr().out

    mocker.patch.object(cli, "validate", return_value=[CheckResult("b", False, "broken")])
    assert cli.main(["validate"]) == cli.EXIT_CONFIGURATION
    assert "FAILED  b: broken" in capsys.readouterr().out


def test_command_is_required():
    with pytest.raises(SystemExit):
        cli.main([])
