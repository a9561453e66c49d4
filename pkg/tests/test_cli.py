"""Tests for the command-line interface."""

import pytest
from typer.testing import CliRunner

from anytime_cs.cli import app

runner = CliRunner()
QUIET = {"ANYTIME_CS_LOG_LEVEL": "WARNING", "ANYTIME_CS_SEED": None}
SMALL = ["--grid", "50", "--replicates-B", "20", "--batches-L", "3"]


@pytest.fixture(autouse=True)
def isolated(monkeypatch, tmp_path):
    """Run each command from an empty directory."""
    monkeypatch.chdir(tmp_path)


def _simulate(out, *extra):
    args = ["simulate", "--n", "30", "--seeds", "2", *SMALL, "--out", str(out), *extra]
    return runner.invoke(app, args, env=QUIET)


def test_stream_single_observation():
    """Test that one observation of 0.5 prints 1,0,1."""
    result = runner.invoke(app, ["stream"], input="0.5\n", env=QUIET)

    assert result.exit_code == 0
    assert result.stdout == "1,0,1\n"


def test_stream_skips_blank_lines():
    """Test one output line per observation."""
    result = runner.invoke(app, ["stream", "--method", "preb"], input="0.5\n\n0.2\n", env=QUIET)

    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert [line.split(",")[0] for line in lines] == ["1", "2"]


def test_stream_empty_input():
    """Test that no input gives no output."""
    result = runner.invoke(app, ["stream"], input="", env=QUIET)

    assert result.exit_code == 0
    assert result.stdout == ""


def test_stream_out_of_range():
    """Test a single-line diagnostic for x outside [0, 1]."""
    result = runner.invoke(app, ["stream"], input="1.5\n", env=QUIET)

    assert result.exit_code == 1
    assert "anytime-cs: error: line 1:" in result.output


def test_stream_malformed_line():
    """Test a diagnostic for non-numeric input."""
    result = runner.invoke(app, ["stream", "--method", "bootstrap"], input="0.1\nabc\n", env=QUIET)

    assert result.exit_code == 1
    assert "anytime-cs: error: line 2: not a number" in result.output


def test_unknown_flag():
    """Test that unknown flags are usage errors."""
    result = runner.invoke(app, ["simulate", "--bogus"], env=QUIET)

    assert result.exit_code == 2


def test_invalid_alpha():
    """Test that invalid configuration exits with a diagnostic."""
    result = runner.invoke(app, ["stream", "--alpha", "2"], input="0.5\n", env=QUIET)

    assert result.exit_code == 1
    assert "anytime-cs: error: alpha" in result.output


def test_invalid_alpha_from_environment():
    """Test that a bad ANYTIME_CS_ALPHA gives the one-line diagnostic too."""
    env = {**QUIET, "ANYTIME_CS_ALPHA": "2"}
    result = runner.invoke(app, ["stream"], input="0.5\n", env=env)

    assert result.exit_code == 1
    assert "anytime-cs: error: alpha" in result.output


def test_simulate_writes_results(tmp_path):
    """Test row count and header of synthetic.csv."""
    result = _simulate(tmp_path / "out")

    assert result.exit_code == 0, result.output
    lines = (tmp_path / "out" / "synthetic.csv").read_text(encoding="utf-8").splitlines()
    assert lines[0] == "method,replication,t,lo,hi,width"
    assert len(lines) == 1 + 3 * 30 * 2


def test_simulate_single_method(tmp_path):
    """Test that --method restricts the engines."""
    result = _simulate(tmp_path / "out", "--method", "preb")

    assert result.exit_code == 0, result.output
    lines = (tmp_path / "out" / "synthetic.csv").read_text(encoding="utf-8").splitlines()
    assert len(lines) == 1 + 30 * 2
    assert all(line.startswith("preb,") for line in lines[1:])


def test_simulate_deterministic(tmp_path):
    """Test byte-identical CSV and SVG outputs for --seed 7."""
    first = _simulate(tmp_path / "a", "--seed", "7", "--plot")
    second = _simulate(tmp_path / "b", "--seed", "7", "--plot")

    assert first.exit_code == 0, first.output
    assert second.exit_code == 0, second.output
    for name in ["synthetic.csv", "synthetic_cs.svg", "synthetic_width.svg"]:
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


def test_seed_environment_fallback(tmp_path):
    """Test that ANYTIME_CS_SEED matches an explicit --seed."""
    _simulate(tmp_path / "flag", "--seed", "7")
    args = ["simulate", "--n", "30", "--seeds", "2", *SMALL, "--out", str(tmp_path / "env")]
    result = runner.invoke(app, args, env={**QUIET, "ANYTIME_CS_SEED": "7"})

    assert result.exit_code == 0, result.output
    flag = (tmp_path / "flag" / "synthetic.csv").read_bytes()
    assert (tmp_path / "env" / "synthetic.csv").read_bytes() == flag


def test_simulate_unwritable_output(tmp_path):
    """Test a diagnostic when the output directory cannot be created."""
    blocker = tmp_path / "file"
    blocker.write_text("x", encoding="utf-8")

    result = _simulate(blocker / "out")

    assert result.exit_code == 1
    assert "anytime-cs: error:" in result.output


def test_baseball_canonical(tmp_path):
    """Test 18 x 2 summary rows for the bundled dataset."""
    args = ["baseball", "--replications", "2", *SMALL, "--out", str(tmp_path), "--plot"]
    result = runner.invoke(app, args, env=QUIET)

    assert result.exit_code == 0, result.output
    lines = (tmp_path / "baseball.csv").read_text(encoding="utf-8").splitlines()
    assert lines[0] == "method,player_id,coverage_prob,mean_lo,mean_hi"
    assert len(lines) == 1 + 18 * 2
    assert (tmp_path / "baseball_intervals.svg").exists()
    assert (tmp_path / "baseball_coverage.svg").exists()


def test_baseball_bad_row(tmp_path):
    """Test that a schema violation names the row."""
    data = tmp_path / "bad.csv"
    data.write_text("player_id,name,hits_45,at_bats,p_true\n1,A,50,45,0.3\n", encoding="utf-8")

    result = runner.invoke(app, ["baseball", "--data", str(data)], env=QUIET)

    assert result.exit_code == 1
    assert "anytime-cs: error: line 2:" in result.output


def test_plot_from_results(tmp_path):
    """Test re-rendering figures from a synthetic results file."""
    _simulate(tmp_path / "run")

    result = runner.invoke(
        app,
        ["plot", str(tmp_path / "run" / "synthetic.csv"), "--out", str(tmp_path / "figs")],
        env=QUIET,
    )

    assert result.exit_code == 0, result.output
    assert (tmp_path / "figs" / "synthetic_cs.svg").exists()
    assert (tmp_path / "figs" / "synthetic_width.svg").exists()


def test_plot_missing_file(tmp_path):
    """Test a diagnostic for a missing results file."""
    result = runner.invoke(app, ["plot", str(tmp_path / "none.csv")], env=QUIET)

    assert result.exit_code == 1
    assert "anytime-cs: error:" in result.output


def test_version():
    """Test version output."""
    result = runner.invoke(app, ["version"])

    assert result.exit_code == 0
    assert "anytime-cs" in result.output
