"""Unit tests for the command-line interface."""
import json

import pytest

from src.cli.output import format_csv, format_table
from src.main import EXIT_FAILURE, EXIT_USAGE, cli
from src.utils.exceptions import ConsistencyException


def _lines(result):
    return result.stdout.strip().splitlines()


def test_format_table_pads_columns():
    """Test column padding and cell rendering."""
    text = format_table(["a", "bb"], [[1, True], [None, ["x", "y"]]])
    assert text.splitlines() == ["a  bb", "-----", "1  yes", "   x y"]


def test_format_csv():
    """Test the CSV header and LF endings."""
    assert format_csv(["a", "b"], [[1, "x,y"]]) == 'a,b\n1,"x,y"'


@pytest.mark.parametrize(
    "args,expected",
    [
        (["xi", "010111"], "011010"),
        (["xi-inv", "011010"], "010111"),
        (["lambda", "[011101]"], "(165324)"),
        (["phi", "(1432)"], "<0011>"),
        (["wr-psi", "(1432)"], "1000"),
        (["itinerary", "(1423)"], "-+-*"),
        (["classify", "[0011]"], "n-bar-1"),
        (["omega", "0111"], "+1,-1,+1,-1"),
        (["twisted-shift", "1011"], "1000"),
        (["kneading-sequence", "--", "-++*"], "0111"),
        (["kneading-sequence", "--", "-+-*"], "0110"),
        (["f-orbit", "1011"], "(1011, 1000, 1110, 1101)"),
        (["ftilde-orbit", "10"], "(10-, 10+)"),
        (["kneading-angle", "0111"], "7/15"),
        (["doubling", "7/15"], "14/15"),
        (["doubling", "7", "--n", "4"], "14/15"),
        (["fold", "4/5"], "3/15"),
        (["reutenauer", "0011", "--n", "4"], "x^4+x+1"),
        (["reutenauer", "01", "--n", "4"], "x^2+x+1"),
    ],
)
def test_map(runner, args, expected):
    """Test single map applications in plain output."""
    result = runner.invoke(cli, ["map", *args])
    assert result.exit_code == 0, result.stderr
    assert result.stdout.strip() == expected


def test_map_json(runner):
    """Test the JSON rendering of a map result."""
    result = runner.invoke(cli, ["map", "xi", "010111", "--format", "json"])
    assert json.loads(result.stdout) == {"map": "xi", "input": "010111", "output": "011010"}


@pytest.mark.parametrize(
    "args",
    [
        ["xi", "0121"],
        ["psi-plus", "<0001>"],
        ["doubling", "7"],
        ["reutenauer", "001", "--n", "4"],
        ["reutenauer", "0011", "--modulus", "x^4+1"],
    ],
)
def test_map_usage_errors(runner, args):
    """Test that bad input exits 2 with a one-line diagnostic."""
    result = runner.invoke(cli, ["map", *args])
    assert result.exit_code == EXIT_USAGE
    assert result.stderr.startswith("Error: ")


def test_enumerate_cup_json(runner):
    """Test the JSON payload of enumerate."""
    result = runner.invoke(cli, ["enumerate", "cup", "--n", "4", "--format", "json"])
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload == {"set": "cup", "n": 4, "count": 2, "items": ["(1423)", "(1432)"]}


def test_enumerate_plain(runner):
    """Test the polynomial and necklace listings."""
    result = runner.invoke(cli, ["enumerate", "i-tilde-plus", "--n", "4"])
    assert result.exit_code == 0
    assert [line.split()[1] for line in _lines(result)[2:]] == ["x^2+x+1", "x^4+x+1"]

    result = runner.invoke(cli, ["enumerate", "n-bar", "--n", "4", "--format", "csv"])
    assert _lines(result) == ["index,value", "1,[0001]", "2,[0011]"]


def test_enumerate_dbar(runner):
    """Test the doubling cycle classes."""
    result = runner.invoke(cli, ["enumerate", "d-bar", "--n", "3", "--format", "json"])
    (entry,) = json.loads(result.stdout)["items"]
    assert entry["tag"] == "d-bar-2"
    assert entry["cycles"] == [["1/7", "2/7", "4/7"], ["3/7", "6/7", "5/7"]]


def test_enumerate_rejects_bad_n(runner):
    """Test that n = 0 is a usage error."""
    result = runner.invoke(cli, ["enumerate", "n-minus", "--n", "0"])
    assert result.exit_code == EXIT_USAGE


def test_table_plain(runner):
    """Test the plain n = 4 table."""
    result = runner.invoke(cli, ["table", "--n", "4"])
    assert result.exit_code == 0, result.stderr
    lines = _lines(result)
    assert lines[0].split() == ["c", "M2", "D1", "P1", "N1", "N2", "N3"]
    assert lines[2].split() == ["-1.9408", "x^4+x+1", "7/15", "(1432)", "1000", "1100", "0111"]
    assert lines[3].split() == ["-1.3107", "x^2+x+1", "6/15", "(1423)", "1011", "0101", "0110"]


def test_table_json_and_csv(runner):
    """Test the machine-readable table renderings."""
    result = runner.invoke(
        cli, ["table", "--n", "4", "--order", "descending-c", "--format", "json"]
    )
    rows = json.loads(result.stdout)
    assert [row["p1"] for row in rows] == ["(1423)", "(1432)"]
    assert rows[0]["satellite"] is True

    result = runner.invoke(cli, ["table", "--n", "4", "--format", "csv"])
    lines = _lines(result)
    assert lines[0].startswith("n,c,c_value,bracket,m2,m2_hex,d1")
    assert len(lines) == 3


def test_table_errors(runner, monkeypatch):
    """Test the exit codes of table."""
    assert runner.invoke(cli, ["table", "--n", "11"]).exit_code == EXIT_USAGE
    assert runner.invoke(cli, ["table", "--n", "4", "--precision", "-1"]).exit_code == EXIT_USAGE

    def broken(self, n, *args, **kwargs):
        raise ConsistencyException("Correspondence check failed", {"n": n})

    monkeypatch.setattr("src.main.TableService.build_table", broken)
    result = runner.invoke(cli, ["table", "--n", "4"])
    assert result.exit_code == EXIT_FAILURE
    assert result.stderr.strip() == "Error: Correspondence check failed"


def test_gleason_json(runner):
    """Test the polynomial summary."""
    result = runner.invoke(cli, ["gleason", "--n", "4", "--roots", "--format", "json"])
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert data["factors"] == ["c^2+c+1", "c^4+c+1"]
    assert data["real_root_count"] == 2


def test_count(runner):
    """Test the counting report."""
    result = runner.invoke(cli, ["count", "--n", "4", "--format", "json"])
    assert result.exit_code == 0
    (report,) = json.loads(result.stdout)
    assert (report["gamma"], report["xi"], report["t_minus"]) == (2, 4, 2)
    assert report["consistent"] is True

    result = runner.invoke(cli, ["count", "--max-n", "6"])
    assert result.exit_code == 0
    assert [line.split()[1] for line in _lines(result)[2:]] == ["1", "1", "1", "2", "3", "5"]


def test_count_needs_exactly_one_option(runner):
    """Test that --n and --max-n are exclusive."""
    assert runner.invoke(cli, ["count"]).exit_code == EXIT_USAGE
    assert runner.invoke(cli, ["count", "--n", "3", "--max-n", "4"]).exit_code == EXIT_USAGE


def test_verify_small(runner, tmp_path):
    """Test a short verify run with a metrics file."""
    metrics = tmp_path / "metrics.prom"
    result = runner.invoke(
        cli,
        [
            "verify",
            "--max-n",
            "4",
            "--suites",
            "weiss_rogers,counting",
            "--metrics-file",
            str(metrics),
        ],
    )
    assert result.exit_code == 0, result.stdout
    assert _lines(result)[-1].endswith("failed=0 error=0")
    assert "verification_checks_total" in metrics.read_text()


def test_verify_rejects_unknown_suite(runner):
    """Test the suite list validation."""
    result = runner.invoke(cli, ["verify", "--suites", "bijections,nope"])
    assert result.exit_code == EXIT_USAGE


def test_table_period_one(runner):
    """Test the single row for G_1 = c."""
    result = runner.invoke(cli, ["table", "--n", "1"])
    assert result.exit_code == 0, result.stderr
    lines = _lines(result)
    assert len(lines) == 3
    assert lines[2].split()[0] == "0.0000"


def test_verify_period_one(runner):
    """Test that every suite passes trivially for max-n 1."""
    result = runner.invoke(cli, ["verify", "--max-n", "1"])
    assert result.exit_code == 0, result.stdout
