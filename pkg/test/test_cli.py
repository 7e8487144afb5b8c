"""Command line interface"""

import json

import pytest

from lorenz_links.cli import cli, enumerate_vectors, parse_braid_text, parse_tlink_spec, parse_vector_spec
from lorenz_links.config import settings
from lorenz_links.topology.errors import LinkInputError
from lorenz_links.topology.pipeline import VerificationPipeline
from lorenz_links.topology.schemas import validate_document


# ============================================
# Parsing
# ============================================

@pytest.mark.parametrize("text", ["3^4,5^3", "3,3,3,3,5,5,5", " 3^4 , 5^3 ", "⟨3^4,5^3⟩", "<3,3,3,3,5^3>"])
def test_parse_vector_spec(text):
    assert parse_vector_spec(text).entries == (3, 3, 3, 3, 5, 5, 5)


@pytest.mark.parametrize("text", ["3,2", "", "a,b", "3^0", "3^", "1.5"])
def test_parse_vector_spec_errors(text):
    with pytest.raises(LinkInputError):
        parse_vector_spec(text)


@pytest.mark.parametrize("text", ["(3,4),(5,3)", "T((3,4),(5,3))", " ( 3 , 4 ) , ( 5 , 3 ) "])
def test_parse_tlink_spec(text):
    assert parse_tlink_spec(text).pairs == ((3, 4), (5, 3))


@pytest.mark.parametrize("text", ["(5,3),(3,4)", "(3,4)(5,3)", "3,4", "(3,0)", ""])
def test_parse_tlink_spec_errors(text):
    with pytest.raises(LinkInputError):
        parse_tlink_spec(text)


def test_parse_braid_text():
    assert parse_braid_text("s1 s2' s1^-1").letters == (1, -2, -1)
    assert parse_braid_text("1, -2 3").strands == 4
    assert parse_braid_text("").strands == 1
    assert parse_braid_text("s1", strands=4).strands == 4
    with pytest.raises(LinkInputError):
        parse_braid_text("s0")
    with pytest.raises(LinkInputError):
        parse_braid_text("x1")
    with pytest.raises(LinkInputError):
        parse_braid_text("s3", strands=2)


def test_parse_size_limits():
    assert parse_vector_spec("3^4,5^3", max_strands=12).k == 7
    with pytest.raises(LinkInputError, match="limit of 12"):
        parse_vector_spec("3^4,5^3,6", max_strands=12)
    with pytest.raises(LinkInputError, match="limit"):
        parse_vector_spec("1^100000000", max_strands=48)
    assert parse_tlink_spec("(3,4),(5,3)", max_strands=12).strands == 5
    with pytest.raises(LinkInputError, match="limit"):
        parse_tlink_spec("(3,4),(5,3)", max_strands=11)
    with pytest.raises(LinkInputError, match="braid length"):
        parse_braid_text("s1 s1 s1", max_letters=2)
    with pytest.raises(LinkInputError, match="strand count"):
        parse_braid_text("s5", max_strands=5)


def test_enumerate_vectors():
    assert [v.entries for v in enumerate_vectors(3)] == [(1,), (2,), (3,), (1, 1), (1, 2), (1, 1, 1)]
    assert [v.entries for v in enumerate_vectors(1)] == [(1,)]
    assert len(enumerate_vectors(10)) == 138
    with pytest.raises(LinkInputError):
        enumerate_vectors(0)


# ============================================
# show
# ============================================

def test_show_vector(runner):
    result = runner.invoke(cli, ["show", "--vector", "2,2"])
    assert result.exit_code == 0, result.stderr
    assert "T-link: (2,2)" in result.stdout
    assert "lorenz strands: 4" in result.stdout
    assert "t strands: 2" in result.stdout
    assert ".X.O" in result.stdout


def test_show_tlink(runner):
    result = runner.invoke(cli, ["show", "--tlink", "(2,3)"])
    assert result.exit_code == 0
    assert "s1 s1 s1" in result.stdout


def test_show_json_and_svg(runner, tmp_path):
    svg_path = tmp_path / "hopf.svg"
    result = runner.invoke(cli, ["show", "--vector", "2,2", "--format", "json", "--svg", str(svg_path)])
    assert result.exit_code == 0
    document = json.loads(result.stdout)
    validate_document("show", document)
    assert svg_path.read_text(encoding="utf-8").startswith("<svg")


def test_show_needs_exactly_one_input(runner):
    assert runner.invoke(cli, ["show"]).exit_code == 2
    assert runner.invoke(cli, ["show", "--vector", "2", "--tlink", "(2,1)"]).exit_code == 2


# ============================================
# verify / battery / report
# ============================================

def test_verify_text(runner):
    result = runner.invoke(cli, ["verify", "--vector", "2,2,2"])
    assert result.exit_code == 0
    assert "VERIFIED" in result.stdout
    assert "✓ kauffman-f" in result.stdout


def test_verify_json(runner):
    result = runner.invoke(cli, ["verify", "--tlink", "(2,3)", "--format", "json"])
    assert result.exit_code == 0
    document = json.loads(result.stdout)
    validate_document("instance", document)
    assert document["verified"] is True
    assert document["tlink"] == [[2, 3]]


@pytest.mark.parametrize(
    "args",
    [["--vector", "3,2"], ["--tlink", "(5,3),(3,4)"], ["--vector", "2", "--skip", "homfly"]],
)
def test_verify_input_errors(runner, args):
    result = runner.invoke(cli, ["verify", *args])
    assert result.exit_code == 2


def test_verify_with_bracket_cap_warns(runner):
    result = runner.invoke(cli, ["verify", "--vector", "2,2", "--max-bracket-crossings", "0"])
    assert result.exit_code == 0
    assert "warning:" in result.stdout


def test_battery(runner):
    result = runner.invoke(cli, ["battery", "--max-sum", "3"])
    assert result.exit_code == 0
    assert "6 passed, 0 failed" in result.stdout


def test_battery_json(runner):
    result = runner.invoke(cli, ["battery", "--max-sum", "3", "--format", "json"])
    assert result.exit_code == 0
    document = json.loads(result.stdout)
    assert [item["vector"] for item in document] == [[1], [2], [3], [1, 1], [1, 2], [1, 1, 1]]
    for item in document:
        validate_document("instance", item)


def test_battery_rejects_zero(runner):
    assert runner.invoke(cli, ["battery", "--max-sum", "0"]).exit_code == 2


def test_report(runner):
    result = runner.invoke(cli, ["report", "--braid", "s1 s1 s1", "--format", "json"])
    assert result.exit_code == 0
    document = json.loads(result.stdout)
    validate_document("report", document)
    assert document["alexander"] == {"min_deg": 0, "coeffs": [1, -1, 1]}
    assert document["jones"] == {"min_deg": 1, "coeffs": [1, 0, 1, -1]}
    assert document["genus"] == 1


def test_report_text(runner):
    result = runner.invoke(cli, ["report", "--braid", "s1 s2' s1 s2'"])
    assert result.exit_code == 0
    assert "alexander: 1 - 3t + t²" in result.stdout


def test_report_bad_braid(runner):
    assert runner.invoke(cli, ["report", "--braid", "s1 x"]).exit_code == 2


def test_log_level_goes_to_stderr(runner):
    result = runner.invoke(cli, ["--log-level", "info", "verify", "--vector", "2"])
    assert result.exit_code == 0
    assert "verified" in result.stderr
    assert "INFO" not in result.stdout


# ============================================
# Exit Codes
# ============================================

@pytest.fixture
def broken_grid_report(monkeypatch):
    """Every instance reports a wrong grid component count"""
    reports = VerificationPipeline.reports

    def corrupted(self, reps):
        out = reports(self, reps)
        out["grid"] = out["grid"].model_copy(update={"components": 99})
        return out

    monkeypatch.setattr(VerificationPipeline, "reports", corrupted)


def test_verify_mismatch_exits_1(runner, broken_grid_report):
    result = runner.invoke(cli, ["verify", "--vector", "2,2,2"])
    assert result.exit_code == 1
    assert "MISMATCH: components" in result.stdout
    assert "  ✗ components" in result.stdout


def test_battery_mismatch_exits_1(runner, broken_grid_report):
    result = runner.invoke(cli, ["battery", "--max-sum", "2"])
    assert result.exit_code == 1
    assert result.stdout.strip().endswith("0 passed, 3 failed")


def test_bad_log_level_setting_is_a_usage_error(runner, monkeypatch):
    monkeypatch.setattr(settings, "LOG_LEVEL", "LOUD")
    result = runner.invoke(cli, ["verify", "--vector", "2"])
    assert result.exit_code == 2
    assert "LOG_LEVEL" in result.stderr
    assert not isinstance(result.exception, AttributeError)
