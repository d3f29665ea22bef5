import json
import logging

import pytest
from click.testing import CliRunner

from sonarseq.cli import main


@pytest.fixture
def runner():
    yield CliRunner()
    # the CLI binds a handler to the invocation's captured stderr; drop it so
    # later tests never log into a closed stream
    logger = logging.getLogger("sonarseq")
    logger.handlers.clear()
    logger.setLevel(logging.NOTSET)
    logger.propagate = True


def test_construct_quadratic(runner):
    result = runner.invoke(main, ["construct", "quadratic", "--p", "5"])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["values"] == [1, 4, 4, 1, 0, 1]
    assert data["m"] == 5 and data["n"] == 6


def test_construct_requires_its_parameter(runner):
    result = runner.invoke(main, ["construct", "quadratic"])
    assert result.exit_code != 0
    assert "--p" in result.output


def test_construct_rejects_unknown_name(runner):
    result = runner.invoke(main, ["construct", "mystery", "--p", "5"])
    assert result.exit_code != 0


def test_construct_domain_error_is_clean(runner):
    result = runner.invoke(main, ["construct", "quadratic", "--p", "5", "--a", "5"])
    assert result.exit_code == 1
    assert "Error" in result.output
    assert "Traceback" not in result.output


def test_construct_all_names(runner):
    cases = [
        (["construct", "shift", "--q", "4"], 3, 4),
        (["construct", "welch-exp", "--p", "5"], 5, 5),
        (["construct", "welch-exp-short", "--p", "5"], 5, 4),
        (["construct", "welch-log", "--p", "5"], 4, 4),
        (["construct", "golomb", "--q", "5"], 4, 3),
        (["construct", "bose-fold", "--q", "4"], 3, 4),
        (["construct", "ruzsa-fold-mod-p", "--p", "5"], 4, 4),
        (["construct", "ruzsa-fold-mod-p-1", "--p", "5"], 5, 4),
    ]
    for args, m, n in cases:
        result = runner.invoke(main, args)
        assert result.exit_code == 0, (args, result.output)
        data = json.loads(result.output)
        assert (data["m"], data["n"]) == (m, n), args


def test_sidon_bose_golden(runner):
    result = runner.invoke(
        main, ["sidon", "bose", "--q", "9", "--theta", "6", "--alpha", "6"]
    )
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["elements"] == [1, 4, 37, 38, 49, 53, 55, 62, 76]
    assert data["modulus"] == 80


def test_fold_pipeline(runner):
    sidon = runner.invoke(main, ["sidon", "ruzsa", "--p", "7", "--theta", "3"])
    assert sidon.exit_code == 0
    folded = runner.invoke(main, ["fold", "--m", "6", "--b", "7"], input=sidon.output)
    assert folded.exit_code == 0
    data = json.loads(folded.output)
    assert data["values"] == [5, 0, 4, 0, 0, 3]
    verified = runner.invoke(main, ["verify"], input=folded.output)
    assert verified.exit_code == 0
    report = json.loads(verified.output)
    assert report["ok"] is True


def test_fold_bad_modulus_product(runner):
    sidon = runner.invoke(main, ["sidon", "ruzsa", "--p", "7", "--theta", "3"])
    folded = runner.invoke(main, ["fold", "--m", "7", "--b", "7"], input=sidon.output)
    assert folded.exit_code == 1
    assert "42" in folded.output  # the mismatch names the actual modulus


def test_verify_failure_exits_nonzero(runner):
    seq = json.dumps({"m": 3, "n": 3, "modular": True, "values": [0, 1, 2], "provenance": {}})
    result = runner.invoke(main, ["verify"], input=seq)
    assert result.exit_code == 1
    report = json.loads(result.stdout)
    assert report["ok"] is False
    assert report["witness"] == {"h": 1, "i": 1, "j": 2}
    assert "violation at shift h=1" in result.stderr


def test_verify_plain_flag(runner):
    seq = json.dumps({"m": 6, "n": 6, "modular": False, "values": [5, 1, 4, 1, 1, 3], "provenance": {}})
    result = runner.invoke(main, ["verify", "--plain"], input=seq)
    assert result.exit_code == 0
    assert json.loads(result.output)["mode"] == "plain"


def test_verify_file_input(runner, tmp_path):
    path = tmp_path / "seq.json"
    path.write_text(
        json.dumps({"m": 8, "n": 9, "modular": True, "values": [0, 6, 5, 0, 5, 7, 3, 3, 4], "provenance": {}})
    )
    result = runner.invoke(main, ["verify", "--in", str(path)])
    assert result.exit_code == 0


def test_search_command(runner):
    result = runner.invoke(main, ["search", "--m", "4"])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["best_n"] == 5
    assert data["exhaustive"] is True
    assert data["example"]["values"] == [0, 0, 2, 1, 2]


def test_search_budget_flags(runner):
    result = runner.invoke(main, ["search", "--m", "8", "--max-nodes", "100"])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["exhaustive"] is False
    assert data["nodes_explored"] <= 100


def test_compare_stdout_csv(runner):
    result = runner.invoke(main, ["compare", "--p-max", "3", "--q-max", "4"])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0] == "construction,params,m,n,density,verified"
    assert len(lines) >= 7
    assert all(line.endswith("true") for line in lines[1:])


def test_compare_json_to_file(runner, tmp_path):
    out = tmp_path / "rows.json"
    result = runner.invoke(
        main, ["compare", "--p-max", "3", "--q-max", "4", "--format", "json", "--out", str(out)]
    )
    assert result.exit_code == 0
    data = json.loads(out.read_text())
    assert all(row["verified"] for row in data)


def test_compare_config_json(runner, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"bose": {"theta": {"9": 6}, "alpha": {"9": 6}}}))
    result = runner.invoke(
        main, ["compare", "--p-max", "3", "--q-max", "9", "--config", str(cfg)]
    )
    assert result.exit_code == 0
    assert 'bose-fold,"q=9;theta=6;alpha=6",8,9,9/8,true' in result.output


def test_compare_config_toml(runner, tmp_path):
    cfg = tmp_path / "cfg.toml"
    cfg.write_text('[quadratic]\nb = 1\n')
    result = runner.invoke(
        main, ["compare", "--p-max", "3", "--q-max", "3", "--config", str(cfg)]
    )
    assert result.exit_code == 0
    assert 'quadratic,"p=3;a=1;b=1;c=0",3,4,4/3,true' in result.output


def test_verbose_shows_skip_diagnostics(runner):
    result = runner.invoke(main, ["-v", "compare", "--p-max", "3", "--q-max", "3"])
    assert result.exit_code == 0
    assert "quadratic skipped for p=2" in result.stderr
    assert "golomb skipped for q=2" in result.stderr


def test_quiet_run_hides_skip_diagnostics(runner):
    result = runner.invoke(main, ["compare", "--p-max", "3", "--q-max", "3"])
    assert result.exit_code == 0
    assert "skipped" not in result.stderr


def test_help_lists_subcommands(runner):
    result = runner.invoke(main, ["--help"])
    assert result.exit_code == 0
    for name in ("construct", "sidon", "fold", "verify", "search", "compare"):
        assert name in result.output
