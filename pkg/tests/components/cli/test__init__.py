"""Test cli component."""
from __future__ import annotations

import json
import logging
from collections.abc import Iterator

import pytest

from whittaker.components.cli import (
    build_parser,
    config_overrides,
    init,
    main,
    run,
    run_config,
)
from whittaker.components.cli.verbs import VERBS, VerbSpec
from whittaker.config import build_config
from whittaker.const import CONFIG_PATH_ENV, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE
from whittaker.exceptions import BadParam


@pytest.fixture(autouse=True)
def restore_logging(monkeypatch) -> Iterator[None]:
    """Restore the logger class and root level changed by main."""
    monkeypatch.delenv(CONFIG_PATH_ENV, raising=False)
    root_level = logging.getLogger("").level
    yield
    logging.setLoggerClass(logging.Logger)
    logging.getLogger("").setLevel(root_level)


def _config(args):
    return build_config(args.config, config_overrides(args))


def test_parser_verb_arguments():
    """Test that verb arguments are only added where they are read."""
    parser = build_parser()
    args = parser.parse_args(["endo", "--p", "5", "--ell", "1", "--t", "1"])
    assert args.verb == "endo"
    assert args.t == 1
    assert args.chi is None
    with pytest.raises(SystemExit):
        parser.parse_args(["ring-info", "--t", "1"])
    with pytest.raises(SystemExit):
        parser.parse_args(["ring-info", "--flavor", "padic"])


def test_every_verb_has_a_parser():
    """Test that build_parser knows every verb."""
    parser = build_parser()
    for verb in VERBS:
        assert parser.parse_args([verb]).verb == verb


@pytest.mark.parametrize(
    "argv",
    [
        ["hom", "--p", "3", "--ell", "1", "--t", "2"],
        ["hom", "--p", "3", "--ell", "1", "--chi", "2"],
        ["cor16", "--p", "3", "--max-ell", "1"],
    ],
)
def test_run_config_bad_param(argv):
    """Test that verb arguments are checked against the ring."""
    args = build_parser().parse_args(argv)
    with pytest.raises(BadParam):
        run_config(args, _config(args))


def test_run_ring_info():
    """Test the ring-info report over F_3."""
    args = build_parser().parse_args(["ring-info", "--p", "3", "--ell", "1"])
    report = run(run_config(args, _config(args)))
    assert report.command == "ring-info"
    assert report.ring == {"name": "Z/3^1", "p": 3, "ell": 1, "q": 3, "flavor": "zmod"}
    assert report.result["group"]["order"] == 48
    assert report.result["group"]["enumerated"] == 48
    assert report.result["unit_characters"]["count"] == 2
    assert report.paper_match is True


def test_main_json(capsys):
    """Test that main writes a JSON report and exits with 0."""
    assert main(["ring-info", "--p", "3", "--ell", "1"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["command"] == "ring-info"
    assert data["schema"] == 1
    assert data["paper_match"] is True
    assert data["args"] == {"t": None, "t2": None, "chi": None, "max_ell": None}


def test_main_deterministic(capsys):
    """Test that two runs give identical bytes."""
    main(["hom", "--p", "3", "--ell", "1", "--seed", "4"])
    first = capsys.readouterr().out
    main(["hom", "--p", "3", "--ell", "1", "--seed", "4"])
    assert capsys.readouterr().out == first


def test_main_hom(capsys):
    """Test the Mackey dimensions over F_3 against the predictions."""
    assert main(["hom", "--p", "3", "--ell", "1"]) == EXIT_OK
    rows = json.loads(capsys.readouterr().out)["result"]["rows"]
    assert {(row["chi"], row["t"]): row["hom"] for row in rows} == {
        (0, 0): 4,
        (0, 1): 3,
        (1, 0): 4,
        (1, 1): 3,
    }


def test_main_markdown(capsys):
    """Test the markdown layout of table1."""
    assert main(["table1", "--p", "3", "--ell", "1", "--format", "md"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("## table1 over GL2(Z/3^1)")
    assert "| Number | 1 | 2 | 3 |" in out
    assert "| Dimension | 4 | 3 | 2 |" in out
    assert out.endswith("paper_match: true\n")


@pytest.mark.parametrize(
    "argv",
    [
        ["ring-info", "--p", "4"],
        ["ring-info", "--ell", "0"],
        ["hom", "--p", "3", "--ell", "1", "--t", "3"],
        ["construct-sns", "--p", "3", "--ell", "2"],
        ["table1", "--p", "3", "--ell", "1", "--budget-elems", "10"],
    ],
)
def test_main_usage_error(capsys, argv):
    """Test that bad parameters exit with 2 and print the usage."""
    assert main(argv) == EXIT_USAGE
    captured = capsys.readouterr()
    assert captured.out == ""
    assert f"usage: whittaker {argv[0]}" in captured.err


def test_main_config_file(tmp_path, capsys):
    """Test that command line values win over the configuration file."""
    config_path = tmp_path / "config.yaml"
    config_path.write_text("ring:\n  p: 5\n  ell: 3\n")
    assert main(["ring-info", "--config", str(config_path), "--ell", "1"]) == EXIT_OK
    ring = json.loads(capsys.readouterr().out)["ring"]
    assert (ring["p"], ring["ell"]) == (5, 1)


def test_main_mismatch(mocker, capsys):
    """Test that a False verdict exits with 1."""
    mocker.patch.dict(
        VERBS,
        {"ring-info": VerbSpec(lambda cfg: {"paper_match": False}, "Patched.")},
    )
    assert main(["ring-info", "--p", "3", "--ell", "1"]) == EXIT_MISMATCH
    assert json.loads(capsys.readouterr().out)["paper_match"] is False


def test_init(mocker):
    """Test that init enables logging before running."""
    enable_logging = mocker.patch("whittaker.components.cli.enable_logging")
    mocked_main = mocker.patch("whittaker.components.cli.main", return_value=0)
    assert init(["ring-info"]) == 0
    enable_logging.assert_called_once()
    mocked_main.assert_called_once_with(["ring-info"])
