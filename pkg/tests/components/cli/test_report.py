"""Test reports and their renderings."""
import json
from fractions import Fraction

import pytest
import voluptuous as vol

from whittaker.components.cli.report import (
    REPORT_SCHEMA,
    Report,
    emit,
    md_table,
    paper_match_of,
    render_markdown,
)

RING = {"name": "Z/3^2", "p": 3, "ell": 2, "q": 3, "flavor": "zmod"}


def _report(command: str, result: dict) -> Report:
    return Report(command=command, args={"t": 1, "chi": None}, ring=RING, result=result)


@pytest.mark.parametrize(
    "result, expected",
    [
        ({}, "n/a"),
        ({"paper_match": True}, True),
        ({"reports": [{"paper_match": True}, {"paper_match": False}]}, False),
        ({"a": {"b": [{"paper_match": "n/a"}]}}, "n/a"),
        ({"a": {"paper_match": True}, "b": {"c": 1}}, True),
    ],
)
def test_paper_match_of(result, expected):
    """Test that one False verdict decides the report."""
    assert paper_match_of(result) == expected


def test_report_as_dict():
    """Test that the report validates against the schema."""
    data = _report("hom", {"value": Fraction(3), "paper_match": True}).as_dict()
    assert REPORT_SCHEMA(data) == data
    assert data["result"]["value"] == 3
    assert data["paper_match"] is True


def test_report_schema_rejects():
    """Test that the ring block is checked."""
    data = _report("hom", {}).as_dict()
    data["ring"]["flavor"] = "padic"
    with pytest.raises(vol.Invalid):
        REPORT_SCHEMA(data)


def test_emit_json():
    """Test that emitted JSON is sorted and ends with a newline."""
    raw = emit(_report("hom", {"rows": [{"hom": 13, "chi": 0}]}))
    assert raw.endswith(b"}\n")
    assert raw == emit(_report("hom", {"rows": [{"chi": 0, "hom": 13}]}))
    assert json.loads(raw)["result"]["rows"] == [{"chi": 0, "hom": 13}]


def test_md_table():
    """Test the markdown table layout."""
    assert md_table(["a", "b"], [[True, None], [[1], {"x": 2}]]) == [
        "| a | b |",
        "|---|---|",
        "| true |  |",
        '| [1] | {"x":2} |',
    ]


def test_render_generic():
    """Test the key/value rendering of reports without a layout of their own."""
    text = render_markdown(
        _report("ring-info", {"group": {"order": 3888}, "size": 9}).as_dict()
    )
    assert text.startswith("## ring-info over GL2(Z/3^2)\n\narguments: t=1\n")
    assert "| group.order | 3888 |" in text
    assert text.endswith("paper_match: n/a")


def test_render_gg_free():
    """Test the summary line of gg-free."""
    result = {
        "summary": "multiplicity-free: true, blocks (1x54)",
        "signatures": [{"chi": 0, "dim": 9, "blocks": [{"m": 1, "count": 9}]}],
        "paper_match": True,
    }
    text = emit(_report("gg-free", result), "md").decode()
    assert "multiplicity-free: true, blocks (1x54)" in text
    assert "| 0 | 9 | 1x9 |" in text


def test_render_endo():
    """Test the blocks column of endo."""
    result = {
        "reports": [
            {
                "t": 1,
                "chi": 0,
                "parity": 1,
                "dim": 13,
                "blocks": [{"m": 1, "count": 5}, {"m": 2, "count": 2}],
                "predicted": [{"m": 1, "count": 5}, {"m": 2, "count": 2}],
                "paper_match": True,
            }
        ]
    }
    text = render_markdown(_report("endo", result).as_dict())
    assert "| 1 | 0 | 1 | 13 | 1x5 + 2x2 | 1x5 + 2x2 | true |" in text
