"""Reports and their JSON and markdown renderings."""
from __future__ import annotations

import json
from collections.abc import Callable, Iterator
from dataclasses import dataclass
from typing import Any, Final, Union

import voluptuous as vol

from whittaker.const import FLAVORS, REPORT_SCHEMA_VERSION
from whittaker.helpers.json import dumps

from .const import (
    FORMAT_JSON,
    FORMAT_MD,
    PAPER_MATCH,
    PAPER_MATCH_NA,
    VERB_A_BOUND,
    VERB_COR16,
    VERB_DGG,
    VERB_ENDO,
    VERB_GG_FREE,
    VERB_TABLE1,
)

Verdict = Union[bool, str]

REPORT_SCHEMA: Final = vol.Schema(
    {
        vol.Required("schema"): REPORT_SCHEMA_VERSION,
        vol.Required("command"): str,
        vol.Required("args"): {str: vol.Any(None, int, str)},
        vol.Required("ring"): {
            vol.Required("name"): str,
            vol.Required("p"): int,
            vol.Required("ell"): int,
            vol.Required("q"): int,
            vol.Required("flavor"): vol.In(FLAVORS),
        },
        vol.Required("result"): dict,
        vol.Required(PAPER_MATCH): vol.Any(bool, PAPER_MATCH_NA),
    }
)


def _verdicts(data: Any) -> Iterator[Verdict]:
    if isinstance(data, dict):
        for key, value in data.items():
            if key == PAPER_MATCH:
                yield value
            else:
                yield from _verdicts(value)
    elif isinstance(data, list):
        for item in data:
            yield from _verdicts(item)


def paper_match_of(result: dict[str, Any]) -> Verdict:
    """Return False if any nested verdict is False, True if one is True, else n/a."""
    verdicts = list(_verdicts(result))
    if any(verdict is False for verdict in verdicts):
        return False
    if any(verdict is True for verdict in verdicts):
        return True
    return PAPER_MATCH_NA


@dataclass
class Report:
    """The outcome of one command."""

    command: str
    args: dict[str, Any]
    ring: dict[str, Any]
    result: dict[str, Any]

    @property
    def paper_match(self) -> Verdict:
        """Return the combined verdict of the result."""
        return paper_match_of(self.result)

    def as_dict(self) -> dict[str, Any]:
        """Return the report as plain JSON types."""
        return json.loads(
            dumps(
                {
                    "schema": REPORT_SCHEMA_VERSION,
                    "command": self.command,
                    "args": self.args,
                    "ring": self.ring,
                    "result": self.result,
                    PAPER_MATCH: self.paper_match,
                }
            )
        )


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    if value is None:
        return ""
    return str(value)


def md_table(headers: list[str], rows: list[list[Any]]) -> list[str]:
    """Return the lines of a markdown table."""
    lines = [
        "| " + " | ".join(headers) + " |",
        "|" + "|".join("---" for _ in headers) + "|",
    ]
    for row in rows:
        lines.append("| " + " | ".join(_cell(value) for value in row) + " |")
    return lines


def _flatten(data: Any, prefix: str = "") -> Iterator[tuple[str, Any]]:
    if isinstance(data, dict) and data:
        for key in sorted(data):
            name = f"{prefix}.{key}" if prefix else str(key)
            yield from _flatten(data[key], name)
    elif (
        isinstance(data, list)
        and data
        and all(isinstance(item, dict) for item in data)
    ):
        for index, item in enumerate(data):
            yield from _flatten(item, f"{prefix}[{index}]")
    else:
        yield prefix, data


def _md_generic(result: dict[str, Any]) -> list[str]:
    return md_table(["key", "value"], [[key, value] for key, value in _flatten(result)])


def _blocks_cell(blocks: list[dict[str, int]]) -> str:
    return " + ".join(f"{block['m']}x{block['count']}" for block in blocks)


def _md_table1(result: dict[str, Any]) -> list[str]:
    rows = result["rows"]

    def cell(row: dict[str, Any], computed: str, expected: str) -> str:
        found = row[computed]
        if isinstance(found, list):
            found = ", ".join(str(value) for value in found)
        if row["match"]:
            return str(found)
        return f"{found} (expected {row[expected]})"

    return md_table(
        [""] + [row["type"] for row in rows],
        [
            ["Number"] + [cell(row, "computed_count", "count") for row in rows],
            ["Dimension"] + [cell(row, "computed_dims", "dim") for row in rows],
        ],
    ) + ["", f"non-regular irreducibles: {result['non_regular']}"]


def _md_dgg(result: dict[str, Any]) -> list[str]:
    lines: list[str] = []
    for report in result["reports"]:
        if lines:
            lines.append("")
        lines.append(f"### V^{report['t']}_chi[{report['chi']}]")
        lines.append("")
        lines.extend(
            md_table(
                ["type", "dim", "mult"],
                [
                    [row["type"], row["dim"], row["mult"]]
                    for row in report["constituents"]
                ],
            )
        )
        lines.append("")
        lines.append(f"total dimension: {report['dimension']}")
        checks = sorted(report["checks"].items())
        lines.extend(f"{name}: {_cell(value)}" for name, value in checks)
    return lines


def _md_endo(result: dict[str, Any]) -> list[str]:
    return md_table(
        ["t", "chi", "parity", "dim", "blocks", "predicted", PAPER_MATCH],
        [
            [
                report["t"],
                report["chi"],
                report["parity"],
                report["dim"],
                _blocks_cell(report["blocks"]),
                _blocks_cell(report.get("predicted", [])),
                report[PAPER_MATCH],
            ]
            for report in result["reports"]
        ],
    )


def _md_a_bound(result: dict[str, Any]) -> list[str]:
    return md_table(
        ["t", "ell", "a", "predicted", "printed", "disputed"],
        [
            [
                row["t"],
                row["ell"],
                row["a"],
                row.get("predicted"),
                row.get("printed"),
                row.get("disputed", False),
            ]
            for row in result["rows"]
        ],
    )


def _md_gg_free(result: dict[str, Any]) -> list[str]:
    lines = [result["summary"], ""]
    lines.extend(
        md_table(
            ["chi", "dim", "blocks"],
            [
                [row["chi"], row["dim"], _blocks_cell(row["blocks"])]
                for row in result["signatures"]
            ],
        )
    )
    return lines


MARKDOWN_RENDERERS: Final[dict[str, Callable[[dict[str, Any]], list[str]]]] = {
    VERB_TABLE1: _md_table1,
    VERB_DGG: _md_dgg,
    VERB_ENDO: _md_endo,
    VERB_A_BOUND: _md_a_bound,
    VERB_COR16: _md_a_bound,
    VERB_GG_FREE: _md_gg_free,
}


def render_markdown(data: dict[str, Any]) -> str:
    """Return the markdown rendering of a report dict."""
    ring = data["ring"]
    given = sorted(data["args"].items())
    args = ", ".join(f"{key}={value}" for key, value in given if value is not None)
    renderer = MARKDOWN_RENDERERS.get(data["command"], _md_generic)
    lines = [f"## {data['command']} over GL2({ring['name']})", ""]
    if args:
        lines.extend([f"arguments: {args}", ""])
    lines.extend(renderer(data["result"]))
    lines.extend(["", f"{PAPER_MATCH}: {_cell(data[PAPER_MATCH])}"])
    return "\n".join(lines)


def emit(report: Report, output_format: str = FORMAT_JSON) -> bytes:
    """Return the report as bytes, identical for identical reports."""
    data = REPORT_SCHEMA(report.as_dict())
    if output_format == FORMAT_MD:
        text = render_markdown(data)
    else:
        text = dumps(data)
    return (text.rstrip("\n") + "\n").encode("utf-8")
