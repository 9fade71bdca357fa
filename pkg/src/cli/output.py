"""Output formatting helpers for the CLI."""
import csv
import io
import json
from typing import Any, Iterable, List, Sequence

import click

from src.core.models.enums import OutputFormat


def format_table(headers: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """Format a simple table with padded columns."""
    rows_list: List[List[str]] = [[_cell(value) for value in row] for row in rows]
    widths = [len(str(h)) for h in headers]
    for row in rows_list:
        for idx, cell in enumerate(row):
            if idx >= len(widths):
                widths.append(len(cell))
            else:
                widths[idx] = max(widths[idx], len(cell))

    header_line = "  ".join(str(h).ljust(widths[i]) for i, h in enumerate(headers)).rstrip()
    separator = "-" * len(header_line)
    body_lines = [
        "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip()
        for row in rows_list
    ]
    return "\n".join([header_line, separator] + body_lines)


def format_csv(headers: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """CSV with a header line and LF line endings."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(headers)
    for row in rows:
        writer.writerow([_cell(value) for value in row])
    return buffer.getvalue().rstrip("\n")


def format_json(data: Any) -> str:
    """JSON with UTF-8 characters preserved and keys in insertion order."""
    return json.dumps(data, ensure_ascii=False, indent=2)


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        return " ".join(_cell(v) for v in value)
    return str(value)


def echo_table(headers: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
    """Echo a simple table."""
    click.echo(format_table(headers, rows))


def echo_json(data: Any) -> None:
    """Echo JSON."""
    click.echo(format_json(data))


def echo_csv(headers: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
    """Echo CSV."""
    click.echo(format_csv(headers, rows))


def emit(
    output_format: OutputFormat,
    headers: Sequence[str],
    rows: Sequence[Sequence[Any]],
    payload: Any,
) -> None:
    """Render one result in the requested format.

    Args:
        output_format: plain, json or csv
        headers: Column names for plain and csv
        rows: Cells for plain and csv
        payload: JSON-ready data for json
    """
    if output_format == OutputFormat.JSON:
        echo_json(payload)
    elif output_format == OutputFormat.CSV:
        echo_csv(headers, rows)
    else:
        echo_table(headers, rows)
