import json
import math
import typing

import models

FORMAT_CSV: typing.Final = "csv"
FORMAT_JSON: typing.Final = "json"


def format_value(value) -> str:
    """csv text for one cell, reals at 17 significant digits, booleans as true/false, None as empty"""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        return format(value, ".17g")
    if isinstance(value, dict):
        return ";".join(f"{key}={format_value(item)}" for key, item in value.items())

    return str(value)


def json_value(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {key: json_value(item) for key, item in value.items()}

    return value


def record_row(record: models.SweepRecord) -> dict:
    row = record.model_dump()

    return {column: row[column] for column in models.sweep_record.COLUMNS}


def render(columns: list[str], rows: list[dict], format: str = FORMAT_CSV, single: bool = False) -> str:
    """
    Rows as csv with a header line, or as a json list of objects, keys in column order.

    Output depends only on the rows, so identical runs render byte-identical text.
    """
    if format == FORMAT_JSON:
        objects = [{column: json_value(row.get(column)) for column in columns} for row in rows]
        return json.dumps(objects[0] if single else objects, indent=2, allow_nan=False) + "\n"

    lines = [",".join(columns)]

    for row in rows:
        lines.append(",".join(format_value(row.get(column)) for column in columns))

    return "\n".join(lines) + "\n"


def render_records(records: list[models.SweepRecord], format: str = FORMAT_CSV, single: bool = False) -> str:
    return render(models.sweep_record.COLUMNS, [record_row(record) for record in records], format, single)


def write(text: str, path: str | None, stream: typing.TextIO):
    if path is None:
        stream.write(text)
        return

    with open(path, "w", encoding="utf-8", newline="\n") as file:
        file.write(text)
