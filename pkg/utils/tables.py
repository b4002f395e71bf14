"""Tabular output shared by every command: CSV with LF endings or JSON."""
from dataclasses import dataclass, field
import csv
import json
import math

FORMATS = ("csv", "json")


@dataclass
class FunctionTable:
    columns: list
    rows: list = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        for row in self.rows:
            self._check_row(row)

    def _check_row(self, row):
        if len(row) != len(self.columns):
            raise ValueError(
                f"row has {len(row)} cells but the table has {len(self.columns)} columns"
            )

    def append(self, row):
        row = list(row)
        self._check_row(row)
        self.rows.append(row)


def format_cell(value):
    """17 significant digits for floats, so CSV cells read back to the same double."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        return format(value, ".17g")
    return str(value)


def _json_cell(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def emit_table(table, fmt, sink):
    if fmt == "csv":
        writer = csv.writer(sink, lineterminator="\n")
        writer.writerow(table.columns)
        for row in table.rows:
            writer.writerow([format_cell(v) for v in row])
    elif fmt == "json":
        document = {
            "columns": list(table.columns),
            "rows": [[_json_cell(v) for v in row] for row in table.rows],
            "meta": table.meta,
        }
        json.dump(document, sink, indent=2)
        sink.write("\n")
    else:
        raise ValueError(f"unknown output format {fmt!r}; choose from {', '.join(FORMATS)}")
