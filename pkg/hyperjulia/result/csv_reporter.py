"""CSV 报告 — 扫描结果与校验报告的逐行输出，首行为 # 注释头。"""

import csv
import io
import math
from collections.abc import Mapping, Sequence
from typing import Any

from hyperjulia.result.models import SweepRow, VerificationReport

SWEEP_COLUMNS = ("index", "variable", "value", "lhs", "rhs", "gap", "holds")
REPORT_COLUMNS = (
    "index",
    "name",
    "lhs",
    "rhs",
    "gap",
    "holds",
    "equality",
    "equality_expected",
    "expectation_met",
)


def format_float(value: float) -> str:
    """17 位有效数字，双精度可往返。"""
    if math.isnan(value):
        return "nan"
    return "%.17g" % value


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def _header_line(meta: Mapping[str, Any], columns: Sequence[str]) -> str:
    fields = " ".join(f"{k}={v}" for k, v in meta.items())
    return f"# {fields} columns={','.join(columns)}\n"


def _render(meta: Mapping[str, Any], columns: Sequence[str], rows: list[list[Any]]) -> str:
    buffer = io.StringIO()
    buffer.write(_header_line(meta, columns))
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buffer.getvalue()


def sweep_to_csv(rows: Sequence[SweepRow], meta: Mapping[str, Any]) -> str:
    """meta 依次写入注释头 (tool, version, suite, variable, seed ...)。"""
    return _render(
        meta,
        SWEEP_COLUMNS,
        [[getattr(r, c) for c in SWEEP_COLUMNS] for r in rows],
    )


def reports_to_csv(reports: Sequence[VerificationReport], meta: Mapping[str, Any]) -> str:
    return _render(
        meta,
        REPORT_COLUMNS,
        [[i, *(getattr(r, c) for c in REPORT_COLUMNS[1:])] for i, r in enumerate(reports)],
    )
