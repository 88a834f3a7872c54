"""JSON / CSV / Text 报告单元测试"""

import io
import json
import math

from rich.console import Console

from hyperjulia.errors import PRECONDITION_FAILED, EngineError
from hyperjulia.lemmas.report import build_report
from hyperjulia.result.csv_reporter import format_float, reports_to_csv, sweep_to_csv
from hyperjulia.result.json_reporter import to_json, to_json_engine_error
from hyperjulia.result.models import (
    BetaReport,
    ErrorInfo,
    ReportDocument,
    ReportHeader,
    SweepRow,
)
from hyperjulia.result.text_reporter import render, render_betas, render_sweep


def _document() -> ReportDocument:
    reports = [
        build_report("julia", 1.0, 2.0, equality_expected=False, inputs={"z": 0.5j}),
        build_report("jwc", 2.0, 2.0, equality_expected=True, diagnostic="收敛"),
        build_report("lower_bound_series", 1.0, math.inf, equality_expected=None),
    ]
    header = ReportHeader(version="0.1.0", seed=7, suite="julia", tolerances={"tol_check": 1e-9})
    return ReportDocument(header=header, reports=reports, skipped=["mercer σ=1: 自同构"])


def _console() -> tuple[Console, io.StringIO]:
    buffer = io.StringIO()
    return Console(file=buffer, width=160, color_system=None), buffer


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------
def test_to_json_non_finite_as_strings():
    """非有限值写作字符串，输出为严格 JSON"""
    data = json.loads(to_json(_document()))
    series = data["reports"][2]
    assert series["rhs"] == "inf"
    assert series["gap"] == "inf"
    assert series["equality"] is False
    assert data["reports"][0]["inputs"]["z"] == [0.0, 0.5]
    assert data["header"]["seed"] == 7
    assert data["error"] is None


def test_to_json_repr_floats():
    """浮点数按最短可往返形式输出"""
    text = to_json({"value": 0.1 + 0.2, "nan": math.nan}, indent=None)
    assert text == '{"value": 0.30000000000000004, "nan": "nan"}'


def test_to_json_is_stable():
    assert to_json(_document()) == to_json(_document())


def test_to_json_engine_error():
    header = ReportHeader(suite="two-point")
    text = to_json_engine_error(header, EngineError(PRECONDITION_FAILED, "自同构"))
    data = json.loads(text)
    assert data["reports"] == []
    assert data["error"] == {"code": PRECONDITION_FAILED, "message": "自同构", "detail": None}


# ---------------------------------------------------------------------------
# CSV
# ---------------------------------------------------------------------------
def test_format_float():
    assert format_float(0.1) == "0.10000000000000001"
    assert format_float(math.inf) == "inf"
    assert format_float(math.nan) == "nan"


def test_reports_to_csv():
    text = reports_to_csv(_document().reports, {"tool": "hyperjulia", "seed": 7})
    lines = text.splitlines()
    assert lines[0] == (
        "# tool=hyperjulia seed=7 "
        "columns=index,name,lhs,rhs,gap,holds,equality,equality_expected,expectation_met"
    )
    assert lines[1].startswith("index,name,lhs")
    assert lines[2] == "0,julia,1,2,1,true,false,false,true"
    # 期望未知时为空单元格
    assert lines[4] == "2,lower_bound_series,1,inf,inf,true,false,,"


def test_sweep_to_csv():
    rows = [
        SweepRow(index=0, variable="r", value=0.5, lhs=1.5, rhs=2.0, gap=0.5, holds=True),
        SweepRow(index=1, variable="r", value=0.75, lhs=1.75, rhs=2.0, gap=0.25, holds=True),
    ]
    text = sweep_to_csv(rows, {"suite": "jwc", "variable": "r"})
    lines = text.splitlines()
    assert lines[0] == "# suite=jwc variable=r columns=index,variable,value,lhs,rhs,gap,holds"
    assert lines[3] == "1,r,0.75,1.75,2,0.25,true"
    assert len(lines) == 4


# ---------------------------------------------------------------------------
# Text
# ---------------------------------------------------------------------------
def test_render_summary():
    console, buffer = _console()
    render(_document(), console=console)
    output = buffer.getvalue()
    assert "julia" in output
    assert "passed" in output
    assert "3/3 通过" in output
    assert "跳过 mercer" not in output


def test_render_verbose_and_error():
    """verbose 时输出诊断与跳过原因；error 时状态为 error"""
    document = _document()
    document.error = ErrorInfo(code=PRECONDITION_FAILED, message="β 无穷")
    console, buffer = _console()
    render(document, verbose=True, console=console)
    output = buffer.getvalue()
    assert "error" in output
    assert "β 无穷" in output
    assert "jwc: 收敛" in output
    assert "跳过 mercer" in output


def test_render_sweep_and_betas():
    console, buffer = _console()
    render_sweep(
        [SweepRow(index=0, variable="k", value=1, lhs=1.0, rhs=2.0, gap=1.0, holds=True)],
        console=console,
    )
    render_betas(
        [
            BetaReport(sigma=[1.0, 0.0], tau=[1.0, 0.0], beta=3.0, method="exact"),
            BetaReport(
                sigma=[0.0, 1.0],
                beta=math.inf,
                method="radial",
                error=ErrorInfo(code=PRECONDITION_FAILED, message="常值"),
            ),
        ],
        console=console,
    )
    output = buffer.getvalue()
    assert "variable" in output
    assert "exact" in output and "radial" in output
    assert "常值" in output
