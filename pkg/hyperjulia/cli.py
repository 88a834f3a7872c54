"""CLI 入口点 - hyperjulia / hj 命令"""

from __future__ import annotations

import io
import logging
import math
import sys
from collections.abc import Callable
from pathlib import Path
from typing import Any, NoReturn

import click  # type: ignore[reportMissingImports]
from rich.console import Console

from hyperjulia import __version__
from hyperjulia.config import Config
from hyperjulia.core.factory import build_maps, random_blaschke_specs
from hyperjulia.core.models import SUITES, SuiteConfig, SweepGrid
from hyperjulia.core.runner import BETA_METHODS, make_header, measure_beta, verify
from hyperjulia.errors import OUTPUT_WRITE_ERROR, SPEC_VALIDATION_ERROR, EngineError
from hyperjulia.parser import dump_specs, parse_spec, validate_model
from hyperjulia.result.csv_reporter import reports_to_csv, sweep_to_csv
from hyperjulia.result.json_reporter import to_json, to_json_engine_error
from hyperjulia.result.models import BetaReport, ErrorInfo
from hyperjulia.result.text_reporter import render, render_betas, render_sweep
from hyperjulia.sweep import run_sweep

logger = logging.getLogger("hyperjulia")

# 为避免类型检查器对 click 动态属性报错，这里通过 getattr 创建别名。
group = getattr(click, "group")
option = getattr(click, "option")
echo = getattr(click, "echo")
Choice = getattr(click, "Choice")
pass_context = getattr(click, "pass_context")

FORMATS = ["json", "csv", "text"]
# 文本报告写入文件时的固定宽度
TEXT_WIDTH = 120


# ---------------------------------------------------------------------------
# 参数解析
# ---------------------------------------------------------------------------
def _parse_pair(text: str, label: str) -> tuple[float, float]:
    """`re,im` 或 `re`，解析失败 → SPEC_VALIDATION_ERROR。"""
    parts = [p.strip() for p in text.split(",")]
    try:
        if len(parts) == 1:
            return float(parts[0]), 0.0
        if len(parts) == 2:
            return float(parts[0]), float(parts[1])
    except ValueError:
        pass
    raise EngineError(SPEC_VALIDATION_ERROR, f"{label} 格式应为 re,im，实际 {text!r}")


def _parse_sigmas(values: tuple[str, ...]) -> list[tuple[float, float]] | str:
    if not values or values == ("auto",):
        return "auto"
    if "auto" in values:
        raise EngineError(SPEC_VALIDATION_ERROR, "--sigma auto 不能与具体的 σ 混用")
    return [_parse_pair(v, "--sigma") for v in values]


def _parse_points(text: str | None) -> list[tuple[float, float]] | None:
    if text is None:
        return None
    return [_parse_pair(p, "--points") for p in text.split(";") if p.strip()]


def _suite_config(suite: str, params: dict[str, Any]) -> SuiteConfig:
    data: dict[str, Any] = {
        "suite": suite,
        "sigmas": _parse_sigmas(params["sigma"]),
        "points": _parse_points(params["points"]),
        "k": params["k"],
        "seed": params["seed"],
        "tol_check": params["tol_check"],
        "tol_eq": params["tol_eq"],
    }
    if params["z0"] is not None:
        data["z0"] = _parse_pair(params["z0"], "--z0")
    if params["samples"] is not None:
        data["samples"] = params["samples"]
    return validate_model(SuiteConfig, data, "suite")


# ---------------------------------------------------------------------------
# 输出
# ---------------------------------------------------------------------------
def _write(text: str, out: str | None) -> None:
    """--out 给出时写文件，否则写 stdout。"""
    if out is None:
        echo(text, nl=not text.endswith("\n"))
        return
    try:
        Path(out).write_text(text, encoding="utf-8")
    except OSError as e:
        raise EngineError(OUTPUT_WRITE_ERROR, f"无法写入输出文件: {out}", detail=str(e)) from e
    logger.info(f"输出已写入 {out}")


def _text_console(out: str | None) -> tuple[Console, io.StringIO | None]:
    if out is None:
        return Console(), None
    buffer = io.StringIO()
    return Console(file=buffer, width=TEXT_WIDTH, no_color=True), buffer


def _fail(
    e: EngineError,
    output_format: str,
    config: SuiteConfig | None,
    out: str | None,
) -> NoReturn:
    """引擎级异常：json 格式输出结构化错误，其余格式写 stderr；按错误码退出。"""
    if output_format == "json":
        header = make_header(config or SuiteConfig(), None)
        try:
            _write(to_json_engine_error(header, e), out)
        except EngineError as write_error:
            echo(write_error.message, err=True)
    else:
        echo(f"[{e.code}] {e.message}", err=True)
        if e.detail and logger.isEnabledFor(logging.DEBUG):
            echo(e.detail, err=True)
    sys.exit(e.exit_code)


def _enable_debug(verbose: bool) -> None:
    if verbose:
        logging.getLogger("hyperjulia").setLevel(logging.DEBUG)


def _exit_code(error: ErrorInfo | None) -> int:
    if error is None:
        return 0
    return EngineError(error.code, error.message, error.detail).exit_code


# ---------------------------------------------------------------------------
# 公共选项
# ---------------------------------------------------------------------------
def _run_options(default_suite: str, default_format: str) -> Callable[[Any], Any]:
    """verify 与 sweep 共用的选项。"""
    options = [
        option("--spec", required=True, help="映射规格文件 (JSON / YAML)，可为单个或列表"),
        option(
            "--suite",
            type=Choice(list(SUITES)),
            default=default_suite,
            show_default=True,
            help="校验套件",
        ),
        option(
            "--sigma",
            multiple=True,
            help="边界点 σ，格式 re,im，可重复；auto 为自动选取 (默认)",
        ),
        option("--points", default=None, help="链基点，格式 re,im;re,im"),
        option("--k", type=int, default=None, help="链长度或消失阶"),
        option("--z0", default=None, help="内部不动点 z₀，格式 re,im"),
        option("--seed", type=int, default=0, show_default=True, help="随机种子"),
        option("--samples", type=int, default=None, help="每个族的随机样本数"),
        option("--tol-check", "tol_check", type=float, default=None, help="不等式容差"),
        option("--tol-eq", "tol_eq", type=float, default=None, help="等号容差"),
        option("--out", default=None, help="输出文件路径，缺省写 stdout"),
        option(
            "-f",
            "--format",
            "output_format",
            type=Choice(FORMATS),
            default=default_format,
            show_default=True,
            help="输出格式",
        ),
        option("-v", "--verbose", is_flag=True, help="详细输出模式 (DEBUG 日志)"),
    ]

    def decorate(func: Any) -> Any:
        for opt in reversed(options):
            func = opt(func)
        return func

    return decorate


@group()
@option("-v", "--verbose", is_flag=True, help="详细输出模式 (DEBUG 日志)")
@pass_context
def main(ctx: Any, verbose: bool) -> None:
    """hyperjulia: 单位圆盘全纯自映射的双曲差商与多点 Julia 引理验证工具.

    - verify: 运行校验套件，输出报告
    - sweep:  沿单个变量扫描，输出 CSV
    - random: 生成随机 Blaschke 乘积规格
    - beta:   计算边界伸缩系数
    """
    cfg = Config()
    logging.basicConfig(level=cfg.LOG_LEVEL, format=cfg.LOG_FORMAT)
    _enable_debug(verbose)
    ctx.ensure_object(dict)
    ctx.obj["verbose"] = verbose


@main.command("verify")
@_run_options("all", "json")
@pass_context
def verify_command(
    ctx: Any,
    spec: str,
    suite: str,
    output_format: str,
    out: str | None,
    verbose: bool,
    **params: Any,
) -> None:
    """运行校验套件.

    退出码：全部通过 0，存在失败 1，规格错误 2，极限不确定 3。
    """
    _enable_debug(verbose)
    config: SuiteConfig | None = None
    try:
        config = _suite_config(suite, params)
        specs = parse_spec(spec)
        maps = build_maps(specs)
        document = verify(maps, config, spec=dump_specs(specs))
        if output_format == "json":
            _write(to_json(document), out)
        elif output_format == "csv":
            meta = {
                "tool": "hyperjulia",
                "version": __version__,
                "suite": suite,
                "seed": config.seed,
            }
            _write(reports_to_csv(document.reports, meta), out)
        else:
            console, buffer = _text_console(out)
            render(document, verbose=verbose or ctx.obj["verbose"], console=console)
            if buffer is not None:
                _write(buffer.getvalue(), out)
    except EngineError as e:
        _fail(e, output_format, config, out)

    if document.error is not None:
        sys.exit(_exit_code(document.error))
    if not document.passed:
        failed = sum(1 for r in document.reports if not r.passed)
        logger.warning(f"{failed} 条报告未通过")
        sys.exit(1)


@main.command("sweep")
@_run_options("julia", "csv")
@option(
    "--variable",
    type=Choice(["z", "w", "r", "k"]),
    required=True,
    help="扫描变量：z / w (径向点)、r (径向商)、k (下界阶梯)",
)
@option("--start", type=float, required=True, help="区间起点")
@option("--stop", type=float, required=True, help="区间终点")
@option("--steps", type=int, default=20, show_default=True, help="网格点数 (k 扫描忽略)")
@option(
    "--spacing",
    type=Choice(["linear", "log1m"]),
    default="linear",
    show_default=True,
    help="linear 等距；log1m 在 1-x 上对数等距",
)
@option("--simplified", is_flag=True, help="k 扫描使用简化阶梯")
def sweep_command(
    spec: str,
    suite: str,
    output_format: str,
    out: str | None,
    variable: str,
    start: float,
    stop: float,
    steps: int,
    spacing: str,
    simplified: bool,
    verbose: bool,
    **params: Any,
) -> None:
    """沿单个变量扫描一个映射，每个网格点一行."""
    _enable_debug(verbose)
    config: SuiteConfig | None = None
    try:
        config = _suite_config(suite, params)
        grid = validate_model(
            SweepGrid,
            {
                "variable": variable,
                "start": start,
                "stop": stop,
                "steps": steps,
                "spacing": spacing,
                "simplified": simplified,
            },
            "sweep",
        )
        specs = parse_spec(spec)
        if len(specs) > 1:
            logger.warning(f"规格文件含 {len(specs)} 个映射，sweep 只使用第一个")
        f = build_maps(specs[:1])[0]
        rows = run_sweep(f, config, grid)
        if output_format == "csv":
            meta = {
                "tool": "hyperjulia",
                "version": __version__,
                "suite": suite,
                "variable": variable,
                "spacing": spacing,
                "seed": config.seed,
            }
            _write(sweep_to_csv(rows, meta), out)
        elif output_format == "json":
            header = make_header(config, dump_specs(specs[:1]))
            payload = {"header": header.model_dump(), "rows": [r.model_dump() for r in rows]}
            _write(to_json(payload), out)
        else:
            console, buffer = _text_console(out)
            render_sweep(rows, console=console)
            if buffer is not None:
                _write(buffer.getvalue(), out)
    except EngineError as e:
        _fail(e, output_format, config, out)

    if not all(r.holds for r in rows):
        sys.exit(1)


@main.command("random")
@option("--seed", type=int, default=0, show_default=True, help="随机种子")
@option("--degree", type=int, required=True, help="Blaschke 乘积次数 (>= 1)")
@option("--count", type=int, default=1, show_default=True, help="生成个数")
@option("--out", default=None, help="输出文件路径，缺省写 stdout")
def random_command(seed: int, degree: int, count: int, out: str | None) -> None:
    """生成随机 Blaschke 乘积，输出 MapSpec JSON 数组."""
    try:
        specs = random_blaschke_specs(seed, degree, count)
        _write(to_json(dump_specs(list(specs))), out)
    except EngineError as e:
        _fail(e, "text", None, out)


@main.command("beta")
@option("--spec", required=True, help="映射规格文件 (JSON / YAML)")
@option("--sigma", default="1,0", show_default=True, help="边界点 σ，格式 re,im")
@option(
    "--method",
    type=Choice(list(BETA_METHODS)),
    default="exact",
    show_default=True,
    help="exact 精确值 / radial 径向外推 / both 两者并给出偏差",
)
@option("--out", default=None, help="输出文件路径，缺省写 stdout")
@option(
    "-f",
    "--format",
    "output_format",
    type=Choice(["json", "text"]),
    default="text",
    show_default=True,
    help="输出格式",
)
def beta_command(spec: str, sigma: str, method: str, out: str | None, output_format: str) -> None:
    """计算边界伸缩系数 β.

    β = +∞ 或径向极限不确定时退出码 3。
    """
    try:
        s = complex(*_parse_pair(sigma, "--sigma"))
        maps = build_maps(parse_spec(spec))
    except EngineError as e:
        _fail(e, output_format, None, out)

    reports: list[BetaReport] = []
    codes: list[int] = []
    for f in maps:
        try:
            report = measure_beta(f, s, method)
        except EngineError as e:
            logger.error(f"{f.name} 的 β 计算失败: [{e.code}] {e.message}")
            report = BetaReport(
                sigma=[s.real, s.imag],
                beta=math.nan,
                method=method,
                error=ErrorInfo(**e.to_dict()),
            )
            codes.append(e.exit_code)
        else:
            if not math.isfinite(report.beta):
                echo(f"{f.name}: σ = {s} 处 β = +∞ (无有限角导数)", err=True)
                codes.append(3)
        reports.append(report)

    try:
        if output_format == "json":
            _write(to_json(reports), out)
        else:
            console, buffer = _text_console(out)
            render_betas(reports, console=console)
            if buffer is not None:
                _write(buffer.getvalue(), out)
    except EngineError as e:
        _fail(e, output_format, None, out)

    if codes:
        sys.exit(codes[0])


if __name__ == "__main__":
    main()
