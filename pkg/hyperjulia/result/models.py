"""报告数据模型 — 校验报告、估计阶梯、β 报告与扫描行。"""

from typing import Any

from pydantic import BaseModel, Field


# ---------------------------------------------------------------------------
# 错误信息
# ---------------------------------------------------------------------------
class ErrorInfo(BaseModel):
    """错误信息：code / message / detail"""

    code: str
    message: str
    detail: str | None = None


# ---------------------------------------------------------------------------
# 单条不等式校验
# ---------------------------------------------------------------------------
class VerificationReport(BaseModel):
    """
    单条不等式的校验结果。
    holds ⇔ gap >= -(tol_check + widen)；equality ⇔ |gap| <= (tol_eq + widen)·max(1, |rhs|)。
    """

    name: str
    lhs: float
    rhs: float
    gap: float
    holds: bool
    equality: bool
    equality_expected: bool | None = None
    expectation_met: bool | None = None
    inputs: dict[str, Any] = Field(default_factory=dict)
    tolerances: dict[str, float] = Field(default_factory=dict)
    conditioning: float | None = None
    diagnostic: str | None = None

    @property
    def passed(self) -> bool:
        return self.holds and self.expectation_met is not False


# ---------------------------------------------------------------------------
# 角导数下界阶梯
# ---------------------------------------------------------------------------
class EstimateLadder(BaseModel):
    """terms[j] 为前 j+1 项部分和，关于 j 单调不减；residual = β - final 仅作实验量。"""

    k: int
    terms: list[float]
    final: float
    beta: float
    simplified: bool = False
    aligned: bool | None = None
    residual: float | None = None


# ---------------------------------------------------------------------------
# 边界伸缩系数
# ---------------------------------------------------------------------------
class BetaReport(BaseModel):
    """beta 命令的单条输出"""

    sigma: list[float]
    tau: list[float] | None = None
    beta: float
    method: str
    confidence: float = 0.0
    discrepancy: float | None = None
    error: ErrorInfo | None = None


# ---------------------------------------------------------------------------
# 扫描
# ---------------------------------------------------------------------------
class SweepRow(BaseModel):
    """扫描 CSV 的一行"""

    index: int
    variable: str
    value: float
    lhs: float
    rhs: float
    gap: float
    holds: bool


# ---------------------------------------------------------------------------
# 报告文件
# ---------------------------------------------------------------------------
class ReportHeader(BaseModel):
    """可复现头：工具、版本、种子、套件、容差与规格回显"""

    tool: str = "hyperjulia"
    version: str = ""
    seed: int = 0
    suite: str = ""
    tolerances: dict[str, float] = Field(default_factory=dict)
    spec: Any = None


class ReportDocument(BaseModel):
    """verify 输出：header + reports；error 为引擎级异常"""

    header: ReportHeader
    reports: list[VerificationReport] = Field(default_factory=list)
    skipped: list[str] = Field(default_factory=list)
    error: ErrorInfo | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(r.passed for r in self.reports)
