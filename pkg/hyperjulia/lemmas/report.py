"""由 lhs/rhs 组装 VerificationReport，统一容差与等式判定。"""

from __future__ import annotations

import math
from collections.abc import Mapping, Sequence
from typing import Any

from hyperjulia.config import Config
from hyperjulia.geometry.disk import BoundaryPoint, DiskPoint
from hyperjulia.result.models import VerificationReport


def encode(value: Any) -> Any:
    """输入回显：复数与点转为 [re, im]，序列逐项转换。"""
    if isinstance(value, (DiskPoint, BoundaryPoint)):
        value = value.value
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, Mapping):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, Sequence) and not isinstance(value, str):
        return [encode(v) for v in value]
    return value


def build_report(
    name: str,
    lhs: float,
    rhs: float,
    *,
    equality_expected: bool | None,
    inputs: Mapping[str, Any] | None = None,
    widen: float = 0.0,
    conditioning: float | None = None,
    diagnostic: str | None = None,
    tol_check: float | None = None,
    tol_eq: float | None = None,
) -> VerificationReport:
    """
    gap = rhs - lhs。
    - holds ⇔ gap >= -(tol_check + widen)
    - equality ⇔ |gap| <= (tol_eq + widen)·max(1, |rhs|)，非有限值永不相等
    - expectation_met = (equality == equality_expected)，期望未知时为 None
    """
    cfg = Config()
    tc = cfg.TOL_CHECK if tol_check is None else tol_check
    te = cfg.TOL_EQ if tol_eq is None else tol_eq
    lhs, rhs = float(lhs), float(rhs)
    gap = rhs - lhs if not (math.isinf(lhs) and math.isinf(rhs)) else -math.inf
    holds = not math.isnan(gap) and gap >= -(tc + widen)
    finite = math.isfinite(gap) and math.isfinite(rhs)
    equality = finite and abs(gap) <= (te + widen) * max(1.0, abs(rhs))
    met = None if equality_expected is None else equality == equality_expected
    return VerificationReport(
        name=name,
        lhs=lhs,
        rhs=rhs,
        gap=gap,
        holds=holds,
        equality=equality,
        equality_expected=equality_expected,
        expectation_met=met,
        inputs=encode(dict(inputs or {})),
        tolerances={"tol_check": tc, "tol_eq": te, "widen": widen},
        conditioning=conditioning,
        diagnostic=diagnostic,
    )


def radial_widen(confidence: float, beta: float, rhs: float) -> float:
    """径向路径的容差放宽：β 的外推增量按 |rhs|/β 缩放。"""
    if confidence <= 0 or not math.isfinite(beta) or beta <= 0:
        return 0.0
    return confidence * abs(rhs) / beta
