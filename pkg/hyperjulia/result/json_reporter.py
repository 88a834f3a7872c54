"""JSON 报告 — 报告文档序列化为 JSON 字符串

- 浮点数按 repr 输出 (最短可往返形式)，非有限值写作 "inf" / "-inf" / "nan"
- 不写时间戳，同一输入重跑得到逐字节相同的文件
"""

import json
import math
from typing import Any

from pydantic import BaseModel

from hyperjulia.errors import EngineError
from hyperjulia.result.models import ErrorInfo, ReportDocument, ReportHeader


def _finite(value: Any) -> Any:
    """递归替换非有限浮点数；元组转为列表。"""
    if isinstance(value, float) and not math.isfinite(value):
        if math.isnan(value):
            return "nan"
        return "inf" if value > 0 else "-inf"
    if isinstance(value, dict):
        return {k: _finite(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_finite(v) for v in value]
    return value


def to_json(
    result: BaseModel | dict[str, Any] | list[Any],
    ensure_ascii: bool = False,
    indent: int | None = 2,
) -> str:
    """
    将报告序列化为 JSON 字符串。
    - ensure_ascii=False 支持中文
    - 支持 pydantic 模型、dict 或 list
    """
    if isinstance(result, BaseModel):
        data: Any = result.model_dump()
    elif isinstance(result, list):
        data = [r.model_dump() if isinstance(r, BaseModel) else r for r in result]
    else:
        data = result
    return json.dumps(_finite(data), ensure_ascii=ensure_ascii, indent=indent, allow_nan=False)


def to_json_engine_error(header: ReportHeader, error: EngineError) -> str:
    """引擎级异常时的 JSON 输出：header + 空 reports + error 对象。"""
    document = ReportDocument(header=header, error=ErrorInfo(**error.to_dict()))
    return to_json(document)
