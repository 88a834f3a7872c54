"""映射规格解析器 — 读取 JSON/YAML 并校验为 MapSpec 列表，统一抛出 EngineError"""

import json
from pathlib import Path
from typing import Any

import yaml
from pydantic import BaseModel, ValidationError

from hyperjulia.core.models import MapDocument, MapSpec
from hyperjulia.errors import (
    FILE_NOT_FOUND,
    SPEC_PARSE_ERROR,
    SPEC_VALIDATION_ERROR,
    EngineError,
)

YAML_SUFFIXES = (".yaml", ".yml")


def _describe(e: ValidationError) -> str:
    """把 pydantic 错误压成一行：字段路径 + 原因。"""
    parts = []
    for err in e.errors():
        loc = ".".join(str(p) for p in err["loc"])
        parts.append(f"{loc}: {err['msg']}")
    return "; ".join(parts)


def load_document(data: Any) -> list[MapSpec]:
    """
    校验已解析的数据：单个 MapSpec 或 MapSpec 列表。
    - 结构或不变量不满足 → EngineError(SPEC_VALIDATION_ERROR)，消息中给出字段路径
    """
    if data is None:
        raise EngineError(SPEC_VALIDATION_ERROR, "规格文件为空")
    maps = data if isinstance(data, list) else [data]
    try:
        return MapDocument.model_validate({"maps": maps}).maps
    except ValidationError as e:
        raise EngineError(
            SPEC_VALIDATION_ERROR,
            f"规格校验失败: {_describe(e)}",
            detail=e.json(indent=2),
        ) from e


def parse_spec_text(text: str, suffix: str = ".json") -> list[MapSpec]:
    """按后缀选择 json 或 yaml 解析文本。"""
    try:
        if suffix.lower() in YAML_SUFFIXES:
            data = yaml.safe_load(text)
        else:
            data = json.loads(text)
    except (json.JSONDecodeError, yaml.YAMLError) as e:
        raise EngineError(SPEC_PARSE_ERROR, f"规格解析失败: {e}", detail=str(e)) from e
    return load_document(data)


def parse_spec(spec_path: str | Path) -> list[MapSpec]:
    """
    读取规格文件并解析为 MapSpec 列表。
    - 文件不存在 → EngineError(FILE_NOT_FOUND)
    - JSON/YAML 语法错误 → EngineError(SPEC_PARSE_ERROR)
    - Pydantic 校验失败 → EngineError(SPEC_VALIDATION_ERROR)
    """
    path = Path(spec_path)
    if not path.exists():
        raise EngineError(FILE_NOT_FOUND, f"规格文件不存在: {spec_path}")

    try:
        raw = path.read_text(encoding="utf-8")
    except OSError as e:
        raise EngineError(FILE_NOT_FOUND, f"无法读取文件: {spec_path}") from e
    return parse_spec_text(raw, path.suffix)


def dump_specs(specs: list[MapSpec]) -> list[dict[str, Any]]:
    """MapSpec → JSON 兼容的 dict 列表 (报告头回显与 random 输出)。"""
    return [s.model_dump(mode="json") for s in specs]


def validate_model[M: BaseModel](model: type[M], data: dict[str, Any], label: str) -> M:
    """命令行参数组装成的模型 (SuiteConfig / SweepGrid) 的校验，错误码同规格文件。"""
    try:
        return model.model_validate(data)
    except ValidationError as e:
        raise EngineError(
            SPEC_VALIDATION_ERROR,
            f"{label} 参数校验失败: {_describe(e)}",
            detail=e.json(indent=2),
        ) from e
