"""映射规格模型与解析单元测试"""

import json
from pathlib import Path

import pytest
from pydantic import ValidationError

from hyperjulia.core.models import (
    SUITES,
    BlaschkeSpec,
    BuiltinSpec,
    ConjugatedSpec,
    MonomialSpec,
    ProductSpec,
    SuiteConfig,
    SweepGrid,
)
from hyperjulia.errors import (
    FILE_NOT_FOUND,
    SPEC_PARSE_ERROR,
    SPEC_VALIDATION_ERROR,
    EngineError,
)
from hyperjulia.parser import dump_specs, load_document, parse_spec, parse_spec_text, validate_model


def test_blaschke_spec_defaults():
    """BlaschkeSpec 默认值"""
    s = BlaschkeSpec()
    assert s.type == "blaschke"
    assert s.theta == 0.0
    assert s.zeros == []


def test_blaschke_spec_rejects_zero_on_circle():
    """零点 |a| > 1 - 1e-9 时校验失败，消息指出下标"""
    with pytest.raises(ValidationError) as exc_info:
        BlaschkeSpec(zeros=[(0.1, 0.0), (1.0, 0.0)])
    assert "zeros[1]" in str(exc_info.value)


def test_monomial_spec_requires_positive_k():
    assert MonomialSpec(k=3).k == 3
    with pytest.raises(ValidationError):
        MonomialSpec(k=0)


def test_nested_specs_by_discriminator():
    """product / conjugated 按 type 分派嵌套规格"""
    maps = load_document(
        {
            "type": "product",
            "factors": [
                {"type": "monomial", "k": 2},
                {
                    "type": "conjugated",
                    "inner": {"type": "builtin", "name": "cubic-avg", "params": {"c": 0.25}},
                    "automorphism": {"theta": 0.5, "a": [0.2, -0.1]},
                },
            ],
        }
    )
    assert len(maps) == 1
    product = maps[0]
    assert isinstance(product, ProductSpec)
    assert isinstance(product.factors[0], MonomialSpec)
    conj = product.factors[1]
    assert isinstance(conj, ConjugatedSpec)
    assert isinstance(conj.inner, BuiltinSpec)
    assert conj.automorphism.a == (0.2, -0.1)


def test_load_document_list_and_errors():
    """列表形式；未知 type、多余字段、空文档均报 SPEC_VALIDATION_ERROR"""
    maps = load_document([{"type": "monomial", "k": 2}, {"type": "blaschke", "zeros": [[0.5, 0]]}])
    assert [m.type for m in maps] == ["monomial", "blaschke"]

    for bad in ({"type": "polynomial"}, {"type": "monomial", "k": 2, "extra": 1}, None, []):
        with pytest.raises(EngineError) as exc_info:
            load_document(bad)
        assert exc_info.value.code == SPEC_VALIDATION_ERROR


def test_validation_error_names_field_path():
    with pytest.raises(EngineError) as exc_info:
        load_document({"type": "blaschke", "zeros": [[0.0, 0.0], [0.0, 1.5]]})
    assert "zeros[1]" in exc_info.value.message
    assert exc_info.value.detail is not None


def test_parse_spec_yaml_and_json(tmp_path: Path):
    """按后缀选择解析器"""
    yaml_path = tmp_path / "maps.yaml"
    yaml_path.write_text(
        "- type: monomial\n  k: 3\n- type: builtin\n  name: exp-shift\n  params: {c: 2}\n",
        encoding="utf-8",
    )
    maps = parse_spec(yaml_path)
    assert [m.type for m in maps] == ["monomial", "builtin"]

    json_path = tmp_path / "map.json"
    json_path.write_text(json.dumps({"type": "blaschke", "theta": 1.0}), encoding="utf-8")
    assert parse_spec(json_path)[0].theta == 1.0


def test_parse_spec_missing_file(tmp_path: Path):
    with pytest.raises(EngineError) as exc_info:
        parse_spec(tmp_path / "missing.json")
    assert exc_info.value.code == FILE_NOT_FOUND
    assert exc_info.value.exit_code == 2


@pytest.mark.parametrize(
    ("text", "suffix"),
    [("{not json", ".json"), ("- [unclosed", ".yaml")],
)
def test_parse_spec_syntax_error(text: str, suffix: str):
    with pytest.raises(EngineError) as exc_info:
        parse_spec_text(text, suffix)
    assert exc_info.value.code == SPEC_PARSE_ERROR


def test_dump_specs_is_json_compatible():
    """回显为 JSON 兼容结构，元组写作列表"""
    specs = load_document({"type": "blaschke", "name": "b", "zeros": [[0.5, 0.25]]})
    dumped = dump_specs(specs)
    assert dumped == [{"type": "blaschke", "name": "b", "theta": 0.0, "zeros": [[0.5, 0.25]]}]
    assert load_document(json.loads(json.dumps(dumped)))[0] == specs[0]


def test_suite_config_defaults():
    c = SuiteConfig()
    assert c.suite == "all"
    assert c.sigmas == "auto"
    assert c.points is None
    assert c.samples == 20
    assert c.seed == 0
    assert "all" in SUITES


@pytest.mark.parametrize(
    "data",
    [
        {"suite": "unknown"},
        {"sigmas": [[0.5, 0.0]]},
        {"points": [[1.0, 0.0]]},
        {"z0": [0.0, 1.0]},
        {"samples": 0},
        {"tol_check": 0},
    ],
)
def test_suite_config_invalid(data: dict):
    """CLI 参数组装的模型校验失败同样报 SPEC_VALIDATION_ERROR"""
    with pytest.raises(EngineError) as exc_info:
        validate_model(SuiteConfig, data, "verify")
    assert exc_info.value.code == SPEC_VALIDATION_ERROR
    assert exc_info.value.message.startswith("verify")


def test_sweep_grid_ranges():
    assert SweepGrid(variable="r", start=0.5, stop=0.999, steps=10, spacing="log1m").steps == 10
    assert SweepGrid(variable="k", start=0, stop=5, steps=6).variable == "k"
    for bad in (
        {"variable": "z", "start": 0.0, "stop": 1.0, "steps": 5},
        {"variable": "k", "start": 3, "stop": 1, "steps": 2},
        {"variable": "k", "start": 0, "stop": 3, "steps": 4, "spacing": "log1m"},
    ):
        with pytest.raises(ValidationError):
            SweepGrid(**bad)
