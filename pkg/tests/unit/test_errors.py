"""EngineError 与错误码常量单元测试"""

import pytest

from hyperjulia import errors as err_module
from hyperjulia.errors import (
    DEGREE_EXHAUSTED,
    FILE_NOT_FOUND,
    INCONCLUSIVE_LIMIT,
    SPEC_PARSE_ERROR,
    SPEC_VALIDATION_ERROR,
    EngineError,
)


def test_engine_error_attributes():
    """EngineError 具备 code / message / detail 属性"""
    e = EngineError("CODE", "msg", detail="detail")
    assert e.code == "CODE"
    assert e.message == "msg"
    assert e.detail == "detail"
    assert str(e) == "msg"


def test_engine_error_detail_optional():
    """detail 可为 None"""
    e = EngineError("CODE", "msg")
    assert e.detail is None


def test_engine_error_to_dict():
    """to_dict() 返回报告中的 error 对象"""
    e = EngineError(FILE_NOT_FOUND, "文件不存在", detail=None)
    assert e.to_dict() == {"code": "FILE_NOT_FOUND", "message": "文件不存在", "detail": None}
    e2 = EngineError("X", "m", detail="residual 1e-3")
    assert e2.to_dict()["detail"] == "residual 1e-3"


def test_engine_level_error_codes_defined():
    """引擎级错误码常量已定义"""
    for name in (
        "FILE_NOT_FOUND",
        "SPEC_PARSE_ERROR",
        "SPEC_VALIDATION_ERROR",
        "ENGINE_INTERNAL_ERROR",
        "OUTPUT_WRITE_ERROR",
    ):
        assert getattr(err_module, name) == name


def test_numeric_error_codes_defined():
    """数值级错误码常量已定义"""
    for name in (
        "INVALID_POINT",
        "POLE_ERROR",
        "DEGENERATE_VALUE",
        "NOT_SELF_MAP",
        "DEGREE_EXHAUSTED",
        "DEFLATION_RESIDUAL",
        "ROOT_NOT_CONVERGED",
        "CERTIFICATION_FAILED",
        "INCONCLUSIVE_LIMIT",
        "AUTOMORPHISM_DEGENERACY",
        "PRECONDITION_FAILED",
        "INCONSISTENT_INPUT",
    ):
        assert getattr(err_module, name) == name


@pytest.mark.parametrize(
    ("code", "expected"),
    [
        (FILE_NOT_FOUND, 2),
        (SPEC_PARSE_ERROR, 2),
        (SPEC_VALIDATION_ERROR, 2),
        (INCONCLUSIVE_LIMIT, 3),
        (DEGREE_EXHAUSTED, 1),
        ("ENGINE_INTERNAL_ERROR", 1),
    ],
)
def test_exit_code_by_error_code(code: str, expected: int):
    """规格错误 2，不确定极限 3，其余 1"""
    assert EngineError(code, "m").exit_code == expected


def test_engine_error_is_exception():
    """可被 raise / except 捕获"""
    with pytest.raises(EngineError) as exc_info:
        raise EngineError(DEGREE_EXHAUSTED, "次数耗尽")
    assert exc_info.value.code == DEGREE_EXHAUSTED
