"""统一异常与错误码 — 引擎级与数值级错误，供各模块复用。"""

# ---------------------------------------------------------------------------
# 引擎级错误码（规格文件、输出）
# ---------------------------------------------------------------------------
FILE_NOT_FOUND = "FILE_NOT_FOUND"
SPEC_PARSE_ERROR = "SPEC_PARSE_ERROR"
SPEC_VALIDATION_ERROR = "SPEC_VALIDATION_ERROR"
ENGINE_INTERNAL_ERROR = "ENGINE_INTERNAL_ERROR"
OUTPUT_WRITE_ERROR = "OUTPUT_WRITE_ERROR"

# ---------------------------------------------------------------------------
# 数值级错误码（圆盘几何、有理映射、差商链、边界系数）
# ---------------------------------------------------------------------------
INVALID_POINT = "INVALID_POINT"
POLE_ERROR = "POLE_ERROR"
DEGENERATE_VALUE = "DEGENERATE_VALUE"
NOT_SELF_MAP = "NOT_SELF_MAP"
DEGREE_EXHAUSTED = "DEGREE_EXHAUSTED"
DEFLATION_RESIDUAL = "DEFLATION_RESIDUAL"
ROOT_NOT_CONVERGED = "ROOT_NOT_CONVERGED"
CERTIFICATION_FAILED = "CERTIFICATION_FAILED"
INCONCLUSIVE_LIMIT = "INCONCLUSIVE_LIMIT"
AUTOMORPHISM_DEGENERACY = "AUTOMORPHISM_DEGENERACY"
PRECONDITION_FAILED = "PRECONDITION_FAILED"
INCONSISTENT_INPUT = "INCONSISTENT_INPUT"

# 规格类错误对应 CLI 退出码 2，不确定极限对应 3
SPEC_ERROR_CODES = frozenset({FILE_NOT_FOUND, SPEC_PARSE_ERROR, SPEC_VALIDATION_ERROR})
INCONCLUSIVE_CODES = frozenset({INCONCLUSIVE_LIMIT})


class EngineError(Exception):
    """
    统一异常基类。
    属性: code（错误码）、message（描述）、detail（可选详情，如残差或校验明细）。
    """

    def __init__(
        self,
        code: str,
        message: str,
        detail: str | None = None,
    ) -> None:
        super().__init__(message)
        self.code = code
        self.message = message
        self.detail = detail

    def to_dict(self) -> dict[str, str | None]:
        """转为 JSON 报告中的 error 对象。"""
        return {
            "code": self.code,
            "message": self.message,
            "detail": self.detail,
        }

    @property
    def exit_code(self) -> int:
        """CLI 退出码：规格错误 2，不确定极限 3，其余 1。"""
        if self.code in SPEC_ERROR_CODES:
            return 2
        if self.code in INCONCLUSIVE_CODES:
            return 3
        return 1
