"""hyperjulia: 单位圆盘自映射的双曲差商与多点 Julia 引理验证引擎"""

__version__ = "0.3.1"

from hyperjulia.errors import EngineError

__all__ = ["__version__", "EngineError"]
