"""配置管理系统 - 集中管理数值容差、采样规模与执行参数"""

from __future__ import annotations

import os
import threading
from collections.abc import Iterator
from contextlib import contextmanager
from typing import Any


class Config:
    """配置管理器 - 从环境变量和默认值加载配置"""

    # 几何配置
    DISK_MARGIN: float = 1e-12  # DiskPoint 距边界的最小余量
    BOUNDARY_TOL: float = 1e-12  # BoundaryPoint 模长允许偏差
    POLE_TOL: float = 1e-300
    ZERO_MARGIN: float = 1e-9  # Blaschke 零点 |a| <= 1 - ZERO_MARGIN

    # 自映射抽检
    SPOT_CHECK_SAMPLES: int = 1000
    STAGE_SPOT_CHECK_SAMPLES: int = 64
    SELF_MAP_TOL: float = 1e-10
    DEGENERATE_TOL: float = 1e-12

    # 差商配置
    COINCIDENCE_THRESHOLD: float = 1e-8
    LOW_CONFIDENCE_THRESHOLD: float = 1e-3
    DEFLATION_TOL: float = 1e-9

    # 求根配置
    ROOT_MAX_ITER: int = 200
    ROOT_RESIDUAL: float = 1e-10
    POLISH_RESIDUAL: float = 1e-11

    # 径向外推配置
    RADIAL_M_MIN: int = 8
    RADIAL_M_MAX: int = 40
    RADIAL_FIT_M_MAX: int = 20
    RADIAL_ORDER: int = 4
    BETA_INF_CAP: float = 1e8
    RADIAL_GROWTH_FACTOR: float = 1.5
    RADIAL_TOL: float = 1e-3

    # 校验容差
    TOL_CHECK: float = 1e-9
    TOL_EQ: float = 1e-7

    # 边界不动点搜索与级数截断
    FIXED_POINT_SAMPLES: int = 4096
    SERIES_TOL: float = 1e-12
    SERIES_CAP: int = 64

    # Taylor 闭式分母退化时直接报错，而不是记为未定义
    STRICT_TAYLOR: bool = False

    # 执行配置
    THREADS: int = 4

    # 日志配置
    LOG_LEVEL: str = "WARNING"
    LOG_FORMAT: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    _instance: Config | None = None
    _override_lock = threading.RLock()

    def __new__(cls) -> Config:
        """单例模式"""
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance._load_from_env()
        return cls._instance

    @classmethod
    def reset(cls) -> None:
        """重置单例（主要用于测试）"""
        cls._instance = None

    @contextmanager
    def override(self, **values: Any) -> Iterator[Config]:
        """
        临时覆盖配置项，退出时恢复原值。
        覆盖期间持有全局锁，并发的覆盖运行依次执行。
        """
        unknown = [key for key in values if not hasattr(type(self), key)]
        if unknown:
            raise AttributeError(f"未知配置项: {', '.join(unknown)}")
        with self._override_lock:
            previous = {key: getattr(self, key) for key in values}
            for key, value in values.items():
                setattr(self, key, value)
            try:
                yield self
            finally:
                for key, value in previous.items():
                    setattr(self, key, value)

    def _load_from_env(self) -> None:
        """从环境变量加载配置"""
        # 几何配置
        self.DISK_MARGIN = self._get_float("HYPERJULIA_DISK_MARGIN", self.DISK_MARGIN)
        self.BOUNDARY_TOL = self._get_float("HYPERJULIA_BOUNDARY_TOL", self.BOUNDARY_TOL)
        self.ZERO_MARGIN = self._get_float("HYPERJULIA_ZERO_MARGIN", self.ZERO_MARGIN)

        # 自映射抽检
        self.SPOT_CHECK_SAMPLES = self._get_int(
            "HYPERJULIA_SPOT_CHECK_SAMPLES", self.SPOT_CHECK_SAMPLES
        )
        self.STAGE_SPOT_CHECK_SAMPLES = self._get_int(
            "HYPERJULIA_STAGE_SPOT_CHECK_SAMPLES", self.STAGE_SPOT_CHECK_SAMPLES
        )
        self.SELF_MAP_TOL = self._get_float("HYPERJULIA_SELF_MAP_TOL", self.SELF_MAP_TOL)

        # 差商配置
        self.COINCIDENCE_THRESHOLD = self._get_float(
            "HYPERJULIA_COINCIDENCE_THRESHOLD", self.COINCIDENCE_THRESHOLD
        )
        self.LOW_CONFIDENCE_THRESHOLD = self._get_float(
            "HYPERJULIA_LOW_CONFIDENCE_THRESHOLD", self.LOW_CONFIDENCE_THRESHOLD
        )
        self.DEFLATION_TOL = self._get_float("HYPERJULIA_DEFLATION_TOL", self.DEFLATION_TOL)

        # 求根配置
        self.ROOT_MAX_ITER = self._get_int("HYPERJULIA_ROOT_MAX_ITER", self.ROOT_MAX_ITER)

        # 径向外推配置
        self.RADIAL_M_MIN = self._get_int("HYPERJULIA_RADIAL_M_MIN", self.RADIAL_M_MIN)
        self.RADIAL_M_MAX = self._get_int("HYPERJULIA_RADIAL_M_MAX", self.RADIAL_M_MAX)
        self.RADIAL_FIT_M_MAX = self._get_int(
            "HYPERJULIA_RADIAL_FIT_M_MAX", self.RADIAL_FIT_M_MAX
        )
        self.RADIAL_ORDER = max(1, self._get_int("HYPERJULIA_RADIAL_ORDER", self.RADIAL_ORDER))
        self.BETA_INF_CAP = self._get_float("HYPERJULIA_BETA_INF_CAP", self.BETA_INF_CAP)

        # 校验容差
        self.TOL_CHECK = self._get_float("HYPERJULIA_TOL_CHECK", self.TOL_CHECK)
        self.TOL_EQ = self._get_float("HYPERJULIA_TOL_EQ", self.TOL_EQ)

        # 边界不动点搜索与级数截断
        self.FIXED_POINT_SAMPLES = self._get_int(
            "HYPERJULIA_FIXED_POINT_SAMPLES", self.FIXED_POINT_SAMPLES
        )
        self.SERIES_CAP = self._get_int("HYPERJULIA_SERIES_CAP", self.SERIES_CAP)
        self.STRICT_TAYLOR = self._get_bool("HYPERJULIA_STRICT_TAYLOR", self.STRICT_TAYLOR)

        # 执行配置
        self.THREADS = max(1, self._get_int("HYPERJULIA_THREADS", self.THREADS))

        # 日志配置
        self.LOG_LEVEL = os.getenv("HYPERJULIA_LOG_LEVEL", self.LOG_LEVEL)

    def _get_int(self, key: str, default: int) -> int:
        """从环境变量获取整数"""
        value = os.getenv(key)
        if value is None:
            return default
        try:
            return int(value)
        except ValueError:
            return default

    def _get_float(self, key: str, default: float) -> float:
        """从环境变量获取浮点数"""
        value = os.getenv(key)
        if value is None:
            return default
        try:
            return float(value)
        except ValueError:
            return default

    def _get_bool(self, key: str, default: bool) -> bool:
        """从环境变量获取布尔值"""
        value = os.getenv(key)
        if value is None:
            return default
        return value.lower() in ("true", "1", "yes", "on")

    def tolerances(self) -> dict[str, float]:
        """报告头中记录的容差快照"""
        return {"tol_check": self.TOL_CHECK, "tol_eq": self.TOL_EQ}

    def as_dict(self) -> dict[str, Any]:
        """返回所有配置的字典（用于调试）"""
        return {
            "geometry": {
                "disk_margin": self.DISK_MARGIN,
                "boundary_tol": self.BOUNDARY_TOL,
                "pole_tol": self.POLE_TOL,
                "zero_margin": self.ZERO_MARGIN,
            },
            "self_map": {
                "spot_check_samples": self.SPOT_CHECK_SAMPLES,
                "stage_spot_check_samples": self.STAGE_SPOT_CHECK_SAMPLES,
                "self_map_tol": self.SELF_MAP_TOL,
            },
            "quotient": {
                "coincidence_threshold": self.COINCIDENCE_THRESHOLD,
                "low_confidence_threshold": self.LOW_CONFIDENCE_THRESHOLD,
                "deflation_tol": self.DEFLATION_TOL,
            },
            "roots": {
                "max_iter": self.ROOT_MAX_ITER,
                "residual": self.ROOT_RESIDUAL,
                "polish_residual": self.POLISH_RESIDUAL,
            },
            "radial": {
                "m_min": self.RADIAL_M_MIN,
                "m_max": self.RADIAL_M_MAX,
                "fit_m_max": self.RADIAL_FIT_M_MAX,
                "order": self.RADIAL_ORDER,
                "inf_cap": self.BETA_INF_CAP,
                "growth_factor": self.RADIAL_GROWTH_FACTOR,
                "tol": self.RADIAL_TOL,
            },
            "tolerances": self.tolerances(),
            "series": {
                "tol": self.SERIES_TOL,
                "cap": self.SERIES_CAP,
                "strict_taylor": self.STRICT_TAYLOR,
            },
            "execution": {
                "threads": self.THREADS,
            },
            "logging": {
                "log_level": self.LOG_LEVEL,
            },
        }


# 全局配置实例
config = Config()
