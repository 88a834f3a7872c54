"""参数扫描"""

from hyperjulia.sweep.driver import SWEEP_SUITES, grid_values, run_sweep

__all__ = ["SWEEP_SUITES", "grid_values", "run_sweep"]
