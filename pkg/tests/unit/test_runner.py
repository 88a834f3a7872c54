"""套件执行器单元测试"""

import math

import pytest

from hyperjulia.config import Config
from hyperjulia.core.builtins import build_builtin
from hyperjulia.core.models import SuiteConfig, SweepGrid
from hyperjulia.core.runner import (
    SUITE_REGISTRY,
    default_chain_length,
    measure_beta,
    run_map,
    run_suite,
    verify,
)
from hyperjulia.errors import (
    INVALID_POINT,
    PRECONDITION_FAILED,
    SPEC_VALIDATION_ERROR,
    EngineError,
)
from hyperjulia.sweep import run_sweep


def test_verify_square_all_suites(z2):
    """z² 上运行全部套件：全部通过，不适用的族记为跳过"""
    document = verify([z2], SuiteConfig(suite="all", samples=5, seed=3))
    assert document.error is None
    assert document.passed
    names = {r.name for r in document.reports}
    assert {"julia", "two_point_julia", "mercer", "cowen_pommerenke", "lower_bound"} <= names
    assert any(reason.startswith("cp-multiple") for reason in document.skipped)
    assert document.header.suite == "all"
    assert document.header.seed == 3


def test_verify_is_deterministic(z3):
    """同一 seed 两次运行的报告完全相同"""
    config = SuiteConfig(suite="two-point", samples=4, seed=11)
    first = verify([z3], config).model_dump()
    second = verify([z3], config).model_dump()
    assert first == second
    other = verify([z3], SuiteConfig(suite="two-point", samples=4, seed=12)).model_dump()
    assert other["reports"] != first["reports"]


def test_suite_inputs_do_not_depend_on_all(z3):
    """单独运行某套件与在 all 中运行得到相同的输入"""
    alone = run_suite(z3, SuiteConfig(suite="julia", samples=4, seed=5), "julia").reports
    combined = run_map(z3, SuiteConfig(suite="all", samples=4, seed=5)).reports
    assert [r.model_dump() for r in combined[: len(alone)]] == [r.model_dump() for r in alone]
    assert next(iter(SUITE_REGISTRY)) == "julia"


def test_cowen_pommerenke_suite_witness(cp_witness):
    """σ 自动取边界不动点 1：和式取等"""
    document = verify([cp_witness], SuiteConfig(suite="cowen-pommerenke"))
    (report,) = document.reports
    assert report.lhs == pytest.approx(3.0)
    assert report.equality
    assert document.passed


def test_cp_multiple_suite_detects_k(cp_multiple_witness):
    """k 由 f - z₀ 的零点阶数确定"""
    document = verify([cp_multiple_witness], SuiteConfig(suite="cp-multiple"))
    (report,) = document.reports
    assert report.inputs["k"] == 2
    assert report.rhs == pytest.approx(3.0)
    assert report.equality and document.passed


def test_lower_bounds_suite_cube(z3):
    document = verify([z3], SuiteConfig(suite="lower-bounds", seed=2))
    series = [r for r in document.reports if r.name == "lower_bound_series"]
    assert series[0].inputs["terms"] == pytest.approx([1.0, 2.0, 3.0])
    assert document.passed


def test_single_suite_all_skipped_raises(gamma_half):
    """单个套件的族全部被跳过时抛出第一个前提错误"""
    with pytest.raises(EngineError) as exc_info:
        run_map(gamma_half, SuiteConfig(suite="two-point"))
    assert exc_info.value.code == PRECONDITION_FAILED


def test_verify_records_map_error():
    """映射执行失败时 document.error 记录错误，passed 为 False"""
    f = build_builtin("constant", {"re": 0.5})
    document = verify([f], SuiteConfig(suite="julia"))
    assert document.error is not None
    assert document.error.code == PRECONDITION_FAILED
    assert not document.passed


def test_verify_applies_tolerances(z2):
    """容差覆盖只作用于本次运行，之后的运行恢复默认容差"""
    document = verify([z2], SuiteConfig(suite="julia", samples=2, tol_check=1e-6, tol_eq=1e-5))
    assert document.header.tolerances == {"tol_check": 1e-6, "tol_eq": 1e-5}
    assert all(r.tolerances["tol_eq"] == 1e-5 for r in document.reports)
    assert Config().TOL_CHECK == 1e-9
    assert Config().TOL_EQ == 1e-7

    later = verify([z2], SuiteConfig(suite="julia", samples=2))
    assert later.header.tolerances == {"tol_check": 1e-9, "tol_eq": 1e-7}
    assert all(r.tolerances["tol_check"] == 1e-9 for r in later.reports)


def test_sweep_tolerances_do_not_leak(z2):
    """扫描的容差覆盖在返回后撤销"""
    run_sweep(
        z2,
        SuiteConfig(suite="julia", tol_check=1e-4),
        SweepGrid(variable="r", start=0.0, stop=0.9, steps=3),
    )
    assert Config().TOL_CHECK == 1e-9


def test_config_override_restores_on_error():
    """覆盖期间抛出异常也会恢复原值；未知配置项被拒绝"""
    cfg = Config()
    with pytest.raises(RuntimeError), cfg.override(TOL_EQ=1e-3):
        assert Config().TOL_EQ == 1e-3
        raise RuntimeError("boom")
    assert cfg.TOL_EQ == 1e-7
    with pytest.raises(AttributeError), cfg.override(NOT_A_SETTING=1):
        pass


def test_explicit_points_and_sigmas(z3):
    """显式给出 σ 与基点时原样使用"""
    config = SuiteConfig(suite="multipoint", sigmas=[(0.0, 1.0)], points=[(0.1, 0.0)], samples=3)
    reports = run_map(z3, config).reports
    assert len(reports) == 3
    for r in reports:
        assert r.inputs["sigma"] == [0.0, 1.0]
        assert r.inputs["points"] == [[0.1, 0.0]]


def test_default_chain_length(z3):
    assert default_chain_length(z3) == 2
    assert default_chain_length(build_builtin("exp-shift")) == 2


def test_measure_beta_methods(gamma_half, z2):
    """exact / radial / both"""
    assert measure_beta(gamma_half, 1.0).beta == pytest.approx(3.0)
    report = measure_beta(z2, 1j, "both")
    assert report.method == "both"
    assert report.beta == pytest.approx(2.0)
    assert report.discrepancy is not None and report.discrepancy < 1e-6
    assert report.tau == pytest.approx([-1.0, 0.0])
    radial = measure_beta(build_builtin("exp-shift", {"c": 1.5}), 1.0, "radial")
    assert radial.method == "radial"
    assert radial.beta == pytest.approx(1.5, rel=1e-6)


def test_measure_beta_infinite():
    """常值映射两种方法均为 +∞，偏差记为 None"""
    report = measure_beta(build_builtin("constant", {"re": 0.25}), 1.0, "both")
    assert math.isinf(report.beta)
    assert report.tau is None
    assert report.discrepancy is None


def test_measure_beta_errors():
    with pytest.raises(EngineError) as exc_info:
        measure_beta(build_builtin("exp-shift"), 1.0, "exact")
    assert exc_info.value.code == INVALID_POINT
    with pytest.raises(EngineError) as exc_info:
        measure_beta(build_builtin("cayley-avg"), 1.0, "median")
    assert exc_info.value.code == SPEC_VALIDATION_ERROR
