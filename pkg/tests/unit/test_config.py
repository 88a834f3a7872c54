"""配置管理系统测试"""

from hyperjulia.config import Config


def test_config_singleton():
    """测试配置管理器单例模式"""

    config1 = Config()
    config2 = Config()

    assert config1 is config2, "应该是同一个实例"


def test_config_default_values():
    """测试配置默认值"""

    config = Config()

    # 几何
    assert config.DISK_MARGIN == 1e-12
    assert config.ZERO_MARGIN == 1e-9

    # 径向外推
    assert config.RADIAL_M_MIN == 8
    assert config.RADIAL_M_MAX == 40
    assert config.RADIAL_FIT_M_MAX == 20
    assert config.RADIAL_ORDER == 4
    assert config.BETA_INF_CAP == 1e8
    assert config.RADIAL_TOL == 1e-3

    # 校验容差
    assert config.TOL_CHECK == 1e-9
    assert config.TOL_EQ == 1e-7

    # 搜索与执行
    assert config.FIXED_POINT_SAMPLES == 4096
    assert config.SERIES_CAP == 64
    assert config.THREADS == 4
    assert config.STRICT_TAYLOR is False

    # 日志
    assert config.LOG_LEVEL == "WARNING"


def test_config_from_env(monkeypatch):
    """测试从环境变量加载配置"""

    monkeypatch.setenv("HYPERJULIA_TOL_CHECK", "1e-6")
    monkeypatch.setenv("HYPERJULIA_THREADS", "2")
    monkeypatch.setenv("HYPERJULIA_LOG_LEVEL", "DEBUG")
    monkeypatch.setenv("HYPERJULIA_STRICT_TAYLOR", "true")

    Config.reset()
    config = Config()

    assert config.TOL_CHECK == 1e-6
    assert config.THREADS == 2
    assert config.LOG_LEVEL == "DEBUG"
    assert config.STRICT_TAYLOR is True


def test_config_invalid_env_values(monkeypatch):
    """测试无效的环境变量值使用默认值"""

    monkeypatch.setenv("HYPERJULIA_RADIAL_M_MAX", "invalid")
    monkeypatch.setenv("HYPERJULIA_TOL_EQ", "abc")
    monkeypatch.setenv("HYPERJULIA_STRICT_TAYLOR", "not_a_bool")

    Config.reset()
    config = Config()

    assert config.RADIAL_M_MAX == 40
    assert config.RADIAL_FIT_M_MAX == 20
    assert config.RADIAL_ORDER == 4
    assert config.TOL_EQ == 1e-7
    assert config.STRICT_TAYLOR is False  # "not_a_bool" 不是 true


def test_config_threads_floor(monkeypatch):
    """HYPERJULIA_THREADS 至少为 1"""
    monkeypatch.setenv("HYPERJULIA_THREADS", "0")
    Config.reset()
    assert Config().THREADS == 1


def test_config_as_dict():
    """测试配置导出为字典"""

    config_dict = Config().as_dict()

    for group in ("geometry", "self_map", "quotient", "roots", "radial", "tolerances", "series"):
        assert group in config_dict
    assert config_dict["tolerances"] == {"tol_check": 1e-9, "tol_eq": 1e-7}
    assert config_dict["radial"]["m_min"] == 8


def test_config_reset():
    """测试配置重置"""

    config1 = Config()
    config_id = id(config1)

    Config.reset()
    config2 = Config()

    assert id(config2) != config_id, "重置后应该是新实例"
