
import pytest
from hypothesis import settings as hypothesis_settings

from markovcalc.calculus.ladder import LadderConfig, Mode
from markovcalc.catalog import Named, get_function
from markovcalc.settings import settings

hypothesis_settings.register_profile("markovcalc", deadline=None, derandomize=True)
hypothesis_settings.load_profile("markovcalc")


@pytest.fixture(autouse=True)
def isolated_settings(tmp_path, monkeypatch):
    """Defaults only, and any save lands in a temporary directory."""
    monkeypatch.setattr(settings, "current", settings.defaults.copy())
    monkeypatch.setattr(settings, "config_dir", str(tmp_path / "config"))
    monkeypatch.setattr(settings, "config_file", str(tmp_path / "config" / "settings.json"))
    yield


@pytest.fixture
def exact_cfg() -> LadderConfig:
    return LadderConfig()


@pytest.fixture
def float_cfg() -> LadderConfig:
    return LadderConfig(depth=40, max_depth=40, mode=Mode.FLOAT)


@pytest.fixture
def lemma1():
    return get_function(Named.LEMMA1)


@pytest.fixture
def abs_pair():
    return get_function(Named.ABS_PAIR)


@pytest.fixture
def smooth_pair():
    return get_function(Named.SMOOTH_PAIR)


@pytest.fixture
def affine_pair():
    return get_function(Named.AFFINE_PAIR)


@pytest.fixture
def unit_jump():
    return get_function(Named.UNIT_JUMP)


@pytest.fixture
def degenerate():
    return get_function(Named.DEGENERATE)
