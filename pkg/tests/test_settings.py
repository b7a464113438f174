import json

import pytest

from markovcalc.calculus.ladder import LadderConfig, Mode
from markovcalc.errors import ConfigError
from markovcalc.settings import Settings, settings


def test_defaults(tmp_path):
    store = Settings(config_dir=str(tmp_path))
    assert store.get("depth_exact") == 12
    assert store.get("tol_abs") == 1e-9
    assert store.get("nonexistent", "fallback") == "fallback"


def test_set_saves_and_reloads(tmp_path):
    store = Settings(config_dir=str(tmp_path))
    store.set("depth_float", 30)
    with open(tmp_path / "settings.json", encoding="utf-8") as f:
        assert json.load(f)["depth_float"] == 30
    assert Settings(config_dir=str(tmp_path)).get("depth_float") == 30


def test_unknown_keys(tmp_path):
    store = Settings(config_dir=str(tmp_path))
    with pytest.raises(KeyError):
        store.set("colour", "red")
    (tmp_path / "settings.json").write_text('{"colour": "red", "mode": "float"}', encoding="utf-8")
    reloaded = Settings(config_dir=str(tmp_path))
    assert reloaded.get("mode") == "float"
    assert "colour" not in reloaded.current


def test_broken_file_falls_back_to_defaults(tmp_path):
    (tmp_path / "settings.json").write_text("[1, 2", encoding="utf-8")
    assert Settings(config_dir=str(tmp_path)).get("mode") == "exact"


def test_reset(tmp_path):
    store = Settings(config_dir=str(tmp_path))
    store.set("probe_count", 5)
    store.reset()
    assert store.get("probe_count") == 3


def test_environment_directory(tmp_path, monkeypatch):
    monkeypatch.setenv("MARKOVCALC_CONFIG_DIR", str(tmp_path))
    assert Settings().config_file == str(tmp_path / "settings.json")


def test_ladder_config_follows_the_singleton():
    settings.set("mode", "float")
    settings.set("tol_abs", 1e-6)
    cfg = LadderConfig.from_settings()
    assert cfg.mode is Mode.FLOAT
    assert cfg.tol_abs == 1e-6
    assert cfg.depth == 40
    settings.set("mode", "symbolic")
    with pytest.raises(ConfigError):
        LadderConfig.from_settings()
