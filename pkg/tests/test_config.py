"""Test loading and merging of the configuration."""
from contextlib import nullcontext

import pytest

from whittaker.config import build_config, load_config, merge_overrides
from whittaker.const import CONFIG_PATH_ENV, DEFAULT_BUDGET_ELEMENTS
from whittaker.exceptions import ConfigurationError


def test_load_config(tmp_path):
    """Test that empty sections become dicts."""
    config_path = tmp_path / "config.yaml"
    config_path.write_text("ring:\n  p: 5\n  ell: 1\nhecke:\n")
    assert load_config(str(config_path)) == {"ring": {"p": 5, "ell": 1}, "hecke": {}}


def test_load_config_env(tmp_path, monkeypatch):
    """Test that the environment variable names the file."""
    config_path = tmp_path / "config.yaml"
    config_path.write_text("chartab:\n  max_order: 500\n")
    monkeypatch.setenv(CONFIG_PATH_ENV, str(config_path))
    assert load_config() == {"chartab": {"max_order": 500}}


def test_load_config_none(monkeypatch):
    """Test that no file means no configuration."""
    monkeypatch.delenv(CONFIG_PATH_ENV, raising=False)
    assert load_config() == {}


@pytest.mark.parametrize(
    "content, raises",
    [
        ("", nullcontext()),
        ("ring: [1, 2\n", pytest.raises(ConfigurationError)),
        ("- ring\n- hecke\n", pytest.raises(ConfigurationError)),
    ],
)
def test_load_config_content(tmp_path, content, raises):
    """Test malformed files."""
    config_path = tmp_path / "config.yaml"
    config_path.write_text(content)
    with raises:
        assert load_config(str(config_path)) == {}


def test_load_config_missing(tmp_path):
    """Test that a missing file is a configuration error."""
    with pytest.raises(ConfigurationError):
        load_config(str(tmp_path / "missing.yaml"))


def test_merge_overrides():
    """Test that None values do not override the file."""
    config = {"ring": {"p": 5, "ell": 3}}
    merged = merge_overrides(config, {"ring": {"p": None, "ell": 1}, "hecke": {}})
    assert merged == {"ring": {"p": 5, "ell": 1}, "hecke": {}}
    assert config == {"ring": {"p": 5, "ell": 3}}


def test_merge_overrides_not_mapping():
    """Test that a scalar section cannot be merged into."""
    with pytest.raises(ConfigurationError):
        merge_overrides({"ring": 3}, {"ring": {"p": 5}})


def test_build_config_defaults(monkeypatch):
    """Test that every section is filled in."""
    monkeypatch.delenv(CONFIG_PATH_ENV, raising=False)
    config = build_config(overrides={"ring": {"ell": "1"}})
    assert config["ring"] == {"p": 3, "ell": 1, "flavor": "zmod"}
    assert config["group_core"]["budget_elements"] == DEFAULT_BUDGET_ELEMENTS
    assert config["logger"]["default_level"] == "info"
    assert config["report"]["format"] == "json"


@pytest.mark.parametrize(
    "overrides",
    [
        {"ring": {"p": 4}},
        {"ring": {"flavor": "padic"}},
        {"group_core": {"budget_elements": 0}},
    ],
)
def test_build_config_invalid(monkeypatch, overrides):
    """Test that invalid values raise a configuration error."""
    monkeypatch.delenv(CONFIG_PATH_ENV, raising=False)
    with pytest.raises(ConfigurationError):
        build_config(overrides=overrides)
