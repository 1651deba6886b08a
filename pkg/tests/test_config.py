"""
Tests for configuration loading and saving.
"""

import json

from dftree.config.loader import (
    camel_to_snake,
    convert_keys,
    convert_to_camel,
    load_config,
    save_config,
    snake_to_camel,
)
from dftree.config.schema import BenchConfig, Config, ForestConfig


def test_key_conversion():
    assert camel_to_snake("auditEvery") == "audit_every"
    assert snake_to_camel("check_int64") == "checkInt64"
    assert camel_to_snake("checkInt64") == "check_int64"
    data = {"forest": {"audit_every": 2}, "items": [{"max_exp": 3}]}
    assert convert_keys(convert_to_camel(data)) == data


def test_missing_file_gives_defaults(tmp_path):
    config = load_config(tmp_path / "absent.json")
    assert config.forest == ForestConfig()
    assert config.cli.verify_every == 1


def test_save_and_load(tmp_path):
    path = tmp_path / "nested" / "config.json"
    config = Config()
    config.forest.audit_every = 5
    config.bench.max_exp = 12
    assert save_config(config, path) == path

    raw = json.loads(path.read_text())
    assert raw["forest"]["auditEvery"] == 5
    assert "check_int64" not in raw["forest"]

    loaded = load_config(path)
    assert loaded.forest.audit_every == 5
    assert loaded.bench.max_exp == 12


def test_invalid_file_falls_back(tmp_path):
    path = tmp_path / "config.json"
    path.write_text("{not json")
    assert load_config(path).forest.audit_every == 0
    path.write_text(json.dumps({"forest": {"auditEvery": "often"}}))
    assert load_config(path).forest.audit_every == 0


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("DFTREE_FOREST__AUDIT_EVERY", "3")
    monkeypatch.setenv("DFTREE_CLI__FLOAT_DIGITS", "6")
    config = Config()
    assert config.forest.audit_every == 3
    assert config.cli.float_digits == 6


def test_environment_beats_file(tmp_path, monkeypatch):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"forest": {"auditEvery": 4, "checkInt64": False}}))
    monkeypatch.setenv("DFTREE_FOREST__AUDIT_EVERY", "9")
    config = load_config(path)
    assert config.forest.audit_every == 9
    assert config.forest.check_int64 is False


def test_bench_range_is_validated(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"bench": {"minExp": 12, "maxExp": 8}}))
    assert load_config(path).bench == BenchConfig()
    path.write_text(json.dumps([1, 2]))
    assert load_config(path).bench.max_exp == 17
