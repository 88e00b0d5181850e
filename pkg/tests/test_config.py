from __future__ import annotations

import json
from pathlib import Path

import pytest

from mysticum.config import (
    MysticumConfig,
    config_to_dict,
    load_config,
    save_config,
)


def test_defaults_when_file_missing(isolated_config: Path) -> None:
    config = load_config(isolated_config)
    assert config == MysticumConfig()
    assert config.octagon.pairing == "cyclic"
    assert config.run.threads == 1


def test_file_values_are_merged(tmp_path: Path, isolated_config: Path) -> None:
    path = tmp_path / "config.json"
    path.write_text(json.dumps({
        "run": {"threads": 3},
        "octagon": {"pairing": "diagonal"},
        "render": {"viewport": 6},
    }))
    config = load_config(path)
    assert config.run.threads == 3
    assert config.octagon.pairing == "diagonal"
    assert config.render.viewport == 6.0
    assert config.generation.numerator_bound == 9


def test_environment_beats_file(tmp_path: Path, isolated_config: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"run": {"threads": 3}}))
    monkeypatch.setenv("MYSTICUM_THREADS", "5")
    monkeypatch.setenv("MYSTICUM_PAIRING", "anticyclic")
    config = load_config(path)
    assert config.run.threads == 5
    assert config.octagon.pairing == "anticyclic"


def test_bad_environment_values_are_ignored(isolated_config: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("MYSTICUM_THREADS", "many")
    monkeypatch.setenv("MYSTICUM_PAIRING", "spiral")
    config = load_config(isolated_config)
    assert config.run.threads == 1
    assert config.octagon.pairing == "cyclic"


def test_malformed_file_falls_back_to_defaults(tmp_path: Path, isolated_config: Path) -> None:
    path = tmp_path / "config.json"
    path.write_text("{not json")
    assert load_config(path) == MysticumConfig()
    path.write_text(json.dumps({"octagon": {"pairing": "spiral"}}))
    assert load_config(path) == MysticumConfig()


def test_save_and_reload(tmp_path: Path, isolated_config: Path) -> None:
    config = MysticumConfig()
    config.generation.max_attempts = 42
    path = tmp_path / "nested" / "config.json"
    save_config(config, path)
    assert load_config(path) == config
    assert json.loads(path.read_text()) == config_to_dict(config)
