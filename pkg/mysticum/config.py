"""Configuration management for mysticum.

Supports:
- Local config file (~/.mysticum/config.json)
- Environment variables (MYSTICUM_*)
- CLI overrides
"""

from __future__ import annotations

import json
import logging
import os
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path.home() / ".mysticum" / "config.json"

PAIRINGS = ("cyclic", "anticyclic", "diagonal")


@dataclass
class RunConfig:
    """Execution settings."""

    threads: int = 1


@dataclass
class GenerationConfig:
    """Random rational parameters p/q with |p| <= numerator_bound, 1 <= q <= denominator_bound."""

    numerator_bound: int = 9
    denominator_bound: int = 5
    max_attempts: int = 500


@dataclass
class OctagonConfig:
    """Octagon settings."""

    pairing: str = "cyclic"  # cyclic, anticyclic, diagonal


@dataclass
class RenderConfig:
    """SVG output settings."""

    viewport: float = 4.0
    size: int = 800
    samples: int = 720


@dataclass
class MysticumConfig:
    """Main configuration container."""

    run: RunConfig = field(default_factory=RunConfig)
    generation: GenerationConfig = field(default_factory=GenerationConfig)
    octagon: OctagonConfig = field(default_factory=OctagonConfig)
    render: RenderConfig = field(default_factory=RenderConfig)


def load_config(
    config_path: Path | str | None = None,
    env_prefix: str = "MYSTICUM_",
) -> MysticumConfig:
    """Load configuration from file and environment.

    Priority (highest to lowest):
    1. Environment variables
    2. Config file
    3. Defaults
    """
    config = MysticumConfig()

    path = Path(config_path) if config_path else DEFAULT_CONFIG_PATH
    if path.exists():
        try:
            with open(path) as f:
                data = json.load(f)
            config = _merge_config(config, data)
        except (json.JSONDecodeError, OSError, TypeError, ValueError) as e:
            logger.warning("Failed to load config from %s: %s", path, e)
            config = MysticumConfig()

    return _apply_env_overrides(config, env_prefix)


def _merge_config(config: MysticumConfig, data: dict[str, Any]) -> MysticumConfig:
    """Merge loaded data into config object."""

    if "run" in data:
        run = data["run"]
        config.run.threads = int(run.get("threads", config.run.threads))

    if "generation" in data:
        gen = data["generation"]
        config.generation.numerator_bound = int(
            gen.get("numerator_bound", config.generation.numerator_bound)
        )
        config.generation.denominator_bound = int(
            gen.get("denominator_bound", config.generation.denominator_bound)
        )
        config.generation.max_attempts = int(gen.get("max_attempts", config.generation.max_attempts))

    if "octagon" in data:
        config.octagon.pairing = _check_pairing(data["octagon"].get("pairing", config.octagon.pairing))

    if "render" in data:
        render = data["render"]
        config.render.viewport = float(render.get("viewport", config.render.viewport))
        config.render.size = int(render.get("size", config.render.size))
        config.render.samples = int(render.get("samples", config.render.samples))

    return config


def _apply_env_overrides(config: MysticumConfig, prefix: str) -> MysticumConfig:
    """Apply environment variable overrides."""

    if v := os.environ.get(f"{prefix}THREADS"):
        try:
            config.run.threads = max(1, int(v))
        except ValueError:
            logger.warning("Ignoring %sTHREADS=%r: not an integer", prefix, v)
    if v := os.environ.get(f"{prefix}PAIRING"):
        try:
            config.octagon.pairing = _check_pairing(v)
        except ValueError as e:
            logger.warning("Ignoring %sPAIRING: %s", prefix, e)

    return config


def _check_pairing(value: str) -> str:
    if value not in PAIRINGS:
        raise ValueError(f"Unknown pairing: {value} (expected one of {', '.join(PAIRINGS)})")
    return value


def config_to_dict(config: MysticumConfig) -> dict[str, Any]:
    return asdict(config)


def save_config(config: MysticumConfig, config_path: Path | str | None = None) -> None:
    """Save configuration to file."""
    path = Path(config_path) if config_path else DEFAULT_CONFIG_PATH
    path.parent.mkdir(parents=True, exist_ok=True)

    with open(path, "w") as f:
        json.dump(config_to_dict(config), f, indent=2, sort_keys=True)
