from __future__ import annotations

from fractions import Fraction

import pytest

from mysticum.models import Scene
from mysticum.scenes import generate
from mysticum.theorems.hexagon import HexScene
from mysticum.theorems.octagon import OctScene


@pytest.fixture(scope="session")
def hex_scene() -> Scene:
    return generate("hex", 7)


@pytest.fixture(scope="session")
def hex_s(hex_scene: Scene) -> HexScene:
    return HexScene(hex_scene)


@pytest.fixture(scope="session")
def oct_scene() -> Scene:
    return generate("oct", 3)


@pytest.fixture(scope="session")
def oct_s(oct_scene: Scene) -> OctScene:
    return OctScene(oct_scene)


@pytest.fixture
def pentagon() -> Scene:
    params = {"A": Fraction(0), "B": Fraction(1), "C": Fraction(3), "D": Fraction(-2), "E": Fraction(1, 2)}
    return Scene.on_circle(params, kind="ngon")


@pytest.fixture
def isolated_config(tmp_path, monkeypatch):  # type: ignore[no-untyped-def]
    """A config path that does not exist and no MYSTICUM_* variables."""
    monkeypatch.delenv("MYSTICUM_THREADS", raising=False)
    monkeypatch.delenv("MYSTICUM_PAIRING", raising=False)
    return tmp_path / "missing-config.json"
