from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import pytest

from mysticum.config import GenerationConfig
from mysticum.errors import PreconditionError, SceneFormatError
from mysticum.geometry.projective import UNIT_CIRCLE
from mysticum.models import ReportEnvelope, Scene, envelope
from mysticum.scenes import INCREMENT, Lcg64, chord_meets_distinct, distinct_params, generate, labels_for


def test_lcg_first_draw() -> None:
    rng = Lcg64(0)
    assert rng.next_u64() == INCREMENT
    assert all(-3 <= Lcg64(9).randint(-3, 3) <= 3 for _ in range(5))


def test_distinct_params_are_distinct() -> None:
    params = distinct_params(Lcg64(5), 8, GenerationConfig())
    assert len(set(params)) == 8


def test_distinct_params_gives_up_when_bounds_are_tiny() -> None:
    cfg = GenerationConfig(numerator_bound=1, denominator_bound=1, max_attempts=5)
    with pytest.raises(PreconditionError):
        distinct_params(Lcg64(1), 6, cfg)


def test_generation_is_deterministic() -> None:
    first = generate("oct", 11)
    second = generate("oct", 11)
    assert first.to_json() == second.to_json()
    assert first.scene_hash == second.scene_hash
    assert first.labels == tuple("ABCDEFGH")
    assert chord_meets_distinct(list(first.points.values()))


@pytest.mark.parametrize(("kind", "n", "count"), [("2ngon", 5, 10), ("ngon", 4, 4), ("pappus", None, 6)])
def test_generated_sizes(kind: str, n: int | None, count: int) -> None:
    scene = generate(kind, 2, n)
    assert len(scene.labels) == count
    assert all(scene.conic.contains(p) for p in scene.points.values())


def test_generate_rejects_bad_requests() -> None:
    with pytest.raises(ValueError):
        generate("heptagram", 1)
    with pytest.raises(PreconditionError):
        generate("2ngon", 1, 2)
    with pytest.raises(ValueError):
        labels_for(27)


def test_scene_file_round_trip(tmp_path: Path) -> None:
    scene = generate("hex", 4)
    path = tmp_path / "scene.json"
    scene.save(path)
    loaded = Scene.load(path)
    assert loaded == scene
    data = json.loads(path.read_text())
    assert data["kind"] == "hex"
    assert all(isinstance(v, str) for v in data["conic"])


def test_malformed_scenes_are_rejected(tmp_path: Path) -> None:
    with pytest.raises(SceneFormatError):
        Scene.from_json('{"conic": [1, 2], "points": {"A": [1, 0, 1]}}')
    with pytest.raises(SceneFormatError):
        Scene.from_json('{"conic": ["1", "0", "0", "1", "0", "-1"], "points": {"A": ["1", "1", "1"]}}')
    with pytest.raises(SceneFormatError):
        Scene.from_json('{"conic": [1, 0, 0, 1, 0, -1], "points": {"A": [1, 0, 1]}, "colour": "red"}')
    with pytest.raises(SceneFormatError):
        Scene.load(tmp_path / "absent.json")


def test_relabel_moves_points() -> None:
    scene = Scene.on_circle({"A": Fraction(0), "B": Fraction(2)})
    swapped = scene.relabel({"A": "B", "B": "A"})
    assert swapped["B"] == scene["A"]
    assert swapped.params["A"] == Fraction(2)
    assert swapped.conic == UNIT_CIRCLE


def test_envelope_carries_provenance() -> None:
    scene = generate("hex", 4)
    text = envelope("hexagon census", {"counts": {}}, scene, "fail")
    parsed = ReportEnvelope.model_validate_json(text)
    assert parsed.status == "fail"
    assert parsed.scene_hash == scene.scene_hash
    assert text.endswith("\n")
