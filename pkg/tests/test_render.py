from __future__ import annotations

import numpy as np
import pytest

from mysticum.combinatorics import CyclicOrdering
from mysticum.config import RenderConfig
from mysticum.errors import PreconditionError
from mysticum.geometry.projective import Conic, HLine
from mysticum.models import Scene
from mysticum.render import Overlay, render_scene, residual_points_float, scene_overlays
from mysticum.theorems.hexagon import HexScene, pascal_certificate, triangle_cubics


def test_empty_scene_has_no_lines() -> None:
    svg = render_scene(None)
    assert svg.startswith("<?xml")
    assert "<line" not in svg
    assert 'width="800"' in svg


def test_scene_render_is_deterministic(hex_scene: Scene) -> None:
    first = render_scene(hex_scene)
    assert first == render_scene(hex_scene)
    assert first.count("<circle") == 6
    assert first.count("<text") == 6


def test_lines_outside_viewport_are_omitted() -> None:
    far = HLine.of(1, 0, -100)
    near = HLine.of(1, 1, 0)
    svg = render_scene(None, [Overlay(far, "pascal"), Overlay(near, "pascal")], RenderConfig(viewport=2.0, size=200))
    assert svg.count("<line") == 1


def test_pascal_overlays(hex_scene: Scene) -> None:
    overlays = scene_overlays(hex_scene, ["pascal"])
    assert len(overlays) == 60
    svg = render_scene(hex_scene, overlays, RenderConfig(viewport=400.0))
    assert 0 < svg.count('<line class="pascal"') <= 60


def test_mystic_overlay(oct_scene: Scene) -> None:
    (overlay,) = scene_overlays(oct_scene, ["mystic"])
    assert isinstance(overlay.obj, Conic)
    assert overlay.role == "mystic"


def test_unknown_overlay(hex_scene: Scene) -> None:
    with pytest.raises(PreconditionError):
        scene_overlays(hex_scene, ["pentagram"])


def test_residual_points_lie_on_the_pascal_line(hex_s: HexScene) -> None:
    d1, d2 = triangle_cubics(hex_s, CyclicOrdering.parse("ABCDEF"))
    cert = pascal_certificate(hex_s, d1, d2)
    line = np.array([float(c) for c in cert.line().coeffs])
    line /= np.linalg.norm(line)
    points = residual_points_float(d1, d2, cert)
    assert points
    for p in points:
        assert abs(float(line @ p)) < 1e-9


def test_residual_points_need_matching_certificate(hex_s: HexScene) -> None:
    d1, d2 = triangle_cubics(hex_s, CyclicOrdering.parse("ABCDEF"))
    cert = pascal_certificate(hex_s, d1, d2)
    with pytest.raises(PreconditionError):
        residual_points_float(d2, d1, cert)
