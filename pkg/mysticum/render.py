"""SVG figures of scenes and their incidence structures.

Everything here is floating point and display-only. Exact objects are converted
at the boundary; nothing computed in this module feeds a verdict.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Any, Callable, Sequence, Union

import numpy as np
from jinja2 import Template

from .algebra.poly import HomoPoly
from .config import RenderConfig
from .errors import ConvergenceFailure, PreconditionError
from .geometry.decomposition import ResidualCertificate
from .geometry.projective import UNIT_CIRCLE, Conic, HLine, HPoint
from .models import Scene

logger = logging.getLogger(__name__)

PALETTE = {
    "scene": "#222222",
    "pascal": "#1f77b4",
    "steiner": "#d62728",
    "kirkman": "#2ca02c",
    "plucker": "#9467bd",
    "cayley": "#ff7f0e",
    "mystic": "#8c564b",
    "residual": "#e377c2",
    "net-class-1": "#17becf",
    "net-class-2": "#bcbd22",
    "net-class-3": "#7f7f7f",
}

OVERLAYS = ("pascal", "steiner", "kirkman", "plucker", "cayley", "mystic", "residual")

SVG_TEMPLATE = """<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{{ size }}" height="{{ size }}" viewBox="0 0 {{ size }} {{ size }}">
  <rect x="0" y="0" width="{{ size }}" height="{{ size }}" fill="#ffffff"/>
  <path class="axis" d="{{ axes }}" stroke="#dddddd" stroke-width="1" fill="none"/>
{%- for c in curves %}
  <path class="{{ c.role }}" d="{{ c.d }}" stroke="{{ c.color }}" stroke-width="{{ c.width }}" fill="none"/>
{%- endfor %}
{%- for l in lines %}
  <line class="{{ l.role }}" x1="{{ l.x1 }}" y1="{{ l.y1 }}" x2="{{ l.x2 }}" y2="{{ l.y2 }}" stroke="{{ l.color }}" stroke-width="0.8"/>
{%- endfor %}
{%- for p in points %}
  <circle class="{{ p.role }}" cx="{{ p.x }}" cy="{{ p.y }}" r="3" fill="{{ p.color }}"/>
{%- if p.label %}
  <text x="{{ p.tx }}" y="{{ p.ty }}" font-family="sans-serif" font-size="12" fill="{{ p.color }}">{{ p.label }}</text>
{%- endif %}
{%- endfor %}
</svg>
"""

Drawable = Union[HLine, Conic, HPoint, np.ndarray]


@dataclass(frozen=True)
class Overlay:
    """One object to draw; ``obj`` may be a float point (array of three) for residual markers."""

    obj: Drawable
    role: str = "scene"
    label: str = ""


def _fmt(v: float) -> str:
    return f"{v:.3f}"


class _Canvas:
    def __init__(self, viewport: float, size: int):
        self.v = viewport
        self.size = size

    def pixel(self, x: float, y: float) -> tuple[float, float]:
        scale = self.size / (2 * self.v)
        return (x + self.v) * scale, (self.v - y) * scale

    def inside(self, x: float, y: float) -> bool:
        return -self.v <= x <= self.v and -self.v <= y <= self.v


def _affine(coords: Sequence[float]) -> tuple[float, float] | None:
    x, y, z = (float(c) for c in coords)
    if abs(z) < 1e-12 * max(1.0, abs(x), abs(y)):
        return None
    return x / z, y / z


def _clip_line(line: HLine, canvas: _Canvas) -> tuple[float, float, float, float] | None:
    a, b, c = (float(v) for v in line.coeffs)
    v = canvas.v
    hits: list[tuple[float, float]] = []
    if abs(b) > 1e-15:
        for x in (-v, v):
            y = -(a * x + c) / b
            if -v <= y <= v:
                hits.append((x, y))
    if abs(a) > 1e-15:
        for y in (-v, v):
            x = -(b * y + c) / a
            if -v <= x <= v:
                hits.append((x, y))
    if len(hits) < 2:
        return None
    hits.sort()
    (x1, y1), (x2, y2) = hits[0], hits[-1]
    if math.isclose(x1, x2) and math.isclose(y1, y2):
        return None
    return x1, y1, x2, y2


def _circle_path(canvas: _Canvas, samples: int) -> str:
    parts = []
    for i in range(samples + 1):
        theta = 2 * math.pi * i / samples
        px, py = canvas.pixel(math.cos(theta), math.sin(theta))
        parts.append(f"{'M' if i == 0 else 'L'}{_fmt(px)} {_fmt(py)}")
    return " ".join(parts)


def _conic_path(conic: Conic, canvas: _Canvas, samples: int) -> str:
    """Sample the conic along vertical and horizontal scanlines; each hit becomes a short dash."""
    a, b, c, d, e, f = (float(x) for x in conic.form.coeffs)
    v = canvas.v
    hits: list[tuple[float, float]] = []
    for s in np.linspace(-v, v, samples):
        # scan x = s: d y^2 + (b s + e) y + (a s^2 + c s + f) = 0
        for y in _real_roots([d, b * s + e, a * s * s + c * s + f]):
            hits.append((float(s), y))
        # scan y = s: a x^2 + (b s + c) x + (d s^2 + e s + f) = 0
        for x in _real_roots([a, b * s + c, d * s * s + e * s + f]):
            hits.append((x, float(s)))
    parts = []
    for x, y in sorted(hits):
        if canvas.inside(x, y):
            px, py = canvas.pixel(x, y)
            parts.append(f"M{_fmt(px)} {_fmt(py)} h0.6")
    return " ".join(parts)


def _real_roots(coeffs: Sequence[float]) -> list[float]:
    trimmed = np.trim_zeros(np.asarray(coeffs, dtype=float), "f")
    if trimmed.size < 2:
        return []
    roots = np.roots(trimmed)
    return sorted(float(r.real) for r in roots if abs(r.imag) < 1e-9)


def _axes(canvas: _Canvas) -> str:
    x0, y0 = canvas.pixel(-canvas.v, 0)
    x1, y1 = canvas.pixel(canvas.v, 0)
    x2, y2 = canvas.pixel(0, -canvas.v)
    x3, y3 = canvas.pixel(0, canvas.v)
    return f"M{_fmt(x0)} {_fmt(y0)} L{_fmt(x1)} {_fmt(y1)} M{_fmt(x2)} {_fmt(y2)} L{_fmt(x3)} {_fmt(y3)}"


def render_scene(
    scene: Scene | None,
    overlays: Sequence[Overlay] = (),
    config: RenderConfig | None = None,
) -> str:
    """Deterministic SVG of a scene and its overlays; off-viewport elements are omitted."""
    cfg = config or RenderConfig()
    canvas = _Canvas(cfg.viewport, cfg.size)
    curves: list[dict[str, Any]] = []
    lines: list[dict[str, Any]] = []
    points: list[dict[str, Any]] = []
    omitted = 0

    items = list(overlays)
    if scene is not None:
        items = [Overlay(scene.conic, "scene")] + [
            Overlay(p, "scene", label) for label, p in scene.points.items()
        ] + items

    for item in items:
        color = PALETTE.get(item.role, "#000000")
        obj = item.obj
        if isinstance(obj, Conic):
            if obj == UNIT_CIRCLE:
                d = _circle_path(canvas, cfg.samples)
            else:
                d = _conic_path(obj, canvas, cfg.samples)
            if d:
                curves.append({"role": item.role, "d": d, "color": color,
                               "width": "1.5" if item.role == "scene" else "1"})
            else:
                omitted += 1
        elif isinstance(obj, HLine):
            clipped = _clip_line(obj, canvas)
            if clipped is None:
                omitted += 1
                continue
            x1, y1 = canvas.pixel(clipped[0], clipped[1])
            x2, y2 = canvas.pixel(clipped[2], clipped[3])
            lines.append({"role": item.role, "x1": _fmt(x1), "y1": _fmt(y1),
                          "x2": _fmt(x2), "y2": _fmt(y2), "color": color})
        else:
            coords = obj.coords if isinstance(obj, HPoint) else tuple(obj)
            xy = _affine(coords)
            if xy is None or not canvas.inside(*xy):
                omitted += 1
                continue
            px, py = canvas.pixel(*xy)
            points.append({"role": item.role, "x": _fmt(px), "y": _fmt(py), "color": color,
                           "label": item.label, "tx": _fmt(px + 5), "ty": _fmt(py - 5)})
    if omitted:
        logger.debug("render: %d elements outside the viewport omitted", omitted)
    return Template(SVG_TEMPLATE).render(
        size=cfg.size, axes=_axes(canvas), curves=curves, lines=lines, points=points
    )


# === Numeric residual points ===


def _float_eval(form: HomoPoly, p: np.ndarray) -> float:
    total = 0.0
    for (i, j, k), c in form.terms().items():
        total += float(c) * p[0] ** i * p[1] ** j * p[2] ** k
    return float(total)


def _relative(form: HomoPoly, p: np.ndarray) -> float:
    scale = max(abs(float(c)) for c in form.coeffs)
    unit = p / np.linalg.norm(p)
    return abs(_float_eval(form, unit)) / scale


def _conic_float_point(conic: HomoPoly) -> np.ndarray:
    a, b, c, d, e, f = (float(x) for x in conic.coeffs)
    for s in np.linspace(-7.0, 7.0, 57):
        for y in _real_roots([d, b * s + e, a * s * s + c * s + f]):
            return np.array([float(s), y, 1.0])
    raise ConvergenceFailure("residual conic has no real point near the origin")


def _parametrization(residual: HomoPoly) -> tuple[Callable[[float], np.ndarray], np.ndarray, int]:
    """A map t -> point on the residual curve, its point at t = infinity, and its degree in t."""
    if residual.degree == 1:
        line = np.array([float(c) for c in residual.coeffs])
        basis = [np.cross(line, e) for e in np.eye(3)]
        basis.sort(key=lambda w: -float(np.linalg.norm(w)))
        u, v = basis[0], basis[1]
        if np.linalg.norm(np.cross(u, v)) < 1e-12:
            v = basis[2]
        return (lambda t: u + t * v), v, 1
    if residual.degree == 2:
        conic = Conic(residual)
        m = np.array([[float(x) for x in row] for row in conic.matrix])
        p0 = _conic_float_point(residual)
        u = np.array([1.0, 0.0, 0.0]) if abs(p0[1]) > 1e-9 or abs(p0[2]) > 1e-9 else np.array([0.0, 1.0, 0.0])
        v = np.cross(p0, u)

        def point(t: float) -> np.ndarray:
            w = u + t * v
            return float(w @ m @ w) * p0 - 2 * float(p0 @ m @ w) * w

        return point, float(v @ m @ v) * p0 - 2 * float(p0 @ m @ v) * v, 2
    raise PreconditionError("residual must be a line or a conic", {"degree": residual.degree})


def residual_points_float(
    d1: HomoPoly, d2: HomoPoly, certificate: ResidualCertificate, tolerance: float = 1e-9
) -> list[np.ndarray]:
    """Numeric residual intersection points for markers.

    Points are the real roots of d1 along the residual curve that also lie on d2.
    """
    if not certificate.verify() or certificate.d1 != d1 or certificate.d2 != d2:
        raise PreconditionError("residual markers need a valid certificate for these curves")
    point, at_infinity, degree = _parametrization(certificate.residual)
    n = degree * d1.degree
    ts = np.linspace(-2.0, 2.0, n + 1)
    values = [_float_eval(d1, point(float(t))) for t in ts]
    coeffs = np.polyfit(ts, values, n)
    candidates = [point(t) for t in _real_roots(list(coeffs))]
    if abs(coeffs[0]) < 1e-9 * max(1.0, float(np.max(np.abs(coeffs)))):
        candidates.append(at_infinity)
    found = [
        p / np.linalg.norm(p)
        for p in candidates
        if np.linalg.norm(p) > 1e-12
        and _relative(d1, p) < tolerance
        and _relative(d2, p) < tolerance
        and _relative(certificate.residual, p) < tolerance
    ]
    if not found:
        raise ConvergenceFailure("no residual point passed the numeric cross-check", {"candidates": len(candidates)})
    return found


def residual_overlays(d1: HomoPoly, d2: HomoPoly, certificate: ResidualCertificate) -> list[Overlay]:
    """Residual markers, or none with a warning when root finding fails."""
    try:
        return [Overlay(p, "residual") for p in residual_points_float(d1, d2, certificate)]
    except ConvergenceFailure as e:
        logger.warning("residual markers omitted: %s", e.message)
        return []


# === Overlay builders ===


def scene_overlays(scene: Scene, names: Sequence[str]) -> list[Overlay]:
    """Overlays for a hexagon or octagon scene by name."""
    out: list[Overlay] = []
    for name in names:
        if name not in OVERLAYS:
            raise PreconditionError(f"unknown overlay {name!r}", {"known": list(OVERLAYS)})
    if len(scene.labels) == 6:
        out.extend(_hexagon_overlays(scene, names))
    elif len(scene.labels) == 8:
        out.extend(_octagon_overlays(scene, names))
    elif names:
        raise PreconditionError("overlays need a hexagon or octagon scene", {"labels": list(scene.labels)})
    return out


def _hexagon_overlays(scene: Scene, names: Sequence[str]) -> list[Overlay]:
    from .combinatorics import CyclicOrdering, LABELS6
    from .theorems import hexagon

    s = hexagon.HexScene(scene)
    out: list[Overlay] = []
    needs_census = {"pascal", "steiner", "kirkman", "plucker", "cayley"} & set(names)
    report = hexagon.census(s) if needs_census else None
    for name in names:
        if name == "pascal" and report:
            out += [Overlay(line, "pascal") for _, line in sorted(report.pascal_lines.items())]
        elif name == "steiner" and report:
            out += [Overlay(p, "steiner") for _, p in sorted(report.steiner_points.items())]
        elif name == "kirkman" and report:
            out += [Overlay(p, "kirkman") for _, p in sorted(report.kirkman_points.items())]
        elif name == "plucker" and report:
            out += [Overlay(line, "plucker") for _, line in sorted(report.plucker_lines.items())]
        elif name == "cayley" and report:
            out += [Overlay(line, "cayley") for _, line in sorted(report.cayley_lines.items())]
        elif name == "residual":
            d1, d2 = hexagon.triangle_cubics(s, CyclicOrdering(tuple(LABELS6)))
            out += residual_overlays(d1, d2, hexagon.pascal_certificate(s, d1, d2))
    return out


def _octagon_overlays(scene: Scene, names: Sequence[str]) -> list[Overlay]:
    from .combinatorics import CyclicOrdering, LABELS8
    from .theorems import octagon

    s = octagon.OctScene(scene)
    m1, m2 = CyclicOrdering(tuple(LABELS8)).alternating_matchings()
    q1, q2 = s.quartic(m1), s.quartic(m2)
    cert = octagon.mystic_certificate(s, q1, q2)
    out: list[Overlay] = []
    for name in names:
        if name == "mystic":
            out.append(Overlay(cert.conic(), "mystic"))
        elif name == "residual":
            out += residual_overlays(q1, q2, cert)
        else:
            logger.debug("overlay %s has no octagon counterpart", name)
    return out
