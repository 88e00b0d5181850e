"""Scene and report models.

A Scene is the unit of generation, verification and rendering: a base conic,
labelled points on it, the seed that produced them and, for generated scenes,
the rational parameters of the points.

Wire formats are validated with pydantic:
- SceneFile: {"seed", "kind", "conic": [6 rationals], "points": {label: [3 rationals]}, "params"}
- ReportEnvelope: command, version, scene_hash, status and the command's report
Rationals travel as "p/q" strings (q omitted when 1).
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Literal, Mapping

from pydantic import BaseModel, ConfigDict, ValidationError, field_validator

from . import __version__
from .algebra.linear import format_rat, to_rat
from .errors import SceneFormatError
from .geometry.projective import Conic, HPoint, param_point

SceneKind = Literal["hex", "oct", "tangent-hex", "tangent-oct", "2ngon", "ngon", "pappus"]


def _parse_rational(value: Any) -> str:
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        try:
            to_rat(value)
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"not a rational: {value!r}") from e
        return value
    raise ValueError(f"not a rational: {value!r}")


class SceneFile(BaseModel):
    """Validated on-disk form of a scene."""

    model_config = ConfigDict(extra="forbid")

    seed: int = 0
    kind: SceneKind = "hex"
    conic: list[str]
    points: dict[str, list[str]]
    params: dict[str, str | None] = {}

    @field_validator("conic", mode="before")
    @classmethod
    def _conic_coeffs(cls, value: Any) -> list[str]:
        if not isinstance(value, list) or len(value) != 6:
            raise ValueError("conic needs 6 coefficients")
        return [_parse_rational(v) for v in value]

    @field_validator("points", mode="before")
    @classmethod
    def _point_coords(cls, value: Any) -> dict[str, list[str]]:
        if not isinstance(value, dict) or not value:
            raise ValueError("points must be a non-empty object")
        out = {}
        for label, coords in value.items():
            if not isinstance(coords, list) or len(coords) != 3:
                raise ValueError(f"point {label} needs 3 coordinates")
            out[str(label)] = [_parse_rational(c) for c in coords]
        return out

    @field_validator("params", mode="before")
    @classmethod
    def _param_values(cls, value: Any) -> dict[str, str | None]:
        if value is None:
            return {}
        if not isinstance(value, dict):
            raise ValueError("params must be an object")
        return {str(k): None if v is None else _parse_rational(v) for k, v in value.items()}


class ReportEnvelope(BaseModel):
    """Provenance wrapper for every JSON report."""

    command: str
    version: str = __version__
    status: Literal["pass", "fail", "error"] = "pass"
    scene_hash: str | None = None
    report: dict[str, Any]


@dataclass(frozen=True)
class Scene:
    """A labelled rational instance on a base conic."""

    conic: Conic
    points: Mapping[str, HPoint]
    seed: int = 0
    kind: str = "hex"
    params: Mapping[str, Fraction | None] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", dict(sorted(self.points.items())))
        object.__setattr__(self, "params", dict(sorted(self.params.items())))

    @classmethod
    def on_circle(cls, params: Mapping[str, Fraction | None], seed: int = 0, kind: str = "hex") -> Scene:
        from .geometry.projective import UNIT_CIRCLE

        return cls(
            conic=UNIT_CIRCLE,
            points={label: param_point(t) for label, t in params.items()},
            seed=seed,
            kind=kind,
            params=params,
        )

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.points)

    def __getitem__(self, label: str) -> HPoint:
        return self.points[label]

    def relabel(self, mapping: Mapping[str, str]) -> Scene:
        """Scene whose point ``mapping[X]`` sits where X sat."""
        return Scene(
            conic=self.conic,
            points={mapping[k]: v for k, v in self.points.items()},
            seed=self.seed,
            kind=self.kind,
            params={mapping[k]: v for k, v in self.params.items()},
        )

    # --- serialization ---

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "seed": self.seed,
            "kind": self.kind,
            "conic": [format_rat(c) for c in self.conic.form.coeffs],
            "points": {k: [format_rat(c) for c in p.coords] for k, p in self.points.items()},
        }
        if self.params:
            data["params"] = {k: None if v is None else format_rat(v) for k, v in self.params.items()}
        return data

    def to_json(self) -> str:
        return dump_json(self.to_dict())

    @property
    def scene_hash(self) -> str:
        return hashlib.sha256(self.to_json().encode()).hexdigest()

    @classmethod
    def from_file_model(cls, model: SceneFile) -> Scene:
        try:
            conic = Conic.from_coeffs(model.conic)
            points = {k: HPoint(tuple(to_rat(c) for c in v)) for k, v in model.points.items()}  # type: ignore[arg-type]
        except ValueError as e:
            raise SceneFormatError(str(e)) from e
        for label, point in points.items():
            if not conic.contains(point):
                raise SceneFormatError(
                    f"point {label} is not on the scene conic",
                    {"label": label, "point": list(point.coords)},
                )
        params = {k: None if v is None else to_rat(v) for k, v in model.params.items()}
        return cls(conic=conic, points=points, seed=model.seed, kind=model.kind, params=params)

    @classmethod
    def from_json(cls, text: str) -> Scene:
        try:
            model = SceneFile.model_validate_json(text)
        except ValidationError as e:
            raise SceneFormatError(
                "invalid scene file",
                {"errors": [{"loc": [str(p) for p in err["loc"]], "msg": err["msg"]} for err in e.errors()]},
            ) from e
        return cls.from_file_model(model)

    @classmethod
    def load(cls, path: Path | str) -> Scene:
        try:
            text = Path(path).read_text()
        except OSError as e:
            raise SceneFormatError(f"cannot read scene file: {e}", {"path": str(path)}) from e
        return cls.from_json(text)

    def save(self, path: Path | str) -> None:
        Path(path).write_text(self.to_json())


def dump_json(data: Any) -> str:
    """Deterministic JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def envelope(
    command: str,
    report: dict[str, Any],
    scene: Scene | None = None,
    status: Literal["pass", "fail", "error"] = "pass",
) -> str:
    env = ReportEnvelope(
        command=command,
        status=status,
        scene_hash=scene.scene_hash if scene is not None else None,
        report=report,
    )
    return dump_json(env.model_dump())
