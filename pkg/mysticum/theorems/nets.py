"""Nets of lines and of conics.

A k-net is k disjoint classes of curves plus a set of incidence objects (points
for lines, pencils for conics) such that every cross-class pair of curves is
joined by exactly one object and every object meets every class exactly once.
For k >= 3 all classes have the same size d and there are d^2 objects.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Sequence

from ..algebra.linear import format_rat, rank_of_rows
from ..algebra.poly import poly_mul
from ..errors import NetViolation, NoCommonMember, PreconditionError
from ..geometry.decomposition import Pencil, in_pencil, pencil_of
from ..geometry.projective import Conic, HLine, HPoint, dualize, join, meet
from .base import point_dict
from .hexagon import (
    STEINER_LINE_P,
    STEINER_LINE_Q,
    STEINER_LINE_REFERENCE,
    HexScene,
    generalized_pascal_line,
    generalized_steiner_line,
)
from .octagon import OctScene, side_conics, steiner_conic_data

logger = logging.getLogger(__name__)


@dataclass
class NetReport:
    """Condition-by-condition outcome of a net validation."""

    kind: str
    k: int
    sizes: list[int]
    objects: int
    conditions: dict[str, bool] = field(default_factory=dict)
    failures: list[dict[str, Any]] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return all(self.conditions.values())

    def fail(self, condition: str, **detail: Any) -> None:
        self.conditions[condition] = False
        self.failures.append({"condition": condition, **detail})

    def require_valid(self) -> NetReport:
        if not self.valid:
            raise NetViolation(f"{self.kind} is not a net", self.to_dict())
        return self

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "k": self.k,
            "class_sizes": self.sizes,
            "objects": self.objects,
            "conditions": self.conditions,
            "failures": self.failures[:20],
            "valid": self.valid,
        }


def _cardinality(report: NetReport) -> None:
    if report.k < 3:
        return
    d = report.sizes[0]
    report.conditions["equal_cardinality"] = len(set(report.sizes)) == 1
    report.conditions["objects_d_squared"] = report.objects == d * d
    if not report.conditions["equal_cardinality"]:
        report.failures.append({"condition": "equal_cardinality", "sizes": report.sizes})
    if not report.conditions["objects_d_squared"]:
        report.failures.append({"condition": "objects_d_squared", "objects": report.objects, "d": d})


# === Line nets ===


@dataclass
class LineNet:
    classes: list[list[HLine]]
    points: set[HPoint]

    def to_dict(self) -> dict[str, Any]:
        return {
            "classes": [[list(line.coeffs) for line in cls] for cls in self.classes],
            "points": sorted(point_dict(p) for p in self.points),
        }


@dataclass
class PointNet:
    """Dual of a line net: classes of points and the lines carrying one point of each class."""

    classes: list[list[HPoint]]
    lines: set[HLine]


def line_net_from_classes(classes: Sequence[Sequence[HLine]]) -> LineNet:
    """Net points taken as all meets of the first two classes."""
    if len(classes) < 2:
        raise PreconditionError("a net needs at least two classes", {"k": len(classes)})
    points = {meet(a, b) for a in classes[0] for b in classes[1] if a != b}
    return LineNet([list(c) for c in classes], points)


def validate_line_net(net: LineNet) -> NetReport:
    classes = net.classes
    report = NetReport("line net", len(classes), [len(c) for c in classes], len(net.points))
    all_lines = [line for c in classes for line in c]
    report.conditions["disjoint_classes"] = len(set(all_lines)) == len(all_lines)
    if not report.conditions["disjoint_classes"]:
        report.failures.append({"condition": "disjoint_classes"})

    report.conditions["one_line_per_class"] = True
    for p in net.points:
        counts = [sum(1 for line in c if line.contains(p)) for c in classes]
        if any(n != 1 for n in counts):
            report.fail("one_line_per_class", point=point_dict(p), counts=counts)

    report.conditions["cross_meets_are_points"] = True
    for (i, a), (j, b) in combinations(list(enumerate(classes)), 2):
        for x in a:
            for y in b:
                if x == y or meet(x, y) not in net.points:
                    report.fail("cross_meets_are_points", classes=[i, j], lines=[list(x.coeffs), list(y.coeffs)])
    _cardinality(report)
    return report


def dualize_line_net(net: LineNet) -> PointNet:
    classes = []
    for c in net.classes:
        points = [dualize(line) for line in c]
        assert all(isinstance(p, HPoint) for p in points)
        classes.append(points)
    lines = {dualize(p) for p in net.points}
    return PointNet(classes, lines)  # type: ignore[arg-type]


def validate_point_net(net: PointNet) -> NetReport:
    classes = net.classes
    report = NetReport("point net", len(classes), [len(c) for c in classes], len(net.lines))
    all_points = [p for c in classes for p in c]
    report.conditions["disjoint_classes"] = len(set(all_points)) == len(all_points)
    report.conditions["one_point_per_class"] = True
    for line in net.lines:
        counts = [sum(1 for p in c if line.contains(p)) for c in classes]
        if any(n != 1 for n in counts):
            report.fail("one_point_per_class", line=list(line.coeffs), counts=counts)
    report.conditions["cross_joins_are_lines"] = True
    for (i, a), (j, b) in combinations(list(enumerate(classes)), 2):
        for x in a:
            for y in b:
                if x == y or join(x, y) not in net.lines:
                    report.fail("cross_joins_are_lines", classes=[i, j])
    _cardinality(report)
    return report


def build_line_net(s: HexScene) -> LineNet:
    """The (3,4) net of the generalized Steiner line construction for l(AF)·l(BE)·l(CD).

    Classes: the Pascal lines with the P-cubics, those with the Q-cubics, and the
    three reference lines together with the Steiner line through the p_i ∩ q_i.
    """
    d = s.cubic(STEINER_LINE_REFERENCE)
    ps = [generalized_pascal_line(s, d, s.cubic(m)) for m in STEINER_LINE_P]
    qs = [generalized_pascal_line(s, d, s.cubic(m)) for m in STEINER_LINE_Q]
    steiner = generalized_steiner_line(s, d)
    third = [s.line(a, b) for a, b in STEINER_LINE_REFERENCE.pairs] + [steiner]
    net = line_net_from_classes([ps, qs, third])
    validate_line_net(net).require_valid()
    return net


# === Conic nets ===


@dataclass
class ConicNet:
    classes: list[list[Conic]]
    pencils: list[Pencil]

    def to_dict(self) -> dict[str, Any]:
        return {
            "classes": [[list(c.key) for c in cls] for cls in self.classes],
            "pencils": [[list(b.key) for b in p.basis] for p in self.pencils],
        }


def synthesize_pencils(classes: Sequence[Sequence[Conic]]) -> list[Pencil]:
    """All distinct pencils spanned by a pair of conics from different classes."""
    found: dict[tuple[tuple[int, ...], tuple[int, ...]], Pencil] = {}
    for a_cls, b_cls in combinations(classes, 2):
        for a in a_cls:
            for b in b_cls:
                if a == b:
                    continue
                pencil = pencil_of(a.form, b.form)
                found.setdefault(pencil.key, pencil)
    return [found[k] for k in sorted(found)]


def validate_conic_net(net: ConicNet) -> NetReport:
    """Disjointness, pencil coverage, one conic of each class per pencil, and the cardinality law."""
    classes = net.classes
    if len(classes) < 2:
        raise PreconditionError("a net needs at least two classes", {"k": len(classes)})
    report = NetReport("conic net", len(classes), [len(c) for c in classes], len(net.pencils))

    keys = [c.key for cls in classes for c in cls]
    report.conditions["disjoint_classes"] = len(set(keys)) == len(keys)
    if not report.conditions["disjoint_classes"]:
        report.failures.append({"condition": "disjoint_classes", "duplicates": len(keys) - len(set(keys))})

    report.conditions["pairs_span_listed_pencils"] = True
    for (i, a_cls), (j, b_cls) in combinations(list(enumerate(classes)), 2):
        for a in a_cls:
            for b in b_cls:
                if a == b:
                    continue
                if not any(in_pencil(a.form, p) and in_pencil(b.form, p) for p in net.pencils):
                    report.fail("pairs_span_listed_pencils", classes=[i, j],
                                conics=[list(a.key), list(b.key)])

    report.conditions["one_conic_per_class"] = True
    for n, pencil in enumerate(net.pencils):
        counts = [sum(1 for c in cls if in_pencil(c.form, pencil)) for cls in classes]
        if any(m != 1 for m in counts):
            report.fail("one_conic_per_class", pencil=n, counts=counts)
    _cardinality(report)
    return report


@dataclass
class ExampleNet:
    net: ConicNet
    report: NetReport
    pairing: str
    steiner_conic: Conic

    def to_dict(self) -> dict[str, Any]:
        return {
            "pairing": self.pairing,
            "steiner_conic": list(self.steiner_conic.key),
            "net": self.net.to_dict(),
            "validation": self.report.to_dict(),
        }


def build_example_conic_net(s: OctScene, pairing: str = "cyclic", salt: int = 0) -> ExampleNet:
    """Classes {X_i}, {Y_i} and {C4, D4, S} for the quartic Q = C4·D4.

    X_i, Y_i are the mystic conics of Q with the paired products C·D, and S is the
    common member of the pencils (X_i, Y_i). The pencil set is every cross-class
    pencil; the validation report records any condition that fails.
    """
    cs, ds = side_conics(s, salt)
    q = poly_mul(cs[3].form, ds[3].form)
    data = steiner_conic_data(s, q, cs[:3], ds[:3], pairing)
    if data.common is None:
        raise NoCommonMember("the three pencils share no conic", data.to_dict())
    classes = [list(data.x), list(data.y), [cs[3], ds[3], data.common]]
    net = ConicNet(classes, synthesize_pencils(classes))
    report = validate_conic_net(net)
    logger.debug("example conic net: %d pencils, valid=%s", len(net.pencils), report.valid)
    return ExampleNet(net=net, report=report, pairing=pairing, steiner_conic=data.common)


# === Coefficient-space model ===


@dataclass
class P5Model:
    """Conics as points of coefficient space and pencils as planes through the origin."""

    classes: list[list[tuple[int, ...]]]
    planes: list[list[tuple[int, ...]]]
    conditions: dict[str, bool] = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return all(self.conditions.values())

    def to_dict(self) -> dict[str, Any]:
        return {
            "classes": [[[format_rat(v) for v in p] for p in cls] for cls in self.classes],
            "planes": [[[format_rat(v) for v in b] for b in plane] for plane in self.planes],
            "conditions": self.conditions,
            "valid": self.valid,
        }


def _on_plane(point: tuple[int, ...], plane: list[tuple[int, ...]]) -> bool:
    return rank_of_rows(plane + [point]) == 2


def net_as_p5(net: ConicNet) -> P5Model:
    """Re-check the net conditions as incidences of points and lines in coefficient space."""
    classes = [[c.key for c in cls] for cls in net.classes]
    planes = [[b.key for b in p.basis] for p in net.pencils]
    model = P5Model(classes, planes)
    flat = [p for cls in classes for p in cls]
    model.conditions["disjoint_classes"] = len(set(flat)) == len(flat)
    model.conditions["planes_are_lines"] = all(rank_of_rows(plane) == 2 for plane in planes)
    model.conditions["pairs_on_a_line"] = all(
        any(_on_plane(a, plane) and _on_plane(b, plane) for plane in planes)
        for a_cls, b_cls in combinations(classes, 2)
        for a in a_cls
        for b in b_cls
        if a != b
    )
    model.conditions["one_point_per_class"] = all(
        sum(1 for p in cls if _on_plane(p, plane)) == 1
        for plane in planes
        for cls in classes
    )
    return model


__all__ = [
    "ConicNet",
    "ExampleNet",
    "LineNet",
    "NetReport",
    "P5Model",
    "PointNet",
    "build_example_conic_net",
    "build_line_net",
    "dualize_line_net",
    "line_net_from_classes",
    "net_as_p5",
    "synthesize_pencils",
    "validate_conic_net",
    "validate_line_net",
    "validate_point_net",
]
