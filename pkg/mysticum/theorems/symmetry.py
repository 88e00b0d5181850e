"""The S8 action on labels and the stabilizers of conics and pencils.

Objects acted on: matchings, cyclic orderings, and frozensets of matchings
(a conic is the pair of its two quartic matchings, a pencil the triple of its
three pairwise compatible matchings). Stabilizers are found by brute force over
all 40320 permutations; orbits by breadth-first search from two generators.
"""

from __future__ import annotations

import logging
import math
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cache
from itertools import permutations
from typing import Any, Iterable, Union

from ..combinatorics import (
    LABELS8,
    CyclicOrdering,
    Matching,
    compatible_triples,
    two_quadrilateral,
)
from ..errors import ClassificationAnomaly

logger = logging.getLogger(__name__)

S8_ORDER = math.factorial(8)

TYPE_1_TRIPLE = ("AB|CD|EF|GH", "BC|DE|FG|AH", "AD|CH|EG|BF")
TYPE_2_TRIPLE = ("AB|CD|EF|GH", "BC|DE|FG|AH", "AF|CE|DG|BH")

PUBLISHED_TYPES = {
    "type-1": {"stabilizer_order": 48, "pencils": 1680, "per_conic": 2},
    "type-2": {"stabilizer_order": 16, "pencils": 26880, "per_conic": 32},
}

Actable = Union[Matching, CyclicOrdering, frozenset]


@dataclass(frozen=True, order=True)
class Perm:
    """A permutation of A..H; ``images[i]`` is the image of the i-th label."""

    images: tuple[str, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(LABELS8):
            raise ValueError(f"not a permutation of {LABELS8}: {self.images!r}")

    @classmethod
    def identity(cls) -> Perm:
        return cls(tuple(LABELS8))

    @classmethod
    def from_mapping(cls, mapping: dict[str, str]) -> Perm:
        return cls(tuple(mapping.get(x, x) for x in LABELS8))

    @classmethod
    def from_cycles(cls, text: str) -> Perm:
        """Parse cycle notation such as "(A B C)(D E)" or "(ABC)(DE)"."""
        mapping: dict[str, str] = {}
        for chunk in text.replace(")", " ").split("("):
            cycle = [c for c in chunk if c.isalpha()]
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                if a in mapping:
                    raise ValueError(f"label {a} repeated in {text!r}")
                mapping[a] = b
        return cls.from_mapping(mapping)

    @property
    def mapping(self) -> dict[str, str]:
        return dict(zip(LABELS8, self.images))

    def __call__(self, label: str) -> str:
        return self.images[LABELS8.index(label)]

    def __mul__(self, other: Perm) -> Perm:
        """(self * other)(x) = self(other(x))."""
        return Perm(tuple(self(other(x)) for x in LABELS8))

    def inverse(self) -> Perm:
        inv = {b: a for a, b in self.mapping.items()}
        return Perm(tuple(inv[x] for x in LABELS8))

    def cycles(self) -> list[tuple[str, ...]]:
        seen: set[str] = set()
        out = []
        for x in LABELS8:
            if x in seen:
                continue
            cycle = [x]
            seen.add(x)
            y = self(x)
            while y != x:
                cycle.append(y)
                seen.add(y)
                y = self(y)
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    @property
    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def is_identity(self) -> bool:
        return self.images == tuple(LABELS8)

    def __str__(self) -> str:
        cycles = self.cycles()
        return "".join("(" + " ".join(c) + ")" for c in cycles) if cycles else "()"


def act(p: Perm, obj: Actable) -> Actable:
    """Image of a combinatorial object under a relabeling."""
    mapping = p.mapping
    if isinstance(obj, Matching):
        return obj.relabel(mapping)
    if isinstance(obj, CyclicOrdering):
        return obj.relabel(mapping)
    if isinstance(obj, frozenset):
        return frozenset(act(p, x) for x in obj)
    raise TypeError(f"Cannot act on {type(obj).__name__}")


@cache
def all_perms() -> tuple[Perm, ...]:
    return tuple(Perm(p) for p in permutations(LABELS8))


@dataclass(frozen=True)
class PermGroup:
    """A materialized permutation group."""

    elements: frozenset[Perm]
    generators: tuple[Perm, ...] = ()

    @classmethod
    def generated_by(cls, generators: Iterable[Perm]) -> PermGroup:
        gens = tuple(generators)
        elements = {Perm.identity()}
        frontier = deque(elements)
        while frontier:
            g = frontier.popleft()
            for h in gens:
                k = h * g
                if k not in elements:
                    elements.add(k)
                    frontier.append(k)
        return cls(frozenset(elements), gens)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Perm) -> bool:
        return p in self.elements

    def is_closed(self) -> bool:
        return all(a * b in self.elements for a in self.elements for b in self.elements)

    def element_orders(self) -> dict[int, int]:
        return dict(sorted(Counter(g.order for g in self.elements).items()))

    def dihedral_generators(self) -> tuple[Perm, Perm] | None:
        """An 8-cycle c and an involution r with r c r = c^-1 generating the whole group."""
        cycles = sorted(g for g in self.elements if len(g.cycles()) == 1 and len(g.cycles()[0]) == 8)
        involutions = sorted(g for g in self.elements if g.order == 2)
        for c in cycles:
            for r in involutions:
                if r * c * r == c.inverse():
                    if PermGroup.generated_by((c, r)).elements == self.elements:
                        return c, r
        return None

    def centralizer_of(self, p: Perm) -> PermGroup:
        return PermGroup(frozenset(g for g in self.elements if g * p == p * g))

    def to_dict(self) -> dict[str, Any]:
        dihedral = self.dihedral_generators()
        return {
            "order": self.order,
            "generators": [str(g) for g in self.generators],
            "element_orders": {str(k): v for k, v in self.element_orders().items()},
            "dihedral_generators": [str(g) for g in dihedral] if dihedral else None,
        }


def stabilizer(obj: Actable, candidates: Iterable[Perm] | None = None) -> PermGroup:
    """Brute-force setwise stabilizer inside S8."""
    elements = frozenset(p for p in (candidates or all_perms()) if act(p, obj) == obj)
    return PermGroup(elements, _small_generating_set(elements))


def _small_generating_set(elements: frozenset[Perm]) -> tuple[Perm, ...]:
    gens: list[Perm] = []
    span = {Perm.identity()}
    for g in sorted(elements, key=lambda g: (-g.order, g)):
        if g not in span:
            gens.append(g)
            span = set(PermGroup.generated_by(gens).elements)
        if len(span) == len(elements):
            break
    return tuple(gens)


def orbit(obj: Actable, generators: Iterable[Perm]) -> set[Actable]:
    """Full orbit of ``obj`` under the group generated by ``generators``."""
    gens = tuple(generators)
    seen = {obj}
    frontier = deque([obj])
    while frontier:
        x = frontier.popleft()
        for g in gens:
            y = act(g, x)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


S8_GENERATORS = (Perm.from_cycles("(A B)"), Perm.from_cycles("(A B C D E F G H)"))


# === Conics ===


def conic_object(o: CyclicOrdering) -> frozenset[Matching]:
    return frozenset(o.alternating_matchings())


def stabilizer_of_conic(o: CyclicOrdering) -> PermGroup:
    """Stabilizer of the unordered matching pair of an octagon."""
    return stabilizer(conic_object(o))


def stabilizer_of_pair(m1: Matching, m2: Matching) -> PermGroup:
    """Stabilizer of any matching pair; used for the two-quadrilateral conics."""
    if not two_quadrilateral(m1, m2):
        logger.debug("stabilizer_of_pair on a pair that is not two quadrilaterals: %s, %s", m1, m2)
    return stabilizer(frozenset((m1, m2)))


# === Pencils ===


def triple_object(texts: Iterable[str]) -> frozenset[Matching]:
    return frozenset(Matching.parse(t) for t in texts)


@dataclass
class PencilClass:
    name: str
    representative: frozenset[Matching]
    size: int
    stabilizer: PermGroup
    per_conic: dict[int, int] = field(default_factory=dict)

    @property
    def stabilizer_order(self) -> int:
        return self.stabilizer.order

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "representative": sorted(str(m) for m in self.representative),
            "triples": self.size,
            "stabilizer_order": self.stabilizer_order,
            "orbit_stabilizer_ok": self.size * self.stabilizer_order == S8_ORDER,
            "stabilizer": self.stabilizer.to_dict(),
            "structure_summary": structure_summary(self.stabilizer),
            "per_conic": {str(k): v for k, v in sorted(self.per_conic.items())},
        }


def structure_summary(group: PermGroup) -> dict[str, Any]:
    """Order-3 elements and whether one commutes with a dihedral subgroup of order 16."""
    threes = sorted(g for g in group.elements if g.order == 3)
    found = False
    for t in threes:
        centralizer = group.centralizer_of(t)
        eight_cycles = [g for g in centralizer.elements if g.order == 8]
        if centralizer.order >= 16 and eight_cycles:
            found = True
            break
    return {"order3_elements": len(threes), "commuting_dihedral": found}


@dataclass
class PencilClassification:
    classes: list[PencilClass]
    total_triples: int

    @property
    def stabilizer_orders(self) -> list[int]:
        return sorted({c.stabilizer_order for c in self.classes}, reverse=True)

    @property
    def matches_published(self) -> bool:
        by_name = {c.name: c for c in self.classes}
        for name, figures in PUBLISHED_TYPES.items():
            c = by_name.get(name)
            if c is None or c.stabilizer_order != figures["stabilizer_order"] or c.size != figures["pencils"]:
                return False
        return len(self.classes) == len(PUBLISHED_TYPES)

    def to_dict(self) -> dict[str, Any]:
        return {
            "total_triples": self.total_triples,
            "classes": [c.to_dict() for c in self.classes],
            "stabilizer_orders": self.stabilizer_orders,
            "published": PUBLISHED_TYPES,
            "matches_published": self.matches_published,
        }


def classify_pencils(strict: bool = False) -> PencilClassification:
    """Split the compatible triples into S8-orbits and compute each stabilizer."""
    triples = [frozenset(t) for t in compatible_triples(LABELS8)]
    remaining = set(triples)
    anchors = [("type-1", triple_object(TYPE_1_TRIPLE)), ("type-2", triple_object(TYPE_2_TRIPLE))]
    orbits: list[tuple[str, frozenset[Matching], set[frozenset[Matching]]]] = []
    for name, rep in anchors:
        if rep in remaining:
            orb = orbit(rep, S8_GENERATORS)
            remaining -= orb
            orbits.append((name, rep, orb))
    extra = 3
    while remaining:
        rep = min(remaining, key=lambda t: sorted(t))
        orb = orbit(rep, S8_GENERATORS)
        remaining -= orb
        orbits.append((f"type-{extra}", rep, orb))
        extra += 1

    classes = []
    for name, rep, orb in orbits:
        group = stabilizer(rep)
        if group.order * len(orb) != S8_ORDER:
            raise ClassificationAnomaly(
                "orbit-stabilizer count failed",
                {"class": name, "orbit": len(orb), "stabilizer": group.order},
            )
        per_conic: Counter[frozenset[Matching]] = Counter()
        for t in orb:
            a, b, c = sorted(t)
            for pair in ((a, b), (a, c), (b, c)):
                per_conic[frozenset(pair)] += 1
        classes.append(PencilClass(
            name=name,
            representative=rep,
            size=len(orb),
            stabilizer=group,
            per_conic=dict(Counter(per_conic.values())),
        ))
        logger.debug("pencil class %s: %d triples, stabilizer order %d", name, len(orb), group.order)

    result = PencilClassification(classes=classes, total_triples=len(triples))
    if strict and set(result.stabilizer_orders) - {48, 16}:
        raise ClassificationAnomaly(
            "stabilizer orders differ from {48, 16}", result.to_dict()
        )
    return result


def conic_invariance(scene: Any, o: CyclicOrdering, group: PermGroup | None = None) -> dict[str, Any]:
    """Relabel an octagon scene by each stabilizer element and recompute the conic of ``o``."""
    from .octagon import OctScene, classical_conic

    group = group or stabilizer_of_conic(o)
    reference = classical_conic(OctScene(scene), o)
    moved = [
        str(g) for g in sorted(group.elements)
        if classical_conic(OctScene(scene.relabel(g.mapping)), o) != reference
    ]
    return {"conic": list(reference.key), "elements": group.order, "moved_by": moved, "invariant": not moved}
