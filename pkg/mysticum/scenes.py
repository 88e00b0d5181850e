"""Seeded scene generation.

Scenes are reproducible from (kind, seed, n) through a portable 64-bit linear
congruential generator:

    state <- (6364136223846793005 * state + 1442695040888963407) mod 2^64

Each draw uses the high 32 bits of the new state. A rational parameter is p/q
with p uniform in [-numerator_bound, numerator_bound] and q uniform in
[1, denominator_bound]. Candidates are rejection-sampled until the
kind-specific general-position check passes.
"""

from __future__ import annotations

import logging
import string
from fractions import Fraction
from typing import Callable, Sequence, TypeVar

from .config import GenerationConfig
from .errors import PreconditionError
from .geometry.projective import Conic, HPoint, join, meet
from .models import Scene

logger = logging.getLogger(__name__)

MULTIPLIER = 6364136223846793005
INCREMENT = 1442695040888963407
MASK = (1 << 64) - 1

KINDS = ("hex", "oct", "tangent-hex", "tangent-oct", "2ngon", "ngon", "pappus")

T = TypeVar("T")


class Lcg64:
    """64-bit LCG with the constants above."""

    def __init__(self, seed: int):
        self.state = seed & MASK

    def next_u64(self) -> int:
        self.state = (MULTIPLIER * self.state + INCREMENT) & MASK
        return self.state

    def next_u32(self) -> int:
        return self.next_u64() >> 32

    def below(self, n: int) -> int:
        if n < 1:
            raise ValueError("bound must be positive")
        return self.next_u32() % n

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] (modulo bias is accepted)."""
        return lo + self.below(hi - lo + 1)

    def rational(self, numerator_bound: int, denominator_bound: int) -> Fraction:
        p = self.randint(-numerator_bound, numerator_bound)
        q = self.randint(1, denominator_bound)
        return Fraction(p, q)

    def choice(self, items: Sequence[T]) -> T:
        return items[self.below(len(items))]


def labels_for(count: int) -> tuple[str, ...]:
    if count > len(string.ascii_uppercase):
        raise ValueError(f"at most {len(string.ascii_uppercase)} labelled points are supported")
    return tuple(string.ascii_uppercase[:count])


def distinct_params(rng: Lcg64, count: int, cfg: GenerationConfig) -> list[Fraction]:
    """``count`` pairwise distinct rational parameters, in draw order."""
    out: list[Fraction] = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > cfg.max_attempts * count:
            raise PreconditionError(
                "parameter bounds too small for the requested number of points",
                {"count": count, "numerator_bound": cfg.numerator_bound},
            )
        t = rng.rational(cfg.numerator_bound, cfg.denominator_bound)
        if t not in out:
            out.append(t)
    return out


def chord_meets_distinct(points: Sequence[HPoint]) -> bool:
    """True when the meets of disjoint chords are pairwise distinct points."""
    n = len(points)
    chords = [(i, j, join(points[i], points[j])) for i in range(n) for j in range(i + 1, n)]
    seen: set[HPoint] = set()
    vertices = set(points)
    for a in range(len(chords)):
        i1, j1, l1 = chords[a]
        for b in range(a + 1, len(chords)):
            i2, j2, l2 = chords[b]
            if len({i1, j1, i2, j2}) < 4:
                continue
            if l1 == l2:
                return False
            p = meet(l1, l2)
            if p in seen or p in vertices:
                return False
            seen.add(p)
    return True


# === Generators ===


def _circle_scene(rng: Lcg64, count: int, seed: int, kind: str, cfg: GenerationConfig) -> Scene:
    params = distinct_params(rng, count, cfg)
    return Scene.on_circle(dict(zip(labels_for(count), params)), seed=seed, kind=kind)


def _pappus_scene(rng: Lcg64, seed: int, cfg: GenerationConfig) -> Scene:
    """A, C, E on the line y = 0 and B, D, F on the line z = 0; the base conic is y*z."""
    first = distinct_params(rng, 3, cfg)
    second = distinct_params(rng, 3, cfg)
    points = {
        "A": HPoint.of(first[0], 0, 1),
        "C": HPoint.of(first[1], 0, 1),
        "E": HPoint.of(first[2], 0, 1),
        "B": HPoint.of(second[0], 1, 0),
        "D": HPoint.of(second[1], 1, 0),
        "F": HPoint.of(second[2], 1, 0),
    }
    params = {
        "A": first[0], "C": first[1], "E": first[2],
        "B": second[0], "D": second[1], "F": second[2],
    }
    return Scene(conic=Conic.from_coeffs((0, 0, 0, 0, 1, 0)), points=points, seed=seed,
                 kind="pappus", params=params)


def _checker(kind: str) -> Callable[[Scene], list[str]]:
    if kind == "hex":
        from .theorems.hexagon import general_position

        return general_position
    elif kind == "oct":
        from .theorems.octagon import general_position as oct_general_position

        return oct_general_position
    elif kind in ("tangent-hex", "tangent-oct"):
        from .theorems.dual_degenerate import tangent_general_position

        return tangent_general_position
    elif kind == "2ngon":
        return lambda scene: [] if chord_meets_distinct(list(scene.points.values())) else ["chord meets coincide"]
    elif kind == "pappus":
        from .theorems.dual_degenerate import pappus_general_position

        return pappus_general_position
    return lambda scene: []


def generate(
    kind: str,
    seed: int,
    n: int | None = None,
    config: GenerationConfig | None = None,
) -> Scene:
    """Generate a scene of the given kind.

    Args:
        kind: hex, oct, tangent-hex, tangent-oct, 2ngon, ngon or pappus
        seed: PRNG seed
        n: half the vertex count for 2ngon, the vertex count for ngon
    """
    cfg = config or GenerationConfig()
    rng = Lcg64(seed)

    if kind in ("hex", "tangent-hex"):
        count = 6
    elif kind in ("oct", "tangent-oct"):
        count = 8
    elif kind == "2ngon":
        if n is None or n < 3:
            raise PreconditionError("2ngon needs --n of at least 3", {"n": n})
        count = 2 * n
    elif kind == "ngon":
        if n is None or n < 3:
            raise PreconditionError("ngon needs --n of at least 3", {"n": n})
        count = n
    elif kind == "pappus":
        count = 6
    else:
        raise ValueError(f"Unknown scene kind: {kind}")

    check = _checker(kind)
    for attempt in range(1, cfg.max_attempts + 1):
        if kind == "pappus":
            scene = _pappus_scene(rng, seed, cfg)
        else:
            scene = _circle_scene(rng, count, seed, kind, cfg)
        problems = check(scene)
        if not problems:
            logger.debug("%s scene accepted after %d attempt(s)", kind, attempt)
            return scene
        logger.debug("%s candidate rejected: %s", kind, "; ".join(problems))
    raise PreconditionError(
        "no general-position scene within the attempt cap",
        {"kind": kind, "seed": seed, "attempts": cfg.max_attempts},
    )
