"""Octagrammum Mysticum: mystic conics of octagons inscribed in a conic.

Covers:
- Mystic conics as residual conics of two quartics through eight points
- The 2520 classical conics (one per octagon) and 630 two-quadrilateral conics
- Pencils spanned by the conics of pairwise compatible matching triples
- The generalized Steiner conic: a common member of three pencils
- Residual certificates for 2n-gons with degree-n curves
"""

from __future__ import annotations

import logging
import time
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Sequence

from ..algebra.poly import HomoPoly, poly_mul
from ..combinatorics import (
    LABELS8,
    CyclicOrdering,
    Matching,
    all_matchings,
    all_orderings,
    compatible,
    compatible_partners,
    compatible_triples,
    two_quadrilateral_pairs,
)
from ..errors import (
    CensusMismatch,
    CheckFailure,
    NoCommonMember,
    PencilViolation,
    PreconditionError,
)
from ..geometry.decomposition import (
    Pencil,
    ResidualCertificate,
    common_member,
    curve_rank,
    in_pencil,
    pencil_of,
    residual_curve,
)
from ..geometry.projective import Conic, HPoint, coconic, meet
from ..models import Scene
from ..parallel import chunked, parallel_map
from ..scenes import Lcg64, chord_meets_distinct
from .base import (
    StatementResult,
    conic_with_free_point,
    matching_form,
    point_dict,
    random_forms_through,
    require_labels,
    side,
)

logger = logging.getLogger(__name__)

PUBLISHED_PENCILS = 28560
PUBLISHED_PENCILS_PER_CONIC = 34

PAIRINGS = ("cyclic", "anticyclic", "diagonal")

STATEMENTS = ("thm5_1", "thm5_3", "thm5_6", "prop5_4", "2ngon")


@dataclass(frozen=True)
class OctScene:
    """Eight labelled points A..H on an irreducible base conic."""

    scene: Scene

    def __post_init__(self) -> None:
        require_labels(self.scene, LABELS8)
        if self.scene.conic.is_degenerate:
            raise PreconditionError("octagon base conic is degenerate")

    @property
    def conic(self) -> Conic:
        return self.scene.conic

    @property
    def vertices(self) -> list[HPoint]:
        return list(self.scene.points.values())

    def __getitem__(self, label: str) -> HPoint:
        return self.scene[label]

    def quartic(self, m: Matching | str) -> HomoPoly:
        return matching_form(self.scene, m)


def oct_orderings() -> list[CyclicOrdering]:
    """The 2520 octagons on A..H."""
    return all_orderings(LABELS8)


def pair_key(m1: Matching, m2: Matching) -> str:
    a, b = sorted((m1, m2))
    return f"{a} + {b}"


# === Mystic conics ===


def mystic_certificate(
    s: OctScene, q1: HomoPoly, q2: HomoPoly, check_components: bool = True
) -> ResidualCertificate:
    return residual_curve(q1, q2, s.conic, s.vertices, check_components=check_components)


def mystic_conic(s: OctScene, q1: HomoPoly, q2: HomoPoly, check_components: bool = True) -> Conic:
    """Residual conic of two quartics through the eight vertices."""
    return mystic_certificate(s, q1, q2, check_components).conic()


def matching_conic(s: OctScene, m1: Matching, m2: Matching, check_components: bool = True) -> Conic:
    return mystic_conic(s, s.quartic(m1), s.quartic(m2), check_components)


def classical_conic(s: OctScene, o: CyclicOrdering, check_components: bool = True) -> Conic:
    """Mystic conic of the two alternating edge-quartics of an octagon."""
    m1, m2 = o.alternating_matchings()
    return matching_conic(s, m1, m2, check_components)


def classical_meets(s: OctScene, m1: Matching, m2: Matching) -> list[HPoint]:
    """Meets of an m1-line with an m2-line sharing no vertex."""
    out = []
    for a, b in m1.pairs:
        for c, d in m2.pairs:
            if {a, b} & {c, d}:
                continue
            out.append(meet(side(s.scene, a, b), side(s.scene, c, d)))
    return out


# === Censuses ===


def _conics_for_pairs(job: tuple[Scene, list[tuple[Matching, Matching]]]) -> list[tuple[int, ...]]:
    scene, pairs = job
    s = OctScene(scene)
    return [matching_conic(s, a, b, check_components=False).key for a, b in pairs]


def _conic_map(
    s: OctScene, pairs: Sequence[tuple[Matching, Matching]], workers: int
) -> dict[tuple[Matching, Matching], Conic]:
    jobs = [(s.scene, chunk) for chunk in chunked(list(pairs), max(1, len(pairs) // (4 * workers) or 1))]
    keys = [k for part in parallel_map(_conics_for_pairs, jobs, workers) for k in part]
    return {pair: Conic.from_coeffs(key) for pair, key in zip(pairs, keys)}


@dataclass
class ConicCensus:
    matchings: int
    partners_per_matching: dict[int, int]
    classical: dict[tuple[Matching, Matching], Conic]
    two_quadrilateral: dict[tuple[Matching, Matching], Conic]
    degenerate_classical: int = 0
    diff: list[dict[str, Any]] = field(default_factory=list)

    @property
    def counts(self) -> dict[str, int]:
        return {
            "matchings": self.matchings,
            "classical_conics": len({c.key for c in self.classical.values()}),
            "two_quadrilateral_conics": len({c.key for c in self.two_quadrilateral.values()}),
            "degenerate_classical_conics": self.degenerate_classical,
        }

    def to_dict(self) -> dict[str, Any]:
        return {
            "counts": self.counts,
            "expected": {"matchings": 105, "classical_conics": 2520, "two_quadrilateral_conics": 630},
            "partners_per_matching": {str(k): v for k, v in self.partners_per_matching.items()},
            "classical_conics": {
                str(CyclicOrdering.from_matchings(*pair)): list(c.key)
                for pair, c in sorted(self.classical.items())
            },
            "two_quadrilateral_conics": {
                pair_key(*pair): list(c.key) for pair, c in sorted(self.two_quadrilateral.items())
            },
            "diff": self.diff,
        }


def conic_census(s: OctScene, workers: int = 1) -> ConicCensus:
    started = time.perf_counter()
    matchings = all_matchings(LABELS8)
    partners = compatible_partners(matchings)
    histogram = dict(Counter(len(v) for v in partners.values()))

    classical_pairs: list[tuple[Matching, Matching]] = []
    for o in oct_orderings():
        a, b = sorted(o.alternating_matchings())
        classical_pairs.append((a, b))
    classical = _conic_map(s, classical_pairs, workers)
    logger.debug("octagon census: %d classical conics in %.2fs", len(classical), time.perf_counter() - started)
    quads = _conic_map(s, two_quadrilateral_pairs(LABELS8), workers)
    logger.debug("octagon census: two-quadrilateral conics done in %.2fs", time.perf_counter() - started)

    report = ConicCensus(
        matchings=len(matchings),
        partners_per_matching=histogram,
        classical=classical,
        two_quadrilateral=quads,
        degenerate_classical=sum(1 for c in classical.values() if c.is_degenerate),
    )
    expected = {"matchings": 105, "classical_conics": 2520, "two_quadrilateral_conics": 630}
    for name, value in expected.items():
        if report.counts[name] != value:
            report.diff.append({"object": name, "expected": value, "found": report.counts[name]})
    if histogram != {48: 105}:
        report.diff.append({"object": "partners_per_matching", "expected": {"48": 105}, "found": histogram})
    if report.diff:
        raise CensusMismatch("octagon conic census differs from the expected figures", report.to_dict())
    return report


@dataclass
class PencilCensus:
    triples: int
    pencils: dict[tuple[tuple[int, ...], tuple[int, ...]], Pencil]
    per_conic: dict[tuple[int, ...], int]

    @property
    def distribution(self) -> dict[int, int]:
        return dict(sorted(Counter(self.per_conic.values()).items()))

    @property
    def matches_published(self) -> bool:
        return (
            len(self.pencils) == PUBLISHED_PENCILS
            and self.distribution == {PUBLISHED_PENCILS_PER_CONIC: len(self.per_conic)}
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "compatible_triples": self.triples,
            "distinct_pencils": len(self.pencils),
            "pencils_per_conic": {str(k): v for k, v in self.distribution.items()},
            "published": {
                "distinct_pencils": PUBLISHED_PENCILS,
                "pencils_per_conic": PUBLISHED_PENCILS_PER_CONIC,
            },
            "matches_published": self.matches_published,
            "pencils": [p.to_dict() for _, p in sorted(self.pencils.items())],
        }


def pencil_census(s: OctScene, conics: ConicCensus | None = None, workers: int = 1) -> PencilCensus:
    """Check that every compatible triple gives three conics of one pencil, and count pencils."""
    conics = conics or conic_census(s, workers)
    by_pair = conics.classical
    triples = compatible_triples(LABELS8)
    pencils: dict[tuple[tuple[int, ...], tuple[int, ...]], Pencil] = {}
    members: dict[tuple[tuple[int, ...], tuple[int, ...]], set[tuple[int, ...]]] = defaultdict(set)
    for a, b, c in triples:
        k_ab, k_ac, k_bc = by_pair[(a, b)], by_pair[(a, c)], by_pair[(b, c)]
        pencil = pencil_of(k_ab.form, k_ac.form)
        if not in_pencil(k_bc.form, pencil):
            raise PencilViolation(
                "three mystic conics of a compatible triple do not share a pencil",
                {"triple": [str(a), str(b), str(c)]},
            )
        pencils[pencil.key] = pencil
        members[pencil.key].update((k_ab.key, k_ac.key, k_bc.key))
    per_conic: dict[tuple[int, ...], int] = {c.key: 0 for c in by_pair.values()}
    for keys in members.values():
        for key in keys:
            per_conic[key] += 1
    return PencilCensus(triples=len(triples), pencils=pencils, per_conic=per_conic)


# === Generalized Steiner conic ===


def steiner_pairs(pairing: str) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Index pairs ((c, d) for X_i, (c, d) for Y_i), 0-indexed."""
    if pairing == "cyclic":
        return [((i, i), ((i + 2) % 3, (i + 1) % 3)) for i in range(3)]
    elif pairing == "anticyclic":
        return [((i, i), ((i + 1) % 3, (i + 2) % 3)) for i in range(3)]
    elif pairing == "diagonal":
        return [((i, i), ((i + 1) % 3, i)) for i in range(3)]
    raise ValueError(f"Unknown pairing: {pairing}")


@dataclass
class SteinerConicResult:
    pairing: str
    x: list[Conic]
    y: list[Conic]
    pencils: list[Pencil]
    common: Conic | None

    def to_dict(self) -> dict[str, Any]:
        return {
            "pairing": self.pairing,
            "x": [list(c.key) for c in self.x],
            "y": [list(c.key) for c in self.y],
            "common_member": list(self.common.key) if self.common else None,
        }


def steiner_conic_data(
    s: OctScene,
    q: HomoPoly,
    cs: Sequence[Conic],
    ds: Sequence[Conic],
    pairing: str = "cyclic",
) -> SteinerConicResult:
    if len(cs) != 3 or len(ds) != 3:
        raise PreconditionError("need three conics on each side")
    if len({c.key for c in cs}) != 3 or len({d.key for d in ds}) != 3:
        raise PreconditionError("the three conics on each side must be distinct")
    for c in cs:
        if not all(c.contains(s[x]) for x in "ABCD"):
            raise PreconditionError("C-conics must pass through A, B, C, D", {"conic": list(c.key)})
    for d in ds:
        if not all(d.contains(s[x]) for x in "EFGH"):
            raise PreconditionError("D-conics must pass through E, F, G, H", {"conic": list(d.key)})
    for c in cs:
        for d in ds:
            if poly_mul(c.form, d.form).is_proportional(q):
                raise PreconditionError("quartic equals a product C_a·D_b")

    def conic_of(ci: int, di: int) -> Conic:
        return mystic_conic(s, q, poly_mul(cs[ci].form, ds[di].form))

    xs, ys = [], []
    for (xc, xd), (yc, yd) in steiner_pairs(pairing):
        xs.append(conic_of(xc, xd))
        ys.append(conic_of(yc, yd))
    pencils = [pencil_of(x.form, y.form) for x, y in zip(xs, ys)]
    member = common_member(pencils)
    return SteinerConicResult(
        pairing=pairing,
        x=xs,
        y=ys,
        pencils=pencils,
        common=Conic(member) if member is not None else None,
    )


def generalized_steiner_conic(
    s: OctScene,
    q: HomoPoly,
    cs: Sequence[Conic],
    ds: Sequence[Conic],
    pairing: str = "cyclic",
) -> Conic:
    """Common member of the pencils (X_i, Y_i); NoCommonMember when there is none."""
    result = steiner_conic_data(s, q, cs, ds, pairing)
    if result.common is None:
        raise NoCommonMember("the three pencils share no conic", result.to_dict())
    return result.common


def side_conics(s: OctScene, salt: int = 0) -> tuple[list[Conic], list[Conic]]:
    """Seeded conics C1..C4 through ABCD and D1..D4 through EFGH."""
    cs = [conic_with_free_point(s.scene, "ABCD", salt + 11 + i) for i in range(4)]
    ds = [conic_with_free_point(s.scene, "EFGH", salt + 23 + i) for i in range(4)]
    return cs, ds


# === 2n-gons ===


@dataclass
class PolygonResult:
    degree: int
    certificates: list[ResidualCertificate]
    residual_rank: int | None

    @property
    def passed(self) -> bool:
        sound = all(c.verify() for c in self.certificates)
        return sound and (self.residual_rank is None or self.residual_rank <= 2)

    def to_dict(self) -> dict[str, Any]:
        return {
            "degree": self.degree,
            "certificates": [c.to_dict() for c in self.certificates],
            "residual_rank": self.residual_rank,
            "passed": self.passed,
        }


def polygon_general(scene: Scene, forms: Sequence[HomoPoly]) -> PolygonResult:
    """Residual certificates of degree-n curves through 2n points; with three curves, a pencil check."""
    if len(forms) not in (2, 3):
        raise PreconditionError("need two or three curves", {"count": len(forms)})
    vertices = list(scene.points.values())
    n = forms[0].degree
    if len(vertices) != 2 * n:
        raise PreconditionError(
            "a degree-n curve family needs 2n base points", {"degree": n, "points": len(vertices)}
        )
    certs = [
        residual_curve(f, g, scene.conic, vertices)
        for f, g in combinations(forms, 2)
    ]
    rank = curve_rank([c.residual for c in certs]) if len(forms) == 3 else None
    return PolygonResult(degree=n, certificates=certs, residual_rank=rank)


def polygon_matchings(labels: Sequence[str]) -> tuple[Matching, Matching, Matching]:
    """Alternating edges of the polygon in label order plus a matching compatible with both."""
    m1, m2 = CyclicOrdering(tuple(labels)).alternating_matchings()
    for m3 in all_matchings(labels):
        if m3 not in (m1, m2) and compatible(m1, m3) and compatible(m2, m3):
            return m1, m2, m3
    raise PreconditionError("no third compatible matching", {"labels": list(labels)})


# === General position and verification suites ===


def general_position(scene: Scene) -> list[str]:
    try:
        OctScene(scene)
    except PreconditionError as e:
        return [e.message]
    if not chord_meets_distinct(list(scene.points.values())):
        return ["meets of disjoint chords coincide"]
    return []


def verify_statement(
    scene: Scene,
    statement: str,
    trials: int = 2,
    pairing: str = "cyclic",
    seed: int | None = None,
) -> StatementResult:
    rng = Lcg64((scene.seed if seed is None else seed) * 2 + 1)

    if statement == "2ngon":
        labels = scene.labels
        m1, m2, m3 = polygon_matchings(labels)
        decomposable = [matching_form(scene, m) for m in (m1, m2, m3)]
        result = polygon_general(scene, decomposable)
        n = len(labels) // 2
        randoms = random_forms_through(list(scene.points.values()), n, 3, rng, avoid=[scene.conic.form])
        random_result = polygon_general(scene, randoms)
        return StatementResult("2ngon", result.passed and random_result.passed, {
            "matchings": [str(m) for m in (m1, m2, m3)],
            "decomposable": result.to_dict(),
            "random": random_result.to_dict(),
        })

    s = OctScene(scene)
    if statement == "thm5_1":
        o = CyclicOrdering(tuple(LABELS8))
        m1, m2 = o.alternating_matchings()
        cert = mystic_certificate(s, s.quartic(m1), s.quartic(m2))
        conic = cert.conic()
        meets = classical_meets(s, m1, m2)
        on_conic = all(conic.contains(p) for p in meets)
        random_ok = 0
        for _ in range(trials):
            q1, q2 = random_forms_through(s.vertices, 4, 2, rng, avoid=[s.conic.form])
            if mystic_certificate(s, q1, q2).verify():
                random_ok += 1
        return StatementResult("thm5_1", cert.verify() and on_conic and random_ok == trials, {
            "conic": list(conic.key),
            "meets": [point_dict(p) for p in meets],
            "meets_on_conic": on_conic,
            "random_pairs_certified": random_ok,
        })
    elif statement == "thm5_3":
        triple = compatible_triples(LABELS8)[0]
        a, b, c = triple
        conics = [matching_conic(s, a, b), matching_conic(s, a, c), matching_conic(s, b, c)]
        classical_rank = curve_rank([k.form for k in conics])
        random_ranks = []
        for _ in range(trials):
            q1, q2, q3 = random_forms_through(s.vertices, 4, 3, rng, avoid=[s.conic.form])
            residuals = [mystic_conic(s, q1, q2), mystic_conic(s, q1, q3), mystic_conic(s, q2, q3)]
            random_ranks.append(curve_rank([k.form for k in residuals]))
        passed = classical_rank <= 2 and all(r <= 2 for r in random_ranks)
        return StatementResult("thm5_3", passed, {
            "triple": [str(m) for m in triple],
            "classical_rank": classical_rank,
            "random_ranks": random_ranks,
        })
    elif statement == "thm5_6":
        cs, ds = side_conics(s)
        net_q = poly_mul(cs[3].form, ds[3].form)
        net_result = steiner_conic_data(s, net_q, cs[:3], ds[:3], pairing)
        products = [poly_mul(c.form, d.form) for c in cs[:3] for d in ds[:3]]
        (q,) = random_forms_through(s.vertices, 4, 1, rng, avoid=[s.conic.form, *products])
        random_result = steiner_conic_data(s, q, cs[:3], ds[:3], pairing)
        passed = net_result.common is not None and random_result.common is not None
        return StatementResult("thm5_6", passed, {
            "product_quartic": net_result.to_dict(),
            "random_quartic": random_result.to_dict(),
        })
    elif statement == "prop5_4":
        m1 = Matching.parse("AB|CD|EF|GH")
        m2 = Matching.parse("BC|AD|FG|EH")
        cert = mystic_certificate(s, s.quartic(m1), s.quartic(m2))
        conic = cert.conic()
        meets = classical_meets(s, m1, m2)
        passed = cert.verify() and len(meets) == 8 and all(conic.contains(p) for p in meets)
        return StatementResult("prop5_4", passed and coconic(meets), {
            "conic": list(conic.key),
            "meets": [point_dict(p) for p in meets],
        })
    raise ValueError(f"Unknown octagon statement: {statement}")


def verify(scene: Scene, statement: str = "all", trials: int = 2, pairing: str = "cyclic") -> list[StatementResult]:
    if statement == "all":
        names = ["2ngon"] if len(scene.labels) != 8 else [st for st in STATEMENTS if st != "2ngon"]
        return [verify_statement(scene, st, trials, pairing) for st in names]
    return [verify_statement(scene, statement, trials, pairing)]


def require_check(result: StatementResult) -> StatementResult:
    if not result.passed:
        raise CheckFailure(f"{result.statement} failed", result.to_dict())
    return result
