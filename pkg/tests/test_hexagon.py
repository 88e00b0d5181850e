from __future__ import annotations

from fractions import Fraction

import pytest

from mysticum.algebra.poly import poly_divide_exact
from mysticum.combinatorics import CyclicOrdering, Matching, compatible
from mysticum.errors import NotDivisible, PreconditionError
from mysticum.models import Scene
from mysticum.scenes import Lcg64, generate
from mysticum.theorems.base import random_forms_through
from mysticum.theorems.hexagon import (
    EXPECTED_COUNTS,
    SALMON_CAYLEY_P,
    SALMON_CAYLEY_Q,
    STATEMENTS,
    STEINER_LINE_REFERENCE,
    HexScene,
    auxiliary_conics,
    census,
    classical_pascal_line,
    corollaries,
    general_position,
    generalized_pascal_line,
    generalized_steiner_line,
    generalized_steiner_points,
    hex_orderings,
    is_steiner_triple,
    salmon_cayley_data,
    steiner_kirkman_triples,
    triangle_cubics,
    triple_point,
    verify,
)


def test_triple_split() -> None:
    steiner, kirkman = steiner_kirkman_triples()
    assert len(steiner) == 20
    assert len(kirkman) == 60
    assert is_steiner_triple(steiner[0])
    assert not is_steiner_triple(kirkman[0])


def test_census_counts(hex_s: HexScene) -> None:
    report = census(hex_s)
    for name, expected in EXPECTED_COUNTS.items():
        assert report.counts[name] == expected, name
    assert report.diff == []
    # each Salmon point lies on four Cayley-Salmon lines
    assert all(len(lines) == 4 for lines in report.salmon_points.values())
    assert report.to_dict()["counts"] == report.counts


def test_certified_census_agrees(hex_s: HexScene) -> None:
    report = census(hex_s, certify=True)
    assert report.certified
    assert report.diff == []


def test_pascal_line_is_residual_line(hex_s: HexScene) -> None:
    for o in hex_orderings()[:10]:
        assert generalized_pascal_line(hex_s, *triangle_cubics(hex_s, o)) == classical_pascal_line(hex_s, o)


def test_pascal_line_ignores_orientation(hex_s: HexScene) -> None:
    forward = CyclicOrdering.parse("ABDCFE")
    backward = CyclicOrdering.parse("EFCDBA")
    assert classical_pascal_line(hex_s, forward) == classical_pascal_line(hex_s, backward)


def test_generalized_steiner_line_for_random_cubic(hex_s: HexScene) -> None:
    (d,) = random_forms_through(hex_s.vertices, 3, 1, Lcg64(99), avoid=[hex_s.conic.form])
    line = generalized_steiner_line(hex_s, d)
    assert all(line.contains(p) for p in generalized_steiner_points(hex_s, d))


def test_classical_steiner_line_is_a_plucker_line(hex_s: HexScene) -> None:
    classical = generalized_steiner_line(hex_s, hex_s.cubic(STEINER_LINE_REFERENCE))
    assert classical == census(hex_s).plucker_lines[str(STEINER_LINE_REFERENCE)]


def test_steiner_point_of_triple(hex_s: HexScene) -> None:
    triple = tuple(Matching.parse(t) for t in ("AB|DE|CF", "BE|CD|AF", "AD|BC|EF"))
    point = triple_point(hex_s, triple)
    steiner, _ = steiner_kirkman_triples()
    assert tuple(sorted(triple)) in steiner
    assert point in set(census(hex_s).steiner_points.values())


@pytest.mark.parametrize("statement", STATEMENTS)
def test_statements_hold(hex_s: HexScene, statement: str) -> None:
    (result,) = verify(hex_s, statement, trials=2)
    assert result.statement == statement
    assert result.passed, result.to_dict()


def test_unknown_statement(hex_s: HexScene) -> None:
    with pytest.raises(ValueError):
        verify(hex_s, "thm9_9")


def test_hex_scene_preconditions(oct_scene: Scene) -> None:
    with pytest.raises(PreconditionError):
        HexScene(oct_scene)
    params = {x: Fraction(i) for i, x in enumerate("ABCDEF")}
    params["F"] = Fraction(0)
    repeated = Scene.on_circle(params)
    with pytest.raises(PreconditionError):
        HexScene(repeated)
    assert general_position(repeated)


def test_salmon_cayley_pairs_share_a_matching() -> None:
    steiner, kirkman = steiner_kirkman_triples()
    for i, (p, q) in enumerate(zip(SALMON_CAYLEY_P, SALMON_CAYLEY_Q)):
        assert p != q
        assert q[0] in p
        triple = tuple(sorted((p[0], p[1], q[1])))
        assert compatible(p[0], q[1]) and compatible(p[1], q[1])
        assert triple in (steiner if i == 3 else kirkman)


def test_auxiliary_conics(hex_s: HexScene) -> None:
    data = salmon_cayley_data(hex_s)
    aux = auxiliary_conics(hex_s, data)
    for x in "CF":
        assert aux.lemma45_conic.contains(hex_s[x])
    for i, j in [(2, 0), (0, 2), (1, 2), (2, 1)]:
        assert aux.lemma45_conic.contains(data.point(i, j))
    assert aux.residual_online_CF
    assert aux.sc_cubic_rank <= 9
    assert all(corollaries(hex_s, data).values())


def test_random_cubics_avoid_the_base_conic(hex_s: HexScene) -> None:
    forms = random_forms_through(hex_s.vertices, 3, 3, Lcg64(5), avoid=[hex_s.conic.form])
    for _ in range(10):
        forms += random_forms_through(hex_s.vertices, 3, 1, Lcg64(len(forms)), avoid=[hex_s.conic.form])
    for form in forms:
        with pytest.raises(NotDivisible):
            poly_divide_exact(form, hex_s.conic.form)


def test_sampler_gives_up_when_every_draw_is_avoided(hex_s: HexScene) -> None:
    with pytest.raises(PreconditionError):
        random_forms_through(hex_s.vertices, 2, 1, Lcg64(1), avoid=[hex_s.conic.form], max_attempts=20)


SEEDS = range(1, 26)


@pytest.mark.slow
@pytest.mark.parametrize("seed", SEEDS)
@pytest.mark.parametrize("statement", ["thm3_1", "thm3_3", "thm4_1", "thm4_2", "props4x"])
def test_statements_hold_across_seeds(seed: int, statement: str) -> None:
    s = HexScene(generate("hex", seed))
    (result,) = verify(s, statement, trials=3)
    assert result.passed, result.to_dict()


@pytest.mark.slow
@pytest.mark.parametrize("seed", SEEDS)
def test_census_across_seeds(seed: int) -> None:
    s = HexScene(generate("hex", seed))
    report = census(s)
    assert report.counts == EXPECTED_COUNTS
    assert report.diff == []
    aux = auxiliary_conics(s)
    assert aux.residual_online_CF
