from __future__ import annotations

import pytest

from mysticum.combinatorics import LABELS8, CyclicOrdering, Matching, compatible, compatible_triples
from mysticum.errors import CheckFailure, NoCommonMember, PreconditionError
from mysticum.geometry.decomposition import curve_rank
from mysticum.models import Scene
from mysticum.scenes import generate
from mysticum.theorems.base import StatementResult
from mysticum.theorems.octagon import (
    OctScene,
    classical_conic,
    classical_meets,
    conic_census,
    generalized_steiner_conic,
    matching_conic,
    pencil_census,
    polygon_general,
    polygon_matchings,
    require_check,
    side_conics,
    steiner_conic_data,
    steiner_pairs,
    verify,
    verify_statement,
)


def test_classical_conic_through_side_meets(oct_s: OctScene) -> None:
    o = CyclicOrdering.parse("ACBDFEHG")
    m1, m2 = o.alternating_matchings()
    conic = classical_conic(oct_s, o)
    meets = classical_meets(oct_s, m1, m2)
    assert len(meets) == 8
    assert all(conic.contains(p) for p in meets)


def test_compatible_triple_conics_share_a_pencil(oct_s: OctScene) -> None:
    a, b, c = compatible_triples(LABELS8)[5]
    conics = [matching_conic(oct_s, a, b), matching_conic(oct_s, a, c), matching_conic(oct_s, b, c)]
    assert curve_rank([k.form for k in conics]) == 2


@pytest.mark.parametrize("statement", ["thm5_1", "thm5_3", "thm5_6", "prop5_4"])
def test_octagon_statements_hold(oct_scene: Scene, statement: str) -> None:
    result = verify_statement(oct_scene, statement, trials=1)
    assert result.passed, result.to_dict()


def test_steiner_conic_exists_for_product_and_random_quartics(oct_scene: Scene) -> None:
    result = verify_statement(oct_scene, "thm5_6")
    assert result.passed
    assert result.detail["product_quartic"]["common_member"] is not None
    assert result.detail["random_quartic"]["common_member"] is not None


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(1, 51))
def test_steiner_conic_across_seeds(seed: int) -> None:
    result = verify_statement(generate("oct", seed), "thm5_6")
    assert result.passed, result.to_dict()


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(1, 26))
@pytest.mark.parametrize("statement", ["thm5_1", "thm5_3"])
def test_octagon_statements_across_seeds(seed: int, statement: str) -> None:
    result = verify_statement(generate("oct", seed), statement)
    assert result.passed, result.to_dict()


def test_verify_all_on_octagon(oct_scene: Scene) -> None:
    names = [r.statement for r in verify(oct_scene, "all", trials=1)]
    assert names == ["thm5_1", "thm5_3", "thm5_6", "prop5_4"]


def test_unknown_statement(oct_scene: Scene) -> None:
    with pytest.raises(ValueError):
        verify_statement(oct_scene, "thm5_9")


def test_steiner_pairs() -> None:
    assert steiner_pairs("cyclic") == [((0, 0), (2, 1)), ((1, 1), (0, 2)), ((2, 2), (1, 0))]
    assert all(len(steiner_pairs(p)) == 3 for p in ("anticyclic", "diagonal"))
    with pytest.raises(ValueError):
        steiner_pairs("spiral")


def test_generalized_steiner_conic_for_product_quartic(oct_s: OctScene) -> None:
    cs, ds = side_conics(oct_s)
    q = cs[3].form * ds[3].form
    conic = generalized_steiner_conic(oct_s, q, cs[:3], ds[:3])
    result = steiner_conic_data(oct_s, q, cs[:3], ds[:3])
    assert result.common == conic
    assert len(result.x) == len(result.y) == 3


def test_steiner_conic_preconditions(oct_s: OctScene) -> None:
    cs, ds = side_conics(oct_s)
    q = cs[3].form * ds[3].form
    with pytest.raises(PreconditionError):
        steiner_conic_data(oct_s, q, cs[:2], ds[:3])
    with pytest.raises(PreconditionError):
        steiner_conic_data(oct_s, q, [cs[0], cs[0], cs[1]], ds[:3])
    with pytest.raises(PreconditionError):
        steiner_conic_data(oct_s, q, ds[:3], cs[:3])
    with pytest.raises(PreconditionError):
        steiner_conic_data(oct_s, cs[0].form * ds[0].form, cs[:3], ds[:3])


def test_no_common_member_is_a_check_failure() -> None:
    assert issubclass(NoCommonMember, CheckFailure)


def test_polygon_matchings_are_pairwise_compatible() -> None:
    m1, m2, m3 = polygon_matchings("ABCDEFGHIJ")
    assert compatible(m1, m2) and compatible(m1, m3) and compatible(m2, m3)
    assert len({m1, m2, m3}) == 3


def test_decagon_residual_cubics() -> None:
    scene = generate("2ngon", 1, 5)
    result = verify_statement(scene, "2ngon", trials=1)
    assert result.passed, result.to_dict()
    assert result.detail["decomposable"]["degree"] == 5
    assert result.detail["decomposable"]["residual_rank"] <= 2


def test_polygon_general_preconditions(oct_scene: Scene) -> None:
    s = OctScene(oct_scene)
    q = s.quartic(Matching.parse("AB|CD|EF|GH"))
    with pytest.raises(PreconditionError):
        polygon_general(oct_scene, [q])
    cubic = generate("2ngon", 1, 3)
    with pytest.raises(PreconditionError):
        polygon_general(cubic, [q, s.quartic("AH|BC|DE|FG")])


def test_require_check() -> None:
    ok = StatementResult("thm5_1", True)
    assert require_check(ok) is ok
    with pytest.raises(CheckFailure):
        require_check(StatementResult("thm5_1", False))


def test_oct_scene_rejects_hexagon() -> None:
    with pytest.raises(PreconditionError):
        OctScene(generate("hex", 1))


@pytest.mark.slow
def test_conic_census_counts(oct_s: OctScene) -> None:
    census = conic_census(oct_s)
    assert census.counts["matchings"] == 105
    assert census.counts["classical_conics"] == 2520
    assert census.counts["two_quadrilateral_conics"] == 630
    assert census.partners_per_matching == {48: 105}


@pytest.mark.slow
def test_pencil_census_accounts_for_every_triple(oct_s: OctScene) -> None:
    census = pencil_census(oct_s)
    assert census.triples == len(compatible_triples(LABELS8))
    assert census.pencils
    assert sum(census.distribution.values()) == len(census.per_conic)
    assert census.to_dict()["published"]["distinct_pencils"] == 28560
