from __future__ import annotations

import pytest

from mysticum.combinatorics import CyclicOrdering, Matching
from mysticum.models import Scene
from mysticum.theorems.symmetry import (
    TYPE_1_TRIPLE,
    S8_GENERATORS,
    S8_ORDER,
    Perm,
    PermGroup,
    act,
    classify_pencils,
    conic_invariance,
    orbit,
    stabilizer,
    stabilizer_of_conic,
    stabilizer_of_pair,
    triple_object,
)


def test_perm_cycles_and_order() -> None:
    p = Perm.from_cycles("(A B C)(D E)")
    assert p("A") == "B" and p("C") == "A" and p("H") == "H"
    assert p.order == 6
    assert str(p) == "(A B C)(D E)"
    assert (p * p.inverse()).is_identity()
    assert Perm.from_cycles("(ABC)") == Perm.from_cycles("(A B C)")


def test_perm_composition_applies_right_first() -> None:
    a = Perm.from_cycles("(A B)")
    b = Perm.from_cycles("(B C)")
    assert (a * b)("C") == a(b("C")) == "A"


def test_perm_rejects_bad_input() -> None:
    with pytest.raises(ValueError):
        Perm(tuple("AABCDEFG"))
    with pytest.raises(ValueError):
        Perm.from_cycles("(A B)(A C)")


def test_act_on_objects() -> None:
    p = Perm.from_cycles("(A B)")
    assert act(p, Matching.parse("AC|BD|EF|GH")) == Matching.parse("BC|AD|EF|GH")
    o = CyclicOrdering.parse("ABCDEFGH")
    assert act(p, o) == CyclicOrdering.parse("BACDEFGH")
    with pytest.raises(TypeError):
        act(p, "AB")  # type: ignore[arg-type]


def test_generated_group_is_closed() -> None:
    group = PermGroup.generated_by([Perm.from_cycles("(A B C D)"), Perm.from_cycles("(A C)")])
    assert group.order == 8
    assert group.is_closed()
    assert group.element_orders() == {1: 1, 2: 5, 4: 2}


def test_conic_stabilizer_is_dihedral_of_order_16() -> None:
    group = stabilizer_of_conic(CyclicOrdering.parse("ABCDEFGH"))
    assert group.order == 16
    assert group.dihedral_generators() is not None
    assert PermGroup.generated_by(group.generators).elements == group.elements


def test_two_quadrilateral_stabilizer() -> None:
    group = stabilizer_of_pair(Matching.parse("AB|CD|EF|GH"), Matching.parse("BC|AD|FG|EH"))
    assert group.order == 64


def test_matching_orbit() -> None:
    assert len(orbit(Matching.parse("AB|CD|EF|GH"), S8_GENERATORS)) == 105
    assert len(orbit(CyclicOrdering.parse("ABCDEFGH"), S8_GENERATORS)) == 2520


def test_reference_triple_orbit_stabilizer() -> None:
    rep = triple_object(TYPE_1_TRIPLE)
    group = stabilizer(rep)
    size = len(orbit(rep, S8_GENERATORS))
    assert group.order * size == S8_ORDER
    # the union graph is K_{2,3} and a triangle joined by a matching
    assert group.order == 6


def test_conic_is_invariant_under_its_stabilizer(oct_scene: Scene) -> None:
    report = conic_invariance(oct_scene, CyclicOrdering.parse("ABCDEFGH"))
    assert report["invariant"]
    assert report["elements"] == 16
    assert report["moved_by"] == []


@pytest.mark.slow
def test_pencil_classification() -> None:
    result = classify_pencils()
    assert sum(c.size for c in result.classes) == result.total_triples
    for c in result.classes:
        assert c.size * c.stabilizer_order == S8_ORDER
    assert result.classes[0].name == "type-1"
    assert result.classes[0].stabilizer_order == 6
    assert not result.matches_published
