from __future__ import annotations

import pytest

from mysticum.combinatorics import (
    LABELS6,
    LABELS8,
    CyclicOrdering,
    Matching,
    all_matchings,
    all_orderings,
    compatible,
    compatible_partners,
    partner_histogram,
    two_quadrilateral,
    two_quadrilateral_pairs,
    union_cycles,
)


def test_matching_parse_normalizes() -> None:
    m = Matching.parse("DC, ba EF")
    assert str(m) == "CD|EF|ab"
    assert Matching.parse("AB|CD|EF") == Matching.parse("FE CD BA")
    with pytest.raises(ValueError):
        Matching.parse("AB|BC|DE")
    with pytest.raises(ValueError):
        Matching.parse("ABC|DE")


def test_matching_counts() -> None:
    assert len(all_matchings(LABELS6)) == 15
    assert len(all_matchings(LABELS8)) == 105


def test_ordering_counts() -> None:
    assert len(all_orderings(LABELS6)) == 60
    assert len(all_orderings(LABELS8)) == 2520


def test_ordering_is_dihedral_class() -> None:
    assert CyclicOrdering.parse("CDEFAB") == CyclicOrdering.parse("ABCDEF")
    assert CyclicOrdering.parse("FEDCBA") == CyclicOrdering.parse("ABCDEF")
    assert CyclicOrdering.parse("ACBDEF") != CyclicOrdering.parse("ABCDEF")


def test_alternating_matchings_round_trip() -> None:
    o = CyclicOrdering.parse("ABCDEFGH")
    m1, m2 = o.alternating_matchings()
    assert {str(m1), str(m2)} == {"AB|CD|EF|GH", "AH|BC|DE|FG"}
    assert compatible(m1, m2)
    assert CyclicOrdering.from_matchings(m1, m2) == o


def test_union_cycles() -> None:
    m1 = Matching.parse("AB|CD|EF|GH")
    assert union_cycles(m1, m1) == [2, 2, 2, 2]
    assert two_quadrilateral(m1, Matching.parse("BC|AD|FG|EH"))
    assert not compatible(m1, Matching.parse("BC|AD|FG|EH"))


def test_compatible_partners_of_octagon_matchings() -> None:
    partners = compatible_partners(all_matchings(LABELS8))
    assert partner_histogram(partners) == {48: 105}
    assert sum(len(v) for v in partners.values()) // 2 == 2520


def test_two_quadrilateral_pair_count() -> None:
    assert len(two_quadrilateral_pairs(LABELS8)) == 630
