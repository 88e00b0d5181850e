"""Combinatorial skeletons: perfect matchings and cyclic orderings of labels.

- A Matching pairs up the labels; it encodes a product of lines
- Two matchings are compatible when their union is a single Hamiltonian cycle
- A CyclicOrdering is a polygon on the labels, canonical modulo rotation and
  reflection; its two alternating edge sets are a compatible matching pair
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cache
from itertools import combinations, permutations
from typing import Iterable, Iterator, Mapping, Sequence

LABELS6 = "ABCDEF"
LABELS8 = "ABCDEFGH"

Pair = tuple[str, str]


def _split_tokens(text: str) -> list[str]:
    for sep in (",", " ", "/"):
        text = text.replace(sep, "|")
    return [t for t in text.split("|") if t]


@dataclass(frozen=True, order=True)
class Matching:
    """A perfect matching of labels, stored as sorted pairs."""

    pairs: tuple[Pair, ...]

    def __post_init__(self) -> None:
        normalized = tuple(sorted(tuple(sorted(p)) for p in self.pairs))
        seen = [label for pair in normalized for label in pair]
        if any(len(p) != 2 or p[0] == p[1] for p in normalized):
            raise ValueError(f"invalid pairs: {self.pairs!r}")
        if len(seen) != len(set(seen)):
            raise ValueError(f"pairs overlap: {self.pairs!r}")
        object.__setattr__(self, "pairs", normalized)

    @classmethod
    def parse(cls, text: str) -> Matching:
        """Parse "AB|CD|EF" (commas or spaces also separate pairs)."""
        tokens = _split_tokens(text.strip())
        if any(len(t) != 2 for t in tokens):
            raise ValueError(f"cannot parse matching {text!r}")
        return cls(tuple((t[0], t[1]) for t in tokens))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(sorted(label for pair in self.pairs for label in pair))

    def partner(self, label: str) -> str:
        for a, b in self.pairs:
            if a == label:
                return b
            if b == label:
                return a
        raise KeyError(label)

    def relabel(self, mapping: Mapping[str, str]) -> Matching:
        return Matching(tuple((mapping[a], mapping[b]) for a, b in self.pairs))

    def __str__(self) -> str:
        return "|".join(a + b for a, b in self.pairs)


def all_matchings(labels: Sequence[str]) -> list[Matching]:
    """Every perfect matching of ``labels``, in sorted order."""
    return list(_all_matchings(tuple(labels)))


@cache
def _all_matchings(labels: tuple[str, ...]) -> tuple[Matching, ...]:
    def pairings(items: list[str]) -> Iterator[list[Pair]]:
        if not items:
            yield []
            return
        first, rest = items[0], items[1:]
        for i, item in enumerate(rest):
            for tail in pairings(rest[:i] + rest[i + 1:]):
                yield [(first, item)] + tail

    if len(labels) % 2:
        raise ValueError("perfect matchings need an even number of labels")
    return tuple(sorted(Matching(tuple(p)) for p in pairings(sorted(labels))))


def union_cycles(m1: Matching, m2: Matching) -> list[int]:
    """Cycle lengths of the multigraph m1 ∪ m2 (a shared edge is a 2-cycle)."""
    if m1.labels != m2.labels:
        raise ValueError("matchings cover different labels")
    remaining = set(m1.labels)
    lengths: list[int] = []
    while remaining:
        start = min(remaining)
        current, length, use_first = start, 0, True
        while True:
            remaining.discard(current)
            current = (m1 if use_first else m2).partner(current)
            length += 1
            use_first = not use_first
            if current == start and use_first:
                break
        lengths.append(length)
    return sorted(lengths)


def compatible(m1: Matching, m2: Matching) -> bool:
    """True when m1 ∪ m2 is a single cycle through every label."""
    return union_cycles(m1, m2) == [len(m1.labels)]


def two_quadrilateral(m1: Matching, m2: Matching) -> bool:
    """True when m1 ∪ m2 splits into two 4-cycles."""
    return union_cycles(m1, m2) == [4, 4]


@dataclass(frozen=True, order=True)
class CyclicOrdering:
    """A polygon on labels, canonical under the dihedral group (least representative)."""

    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        seq = tuple(self.labels)
        if len(seq) < 3 or len(set(seq)) != len(seq):
            raise ValueError(f"invalid cyclic ordering: {self.labels!r}")
        object.__setattr__(self, "labels", min(_dihedral_images(seq)))

    @classmethod
    def parse(cls, text: str) -> CyclicOrdering:
        return cls(tuple(text.strip().replace("-", "")))

    @classmethod
    def from_matchings(cls, m1: Matching, m2: Matching) -> CyclicOrdering:
        """The Hamiltonian cycle formed by a compatible pair."""
        if not compatible(m1, m2):
            raise ValueError(f"{m1} and {m2} are not compatible")
        start = m1.labels[0]
        seq = [start]
        current, use_first = start, True
        for _ in range(len(m1.labels) - 1):
            current = (m1 if use_first else m2).partner(current)
            seq.append(current)
            use_first = not use_first
        return cls(tuple(seq))

    @property
    def size(self) -> int:
        return len(self.labels)

    def edges(self) -> list[Pair]:
        n = self.size
        return [(self.labels[i], self.labels[(i + 1) % n]) for i in range(n)]

    def alternating_matchings(self) -> tuple[Matching, Matching]:
        """Edges at even positions and at odd positions (even polygons only)."""
        if self.size % 2:
            raise ValueError("alternating matchings need an even polygon")
        edges = self.edges()
        return Matching(tuple(edges[0::2])), Matching(tuple(edges[1::2]))

    def relabel(self, mapping: Mapping[str, str]) -> CyclicOrdering:
        return CyclicOrdering(tuple(mapping[a] for a in self.labels))

    def __str__(self) -> str:
        return "".join(self.labels)


def _dihedral_images(seq: tuple[str, ...]) -> Iterator[tuple[str, ...]]:
    n = len(seq)
    rev = seq[::-1]
    for i in range(n):
        yield seq[i:] + seq[:i]
        yield rev[i:] + rev[:i]


def all_orderings(labels: Sequence[str]) -> list[CyclicOrdering]:
    """One canonical ordering per dihedral class: (n-1)!/2 of them."""
    ordered = sorted(labels)
    first, rest = ordered[0], ordered[1:]
    out = []
    for perm in permutations(rest):
        if perm[0] < perm[-1]:
            out.append(CyclicOrdering((first,) + perm))
    return sorted(out)


def compatible_partners(matchings: Iterable[Matching]) -> dict[Matching, list[Matching]]:
    items = list(matchings)
    partners: dict[Matching, list[Matching]] = {m: [] for m in items}
    for a, b in combinations(items, 2):
        if compatible(a, b):
            partners[a].append(b)
            partners[b].append(a)
    return partners


def compatible_triples(labels: Sequence[str]) -> list[tuple[Matching, Matching, Matching]]:
    """Sorted triples of pairwise compatible matchings."""
    matchings = all_matchings(labels)
    partners = compatible_partners(matchings)
    partner_sets = {m: set(ps) for m, ps in partners.items()}
    triples = []
    for a in matchings:
        later = sorted(p for p in partners[a] if p > a)
        for i, b in enumerate(later):
            for c in later[i + 1:]:
                if c in partner_sets[b]:
                    triples.append((a, b, c))
    return triples


def two_quadrilateral_pairs(labels: Sequence[str]) -> list[tuple[Matching, Matching]]:
    """Unordered matching pairs whose union is two 4-cycles."""
    return [
        (a, b)
        for a, b in combinations(all_matchings(labels), 2)
        if two_quadrilateral(a, b)
    ]


def partner_histogram(partners: Mapping[Matching, Sequence[Matching]]) -> dict[int, int]:
    return dict(sorted(Counter(len(v) for v in partners.values()).items()))
