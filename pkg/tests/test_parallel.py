from __future__ import annotations

import os

import pytest

from mysticum.parallel import chunked, parallel_map, resolve_workers
from mysticum.theorems.octagon import OctScene, conic_census


def test_resolve_workers() -> None:
    assert resolve_workers(None, 1) == 1
    assert resolve_workers(0) == 1
    assert resolve_workers(10_000) == (os.cpu_count() or 1)


def test_chunked() -> None:
    assert chunked([1, 2, 3, 4, 5], 2) == [[1, 2], [3, 4], [5]]
    assert chunked([1, 2], 0) == [[1], [2]]


def test_parallel_map_keeps_order() -> None:
    items = [-3, 1, -2, 5]
    assert parallel_map(abs, items, 1) == [3, 1, 2, 5]
    assert parallel_map(abs, items, 2) == [3, 1, 2, 5]


@pytest.mark.slow
def test_census_does_not_depend_on_worker_count(oct_s: OctScene) -> None:
    assert conic_census(oct_s, workers=1).to_dict() == conic_census(oct_s, workers=2).to_dict()
