"""Catalog construction: dimensions, gradings, recorded action tables."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

from fk3double._reference_tables import (KNOWN_DEVIATIONS, RECORDED_TABLES,
                                         count_cells, diff_module)
from fk3double.catalog import (CATALOG_KEYS, EXTRA_KEYS, IND_KEYS,
                               PROJECTIVE_KEYS, SIMPLE_KEYS, VERMA_KEYS,
                               entry)
from fk3double.homs import weight_split
from fk3double.weights import DIMS, LABELS

L_DIMS = {"eps": 1, "e-": 12, "erho": 7, "s+": 36, "s-": 10,
          "t0": 7, "t1": 24, "t2": 24}
P_DIMS = {"eps": 96, "e-": 12, "erho": 84, "s+": 36, "s-": 132,
          "t0": 84, "t1": 24, "t2": 24}
EXTRA_DIMS = {"A": 51, "B": 37, "C": 34, "T01": 11}


def test_every_catalog_module_validates() -> None:
    for key in CATALOG_KEYS:
        assert entry(key).validate() is None, key


def test_dimension_table() -> None:
    for lab in LABELS:
        assert entry(f"L({lab})").dim == L_DIMS[lab]
        assert entry(f"M({lab})").dim == 12 * DIMS[lab]
        assert entry(f"W({lab})").dim == 12 * DIMS[lab]
        assert entry(f"Ind({lab})").dim == 144 * DIMS[lab]
        assert entry(f"P({lab})").dim == P_DIMS[lab]
    for key in EXTRA_KEYS:
        assert entry(key).dim == EXTRA_DIMS[key]


def test_grading_windows() -> None:
    for lab in LABELS:
        assert entry(f"M({lab})").z_range()[1] == 0
        assert entry(f"W({lab})").z_range()[0] == 0
        assert entry(f"Ind({lab})").z_range() == (-4, 4)
    assert entry("M(eps)").z_range() == (-4, 0)


def test_lowest_weight_involution() -> None:
    # the bottom layer of each simple carries the partner weight:
    # the two outer two-dimensional weights trade places, others stay
    bar = {"erho": "t0", "t0": "erho"}
    for lab in LABELS:
        layers = weight_split(entry(f"L({lab})"))
        bottom = min(layers)
        labels = {label for label, _ in layers[bottom].copies}
        assert labels == {bar.get(lab, lab)}, lab


def test_recorded_tables_match_with_frozen_deviations() -> None:
    """Every recorded action cell is asserted.

    Cells off the deviation list must agree exactly; cells on it must
    show exactly the recorded deviating value.  A fresh mismatch in
    either direction fails.
    """
    assert count_cells() == 150
    seen = set()
    for key, table in RECORDED_TABLES.items():
        for action, src in diff_module(entry(key), table):
            assert (key, action, src) in KNOWN_DEVIATIONS, (key, action, src)
            seen.add((key, action, src))
    assert seen == set(KNOWN_DEVIATIONS)
    assert len(KNOWN_DEVIATIONS) == 26


def test_named_basis_vectors_survive() -> None:
    assert [v.name for v in entry("L(t0)").basis] == \
        [f"a{i}" for i in range(1, 8)]
    assert [v.name for v in entry("L(erho)").basis] == \
        [f"b{i}" for i in range(1, 8)]
    assert [v.name for v in entry("L(s-)").basis] == \
        [f"c{i}" for i in range(1, 11)]
    assert [v.name for v in entry("T01").basis] == \
        [f"c{i}" for i in range(1, 11)] + ["t"]


def test_memoization_is_shared_and_thread_safe() -> None:
    assert entry("L(t0)") is entry("L(t0)")
    keys = list(SIMPLE_KEYS) + ["A", "T01"]
    with ThreadPoolExecutor(max_workers=8) as pool:
        first = list(pool.map(entry, keys))
        second = list(pool.map(entry, keys))
    for a, b in zip(first, second):
        assert a is b


def test_key_families_are_complete() -> None:
    assert len(CATALOG_KEYS) == 44
    assert set(CATALOG_KEYS) == (set(SIMPLE_KEYS) | set(VERMA_KEYS)
                                 | set(IND_KEYS) | set(PROJECTIVE_KEYS)
                                 | {f"W({lab})" for lab in LABELS}
                                 | set(EXTRA_KEYS))
