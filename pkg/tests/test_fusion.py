"""The fusion table of the eight weights, pinned cell by cell."""

from __future__ import annotations

from fk3double.analysis import fusion
from fk3double.weights import DIMS, LABELS

# multiplicity-free products of the nontrivial weights; eps rows are
# identities and every cell is symmetric
TABLE = {
    ("e-", "e-"): {"eps"},
    ("e-", "erho"): {"erho"},
    ("e-", "s+"): {"s-"},
    ("e-", "s-"): {"s+"},
    ("e-", "t0"): {"t0"},
    ("e-", "t1"): {"t1"},
    ("e-", "t2"): {"t2"},
    ("erho", "erho"): {"eps", "e-", "erho"},
    ("erho", "s+"): {"s+", "s-"},
    ("erho", "s-"): {"s+", "s-"},
    ("erho", "t0"): {"t1", "t2"},
    ("erho", "t1"): {"t0", "t2"},
    ("erho", "t2"): {"t0", "t1"},
    ("s+", "s+"): {"eps", "erho", "t0", "t1", "t2"},
    ("s+", "s-"): {"e-", "erho", "t0", "t1", "t2"},
    ("s+", "t0"): {"s+", "s-"},
    ("s+", "t1"): {"s+", "s-"},
    ("s+", "t2"): {"s+", "s-"},
    ("s-", "s-"): {"eps", "erho", "t0", "t1", "t2"},
    ("s-", "t0"): {"s+", "s-"},
    ("s-", "t1"): {"s+", "s-"},
    ("s-", "t2"): {"s+", "s-"},
    ("t0", "t0"): {"eps", "e-", "t0"},
    ("t0", "t1"): {"erho", "t2"},
    ("t0", "t2"): {"erho", "t1"},
    ("t1", "t1"): {"eps", "e-", "t1"},
    ("t1", "t2"): {"erho", "t0"},
    ("t2", "t2"): {"eps", "e-", "t2"},
}


def test_identity_row() -> None:
    for lab in LABELS:
        assert fusion("eps", lab) == {lab: 1}
        assert fusion(lab, "eps") == {lab: 1}


def test_table_cells() -> None:
    for (a, b), labels in TABLE.items():
        expected = {lab: 1 for lab in labels}
        assert fusion(a, b) == expected, (a, b)
        assert fusion(b, a) == expected, (b, a)


def test_dimensions_add_up() -> None:
    for i, a in enumerate(LABELS):
        for b in LABELS[i:]:
            total = sum(m * DIMS[lab] for lab, m in fusion(a, b).items())
            assert total == DIMS[a] * DIMS[b], (a, b)


def test_associativity() -> None:
    for a in LABELS:
        for b in LABELS:
            for c in LABELS:
                left: dict[str, int] = {}
                for x, m in fusion(a, b).items():
                    for lab, n in fusion(x, c).items():
                        left[lab] = left.get(lab, 0) + m * n
                right: dict[str, int] = {}
                for y, m in fusion(b, c).items():
                    for lab, n in fusion(a, y).items():
                        right[lab] = right.get(lab, 0) + m * n
                assert left == right, (a, b, c)


def test_sign_character_is_an_involution() -> None:
    for lab in LABELS:
        twice: dict[str, int] = {}
        for x, m in fusion("e-", lab).items():
            for y, n in fusion("e-", x).items():
                twice[y] = twice.get(y, 0) + m * n
        assert twice == {lab: 1}


def test_oracle_check_passes(checked) -> None:
    assert checked("oracles").status == "pass"
