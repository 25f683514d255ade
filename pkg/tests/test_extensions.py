"""First extension groups between simples and the middle-term witness."""

from __future__ import annotations

from fk3double.analysis import is_indecomposable
from fk3double.catalog import entry
from fk3double.checks import ext_matrix
from fk3double.perms import E
from fk3double.weights import LABELS

EXPECTED = {
    "eps": {"s-": 3},
    "e-": {},
    "erho": {"s-": 2},
    "s+": {},
    "s-": {"eps": 3, "erho": 2, "t0": 2},
    "t0": {"s-": 2},
    "t1": {},
    "t2": {},
}


def test_extension_matrix() -> None:
    matrix = ext_matrix()
    for a in LABELS:
        got = {b: n for b, n in matrix[a].items() if n}
        assert got == EXPECTED[a], a


def test_matrix_is_symmetric() -> None:
    matrix = ext_matrix()
    for a in LABELS:
        for b in LABELS:
            assert matrix[a].get(b, 0) == matrix[b].get(a, 0)


def test_projective_simples_have_no_extensions() -> None:
    matrix = ext_matrix()
    for lab in ("e-", "s+", "t1", "t2"):
        assert not any(matrix[lab].values())
        assert not any(matrix[a].get(lab, 0) for a in LABELS)


def test_middle_term_witness() -> None:
    """The 11-dimensional module glued from L(s-)[1] and a line.

    It validates, is indecomposable, and its distinguished vector is
    moved by both a raising and a lowering letter, so the module is
    generated neither from its top nor from its bottom layer.
    """
    mod = entry("T01")
    assert mod.validate() is None
    assert is_indecomposable(mod)
    t_index = next(i for i, v in enumerate(mod.basis) if v.name == "t")
    assert mod.basis[t_index].z == 0
    assert mod.basis[t_index].s3 is E
    assert mod.actions["x12"].cols.get(t_index)
    assert mod.actions["y12"].cols.get(t_index)


def test_extensions_check_passes(checked) -> None:
    assert checked("extensions").status == "pass"
