"""Projective covers: sizes, self-duality of head and socle, recursion."""

from __future__ import annotations

from fk3double.analysis import GradedChar, head_layer, socle_layer
from fk3double.catalog import entry, simples
from fk3double.weights import LABELS

P_DIMS = {"eps": 96, "e-": 12, "erho": 84, "s+": 36, "s-": 132,
          "t0": 84, "t1": 24, "t2": 24}


def test_projective_dimensions() -> None:
    for lab in LABELS:
        assert entry(f"P({lab})").dim == P_DIMS[lab]


def test_head_and_socle_are_the_named_simple() -> None:
    # one unshifted copy at both ends, the symmetric-algebra signature
    sim = simples()
    for lab in LABELS:
        mod = entry(f"P({lab})")
        assert socle_layer(mod, sim)[0] == [(f"L({lab})", 0, 1)], lab
        assert head_layer(mod, sim)[0] == [(f"L({lab})", 0, 1)], lab


def test_projective_simples_coincide_with_their_covers() -> None:
    for lab in ("e-", "s+", "t1", "t2"):
        assert GradedChar.from_module(entry(f"P({lab})")) == \
            GradedChar.from_module(entry(f"L({lab})"))


def test_projectives_check_passes(checked) -> None:
    assert checked("projectives").status == "pass"


def test_reciprocity_check_passes(checked) -> None:
    assert checked("bgg").status == "pass"
