"""Intertwiner spaces, characters, and structural analysis helpers."""

from __future__ import annotations

import pytest

from fk3double.analysis import (GradedChar, decompose, head_layer,
                                is_indecomposable, peel_off, shift_range,
                                socle_layer, socle_series)
from fk3double.catalog import entry, simples
from fk3double.homs import end_space, hom_dim, hom_space, weight_split
from fk3double.weights import LABELS


def test_simples_have_scalar_endomorphisms() -> None:
    for key in ("L(eps)", "L(erho)", "L(t0)", "L(s-)"):
        assert len(end_space(entry(key))) == 1, key


def test_no_maps_between_distinct_simples() -> None:
    assert hom_dim(entry("L(erho)"), entry("L(t0)")) == 0
    assert hom_dim(entry("L(s-)"), entry("L(erho)")) == 0
    for k in range(-4, 5):
        assert hom_dim(entry("L(t1)"), entry("L(t2)").shift(k)) == 0


def test_weight_split_layers() -> None:
    layers = weight_split(entry("L(s-)"))
    content = {z: sorted(label for label, _ in layer.copies)
               for z, layer in layers.items()}
    assert content == {0: ["s-"], -1: ["t1", "t2"], -2: ["s-"]}


def test_character_multiplicativity_on_samples() -> None:
    for a, b in (("L(erho)", "L(t0)"), ("L(s-)", "L(erho)")):
        ma, mb = entry(a), entry(b)
        assert GradedChar.from_module(ma.tensor(mb)) == \
            GradedChar.from_module(ma) * GradedChar.from_module(mb)


def test_character_algebra() -> None:
    ch = GradedChar.from_module(entry("T01"))
    assert str(ch) == "t^-1*s- + eps + t1 + t2 + t^1*s-"
    assert ch.shift(2).shift(-2) == ch
    assert ch.conj().conj() == ch
    assert (ch - ch) == GradedChar()
    assert ch.scale(3) == ch + ch + ch


def test_decompose_splits_known_product() -> None:
    prod = entry("L(erho)").tensor(entry("L(erho)"))
    pieces = decompose(prod)
    assert sorted(p.dim for p in pieces) == [12, 37]


def test_peel_off_extracts_direct_summand() -> None:
    prod = entry("L(s-)").tensor(entry("L(erho)"))
    rest = peel_off(prod, entry("L(s+)"), "rest")
    assert rest is not None
    assert rest.dim == prod.dim - entry("L(s+)").dim
    assert GradedChar.from_module(rest) == \
        GradedChar.from_module(entry("C"))


def test_socle_and_head_of_the_extension_witness() -> None:
    mod = entry("T01")
    sim = simples()
    soc, _ = socle_layer(mod, sim)
    head, _ = head_layer(mod, sim)
    assert soc == [("L(s-)", 1, 1)]
    assert head == [("L(eps)", 0, 1)]
    assert is_indecomposable(mod)


def test_socle_series_heights() -> None:
    sim = simples()
    assert len(socle_series(entry("C"), sim)) == 3
    assert len(socle_series(entry("L(erho)"), sim)) == 1


def test_shift_range_brackets_possible_embeddings() -> None:
    inner = entry("L(eps)")
    outer = entry("M(eps)")
    rng = shift_range(inner, outer)
    assert list(rng)
    for k in rng:
        lo_i, hi_i = inner.shift(k).z_range()
        lo_o, hi_o = outer.z_range()
        assert lo_o <= lo_i and hi_i <= hi_o


def test_hom_space_maps_commute_with_actions() -> None:
    src = entry("L(s+)")
    dst = entry("M(s+)")
    maps = hom_space(src, dst)
    for f in maps:
        for key in ("t12", "x12", "y12"):
            assert f * src.actions[key] == dst.actions[key] * f
