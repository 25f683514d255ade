"""Symmetric group conventions and the eight weight modules."""

from __future__ import annotations

from fk3double import perms
from fk3double.perms import ALL, C123, C132, E, T12, T13, T23, from_name
from fk3double.weights import DIMS, LABELS, weight


def test_group_laws() -> None:
    for g in ALL:
        assert g * E == g and E * g == g
        assert g * g.inverse() is E
    for g in ALL:
        for h in ALL:
            for k in ALL:
                assert (g * h) * k == g * (h * k)


def test_composition_convention() -> None:
    # Products compose right-to-left: (gh)(x) = g(h(x)).
    assert T13 * T12 is C123
    assert T12 * T13 is C132
    assert C123 * C123 is C132


def test_names_round_trip() -> None:
    for g, name in perms.CYCLE_NAMES.items():
        assert from_name(name) is g
    assert perms.transposition(1, 2) is T12
    assert perms.pair_of(T23) == (2, 3)


def test_weight_modules_are_degree_zero_and_valid() -> None:
    for label in LABELS:
        w = weight(label)
        assert w.dim == DIMS[label]
        assert w.validate() is None
        assert all(v.z == 0 for v in w.basis)


def test_raising_and_lowering_vanish_on_weights() -> None:
    for label in LABELS:
        w = weight(label)
        for key in ("x12", "x13", "x23", "y12", "y13", "y23"):
            assert w.actions[key].is_zero()


def test_weight_tensor_validates() -> None:
    prod = weight("s+").tensor(weight("t1"))
    assert prod.dim == 6
    assert prod.validate() is None
