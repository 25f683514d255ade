"""Module container: validation, serialization, duals, shifts."""

from __future__ import annotations

import copy

from fk3double.catalog import entry
from fk3double.gmodule import ACTION_KEYS, GModule
from fk3double.perms import C123, E, T12, T13


def test_validate_passes_on_built_modules() -> None:
    for key in ("L(t0)", "L(s-)", "T01", "M(erho)"):
        assert entry(key).validate() is None, key


def test_json_round_trip_is_exact() -> None:
    mod = entry("L(t0)")
    data = mod.to_json()
    again = GModule.from_json(data)
    assert again.to_json() == data
    assert again.validate() is None
    assert [(v.name, v.z, v.s3) for v in again.basis] == \
        [(v.name, v.z, v.s3) for v in mod.basis]


def test_corrupted_scalar_fails_validation() -> None:
    data = copy.deepcopy(entry("L(t0)").to_json())
    for action in ACTION_KEYS:
        if data["actions"][action]:
            col, row, scal = data["actions"][action][0]
            scal = list(scal)
            scal[0] = scal[0] + 1
            data["actions"][action][0] = [col, row, scal]
            break
    mutant = GModule.from_json(data)
    failure = mutant.validate()
    assert failure is not None
    assert failure.relation


def test_shift_moves_degrees_only() -> None:
    mod = entry("L(erho)")
    up = mod.shift(3)
    assert up.z_range() == (mod.z_range()[0] + 3, mod.z_range()[1] + 3)
    assert [v.s3 for v in up.basis] == [v.s3 for v in mod.basis]
    assert up.validate() is None


def test_dual_reverses_grading() -> None:
    mod = entry("L(s-)")
    dd = mod.dual()
    lo, hi = mod.z_range()
    assert dd.z_range() == (-hi, -lo)
    assert dd.validate() is None
    assert {v.s3 for v in dd.basis} == {v.s3.inverse() for v in mod.basis}


def test_tensor_dimensions_and_grading() -> None:
    a = entry("L(erho)")
    b = entry("L(t0)")
    prod = a.tensor(b)
    assert prod.dim == a.dim * b.dim
    zs = sorted({v.z for v in prod.basis})
    assert zs[0] == a.z_range()[0] + b.z_range()[0]
    assert zs[-1] == a.z_range()[1] + b.z_range()[1]
    assert prod.validate() is None


def test_group_operator_composition() -> None:
    mod = entry("L(t0)")
    # T follows the right-to-left composition of the group itself
    assert mod.T(C123) == mod.T(T13) * mod.T(T12)
    assert not mod.T(E).is_zero()
    assert mod.T(T12) * mod.T(T12) == mod.T(E)
