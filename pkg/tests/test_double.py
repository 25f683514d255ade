"""Re-derivations from the 72-dimensional Hopf algebra and its double.

The induction machinery and the module validator run off frozen
straightening and cross-relation constants.  These tests rebuild every
frozen constant from the double itself: the straightening tables are
recomputed by solving in the algebra, and the cubic cross relation is
checked with its recorded signs (and shown to fail with any other
signs).
"""

from __future__ import annotations

import pytest

from fk3double import _straightening_data
from fk3double.hopf import double
from fk3double.perms import ALL, CYCLE_NAMES, E, TRANSPOSITIONS
from fk3double.scalars import ONE


@pytest.fixture(scope="module")
def dbl():
    return double()


def _normalize_frozen(raw) -> list:
    return sorted((a, b,
                   sorted((w, r, tuple(c)) for w, r, c in swap),
                   sorted((g, h, tuple(c)) for g, h, c in grp))
                  for a, b, swap, grp in raw)


def _normalize_derived(table) -> list:
    return sorted((CYCLE_NAMES[a], CYCLE_NAMES[b],
                   sorted((CYCLE_NAMES[w], CYCLE_NAMES[r],
                           tuple(c.to_json())) for w, r, c in swap),
                   sorted((CYCLE_NAMES[g], CYCLE_NAMES[h],
                           tuple(c.to_json())) for g, h, c in grp))
                  for (a, b), (swap, grp) in table.items())


def test_straightening_tables_rederive(dbl) -> None:
    assert _normalize_derived(dbl.straightening()) == \
        _normalize_frozen(_straightening_data.YX)
    assert _normalize_derived(dbl.reverse_straightening()) == \
        _normalize_frozen(_straightening_data.XY)


def test_cross_relation_signs(dbl) -> None:
    # the recorded sign pattern is the only one the double satisfies
    assert dbl.cross_relation_defect(-1, 1) == {}
    for signs in ((1, 1), (1, -1), (-1, -1)):
        assert dbl.cross_relation_defect(*signs), signs


def test_raising_letter_coproduct(dbl) -> None:
    # delta(x_t) = x_t (x) 1 + t (x) x_t in the 72-dimensional algebra
    H = dbl.H
    index = {vec: i for i, vec in enumerate(H.basis)}
    unit = index[((), E)]
    for pos, t in enumerate(TRANSPOSITIONS):
        letter = index[((pos,), E)]
        grp = index[((), t)]
        terms = H.coproduct_basis(letter)
        assert set(terms) == {(letter, unit), (grp, letter)}
        assert all(c == ONE for c in terms.values())


def test_antipode_on_generators(dbl) -> None:
    H = dbl.H
    for g in ALL:
        assert H.antipode(H.of_group(g)) == H.of_group(g.inverse())
    for t in TRANSPOSITIONS:
        minus_tx = {k: -v for k, v in
                    H.mult(H.of_group(t), H.of_letter(t)).items()}
        assert H.antipode(H.of_letter(t)) == minus_tx


def test_antipode_inverse_on_basis(dbl) -> None:
    H = dbl.H
    for i in range(H.dim):
        elem = {i: ONE}
        assert H.antipode_inv(H.antipode(elem)) == elem
