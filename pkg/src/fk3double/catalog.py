"""The module catalog: simples, standard modules, projectives, and the
named indecomposables.

Tabulated simples are grounded in two ingredients: the layer-by-layer
identification of each degree slice with a weight module, and the recorded
x12 column.  The y12 column is not copied from anywhere: it is the unique
solution of the straightening relations given the x12 action, solved as a
linear system, and the finished module must pass the full relation
validator.  Everything else is built mechanically: standard modules come
from induction, projectives are split off induced modules with certified
idempotents, and the named indecomposables are complements of simple
summands inside small tensor products.
"""

from __future__ import annotations

import threading

from . import _straightening_data
from .analysis import (GradedChar, decompose, peel_off, split_once)
from .gmodule import ACTION_KEYS, BasisVec, GModule
from .induce import coverma, induced_from_weight, verma
from .linalg import Mat, kernel, solve
from .perms import (C123, C132, E, T12, T13, T23, from_name)
from .scalars import ONE, Scalar, ZERO, ZETA, ZETA2
from .weights import LABELS, weight

LABEL_KEYS = LABELS
SIMPLE_KEYS = tuple(f"L({label})" for label in LABELS)
VERMA_KEYS = tuple(f"M({label})" for label in LABELS)
COVERMA_KEYS = tuple(f"W({label})" for label in LABELS)
IND_KEYS = tuple(f"Ind({label})" for label in LABELS)
PROJECTIVE_KEYS = tuple(f"P({label})" for label in LABELS)
EXTRA_KEYS = ("A", "B", "C", "T01")
CATALOG_KEYS = (SIMPLE_KEYS + VERMA_KEYS + COVERMA_KEYS + IND_KEYS
                + PROJECTIVE_KEYS + EXTRA_KEYS)

# weight labels whose standard modules are already simple and projective
SPECIAL_LABELS = ("e-", "s+", "t1", "t2")


# ----------------------------------------------------------------------
# ground data for the three tabulated simples
#
# Each layer is (z, weight label, vector names, weight index of each name):
# the slice carries the group action of that weight module with the stated
# basis matching.  x12 columns list the image of each basis vector.

_HALF = ONE / (ONE - ZETA)  # 1/(1 - zeta)

_T0_LAYERS = (
    (-2, "erho", ("a1", "a2"), (0, 1)),
    (-1, "s+", ("a3", "a4", "a5"), (0, 2, 1)),
    (0, "t0", ("a6", "a7"), (0, 1)),
)
_T0_X12 = {
    "a3": {"a1": ONE, "a2": -ONE},
    "a6": {"a5": ONE},
    "a7": {"a4": -ONE},
}

_ERHO_LAYERS = (
    (-2, "t0", ("b1", "b2"), (0, 1)),
    (-1, "s+", ("b3", "b4", "b5"), (1, 0, 2)),
    (0, "erho", ("b6", "b7"), (1, 0)),
)
_ERHO_X12 = {
    "b3": {"b1": ONE},
    "b5": {"b2": -ONE},
    "b6": {"b4": ONE},
    "b7": {"b4": -ONE},
}

_SM_LAYERS = (
    (-2, "s-", ("c1", "c2", "c3"), (0, 1, 2)),
    (-1, "t1", ("c4", "c5"), (0, 1)),
    (-1, "t2", ("c6", "c7"), (0, 1)),
    (0, "s-", ("c8", "c9", "c10"), (0, 1, 2)),
)
_SM_X12 = {
    "c4": {"c2": ZETA},
    "c5": {"c3": ZETA},
    "c6": {"c2": ZETA2},
    "c7": {"c3": ZETA2},
    "c9": {"c6": _HALF, "c4": -ZETA * _HALF},
    "c10": {"c7": _HALF, "c5": -ZETA * _HALF},
}

_TABULATED = {
    "L(t0)": (_T0_LAYERS, _T0_X12),
    "L(erho)": (_ERHO_LAYERS, _ERHO_X12),
    "L(s-)": (_SM_LAYERS, _SM_X12),
}


def _tabulated_basis(layers):
    basis = []
    for z, label, names, widx in layers:
        wmod = weight(label)
        for name, wi in zip(names, widx):
            basis.append(BasisVec(name, z, wmod.basis[wi].s3))
    return basis


def _tabulated_group_actions(layers, index):
    dim = len(index)
    actions = {}
    for key in ("t12", "t13", "t23"):
        entries = []
        for z, label, names, widx in layers:
            wmat = weight(label).actions[key]
            back = {wi: name for name, wi in zip(names, widx)}
            for name, wi in zip(names, widx):
                for row, val in wmat.cols.get(wi, {}).items():
                    entries.append((index[back[row]], index[name], val))
        actions[key] = Mat.from_entries(dim, dim, entries)
    return actions


def _column_matrix(cols, index, dim):
    entries = []
    for src, images in cols.items():
        for dst, val in images.items():
            entries.append((index[dst], index[src], val))
    return Mat.from_entries(dim, dim, entries)


_Y_FRAME = {T12: (None, ONE), T13: (T23, -ONE), T23: (T13, -ONE)}
# y13 = -T23 y12 T23 and y23 = -T13 y12 T13 by group equivariance; the
# same frame turns x12 into x13 and x23.


def _conjugate_letter(base: Mat, t, tmats) -> Mat:
    conj, sign = _Y_FRAME[t]
    if conj is None:
        return base
    return (tmats[conj] * base * tmats[conj]).scale(sign)


def _delta_mat(basis, g) -> Mat:
    cols = {i: {i: ONE} for i, v in enumerate(basis) if v.s3 is g}
    return Mat(len(basis), len(basis), cols)


def _solve_y12(basis, tmats, x12: Mat) -> Mat:
    """The y12 action forced by the straightening relations.

    Unknowns are the y12 cells allowed by the grading (degree +1, group
    degree multiplied by (12) on the left).  Every relation
    y_t x_s = sum x_{s2} y_{t2} + group terms, with the other letters
    written as conjugates of x12 and the unknown y12, is linear in the
    unknowns.  The solution must exist and be unique.
    """
    dim = len(basis)
    cells = []
    for j, src in enumerate(basis):
        want_z = src.z + 1
        want_s3 = T12 * src.s3
        for i, dst in enumerate(basis):
            if dst.z == want_z and dst.s3 is want_s3:
                cells.append((i, j))
    if not cells:
        return Mat(dim, dim)

    xmats = {t: _conjugate_letter(x12, t, tmats) for t in (T12, T13, T23)}

    def y_of(t, y12: Mat) -> Mat:
        return _conjugate_letter(y12, t, tmats)

    unit_mats = [Mat(dim, dim, {j: {i: ONE}}) for i, j in cells]

    row_keys: dict = {}
    entries = []
    rhs: dict = {}
    for rel_index, (t_name, s_name, swap_terms, grp_terms) in enumerate(
            _straightening_data.YX):
        t = from_name(t_name)
        s = from_name(s_name)
        constant = Mat(dim, dim)
        for g_name, h_name, coeff in grp_terms:
            g = from_name(g_name)
            h = from_name(h_name)
            term = (tmats[g] if g is not E else Mat.identity(dim))
            constant = constant + (term * _delta_mat(basis, h)).scale(
                Scalar.from_json(coeff))
        for k, unit in enumerate(unit_mats):
            lhs = y_of(t, unit) * xmats[s]
            for s2_name, t2_name, coeff in swap_terms:
                s2 = from_name(s2_name)
                t2 = from_name(t2_name)
                lhs = lhs - (xmats[s2] * y_of(t2, unit)).scale(
                    Scalar.from_json(coeff))
            for c, column in lhs.cols.items():
                for r, v in column.items():
                    rk = row_keys.setdefault((rel_index, r, c), len(row_keys))
                    entries.append((rk, k, v))
        for c, column in constant.cols.items():
            for r, v in column.items():
                rk = row_keys.setdefault((rel_index, r, c), len(row_keys))
                rhs[rk] = rhs.get(rk, ZERO) + v
    system = Mat.from_entries(len(row_keys), len(cells), entries)
    if kernel(system):
        raise RuntimeError("y12 is not determined by the straightening "
                           "relations for this x12 column")
    sol = solve(system, {k: v for k, v in rhs.items() if not v.is_zero()})
    if sol is None:
        raise RuntimeError("straightening relations are inconsistent with "
                           "this x12 column")
    return Mat.from_entries(
        dim, dim, ((cells[k][0], cells[k][1], v) for k, v in sol.items()))


def _build_tabulated(name: str) -> GModule:
    layers, x12_cols = _TABULATED[name]
    basis = _tabulated_basis(layers)
    index = {v.name: i for i, v in enumerate(basis)}
    dim = len(basis)
    actions = _tabulated_group_actions(layers, index)
    tmats = {
        E: Mat.identity(dim),
        T12: actions["t12"],
        T13: actions["t13"],
        T23: actions["t23"],
    }
    tmats[C123] = tmats[T12] * tmats[T23]
    tmats[C132] = tmats[T23] * tmats[T12]
    x12 = _column_matrix(x12_cols, index, dim)
    y12 = _solve_y12(basis, tmats, x12)
    actions["x12"] = x12
    actions["x13"] = _conjugate_letter(x12, T13, tmats)
    actions["x23"] = _conjugate_letter(x12, T23, tmats)
    actions["y12"] = y12
    actions["y13"] = _conjugate_letter(y12, T13, tmats)
    actions["y23"] = _conjugate_letter(y12, T23, tmats)
    mod = GModule(name, basis, actions)
    failure = mod.validate()
    if failure is not None:
        raise RuntimeError(f"{name}: {failure}")
    return mod


# ----------------------------------------------------------------------
# the eleven dimensional extension of the trivial simple

def _build_t01() -> GModule:
    base = entry("L(s-)").shift(1)
    dim = base.dim + 1
    basis = list(base.basis) + [BasisVec("t", 0, E)]
    # the tabulated basis is c1..c10 in order
    cidx = {f"c{k + 1}": k for k in range(10)}
    t_col = {
        "x12": "c1", "x23": "c2", "x13": "c3",
        "y12": "c8", "y23": "c9", "y13": "c10",
    }
    actions = {}
    for key in ACTION_KEYS:
        m = base.actions[key]
        entries = [(r, c, v) for r, c, v in m.entries()]
        if key.startswith("t"):
            entries.append((10, 10, ONE))
        else:
            entries.append((cidx[t_col[key]], 10, ONE))
        actions[key] = Mat.from_entries(dim, dim, entries)
    mod = GModule("T01", basis, actions)
    failure = mod.validate()
    if failure is not None:
        raise RuntimeError(f"T01: {failure}")
    return mod


# ----------------------------------------------------------------------
# projectives


def _peel_expected(mod: GModule, pieces, rest_name: str) -> GModule:
    """Strip the listed (module, shift) summands; each must split off."""
    cur = mod
    for cand, shift in pieces:
        shifted = cand.shift(shift) if shift else cand
        rest = peel_off(cur, shifted, rest_name)
        if rest is None:
            raise RuntimeError(
                f"{mod.name}: expected summand {cand.name}[{shift}] "
                f"did not split off")
        cur = rest
    return cur.rename(rest_name)


def _top_layer_labels(mod: GModule) -> set[str]:
    char = GradedChar.from_module(mod)
    top = max(z for z, _ in char.data)
    return set(char.layer(top))


def _build_projective_eps() -> GModule:
    ind = entry("Ind(eps)")
    rest = _peel_expected(
        ind,
        [(entry("P(t1)"), 2), (entry("P(t2)"), 2)],
        "P(eps)")
    if rest.dim != 96:
        raise RuntimeError(f"P(eps): expected dimension 96, got {rest.dim}")
    return rest


def _split_pair(rest: GModule, marker_a: str, name_a: str, unshift_a: int,
                name_b: str, unshift_b: int) -> tuple[GModule, GModule]:
    """Split a two-summand remainder and tell the parts apart by the label
    of their top degree layer."""
    parts = split_once(rest)
    if parts is None:
        raise RuntimeError(f"{rest.name}: expected two summands, found one")
    first, second = parts
    if marker_a in _top_layer_labels(first):
        mod_a, mod_b = first, second
    else:
        mod_a, mod_b = second, first
    return (mod_a.shift(unshift_a).rename(name_a),
            mod_b.shift(unshift_b).rename(name_b))


def _build_projectives_erho_t0() -> tuple[GModule, GModule]:
    ind = entry("Ind(erho)")
    sp = entry("P(s+)")
    rest = _peel_expected(
        ind,
        [(sp, 1), (sp, 3),
         (entry("P(t1)"), 2), (entry("P(t2)"), 2)],
        "P(erho)+P(t0)[2]")
    if rest.dim != 168:
        raise RuntimeError(f"P(erho) block: expected dimension 168, "
                           f"got {rest.dim}")
    # top layer of P(erho) is the t0 weight, top layer of P(t0) is erho
    return _split_pair(rest, "t0", "P(erho)", 0, "P(t0)", -2)


def _build_projective_sm() -> GModule:
    ind = entry("Ind(s-)")
    sp = entry("P(s+)")
    rest = _peel_expected(
        ind,
        [(sp, 2), (sp, 2),
         (entry("P(t1)"), 1), (entry("P(t1)"), 3),
         (entry("P(t2)"), 1), (entry("P(t2)"), 3)],
        "P(s-)+P(s-)[2]")
    if rest.dim != 264:
        raise RuntimeError(f"P(s-) block: expected dimension 264, "
                           f"got {rest.dim}")
    parts = split_once(rest)
    if parts is None:
        raise RuntimeError(f"{rest.name}: expected two summands, found one")
    first, second = parts
    z_top = lambda m: m.z_range()[1]
    lower = first if z_top(first) < z_top(second) else second
    if z_top(lower) != 2:
        raise RuntimeError("P(s-): unexpected degree span after splitting")
    return lower.rename("P(s-)")


# ----------------------------------------------------------------------
# named indecomposable complements


def _build_complement(tensor_of: tuple[str, str], strip, rest_name: str,
                      expected_dim: int) -> GModule:
    left = entry(tensor_of[0])
    right = entry(tensor_of[1])
    prod = left.tensor(right, f"{tensor_of[0]}(x){tensor_of[1]}")
    rest = _peel_expected(prod, [(entry(k), s) for k, s in strip], rest_name)
    if rest.dim != expected_dim:
        raise RuntimeError(f"{rest_name}: expected dimension {expected_dim}, "
                           f"got {rest.dim}")
    return rest


# ----------------------------------------------------------------------
# the catalog itself

_CATALOG: dict[str, GModule] = {}
_CATALOG_LOCK = threading.RLock()


def entry(key: str) -> GModule:
    """Fetch (building and certifying on demand) a catalog module.

    Concurrent first access is safe: the build runs once under a lock and
    every caller shares the same immutable result.
    """
    mod = _CATALOG.get(key)
    if mod is not None:
        return mod
    if key not in CATALOG_KEYS:
        raise KeyError(f"unknown catalog key {key!r}")
    with _CATALOG_LOCK:
        mod = _CATALOG.get(key)
        if mod is None:
            mod = _build(key)
            _CATALOG[key] = mod
    return mod


def _build(key: str) -> GModule:
    if key in _TABULATED:
        return _build_tabulated(key)
    if key == "L(eps)":
        return weight("eps").rename("L(eps)")
    kind = key[0]
    label = key[key.index("(") + 1:-1] if "(" in key else None
    if kind == "L" and label in SPECIAL_LABELS:
        return verma(label).rename(key)
    if kind == "M":
        return verma(label)
    if kind == "W":
        return coverma(label)
    if kind == "I":
        return induced_from_weight(label)
    if kind == "P":
        if label in SPECIAL_LABELS:
            return verma(label).rename(key)
        if label == "eps":
            return _build_projective_eps()
        if label == "erho":
            perho, pt0 = _build_projectives_erho_t0()
            _CATALOG["P(t0)"] = pt0
            return perho
        if label == "t0":
            perho, pt0 = _build_projectives_erho_t0()
            _CATALOG["P(erho)"] = perho
            return pt0
        if label == "s-":
            return _build_projective_sm()
    if key == "A":
        return _build_complement(
            ("L(s-)", "L(s-)"),
            [("L(t1)", 0), ("L(t2)", 0), ("L(eps)", -2)],
            "A", 51)
    if key == "B":
        return _build_complement(
            ("L(erho)", "L(erho)"), [("L(e-)", 0)], "B", 37)
    if key == "C":
        return _build_complement(
            ("L(s-)", "L(erho)"), [("L(s+)", 0)], "C", 34)
    if key == "T01":
        return _build_t01()
    raise KeyError(f"no build recipe for {key!r}")


def simples() -> list[tuple[str, GModule]]:
    """All eight simple modules, base shift, as (name, module) pairs."""
    return [(key, entry(key)) for key in SIMPLE_KEYS]


def reset() -> None:
    """Drop every cached module (used by tests that probe build order)."""
    with _CATALOG_LOCK:
        _CATALOG.clear()
