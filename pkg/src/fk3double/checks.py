"""Every published claim about the module category, as a machine check.

Each check recomputes one family of statements from the catalog and compares
against frozen expected data.  Checks are pure functions returning
(ok, expected, actual); run_check wraps them with timing and error capture,
and verify_all runs the whole registry in dependency order.

One check is expected to fail: the duality table inside the category check
claims the two outer two-dimensional lowest weights swap under duals, but
their characters are already fixed by dualization, so the machine reports
the fixed-point answer and the check records the discrepancy instead of
papering over it.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .analysis import (GradedChar, fusion, head_layer, is_indecomposable,
                       iso_test, peel, peel_off, shift_range, socle_layer,
                       socle_series)
from .catalog import CATALOG_KEYS, SIMPLE_KEYS, entry, simples
from .gmodule import ACTION_KEYS, GModule
from .homs import hom_space
from .linalg import Mat, kernel
from .scalars import ONE, ZERO
from .weights import DIMS, LABELS, weight
from ._reference_tables import (KNOWN_DEVIATIONS, RECORDED_TABLES,
                                count_cells, diff_module)


# ----------------------------------------------------------------------
# shared helpers

_CHAR_CACHE: dict[str, GradedChar] = {}


def _ch(key: str) -> GradedChar:
    out = _CHAR_CACHE.get(key)
    if out is None:
        out = GradedChar.from_module(entry(key))
        _CHAR_CACHE[key] = out
    return out


def _tens(a: str, b: str) -> GModule:
    return entry(a).tensor(entry(b), f"{a}(x){b}")


def _table_L() -> dict:
    return {lab: (f"L({lab})", 0, _ch(f"L({lab})")) for lab in LABELS}


def _table_M() -> dict:
    return {lab: (f"M({lab})", 0, _ch(f"M({lab})")) for lab in LABELS}


def _table_W() -> dict:
    return {lab: (f"W({lab})", 4, _ch(f"W({lab})")) for lab in LABELS}


# Highest-degree weight of each projective cover; the eight labels are
# pairwise distinct, so peeling a projective-decomposable character from
# the top down is forced at every step.
_P_TOP = {"eps": ("P(eps)", 4), "t0": ("P(erho)", 2), "erho": ("P(t0)", 2),
          "s-": ("P(s-)", 2), "e-": ("P(e-)", 0), "s+": ("P(s+)", 0),
          "t1": ("P(t1)", 0), "t2": ("P(t2)", 0)}


def _table_P() -> dict:
    return {lab: (key, off, _ch(key)) for lab, (key, off) in _P_TOP.items()}


def _expand(char: GradedChar, table: dict) -> dict | None:
    """Rewrite a character over a triangular basis, as {key: {shift: mult}}."""
    raw = peel(char, table)
    if raw is None:
        return None
    out: dict = {}
    for (key, k), mult in sorted(raw.items()):
        out.setdefault(key, {})[k] = mult
    return out


def _strip(mod: GModule, pieces: list[tuple[str, int]], rest_name: str
           ) -> GModule | None:
    """Split the named shifted catalog summands off mod, one at a time."""
    rest = mod
    for key, k in pieces:
        rest = peel_off(rest, entry(key).shift(k), rest_name)
        if rest is None:
            return None
    return rest


def _poly(p: dict) -> str:
    """Deterministic rendering of {shift: mult} as a Laurent polynomial."""
    if not p:
        return "0"
    terms = []
    for k, m in sorted(p.items()):
        if k == 0:
            terms.append(str(m))
        else:
            head = "" if m == 1 else f"{m}*"
            terms.append(f"{head}t^{k}" if k != 1 else f"{head}t")
    return " + ".join(terms)


def _fmt_expansion(exp: dict) -> str:
    return "; ".join(f"[{key}] {_poly(p)}" for key, p in sorted(exp.items()))


# ----------------------------------------------------------------------
# frozen expected data

# Weight content of the lowest-degree layer of each simple (the involution
# induced by passing to the lowest weight).
_BAR = {"eps": "eps", "e-": "e-", "erho": "t0", "t0": "erho",
        "s+": "s+", "s-": "s-", "t1": "t1", "t2": "t2"}

# Fusion rules for the eight weights, keyed by (a, b) with a <= b in LABELS
# order; the product is symmetric.  The outer two-dimensional labels follow
# this package's convention (the cyclic-subgroup character exponent is read
# on the degree-(123) basis vector), under which the product of two
# cyclic-class weights carries the negated exponent sum: t1*t1 lands on t1,
# t0*t1 on t2.  Reading the exponent on the other basis vector negates
# every label and turns the sums positive; the rules here are that same
# table written in this package's labels.
_ORD = {lab: i for i, lab in enumerate(LABELS)}

_FUSION_TABLE = {
    ("e-", "e-"): {"eps": 1},
    ("e-", "erho"): {"erho": 1},
    ("e-", "s+"): {"s-": 1},
    ("e-", "s-"): {"s+": 1},
    ("e-", "t0"): {"t0": 1},
    ("e-", "t1"): {"t1": 1},
    ("e-", "t2"): {"t2": 1},
    ("erho", "erho"): {"eps": 1, "e-": 1, "erho": 1},
    ("erho", "s+"): {"s+": 1, "s-": 1},
    ("erho", "s-"): {"s+": 1, "s-": 1},
    ("erho", "t0"): {"t1": 1, "t2": 1},
    ("erho", "t1"): {"t0": 1, "t2": 1},
    ("erho", "t2"): {"t0": 1, "t1": 1},
    ("s+", "s+"): {"eps": 1, "erho": 1, "t0": 1, "t1": 1, "t2": 1},
    ("s+", "s-"): {"e-": 1, "erho": 1, "t0": 1, "t1": 1, "t2": 1},
    ("s+", "t0"): {"s+": 1, "s-": 1},
    ("s+", "t1"): {"s+": 1, "s-": 1},
    ("s+", "t2"): {"s+": 1, "s-": 1},
    ("s-", "s-"): {"eps": 1, "erho": 1, "t0": 1, "t1": 1, "t2": 1},
    ("s-", "t0"): {"s+": 1, "s-": 1},
    ("s-", "t1"): {"s+": 1, "s-": 1},
    ("s-", "t2"): {"s+": 1, "s-": 1},
    ("t0", "t0"): {"eps": 1, "e-": 1, "t0": 1},
    ("t0", "t1"): {"erho": 1, "t2": 1},
    ("t0", "t2"): {"erho": 1, "t1": 1},
    ("t1", "t1"): {"eps": 1, "e-": 1, "t1": 1},
    ("t1", "t2"): {"erho": 1, "t0": 1},
    ("t2", "t2"): {"eps": 1, "e-": 1, "t2": 1},
}
for _lab in LABELS:
    _FUSION_TABLE[("eps", _lab) if _ORD["eps"] <= _ORD[_lab]
                  else (_lab, "eps")] = {_lab: 1}


def hand_fusion(a: str, b: str) -> dict[str, int]:
    key = (a, b) if _ORD[a] <= _ORD[b] else (b, a)
    return _FUSION_TABLE[key]


# Standard-module content of each projective cover.
_P_BY_M = {
    "P(eps)": {"M(eps)": {0: 1, 4: 1}, "M(s-)": {1: 1, 3: 1}},
    "P(erho)": {"M(erho)": {0: 1}, "M(s-)": {1: 1}, "M(t0)": {2: 1}},
    "P(t0)": {"M(t0)": {0: 1}, "M(s-)": {1: 1}, "M(erho)": {2: 1}},
    "P(s-)": {"M(s-)": {0: 1, 2: 1}, "M(eps)": {1: 1}, "M(erho)": {1: 1},
              "M(t0)": {1: 1}},
    "P(e-)": {"M(e-)": {0: 1}},
    "P(s+)": {"M(s+)": {0: 1}},
    "P(t1)": {"M(t1)": {0: 1}},
    "P(t2)": {"M(t2)": {0: 1}},
}

# Projective content of each induced module.
_IND_BY_P = {
    "Ind(eps)": {"P(eps)": {0: 1}, "P(t1)": {2: 1}, "P(t2)": {2: 1}},
    "Ind(e-)": {"P(e-)": {0: 1, 4: 1}, "P(s+)": {1: 1, 3: 1},
              "P(t1)": {2: 1}, "P(t2)": {2: 1}},
    "Ind(erho)": {"P(erho)": {0: 1}, "P(s+)": {1: 1, 3: 1}, "P(t0)": {2: 1},
                "P(t1)": {2: 1}, "P(t2)": {2: 1}},
    "Ind(s-)": {"P(s-)": {0: 1, 2: 1}, "P(s+)": {2: 2},
              "P(t1)": {1: 1, 3: 1}, "P(t2)": {1: 1, 3: 1}},
    "Ind(s+)": {"P(e-)": {1: 1, 3: 1}, "P(erho)": {1: 1},
              "P(s+)": {0: 1, 2: 2, 4: 1}, "P(t0)": {1: 1},
              "P(t1)": {1: 1, 3: 1}, "P(t2)": {1: 1, 3: 1}},
    "Ind(t0)": {"P(erho)": {2: 1}, "P(s+)": {1: 1, 3: 1}, "P(t0)": {0: 1},
              "P(t1)": {2: 1}, "P(t2)": {2: 1}},
    "Ind(t1)": {"P(e-)": {2: 1}, "P(s-)": {1: 1}, "P(s+)": {1: 1, 3: 1},
                "P(t1)": {0: 1, 2: 1, 4: 1}},
    "Ind(t2)": {"P(e-)": {2: 1}, "P(s-)": {1: 1}, "P(s+)": {1: 1, 3: 1},
                "P(t2)": {0: 1, 2: 1, 4: 1}},
}

# Projective content of P(eps) (x) P(eps), dimension 9216.
_PP_BY_P = {
    "P(eps)": {-4: 1, -2: 1, 0: 4, 2: 1, 4: 1},
    "P(e-)": {0: 2, 2: 4, 4: 2},
    "P(erho)": {-2: 1, 0: 3, 2: 3, 4: 1},
    "P(s-)": {-3: 2, -1: 6, 1: 8, 3: 6, 5: 2},
    "P(s+)": {-1: 8, 1: 16, 3: 16, 5: 8},
    "P(t0)": {-2: 1, 0: 3, 2: 3, 4: 1},
    "P(t1)": {-2: 4, 0: 10, 2: 16, 4: 10, 6: 4},
    "P(t2)": {-2: 4, 0: 10, 2: 16, 4: 10, 6: 4},
}

# First extension groups between simples: dim Ext^1(L(row), L(col)),
# summed over degree shifts.  Every entry involving one of the four
# projective-simple labels vanishes.
_EXT_ROWS = {
    "eps": {"s-": 3},
    "erho": {"s-": 2},
    "t0": {"s-": 2},
    "s-": {"eps": 3, "erho": 2, "t0": 2},
    "e-": {}, "s+": {}, "t1": {}, "t2": {},
}

# Socle filtrations of the three named tensor complements, bottom first.
_SOCLE_SERIES = {
    "A": [
        [("L(s-)", -1, 1)],
        [("L(eps)", -4, 1), ("L(eps)", -2, 1), ("L(eps)", 0, 1),
         ("L(erho)", -2, 1), ("L(erho)", 0, 1),
         ("L(t0)", -2, 1), ("L(t0)", 0, 1)],
        [("L(s-)", -1, 1)],
    ],
    "B": [
        [("L(s-)", -1, 1)],
        [("L(eps)", -4, 1), ("L(eps)", -2, 1), ("L(eps)", 0, 1),
         ("L(erho)", -2, 1), ("L(erho)", 0, 1)],
        [("L(s-)", -1, 1)],
    ],
    "C": [
        [("L(t0)", -1, 1)],
        [("L(s-)", -2, 1), ("L(s-)", 0, 1)],
        [("L(t0)", -1, 1)],
    ],
}

# Graded duals of the simples, machine truth: L(key)* iso L(partner)[shift].
_DUAL_TABLE = {
    "L(eps)": ("L(eps)", 0), "L(e-)": ("L(e-)", 4),
    "L(erho)": ("L(t0)", 2), "L(t0)": ("L(erho)", 2),
    "L(s-)": ("L(s-)", 2), "L(s+)": ("L(s+)", 4),
    "L(t1)": ("L(t1)", 4), "L(t2)": ("L(t2)", 4),
}


def _bv_char() -> GradedChar:
    return GradedChar({(0, "eps"): 1, (-1, "s-"): 1, (-2, "t1"): 1,
                       (-2, "t2"): 1, (-3, "s-"): 1, (-4, "eps"): 1})


# ----------------------------------------------------------------------
# raw intertwiner oracle (no weight splitting; one sparse kernel)


def _raw_hom_dim(src: GModule, dst: GModule) -> int:
    """dim Hom(src, dst) through a single kernel over all nine letters."""
    cells = [(i, j) for j, u in enumerate(src.basis)
             for i, v in enumerate(dst.basis)
             if u.z == v.z and u.s3 == v.s3]
    if not cells:
        return 0
    idx = {c: k for k, c in enumerate(cells)}
    rows: dict = {}
    for a, akey in enumerate(ACTION_KEYS):
        a_s = src.actions[akey]
        a_d = dst.actions[akey]
        for (m, j), k in idx.items():
            for i, v in a_d.cols.get(m, {}).items():
                row = rows.setdefault((a, i, j), {})
                row[k] = row.get(k, ZERO) + v
        for j in range(src.dim):
            for n, v in a_s.cols.get(j, {}).items():
                for (i, n2), k in idx.items():
                    if n2 != n:
                        continue
                    row = rows.setdefault((a, i, j), {})
                    row[k] = row.get(k, ZERO) - v
    entries = []
    for r, (_, row) in enumerate(sorted(rows.items())):
        for k, v in row.items():
            if not v.is_zero():
                entries.append((r, k, v))
    system = Mat.from_entries(len(rows), len(cells), entries)
    return len(kernel(system))


def _raw_socle(mod: GModule, simple_list) -> list:
    found = []
    for name, simple in simple_list:
        for k in shift_range(simple, mod):
            d = _raw_hom_dim(simple.shift(k), mod)
            if d:
                found.append((name, k, d))
    return sorted(found)


def _raw_fusion(a: str, b: str) -> dict[str, int]:
    prod = weight(a).tensor(weight(b))
    out = {}
    for c in LABELS:
        d = _raw_hom_dim(weight(c), prod)
        if d:
            out[c] = d
    return out


# ----------------------------------------------------------------------
# the checks


def check_characters() -> tuple[bool, str, str]:
    problems = []

    bv = _bv_char()
    if _ch("M(eps)") != bv:
        problems.append("ground standard module has the wrong character")
    layer_dims = tuple(sum(DIMS[lab] * m for lab, m in bv.layer(z).items())
                       for z in range(0, -5, -1))
    if layer_dims != (1, 3, 4, 3, 1):
        problems.append(f"ladder layer dimensions {layer_dims}")

    for lab in LABELS:
        expect = GradedChar.of_weight(lab) * bv
        if _ch(f"M({lab})") != expect:
            problems.append(f"M({lab}) character is not {lab} times the ladder")
        if _ch(f"W({lab})") != _ch(f"M({lab})").shift(4):
            problems.append(f"W({lab}) character is not the +4 shift of M({lab})")

    for lab in LABELS:
        ch = _ch(f"L({lab})")
        bottom = min(z for z, _ in ch.data)
        if ch.layer(bottom) != {_BAR[lab]: 1}:
            problems.append(f"lowest weight of L({lab}) is not {_BAR[lab]}")

    table = _table_L()
    roundtrips = 0
    for key in CATALOG_KEYS:
        exp = _expand(_ch(key), table)
        if exp is None:
            problems.append(f"{key} does not rewrite over the simple basis")
            continue
        total = GradedChar()
        for lkey, p in exp.items():
            for k, m in p.items():
                total = total + _ch(lkey).shift(k).scale(m)
        if total != _ch(key):
            problems.append(f"{key} simple-basis rewrite does not add back up")
        else:
            roundtrips += 1

    pool = [k for k in CATALOG_KEYS
            if k[0] in "LMW" or k in ("T01", "C", "P(e-)", "P(s+)",
                                      "P(t1)", "P(t2)")]
    pool = [k for k in pool if entry(k).dim <= 36]
    rng = random.Random(96)
    pairs = [(rng.choice(pool), rng.choice(pool)) for _ in range(50)]
    mult_ok = 0
    for a, b in pairs:
        if GradedChar.from_module(_tens(a, b)) == _ch(a) * _ch(b):
            mult_ok += 1
        else:
            problems.append(f"ch({a} (x) {b}) != ch {a} * ch {b}")

    expected = ("ladder layers (1, 3, 4, 3, 1); 8 standard and 8 costandard "
                "characters; 8 lowest-weight labels; 36/36 simple-basis "
                "round-trips; 50/50 seeded products multiplicative")
    actual = (f"ladder layers {layer_dims}; {roundtrips}/36 round-trips; "
              f"{mult_ok}/50 products multiplicative")
    if problems:
        actual += "; " + "; ".join(problems[:6])
    return not problems, expected, actual


def check_appendix_tables() -> tuple[bool, str, str]:
    problems = []
    for key in ("L(eps)", "L(erho)", "L(t0)", "L(s-)"):
        failure = entry(key).validate()
        if failure is not None:
            problems.append(f"{key} fails validation: {failure}")

    devs = set()
    for key, table in RECORDED_TABLES.items():
        for akey, src in diff_module(entry(key), table):
            devs.add((key, akey, src))
    missing = KNOWN_DEVIATIONS - devs
    extra = devs - KNOWN_DEVIATIONS
    if missing:
        problems.append(f"recorded cells unexpectedly match: {sorted(missing)}")
    if extra:
        problems.append(f"new deviations from the recorded tables: "
                        f"{sorted(extra)}")

    columns = sum(9 * entry(k).dim for k in RECORDED_TABLES)
    expected = (f"4 simple modules satisfy every defining relation; all "
                f"{columns} action columns ({count_cells()} explicit "
                f"entries) match the recorded tables except the "
                f"{len(KNOWN_DEVIATIONS)} pinned deviations")
    actual = (f"validation failures: {sum('validation' in p for p in problems)}; "
              f"deviating columns: {len(devs)} "
              f"(pinned: {len(KNOWN_DEVIATIONS)})")
    if problems:
        actual += "; " + "; ".join(problems[:4])
    return not problems, expected, actual


def check_tensor_table() -> tuple[bool, str, str]:
    problems = []

    rest = _strip(_tens("L(t0)", "L(erho)"),
                  [("L(t1)", 0), ("L(t2)", 0), ("L(eps)", -2)], "rest")
    if rest is None or rest.dim != 0:
        problems.append("L(t0) (x) L(erho) is not L(t1) + L(t2) + L(eps)[-2]")

    for name in ("A", "B", "C"):
        if not is_indecomposable(entry(name)):
            problems.append(f"{name} is decomposable")

    rest = _strip(_tens("L(erho)", "L(erho)"), [("L(e-)", 0)], "rest")
    if rest is None or GradedChar.from_module(rest) != _ch("B"):
        problems.append("L(erho) (x) L(erho) does not split as L(e-) + B")

    rest = _strip(_tens("L(s-)", "L(erho)"), [("L(s+)", 0)], "rest")
    if rest is None or GradedChar.from_module(rest) != _ch("C"):
        problems.append("L(s-) (x) L(erho) does not split as L(s+) + C")

    rest = _strip(_tens("L(s-)", "L(s-)"),
                  [("L(t1)", 0), ("L(t2)", 0), ("L(eps)", -2)], "rest")
    if rest is None or GradedChar.from_module(rest) != _ch("A"):
        problems.append("L(s-) (x) L(s-) does not split as "
                        "L(t1) + L(t2) + L(eps)[-2] + A")

    rest = _strip(_tens("L(t0)", "L(t0)"), [("L(e-)", 0)], "rest")
    bstar = entry("B").dual().shift(-4, "B*")
    if rest is None or not iso_test(rest, bstar, assume_indecomposable=True):
        problems.append("L(t0) (x) L(t0) complement of L(e-) is not B*")

    rest = _strip(_tens("L(s-)", "L(t0)"), [("L(s+)", 0)], "rest")
    cstar = entry("C").dual().shift(-4, "C*")
    if rest is None or not iso_test(rest, cstar, assume_indecomposable=True):
        problems.append("L(s-) (x) L(t0) complement of L(s+) is not C*")

    expected = ("six tabulated products of non-projective simples split as "
                "stated, with indecomposable complements A, B, C and their "
                "renormalized duals B*, C*")
    actual = ("all six products split as stated; A, B, C indecomposable"
              if not problems else "; ".join(problems))
    return not problems, expected, actual


def check_socle_filtrations() -> tuple[bool, str, str]:
    problems = []
    sim = simples()
    layers_seen = {}
    for name, expect in _SOCLE_SERIES.items():
        series = socle_series(entry(name), sim)
        layers_seen[name] = len(series)
        if series != expect:
            problems.append(f"{name} socle series differs: {series}")

    astar = entry("A").dual().shift(-4, "A*")
    if not iso_test(astar, entry("A"), assume_indecomposable=True):
        problems.append("A* is not isomorphic to A")

    expected = ("A and B are uniserial-over-semisimple with three socle "
                "layers s-, (eps + erho [+ t0]) spread over two degrees, "
                "s-; C has layers t0, s-, t0; A is self-dual after "
                "renormalization")
    actual = (f"socle layers: " +
              ", ".join(f"{n}: {layers_seen[n]}" for n in sorted(layers_seen)) +
              ("; A* iso A" if not problems else
               "; " + "; ".join(problems[:4])))
    return not problems, expected, actual


def check_simple_by_projective() -> tuple[bool, str, str]:
    problems = []

    def expect_iso(prod: GModule, key: str, shift: int, claim: str) -> None:
        if not iso_test(prod, entry(key).shift(shift),
                        assume_indecomposable=True):
            problems.append(claim)

    def expect_split(prod: GModule, pieces, rest_key: str | None,
                     rest_shift: int, claim: str) -> None:
        rest = _strip(prod, pieces, "rest")
        if rest is None:
            problems.append(claim + " (a stated summand fails to split off)")
            return
        if rest_key is None:
            if rest.dim != 0:
                problems.append(claim + f" (residue of dimension {rest.dim})")
        elif not iso_test(rest, entry(rest_key).shift(rest_shift),
                          assume_indecomposable=True):
            problems.append(claim + " (residue is not the stated projective)")

    expect_iso(_tens("L(e-)", "L(erho)"), "P(t0)", -2,
               "L(e-) (x) L(erho) is not P(t0)[-2]")
    expect_iso(_tens("L(e-)", "L(t0)"), "P(erho)", -2,
               "L(e-) (x) L(t0) is not P(erho)[-2]")
    expect_split(_tens("L(e-)", "L(s-)"),
                 [("L(t1)", -1), ("L(t2)", -1), ("L(s+)", 0), ("L(s+)", -2)],
                 None, 0, "L(e-) (x) L(s-) decomposition fails")

    for i, j in (("t1", "t2"), ("t2", "t1")):
        expect_split(_tens(f"L({i})", "L(erho)"),
                     [(f"L({j})", 0), (f"L({j})", -2), ("L(s+)", -1)],
                     "P(erho)", -2,
                     f"L({i}) (x) L(erho) decomposition fails")
        expect_split(_tens(f"L({i})", "L(t0)"),
                     [(f"L({j})", 0), (f"L({j})", -2), ("L(s+)", -1)],
                     "P(t0)", -2,
                     f"L({i}) (x) L(t0) decomposition fails")
        expect_split(_tens(f"L({i})", "L(s-)"),
                     [("L(e-)", -1), (f"L({i})", -1),
                      ("L(s+)", 0), ("L(s+)", -2)],
                     "P(s-)", -2,
                     f"L({i}) (x) L(s-) decomposition fails")

    for right in ("L(erho)", "L(t0)"):
        expect_split(_tens("L(s+)", right),
                     [("L(t1)", -1), ("L(t2)", -1),
                      ("L(s+)", 0), ("L(s+)", -2)],
                     "P(s-)", -2, f"L(s+) (x) {right} decomposition fails")

    rest = _strip(_tens("L(s+)", "L(s-)"),
                  [("L(e-)", 0), ("L(e-)", -2), ("L(t1)", 0), ("L(t1)", -2),
                   ("L(t2)", 0), ("L(t2)", -2), ("L(s+)", -1), ("L(s+)", -1)],
                  "rest")
    if rest is None:
        problems.append("L(s+) (x) L(s-): a stated simple summand fails "
                        "to split off")
    else:
        rest2 = peel_off(rest, entry("P(erho)").shift(-2), "rest2")
        if rest2 is None or not iso_test(rest2, entry("P(t0)").shift(-2),
                                         assume_indecomposable=True):
            problems.append("L(s+) (x) L(s-) projective part is not "
                            "P(erho)[-2] + P(t0)[-2]")

    # Induced modules span degrees -4..4 while a product of simples tops
    # out at 0, so the identity L(e-) (x) L(e-) = Ind(eps) holds after
    # dropping the induced module by four degrees.  Ind(eps) splits into
    # P(eps) + P(t1)[2] + P(t2)[2] by construction, so stripping those
    # three (shifted down) to nothing proves the module-level identity.
    expect_split(_tens("L(e-)", "L(e-)"),
                 [("P(eps)", -4), ("P(t1)", -2), ("P(t2)", -2)],
                 None, 0, "L(e-) (x) L(e-) is not Ind(eps)[-4]")

    char_pairs = [("e-", "s+"), ("e-", "t1"), ("e-", "t2"), ("s+", "s+"),
                  ("s+", "t1"), ("s+", "t2"), ("t1", "t1"), ("t1", "t2"),
                  ("t2", "t2")]
    char_ok = 0
    for a, b in char_pairs:
        got = GradedChar.from_module(_tens(f"L({a})", f"L({b})"))
        want = GradedChar()
        for nu, m in fusion(a, b).items():
            want = want + _ch(f"Ind({nu})").shift(-4).scale(m)
        if got == want:
            char_ok += 1
        else:
            problems.append(f"ch(L({a}) (x) L({b})) is not the matching "
                            f"sum of induced characters")

    expected = ("tabulated products with a projective simple factor "
                "decompose as stated: eleven at module level (largest "
                "dimension 360), and the projective-by-projective family "
                "at character level against induced modules shifted to "
                "top degree zero")
    actual = (f"module-level identities verified; induced-character "
              f"identities {char_ok}/9"
              + ("" if not problems else "; " + "; ".join(problems[:5])))
    return not problems, expected, actual


def check_projectives() -> tuple[bool, str, str]:
    problems = []
    sim = simples()

    table_m = _table_M()
    for key, want in _P_BY_M.items():
        got = _expand(_ch(key), table_m)
        if got != want:
            problems.append(f"{key} standard content is {got}")

    for lab in LABELS:
        key = f"P({lab})"
        mod = entry(key)
        want = [(f"L({lab})", 0, 1)]
        soc, _ = socle_layer(mod, sim)
        if soc != want:
            problems.append(f"socle of {key} is {soc}")
        head, _ = head_layer(mod, sim)
        if head != want:
            problems.append(f"head of {key} is {head}")

    table_p = _table_P()
    for lab in LABELS:
        got = _expand(_ch(f"Ind({lab})"), table_p)
        if got != _IND_BY_P[f"Ind({lab})"]:
            problems.append(f"Ind({lab}) projective content is {got}")

    pp = _ch("P(eps)") * _ch("P(eps)")
    got = _expand(pp, table_p)
    if got != _PP_BY_P:
        problems.append(f"P(eps) (x) P(eps) projective content is {got}")

    # Second route: expand one factor over costandard modules (the standard
    # content shifted down by 4) and the other over standard modules; each
    # cross term contributes the induced modules of the fused weights.
    pm = _P_BY_M["P(eps)"]
    second = GradedChar()
    for mk_a, pa in pm.items():
        for mk_b, pb in pm.items():
            for ja, ma in pa.items():
                for jb, mb in pb.items():
                    for nu, m in fusion(mk_a[2:-1], mk_b[2:-1]).items():
                        second = second + _ch(f"Ind({nu})") \
                            .shift(ja - 4 + jb).scale(ma * mb * m)
    if second != pp:
        problems.append("costandard-by-standard route disagrees with the "
                        "direct product character")

    expected = ("five standard-content formulas for the projective covers; "
                "socle and head of every P are one unshifted copy of its "
                "simple; eight induced modules decompose into projectives "
                "as stated; P(eps) (x) P(eps) matches the stated projective "
                "content by two independent routes")
    actual = ("all stated projective identities hold"
              if not problems else "; ".join(problems[:6]))
    return not problems, expected, actual


def check_bgg() -> tuple[bool, str, str]:
    problems = []
    table_l = _table_L()
    table_m = _table_M()
    table_w = _table_W()
    p_ml = {lab: _expand(_ch(f"M({lab})"), table_l) for lab in LABELS}
    p_pm = {lab: _expand(_ch(f"P({lab})"), table_m) for lab in LABELS}
    p_pw = {lab: _expand(_ch(f"P({lab})"), table_w) for lab in LABELS}
    checked = 0
    for mu in LABELS:
        for lam in LABELS:
            a = p_pm[mu].get(f"M({lam})", {})
            b = p_ml[lam].get(f"L({mu})", {})
            c = p_pw[mu].get(f"W({lam})", {})
            if a != {-k: v for k, v in b.items()}:
                problems.append(f"reciprocity fails at P({mu}), M({lam}): "
                                f"{_poly(a)} vs conj {_poly(b)}")
            elif a != {k + 4: v for k, v in c.items()}:
                problems.append(f"standard vs costandard content differs "
                                f"at P({mu}), W({lam})")
            else:
                checked += 1
    expected = ("64 reciprocity identities: the standard content of P(mu) "
                "at M(lam) equals the reversed simple content of M(lam) at "
                "L(mu), and the costandard content shifted by 4")
    actual = f"{checked}/64 identities hold"
    if problems:
        actual += "; " + "; ".join(problems[:4])
    return not problems, expected, actual


def _ext_detail() -> tuple[dict, list]:
    """Ext^1 dims between simples from the radical layers of the covers.

    Returns ({row label: {col label: dim}}, [(row, col, shift, mult)]).
    """
    sim = simples()
    rows: dict = {}
    shifts = []
    for a in LABELS:
        p = entry(f"P({a})")
        _, rad_gens = head_layer(p, sim)
        row: dict = {}
        if rad_gens:
            rad, _ = p.submodule(rad_gens, f"rad P({a})")
            found, _ = head_layer(rad, sim)
            for name, k, mult in found:
                lab = name[2:-1]
                row[lab] = row.get(lab, 0) + mult
                shifts.append((a, lab, k, mult))
        rows[a] = row
    return rows, shifts


def ext_matrix() -> dict[str, dict[str, int]]:
    """dim Ext^1(L(row), L(col)), summed over degree shifts."""
    return _ext_detail()[0]


def check_extensions() -> tuple[bool, str, str]:
    problems = []
    sim = simples()
    rows, shifts_seen = _ext_detail()
    for a in LABELS:
        if rows[a] != _EXT_ROWS[a]:
            problems.append(f"Ext row of {a} is {rows[a]}, "
                            f"expected {_EXT_ROWS[a]}")

    t01 = entry("T01")
    if t01.validate() is not None:
        problems.append("the 11-dimensional extension fails validation")
    if not is_indecomposable(t01):
        problems.append("the 11-dimensional extension is decomposable")
    soc, _ = socle_layer(t01, sim)
    if soc != [("L(s-)", 1, 1)]:
        problems.append(f"its socle is {soc}")
    head, _ = head_layer(t01, sim)
    if head != [("L(eps)", 0, 1)]:
        problems.append(f"its head is {head}")
    t_idx = next(i for i, v in enumerate(t01.basis) if v.name == "t")
    x_hits = any(t01.actions[k].cols.get(t_idx) for k in ("x12", "x13", "x23"))
    y_hits = any(t01.actions[k].cols.get(t_idx) for k in ("y12", "y13", "y23"))
    if not (x_hits and y_hits):
        problems.append("its generator is annihilated by one set of letters")

    expected = ("Ext^1 between simples vanishes except s- against eps (3), "
                "erho (2), t0 (2) and transposes; the tabulated "
                "11-dimensional extension of L(eps) by L(s-)[1] validates, "
                "is indecomposable, and its generator is killed by neither "
                "letter family")
    nonzero = sorted(set((a, b) for a, b, _, _ in shifts_seen))
    actual = (f"nonzero Ext cells: {nonzero}"
              + ("" if not problems else "; " + "; ".join(problems[:5])))
    return not problems, expected, actual


def check_category() -> tuple[bool, str, str]:
    problems = []

    module_pairs = 0
    char_pairs = 0
    for i, a in enumerate(SIMPLE_KEYS):
        for b in SIMPLE_KEYS[i + 1:]:
            left = _tens(a, b)
            right = _tens(b, a)
            if left.dim <= 360:
                if iso_test(left, right):
                    module_pairs += 1
                else:
                    problems.append(f"{a} (x) {b} not isomorphic to "
                                    f"{b} (x) {a}")
            else:
                if (GradedChar.from_module(left)
                        == GradedChar.from_module(right)):
                    char_pairs += 1
                else:
                    problems.append(f"ch({a} (x) {b}) != ch({b} (x) {a})")

    dd_ok = 0
    for key in CATALOG_KEYS:
        mod = entry(key)
        dd = mod.dual().dual()
        same = ([(v.z, v.s3) for v in mod.basis]
                == [(v.z, v.s3) for v in dd.basis]
                and all(mod.actions[k] == dd.actions[k] for k in ACTION_KEYS))
        if same or iso_test(dd, mod, assume_indecomposable=False):
            dd_ok += 1
        else:
            problems.append(f"{key}** is not {key}")

    dual_actual = {}
    for key in SIMPLE_KEYS:
        dmod = entry(key).dual()
        dch = GradedChar.from_module(dmod)
        hit = None
        for key2 in SIMPLE_KEYS:
            ch2 = _ch(key2)
            for k in range(-8, 9):
                if dch == ch2.shift(k):
                    if iso_test(dmod, entry(key2).shift(k),
                                assume_indecomposable=True):
                        hit = (key2, k)
                    break
            if hit:
                break
        dual_actual[key] = hit
        if hit != _DUAL_TABLE[key]:
            problems.append(f"{key}* is {hit}, machine table says "
                            f"{_DUAL_TABLE[key]}")

    # The recorded duality table claims the two outer two-dimensional
    # lowest weights swap under duals.  Their characters are fixed by
    # dualization, so the claim fails; this check records that honestly.
    claim_failures = []
    if dual_actual.get("L(erho)", (None,))[0] != "L(t0)":
        claim_failures.append("L(erho)* is not L(t0) up to shift")
    for key, partner in (("L(t1)", "L(t2)"), ("L(t2)", "L(t1)")):
        got = dual_actual.get(key)
        if got is None or got[0] != partner:
            claim_failures.append(
                f"{key}* is {got[0]}[{got[1]}], not {partner} up to shift"
                if got else f"{key}* not identified")
    for key in ("L(eps)", "L(e-)", "L(s-)", "L(s+)"):
        got = dual_actual.get(key)
        if got is None or got[0] != key:
            claim_failures.append(f"{key} is not self-dual up to shift")

    expected = ("tensor products of simples commute (module level up to "
                "dimension 360, character level beyond); double duals are "
                "identities on all 44 catalog modules; duals fix eps, e-, "
                "s-, s+, swap erho with t0, and swap the two outer "
                "two-dimensional lowest weights")
    actual = (f"commutativity: {module_pairs} module pairs + {char_pairs} "
              f"character pairs; double dual: {dd_ok}/{len(CATALOG_KEYS)}; "
              f"duals: " +
              ", ".join(f"{k}* = {v[0]}[{v[1]}]"
                        for k, v in sorted(dual_actual.items()) if v))
    if claim_failures:
        actual += "; recorded duality claims failing: " + \
                  "; ".join(claim_failures)
    if problems:
        actual += "; " + "; ".join(problems[:5])
    ok = not problems and not claim_failures
    return ok, expected, actual


def check_oracles() -> tuple[bool, str, str]:
    problems = []
    sim = simples()

    small = [k for k in CATALOG_KEYS if entry(k).dim <= 20]
    socle_ok = 0
    for key in small:
        mod = entry(key)
        fast, _ = socle_layer(mod, sim)
        slow = _raw_socle(mod, sim)
        if fast == slow:
            socle_ok += 1
        else:
            problems.append(f"socle routes disagree on {key}: "
                            f"{fast} vs {slow}")

    fusion_ok = 0
    for i, a in enumerate(LABELS):
        for b in LABELS[i:]:
            want = hand_fusion(a, b)
            got = fusion(a, b)
            raw = _raw_fusion(a, b)
            if got == want == raw:
                fusion_ok += 1
            else:
                problems.append(f"fusion routes disagree at ({a}, {b}): "
                                f"table {want}, split {got}, raw {raw}")

    caught = []
    base = entry("L(erho)")
    m = base.actions["x12"]
    ents = list(m.entries())
    r, c, v = ents[0]
    ents[0] = (r, c, v + ONE)
    bad_actions = dict(base.actions)
    bad_actions["x12"] = Mat.from_entries(m.nrows, m.ncols, ents)
    mutant = GModule("mutant", base.basis, bad_actions)
    caught.append(mutant.validate() is not None)

    tab = {ak: {s: dict(d) for s, d in cols.items()}
           for ak, cols in RECORDED_TABLES["L(s-)"].items()}
    tab["x12"]["c4"]["c2"] = tab["x12"]["c4"]["c2"] + ONE
    devs = set(diff_module(entry("L(s-)"), tab))
    pinned = {(a, s) for (k, a, s) in KNOWN_DEVIATIONS if k == "L(s-)"}
    caught.append(("x12", "c4") in devs - pinned)

    bad_fusion = {k: dict(p) for k, p in _FUSION_TABLE.items()}
    del bad_fusion[("s+", "s+")]["t0"]
    bad_cells = sorted(k for k, p in bad_fusion.items() if fusion(*k) != p)
    caught.append(bad_cells == [("s+", "s+")])

    if not all(caught):
        problems.append(f"mutation detection flags: {caught}")

    expected = (f"raw-kernel socle agrees with the split-based socle on all "
                f"{len(small)} catalog modules of dimension at most 20; "
                f"fusion by hand table, weight splitting, and raw "
                f"intertwiners agree on all 36 pairs; three scripted "
                f"corruptions are each caught")
    actual = (f"socle agreement {socle_ok}/{len(small)}; fusion agreement "
              f"{fusion_ok}/36; corruptions caught "
              f"{sum(caught)}/3")
    if problems:
        actual += "; " + "; ".join(problems[:4])
    return not problems, expected, actual


# ----------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    status: str
    expected: str
    actual: str
    ms: int = field(compare=False, default=0)

    def to_json(self) -> dict:
        return {"check_id": self.check_id, "status": self.status,
                "expected": self.expected, "actual": self.actual,
                "ms": self.ms}


CHECKS = (
    ("characters", check_characters),
    ("appendix-tables", check_appendix_tables),
    ("tensor-table", check_tensor_table),
    ("socle-filtrations", check_socle_filtrations),
    ("simple-by-projective", check_simple_by_projective),
    ("projectives", check_projectives),
    ("bgg", check_bgg),
    ("extensions", check_extensions),
    ("category", check_category),
    ("oracles", check_oracles),
)

ALIASES = {"prop-tensor-table": "tensor-table"}

CHECK_IDS = tuple(cid for cid, _ in CHECKS)


def run_check(check_id: str) -> CheckResult:
    cid = ALIASES.get(check_id, check_id)
    for name, fn in CHECKS:
        if name == cid:
            start = time.monotonic()
            try:
                ok, expected, actual = fn()
            except Exception as exc:  # a crash is a failure, not a skip
                ok, expected, actual = False, "check runs to completion", \
                    f"exception: {exc!r}"
            ms = int((time.monotonic() - start) * 1000)
            return CheckResult(cid, "pass" if ok else "fail",
                               expected, actual, ms)
    raise KeyError(f"unknown check id {check_id!r}")


def verify_all() -> list[CheckResult]:
    return [run_check(cid) for cid in CHECK_IDS]
