"""Hand-recorded action tables for the three tabulated simple modules.

Each table maps an action key to {source name: {target name: coefficient}}.
The values are kept verbatim as a cross-check fixture: the catalog derives
most letter actions from the defining relations instead of copying them,
and the table-fidelity check diffs the two, pinning the handful of cells
where the recorded value disagrees with the unique consistent structure.
"""

from __future__ import annotations

from fk3double.scalars import ONE, Scalar, ZETA, ZETA2

Z = ZETA
Z2 = ZETA2
H = (ONE - ZETA).inverse()  # 1/(1 - zeta)

T0_TABLE = {
    "t12": {
        "a1": {"a2": ONE}, "a2": {"a1": ONE}, "a3": {"a3": ONE},
        "a4": {"a5": ONE}, "a5": {"a4": ONE}, "a6": {"a7": ONE},
        "a7": {"a6": ONE},
    },
    "t13": {
        "a1": {"a2": Z2}, "a2": {"a1": Z}, "a3": {"a4": ONE},
        "a4": {"a3": ONE}, "a5": {"a5": ONE}, "a6": {"a7": ONE},
        "a7": {"a6": ONE},
    },
    "t23": {
        "a1": {"a2": Z}, "a2": {"a1": Z2}, "a3": {"a3": ONE},
        "a4": {"a5": ONE}, "a5": {"a4": ONE}, "a6": {"a7": ONE},
        "a7": {"a6": ONE},
    },
    "x12": {
        "a3": {"a1": ONE, "a2": -ONE}, "a6": {"a5": ONE}, "a7": {"a4": -ONE},
    },
    "x13": {
        "a3": {"a1": Z2, "a2": -Z}, "a6": {"a5": ONE}, "a7": {"a4": -ONE},
    },
    "x23": {
        "a4": {"a1": Z, "a2": -Z2}, "a6": {"a3": ONE}, "a7": {"a5": -ONE},
    },
    "y12": {
        "a1": {"a3": ONE}, "a2": {"a3": -ONE}, "a4": {"a7": -ONE},
        "a5": {"a6": ONE},
    },
    "y13": {
        "a1": {"a3": Z}, "a2": {"a3": -Z2}, "a4": {"a7": -ONE},
        "a5": {"a6": ONE},
    },
    "y23": {
        "a1": {"a4": Z2}, "a2": {"a4": -Z}, "a3": {"a6": ONE},
        "a5": {"a7": -ONE},
    },
}

ERHO_TABLE = {
    "t12": {
        "b1": {"b2": ONE}, "b2": {"b1": ONE}, "b3": {"b5": ONE},
        "b4": {"b4": ONE}, "b5": {"b3": ONE}, "b6": {"b7": ONE},
        "b7": {"b6": ONE},
    },
    "t13": {
        "b1": {"b2": ONE}, "b2": {"b1": ONE}, "b3": {"b4": ONE},
        "b4": {"b3": ONE}, "b5": {"b5": ONE}, "b6": {"b7": Z},
        "b7": {"b6": Z2},
    },
    "t23": {
        "b1": {"b2": ONE}, "b2": {"b1": ONE}, "b3": {"b3": ONE},
        "b4": {"b5": ONE}, "b5": {"b4": ONE}, "b6": {"b7": Z2},
        "b7": {"b6": Z},
    },
    "x12": {
        "b3": {"b1": ONE}, "b5": {"b2": -ONE}, "b6": {"b4": ONE},
        "b7": {"b4": -ONE},
    },
    "x13": {
        "b3": {"b2": -ONE}, "b4": {"b1": ONE}, "b6": {"b5": Z2},
        "b7": {"b5": -Z},
    },
    "x23": {
        "b4": {"b2": -ONE}, "b5": {"b1": ONE}, "b6": {"b3": Z},
        "b7": {"b3": -Z2},
    },
    "y12": {
        "b1": {"b3": ONE}, "b2": {"b5": -ONE}, "b4": {"b6": ONE, "b7": -ONE},
    },
    "y13": {
        "b1": {"b4": ONE}, "b2": {"b3": -ONE}, "b5": {"b6": Z, "b7": -Z2},
    },
    "y23": {
        "b1": {"b5": ONE}, "b2": {"b4": -ONE}, "b3": {"b6": Z2, "b7": -Z},
    },
}

SM_TABLE = {
    "t12": {
        "c1": {"c1": -ONE}, "c2": {"c3": -ONE}, "c3": {"c2": -ONE},
        "c4": {"c5": ONE}, "c5": {"c4": ONE}, "c6": {"c7": ONE},
        "c7": {"c6": ONE}, "c8": {"c8": -ONE}, "c9": {"c10": -ONE},
        "c10": {"c9": -ONE},
    },
    "t13": {
        "c1": {"c2": -ONE}, "c2": {"c1": -ONE}, "c3": {"c3": -ONE},
        "c4": {"c5": Z2}, "c5": {"c4": Z}, "c6": {"c7": Z},
        "c7": {"c6": Z2}, "c8": {"c9": -ONE}, "c9": {"c8": -ONE},
        "c10": {"c10": -ONE},
    },
    "t23": {
        "c1": {"c3": -ONE}, "c2": {"c2": -ONE}, "c3": {"c1": -ONE},
        "c4": {"c5": Z}, "c5": {"c4": Z2}, "c6": {"c7": Z2},
        "c7": {"c6": Z}, "c8": {"c10": -ONE}, "c9": {"c9": -ONE},
        "c10": {"c8": -ONE},
    },
    "x12": {
        "c4": {"c2": Z}, "c5": {"c3": Z}, "c6": {"c2": Z2},
        "c7": {"c3": Z2},
        "c9": {"c6": H, "c4": -Z * H},
        "c10": {"c7": H, "c5": -Z * H},
    },
    "x13": {
        "c4": {"c1": Z2}, "c5": {"c2": ONE}, "c6": {"c1": Z},
        "c7": {"c2": ONE},
        "c8": {"c6": Z * H, "c4": -H},
        "c9": {"c7": Z2 * H, "c5": -Z2 * H},
    },
    "x23": {
        "c4": {"c3": ONE}, "c5": {"c1": Z2}, "c6": {"c3": ONE},
        "c7": {"c1": Z},
        "c8": {"c7": Z * H, "c5": -H},
        "c10": {"c6": Z2 * H, "c4": -Z2 * H},
    },
    "y12": {
        "c2": {"c4": Z2 * H, "c6": -Z * Z2 * H},
        "c3": {"c5": Z2 * H, "c7": -Z * Z2 * H},
        "c4": {"c9": ONE}, "c5": {"c10": ONE}, "c6": {"c9": ONE},
        "c7": {"c10": ONE},
    },
    "y13": {
        "c1": {"c4": Z * H, "c6": -H},
        "c2": {"c5": H, "c7": -Z * H},
        "c4": {"c8": Z}, "c5": {"c9": Z2}, "c6": {"c8": Z2},
        "c7": {"c9": Z},
    },
    "y23": {
        "c1": {"c5": Z * H, "c7": -H},
        "c3": {"c4": H, "c6": -Z * H},
        "c4": {"c10": Z2}, "c5": {"c8": Z}, "c6": {"c10": Z},
        "c7": {"c8": Z2},
    },
}

RECORDED_TABLES = {
    "L(t0)": T0_TABLE,
    "L(erho)": ERHO_TABLE,
    "L(s-)": SM_TABLE,
}

# Recorded cells that disagree with the unique consistent module structure,
# as (catalog key, action, source name): the machine value is the one the
# relation validator certifies, and the diff check pins each deviation.
# The 24 first-table cells all sit in derived columns touching the middle
# layer, whose recorded basis labels are permuted; the last two carry a
# stray zeta factor.
KNOWN_DEVIATIONS = {
    ("L(t0)", "t13", "a3"), ("L(t0)", "t13", "a4"), ("L(t0)", "t13", "a5"),
    ("L(t0)", "t23", "a3"), ("L(t0)", "t23", "a4"), ("L(t0)", "t23", "a5"),
    ("L(t0)", "x13", "a3"), ("L(t0)", "x13", "a4"),
    ("L(t0)", "x13", "a6"), ("L(t0)", "x13", "a7"),
    ("L(t0)", "x23", "a4"), ("L(t0)", "x23", "a5"),
    ("L(t0)", "x23", "a6"), ("L(t0)", "x23", "a7"),
    ("L(t0)", "y13", "a1"), ("L(t0)", "y13", "a2"), ("L(t0)", "y13", "a3"),
    ("L(t0)", "y13", "a4"), ("L(t0)", "y13", "a5"),
    ("L(t0)", "y23", "a1"), ("L(t0)", "y23", "a2"), ("L(t0)", "y23", "a3"),
    ("L(t0)", "y23", "a4"), ("L(t0)", "y23", "a5"),
    ("L(s-)", "y12", "c2"), ("L(s-)", "y12", "c3"),
}


def diff_module(mod, table):
    """All recorded-vs-module cell disagreements as (action, source) pairs."""
    index = {v.name: i for i, v in enumerate(mod.basis)}
    devs = []
    for akey, cols in table.items():
        m = mod.actions[akey]
        for src in (v.name for v in mod.basis):
            recorded = {index[d]: v for d, v in cols.get(src, {}).items()
                        if not v.is_zero()}
            if m.cols.get(index[src], {}) != recorded:
                devs.append((akey, src))
    return devs


def count_cells() -> int:
    return sum(len(col) for table in RECORDED_TABLES.values()
               for col in table.values())
