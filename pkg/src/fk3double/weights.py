"""The eight simple modules of the degree-zero double, realized concretely.

Labels: "eps" (trivial), "e-" (sign), "erho" (two-dimensional at group degree
e), "s+", "s-" (three-dimensional, supported on transpositions), "t0", "t1",
"t2" (two-dimensional, supported on the three-cycles).

Each is packaged as a GModule concentrated in z = 0 with the letters x, y
acting by zero, so the same machinery (tensor, dual, validation, hom spaces)
applies verbatim.
"""

from __future__ import annotations

from .gmodule import BasisVec, GModule
from .linalg import Mat
from .perms import C123, C132, E, T12, T13, T23, Perm
from .scalars import ONE, Scalar, ZETA, ZETA2

LABELS = ("eps", "e-", "erho", "s+", "s-", "t0", "t1", "t2")

DIMS = {"eps": 1, "e-": 1, "erho": 2, "s+": 3, "s-": 3, "t0": 2, "t1": 2, "t2": 2}

_ZPOW = (ONE, ZETA, ZETA2)


def _zero_xy(dim: int) -> dict:
    return {key: Mat(dim, dim) for key in
            ("x12", "x13", "x23", "y12", "y13", "y23")}


def _one_dim(label: str, tsign: int) -> GModule:
    basis = [BasisVec(f"{label}.1", 0, E)]
    actions = _zero_xy(1)
    for key in ("t12", "t13", "t23"):
        actions[key] = Mat.from_entries(1, 1, [(0, 0, Scalar(tsign))])
    return GModule(label, basis, actions)


def _two_dim(label: str, ell: int, degrees: tuple[Perm, Perm]) -> GModule:
    """Span of m123, m132 with (12)^s(123)^t acting by the ell-th character.

    degrees gives the S3 degrees of (m123, m132): the three-cycles for the
    tau family, (e, e) for the two-dimensional degree-e weight.
    """
    basis = [BasisVec(f"{label}.m123", 0, degrees[0]),
             BasisVec(f"{label}.m132", 0, degrees[1])]
    actions = _zero_xy(2)
    # transposition g = (12)^1 (123)^t swaps the basis and scales by zeta^(t*ell)
    for key, t_exp in (("t12", 0), ("t23", 1), ("t13", 2)):
        fwd = _ZPOW[(t_exp * ell) % 3]
        bwd = _ZPOW[(-t_exp * ell) % 3]
        actions[key] = Mat.from_entries(2, 2, [(1, 0, fwd), (0, 1, bwd)])
    return GModule(label, basis, actions)


def _three_dim(label: str, sign: int) -> GModule:
    pair_of_index = {0: (1, 2), 1: (2, 3), 2: (1, 3)}  # m12, m23, m13
    degree = {0: T12, 1: T23, 2: T13}
    names = {0: "m12", 1: "m23", 2: "m13"}
    basis = [BasisVec(f"{label}.{names[i]}", 0, degree[i]) for i in range(3)]
    actions = _zero_xy(3)
    index_of_pair = {v: k for k, v in pair_of_index.items()}
    for key, g in (("t12", T12), ("t13", T13), ("t23", T23)):
        entries = []
        for i in range(3):
            a, b = pair_of_index[i]
            image = tuple(sorted((g(a), g(b))))
            entries.append((index_of_pair[image], i, Scalar(sign if g.sign < 0 else 1)))
        actions[key] = Mat.from_entries(3, 3, entries)
    return GModule(label, basis, actions)


_CACHE: dict[str, GModule] = {}


def weight(label: str) -> GModule:
    """The weight module for a label in LABELS."""
    if label not in _CACHE:
        if label == "eps":
            m = _one_dim("eps", 1)
        elif label == "e-":
            m = _one_dim("e-", -1)
        elif label == "erho":
            m = _two_dim("erho", 1, (E, E))
        elif label == "s+":
            m = _three_dim("s+", 1)
        elif label == "s-":
            m = _three_dim("s-", -1)
        elif label in ("t0", "t1", "t2"):
            m = _two_dim(label, int(label[1]), (C123, C132))
        else:
            raise ValueError(f"unknown weight label {label!r}")
        _CACHE[label] = m
    return _CACHE[label]


# seed descriptions used by the hom machinery to split a layer into weight
# copies: (S3 degree of the seed, eigen conditions on the seed, words of
# transpositions producing the embedded basis from the seed)
SEEDS = {
    "eps": (E, ((C123, ONE), (T12, ONE)), ((),)),
    "e-": (E, ((C123, ONE), (T12, Scalar(-1))), ((),)),
    "erho": (E, ((C123, ZETA),), ((), (T12,))),
    "s+": (T12, ((T12, ONE),), ((), (C123,), (C132,))),
    "s-": (T12, ((T12, Scalar(-1)),), ((), (C123,), (C132,))),
    "t0": (C123, ((C123, ONE),), ((), (T12,))),
    "t1": (C123, ((C123, ZETA),), ((), (T12,))),
    "t2": (C123, ((C123, ZETA2),), ((), (T12,))),
}
