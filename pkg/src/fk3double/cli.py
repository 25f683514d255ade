"""Command-line interface to the module catalog and the check registry.

Output is deterministic: the same command always prints the same bytes.
Exit codes: 0 on success, 1 when a requested check or identification
fails, 2 on usage errors (unknown keys, labels, or check ids).
"""

from __future__ import annotations

import argparse
import json
import sys

from .analysis import (GradedChar, Inconclusive, decompose, fusion,
                       iso_test, socle_layer, socle_series)
from .catalog import CATALOG_KEYS, entry, simples
from .checks import ALIASES, CHECK_IDS, ext_matrix, run_check, verify_all
from .gmodule import GModule
from .weights import DIMS, LABELS

# Dimensions of every catalog module, known without building anything:
# simples from the tabulated data, standard and induced modules from the
# 12- and 144-fold weight multiples, projective covers from their standard
# content.
_L_DIMS = {"eps": 1, "erho": 7, "t0": 7, "s-": 10,
           "e-": 12, "s+": 36, "t1": 24, "t2": 24}
_P_DIMS = {"eps": 96, "erho": 84, "t0": 84, "s-": 132,
           "e-": 12, "s+": 36, "t1": 24, "t2": 24}
_KEY_DIMS = {"A": 51, "B": 37, "C": 34, "T01": 11}
for _lab in LABELS:
    _KEY_DIMS[f"L({_lab})"] = _L_DIMS[_lab]
    _KEY_DIMS[f"M({_lab})"] = 12 * DIMS[_lab]
    _KEY_DIMS[f"W({_lab})"] = 12 * DIMS[_lab]
    _KEY_DIMS[f"Ind({_lab})"] = 144 * DIMS[_lab]
    _KEY_DIMS[f"P({_lab})"] = _P_DIMS[_lab]


def _get(key: str) -> GModule:
    try:
        return entry(key)
    except KeyError:
        print(f"unknown catalog key {key!r}; valid keys are "
              f"{', '.join(CATALOG_KEYS)}", file=sys.stderr)
        raise SystemExit(2)


def _piece_name(name: str, k: int) -> str:
    return name if k == 0 else f"{name}[{k}]"


def _candidates(dim: int):
    """Catalog modules of the given dimension, then the dual complements."""
    for key in CATALOG_KEYS:
        if _KEY_DIMS[key] == dim:
            yield key, entry(key)
    for key in ("A", "B", "C"):
        if _KEY_DIMS[key] == dim:
            yield f"{key}*", entry(key).dual().shift(-4, f"{key}*")


def _identify_piece(piece: GModule) -> tuple[str, int] | None:
    """Name an indecomposable summand as a shifted catalog module."""
    z_top = piece.z_range()[1]
    pch = GradedChar.from_module(piece)
    for name, cand in _candidates(piece.dim):
        k = z_top - cand.z_range()[1]
        if pch == GradedChar.from_module(cand).shift(k):
            if iso_test(piece, cand.shift(k), assume_indecomposable=True):
                return name, k
    return None


def _identify_dual(mod: GModule) -> tuple[str, int, bool] | None:
    """Name a dual as a shifted catalog module; the flag marks a full
    module-level identification (False means character level only)."""
    z_top = mod.z_range()[1]
    mch = GradedChar.from_module(mod)
    for name, cand in _candidates(mod.dim):
        k = z_top - cand.z_range()[1]
        if mch == GradedChar.from_module(cand).shift(k):
            try:
                if iso_test(mod, cand.shift(k)):
                    return name, k, True
            except Inconclusive:
                return name, k, False
    return None


# ----------------------------------------------------------------------
# subcommands


def _cmd_build(args) -> int:
    mod = _get(args.key)
    lo, hi = mod.z_range()
    print(f"{args.key}: dimension {mod.dim}, degrees {lo}..{hi}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(mod.to_json(), fh, indent=2, sort_keys=True)
            fh.write("\n")
        print(f"wrote {args.json}")
    return 0


def _cmd_char(args) -> int:
    print(GradedChar.from_module(_get(args.key)))
    return 0


def _cmd_tensor(args) -> int:
    left = _get(args.left)
    right = _get(args.right)
    prod = left.tensor(right, f"{args.left}(x){args.right}")
    if not args.decompose:
        print(f"dimension {prod.dim}")
        print(GradedChar.from_module(prod))
        return 0
    pieces = decompose(prod)
    named = []
    for piece in pieces:
        hit = _identify_piece(piece)
        if hit is None:
            lo, hi = piece.z_range()
            named.append((piece.dim, f"?(dimension {piece.dim}, "
                                     f"degrees {lo}..{hi})"))
        else:
            named.append((piece.dim, _piece_name(*hit)))
    named.sort(key=lambda p: (-p[0], p[1]))
    print(" ⊕ ".join(text for _, text in named))
    return 0 if all(not t.startswith("?") for _, t in named) else 1


def _cmd_socle(args) -> int:
    mod = _get(args.key)
    sim = simples()
    if args.filtration:
        for i, layer in enumerate(socle_series(mod, sim), start=1):
            terms = " ⊕ ".join(
                ("" if m == 1 else f"{m}*") + _piece_name(name, k)
                for name, k, m in layer)
            stage = f"soc^{i}" if i == 1 else f"soc^{i}/soc^{i - 1}"
            print(f"{stage}: {terms}")
    else:
        found, _ = socle_layer(mod, sim)
        print(" ⊕ ".join(("" if m == 1 else f"{m}*") +
                              _piece_name(name, k)
                              for name, k, m in found))
    return 0


def _cmd_dual(args) -> int:
    mod = _get(args.key)
    hit = _identify_dual(mod.dual())
    if hit is None:
        print(f"{args.key}* is not a shift of any catalog module")
        return 1
    name, k, module_level = hit
    if module_level:
        print(f"{args.key}* = {_piece_name(name, k)}")
    else:
        print(f"{args.key}* matches {_piece_name(name, k)} at character "
              f"level (module-level comparison inconclusive)")
    return 0


def _cmd_ext(args) -> int:
    matrix = ext_matrix()
    if args.matrix:
        width = max(len(lab) for lab in LABELS) + 2
        print(" " * width + "".join(lab.rjust(width) for lab in LABELS))
        for a in LABELS:
            row = "".join(str(matrix[a].get(b, 0)).rjust(width)
                          for b in LABELS)
            print(a.rjust(width) + row)
    else:
        for a in LABELS:
            for b in LABELS:
                n = matrix[a].get(b, 0)
                if n:
                    print(f"ext(L({a}), L({b})) = {n}")
    return 0


def _cmd_fusion(args) -> int:
    for lab in (args.left, args.right):
        if lab not in LABELS:
            print(f"unknown weight label {lab!r}; valid labels are "
                  f"{', '.join(LABELS)}", file=sys.stderr)
            return 2
    prod = fusion(args.left, args.right)
    print(" + ".join(("" if prod[lab] == 1 else f"{prod[lab]}*") + lab
                     for lab in LABELS if lab in prod))
    return 0


def _cmd_verify(args) -> int:
    if args.check:
        cid = ALIASES.get(args.check, args.check)
        if cid not in CHECK_IDS:
            print(f"unknown check id {args.check!r}; valid ids are "
                  f"{', '.join(CHECK_IDS)}", file=sys.stderr)
            return 2
        results = [run_check(cid)]
    else:
        results = verify_all()
    if args.report == "json":
        print(json.dumps([r.to_json() for r in results], indent=2))
    else:
        for r in results:
            print(f"{r.check_id}: {r.status}")
            if r.status != "pass":
                print(f"  expected: {r.expected}")
                print(f"  actual:   {r.actual}")
    return 0 if all(r.status == "pass" for r in results) else 1


# ----------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fk3double",
        description="exact-arithmetic workbench for the graded modules of "
                    "the Drinfeld double over the rank-3 Nichols algebra")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build a catalog module")
    p.add_argument("key")
    p.add_argument("--json", metavar="PATH",
                   help="also write the module to PATH as JSON")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("char", help="print a module's graded character")
    p.add_argument("key")
    p.set_defaults(func=_cmd_char)

    p = sub.add_parser("tensor", help="tensor two catalog modules")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--decompose", action="store_true",
                   help="split into indecomposables and name the summands")
    p.set_defaults(func=_cmd_tensor)

    p = sub.add_parser("socle", help="socle of a catalog module")
    p.add_argument("key")
    p.add_argument("--filtration", action="store_true",
                   help="print the full socle filtration")
    p.set_defaults(func=_cmd_socle)

    p = sub.add_parser("dual", help="identify the graded dual of a module")
    p.add_argument("key")
    p.set_defaults(func=_cmd_dual)

    p = sub.add_parser("ext", help="first extension groups between simples")
    p.add_argument("--matrix", action="store_true",
                   help="print the full 8x8 table")
    p.set_defaults(func=_cmd_ext)

    p = sub.add_parser("fusion", help="fuse two weight labels")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=_cmd_fusion)

    p = sub.add_parser("verify", help="run the published-claim checks")
    p.add_argument("--all", action="store_true",
                   help="run every check (the default)")
    p.add_argument("--check", metavar="ID",
                   help="run a single check by id")
    p.add_argument("--report", choices=("text", "json"), default="text",
                   help="output format")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
