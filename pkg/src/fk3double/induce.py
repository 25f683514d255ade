"""Module construction by induction through the triangular decomposition.

A module N over the non-negative half (group, projections, raising letters)
induces to the full algebra on the space B(V) (x) N: lowering letters act by
left multiplication on the word factor and raising letters are pushed through
the word with the frozen straightening table.  The mirror construction
induces from the non-positive half on B(V-bar) (x) N.

Vermas are the special case where N is a weight; co-Vermas use the mirror;
the full induced module of a weight lambda is B(V) (x) B(V-bar) (x) lambda,
obtained by feeding the free lowest-half module into the lower builder.
"""

from __future__ import annotations

from . import _straightening_data, perms
from .gmodule import ACTION_KEYS, BasisVec, GModule
from .linalg import Mat
from .nichols import fk3, word_name, word_s3deg
from .perms import Perm, TRANSPOSITIONS
from .scalars import ONE, Scalar, ZERO
from .weights import weight


def _parse_table(raw) -> dict:
    table = {}
    for outer, head, swap, grp in raw:
        key = (perms.from_name(outer), perms.from_name(head))
        swap_terms = [(TRANSPOSITIONS.index(perms.from_name(w)),
                       perms.from_name(r), Scalar.from_json(c))
                      for w, r, c in swap]
        grp_terms = [(perms.from_name(g), perms.from_name(h),
                      Scalar.from_json(c)) for g, h, c in grp]
        table[key] = (swap_terms, grp_terms)
    return table


_YX = None
_XY = None


def _tables() -> tuple[dict, dict]:
    global _YX, _XY
    if _YX is None:
        _YX = _parse_table(_straightening_data.YX)
        _XY = _parse_table(_straightening_data.XY)
    return _YX, _XY


def _induced(n_mod: GModule, name: str, upper: bool) -> GModule:
    """B(V) (x) N (lower half acts freely) or B(V-bar) (x) N (upper)."""
    nich = fk3()
    yx, xy = _tables()
    table = xy if upper else yx
    zdir = 1 if upper else -1
    letter = "y" if upper else "x"
    ndim = n_mod.dim

    def flat(w_pos: int, k: int) -> int:
        return w_pos * ndim + k

    basis = []
    for w in nich.basis:
        d = word_s3deg(w)
        for k, nv in enumerate(n_mod.basis):
            basis.append(BasisVec(f"{word_name(w, letter)}.{nv.name}",
                                  zdir * len(w) + nv.z, d * nv.s3))

    def word_mult(letter_idx: int, w_pos: int, k: int, coeff: Scalar,
                  out: dict) -> None:
        w = nich.basis[w_pos]
        for w2, c in nich._nf_cached((letter_idx,) + w):
            i = flat(nich.index[w2], k)
            s = out.get(i, ZERO) + coeff * c
            if s.is_zero():
                out.pop(i, None)
            else:
                out[i] = s

    def group_act(g: Perm, w_pos: int, k: int, coeff: Scalar,
                  out: dict) -> None:
        w = nich.basis[w_pos]
        sign, moved = nich.conjugate_word(g, w)
        col = n_mod.T(g).cols.get(k, {})
        for w2, c in nich._nf_cached(moved):
            for k2, c2 in col.items():
                i = flat(nich.index[w2], k2)
                s = out.get(i, ZERO) + coeff * sign * c * c2
                if s.is_zero():
                    out.pop(i, None)
                else:
                    out[i] = s

    # the pushed-through letter, recursively straightened
    memo: dict = {}

    def push(t: Perm, w_pos: int, k: int) -> dict:
        key = (t, w_pos, k)
        cached = memo.get(key)
        if cached is not None:
            return cached
        w = nich.basis[w_pos]
        out: dict = {}
        if not w:
            base = n_mod.X(t) if upper else n_mod.Y(t)
            for k2, c in base.cols.get(k, {}).items():
                out[flat(0, k2)] = c
        else:
            head, rest = w[0], w[1:]
            rest_pos = nich.index[rest]
            swap_terms, grp_terms = table[(t, TRANSPOSITIONS[head])]
            for word_letter, rec_letter, c in swap_terms:
                for i, c2 in push(rec_letter, rest_pos, k).items():
                    word_mult(word_letter, i // ndim, i % ndim, c * c2, out)
            d_rest = word_s3deg(rest)
            for g, h, c in grp_terms:
                # g delta_h acting on (rest (x) n_k)
                if n_mod.basis[k].s3 == d_rest.inverse() * h:
                    group_act(g, rest_pos, k, c, out)
        memo[key] = out
        return out

    dim = nich.dim * ndim
    actions = {}
    for key in ACTION_KEYS:
        kind, g = key[0], perms.from_name(f"({key[1:]})")
        entries = []
        for w_pos in range(nich.dim):
            for k in range(ndim):
                col = flat(w_pos, k)
                out: dict = {}
                if kind == "t":
                    group_act(g, w_pos, k, ONE, out)
                elif (kind == "x") != upper:
                    word_mult(TRANSPOSITIONS.index(g), w_pos, k, ONE, out)
                else:
                    out = push(g, w_pos, k)
                entries.extend((i, col, v) for i, v in out.items())
        actions[key] = Mat.from_entries(dim, dim, entries)
    return GModule(name, basis, actions)


def induce_lower(n_mod: GModule, name: str) -> GModule:
    """B(V) (x) N for a module N over the non-negative half."""
    return _induced(n_mod, name, upper=False)


def induce_upper(n_mod: GModule, name: str) -> GModule:
    """B(V-bar) (x) N for a module N over the non-positive half."""
    return _induced(n_mod, name, upper=True)


def free_upper(label: str) -> GModule:
    """B(V-bar) (x) lambda as a module over the non-negative half: raising
    letters multiply the word, lowering letters act by zero."""
    nich = fk3()
    mu = weight(label)
    ndim = mu.dim

    basis = []
    for w in nich.basis:
        d = word_s3deg(w)
        for nv in mu.basis:
            basis.append(BasisVec(f"{word_name(w, 'y')}.{nv.name}",
                                  len(w) + nv.z, d * nv.s3))

    dim = nich.dim * ndim
    actions = {}
    for key in ACTION_KEYS:
        kind, g = key[0], perms.from_name(f"({key[1:]})")
        entries = []
        for w_pos, w in enumerate(nich.basis):
            for k in range(ndim):
                col = w_pos * ndim + k
                if kind == "t":
                    sign, moved = nich.conjugate_word(g, w)
                    tcol = mu.T(g).cols.get(k, {})
                    for w2, c in nich._nf_cached(moved):
                        for k2, c2 in tcol.items():
                            entries.append((nich.index[w2] * ndim + k2, col,
                                            sign * c * c2))
                elif kind == "y":
                    letter = TRANSPOSITIONS.index(g)
                    for w2, c in nich._nf_cached((letter,) + w):
                        entries.append((nich.index[w2] * ndim + k, col, c))
        actions[key] = Mat.from_entries(dim, dim, entries)
    return GModule(f"free+({label})", basis, actions)


def verma(label: str) -> GModule:
    """Highest-weight induced module of the weight: B(V) (x) lambda."""
    return induce_lower(weight(label), f"M({label})")


def coverma(label: str) -> GModule:
    """Lowest-weight co-induced module: B(V-bar) (x) lambda."""
    return induce_upper(weight(label), f"W({label})")


def induced_from_weight(label: str) -> GModule:
    """The full induced module B(V) (x) B(V-bar) (x) lambda."""
    return induce_lower(free_upper(label), f"Ind({label})")
