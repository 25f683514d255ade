"""Graded hom spaces between modules, one degree layer at a time.

Every z-layer of a module is semisimple over the degree-zero subalgebra, so
it splits into weight copies.  Each weight label is pinned down by eigenvalue
conditions on a group element inside a single S3-degree block (the seed);
the rest of the copy is swept out by fixed group words.  A module map sends
seeds to same-labelled seeds and therefore copies to copies position by
position, which reduces Hom(M, N) to a small linear system: one unknown per
pair of same-labelled copies in the same degree, constrained by commutation
with the two letter actions x12 and y12.  Commutation with the group actions
holds by construction, and the remaining letters follow by equivariance.
"""

from __future__ import annotations

from .gmodule import GModule
from .linalg import Mat, inverse, kernel
from .perms import T12
from .weights import DIMS, LABELS, SEEDS


class LayerSplit:
    """Weight decomposition of one z-layer.

    copies: list of (label, vectors); vectors is the embedded weight basis,
    as sparse dicts over module coordinates.  duals: matching flat list of
    coordinate functionals (also sparse dicts over module coordinates), one
    per (copy, position) in copy-major order.
    """

    __slots__ = ("z", "copies", "duals", "offsets")

    def __init__(self, z: int, copies: list, duals: list):
        self.z = z
        self.copies = copies
        self.duals = duals
        self.offsets = []
        total = 0
        for label, _ in copies:
            self.offsets.append(total)
            total += DIMS[label]

    def dual(self, copy_index: int, position: int) -> dict:
        return self.duals[self.offsets[copy_index] + position]


def _split_layer(mod: GModule, z: int, indices: list[int]) -> LayerSplit:
    copies: list[tuple[str, list[dict]]] = []
    for label in LABELS:
        seed_deg, conditions, words = SEEDS[label]
        block = [i for i in indices if mod.basis[i].s3 is seed_deg]
        if not block:
            continue
        pos = {i: p for p, i in enumerate(block)}
        entries = []
        for ci, (g, eig) in enumerate(conditions):
            t = mod.T(g)
            base = ci * len(block)
            for p, i in enumerate(block):
                for r, v in t.cols.get(i, {}).items():
                    entries.append((base + pos[r], p, v))
                entries.append((base + p, p, -eig))
        mat = Mat.from_entries(len(conditions) * len(block), len(block),
                               entries)
        for seed_coords in kernel(mat):
            seed = {block[p]: v for p, v in seed_coords.items()}
            vectors = [seed]
            for word in words[1:]:
                vec = seed
                for g in word:
                    vec = mod.T(g).apply(vec)
                vectors.append(vec)
            copies.append((label, vectors))

    total = sum(DIMS[label] for label, _ in copies)
    if total != len(indices):
        raise RuntimeError(
            f"layer z={z} of {mod.name}: weight copies cover {total} "
            f"of {len(indices)} dimensions")

    # The embedded vectors are homogeneous in S3-degree, so the change of
    # basis is block diagonal over the degree blocks; invert each block.
    flat = []  # (flat position, vector, its S3 degree)
    offset = 0
    for label, vectors in copies:
        for vec in vectors:
            deg = mod.basis[next(iter(vec))].s3
            flat.append((offset, vec, deg))
            offset += 1
    duals: list[dict] = [{} for _ in flat]
    degrees = {deg for _, _, deg in flat}
    for deg in degrees:
        rows = [i for i in indices if mod.basis[i].s3 is deg]
        cols = [(fp, vec) for fp, vec, d in flat if d is deg]
        if len(rows) != len(cols):
            raise RuntimeError(
                f"layer z={z} of {mod.name}: degree block {deg} has "
                f"{len(rows)} coordinates but {len(cols)} copy vectors")
        rowpos = {i: p for p, i in enumerate(rows)}
        m = Mat.from_entries(
            len(rows), len(cols),
            ((rowpos[i], c, v)
             for c, (_, vec) in enumerate(cols)
             for i, v in vec.items()))
        inv = inverse(m)
        for c, column in inv.cols.items():
            # row r of the inverse is the functional for cols[r]
            for r, v in column.items():
                duals[cols[r][0]][rows[c]] = v
    return LayerSplit(z, copies, duals)


def weight_split(mod: GModule) -> dict[int, LayerSplit]:
    """Split every z-layer of the module into weight copies (cached)."""
    cached = getattr(mod, "_weight_split", None)
    if cached is not None:
        return cached
    split = {}
    for z, indices in sorted(mod.z_layers().items()):
        split[z] = _split_layer(mod, z, sorted(indices))
    mod._weight_split = split
    return split


def hom_space(src: GModule, dst: GModule) -> list[Mat]:
    """Basis of the space of degree-preserving module maps src -> dst."""
    if src.dim == 0 or dst.dim == 0:
        return []
    s_split = weight_split(src)
    d_split = weight_split(dst)
    unknowns = []  # (z, src copy index, dst copy index)
    for z, slayer in s_split.items():
        dlayer = d_split.get(z)
        if dlayer is None:
            continue
        for si, (label, _) in enumerate(slayer.copies):
            for di, (dlabel, _) in enumerate(dlayer.copies):
                if dlabel == label:
                    unknowns.append((z, si, di))
    if not unknowns:
        return []

    basis_maps = []
    for z, si, di in unknowns:
        slayer, dlayer = s_split[z], d_split[z]
        label, _ = slayer.copies[si]
        entries = []
        for p in range(DIMS[label]):
            functional = slayer.dual(si, p)
            target = dlayer.copies[di][1][p]
            for c, cv in functional.items():
                for r, rv in target.items():
                    entries.append((r, c, rv * cv))
        basis_maps.append(Mat.from_entries(dst.dim, src.dim, entries))

    ops = [(src.X(T12), dst.X(T12)), (src.Y(T12), dst.Y(T12))]
    row_keys: dict = {}
    entries = []
    for u, gmap in enumerate(basis_maps):
        for oi, (op_s, op_d) in enumerate(ops):
            comm = op_d * gmap - gmap * op_s
            for c, column in comm.cols.items():
                for r, v in column.items():
                    rk = row_keys.setdefault((oi, r, c), len(row_keys))
                    entries.append((rk, u, v))
    mat = Mat.from_entries(len(row_keys), len(unknowns), entries)
    out = []
    for combo in kernel(mat):
        total = Mat(dst.dim, src.dim)
        for u, coeff in combo.items():
            total = total + basis_maps[u].scale(coeff)
        out.append(total)
    return out


def end_space(mod: GModule) -> list[Mat]:
    return hom_space(mod, mod)


def hom_dim(src: GModule, dst: GModule) -> int:
    return len(hom_space(src, dst))
