"""Character arithmetic, filtration series, and direct-sum decomposition.

Characters live in the graded fusion ring: formal sums of (degree, weight
label) pairs with integer multiplicities, multiplied through the fusion
products of the weight modules.  Module-level structure (socles, radicals,
splittings) is computed from graded hom spaces; every decomposition is
certified by explicit idempotents or split pairs, never read off a
character alone.
"""

from __future__ import annotations

import random
from collections import Counter
from fractions import Fraction

import sympy

from .gmodule import GModule
from .homs import end_space, hom_space, weight_split
from .linalg import Mat, inverse, kernel, rank, solve
from .scalars import ONE, Scalar, ZERO, ZETA
from .weights import DIMS, LABELS, weight


class Inconclusive(RuntimeError):
    """A structural question the implemented certificates cannot settle."""


# ----------------------------------------------------------------------
# fusion products of weight labels

_fusion_cache: dict[tuple[str, str], dict[str, int]] = {}


def fusion(a: str, b: str) -> dict[str, int]:
    """Multiplicities of weight labels in the product of two weights."""
    key = (a, b)
    cached = _fusion_cache.get(key)
    if cached is None:
        prod = weight(a).tensor(weight(b))
        layer = weight_split(prod)[0]
        cached = dict(Counter(label for label, _ in layer.copies))
        _fusion_cache[key] = cached
    return cached


# ----------------------------------------------------------------------
# graded characters


class GradedChar:
    """An element of the graded fusion ring: {(z, label): multiplicity}."""

    __slots__ = ("data",)

    def __init__(self, data: dict | None = None):
        self.data = {k: v for k, v in (data or {}).items() if v != 0}

    @staticmethod
    def from_module(mod: GModule) -> "GradedChar":
        out: dict = {}
        for z, layer in weight_split(mod).items():
            for label, _ in layer.copies:
                out[(z, label)] = out.get((z, label), 0) + 1
        return GradedChar(out)

    @staticmethod
    def of_weight(label: str, z: int = 0) -> "GradedChar":
        return GradedChar({(z, label): 1})

    def __add__(self, other: "GradedChar") -> "GradedChar":
        out = dict(self.data)
        for k, v in other.data.items():
            out[k] = out.get(k, 0) + v
        return GradedChar(out)

    def __sub__(self, other: "GradedChar") -> "GradedChar":
        out = dict(self.data)
        for k, v in other.data.items():
            out[k] = out.get(k, 0) - v
        return GradedChar(out)

    def __neg__(self) -> "GradedChar":
        return GradedChar({k: -v for k, v in self.data.items()})

    def scale(self, n: int) -> "GradedChar":
        return GradedChar({k: n * v for k, v in self.data.items()})

    def shift(self, k: int) -> "GradedChar":
        return GradedChar({(z + k, label): v
                           for (z, label), v in self.data.items()})

    def conj(self) -> "GradedChar":
        """Character of the dual: degrees negate, weight labels are
        self-dual."""
        return GradedChar({(-z, label): v
                           for (z, label), v in self.data.items()})

    def __mul__(self, other: "GradedChar") -> "GradedChar":
        out: dict = {}
        for (z1, a), m1 in self.data.items():
            for (z2, b), m2 in other.data.items():
                for label, mult in fusion(a, b).items():
                    k = (z1 + z2, label)
                    out[k] = out.get(k, 0) + m1 * m2 * mult
        return GradedChar(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedChar):
            return NotImplemented
        return self.data == other.data

    def __bool__(self) -> bool:
        return bool(self.data)

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self.data.values())

    def dim(self) -> int:
        return sum(v * DIMS[label] for (_, label), v in self.data.items())

    def z_range(self) -> tuple[int, int]:
        zs = [z for z, _ in self.data]
        return (min(zs), max(zs)) if zs else (0, 0)

    def layer(self, z: int) -> dict[str, int]:
        return {label: v for (zz, label), v in self.data.items() if zz == z}

    def items(self):
        return sorted(self.data.items(),
                      key=lambda kv: (kv[0][0], LABELS.index(kv[0][1])))

    def to_json(self) -> list:
        return [[z, label, v] for (z, label), v in self.items()]

    @staticmethod
    def from_json(data: list) -> "GradedChar":
        return GradedChar({(z, label): v for z, label, v in data})

    def __str__(self) -> str:
        if not self.data:
            return "0"
        parts = []
        for (z, label), v in self.items():
            factor = "" if z == 0 else f"t^{z}*"
            coeff = "" if v == 1 else f"{v}*"
            parts.append(f"{coeff}{factor}{label}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"GradedChar({self})"


def peel(char: GradedChar, table: dict) -> dict | None:
    """Write a character in a triangular basis, peeling from the top degree.

    table maps a weight label to (key, offset, basis GradedChar): an entry
    (z, label) at the current top degree is claimed by `mult` copies of
    `key` shifted by z - offset.  Returns {(key, shift): mult} or None when
    the residual develops a negative or unclaimable entry.
    """
    residual = GradedChar(dict(char.data))
    out: dict = {}
    while residual:
        top = max(z for z, _ in residual.data)
        for label, mult in sorted(residual.layer(top).items()):
            if mult < 0 or label not in table:
                return None
            key, offset, kchar = table[label]
            shift = top - offset
            out[(key, shift)] = out.get((key, shift), 0) + mult
            residual = residual - kchar.shift(shift).scale(mult)
        if residual and max(z for z, _ in residual.data) >= top:
            return None  # the table is not triangular from above
    return out


# ----------------------------------------------------------------------
# socle and radical series


def shift_range(inner: GModule, outer: GModule) -> range:
    """Shifts k for which inner[k] fits inside outer's degree span."""
    i0, i1 = inner.z_range()
    o0, o1 = outer.z_range()
    return range(o0 - i0, o1 - i1 + 1)


def socle_layer(mod: GModule, simples) -> tuple[list, list]:
    """Socle content of mod against a list of (name, module) simples.

    Returns (found, generators): found lists (name, shift, multiplicity),
    generators span the socle.
    """
    found = []
    gens: list[dict] = []
    for name, simple in simples:
        for k in shift_range(simple, mod):
            maps = hom_space(simple.shift(k), mod)
            if maps:
                found.append((name, k, len(maps)))
                for f in maps:
                    gens.extend(f.cols.values())
    return sorted(found), gens


def socle_series(mod: GModule, simples) -> list[list]:
    """Socle filtration layers, bottom first, as (name, shift, mult) lists."""
    out = []
    cur = mod
    while cur.dim:
        found, gens = socle_layer(cur, simples)
        if not gens:
            raise RuntimeError(
                f"{cur.name}: nonzero module with no socle against the "
                f"given simples")
        out.append(found)
        spans = cur.submodule_spans(gens)
        cur, _ = cur.quotient(spans, f"{cur.name}/s{len(out)}")
    return out


def head_layer(mod: GModule, simples) -> tuple[list, list]:
    """Head content of mod and generators of its radical.

    Returns (found, radical generators); found lists (name, shift, mult) of
    the semisimple quotient mod/rad.
    """
    found = []
    row_offset = 0
    entries = []
    for name, simple in simples:
        for k in shift_range(simple, mod):
            maps = hom_space(mod, simple.shift(k))
            if maps:
                found.append((name, k, len(maps)))
            for f in maps:
                for c, column in f.cols.items():
                    for r, v in column.items():
                        entries.append((row_offset + r, c, v))
                row_offset += f.nrows
    stacked = Mat.from_entries(row_offset, mod.dim, entries)
    rad_gens = kernel(stacked)
    return sorted(found), rad_gens


def radical_series(mod: GModule, simples) -> list[list]:
    """Radical filtration layers, head first, as (name, shift, mult) lists."""
    out = []
    cur = mod
    while cur.dim:
        found, rad_gens = head_layer(cur, simples)
        if not found:
            raise RuntimeError(
                f"{cur.name}: nonzero module with no head against the "
                f"given simples")
        out.append(found)
        sub, _ = cur.submodule(rad_gens, f"r{len(out)}({mod.name})")
        if sub.dim >= cur.dim:
            raise RuntimeError(f"{cur.name}: radical failed to shrink")
        cur = sub
    return out


# ----------------------------------------------------------------------
# indecomposability and splitting

def _gram_rank(ends: list[Mat]) -> int:
    """Rank of the trace form on an endomorphism space.

    Over a field of characteristic zero the kernel of the trace form is the
    radical, so this rank is the dimension of the semisimple quotient.
    """
    n = len(ends)
    products = {}
    entries = []
    for i in range(n):
        for j in range(i, n):
            t = (ends[i] * ends[j]).trace()
            if not t.is_zero():
                entries.append((i, j, t))
                if i != j:
                    entries.append((j, i, t))
    return rank(Mat.from_entries(n, n, entries))


def end_residue_dim(mod: GModule) -> int:
    """Dimension of End(mod) modulo its radical."""
    ends = end_space(mod)
    if not ends:
        raise ValueError(f"{mod.name}: zero module")
    return _gram_rank(ends)


def is_indecomposable(mod: GModule) -> bool:
    """True when End(mod) is local with scalar residue field.

    This is a certificate: a True answer proves indecomposability.
    """
    ends = end_space(mod)
    if len(ends) == 1:
        return True
    return _gram_rank(ends) == 1


_ZETA_EXPR = (sympy.Integer(-1) + sympy.sqrt(-3)) / 2
_ALG_DOMAIN = sympy.QQ.algebraic_field(sympy.sqrt(-3))


def _scalar_to_sympy(s: Scalar):
    a = sympy.Rational(int(s.a.numerator), int(s.a.denominator))
    b = sympy.Rational(int(s.b.numerator), int(s.b.denominator))
    return a + b * _ZETA_EXPR


def _roots_in_field(coeffs: list[Scalar]) -> list[Scalar]:
    """Roots, inside the coefficient field, of the monic polynomial
    x^d + coeffs[d-1] x^(d-1) + ... + coeffs[0]."""
    x = sympy.Symbol("x")
    expr = x ** len(coeffs)
    for i, c in enumerate(coeffs):
        expr += _scalar_to_sympy(c) * x ** i
    poly = sympy.Poly(sympy.expand(expr), x, domain=_ALG_DOMAIN)
    roots = []
    for fac, _ in poly.factor_list()[1]:
        if fac.degree() != 1:
            continue
        root = sympy.expand(-fac.nth(0) / fac.nth(1))
        a = sympy.nsimplify(sympy.re(root))
        b = sympy.nsimplify(sympy.im(root) / sympy.sqrt(3))
        if not (a.is_rational and b.is_rational):
            raise Inconclusive(f"root {root} not recognized in the field")
        # a + b*i*sqrt(3) = (a + b) + 2b * zeta
        p, q = sympy.Rational(a + b), sympy.Rational(2 * b)
        roots.append(Scalar(Fraction(int(p.p), int(p.q)),
                            Fraction(int(q.p), int(q.q))))
    return roots


def _residue_minpoly(u: Mat, ends: list[Mat]) -> list[Scalar]:
    """Minimal polynomial of u modulo the radical of the span of ends.

    Returns the low coefficients [p_0, ..., p_{d-1}] of the monic
    polynomial x^d + p_{d-1} x^{d-1} + ... + p_0 of least degree that kills
    u modulo the radical, detected through the trace form against every
    basis endomorphism.
    """
    powers = [Mat.identity(u.nrows)]
    traces: list[list[Scalar]] = []  # traces[i][k] = tr(u^i * ends[k])
    for d in range(1, len(ends) + 2):
        traces.append([(powers[-1] * e).trace() for e in ends])
        powers.append(powers[-1] * u)
        target_tr = [(powers[d] * e).trace() for e in ends]
        entries = []
        rhs = {}
        for k in range(len(ends)):
            for i in range(d):
                t = traces[i][k]
                if not t.is_zero():
                    entries.append((k, i, t))
            if not target_tr[k].is_zero():
                rhs[k] = target_tr[k]
        sol = solve(Mat.from_entries(len(ends), d, entries), rhs)
        if sol is not None:
            # solved u^d = sum sol[i] u^i, so the monic coefficients negate
            return [-sol.get(i, ZERO) for i in range(d)]
    raise Inconclusive("no minimal polynomial within the expected degree")


def _poly_divide_linear(coeffs: list[Scalar], root: Scalar) -> list[Scalar]:
    """Divide a polynomial by (x - root) with synthetic division.

    coeffs is the full list [p_0, ..., p_d]; the remainder is dropped, so
    the root should actually be one.  Returns [q_0, ..., q_{d-1}].
    """
    d = len(coeffs) - 1
    quotient = [ZERO] * d
    quotient[d - 1] = coeffs[d]
    for i in range(d - 1, 0, -1):
        quotient[i - 1] = coeffs[i] + root * quotient[i]
    return quotient


def _eval_poly_mat(coeffs: list[Scalar], u: Mat) -> Mat:
    """Evaluate sum_i coeffs[i] * u^i."""
    out = Mat(u.nrows, u.ncols)
    power = Mat.identity(u.nrows)
    for i, c in enumerate(coeffs):
        if not c.is_zero():
            out = out + power.scale(c)
        if i + 1 < len(coeffs):
            power = power * u
    return out


def _eval_poly_scalar(coeffs: list[Scalar], v: Scalar) -> Scalar:
    out = ZERO
    power = ONE
    for c in coeffs:
        out = out + c * power
        power = power * v
    return out


def _candidate_elements(ends: list[Mat]):
    for e in ends:
        yield e
    n = len(ends)
    for i in range(n):
        for j in range(i + 1, n):
            yield ends[i] + ends[j]
    for i in range(n):
        for j in range(i + 1, n):
            yield ends[i] + ends[j].scale(ZETA)
    # a fixed dense combination as a last resort
    total = Mat(ends[0].nrows, ends[0].ncols)
    for k, e in enumerate(ends):
        total = total + e.scale(Scalar(k + 2))
    yield total


def find_idempotent(mod: GModule, ends: list[Mat] | None = None) -> Mat:
    """A nontrivial idempotent endomorphism of a decomposable module.

    Finds an endomorphism whose residue has a root in the field, builds the
    interpolation idempotent modulo the radical, and lifts it with Newton
    iteration (e -> 3e^2 - 2e^3).  Raises Inconclusive if no candidate
    splits, which for a decomposable module with scalar residue blocks
    should not happen.
    """
    if ends is None:
        ends = end_space(mod)
    ident = Mat.identity(mod.dim)
    for u in _candidate_elements(ends):
        minpoly = _residue_minpoly(u, ends)
        if len(minpoly) < 2:
            continue  # scalar residue, cannot split along this element
        roots = _roots_in_field(minpoly)
        for root in roots:
            quotient = _poly_divide_linear(minpoly + [ONE], root)
            denom = _eval_poly_scalar(quotient, root)
            if denom.is_zero():
                continue  # repeated root; residue was not semisimple here
            e = _eval_poly_mat([c * denom.inverse() for c in quotient], u)
            # Newton lifting squares the radical error each step, so the
            # iteration count only needs to cover log2 of the nilpotency
            # index; a wrong seed diverges fast, hence the tight cap.
            for _ in range(8):
                e2 = e * e
                if e2 == e:
                    break
                e = e2 * (ident.scale(Scalar(3)) - e.scale(Scalar(2)))
            else:
                continue
            if e.is_zero() or e == ident:
                continue
            return e
    raise Inconclusive(f"{mod.name}: no splitting idempotent found")


def split_once(mod: GModule) -> tuple[GModule, GModule] | None:
    """Split off one direct summand, or return None when mod is certified
    indecomposable."""
    ends = end_space(mod)
    if len(ends) == 1 or _gram_rank(ends) == 1:
        return None
    e = find_idempotent(mod, ends)
    rest = Mat.identity(mod.dim) - e
    part1, _ = mod.submodule(list(e.cols.values()), f"{mod.name}.a")
    part2, _ = mod.submodule(list(rest.cols.values()), f"{mod.name}.b")
    if part1.dim + part2.dim != mod.dim:
        raise RuntimeError(
            f"{mod.name}: idempotent split lost dimensions "
            f"({part1.dim} + {part2.dim} != {mod.dim})")
    return part1, part2


def decompose(mod: GModule) -> list[GModule]:
    """Split into indecomposable summands, each certified by a local
    endomorphism ring."""
    stack = [mod]
    out = []
    while stack:
        cur = stack.pop()
        if cur.dim == 0:
            continue
        parts = split_once(cur)
        if parts is None:
            out.append(cur)
        else:
            stack.extend(parts)
    out.sort(key=lambda m: (-m.dim, m.z_range(), m.name))
    return out


def peel_off(mod: GModule, cand: GModule, rest_name: str | None = None
             ) -> GModule | None:
    """Split one copy of cand off mod; returns the complement or None.

    A None answer is only conclusive when cand is indecomposable with
    scalar residue, which holds for everything in the catalog.
    """
    maps_in = hom_space(cand, mod)
    if not maps_in:
        return None
    maps_out = hom_space(mod, cand)
    for f in maps_in:
        for g in maps_out:
            gf = g * f
            if rank(gf) == cand.dim:
                e = f * inverse(gf) * g
                rest = Mat.identity(mod.dim) - e
                sub, _ = mod.submodule(list(rest.cols.values()),
                                       rest_name or f"{mod.name}.rest")
                return sub
    return None


def iso_test(left: GModule, right: GModule, *,
             assume_indecomposable: bool = False) -> bool:
    """Decide graded isomorphism.

    True answers come with an explicit invertible map; False answers are
    certified through characters or, for indecomposables with scalar
    residue, through the vanishing of all split pairings.
    """
    if GradedChar.from_module(left) != GradedChar.from_module(right):
        return False
    if left.dim == 0:
        return True
    maps = hom_space(left, right)
    if not maps:
        return False
    for f in maps:
        if rank(f) == left.dim:
            return True
    if assume_indecomposable:
        return False
    # Both sides may be decomposable, in which case an isomorphism can be
    # a combination of several basis maps.  Invertible combinations form a
    # dense open set whenever one exists, so a few seeded random
    # combinations find one.
    rng = random.Random(1729)
    for _ in range(12):
        combo = Mat(left.dim, left.dim)
        for f in maps:
            c = Scalar(rng.randrange(-3, 4), rng.randrange(-3, 4))
            if not c.is_zero():
                combo = combo + f.scale(c)
        if rank(combo) == left.dim:
            return True
    back = hom_space(right, left)
    for f in maps:
        for g in back:
            if rank(g * f) == left.dim:
                return True
    if is_indecomposable(left) and is_indecomposable(right):
        return False
    raise Inconclusive(
        f"no invertible map found between {left.name} and {right.name} "
        f"and neither is certified indecomposable")
