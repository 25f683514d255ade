"""Sparse exact linear algebra over Q(z).

Vectors are plain dicts {index: Scalar} that never store zeros.  Matrices are
column-sparse.  Everything is Gaussian elimination over the field; there are
no numerical tolerances anywhere.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .scalars import ONE, ZERO, Scalar

# ----------------------------------------------------------------------
# sparse vectors


def vadd(u: dict, v: dict) -> dict:
    out = dict(u)
    for k, val in v.items():
        s = out.get(k, ZERO) + val
        if s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s
    return out


def vsub(u: dict, v: dict) -> dict:
    out = dict(u)
    for k, val in v.items():
        s = out.get(k, ZERO) - val
        if s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s
    return out


def vscale(c: Scalar, v: dict) -> dict:
    if c.is_zero():
        return {}
    return {k: c * val for k, val in v.items()}


def vaxpy(out: dict, c: Scalar, v: dict) -> None:
    """In place: out += c*v."""
    if c.is_zero():
        return
    for k, val in v.items():
        s = out.get(k, ZERO) + c * val
        if s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s


# ----------------------------------------------------------------------
# matrices


class Mat:
    """A sparse matrix over Q(z), stored column-major.

    cols maps a column index to the sparse dict of that column.  Empty
    columns are simply absent.
    """

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, cols: Optional[dict] = None):
        self.nrows = nrows
        self.ncols = ncols
        self.cols = cols if cols is not None else {}

    @staticmethod
    def from_entries(nrows: int, ncols: int, entries: Iterable) -> "Mat":
        """Build from (row, col, scalar) triples; repeated cells accumulate."""
        m = Mat(nrows, ncols)
        for row, col, val in entries:
            val = Scalar.coerce(val)
            if val.is_zero():
                continue
            column = m.cols.setdefault(col, {})
            s = column.get(row, ZERO) + val
            if s.is_zero():
                column.pop(row, None)
            else:
                column[row] = s
        for col in [c for c, column in m.cols.items() if not column]:
            del m.cols[col]
        return m

    @staticmethod
    def identity(n: int) -> "Mat":
        return Mat(n, n, {i: {i: ONE} for i in range(n)})

    def entry(self, row: int, col: int) -> Scalar:
        return self.cols.get(col, {}).get(row, ZERO)

    def entries(self):
        for col, column in self.cols.items():
            for row, val in column.items():
                yield row, col, val

    def is_zero(self) -> bool:
        return not self.cols

    def apply(self, v: dict) -> dict:
        """Matrix times sparse vector."""
        out: dict = {}
        for col, coeff in v.items():
            column = self.cols.get(col)
            if column:
                vaxpy(out, coeff, column)
        return out

    def __mul__(self, other: "Mat") -> "Mat":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = {}
        for col, column in other.cols.items():
            image = self.apply(column)
            if image:
                cols[col] = image
        return Mat(self.nrows, other.ncols, cols)

    def __add__(self, other: "Mat") -> "Mat":
        cols = {c: dict(col) for c, col in self.cols.items()}
        for c, col in other.cols.items():
            merged = cols.setdefault(c, {})
            for r, val in col.items():
                s = merged.get(r, ZERO) + val
                if s.is_zero():
                    merged.pop(r, None)
                else:
                    merged[r] = s
            if not merged:
                del cols[c]
        return Mat(self.nrows, self.ncols, cols)

    def __sub__(self, other: "Mat") -> "Mat":
        return self + other.scale(Scalar(-1))

    def __neg__(self) -> "Mat":
        return self.scale(Scalar(-1))

    def scale(self, c: Scalar) -> "Mat":
        c = Scalar.coerce(c)
        if c.is_zero():
            return Mat(self.nrows, self.ncols)
        return Mat(self.nrows, self.ncols,
                   {col: {r: c * v for r, v in column.items()}
                    for col, column in self.cols.items()})

    def transpose(self) -> "Mat":
        cols: dict = {}
        for col, column in self.cols.items():
            for row, val in column.items():
                cols.setdefault(row, {})[col] = val
        return Mat(self.ncols, self.nrows, cols)

    def rows(self) -> list[dict]:
        """The matrix as a list of sparse row dicts (length nrows)."""
        out: list[dict] = [{} for _ in range(self.nrows)]
        for col, column in self.cols.items():
            for row, val in column.items():
                out[row][col] = val
        return out

    def trace(self) -> Scalar:
        t = ZERO
        for col, column in self.cols.items():
            t = t + column.get(col, ZERO)
        return t

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return (self.nrows == other.nrows and self.ncols == other.ncols
                and (self - other).is_zero())

    def __repr__(self) -> str:
        return f"Mat({self.nrows}x{self.ncols}, {sum(len(c) for c in self.cols.values())} entries)"


# ----------------------------------------------------------------------
# elimination


class SpanBasis:
    """A growing subspace kept in fully reduced row-echelon form.

    rows maps pivot column -> row dict (with a 1 at the pivot and support
    only on non-pivot columns otherwise).  reduce() is deterministic: columns
    are eliminated in increasing order.
    """

    def __init__(self):
        self.rows: dict[int, dict] = {}

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, v: dict) -> dict:
        out = dict(v)
        for c in sorted(out.keys()):
            val = out.get(c)
            if val is None or val.is_zero():
                continue
            row = self.rows.get(c)
            if row is None:
                continue
            for cc, rv in row.items():
                s = out.get(cc, ZERO) - val * rv
                if s.is_zero():
                    out.pop(cc, None)
                else:
                    out[cc] = s
        return {k: v for k, v in out.items() if not v.is_zero()}

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def add(self, v: dict) -> bool:
        """Insert v; returns True if it enlarged the span."""
        res = self.reduce(v)
        if not res:
            return False
        pivot = min(res.keys())
        inv = res[pivot].inverse()
        row = {k: inv * val for k, val in res.items()}
        # keep full reduction: clear the new pivot column from existing rows
        for p, existing in self.rows.items():
            coeff = existing.get(pivot)
            if coeff is not None:
                for cc, rv in row.items():
                    s = existing.get(cc, ZERO) - coeff * rv
                    if s.is_zero():
                        existing.pop(cc, None)
                    else:
                        existing[cc] = s
        self.rows[pivot] = row
        return True

    def basis(self) -> list[dict]:
        """Rows in increasing pivot order."""
        return [self.rows[p] for p in sorted(self.rows)]

    def coordinates(self, v: dict) -> Optional[dict]:
        """Write v as a combination of basis rows; None if v is outside.

        Returns {pivot_col: coefficient} against the rows returned by
        basis(), keyed by pivot column.
        """
        out = dict(v)
        coords: dict[int, Scalar] = {}
        for c in sorted(out.keys()):
            val = out.get(c)
            if val is None or val.is_zero():
                continue
            row = self.rows.get(c)
            if row is None:
                continue
            coords[c] = val
            for cc, rv in row.items():
                s = out.get(cc, ZERO) - val * rv
                if s.is_zero():
                    out.pop(cc, None)
                else:
                    out[cc] = s
        if any(not val.is_zero() for val in out.values()):
            return None
        return coords


def rank(m: Mat) -> int:
    sb = SpanBasis()
    for col in m.cols.values():
        sb.add(col)
    return sb.dim


def kernel(m: Mat) -> list[dict]:
    """A basis of {x : m x = 0}, deterministic, one vector per free column."""
    sb = SpanBasis()
    for row in m.rows():
        sb.add(row)
    pivots = set(sb.rows.keys())
    basis = []
    for free in range(m.ncols):
        if free in pivots:
            continue
        vec = {free: ONE}
        for p, row in sb.rows.items():
            coeff = row.get(free)
            if coeff is not None:
                vec[p] = -coeff
        basis.append(vec)
    return basis


def solve(m: Mat, rhs: dict) -> Optional[dict]:
    """One solution x of m x = rhs, or None if inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    aug = m.ncols  # column index used for the right-hand side
    sb = SpanBasis()
    rows = m.rows()
    for i in range(m.nrows):
        row = dict(rows[i])
        val = rhs.get(i)
        if val is not None and not val.is_zero():
            row[aug] = val
        if row:
            sb.add(row)
    if aug in sb.rows:
        return None
    x: dict = {}
    for p, row in sb.rows.items():
        val = row.get(aug)
        if val is not None and not val.is_zero():
            x[p] = val
    return x


def inverse(m: Mat) -> Mat:
    """Inverse of a square matrix; raises ValueError if singular."""
    if m.nrows != m.ncols:
        raise ValueError("not square")
    n = m.nrows
    # eliminate on rows of [m | I]
    sb_rows: list[tuple[dict, dict]] = []  # (left part, right part), echelon
    for i in range(n):
        left = {}
        for col, column in m.cols.items():
            val = column.get(i)
            if val is not None:
                left[col] = val
        right = {i: ONE}
        for pleft, pright in sb_rows:
            pivot = min(pleft)
            coeff = left.get(pivot)
            if coeff is not None and not coeff.is_zero():
                for k, v in pleft.items():
                    s = left.get(k, ZERO) - coeff * v
                    if s.is_zero():
                        left.pop(k, None)
                    else:
                        left[k] = s
                for k, v in pright.items():
                    s = right.get(k, ZERO) - coeff * v
                    if s.is_zero():
                        right.pop(k, None)
                    else:
                        right[k] = s
        left = {k: v for k, v in left.items() if not v.is_zero()}
        if not left:
            raise ValueError("matrix is singular")
        pivot = min(left)
        inv = left[pivot].inverse()
        left = {k: inv * v for k, v in left.items()}
        right = {k: inv * v for k, v in right.items()}
        sb_rows.append((left, right))
    # back substitution
    sb_rows.sort(key=lambda pair: min(pair[0]))
    for i in range(n - 1, -1, -1):
        left_i, right_i = sb_rows[i]
        for j in range(i):
            left_j, right_j = sb_rows[j]
            pivot = min(left_i)
            coeff = left_j.get(pivot)
            if coeff is None or coeff.is_zero():
                continue
            for k, v in left_i.items():
                s = left_j.get(k, ZERO) - coeff * v
                if s.is_zero():
                    left_j.pop(k, None)
                else:
                    left_j[k] = s
            for k, v in right_i.items():
                s = right_j.get(k, ZERO) - coeff * v
                if s.is_zero():
                    right_j.pop(k, None)
                else:
                    right_j[k] = s
    cols: dict = {}
    for left, right in sb_rows:
        row_index = min(left)  # pivot column of m becomes row of the inverse
        for k, v in right.items():
            cols.setdefault(k, {})[row_index] = v
    return Mat(n, n, cols)
