"""Dense exact linear algebra over a field: RREF, rank, kernel, solve.

All routines are pure functions on immutable inputs and fully
deterministic: the pivot in each column is the first nonzero entry
scanning top to bottom (magnitude pivoting is pointless over exact
fields), and kernel bases are echelon-normalized so identical inputs
always yield identical outputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatchError


class Matrix:
    """A rows x cols matrix with entries in one field, stored row-major."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field, rows, ncols: int | None = None):
        data = [[field.coerce(v) for v in row] for row in rows]
        if data:
            widths = {len(r) for r in data}
            if len(widths) != 1:
                raise DimensionMismatchError("rows have unequal lengths")
            width = widths.pop()
            if ncols is not None and ncols != width:
                raise DimensionMismatchError(f"expected {ncols} columns, rows have {width}")
            ncols = width
        elif ncols is None:
            raise DimensionMismatchError("empty matrix needs an explicit column count")
        self.field = field
        self.nrows = len(data)
        self.ncols = ncols
        self.rows = data

    @classmethod
    def identity(cls, field, n: int) -> "Matrix":
        one, zero = field.one, field.zero
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)], n)

    @classmethod
    def zero(cls, field, nrows: int, ncols: int) -> "Matrix":
        z = field.zero
        return cls(field, [[z] * ncols for _ in range(nrows)], ncols)

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def apply(self, vec) -> list:
        """Matrix-vector product m . v."""
        if len(vec) != self.ncols:
            raise DimensionMismatchError(f"vector length {len(vec)} != {self.ncols} columns")
        f = self.field
        v = [f.coerce(x) for x in vec]
        out = []
        for row in self.rows:
            acc = f.zero
            for a, x in zip(row, v):
                acc = f.add(acc, f.mul(a, x))
            out.append(acc)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and other.field == self.field
            and other.ncols == self.ncols
            and other.rows == self.rows
        )

    def __repr__(self):
        return f"Matrix({self.field!r}, {self.nrows}x{self.ncols})"


@dataclass
class LinearSolution:
    """One solution of m.x = rhs together with the kernel of m."""

    particular: list
    kernel: list


def rref(m: Matrix) -> tuple[Matrix, int, list[int]]:
    """Reduced row echelon form; returns (rref, rank, pivot columns)."""
    field = m.field
    rows = [list(r) for r in m.rows]
    nrows, ncols = m.nrows, m.ncols
    zero, one = field.zero, field.one
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = None
        for i in range(r, nrows):
            if rows[i][c] != zero:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        if pv != one:
            rows[r] = field.row_scale(rows[r], field.inv(pv))
        for i in range(nrows):
            if i != r and rows[i][c] != zero:
                rows[i] = field.row_sub_scaled(rows[i], rows[i][c], rows[r])
        pivots.append(c)
        r += 1
    return Matrix(field, rows, ncols), len(pivots), pivots


def _kernel_from_rref(field, reduced_rows, ncols: int, pivots: list[int]) -> list[list]:
    """Canonical kernel basis read off an RREF; echelon-normalized."""
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    if not free:
        return []
    zero, one = field.zero, field.one
    vecs = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for i, pc in enumerate(pivots):
            e = reduced_rows[i][f]
            if e != zero:
                v[pc] = field.neg(e)
        vecs.append(v)
    # Normalize the basis itself to reduced echelon form so the output is
    # a canonical function of the span, not of the free-column ordering.
    reduced, rank, _ = rref(Matrix(field, vecs, ncols))
    return [list(row) for row in reduced.rows[:rank]]


def kernel(m: Matrix) -> list[list]:
    """Canonical basis of the right null space; empty list if trivial."""
    reduced, _, pivots = rref(m)
    return _kernel_from_rref(m.field, reduced.rows, m.ncols, pivots)


def solve(m: Matrix, rhs) -> LinearSolution | None:
    """Solve m.x = rhs; returns None when the system is inconsistent."""
    if len(rhs) != m.nrows:
        raise DimensionMismatchError(f"rhs length {len(rhs)} != {m.nrows} rows")
    field = m.field
    b = [field.coerce(v) for v in rhs]
    aug = Matrix(field, [row + [v] for row, v in zip(m.rows, b)], m.ncols + 1)
    reduced, _, pivots = rref(aug)
    if m.ncols in pivots:
        return None
    particular = [field.zero] * m.ncols
    for i, pc in enumerate(pivots):
        particular[pc] = reduced.rows[i][m.ncols]
    # With no pivot in the augmented column, the left block of the RREF is
    # exactly the RREF of m, so the kernel can be read off directly.
    left = [row[: m.ncols] for row in reduced.rows]
    return LinearSolution(particular, _kernel_from_rref(field, left, m.ncols, pivots))
