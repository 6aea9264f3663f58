"""Exact linear algebra over the rationals.

All computations use `fractions.Fraction`, so every result is exact and the
identities asserted elsewhere in the package (inverses, rank counts,
alternating sums) hold as equalities rather than approximations.

Determinants of integer matrices are computed by fraction-free Bareiss
elimination, which keeps all intermediates integral and bounds coefficient
swell; rational matrices fall back to ordinary Gaussian elimination.  The
pivot is always the first nonzero entry in column order, so every output is
deterministic.

Everything here is a pure function over immutable matrices and is safe to
call concurrently.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Scalar = int | Fraction
Vector = tuple[Fraction, ...]


class Matrix:
    """Immutable dense matrix with exact rational entries, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[Scalar]], cols: int | None = None):
        grid = tuple(tuple(Fraction(x) for x in row) for row in entries)
        width = len(grid[0]) if grid else (0 if cols is None else cols)
        for row in grid:
            if len(row) != width:
                raise ValueError("rows of unequal length")
        if cols is not None and cols != width:
            raise ValueError(f"expected {cols} columns, got {width}")
        self.entries: tuple[Vector, ...] = grid
        self.rows: int = len(grid)
        self.cols: int = width

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Scalar]], rows: int | None = None) -> "Matrix":
        if columns:
            rows = len(columns[0]) if rows is None else rows
            if any(len(c) != rows for c in columns):
                raise ValueError("columns of unequal length")
            return cls([[columns[j][i] for j in range(len(columns))] for i in range(rows)],
                       len(columns))
        if rows is None:
            raise ValueError("row count required for a matrix with no columns")
        return cls([[] for _ in range(rows)], 0)

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def col(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[Vector]:
        return [self.col(j) for j in range(self.cols)]

    def transpose(self) -> "Matrix":
        return Matrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)], self.rows)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_integer(self) -> bool:
        return all(x.denominator == 1 for row in self.entries for x in row)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def entry_sum(self) -> Fraction:
        return sum((x for row in self.entries for x in row), Fraction(0))

    def apply(self, vec: Sequence[Scalar]) -> Vector:
        """Matrix-vector product."""
        if len(vec) != self.cols:
            raise ValueError(f"vector of length {len(vec)}, expected {self.cols}")
        out = []
        for row in self.entries:
            acc = Fraction(0)
            for a, b in zip(row, vec):
                if a and b:
                    acc += a * Fraction(b)
            out.append(acc)
        return tuple(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)], self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)], self.cols)

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in row] for row in self.entries], self.cols)

    def __mul__(self, other: "Matrix | Scalar") -> "Matrix":
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
            cols = other.cols
            out = [[Fraction(0)] * cols for _ in range(self.rows)]
            for i, row in enumerate(self.entries):
                out_i = out[i]
                for k, a in enumerate(row):
                    if a:
                        other_k = other.entries[k]
                        for j in range(cols):
                            b = other_k[j]
                            if b:
                                out_i[j] += a * b
            return Matrix(out, cols)
        return Matrix([[a * Fraction(other) for a in row] for row in self.entries], self.cols)

    def __rmul__(self, other: Scalar) -> "Matrix":
        return self.__mul__(other)

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.entries)

    def __repr__(self) -> str:
        return f"Matrix({[list(map(str, row)) for row in self.entries]!r})"

    def _same_shape(self, other: "Matrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}")


def hstack(*mats: Matrix) -> Matrix:
    """Concatenate matrices left to right; all must share the row count."""
    if not mats:
        raise ValueError("nothing to stack")
    rows = mats[0].rows
    if any(m.rows != rows for m in mats):
        raise ValueError("row counts differ")
    cols = sum(m.cols for m in mats)
    return Matrix([sum((list(m.entries[i]) for m in mats), []) for i in range(rows)], cols)


def _reduce(rows: list[list[Fraction]], width: int) -> list[int]:
    """In-place reduced row echelon form; returns the pivot column indices."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(width):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = 1 / rows[r][c]
        if inv != 1:
            rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns."""
    work = [list(row) for row in m.entries]
    pivots = _reduce(work, m.cols)
    return Matrix(work, m.cols), tuple(pivots)


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def determinant(m: Matrix) -> Fraction:
    """Exact determinant; Bareiss for integer input, Gaussian otherwise."""
    if not m.is_square():
        raise ValueError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    if m.rows == 0:
        return Fraction(1)
    if m.is_integer():
        return _bareiss_determinant([[x.numerator for x in row] for row in m.entries])
    return _gauss_determinant([list(row) for row in m.entries])


def _bareiss_determinant(grid: list[list[int]]) -> Fraction:
    n = len(grid)
    sign = 1
    prev = 1
    for k in range(n - 1):
        pivot_row = None
        for r in range(k, n):
            if grid[r][k]:
                pivot_row = r
                break
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != k:
            grid[k], grid[pivot_row] = grid[pivot_row], grid[k]
            sign = -sign
        pk = grid[k][k]
        row_k = grid[k]
        for i in range(k + 1, n):
            row_i = grid[i]
            gik = row_i[k]
            for j in range(k + 1, n):
                # exact division: Bareiss invariant
                row_i[j] = (row_i[j] * pk - gik * row_k[j]) // prev
            row_i[k] = 0
        prev = pk
    return Fraction(sign * grid[n - 1][n - 1])


def _gauss_determinant(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    det = Fraction(1)
    for k in range(n):
        pivot_row = None
        for r in range(k, n):
            if rows[r][k]:
                pivot_row = r
                break
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != k:
            rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
            det = -det
        p = rows[k][k]
        det *= p
        for i in range(k + 1, n):
            if rows[i][k]:
                f = rows[i][k] / p
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[k])]
    return det


def invert(m: Matrix) -> Matrix | None:
    """Exact inverse, or None when the matrix is singular."""
    if not m.is_square():
        raise ValueError(f"inverse of non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    work = [list(row) + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
            for i, row in enumerate(m.entries)]
    pivots = _reduce(work, 2 * n)
    if tuple(pivots) != tuple(range(n)):
        return None
    return Matrix([row[n:] for row in work], n)


def solve(m: Matrix, rhs: Matrix) -> Matrix | None:
    """One exact solution of m·x = rhs (free variables zero), or None.

    Returns None when the system is inconsistent.  With multiple right-hand
    side columns, solves them all simultaneously.
    """
    if m.rows != rhs.rows:
        raise ValueError(f"matrix has {m.rows} rows but right-hand side has {rhs.rows}")
    work = [list(a) + list(b) for a, b in zip(m.entries, rhs.entries)] if m.rows else []
    pivots = _reduce(work, m.cols + rhs.cols)
    if any(p >= m.cols for p in pivots):
        return None
    out = [[Fraction(0)] * rhs.cols for _ in range(m.cols)]
    for r, p in enumerate(pivots):
        out[p] = list(work[r][m.cols:])
    return Matrix(out, rhs.cols)


def kernel_basis(m: Matrix) -> list[Vector]:
    """Basis of the right null space; empty iff full column rank.

    One vector per free column of the reduced row echelon form, scaled so
    the first nonzero coordinate is 1.
    """
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis: list[Vector] = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * m.cols
        vec[free] = Fraction(1)
        for r, p in enumerate(pivots):
            vec[p] = -reduced.entries[r][free]
        lead = next(x for x in vec if x)
        basis.append(tuple(x / lead for x in vec))
    return basis


def column_space_basis(m: Matrix) -> list[Vector]:
    """The pivot columns of m: a deterministic basis of its column space."""
    return [m.col(p) for p in rref(m)[1]]
