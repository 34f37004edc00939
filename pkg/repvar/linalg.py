"""Exact dense linear algebra over Q(zeta_N) and over K[t, t^-1].

Rank and determinants use fraction-free (Bareiss) elimination; kernels and
linear solves use Gauss-Jordan reduction so kernel bases come out in a fixed
order (one vector per free column, free columns ascending).
"""
from __future__ import annotations

import logging
from itertools import combinations
from typing import Callable, Iterable, Sequence

from repvar.cyclotomic import DEFAULT_ORDER, CyclotomicNumber, Scalar, as_field, common_order
from repvar.errors import DimensionMismatch, DivisionByZero
from repvar.laurent import LaurentPoly, laurent_gcd

logger = logging.getLogger(__name__)

Vector = tuple[CyclotomicNumber, ...]


def _infer_order(values: Iterable, order: int | None, fallback: int = DEFAULT_ORDER) -> int:
    if order is not None:
        return order
    found = None
    for v in values:
        if isinstance(v, CyclotomicNumber):
            found = v.order if found is None else common_order(found, v.order)
    return fallback if found is None else found


class Matrix:
    """Immutable rows x cols matrix over Q(zeta_order), row-major."""

    __slots__ = ("rows", "cols", "entries", "order")

    def __init__(self, rows: int, cols: int, entries: Sequence[Scalar], order: int | None = None):
        if len(entries) != rows * cols:
            raise DimensionMismatch(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        order = _infer_order(entries, order)
        self.rows = rows
        self.cols = cols
        self.order = order
        self.entries = tuple(as_field(e, order) for e in entries)

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]], order: int | None = None) -> Matrix:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(len(rows), ncols, [e for r in rows for e in r], order)

    @classmethod
    def zeros(cls, rows: int, cols: int, order: int = DEFAULT_ORDER) -> Matrix:
        zero = CyclotomicNumber.zero(order)
        return cls(rows, cols, [zero] * (rows * cols), order)

    @classmethod
    def identity(cls, n: int, order: int = DEFAULT_ORDER) -> Matrix:
        return cls.diagonal([1] * n, order)

    @classmethod
    def diagonal(cls, values: Sequence[Scalar], order: int | None = None) -> Matrix:
        order = _infer_order(values, order)
        n = len(values)
        zero = CyclotomicNumber.zero(order)
        entries = [zero] * (n * n)
        for i, v in enumerate(values):
            entries[i * n + i] = v
        return cls(n, n, entries, order)

    @classmethod
    def column(cls, vector: Sequence[Scalar], order: int | None = None) -> Matrix:
        return cls(len(vector), 1, list(vector), order)

    @classmethod
    def unit(cls, n: int, i: int, j: int, order: int = DEFAULT_ORDER) -> Matrix:
        """Elementary matrix E_ij."""
        entries: list[Scalar] = [0] * (n * n)
        entries[i * n + j] = 1
        return cls(n, n, entries, order)

    # -- access -----------------------------------------------------------

    def __getitem__(self, index: tuple[int, int]) -> CyclotomicNumber:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column_vector(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[CyclotomicNumber]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    # -- arithmetic -------------------------------------------------------

    def _check_shape(self, other: Matrix) -> None:
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_shape(other)
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)], common_order(self.order, other.order))

    def __sub__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_shape(other)
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)], common_order(self.order, other.order))

    def __neg__(self) -> Matrix:
        return Matrix(self.rows, self.cols, [-a for a in self.entries], self.order)

    def __mul__(self, scalar) -> Matrix:
        if isinstance(scalar, Matrix):
            return NotImplemented
        if isinstance(scalar, LaurentPoly):
            return NotImplemented
        order = common_order(self.order, scalar.order) if isinstance(scalar, CyclotomicNumber) else self.order
        return Matrix(self.rows, self.cols, [a * scalar for a in self.entries], order)

    __rmul__ = __mul__

    def __matmul__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        order = common_order(self.order, other.order)
        zero = CyclotomicNumber.zero(order)
        out = []
        other_cols = [other.column_vector(j) for j in range(other.cols)]
        for i in range(self.rows):
            row = self.row(i)
            for col in other_cols:
                acc = zero
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                out.append(acc)
        return Matrix(self.rows, other.cols, out, order)

    def apply(self, vector: Sequence[CyclotomicNumber]) -> Vector:
        if len(vector) != self.cols:
            raise DimensionMismatch(f"vector of length {len(vector)} for {self.shape} matrix")
        zero = CyclotomicNumber.zero(self.order)
        result = []
        for i in range(self.rows):
            acc = zero
            for a, b in zip(self.row(i), vector):
                if a and b:
                    acc = acc + a * b
            result.append(acc)
        return tuple(result)

    def __pow__(self, exponent: int) -> Matrix:
        if not self.is_square():
            raise DimensionMismatch("power of a non-square matrix")
        base = self if exponent >= 0 else self.inverse()
        e = abs(exponent)
        result = Matrix.identity(self.rows, self.order)
        while e:
            if e & 1:
                result = result @ base
            e >>= 1
            if e:
                base = base @ base
        return result

    def transpose(self) -> Matrix:
        return Matrix(self.cols, self.rows, [self[i, j] for j in range(self.cols) for i in range(self.rows)], self.order)

    def conjugate(self) -> Matrix:
        return self.map(lambda e: e.conjugate())

    def map(self, fn: Callable[[CyclotomicNumber], Scalar]) -> Matrix:
        values = [fn(e) for e in self.entries]
        return Matrix(self.rows, self.cols, values, _infer_order(values, None, self.order))

    def embed(self, order: int) -> Matrix:
        if order == self.order:
            return self
        return Matrix(self.rows, self.cols, [e.embed(order) for e in self.entries], order)

    def trace(self) -> CyclotomicNumber:
        if not self.is_square():
            raise DimensionMismatch("trace of a non-square matrix")
        total = CyclotomicNumber.zero(self.order)
        for i in range(self.rows):
            total = total + self[i, i]
        return total

    def determinant(self) -> CyclotomicNumber:
        if not self.is_square():
            raise DimensionMismatch("determinant of a non-square matrix")
        return _bareiss_determinant(self.to_rows(), CyclotomicNumber.one(self.order), CyclotomicNumber.zero(self.order),
                                    lambda a, b: a / b)

    def inverse(self) -> Matrix:
        if not self.is_square():
            raise DimensionMismatch("inverse of a non-square matrix")
        n = self.rows
        augmented = [row + list(Matrix.identity(n, self.order).row(i)) for i, row in enumerate(self.to_rows())]
        reduced, pivots = _gauss_jordan(augmented, n)
        if pivots != list(range(n)):
            raise DivisionByZero("matrix is singular")
        return Matrix.from_rows([r[n:] for r in reduced], self.order)

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def is_identity(self) -> bool:
        return self.is_square() and self == Matrix.identity(self.rows, self.order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(e) for e in self.row(i)) for i in range(self.rows))
        return f"Matrix([{body}])"

    def to_json(self) -> list[list[str]]:
        return [[str(e) for e in self.row(i)] for i in range(self.rows)]

    def vectorize(self) -> Vector:
        return self.entries


def hstack(blocks: Sequence[Matrix]) -> Matrix:
    rows = blocks[0].rows
    if any(b.rows != rows for b in blocks):
        raise DimensionMismatch("hstack blocks need equal row counts")
    return Matrix.from_rows([[e for b in blocks for e in b.row(i)] for i in range(rows)], blocks[0].order)


def vstack(blocks: Sequence[Matrix]) -> Matrix:
    cols = blocks[0].cols
    if any(b.cols != cols for b in blocks):
        raise DimensionMismatch("vstack blocks need equal column counts")
    return Matrix(sum(b.rows for b in blocks), cols, [e for b in blocks for e in b.entries], blocks[0].order)


def block_diagonal(a: Matrix, b: Matrix) -> Matrix:
    order = common_order(a.order, b.order)
    zero = CyclotomicNumber.zero(order)
    rows = [list(a.row(i)) + [zero] * b.cols for i in range(a.rows)]
    rows += [[zero] * a.cols + list(b.row(i)) for i in range(b.rows)]
    return Matrix.from_rows(rows, order)


def kronecker(a: Matrix, b: Matrix) -> Matrix:
    """Standard Kronecker product; block (i, j) is a[i, j] * b."""
    entries = []
    for i in range(a.rows):
        for k in range(b.rows):
            for j in range(a.cols):
                aij = a[i, j]
                for l in range(b.cols):
                    entries.append(aij * b[k, l])
    return Matrix(a.rows * b.rows, a.cols * b.cols, entries, common_order(a.order, b.order))


# ---------------------------------------------------------------------------
# Elimination kernels
# ---------------------------------------------------------------------------

def _bareiss_rank(rows: list[list], ncols: int, exact_divide=lambda a, b: a / b) -> int:
    """Rank by fraction-free elimination; entries need is_zero() and exact division."""
    m = [list(r) for r in rows]
    nrows = len(m)
    if not nrows or not ncols:
        return 0
    rank = 0
    previous = None
    for col in range(ncols):
        pivot_row = next((r for r in range(rank, nrows) if not _is_zero(m[r][col])), None)
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        pivot = m[rank][col]
        for r in range(rank + 1, nrows):
            factor = m[r][col]
            for c in range(col + 1, ncols):
                value = pivot * m[r][c] - factor * m[rank][c]
                m[r][c] = exact_divide(value, previous) if previous is not None else value
            m[r][col] = factor - factor
        previous = pivot
        rank += 1
        if rank == nrows:
            break
    return rank


def _bareiss_determinant(rows: list[list], one, zero, exact_divide):
    """Fraction-free determinant; works over any integral domain with exact division."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return one
    sign = 1
    previous = one
    for k in range(n - 1):
        pivot_row = next((r for r in range(k, n) if not _is_zero(m[r][k])), None)
        if pivot_row is None:
            return zero
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = exact_divide(pivot * m[i][j] - m[i][k] * m[k][j], previous)
        previous = pivot
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def _is_zero(value) -> bool:
    return value.is_zero()


def _gauss_jordan(rows: list[list[CyclotomicNumber]], ncols: int) -> tuple[list[list[CyclotomicNumber]], list[int]]:
    """Reduced row echelon form on the first ncols columns; returns (rows, pivot columns)."""
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r == len(m):
            break
        pivot_row = next((i for i in range(r, len(m)) if m[i][col]), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = m[r][col].inverse()
        m[r] = [e * inv for e in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                factor = m[i][col]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    return m, pivots


def rank(m: Matrix) -> int:
    return _bareiss_rank(m.to_rows(), m.cols)


def kernel_basis(m: Matrix) -> list[Vector]:
    """Basis of {v : m v = 0}; one vector per free column, in column order."""
    zero = CyclotomicNumber.zero(m.order)
    one = CyclotomicNumber.one(m.order)
    if m.rows == 0:
        return [tuple(one if i == j else zero for i in range(m.cols)) for j in range(m.cols)]
    reduced, pivots = _gauss_jordan(m.to_rows(), m.cols)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * m.cols
        v[f] = one
        for row_index, p in enumerate(pivots):
            v[p] = -reduced[row_index][f]
        basis.append(tuple(v))
    return basis


def solve(m: Matrix, rhs: Sequence[Scalar]) -> Vector | None:
    """One solution of m x = rhs (free variables set to 0), or None if inconsistent."""
    if len(rhs) != m.rows:
        raise DimensionMismatch(f"right-hand side of length {len(rhs)} for {m.shape} matrix")
    zero = CyclotomicNumber.zero(m.order)
    rhs = [as_field(v, m.order) for v in rhs]
    if m.rows == 0:
        return tuple([zero] * m.cols)
    augmented = [row + [b] for row, b in zip(m.to_rows(), rhs)]
    reduced, pivots = _gauss_jordan(augmented, m.cols + 1)
    if m.cols in pivots:
        return None
    x = [zero] * m.cols
    for row_index, p in enumerate(pivots):
        x[p] = reduced[row_index][m.cols]
    return tuple(x)


def span_basis(vectors: Sequence[Sequence[CyclotomicNumber]], length: int, order: int) -> list[Vector]:
    """Row-reduced basis of the span of the given vectors."""
    if not vectors:
        return []
    reduced, pivots = _gauss_jordan([list(v) for v in vectors], length)
    return [tuple(reduced[i]) for i in range(len(pivots))]


# ---------------------------------------------------------------------------
# Matrices over the Laurent ring
# ---------------------------------------------------------------------------

class LaurentMatrix:
    """Immutable rows x cols matrix with LaurentPoly entries."""

    __slots__ = ("rows", "cols", "entries", "order")

    def __init__(self, rows: int, cols: int, entries: Sequence[LaurentPoly], order: int):
        if len(entries) != rows * cols:
            raise DimensionMismatch(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.order = order
        self.entries = tuple(entries)

    @classmethod
    def from_matrix(cls, m: Matrix, power: int = 0) -> LaurentMatrix:
        """m * t**power."""
        return cls(m.rows, m.cols, [LaurentPoly.monomial(e, power) for e in m.entries], m.order)

    @classmethod
    def identity(cls, n: int, order: int) -> LaurentMatrix:
        return cls.from_matrix(Matrix.identity(n, order))

    @classmethod
    def zeros(cls, rows: int, cols: int, order: int) -> LaurentMatrix:
        return cls(rows, cols, [LaurentPoly.zero(order)] * (rows * cols), order)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[LaurentPoly]], order: int) -> LaurentMatrix:
        ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, [e for r in rows for e in r], order)

    def __getitem__(self, index: tuple[int, int]) -> LaurentPoly:
        i, j = index
        return self.entries[i * self.cols + j]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __add__(self, other: LaurentMatrix) -> LaurentMatrix:
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape} differ")
        return LaurentMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)], self.order)

    def __sub__(self, other: LaurentMatrix) -> LaurentMatrix:
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape} differ")
        return LaurentMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)], self.order)

    def __neg__(self) -> LaurentMatrix:
        return LaurentMatrix(self.rows, self.cols, [-a for a in self.entries], self.order)

    def __matmul__(self, other: LaurentMatrix) -> LaurentMatrix:
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        zero = LaurentPoly.zero(self.order)
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    a, b = self[i, k], other[k, j]
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                out.append(acc)
        return LaurentMatrix(self.rows, other.cols, out, self.order)

    def specialize(self, value: Scalar) -> Matrix:
        """Evaluate every entry at t = value."""
        values = [e.evaluate(value) for e in self.entries]
        return Matrix(self.rows, self.cols, values, _infer_order(values, None, self.order))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> LaurentMatrix:
        return LaurentMatrix(len(rows), len(cols), [self[i, j] for i in rows for j in cols], self.order)

    def determinant(self) -> LaurentPoly:
        if self.rows != self.cols:
            raise DimensionMismatch("determinant of a non-square matrix")
        rows = [[self[i, j] for j in range(self.cols)] for i in range(self.rows)]
        return _bareiss_determinant(rows, LaurentPoly.one(self.order), LaurentPoly.zero(self.order),
                                    lambda a, b: a.exact_divide(b))

    def rank(self) -> int:
        """Rank over the fraction field K(t)."""
        rows = [[self[i, j] for j in range(self.cols)] for i in range(self.rows)]
        return _bareiss_rank(rows, self.cols, lambda a, b: a.exact_divide(b))

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def to_json(self) -> list[list[dict[str, str]]]:
        return [[self[i, j].to_json() for j in range(self.cols)] for i in range(self.rows)]


def laurent_hstack(blocks: Sequence[LaurentMatrix]) -> LaurentMatrix:
    rows = blocks[0].rows
    return LaurentMatrix.from_rows(
        [[e for b in blocks for e in (b[i, j] for j in range(b.cols))] for i in range(rows)],
        blocks[0].order,
    )


def laurent_vstack(blocks: Sequence[LaurentMatrix]) -> LaurentMatrix:
    return LaurentMatrix(sum(b.rows for b in blocks), blocks[0].cols, [e for b in blocks for e in b.entries], blocks[0].order)


def minors_gcd(m: LaurentMatrix, size: int) -> LaurentPoly:
    """Normalised gcd of all size x size minors (1 for size 0, 0 if all vanish)."""
    if size < 0 or size > min(m.rows, m.cols):
        raise DimensionMismatch(f"minor size {size} out of range for {m.shape}")
    if size == 0:
        return LaurentPoly.one(m.order)
    running: LaurentPoly = LaurentPoly.zero(m.order)
    nonzero_rows = [i for i in range(m.rows) if any(not m[i, j].is_zero() for j in range(m.cols))]
    if len(nonzero_rows) < size:
        return running
    count = 0
    for rows in combinations(nonzero_rows, size):
        for cols in combinations(range(m.cols), size):
            minor = m.submatrix(rows, cols).determinant()
            count += 1
            if minor.is_zero():
                continue
            running = laurent_gcd([running, minor], m.order)
            if running.span() == 0:
                logger.debug("minors_gcd(%d) hit a unit after %d minors", size, count)
                return running
    logger.debug("minors_gcd(%d) over %d minors: %s", size, count, running)
    return running


def characteristic_polynomial(m: Matrix) -> LaurentPoly:
    """det(t I - m) by the Faddeev-LeVerrier recurrence."""
    if not m.is_square():
        raise DimensionMismatch("characteristic polynomial of a non-square matrix")
    n = m.rows
    one = CyclotomicNumber.one(m.order)
    coeffs = [CyclotomicNumber.zero(m.order)] * (n + 1)
    coeffs[n] = one
    identity = Matrix.identity(n, m.order)
    running = Matrix.zeros(n, n, m.order)
    for k in range(1, n + 1):
        running = m @ running + identity * coeffs[n - k + 1]
        coeffs[n - k] = -(m @ running).trace() / k
    return LaurentPoly(0, coeffs, m.order)
