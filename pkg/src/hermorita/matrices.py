"""Dense matrices over a division algebra ``D``.

Products keep the left factor on the left in every entry sum, which matters
once ``D`` is a quaternion algebra. Public indices (``unit_matrix``) are
1-based; item access ``A[i, j]`` is 0-based like ordinary Python.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .algebra import AlgebraDescriptor, AlgebraElement, parse_element, reduced_norm
from .errors import (
    DescriptorMismatch,
    IndexOutOfRange,
    NotDivision,
    ParseError,
    ShapeMismatch,
    Singular,
)
from .scalars import is_rational_like


class Matrix:
    """Immutable ``rows x cols`` matrix with :class:`AlgebraElement` entries.

    ``A @ B`` is the matrix product, ``c * A`` scales on the left and
    ``A * c`` on the right, for ``c`` an element of ``D`` or a rational.
    """

    __slots__ = ("descriptor", "rows", "cols", "_data")

    def __init__(self, descriptor: AlgebraDescriptor, data: Sequence[Sequence[AlgebraElement]]):
        data = tuple(tuple(row) for row in data)
        rows = len(data)
        cols = len(data[0]) if rows else 0
        for row in data:
            if len(row) != cols:
                raise ShapeMismatch("ragged matrix rows")
            for x in row:
                if not isinstance(x, AlgebraElement):
                    raise TypeError(f"matrix entry {x!r} is not an AlgebraElement")
                if x.descriptor != descriptor:
                    raise DescriptorMismatch(f"entry over {x.descriptor}, matrix over {descriptor}")
        object.__setattr__(self, "descriptor", descriptor)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_data", data)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # construction helpers

    @classmethod
    def from_values(cls, descriptor: AlgebraDescriptor, rows: Iterable[Iterable]) -> "Matrix":
        """Build from nested lists of elements, rationals, or coordinate lists."""
        data = []
        for row in rows:
            out = []
            for v in row:
                if isinstance(v, AlgebraElement):
                    out.append(v)
                elif isinstance(v, (list, tuple)):
                    out.append(descriptor.element(v))
                else:
                    out.append(descriptor.scalar(v))
            data.append(out)
        return cls(descriptor, data)

    @classmethod
    def zeros(cls, descriptor: AlgebraDescriptor, rows: int, cols: int) -> "Matrix":
        z = descriptor.zero()
        return cls(descriptor, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, descriptor: AlgebraDescriptor, n: int) -> "Matrix":
        z, one = descriptor.zero(), descriptor.one()
        return cls(descriptor, [[one if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, descriptor: AlgebraDescriptor, values: Sequence) -> "Matrix":
        n = len(values)
        z = descriptor.zero()
        data = [[z] * n for _ in range(n)]
        for i, v in enumerate(values):
            data[i][i] = v if isinstance(v, AlgebraElement) else descriptor.scalar(v)
        return cls(descriptor, data)

    # access

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index) -> AlgebraElement:
        i, j = index
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def to_lists(self) -> list[list[AlgebraElement]]:
        return [list(r) for r in self._data]

    def entries(self) -> Iterable[AlgebraElement]:
        for r in self._data:
            yield from r

    def is_zero(self) -> bool:
        return not any(self.entries())

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "Matrix":
        return Matrix(self.descriptor, [r[c0:c1] for r in self._data[r0:r1]])

    # arithmetic

    def _same(self, other: "Matrix"):
        if other.descriptor != self.descriptor:
            raise DescriptorMismatch(f"{self.descriptor} vs {other.descriptor}")

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._same(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"cannot add {self.shape} and {other.shape}")
        return Matrix(self.descriptor, [
            [x + y for x, y in zip(r, s)] for r, s in zip(self._data, other._data)
        ])

    def __neg__(self):
        return Matrix(self.descriptor, [[-x for x in r] for r in self._data])

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self + (-other)

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._same(other)
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        zero = self.descriptor.zero()
        cols = list(zip(*other._data)) if other.rows else [()] * other.cols
        out = []
        for r in self._data:
            out_row = []
            for c in cols:
                acc = zero
                for x, y in zip(r, c):
                    if x and y:
                        acc = acc + x * y
                out_row.append(acc)
            out.append(out_row)
        return Matrix(self.descriptor, out)

    def _scalar(self, c) -> AlgebraElement:
        if isinstance(c, AlgebraElement):
            if c.descriptor != self.descriptor:
                raise DescriptorMismatch(f"{c.descriptor} vs {self.descriptor}")
            return c
        if is_rational_like(c):
            return self.descriptor.scalar(c)
        return NotImplemented

    def __rmul__(self, c):
        c = self._scalar(c)
        if c is NotImplemented:
            return c
        return Matrix(self.descriptor, [[c * x for x in r] for r in self._data])

    def __mul__(self, c):
        c = self._scalar(c)
        if c is NotImplemented:
            return c
        return Matrix(self.descriptor, [[x * c for x in r] for r in self._data])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.descriptor == other.descriptor and self._data == other._data

    def __hash__(self):
        return hash((self.descriptor, self._data))

    def bar_transpose(self) -> "Matrix":
        return bar_transpose(self)

    def inverse(self) -> "Matrix":
        return mat_inv(self)

    def to_json(self) -> list:
        return [[x.to_json() for x in r] for r in self._data]

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self._data)
        return f"Matrix({self.descriptor}, [{body}])"


def matrix_from_json(doc, descriptor: AlgebraDescriptor) -> Matrix:
    if not isinstance(doc, list) or not all(isinstance(r, list) for r in doc):
        raise ParseError("matrix must be an array of rows")
    try:
        return Matrix(descriptor, [[parse_element(x, descriptor) for x in r] for r in doc])
    except ShapeMismatch as exc:
        raise ParseError(str(exc)) from exc


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return a @ b


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return a + b


def mat_scale_left(c, a: Matrix) -> Matrix:
    return c * a


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return a == b


def bar_transpose(a: Matrix) -> Matrix:
    """Entrywise conjugate, then transpose."""
    return Matrix(a.descriptor, [[x.conj() for x in col] for col in zip(*a._data)]) \
        if a.rows else Matrix.zeros(a.descriptor, a.cols, 0)


def unit_matrix(rows: int, cols: int, i: int, j: int, descriptor: AlgebraDescriptor) -> Matrix:
    """The matrix with 1 at 1-based position ``(i, j)`` and zeros elsewhere."""
    if not (1 <= i <= rows and 1 <= j <= cols):
        raise IndexOutOfRange(f"({i}, {j}) outside a {rows}x{cols} matrix")
    z, one = descriptor.zero(), descriptor.one()
    return Matrix(descriptor, [
        [one if (r, c) == (i - 1, j - 1) else z for c in range(cols)] for r in range(rows)
    ])


def block_diagonal(*blocks: Matrix) -> Matrix:
    if not blocks:
        raise ValueError("block_diagonal needs at least one block")
    desc = blocks[0].descriptor
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    z = desc.zero()
    data = [[z] * cols for _ in range(rows)]
    r0 = c0 = 0
    for b in blocks:
        if b.descriptor != desc:
            raise DescriptorMismatch(f"{b.descriptor} vs {desc}")
        for i in range(b.rows):
            for j in range(b.cols):
                data[r0 + i][c0 + j] = b[i, j]
        r0 += b.rows
        c0 += b.cols
    return Matrix(desc, data)


def block_matrix(grid: Sequence[Sequence[Matrix]]) -> Matrix:
    """Assemble a matrix from a grid of conformable blocks."""
    desc = grid[0][0].descriptor
    data = []
    for block_row in grid:
        height = block_row[0].rows
        for b in block_row:
            if b.rows != height:
                raise ShapeMismatch("blocks in one block row must share a height")
        for i in range(height):
            row = []
            for b in block_row:
                row.extend(b.row(i))
            data.append(row)
    return Matrix(desc, data)


def mat_inv(a: Matrix) -> Matrix:
    """Two-sided inverse by Gauss-Jordan elimination with left row operations.

    Only ``row_i <- c * row_i``, ``row_i <- row_i + c * row_j`` and row swaps
    are used, so the procedure is valid over a noncommutative division ring.
    """
    if not a.is_square:
        raise ShapeMismatch(f"cannot invert a {a.rows}x{a.cols} matrix")
    desc = a.descriptor
    n = a.rows
    left = a.to_lists()
    right = Matrix.identity(desc, n).to_lists()

    for col in range(n):
        pivot = None
        saw_zero_divisor = False
        for r in range(col, n):
            x = left[r][col]
            if x.is_zero():
                continue
            if reduced_norm(x) == 0:
                saw_zero_divisor = True
                continue
            pivot = r
            break
        if pivot is None:
            if saw_zero_divisor:
                raise NotDivision(f"column {col + 1} has only zero-divisor pivots in {desc}")
            raise Singular(f"no pivot in column {col + 1}")
        left[col], left[pivot] = left[pivot], left[col]
        right[col], right[pivot] = right[pivot], right[col]

        c = left[col][col].inverse()
        left[col] = [c * x for x in left[col]]
        right[col] = [c * x for x in right[col]]

        for r in range(n):
            if r == col:
                continue
            f = left[r][col]
            if f.is_zero():
                continue
            left[r] = [x - f * y for x, y in zip(left[r], left[col])]
            right[r] = [x - f * y for x, y in zip(right[r], right[col])]

    inv = Matrix(desc, right)
    ident = Matrix.identity(desc, n)
    if a @ inv != ident or inv @ a != ident:
        raise Singular("elimination produced a one-sided inverse")
    return inv
