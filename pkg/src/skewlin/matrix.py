"""Rectangular matrices over a skew field and the two contraction products.

One storage grid serves both index conventions of the calculus: cell
``(i, j)`` of the display grid is the row-indexed entry of the row-times-
column (RC) reading and simultaneously the column-indexed entry of the
column-times-row (CR) reading.  The two products differ in which axis
contracts:

* ``rc_product(A, B)[i][j] = sum_k A[i][k] * B[k][j]`` (A-factor on the left),
* ``cr_product(A, B)[i][j] = sum_k A[k][j] * B[i][k]`` (A-factor on the left),

and they are exchanged by the transpose duality functor:
``cr_product(A, B) == rc_product(A.T, B.T).T``.

Grid positions in named operations (``minor``, quasideterminant positions,
rank index sets) are 1-based, matching the index conventions of the
underlying calculus; raw ``matrix[i, j]`` access is plain 0-based Python.
"""

from .errors import DimensionMismatch
from .quaternion import Quaternion, format_quaternion, parse_quaternion


class Matrix:
    """Immutable rectangular matrix over a skew field.

    ``field`` is the element class (default :class:`Quaternion`); it supplies
    ``zero()``/``one()`` and is inferred from the entries when any exist.
    Empty matrices (0 rows and/or 0 columns) are permitted; they carry the
    recursion base cases.
    """

    __slots__ = ("cells", "rows", "cols", "field")

    def __init__(self, cells, field=None, cols=None):
        """``cols`` pins the column count of a zero-row matrix, which the cell
        grid alone cannot express; with any rows present it must agree."""
        grid = tuple(tuple(row) for row in cells)
        widths = {len(row) for row in grid}
        if len(widths) > 1:
            raise DimensionMismatch("ragged rows in matrix literal")
        rows = len(grid)
        grid_cols = widths.pop() if widths else 0
        if cols is None:
            cols = grid_cols
        elif rows and cols != grid_cols:
            raise DimensionMismatch(f"declared {cols} columns, rows have {grid_cols}")
        if cols == 0:
            grid = tuple(() for _ in range(rows))
        if field is None:
            field = type(grid[0][0]) if rows and cols else Quaternion
        object.__setattr__(self, "cells", grid)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def identity(cls, n, field=Quaternion):
        one, zero = field.one(), field.zero()
        return cls(
            [[one if i == j else zero for j in range(n)] for i in range(n)],
            field=field,
        )

    @classmethod
    def zeros(cls, rows, cols, field=Quaternion):
        zero = field.zero()
        return cls([[zero] * cols for _ in range(rows)], field=field, cols=cols)

    @classmethod
    def row(cls, entries, field=None):
        """1 x n matrix from a flat sequence."""
        return cls([list(entries)], field=field)

    @classmethod
    def column(cls, entries, field=None):
        """n x 1 matrix from a flat sequence."""
        return cls([[e] for e in entries], field=field)

    # -- access ----------------------------------------------------------------

    def __getitem__(self, key):
        i, j = key
        return self.cells[i][j]

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def is_square(self):
        return self.rows == self.cols

    def row_entries(self, i):
        """Entries of 1-based row ``i`` as a tuple."""
        return self.cells[_check_index(i, self.rows, "row")]

    def column_entries(self, j):
        """Entries of 1-based column ``j`` as a tuple."""
        j = _check_index(j, self.cols, "column")
        return tuple(row[j] for row in self.cells)

    def __iter__(self):
        return iter(self.cells)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.cells == other.cells

    def __hash__(self):
        return hash((self.shape, self.cells))

    # -- pointwise ring structure ---------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return Matrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.cells, other.cells)
            ],
            field=self.field,
        )

    def __neg__(self):
        return Matrix([[-a for a in row] for row in self.cells], field=self.field)

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self + (-other)

    def scale_left(self, s):
        """Left scalar action ``s * M`` (scalars act from the left here)."""
        return Matrix([[s * a for a in row] for row in self.cells], field=self.field)

    def __rmul__(self, s):
        if isinstance(s, Matrix):
            return NotImplemented
        return self.scale_left(s)

    def __matmul__(self, other):
        return rc_product(self, other)

    def is_zero(self):
        return all(a.is_zero() for row in self.cells for a in row)

    # -- reshaping ---------------------------------------------------------------

    def transpose(self):
        return Matrix(
            [[self.cells[i][j] for i in range(self.rows)] for j in range(self.cols)],
            field=self.field,
            cols=self.rows,
        )

    @property
    def T(self):
        return self.transpose()

    def minor(self, row_set, col_set):
        """Submatrix picked by 1-based row and column index sequences."""
        ri = [_check_index(i, self.rows, "row") for i in row_set]
        cj = [_check_index(j, self.cols, "column") for j in col_set]
        return Matrix(
            [[self.cells[i][j] for j in cj] for i in ri],
            field=self.field,
            cols=len(cj),
        )

    def without(self, p, r):
        """Complementary submatrix: delete 1-based row ``p`` and column ``r``."""
        p = _check_index(p, self.rows, "row")
        r = _check_index(r, self.cols, "column")
        return Matrix(
            [
                [a for j, a in enumerate(row) if j != r]
                for i, row in enumerate(self.cells)
                if i != p
            ],
            field=self.field,
        )

    def __str__(self):
        return format_matrix(self)

    def __repr__(self):
        return f"Matrix({format_matrix(self)!r})"


def _check_index(i, bound, what):
    if not isinstance(i, int) or not 1 <= i <= bound:
        raise IndexError(f"{what} index {i} out of range 1..{bound}")
    return i - 1


def rc_product(a, b):
    """Row-times-column product: contract the column index of ``a`` with the
    row index of ``b``, a-factor on the left of every scalar product."""
    if a.cols != b.rows:
        raise DimensionMismatch(f"rc product needs {a.shape} x {b.shape} inner match")
    if a.cols == 0 or a.rows == 0 or b.cols == 0:
        return Matrix.zeros(a.rows, b.cols, field=a.field)
    return Matrix(
        [
            [_dot(a.cells[i], [b.cells[k][j] for k in range(b.rows)]) for j in range(b.cols)]
            for i in range(a.rows)
        ],
        field=a.field,
    )


def cr_product(a, b):
    """Column-times-row product: for ``a`` of shape n x p and ``b`` of shape
    m x n, ``result[i][j] = sum_k a[k][j] * b[i][k]``.  Equal to
    ``rc_product(a.T, b.T).T`` (the duality functor image of ``rc_product``)."""
    if a.rows != b.cols:
        raise DimensionMismatch(f"cr product needs {b.shape} x {a.shape} outer match")
    if a.rows == 0 or b.rows == 0 or a.cols == 0:
        return Matrix.zeros(b.rows, a.cols, field=a.field)
    return Matrix(
        [
            [_dot([a.cells[k][j] for k in range(a.rows)], b.cells[i]) for j in range(a.cols)]
            for i in range(b.rows)
        ],
        field=a.field,
    )


def _dot(left, right):
    it = zip(left, right)
    x, y = next(it)
    total = x * y
    for x, y in it:
        total = total + x * y
    return total


def transpose(a):
    return a.transpose()


def identity(n, field=Quaternion):
    return Matrix.identity(n, field=field)


def extended_matrix(a, b):
    """Append the 1 x n right-hand-side row ``b`` below the m x n system
    matrix ``a``, giving the (m+1) x n block used by the consistency test."""
    if b.rows != 1 or b.cols != a.cols:
        raise DimensionMismatch(
            f"right-hand side must be 1 x {a.cols}, got {b.shape}"
        )
    return Matrix(list(a.cells) + [b.cells[0]], field=a.field)


def format_matrix(a):
    """Canonical text form ``[e, e; e, e]`` with canonical entries."""
    if a.rows == 0 or a.cols == 0:
        return "[]"
    return (
        "["
        + "; ".join(", ".join(format_quaternion(e) for e in row) for row in a.cells)
        + "]"
    )


def parse_matrix(text):
    """Parse the ``[e, e; e, e]`` grammar, entries in the quaternion grammar.

    ``[]`` denotes the empty matrix.  Raises :class:`ParseError` on malformed
    input (positions refer to each entry substring).
    """
    stripped = text.strip()
    if not (stripped.startswith("[") and stripped.endswith("]")):
        from .errors import ParseError

        raise ParseError("matrix text must be enclosed in [ ]", 0)
    body = stripped[1:-1].strip()
    if not body:
        return Matrix([])
    rows = []
    for row_text in body.split(";"):
        rows.append([parse_quaternion(entry) for entry in row_text.split(",")])
    return Matrix(rows)
