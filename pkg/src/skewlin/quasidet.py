"""Quasideterminants and matrix inversion over a skew field.

A square matrix over a division ring is invertible exactly when Gauss-Jordan
elimination with left row multiplications runs to completion; the resulting
inverse is automatically two-sided because one-sided inverses coincide in a
matrix ring over a division ring.  Elimination is the authoritative, total
decision procedure here.

The quasideterminant at position ``(p, r)`` is the noncommutative analogue of
a determinant cofactor ratio:

    qdet(A, p, r) = A[p][r] - row_p(A without col r)
                    * inverse(A without row p, col r)
                    * col_r(A without row p)

It is *undefined* (returned as ``None``) whenever the complementary submatrix
is singular; undefined is distinct from the matrix itself being singular and
the two states are never conflated.
"""

from .errors import DimensionMismatch, SingularMatrixError
from .matrix import Matrix, rc_product


def _eliminate(grid, augmented):
    """In-place forward+back elimination with left multiplications.

    Returns False as soon as a pivot column has no nonzero entry (the matrix
    is singular), True when ``grid`` has been reduced to the identity.
    """
    n = len(grid)
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if not grid[r][col].is_zero():
                pivot_row = r
                break
        if pivot_row is None:
            return False
        if pivot_row != col:
            grid[col], grid[pivot_row] = grid[pivot_row], grid[col]
            if augmented is not None:
                augmented[col], augmented[pivot_row] = augmented[pivot_row], augmented[col]
        factor = grid[col][col].inverse()
        grid[col] = [factor * e for e in grid[col]]
        if augmented is not None:
            augmented[col] = [factor * e for e in augmented[col]]
        for r in range(n):
            if r == col:
                continue
            lead = grid[r][col]
            if lead.is_zero():
                continue
            grid[r] = [e - lead * p for e, p in zip(grid[r], grid[col])]
            if augmented is not None:
                augmented[r] = [e - lead * p for e, p in zip(augmented[r], augmented[col])]
    return True


def rc_inverse(a):
    """Two-sided inverse under the row-times-column product.

    Raises :class:`SingularMatrixError` when no inverse exists and
    :class:`DimensionMismatch` for non-square input.
    """
    if not a.is_square:
        raise DimensionMismatch(f"only square matrices invert, got {a.shape}")
    n = a.rows
    if n == 0:
        return a
    grid = [list(row) for row in a.cells]
    one, zero = a.field.one(), a.field.zero()
    augmented = [[one if i == j else zero for j in range(n)] for i in range(n)]
    if not _eliminate(grid, augmented):
        raise SingularMatrixError(f"matrix {a} is singular")
    return Matrix(augmented, field=a.field)


def is_rc_nonsingular(a):
    """True when ``a`` is square and has a two-sided inverse."""
    if not a.is_square:
        return False
    if a.rows == 0:
        return True
    return _eliminate([list(row) for row in a.cells], None)


def rc_quasideterminant(a, p, r):
    """Quasideterminant of square ``a`` at 1-based position ``(p, r)``.

    Returns the skew-field value, or ``None`` when it is undefined because
    the complementary submatrix has no inverse.  For a 1x1 matrix the value
    is the entry itself (the correction term vanishes with the empty
    complementary minor).
    """
    if not a.is_square:
        raise DimensionMismatch(f"quasideterminant needs a square matrix, got {a.shape}")
    complement = a.without(p, r)  # validates p, r
    n = a.rows
    if n == 1:
        return a[0, 0]
    try:
        inv = rc_inverse(complement)
    except SingularMatrixError:
        return None
    row = Matrix.row([a[p - 1, t] for t in range(n) if t != r - 1], field=a.field)
    col = Matrix.column([a[s, r - 1] for s in range(n) if s != p - 1], field=a.field)
    correction = rc_product(rc_product(row, inv), col)
    return a[p - 1, r - 1] - correction[0, 0]


def cr_quasideterminant(a, i, j):
    """Column-times-row quasideterminant; the duality functor image of
    :func:`rc_quasideterminant`, evaluated on the transposed grid."""
    return rc_quasideterminant(a.transpose(), i, j)


def rc_inverse_via_quasidet(a):
    """Inverse assembled entrywise from quasideterminants.

    Entry ``(r, p)`` of the inverse is ``inverse(qdet(a, p, r))``; positions
    whose quasideterminant is undefined correspond exactly to zero entries of
    the inverse.  A quasideterminant that is defined but zero certifies the
    matrix singular.  The assembled candidate is verified by a product
    round-trip, so this route never calls :func:`rc_inverse` and stays an
    independent check of it.
    """
    if not a.is_square:
        raise DimensionMismatch(f"only square matrices invert, got {a.shape}")
    n = a.rows
    if n == 0:
        return a
    zero = a.field.zero()
    cells = [[zero] * n for _ in range(n)]
    for p in range(1, n + 1):
        for r in range(1, n + 1):
            q = rc_quasideterminant(a, p, r)
            if q is None:
                continue
            if q.is_zero():
                raise SingularMatrixError(
                    f"quasideterminant at ({p}, {r}) is zero, matrix is singular"
                )
            cells[r - 1][p - 1] = q.inverse()
    candidate = Matrix(cells, field=a.field)
    if rc_product(a, candidate) != Matrix.identity(n, field=a.field):
        raise SingularMatrixError("no inverse: quasideterminant candidate fails round-trip")
    return candidate


def cr_inverse(a):
    """Two-sided inverse under the column-times-row product, obtained through
    the duality functor: transpose, invert, transpose back."""
    return rc_inverse(a.transpose()).transpose()
