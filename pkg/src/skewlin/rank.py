"""Rank via nonsingular minors, row dependence, and solvers for x*A = b.

Rank is *defined* as the largest order of a square minor with a two-sided
inverse, so the definition is the implementation: minors are enumerated in
decreasing order, lexicographically within each order, and the first
nonsingular one found is the major minor.  This makes the reported minor
deterministic at desk scale (n <= 6), which the solvers and tests rely on.

All index sets are 1-based and refer to the matrix's own display grid.
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidRowError, SingularMatrixError
from .matrix import Matrix, extended_matrix, rc_product
from .quasidet import is_rc_nonsingular, rc_inverse


@dataclass(frozen=True)
class IndexSelection:
    """Row and column index sets of equal size, 1-based, strictly increasing."""

    rows: tuple
    cols: tuple

    def __post_init__(self):
        rows, cols = tuple(self.rows), tuple(self.cols)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        if len(rows) != len(cols):
            raise ValueError("row and column sets must have equal size")
        for seq in (rows, cols):
            if len(set(seq)) != len(seq) or any(i < 1 for i in seq):
                raise ValueError(f"indices must be distinct 1-based naturals: {seq}")

    @property
    def order(self):
        return len(self.rows)


@dataclass(frozen=True)
class RankReport:
    rank: int
    minor: "IndexSelection | None"  # None exactly when rank == 0


def rc_rank(a):
    """Rank and major minor under the row-times-column product."""
    for k in range(min(a.rows, a.cols), 0, -1):
        for rows in combinations(range(1, a.rows + 1), k):
            for cols in combinations(range(1, a.cols + 1), k):
                if is_rc_nonsingular(a.minor(rows, cols)):
                    return RankReport(k, IndexSelection(rows, cols))
    return RankReport(0, None)


def cr_rank(a):
    """Rank under the column-times-row product, computed on the transposed
    grid per the duality principle; the reported index sets are swapped back
    so they refer to ``a``'s own rows and columns."""
    report = rc_rank(a.transpose())
    if report.minor is None:
        return report
    return RankReport(report.rank, IndexSelection(report.minor.cols, report.minor.rows))


def row_dependence(a, report, p):
    """Coefficient row expressing row ``p`` through the major-minor rows.

    Returns the 1 x k row ``c`` with ``c * (rows S of a) == row p of a`` on
    every column, where ``S`` is ``report.minor.rows``.  ``p`` must lie
    outside ``S``.
    """
    if report.rank == 0:
        a.row_entries(p)  # range check
        return Matrix.zeros(1, 0, field=a.field)
    sel = report.minor
    if p in sel.rows:
        raise InvalidRowError(f"row {p} belongs to the major minor {sel.rows}")
    outside_row = Matrix.row(
        [a[p - 1, t - 1] for t in sel.cols], field=a.field
    )
    core_inverse = rc_inverse(a.minor(sel.rows, sel.cols))
    return rc_product(outside_row, core_inverse)


def solve_nonsingular(a, b):
    """Unique solution of ``x * a = b`` for square nonsingular ``a``:
    ``x = b * inverse(a)``.  Raises :class:`SingularMatrixError` otherwise."""
    return rc_product(b, rc_inverse(a))


@dataclass(frozen=True)
class SolutionSet:
    """Complete description of the solutions of ``x * a = b``.

    ``particular`` has every free variable set to zero; each homogeneous
    basis row activates exactly one free variable with value one.  Every
    solution is ``particular`` plus a left-scalar combination of the basis
    rows.  The basis describes ``x * a = 0`` and is reported even for
    inconsistent systems.
    """

    consistent: bool
    particular: "Matrix | None"
    homogeneous_basis: tuple
    free_variables: tuple


def solve_general(a, b):
    """Solve ``x * a = b`` for an arbitrary m x n matrix ``a`` and 1 x n row
    ``b``.  Consistency is decided by the rank criterion: the system has a
    solution iff ``a`` and the extended matrix have equal rank."""
    report = rc_rank(a)
    k = report.rank
    row_set = report.minor.rows if report.minor else ()
    col_set = report.minor.cols if report.minor else ()
    free = tuple(p for p in range(1, a.rows + 1) if p not in row_set)

    basis = []
    for p in free:
        coeffs = row_dependence(a, report, p)
        entries = [a.field.zero()] * a.rows
        entries[p - 1] = a.field.one()
        for idx, s in enumerate(row_set):
            entries[s - 1] = -coeffs[0, idx]
        basis.append(Matrix.row(entries, field=a.field))

    consistent = rc_rank(extended_matrix(a, b)).rank == k
    if not consistent:
        return SolutionSet(False, None, tuple(basis), free)

    if k == 0:
        particular = Matrix.zeros(1, a.rows, field=a.field)
    else:
        core = a.minor(row_set, col_set)
        rhs = Matrix.row([b[0, t - 1] for t in col_set], field=a.field)
        core_solution = solve_nonsingular(core, rhs)
        entries = [a.field.zero()] * a.rows
        for idx, s in enumerate(row_set):
            entries[s - 1] = core_solution[0, idx]
        particular = Matrix.row(entries, field=a.field)
    # Columns outside the core are satisfied automatically (they are right
    # combinations of the core columns of the extended matrix); guard anyway.
    if rc_product(particular, a) != b:
        raise SingularMatrixError("internal: core solution fails on a non-core column")
    return SolutionSet(True, particular, tuple(basis), free)


def rc_singular_family(b, c, d):
    """The parametric 2x2 family ``[[d, d*c], [b*d, b*d*c]]``; its second row
    is the left multiple ``b * row1``, so every member is singular under the
    row-times-column product."""
    return Matrix([[d, d * c], [b * d, b * d * c]])


def cr_singular_family(b, c, d):
    """The mirror family ``[[d, c*d], [d*b, c*d*b]]``, singular under the
    column-times-row product for every choice of parameters."""
    return Matrix([[d, c * d], [d * b, c * d * b]])
