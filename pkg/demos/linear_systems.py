#!/usr/bin/env python3
"""Rank, row dependence, and the general solver for x * A = b.

Everything is exact: residuals are asserted to be identically zero, not
small.
"""

import random

from skewlin import (
    Matrix,
    extended_matrix,
    format_matrix,
    parse_matrix,
    rc_product,
    rc_rank,
    row_dependence,
    solve_general,
)
from skewlin.sampling import random_quaternion, random_row

a = parse_matrix("[k, -i; -1+k, -i-j]")
print("system matrix:", format_matrix(a))

report = rc_rank(a)
print(f"rank {report.rank}, major minor rows {report.minor.rows}, cols {report.minor.cols}")

# Row 2 lies in the left span of the major-minor rows; the coefficient row is
# recovered from the minor and reconstructs the row on EVERY column.
coeff = row_dependence(a, report, 2)
print("row 2 =", format_matrix(coeff), "* row 1")

# A consistent system: take b inside the row span.
b = Matrix.row(a.row_entries(1))
solution = solve_general(a, b)
print("\nsolve x * A =", format_matrix(b))
print("  consistent:", solution.consistent)
print("  particular:", format_matrix(solution.particular))
print("  free variables:", solution.free_variables)
for h in solution.homogeneous_basis:
    print("  homogeneous basis row:", format_matrix(h))

# Every particular-plus-combination is a solution; check one at random.
rng = random.Random(7)
x = solution.particular
for h in solution.homogeneous_basis:
    x = x + h.scale_left(random_quaternion(rng))
assert rc_product(x, a) == b
print("  random member of the solution set verifies exactly")

# An inconsistent right-hand side raises the extended rank.
bad = parse_matrix("[1, 0]")
print("\nextended rank with b = [1, 0]:", rc_rank(extended_matrix(a, bad)).rank)
print("  consistent:", solve_general(a, bad).consistent)

# Random sanity sweep: systems built as t * A are always consistent.
for _ in range(20):
    m = rng.randint(1, 3)
    n = rng.randint(1, 3)
    matrix = Matrix([random_row(rng, n, bound=4).cells[0] for _ in range(m)])
    rhs = rc_product(random_row(rng, m, bound=4), matrix)
    assert solve_general(matrix, rhs).consistent
print("\n20 random constructed systems: all consistent, as they must be")
