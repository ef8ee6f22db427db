#!/usr/bin/env python3
"""Tour of quasideterminants and inversion on quaternion matrices.

Builds the reference 2x2 matrix from the parametric singular family and walks
through the values that make it interesting: singular under the row-times-
column product, invertible under the column-times-row reading.
"""

from skewlin import (
    J,
    K,
    SingularMatrixError,
    cr_quasideterminant,
    format_matrix,
    parse_matrix,
    rc_inverse,
    rc_inverse_via_quasidet,
    rc_product,
    rc_quasideterminant,
    rc_singular_family,
)

# The family [[d, d*c], [b*d, b*d*c]] is singular for every parameter choice:
# its second row is the left multiple b * row1.
a = rc_singular_family(1 + K, J, K)
print("family member with b=1+k, c=j, d=k:")
print(" ", format_matrix(a))

# The quasideterminant at (2,2) is entry minus row * (complementary minor
# inverse) * column.  On a singular matrix with an invertible complementary
# entry it must vanish, and it does, exactly:
print("rc quasideterminant at (2,2):", rc_quasideterminant(a, 2, 2))

try:
    rc_inverse(a)
except SingularMatrixError:
    print("rc inverse: singular, as the zero quasideterminant predicts")

# The same grid read column-times-row is NOT singular; the two notions
# genuinely differ over a noncommutative field:
print("cr quasideterminant at (1,1):", cr_quasideterminant(a, 1, 1))

# On an invertible matrix the quasideterminants assemble the inverse
# entrywise: inverse[r][p] is the reciprocal of the quasideterminant at
# (p, r).  Both routes agree exactly.
b = parse_matrix("[k, 1; 0, j]")
elimination = rc_inverse(b)
entrywise = rc_inverse_via_quasidet(b)
print("\ninvertible example:", format_matrix(b))
print("inverse by elimination:   ", format_matrix(elimination))
print("inverse by quasideterminants:", format_matrix(entrywise))
print("roundtrip is the unit matrix:", format_matrix(rc_product(b, elimination)))
