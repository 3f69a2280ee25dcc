"""Character values of S^N V as partition-counting series.

The value of the N-th symmetric power character on a permutation of cycle
type lam is the number of ways to write N as sum lam_i x_i with x_i >= 0.
Run with ``python demos/01_characters_as_partition_counts.py``.
"""

from symspan import Partition, series_row

# A 7-cycle fixes a monomial only when all exponents agree, so the
# character is 1 exactly on multiples of 7.
print("7-cycle:        ", list(series_row(Partition((7,)), 21)))

# The identity of S_3: dim S^N C^3 = binom(N+2, 2).
print("identity in S_3:", list(series_row(Partition((1, 1, 1)), 6)))

# A (3,2,2)-cycle, first few values.
print("(3,2,2)-cycle:  ", list(series_row(Partition((3, 2, 2)), 10)))

# Columns of the character table are the rows of the coefficient matrix.
from symspan import build_matrix

M = build_matrix(4)
for lam, row in zip(M.row_index, M.entries):
    print(f"{str(lam):>12}  {row}")
