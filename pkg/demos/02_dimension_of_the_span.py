"""D(n): how many independent characters the symmetric powers produce.

Compares the exact fraction-free rank with the modular consensus rank and
with the number of conjugacy classes P(n).
"""

import time

from symspan import build_matrix, count_partitions, rank_exact, rank_modular

print(f"{'n':>3} {'P(n)':>6} {'exact':>6} {'mod p':>6} {'n(n-1)/2+1':>11}  secs")
for n in range(1, 19):
    t = time.perf_counter()
    exact = rank_exact(build_matrix(n))
    secs = time.perf_counter() - t
    mod = rank_modular(n)
    print(f"{n:>3} {count_partitions(n):>6} {exact:>6} {mod.rank:>6} "
          f"{n * (n - 1) // 2 + 1:>11}  {secs:.2f}")

# The characters stop spanning all class functions at n = 7.
# The modular path goes further cheaply:
for n in (30, 40):
    t = time.perf_counter()
    res = rank_modular(n)
    print(f"n={n}: D = {res.rank} ({res.status}, {time.perf_counter() - t:.1f}s)")
