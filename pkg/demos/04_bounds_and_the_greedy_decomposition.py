"""Upper bound U(n), lower bounds E >= G >= H, and the greedy nu(m).

Ends with the integer-certified check of nu(m) <= sqrt(2m) + 3 m^(1/4) on
405..50000 and the empirical constant in H(n) >= n^2/2 - c n^(3/2).
"""

from symspan.bounds import (
    asymptotics_probe,
    bounds_table,
    check_nu_inequality,
    max_nu_below,
    nu,
)
from symspan.formats import bounds_to_table
from symspan.golden import golden_tables

g = golden_tables()
D = {n: g.table1[n]["D"] for n in range(1, 24)}
records = bounds_table(23, D)
print(bounds_to_table(records))
print("chain violations:", [v for r in records for v in r.chain_violations()])

print(nu(26))
print(nu(404))
print("max nu below 405:", max_nu_below(405))
report = check_nu_inequality(405, 50000)
print(f"violations on [405, 50000]: {len(report.violations)}, "
      f"tightest at m={report.min_slack_at} (slack {report.min_slack:.4f})")

probe = asymptotics_probe(60)
for row in probe.rows[::10]:
    print(f"n={row.n:>2}  H/(n^2/2)={row.h_ratio:.3f}  U/(n^2/2)={row.u_ratio:.3f}  c_hat={row.c_hat:.3f}")
print(f"max c_hat for n <= 60: {probe.max_c_hat:.3f}")
