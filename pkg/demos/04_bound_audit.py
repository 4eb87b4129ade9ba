"""Audit of the claimed closed-form upper bound on p_s(n).

The exact count overtakes the bound at a computable crossover; the scan
finds the minimal violating n and the widening log-ratio beyond it.
"""

import sys

from spartitions import bhatt_bound, count_s_partitions_table, ln_count, run_audit

N_MAX = int(sys.argv[1]) if len(sys.argv) > 1 else 10 ** 4

table = count_s_partitions_table(N_MAX)
summary = run_audit(N_MAX, table)

print(f"scan to n = {N_MAX}")
print(f"  {summary.convention}")
print(f"  violations: {summary.violations}")
print(f"  first violation: {summary.first_violation}")
print(f"  max exact/bound ratio: {summary.max_ratio:.4g} at n = {summary.max_ratio_n}")
print(f"  bound monotone from 16: {summary.bound_monotone_from_16}")

if summary.first_violation:
    n = summary.first_violation
    print(f"\naround the crossover n = {n}:")
    for m in (n - 2, n - 1, n, n + 1):
        exact, bound = table[m], bhatt_bound(m)
        flag = "VIOLATED" if exact > bound else "ok      "
        print(f"  n={m}: exact={exact} bound={bound}  [{flag}]")

print("\nlog(exact)/log(bound) trend (the gap is asymptotic):")
for n in (10 ** 3, 10 ** 4, 10 ** 5, 10 ** 6):
    if n <= N_MAX:
        print(f"  n={n:>7}: {ln_count(table[n]) / ln_count(bhatt_bound(n)):.4f}")
