"""Exact counting of partitions into Mersenne parts 1, 3, 7, 15, ...

Builds the DP table, spot-checks it against the independent brute-force
enumerator, and shows the cumulative counter P(u) that bridges counts
to the asymptotic machinery.
"""

from spartitions import (
    brute_force_count,
    count_s_partitions_table,
    cumulative_P,
    mersenne_parts_upto,
)

N = 300

print(f"parts available up to {N}: {mersenne_parts_upto(N)}")

table = count_s_partitions_table(N)
print(f"\np_s(n) for n = 0..15: {table.counts[:16]}")
print(f"p_s({N}) = {table[N]}")

print("\nbrute-force cross-check (independent enumeration):")
for n in (7, 10, 100, 300):
    bf = brute_force_count(n)
    mark = "ok" if bf == table[n] else "MISMATCH"
    print(f"  n={n:>4}: dp={table[n]} brute={bf}  [{mark}]")

print("\ncumulative counter P(u) = #solutions with sum < u:")
for u in (1, 4, 8, 100):
    print(f"  P({u}) = {cumulative_P(u, table)}")
print("difference identity P(u+1) - P(u) = p_s(u):",
      all(cumulative_P(u + 1, table) - cumulative_P(u, table) == table[u]
          for u in range(1, N)))
