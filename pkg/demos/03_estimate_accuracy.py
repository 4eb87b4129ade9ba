"""Accuracy of the asymptotic ln p_s(n) estimate against exact counts.

The o(1) gap shrinks slowly (roughly like lnln n / ln n); the table
makes that visible term by term.  Pass a larger N_MAX for the full
10^6 run (a few seconds of DP time).
"""

import sys

from spartitions import count_s_partitions_table, ln_ps_estimate

N_MAX = int(sys.argv[1]) if len(sys.argv) > 1 else 10 ** 5

table = count_s_partitions_table(N_MAX)
grid = [n for n in (10 ** 2, 10 ** 3, 10 ** 4, 10 ** 5, 10 ** 6) if n <= N_MAX]

print(f"{'n':>9} {'exact ln p_s':>14} {'estimate':>14} {'error':>9}")
for n in grid:
    exact = table.ln(n)
    bd = ln_ps_estimate(n)
    print(f"{n:>9} {exact:>14.5f} {bd.total:>14.5f} {bd.total - exact:>+9.5f}")

n = grid[-1]
bd = ln_ps_estimate(n)
print(f"\nbreakdown at n = {n}:")
for field in ("quad_term", "lin_term", "bline_term", "w_value",
              "gauss_const", "h_const"):
    print(f"  {field:>11} = {getattr(bd, field):+.8f}")
print(f"  {'total':>11} = {bd.total:+.8f}")
