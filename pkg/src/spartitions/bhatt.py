"""Exact evaluation and audit of the claimed s-partition upper bound

    2 + floor(n/3) + sum_{i=0}^{floor(log2 n)} m_i ^ (m_i - 1),
    m_i = floor(log2(n - 3i)),

compared against the exact counts.  All logs are base-2 floors taken
from integer bit lengths; floating point never touches the bound.

Degenerate summands are not defined by the source, so the audit pins a
convention and reports it alongside every scan: a summand with
n - 3i < 2 contributes 0, m_i = 0 would demand 0^-1 and contributes 0,
and m_i = 1 contributes 1^0 = 1.  Any bounded convention leaves the
audit's conclusion intact because the count/bound gap is asymptotic.
"""

from dataclasses import dataclass
from typing import Iterator

from .counting import CountTable, count_s_partitions_table, ln_count
from .errors import DomainError

__all__ = ["AuditRecord", "AuditSummary", "bhatt_bound", "audit_scan", "run_audit"]

TERM_CONVENTION = (
    "summand conventions: n-3i < 2 -> 0; floor(log2(n-3i)) = 0 -> 0 "
    "(avoids 0^-1); floor(log2(n-3i)) = 1 -> 1^0 = 1"
)

MAX_SCAN = 10 ** 6

# m^(m-1) lookup; m <= 63 covers any n below 2^64
_POW = {m: m ** (m - 1) for m in range(2, 64)}


@dataclass(frozen=True)
class AuditRecord:
    n: int
    exact: int
    bound: int
    violated: bool


@dataclass(frozen=True)
class AuditSummary:
    n_max: int
    first_violation: int | None
    violations: int
    max_ratio: float          # max exact/bound over the scan
    max_ratio_n: int
    bound_monotone_from_16: bool
    convention: str = TERM_CONVENTION


def bhatt_bound(n: int) -> int:
    """Exact value of the claimed upper bound at n >= 1."""
    if n < 1:
        raise DomainError(f"bound needs n >= 1, got {n}")
    total = 2 + n // 3
    for i in range(n.bit_length()):  # i = 0 .. floor(log2 n)
        x = n - 3 * i
        if x < 2:
            continue
        m = x.bit_length() - 1
        if m == 1:
            total += 1
        else:
            total += _POW[m]
    return total


def audit_scan(n_max: int, table: CountTable | None = None) -> Iterator[AuditRecord]:
    """Stream AuditRecords for n = 1..n_max against one shared DP table."""
    if not 1 <= n_max <= MAX_SCAN:
        raise DomainError(f"scan supports 1 <= n_max <= {MAX_SCAN}, got {n_max}")
    if table is None or table.n_max < n_max:
        table = count_s_partitions_table(n_max)
    counts = table.counts
    for n in range(1, n_max + 1):
        exact = counts[n]
        bound = bhatt_bound(n)
        yield AuditRecord(n, exact, bound, exact > bound)


def run_audit(n_max: int, table: CountTable | None = None) -> AuditSummary:
    """Scan to n_max and summarize: minimal violating n (or None) and the
    largest exact/bound ratio observed."""
    first = None
    violations = 0
    best_ratio = 0.0
    best_n = 1
    monotone = True
    prev_bound = None
    for rec in audit_scan(n_max, table):
        if rec.violated:
            violations += 1
            if first is None:
                first = rec.n
        ratio = _ratio(rec.exact, rec.bound)
        if ratio > best_ratio:
            best_ratio, best_n = ratio, rec.n
        if rec.n >= 16:
            if prev_bound is not None and rec.bound < prev_bound:
                monotone = False
            prev_bound = rec.bound
    return AuditSummary(n_max, first, violations, best_ratio, best_n, monotone)


def _ratio(exact: int, bound: int) -> float:
    # exact/bound through logs; both sides can exceed float range
    import math
    return math.exp(ln_count(exact) - ln_count(bound))
