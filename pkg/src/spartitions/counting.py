"""Exact partition counting for Mersenne parts (2^k - 1) and powers of two.

All counts are exact Python integers; nothing here ever rounds.  The
natural log of a count is recovered from the exact integer via
:func:`ln_count`, which splits off the high bits so that arbitrarily
large counts convert without overflow.
"""

from dataclasses import dataclass
from math import log

from .errors import DomainError

__all__ = [
    "CountTable",
    "mersenne_parts_upto",
    "powers_of_two_upto",
    "count_s_partitions_table",
    "count_binary_partitions_table",
    "brute_force_count",
    "cumulative_P",
    "ln_count",
]

BRUTE_FORCE_LIMIT = 300


@dataclass(frozen=True)
class CountTable:
    """Exact counts indexed 0..n_max for a fixed part set."""

    n_max: int
    counts: list  # counts[n] = number of partitions of n

    def __getitem__(self, n: int) -> int:
        return self.counts[n]

    def ln(self, n: int) -> float:
        """Natural log of counts[n], accurate to >= 12 significant digits."""
        return ln_count(self.counts[n])

    def cumulative(self, u: int) -> int:
        """Sum of counts[0..u-1]; the solution counter P(u) at integer u."""
        if u < 1:
            raise DomainError(f"cumulative requires u >= 1, got {u}")
        return sum(self.counts[: u])


def mersenne_parts_upto(n: int) -> list:
    """All parts 2^k - 1 <= n with k >= 1, in ascending order."""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    parts = []
    k = 1
    while (1 << k) - 1 <= n:
        parts.append((1 << k) - 1)
        k += 1
    return parts


def powers_of_two_upto(n: int) -> list:
    """All parts 2^k <= n with k >= 0, in ascending order."""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    return [1 << k for k in range(n.bit_length())] if n >= 1 else []


def _unbounded_dp(n_max: int, parts: list) -> list:
    # Parts in the outer loop, totals ascending in the inner loop: each
    # part may repeat any number of times and orderings are not counted.
    counts = [0] * (n_max + 1)
    counts[0] = 1
    for p in parts:
        for i in range(p, n_max + 1):
            counts[i] += counts[i - p]
    return counts


def count_s_partitions_table(n_max: int) -> CountTable:
    """Exact table of p_s(0..n_max): partitions into parts 2^k - 1, k >= 1.

    Runs in O(n_max log n_max) big-integer additions; n_max = 10^6 takes
    a couple of seconds.
    """
    if n_max < 0:
        raise DomainError(f"n_max must be nonnegative, got {n_max}")
    return CountTable(n_max, _unbounded_dp(n_max, mersenne_parts_upto(n_max)))


def count_binary_partitions_table(n_max: int) -> CountTable:
    """Exact table of b(0..n_max): partitions into parts 2^k, k >= 0."""
    if n_max < 0:
        raise DomainError(f"n_max must be nonnegative, got {n_max}")
    return CountTable(n_max, _unbounded_dp(n_max, powers_of_two_upto(n_max)))


def brute_force_count(n: int) -> int:
    """Count partitions of n into Mersenne parts by exhaustive iteration.

    Independent oracle for the DP table: iterates over multiplicities of
    the parts 3, 7, 15, ... directly (the multiplicity of the part 1 is
    forced by the remainder).  Shares no code with the table builder.
    Intended for n <= 300 only.
    """
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    if n > BRUTE_FORCE_LIMIT:
        raise DomainError(
            f"brute_force_count is an oracle for n <= {BRUTE_FORCE_LIMIT}, got {n}"
        )
    parts = [p for p in mersenne_parts_upto(n) if p >= 3]
    parts.reverse()

    def scan(idx: int, remainder: int) -> int:
        if idx == len(parts):
            return 1  # remainder is filled with 1s
        total = 0
        p = parts[idx]
        used = 0
        while used <= remainder:
            total += scan(idx + 1, remainder - used)
            used += p
        return total

    return scan(0, n)


def cumulative_P(u: int, table: CountTable | None = None) -> int:
    """Number of Mersenne-part partitions of all m < u (integer u >= 1).

    This is the solution counter P(u) of r1*1 + r2*3 + r3*7 + ... < u,
    so consecutive differences give back the plain counts.
    """
    if u < 1:
        raise DomainError(f"u must be >= 1, got {u}")
    if table is None or table.n_max < u - 1:
        table = count_s_partitions_table(u - 1)
    return table.cumulative(u)


def ln_count(value: int) -> float:
    """ln of an exact positive integer via bit-length plus mantissa.

    Keeps only the top 64 bits before converting to float, so the result
    is exact to ~1e-15 relative regardless of how many digits the count
    has.
    """
    if value <= 0:
        raise DomainError(f"ln_count requires a positive count, got {value}")
    shift = max(0, value.bit_length() - 64)
    return log(value >> shift) + shift * log(2.0)
