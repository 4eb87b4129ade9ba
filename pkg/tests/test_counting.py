import math

import pytest

from spartitions import (
    DomainError,
    brute_force_count,
    count_binary_partitions_table,
    count_s_partitions_table,
    cumulative_P,
    ln_count,
    mersenne_parts_upto,
    powers_of_two_upto,
)


def test_mersenne_parts_examples():
    assert mersenne_parts_upto(0) == []
    assert mersenne_parts_upto(7) == [1, 3, 7]
    assert mersenne_parts_upto(100) == [1, 3, 7, 15, 31, 63]
    assert mersenne_parts_upto(6) == [1, 3]


def test_powers_of_two():
    assert powers_of_two_upto(0) == []
    assert powers_of_two_upto(10) == [1, 2, 4, 8]


def test_table_small_values(table500):
    assert count_s_partitions_table(0).counts == [1]
    # hand-enumerated: p_s(7) has {7},{3,3,1},{3,1^4},{1^7}
    assert table500[7] == 4
    assert table500[10] == 6
    assert table500.counts[:11] == [1, 1, 1, 2, 2, 2, 3, 4, 4, 5, 6]


def test_brute_force_examples():
    assert brute_force_count(0) == 1
    assert brute_force_count(3) == 2      # {3}, {1,1,1}
    assert brute_force_count(9) == 5


def test_brute_force_rejects_oracle_misuse():
    with pytest.raises(DomainError):
        brute_force_count(301)
    with pytest.raises(DomainError):
        brute_force_count(-1)


def test_dp_matches_brute_force_to_120(table500):
    for n in range(121):
        assert table500[n] == brute_force_count(n), n


def test_counts_nondecreasing(table500):
    for n in range(1, 501):
        assert table500[n] >= table500[n - 1]


def test_cumulative_examples(table500):
    assert cumulative_P(1, table500) == 1
    assert cumulative_P(4, table500) == 5     # 1+1+1+2
    # 1+1+1+2+2+2+3+4: all counts below 8
    assert cumulative_P(8, table500) == 16
    assert cumulative_P(8, table500) == sum(table500.counts[:8])


def test_cumulative_difference_identity(table500):
    for u in range(1, 500):
        assert (cumulative_P(u + 1, table500) - cumulative_P(u, table500)
                == table500[u])


def test_cumulative_builds_own_table():
    assert cumulative_P(4) == 5


def test_cumulative_domain():
    with pytest.raises(DomainError):
        cumulative_P(0)


def test_binary_small_values(binary500):
    assert binary500[0] == 1
    assert binary500[4] == 4          # {4},{2,2},{2,1,1},{1,1,1,1}
    assert binary500[10] == 14
    assert binary500.counts[:11] == [1, 1, 2, 2, 4, 4, 6, 6, 10, 10, 14]


def test_binary_recurrence(binary500):
    # classical: b(2m) = b(2m-1) + b(m), b(2m+1) = b(2m)
    b = binary500.counts
    for n in range(1, 501):
        if n % 2 == 0:
            assert b[n] == b[n - 1] + b[n // 2], n
        else:
            assert b[n] == b[n - 1], n


def test_ln_count_small():
    assert ln_count(1) == 0.0
    assert abs(ln_count(87977) - math.log(87977)) < 1e-13


def test_ln_count_huge():
    value = 3 ** 2000
    assert abs(ln_count(value) - 2000 * math.log(3)) < 1e-10 * 2000


def test_ln_count_domain():
    with pytest.raises(DomainError):
        ln_count(0)


def test_negative_inputs_rejected():
    with pytest.raises(DomainError):
        mersenne_parts_upto(-1)
    with pytest.raises(DomainError):
        count_s_partitions_table(-1)
    with pytest.raises(DomainError):
        count_binary_partitions_table(-2)
