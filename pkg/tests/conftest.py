import pytest

from spartitions import count_binary_partitions_table, count_s_partitions_table


@pytest.fixture(scope="session")
def table500():
    return count_s_partitions_table(500)


@pytest.fixture(scope="session")
def binary500():
    return count_binary_partitions_table(500)
