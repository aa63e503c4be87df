import pytest
from hypothesis import given
from hypothesis import strategies as st

from monoindex.partitions import set_partitions, set_partitions_with_blocks


def bell(n: int) -> int:
    # Bell triangle; Bell(n) is the last entry of row n
    row = [1]
    for _ in range(n - 1):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[-1] if n else 1


def stirling2(n: int, k: int) -> int:
    if k == 0:
        return 1 if n == 0 else 0
    table = [[0] * (k + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for i in range(1, n + 1):
        for j in range(1, k + 1):
            table[i][j] = j * table[i - 1][j] + table[i - 1][j - 1]
    return table[n][k]


def is_rgs(a) -> bool:
    mx = -1
    for x in a:
        if x > mx + 1:
            return False
        mx = max(mx, x)
    return not a or a[0] == 0


@given(st.integers(0, 8))
def test_counts_match_bell(n):
    assert sum(1 for _ in set_partitions(n)) == bell(n)


@given(st.integers(1, 8))
def test_exact_block_counts_match_stirling(n):
    for k in range(1, n + 1):
        parts = list(set_partitions_with_blocks(n, k))
        assert len(parts) == stirling2(n, k)
        assert all(max(p) + 1 == k for p in parts)


def test_all_are_valid_rgs_and_unique():
    parts = list(set_partitions(6))
    assert all(is_rgs(p) for p in parts)
    assert len(set(parts)) == len(parts)
    assert parts == sorted(parts)  # lexicographic emission


def test_restricted_stream_is_a_subsequence():
    whole = list(set_partitions(6))
    for k in range(1, 7):
        sub = list(set_partitions_with_blocks(6, k))
        assert sub == [p for p in whole if max(p) + 1 == k]


def test_errors():
    with pytest.raises(ValueError):
        list(set_partitions(-1))
    with pytest.raises(ValueError):
        list(set_partitions_with_blocks(3, 0))
    with pytest.raises(ValueError):
        list(set_partitions_with_blocks(3, 4))
