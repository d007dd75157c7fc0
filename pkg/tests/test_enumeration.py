from math import prod

import pytest

from chordkit import DiagramStream, DomainError, count_brute, enumerate_diagrams, min_chord_length

from conftest import naive_class


def double_factorial(n):
    return prod(range(1, 2 * n, 2))


def test_d2():
    got = [str(d) for d in enumerate_diagrams(2, 1)]
    assert got == ["1-2,3-4", "1-3,2-4", "1-4,2-3"]


def test_m2_3():
    assert sum(1 for _ in enumerate_diagrams(3, 2)) == 5


def test_k_above_n_is_empty():
    assert list(enumerate_diagrams(4, 5)) == []


@pytest.mark.parametrize("n, k, expected", [(4, 2, 36), (5, 3, 99), (7, 7, 1)])
def test_count_brute_table_values(n, k, expected):
    assert count_brute(n, k) == expected


@pytest.mark.parametrize("n", range(1, 6))
def test_matches_unpruned_generator(n):
    for k in range(1, n + 2):
        assert set(enumerate_diagrams(n, k)) == naive_class(n, k)


@pytest.mark.parametrize("n", range(1, 8))
def test_full_stream_is_double_factorial(n):
    assert count_brute(n, 1) == double_factorial(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_stream_properties(n):
    prev_count = None
    for k in range(1, n + 2):
        seen = set()
        prev = None
        for d in enumerate_diagrams(n, k):
            assert min_chord_length(d) >= k
            assert d not in seen
            seen.add(d)
            key = d.pairs()
            if prev is not None:
                assert key > prev
            prev = key
        if prev_count is not None:
            assert len(seen) <= prev_count
        prev_count = len(seen)


def test_first_partner_split():
    n, k = 6, 2
    total = sum(sum(1 for _ in DiagramStream(n, k, first_partner=j)) for j in range(2, 2 * n + 1))
    assert total == count_brute(n, k)


def test_stream_is_reiterable():
    s = enumerate_diagrams(3, 2)
    assert list(s) == list(s)


def test_ceiling(monkeypatch):
    with pytest.raises(DomainError, match="count_dp"):
        count_brute(5, 1, ceiling=4)
    monkeypatch.setenv("CHORDKIT_ORACLE_CEILING", "3")
    with pytest.raises(DomainError):
        count_brute(4, 2)
    assert count_brute(3, 2) == 5


def test_bad_arguments():
    with pytest.raises(DomainError):
        enumerate_diagrams(0, 1)

