import pytest

from delannoy_adic.diagram import dfs_path_counts
from delannoy_adic.errors import DomainError
from delannoy_adic.numbers import (
    binom,
    delannoy,
    delannoy_closed_forms,
    delannoy_table,
    gf_truncation,
    nicomachus_count,
    nicomachus_table,
)


@pytest.mark.parametrize("n,k,expected", [(5, 0, 1), (0, 5, 1), (1, 1, 3), (2, 2, 13)])
def test_delannoy_examples(n, k, expected):
    assert delannoy(n, k) == expected


def test_delannoy_matches_dfs_enumeration():
    counts = dfs_path_counts(8, 8)
    for n in range(9):
        for k in range(9):
            assert delannoy(n, k) == counts[n][k]


def test_delannoy_symmetric():
    for n in range(41):
        for k in range(41):
            assert delannoy(n, k) == delannoy(k, n)


def test_table_agrees_with_single_values():
    t = delannoy_table(12, 9)
    assert (t.rows, t.cols) == (13, 10)
    for (n, k), v in t.items():
        assert v == delannoy(n, k)
        if k >= 1 and n >= 1:
            assert v == t[n, k - 1] + t[n - 1, k - 1] + t[n - 1, k]


def test_delannoy_negative_rejected():
    with pytest.raises(DomainError):
        delannoy(-1, 2)


@pytest.mark.parametrize("n,k,expected", [(4, 2, 6), (3, 5, 0), (7, 0, 1), (3, -1, 0)])
def test_binom(n, k, expected):
    assert binom(n, k) == expected


def test_closed_forms_examples():
    assert delannoy_closed_forms(1, 1) == [3] * 6
    assert delannoy_closed_forms(9, 0) == [1] * 6
    # recurrence oracle: D(3,2) = D(3,1) + D(2,1) + D(2,2) = 7 + 5 + 13
    assert delannoy_closed_forms(3, 2) == [25] * 6


def test_closed_forms_need_n_at_least_k():
    with pytest.raises(DomainError):
        delannoy_closed_forms(2, 3)


def test_closed_forms_battery():
    for n in range(21):
        for k in range(n + 1):
            assert set(delannoy_closed_forms(n, k)) == {delannoy(n, k)}


def test_gf_small_orders():
    assert gf_truncation(0).entries == ((1,),)
    # 1 + u + u^2 with u = x + y + xy: the xy coefficient is 1 (from u) + 2 (from u^2)
    t = gf_truncation(2)
    assert t[1, 1] == 3
    assert t.entries == ((1, 1, 1), (1, 3), (1,))


@pytest.mark.parametrize("order", [10, 12])
def test_gf_matches_recurrence(order):
    t = gf_truncation(order)
    cells = list(t.items())
    assert len(cells) == (order + 1) * (order + 2) // 2
    for (n, k), v in cells:
        assert n + k <= order
        assert v == delannoy(n, k)


@pytest.mark.parametrize("n,k,expected", [(3, 0, 8), (0, 2, 9), (2, 1, 12), (1, 1, 6)])
def test_nicomachus_examples(n, k, expected):
    assert nicomachus_count(n, k) == expected


def test_nicomachus_is_power_product():
    t = nicomachus_table(12)
    for (n, k), v in t.items():
        assert v == 2**n * 3**k
