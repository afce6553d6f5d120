"""Tests for primary column data and the orthodontic sort order."""

import pytest

from orthodontia import permcomb, sortorder


def test_primary_column_data_worked_example():
    w = (6, 8, 3, 4, 2, 7, 5, 1)
    pcd = sortorder.primary_column_data(w)
    assert (pcd.h, sorted(pcd.C), pcd.alpha, pcd.i1, pcd.beta) == (4, [1, 2, 6], 2, 5, 3)
    assert sortorder.sigma_of(w) == (2, 3, 1)
    assert sortorder.sort_of(w) == (6, 8, 2, 3, 4, 7, 5, 1)


def test_primary_column_data_dominant_degenerate():
    pcd = sortorder.primary_column_data((3, 2, 1))
    assert (pcd.h, pcd.C, pcd.alpha, pcd.i1, pcd.beta) == (3, frozenset(), 0, 3, 3)


def test_sigma_of_dominant_is_w_itself():
    # the window is all of [n], so only the identity is sorted among
    # dominant permutations
    assert sortorder.sigma_of((2, 1)) == (2, 1)
    assert not sortorder.is_sorted_perm((2, 1))
    assert sortorder.is_sorted_perm((1, 2, 3))


def test_sigma_always_dominant():
    for w in permcomb.all_perms(5):
        assert permcomb.is_dominant(sortorder.sigma_of(w))


def test_sort_of_permutes_window_only():
    for w in permcomb.all_perms(4):
        pcd = sortorder.primary_column_data(w)
        ws = sortorder.sort_of(w)
        assert sorted(ws) == sorted(w)
        for p in range(len(w)):
            if not pcd.alpha <= p < pcd.i1:
                assert ws[p] == w[p]


def test_os_covers_identity_empty():
    assert sortorder.os_covers((1, 2, 3)) == []


def test_os_covers_unsorted_gives_sort():
    w = (6, 8, 3, 4, 2, 7, 5, 1)
    assert sortorder.os_covers(w) == [(6, 8, 2, 3, 4, 7, 5, 1)]


def test_os_covers_sorted_gives_s_product():
    # w = 1342 is sorted (sigma is the identity); predecessor is
    # w s_{i1} ... s_{alpha+1}
    w = (1, 3, 4, 2)
    assert sortorder.is_sorted_perm(w)
    pcd = sortorder.primary_column_data(w)
    u = w
    for j in range(pcd.i1, pcd.alpha, -1):
        u = permcomb.right_multiply_s(u, j)
    assert sortorder.os_covers(w) == [u]


def test_os_covers_endpoint_validation():
    with pytest.raises(ValueError):
        sortorder.os_covers((2, 1), endpoint="gamma")


def test_os_order_descends_to_identity():
    # repeatedly taking the unique predecessor terminates at the identity
    for w in permcomb.all_perms(4):
        seen = set()
        u = w
        while u != permcomb.identity(4):
            assert u not in seen
            seen.add(u)
            (u,) = sortorder.os_covers(u)
            assert len(seen) <= 100
