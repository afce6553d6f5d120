"""Tests for permutations and compositions."""

import random

import pytest

from orthodontia import permcomb


def test_check_perm_accepts_valid():
    assert permcomb.check_perm((3, 1, 2)) == (3, 1, 2)


@pytest.mark.parametrize("bad", [(1, 1), (0, 1), (2, 3), (1, 2, 4)])
def test_check_perm_rejects_invalid(bad):
    with pytest.raises(ValueError):
        permcomb.check_perm(bad)


def test_identity_and_longest():
    assert permcomb.identity(4) == (1, 2, 3, 4)
    assert permcomb.longest(4) == (4, 3, 2, 1)
    assert permcomb.length(permcomb.longest(5)) == 10
    assert permcomb.length(permcomb.identity(5)) == 0


def test_length_examples():
    assert permcomb.length((2, 1, 3)) == 1
    # 31542 has inversions {31,32,54,52,42}; its diagram has 5 boxes
    assert permcomb.length((3, 1, 5, 4, 2)) == 5


def test_all_perms_count():
    assert len(list(permcomb.all_perms(4))) == 24


def test_right_multiply_s():
    assert permcomb.right_multiply_s((2, 1, 3), 2) == (2, 3, 1)
    with pytest.raises(IndexError):
        permcomb.right_multiply_s((2, 1), 2)


def test_inverse_roundtrip():
    rng = random.Random(5)
    for _ in range(50):
        n = rng.randint(1, 8)
        w = tuple(rng.sample(range(1, n + 1), n))
        inv = permcomb.inverse(w)
        assert permcomb.inverse(inv) == w
        assert tuple(w[inv[j - 1] - 1] for j in range(1, n + 1)) == permcomb.identity(n)


def test_pattern_avoidance():
    assert permcomb.is_dominant((3, 1, 2))
    assert not permcomb.is_dominant((1, 3, 2))
    assert permcomb.is_vexillary((1, 4, 2, 3))
    assert not permcomb.is_vexillary((2, 1, 4, 3))
    # every permutation in S_3 is vexillary
    assert all(permcomb.is_vexillary(w) for w in permcomb.all_perms(3))


def test_dominant_iff_rothe_columns_standard():
    from orthodontia import diagrams

    for w in permcomb.all_perms(4):
        cols_standard = all(
            col == frozenset(range(1, len(col) + 1))
            for col in diagrams.rothe(w).columns
        )
        assert permcomb.is_dominant(w) == cols_standard


def test_demazure_star():
    # ascent: multiply through; descent: absorb
    assert permcomb.demazure_star((1, 2, 3), 1) == (2, 1, 3)
    assert permcomb.demazure_star((2, 1, 3), 1) == (2, 1, 3)


def test_demazure_star_idempotent_relation():
    rng = random.Random(9)
    for _ in range(30):
        n = rng.randint(2, 6)
        w = tuple(rng.sample(range(1, n + 1), n))
        j = rng.randint(1, n - 1)
        once = permcomb.demazure_star(w, j)
        assert permcomb.demazure_star(once, j) == once


def test_shift():
    assert permcomb.shift((2, 1), 2) == (1, 2, 4, 3)
    assert permcomb.length(permcomb.shift((3, 1, 2), 4)) == permcomb.length((3, 1, 2))


def test_ascents_descents_partition():
    for w in permcomb.all_perms(5):
        a, d = permcomb.ascents(w), permcomb.descents(w)
        assert sorted(a + d) == list(range(1, 5))


def test_format_parse_perm_roundtrip():
    for w in [(3, 1, 2), (1,), tuple(range(12, 0, -1))]:
        assert permcomb.parse_perm(permcomb.format_perm(w)) == w
    assert permcomb.format_perm((3, 1, 5, 4, 2)) == "31542"
    assert permcomb.parse_perm("10,2,3,4,5,6,7,8,9,1")[0] == 10


def test_format_parse_comp():
    assert permcomb.parse_comp("0,2,1") == (0, 2, 1)
    assert permcomb.format_comp((0, 2, 1)) == "0,2,1"
    with pytest.raises(ValueError):
        permcomb.parse_comp("1,-2")


def test_comp_swap():
    assert permcomb.comp_swap((0, 2, 1), 1) == (2, 0, 1)
    with pytest.raises(IndexError):
        permcomb.comp_swap((1, 2), 2)
