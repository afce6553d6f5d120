"""Tests for pipe dream enumeration and the weight-sum oracle."""

import pytest

from orthodontia import families, permcomb, pipedreams
from orthodontia.pipedreams import PipeDream


def test_pipe_dream_cell_validation():
    with pytest.raises(ValueError):
        PipeDream(3, frozenset({(2, 2)}))
    PipeDream(3, frozenset({(1, 2), (2, 1)}))


def test_demazure_word_of():
    # empty filling reads to the identity
    assert pipedreams.demazure_word_of(PipeDream(3, frozenset())) == (1, 2, 3)
    # full staircase gives w0
    full = PipeDream(3, frozenset({(1, 1), (1, 2), (2, 1)}))
    assert pipedreams.demazure_word_of(full) == (3, 2, 1)
    # the two cells (1,2) and (2,1) both read as s_2
    assert pipedreams.demazure_word_of(PipeDream(3, frozenset({(1, 2)}))) == (1, 3, 2)
    assert pipedreams.demazure_word_of(PipeDream(3, frozenset({(2, 1)}))) == (1, 3, 2)


def test_enumeration_partitions_all_fillings():
    n = 4
    total = sum(len(pipedreams.enumerate_pd(w)) for w in permcomb.all_perms(n))
    assert total == 2 ** (n * (n - 1) // 2)


def test_identity_has_single_empty_dream():
    pds = pipedreams.enumerate_pd((1, 2, 3))
    assert len(pds) == 1 and not pds[0].crosses


def test_longest_has_single_full_dream():
    pds = pipedreams.enumerate_pd((4, 3, 2, 1))
    assert len(pds) == 1
    assert len(pds[0].crosses) == 6


def test_pd_count_1423():
    assert len(pipedreams.enumerate_pd((1, 4, 2, 3))) == 5


def test_reduced_dreams_have_length_many_crosses():
    for w in permcomb.all_perms(4):
        lw = permcomb.length(w)
        sizes = [len(P.crosses) for P in pipedreams.enumerate_pd(w)]
        assert min(sizes) == lw


def test_weight_sum_21():
    ws = pipedreams.weight_sum((2, 1))
    assert ws.to_str() == "y1 + x1 - x1*y1"


def test_weight_sum_132_includes_signed_nonreduced_dream():
    # three dreams: {(1,2)}, {(2,1)}, and the doubled one with sign -1
    from orthodontia.polyring import Polynomial

    n = 3
    x = lambda i: Polynomial.var_x(i, n, n)
    y = lambda j: Polynomial.var_y(j, n, n)
    A = x(1) + y(2) - x(1) * y(2)
    B = x(2) + y(1) - x(2) * y(1)
    assert pipedreams.weight_sum((1, 3, 2)) == A + B - A * B


def test_weight_sum_matches_recursion_s4():
    for w in permcomb.all_perms(4):
        assert pipedreams.weight_sum(w) == families.double_grothendieck(w)


def test_brute_force_cap():
    with pytest.raises(ValueError):
        pipedreams.enumerate_pd(tuple(range(1, 9)))
