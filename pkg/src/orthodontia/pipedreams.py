"""Brute-force pipe dream enumeration and the weight-sum formula.

The independent oracle for every Grothendieck computation: enumerate all
cross fillings of the staircase grid, bucket them by Demazure product,
and sum the (x_i + y_j - x_i y_j) weights.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import permcomb
from .permcomb import Permutation
from .polyring import Polynomial

MAX_BRUTE_N = 7


@dataclass(frozen=True)
class PipeDream:
    n: int
    crosses: frozenset[tuple[int, int]]

    def __post_init__(self):
        for i, j in self.crosses:
            if not (1 <= i and 1 <= j and i + j <= self.n):
                raise ValueError(f"cell {(i, j)} outside the staircase for n={self.n}")

    def sorted_crosses(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.crosses))


def staircase_cells(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n) for j in range(1, n - i + 1)]


def demazure_word_of(P: PipeDream) -> Permutation:
    """Demazure product of s_{i+j-1} over crosses, row by row, right to left."""
    w = permcomb.identity(P.n)
    for i, j in sorted(P.crosses, key=lambda c: (c[0], -c[1])):
        w = permcomb.demazure_star(w, i + j - 1)
    return w


_buckets: dict[int, dict[Permutation, list[PipeDream]]] = {}


def _enumerate_all(n: int) -> dict[Permutation, list[PipeDream]]:
    """One sweep over all 2^(n(n-1)/2) fillings, bucketed by Demazure product."""
    if n in _buckets:
        return _buckets[n]
    if n > MAX_BRUTE_N:
        raise ValueError(f"n={n} too large for brute-force enumeration (max {MAX_BRUTE_N})")
    cells = staircase_cells(n)
    buckets: dict[Permutation, list[PipeDream]] = {}
    for mask in range(1 << len(cells)):
        crosses = frozenset(cells[k] for k in range(len(cells)) if mask >> k & 1)
        P = PipeDream(n, crosses)
        buckets.setdefault(demazure_word_of(P), []).append(P)
    for plist in buckets.values():
        plist.sort(key=PipeDream.sorted_crosses)
    _buckets[n] = buckets
    return buckets


def enumerate_pd(w: Permutation) -> list[PipeDream]:
    """All pipe dreams P with Demazure product w, in canonical order."""
    permcomb.check_perm(w)
    return list(_enumerate_all(len(w)).get(tuple(w), []))


def weight_sum(w: Permutation) -> Polynomial:
    """Signed sum over PD(w) of prod (x_i + y_j - x_i y_j); equals G_w(x, y).

    A pipe dream with more crosses than l(w) is nonreduced and enters with
    sign (-1)^(#crosses - l(w)), matching the recursion convention where
    the isobaric operator carries the (1 - x_{i+1}) factor.
    """
    n = len(permcomb.check_perm(w))
    lw = permcomb.length(w)
    total = Polynomial.zero(n, n)
    for P in enumerate_pd(w):
        sign = -1 if (len(P.crosses) - lw) % 2 else 1
        term = Polynomial.const(sign, n, n)
        for i, j in P.sorted_crosses():
            x = Polynomial.var_x(i, n, n)
            y = Polynomial.var_y(j, n, n)
            term = term * (x + y - x * y)
        total = total + term
    return total
