"""The operator algebra acting on polynomials.

Divided differences and their decorated variants, the doubled operators
used by the orthodontia formulas, the omega weight products, and the phi
multipliers.  Everything is exact: the divided difference is computed
per-term with the telescoping formula, so no rational functions appear.
"""

from __future__ import annotations

from typing import Iterable

from .polyring import Monomial, Polynomial


def divided_difference(f: Polynomial, i: int) -> Polynomial:
    """d_i(f) = (f - s_i f) / (x_i - x_{i+1}), computed term by term.

    For a term x_i^a x_{i+1}^b u with u free of x_i, x_{i+1}:
    zero if a = b, a telescoping sum of a-b (resp. b-a) monomials otherwise.
    y-exponents ride along untouched.
    """
    if not 1 <= i <= f.n - 1:
        raise IndexError(f"d_{i} out of range for n={f.n}")
    terms: dict[Monomial, int] = {}

    def bump(xe, ye, c):
        mon = (xe, ye)
        new = terms.get(mon, 0) + c
        if new:
            terms[mon] = new
        else:
            del terms[mon]

    for (xe, ye), c in f.terms.items():
        a, b = xe[i - 1], xe[i]
        if a == b:
            continue
        base = list(xe)
        if a > b:
            for k in range(a - b):
                base[i - 1], base[i] = b + k, a - 1 - k
                bump(tuple(base), ye, c)
        else:
            for k in range(b - a):
                base[i - 1], base[i] = a + k, b - 1 - k
                bump(tuple(base), ye, -c)
    out = Polynomial.zero(f.n, f.m)
    out.terms = terms
    return out


def _one_minus_x(i: int, n: int, m: int) -> Polynomial:
    return Polynomial.one(n, m) - Polynomial.var_x(i, n, m)


def isobaric(f: Polynomial, i: int) -> Polynomial:
    """dbar_i(f) = d_i((1 - x_{i+1}) f)."""
    return divided_difference(_one_minus_x(i + 1, f.n, f.m) * f, i)


def demazure(f: Polynomial, i: int) -> Polynomial:
    """pi_i(f) = d_i(x_i f)."""
    return divided_difference(Polynomial.var_x(i, f.n, f.m) * f, i)


def demazure_lascoux(f: Polynomial, i: int) -> Polynomial:
    """pibar_i(f) = dbar_i(x_i f)."""
    return isobaric(Polynomial.var_x(i, f.n, f.m) * f, i)


def _xy_factor(i: int, j: int, n: int, m: int, barred: bool) -> Polynomial:
    """x_i + y_j (unbarred) or x_i + y_j - x_i y_j (barred)."""
    x = Polynomial.var_x(i, n, m)
    y = Polynomial.var_y(j, n, m)
    return x + y - x * y if barred else x + y


def pi_double(f: Polynomial, i: int, j: int) -> Polynomial:
    """pi_{i,j}(f) = d_i((x_i + y_j) f)."""
    return divided_difference(_xy_factor(i, j, f.n, f.m, barred=False) * f, i)


def pibar_double(f: Polynomial, i: int, j: int) -> Polynomial:
    """pibar_{i,j}(f) = dbar_i((x_i + y_j - x_i y_j) f)."""
    return isobaric(_xy_factor(i, j, f.n, f.m, barred=True) * f, i)


def omega(i: int, M: Iterable[int], barred: bool, n: int, m: int) -> Polynomial:
    """Product over j in [i], s in M of x_j + y_s (- x_j y_s when barred)."""
    if not 0 <= i <= n:
        raise IndexError(f"omega_{i} out of range for n={n}")
    out = Polynomial.one(n, m)
    for s in sorted(M):
        if not 1 <= s <= m:
            raise IndexError(f"column index {s} out of range for m={m}")
        for j in range(1, i + 1):
            out = out * _xy_factor(j, s, n, m, barred)
    return out


def phi(f: Polynomial, i: int) -> Polynomial:
    """phi_i(f) = x_1 ... x_i (1 - x_{i+1}) ... (1 - x_n) f."""
    if f.m != 0:
        raise ValueError("phi requires a polynomial without y variables")
    if not 0 <= i <= f.n:
        raise IndexError(f"phi_{i} out of range for n={f.n}")
    out = f
    for j in range(1, i + 1):
        out = out * Polynomial.var_x(j, f.n, 0)
    for j in range(i + 1, f.n + 1):
        out = out * _one_minus_x(j, f.n, 0)
    return out


_SINGLE_OPS = {
    "d": divided_difference,
    "dbar": isobaric,
    "pi": demazure,
    "pibar": demazure_lascoux,
}


def apply_word(f: Polynomial, word: Iterable[tuple[str, int]]) -> Polynomial:
    """Left fold of named single-index operators over f.

    word is a sequence of (op, i) with op in {"d", "dbar", "pi", "pibar"}.
    """
    for op, i in word:
        f = _SINGLE_OPS[op](f, i)
    return f
