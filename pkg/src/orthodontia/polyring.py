"""Sparse multivariate polynomials with exact integer coefficients.

A polynomial lives in Z[x_1..x_n, y_1..y_m] for a fixed ambient (n, m).
Terms are stored as a dict mapping (xexp, yexp) exponent-tuple pairs to
nonzero integer coefficients.  All operations return fresh values; nothing
is mutated after construction.
"""

from __future__ import annotations

from typing import Iterable, Iterator

Monomial = tuple[tuple[int, ...], tuple[int, ...]]


class AmbientMismatch(ValueError):
    pass


def _term_key(item: tuple[Monomial, int]):
    (xe, ye), _ = item
    return (sum(xe) + sum(ye), xe, ye)


class Polynomial:
    __slots__ = ("n", "m", "terms")

    def __init__(self, n: int, m: int, terms: dict[Monomial, int] | None = None):
        self.n = n
        self.m = m
        clean: dict[Monomial, int] = {}
        if terms:
            for (xe, ye), c in terms.items():
                if len(xe) != n or len(ye) != m:
                    raise ValueError(f"exponent vectors do not match ambient ({n},{m})")
                if c != 0:
                    clean[(tuple(xe), tuple(ye))] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(n: int, m: int = 0) -> "Polynomial":
        return Polynomial(n, m)

    @staticmethod
    def const(c: int, n: int, m: int = 0) -> "Polynomial":
        return Polynomial(n, m, {((0,) * n, (0,) * m): c})

    @staticmethod
    def one(n: int, m: int = 0) -> "Polynomial":
        return Polynomial.const(1, n, m)

    @staticmethod
    def var_x(i: int, n: int, m: int = 0) -> "Polynomial":
        if not 1 <= i <= n:
            raise IndexError(f"x_{i} out of range for n={n}")
        xe = tuple(1 if k == i - 1 else 0 for k in range(n))
        return Polynomial(n, m, {(xe, (0,) * m): 1})

    @staticmethod
    def var_y(j: int, n: int, m: int) -> "Polynomial":
        if not 1 <= j <= m:
            raise IndexError(f"y_{j} out of range for m={m}")
        ye = tuple(1 if k == j - 1 else 0 for k in range(m))
        return Polynomial(n, m, {((0,) * n, ye): 1})

    @staticmethod
    def monomial(xexp: Iterable[int], yexp: Iterable[int] = (), coeff: int = 1) -> "Polynomial":
        xe, ye = tuple(xexp), tuple(yexp)
        return Polynomial(len(xe), len(ye), {(xe, ye): coeff})

    # -- basics ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self.m == other.m and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, self.m, frozenset(self.terms.items())))

    def _check_ambient(self, other: "Polynomial"):
        if self.n != other.n or self.m != other.m:
            raise AmbientMismatch(
                f"ambient mismatch: ({self.n},{self.m}) vs ({other.n},{other.m})"
            )

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_ambient(other)
        terms = dict(self.terms)
        for mon, c in other.terms.items():
            new = terms.get(mon, 0) + c
            if new:
                terms[mon] = new
            else:
                terms.pop(mon, None)
        out = Polynomial.zero(self.n, self.m)
        out.terms = terms
        return out

    def __neg__(self) -> "Polynomial":
        out = Polynomial.zero(self.n, self.m)
        out.terms = {mon: -c for mon, c in self.terms.items()}
        return out

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check_ambient(other)
        terms: dict[Monomial, int] = {}
        for (xa, ya), ca in self.terms.items():
            for (xb, yb), cb in other.terms.items():
                mon = (
                    tuple(a + b for a, b in zip(xa, xb)),
                    tuple(a + b for a, b in zip(ya, yb)),
                )
                new = terms.get(mon, 0) + ca * cb
                if new:
                    terms[mon] = new
                else:
                    del terms[mon]
        out = Polynomial.zero(self.n, self.m)
        out.terms = terms
        return out

    def scale(self, c: int) -> "Polynomial":
        if c == 0:
            return Polynomial.zero(self.n, self.m)
        out = Polynomial.zero(self.n, self.m)
        out.terms = {mon: c * k for mon, k in self.terms.items()}
        return out

    # -- degree structure --------------------------------------------------

    def total_degree(self) -> int:
        """Maximum total degree over terms (0 for the zero polynomial)."""
        if not self.terms:
            return 0
        return max(sum(xe) + sum(ye) for xe, ye in self.terms)

    def min_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no minimal degree")
        return min(sum(xe) + sum(ye) for xe, ye in self.terms)

    def lowest_degree_part(self) -> "Polynomial":
        """The sum of terms of minimal total degree."""
        d = self.min_degree()
        out = Polynomial.zero(self.n, self.m)
        out.terms = {
            (xe, ye): c for (xe, ye), c in self.terms.items() if sum(xe) + sum(ye) == d
        }
        return out

    def per_variable_degree(self, which: str, i: int) -> int:
        """Maximum exponent of x_i or y_i across terms."""
        if which == "x":
            if not 1 <= i <= self.n:
                raise IndexError(f"x_{i} out of range for n={self.n}")
            return max((xe[i - 1] for xe, _ in self.terms), default=0)
        if which == "y":
            if not 1 <= i <= self.m:
                raise IndexError(f"y_{i} out of range for m={self.m}")
            return max((ye[i - 1] for _, ye in self.terms), default=0)
        raise ValueError(f"which must be 'x' or 'y', got {which!r}")

    # -- specializations ---------------------------------------------------

    def substitute_y(self, c: int) -> "Polynomial":
        """Replace every y_j by the integer c; result has m = 0."""
        terms: dict[Monomial, int] = {}
        for (xe, ye), k in self.terms.items():
            mon = (xe, ())
            new = terms.get(mon, 0) + k * c ** sum(ye)
            if new:
                terms[mon] = new
            else:
                terms.pop(mon, None)
        out = Polynomial.zero(self.n, 0)
        out.terms = terms
        return out

    def negate_y(self) -> "Polynomial":
        """y_j -> -y_j for all j."""
        out = Polynomial.zero(self.n, self.m)
        out.terms = {
            (xe, ye): (-c if sum(ye) % 2 else c) for (xe, ye), c in self.terms.items()
        }
        return out

    def flip(self, mcap: int) -> "Polynomial":
        """The involution r_{mcap,n}: x_1^mcap ... x_n^mcap f(x_n^-1, ..., x_1^-1).

        Requires m = 0 and per-variable x-degree at most mcap.
        """
        if self.m != 0:
            raise ValueError("flip requires a polynomial without y variables")
        terms: dict[Monomial, int] = {}
        for (xe, _), c in self.terms.items():
            if any(e > mcap for e in xe):
                raise ValueError(f"per-variable degree exceeds cap {mcap}: {xe}")
            terms[(tuple(mcap - e for e in reversed(xe)), ())] = c
        out = Polynomial.zero(self.n, 0)
        out.terms = terms
        return out

    def restrict_x(self, p: int) -> "Polynomial":
        """Set x_i = 0 for i > p and re-ambient to p x-variables (pad if p > n)."""
        terms: dict[Monomial, int] = {}
        for (xe, ye), c in self.terms.items():
            if any(e != 0 for e in xe[p:]):
                continue
            new_xe = tuple(xe[:p]) + (0,) * max(0, p - self.n)
            terms[(new_xe, ye)] = c
        out = Polynomial.zero(p, self.m)
        out.terms = terms
        return out

    def coefficient(self, xexp: Iterable[int], yexp: Iterable[int] = ()) -> int:
        ye = tuple(yexp) if yexp else (0,) * self.m
        return self.terms.get((tuple(xexp), ye), 0)

    # -- exact division ----------------------------------------------------

    def divided_by(self, g: "Polynomial") -> "Polynomial | None":
        """Exact quotient self / g, or None if g does not divide self."""
        self._check_ambient(g)
        if g.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        lead_g = max(g.terms.items(), key=_term_key)
        (gxe, gye), gc = lead_g
        q = Polynomial.zero(self.n, self.m)
        r = self
        while r.terms:
            (rxe, rye), rc = max(r.terms.items(), key=_term_key)
            if rc % gc != 0:
                return None
            dxe = tuple(a - b for a, b in zip(rxe, gxe))
            dye = tuple(a - b for a, b in zip(rye, gye))
            if any(e < 0 for e in dxe) or any(e < 0 for e in dye):
                return None
            t = Polynomial(self.n, self.m, {(dxe, dye): rc // gc})
            q = q + t
            r = r - t * g
        return q

    # -- serialization and printing ---------------------------------------

    def canonical_terms(self) -> Iterator[tuple[Monomial, int]]:
        """Terms in canonical order: graded, then lex on (xexp, yexp), x_1 first."""
        return iter(sorted(self.terms.items(), key=_term_key))

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "terms": [
                {"x": list(xe), "y": list(ye), "c": c}
                for (xe, ye), c in self.canonical_terms()
            ],
        }

    @staticmethod
    def from_json_dict(d: dict) -> "Polynomial":
        terms = {
            (tuple(t["x"]), tuple(t["y"])): int(t["c"]) for t in d["terms"]
        }
        return Polynomial(int(d["n"]), int(d["m"]), terms)

    def _term_str(self, xe, ye, latex: bool = False) -> str:
        parts = []
        for name, exps in (("x", xe), ("y", ye)):
            for i, e in enumerate(exps, start=1):
                if e == 0:
                    continue
                if latex:
                    v = f"{name}_{{{i}}}" if i > 9 else f"{name}_{i}"
                    parts.append(v if e == 1 else f"{v}^{{{e}}}")
                else:
                    parts.append(f"{name}{i}" if e == 1 else f"{name}{i}^{e}")
        if latex:
            return " ".join(parts) if parts else "1"
        return "*".join(parts) if parts else "1"

    def to_str(self, latex: bool = False) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for (xe, ye), c in self.canonical_terms():
            mono = self._term_str(xe, ye, latex)
            mag = abs(c)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}{' ' if latex else '*'}{mono}"
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(chunks)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"Polynomial({self.n},{self.m}: {self.to_str()})"
