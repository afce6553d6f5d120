"""Expansion in the Lascoux basis and the positivity check pipelines.

The expander peels off the lex-minimal monomial of the lowest-degree part
of the remainder; termination rests on the triangularity of the basis,
which the test suite verifies as a premise rather than assuming.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from . import diagrams, families, permcomb
from .diagrams import Diagram
from .diffops import phi
from .permcomb import Composition
from .polyring import Polynomial


class ExpansionError(RuntimeError):
    pass


@dataclass
class LascouxExpansion:
    n: int
    coeffs: dict[Composition, int]
    baseline_degree: int

    def reconstruct(self) -> Polynomial:
        out = Polynomial.zero(self.n, 0)
        for alpha, c in self.coeffs.items():
            out = out + families.lascoux(alpha).scale(c)
        return out

    def sorted_items(self) -> list[tuple[Composition, int]]:
        return sorted(self.coeffs.items())

    def to_json_list(self) -> list[dict]:
        return [{"alpha": list(a), "c": c} for a, c in self.sorted_items()]


@dataclass
class PositivityVerdict:
    positive: bool
    violations: list[Composition] = field(default_factory=list)


def lascoux_expand(f: Polynomial) -> LascouxExpansion:
    """Unique coefficients c_alpha with sum c_alpha L_alpha = f."""
    if f.m != 0:
        raise ValueError("lascoux_expand requires a polynomial without y variables")
    n = f.n
    if f.is_zero():
        return LascouxExpansion(n, {}, 0)
    d0 = f.min_degree()
    maxdeg = max((f.per_variable_degree("x", i) for i in range(1, n + 1)), default=0)
    cap = (maxdeg + 1) ** n
    coeffs: dict[Composition, int] = {}
    r = f
    for _ in range(cap + 1):
        if r.is_zero():
            return LascouxExpansion(n, coeffs, d0)
        low = r.lowest_degree_part()
        beta = min(xe for xe, _ in low.terms)
        c = low.terms[(beta, ())]
        coeffs[beta] = coeffs.get(beta, 0) + c
        if coeffs[beta] == 0:
            del coeffs[beta]
        r = r - families.lascoux(beta).scale(c)
    raise ExpansionError(
        f"expansion did not terminate within {cap} steps; triangularity premise violated?"
    )


def graded_positive(e: LascouxExpansion) -> PositivityVerdict:
    """Check sign(c_alpha) = (-1)^(|alpha| - d0) for every coefficient."""
    violations = [
        alpha
        for alpha, c in e.sorted_items()
        if (c > 0) != ((sum(alpha) - e.baseline_degree) % 2 == 0)
    ]
    return PositivityVerdict(not violations, violations)


@dataclass
class Theorem12Result:
    verdict: PositivityVerdict
    expansion: LascouxExpansion


def theorem12_check(D: Diagram, require_inclusion: bool = True) -> Theorem12Result:
    """Expand flip(script_S(D)|_{y -> -1}, ncols) and check graded positivity."""
    if require_inclusion and not diagrams.columns_ordered_by_inclusion(D):
        raise ValueError("columns are not ordered by inclusion (pass require_inclusion=False)")
    m = D.ncols
    s = families.script_S_neg1(D)
    for i in range(1, D.nrows + 1):
        if s.per_variable_degree("x", i) > m:
            raise ValueError(
                f"specialized script_S has x_{i}-degree {s.per_variable_degree('x', i)} > m={m}"
            )
    e = lascoux_expand(s.flip(m))
    return Theorem12Result(graded_positive(e), e)


# -- scan items (module-level so they pickle for worker pools) ------------


def conj15_item(args: tuple[Composition, int]) -> dict:
    alpha, i = args
    e = lascoux_expand(phi(families.lascoux(alpha), i))
    v = graded_positive(e)
    return {
        "item": {"alpha": list(alpha), "i": i},
        "verdict": "positive" if v.positive else "violation",
        "expansion": e.to_json_list(),
        "d0": e.baseline_degree,
    }


def conj15_items(n: int, maxentry: int) -> list[tuple[Composition, int]]:
    return [
        (alpha, i)
        for alpha in product(range(maxentry + 1), repeat=n)
        for i in range(1, n + 1)
    ]


def conj14_item(D: Diagram) -> dict:
    res = theorem12_check(D, require_inclusion=False)
    return {
        "item": {"diagram": diagrams.format_diagram(D)},
        "verdict": "positive" if res.verdict.positive else "violation",
        "expansion": res.expansion.to_json_list(),
        "d0": res.expansion.baseline_degree,
    }


def conj14_items(n: int, m: int) -> list[Diagram]:
    return [D for D in diagrams.all_diagrams(n, m) if diagrams.is_percent_avoiding(D)]


def thm12_vexillary_item(w) -> dict:
    res = theorem12_check(diagrams.rothe(w), require_inclusion=False)
    return {
        "item": {"w": permcomb.format_perm(w)},
        "verdict": "positive" if res.verdict.positive else "violation",
        "expansion": res.expansion.to_json_list(),
        "d0": res.expansion.baseline_degree,
    }


def thm12_vexillary_items(nmax: int) -> list:
    return [w for w in permcomb.all_perms(nmax) if permcomb.is_vexillary(w)]
