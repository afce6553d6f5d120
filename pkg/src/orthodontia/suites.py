"""Named verification suites over the structural results.

Each suite sweeps an index range, checks exact identities, and returns a
count plus a list of failure descriptions.  The CLI `verify` subcommand
and the acceptance tests both run these.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product

from . import diagrams, diffops, families, lascouxbasis, permcomb, pipedreams, sortorder
from .diagrams import rothe
from .permcomb import Permutation, all_perms, format_perm
from .polyring import Polynomial


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    def check(self, ok: bool, msg: str):
        self.checked += 1
        if not ok:
            self.failures.append(msg)

    @property
    def passed(self) -> bool:
        return not self.failures


def suite_thm11(nmax: int) -> SuiteResult:
    """Triple agreement: recursion = pipe-dream sum = orthodontia evaluator."""
    res = SuiteResult("thm11")
    for n in range(2, nmax + 1):
        for w in all_perms(n):
            dg = families.double_grothendieck(w)
            res.check(
                pipedreams.weight_sum(w) == dg,
                f"weight_sum != double_grothendieck at w={format_perm(w)}",
            )
            res.check(
                families.script_G(rothe(w)) == dg,
                f"script_G != double_grothendieck at w={format_perm(w)}",
            )
    return res


def suite_cor_double_schub(nmax: int) -> SuiteResult:
    """script_S(rothe(w)) = S_w(x, -y); both Schubert routes agree."""
    res = SuiteResult("cor-double-schub")
    for n in range(2, nmax + 1):
        for w in all_perms(n):
            ds = families.double_schubert(w)
            res.check(
                ds == families.double_schubert_via_lowest(w),
                f"schubert recursion != lowest-degree route at w={format_perm(w)}",
            )
            res.check(
                families.script_S(rothe(w)) == ds.negate_y(),
                f"script_S != negate_y(double_schubert) at w={format_perm(w)}",
            )
    return res


def _sorted_window_sets(w: Permutation):
    pcd = sortorder.primary_column_data(w)
    S = frozenset(range(pcd.h - pcd.beta + 1, pcd.h + 1))
    lam = diagrams.rothe(sortorder.sigma_of(w)).columns
    lam_sizes = tuple(len(lam[b - 1]) if b - 1 < len(lam) else 0 for b in range(1, pcd.beta + 1))
    return pcd, S, lam_sizes


def suite_prop_os1(nmax: int) -> SuiteResult:
    """Difference-set formula, sequence-data equalities, and factorization."""
    res = SuiteResult("prop-os1")
    for n in range(2, nmax + 1):
        for w in all_perms(n):
            ws = sortorder.sort_of(w)
            pcd, S, lam = _sorted_window_sets(w)
            Dw = set(rothe(w).cells())
            Dws = set(rothe(ws).cells())
            expected_diff = {
                (pcd.alpha + a, pcd.h - pcd.beta + b)
                for b in range(1, pcd.beta + 1)
                for a in range(1, lam[b - 1] + 1)
            }
            res.check(
                Dws <= Dw and Dw - Dws == expected_diff,
                f"difference-set mismatch at w={format_perm(w)}",
            )

            seq_w = diagrams.orthodontic_sequence(rothe(w))
            seq_s = diagrams.orthodontic_sequence(rothe(ws))
            res.check(
                (seq_w.i, seq_w.j, seq_w.M) == (seq_s.i, seq_s.j, seq_s.M),
                f"(i,j,M) sequence mismatch at w={format_perm(w)}",
            )
            ok = True
            for j in range(1, n + 1):
                Kp = seq_s.K[j - 1]
                if pcd.alpha > 0 and j == pcd.alpha:
                    zero_cols = {
                        pcd.h - pcd.beta + b for b in range(1, pcd.beta + 1) if lam[b - 1] == 0
                    }
                    expect = (Kp - S) | zero_cols
                elif pcd.alpha < j <= pcd.i1:
                    Sa = {
                        pcd.h - pcd.beta + b
                        for b in range(1, pcd.beta + 1)
                        if lam[b - 1] == j - pcd.alpha
                    }
                    expect = Kp | Sa
                else:
                    expect = Kp
                ok = ok and seq_w.K[j - 1] == frozenset(expect)
            res.check(ok, f"K-transformation mismatch at w={format_perm(w)}")

            # exact division of G_w by the removed-box product
            prod = Polynomial.one(n, n)
            for a, b in sorted(Dw - Dws):
                x = Polynomial.var_x(a, n, n)
                y = Polynomial.var_y(b, n, n)
                prod = prod * (x + y - x * y)
            q = families.double_grothendieck(w).divided_by(prod)
            res.check(
                q is not None and q == families.double_grothendieck(ws),
                f"factorization fails at w={format_perm(w)}",
            )
    return res


def sorted_structure_parts(w: Permutation) -> list[str]:
    """Structural claims about the orthodontic sequence of a sorted w."""
    pcd, S, _ = _sorted_window_sets(w)
    seq = diagrams.orthodontic_sequence(rothe(w))
    bad = []
    if len(seq.i) < pcd.beta:
        return [f"fewer than beta={pcd.beta} orthodontic steps at w={format_perm(w)}"]
    for k in range(1, pcd.beta + 1):
        if seq.i[k - 1] != pcd.i1 - k + 1:
            bad.append(f"part 1 fails at w={format_perm(w)}, k={k}")
        if seq.j[k - 1] != pcd.h - pcd.beta + k:
            bad.append(f"part 2 fails at w={format_perm(w)}, k={k}")
    if pcd.alpha > 0 and not S <= seq.K[pcd.alpha - 1]:
        bad.append(f"part 3 fails at w={format_perm(w)}")
    for k in range(pcd.alpha + 1, pcd.i1 + 1):
        if seq.K[k - 1]:
            bad.append(f"part 4 fails at w={format_perm(w)}, k={k}")
    for k in range(1, pcd.beta):
        if seq.M[k - 1]:
            bad.append(f"part 5 fails at w={format_perm(w)}, k={k}")
    return bad


def sorted_cover_check(w: Permutation, endpoint: str) -> bool:
    """Does w' = w s_{i1} ... s_(endpoint) carry the predicted sequence?"""
    pcd, S, _ = _sorted_window_sets(w)
    seq = diagrams.orthodontic_sequence(rothe(w))
    (wprime,) = sortorder.os_covers(w, endpoint=endpoint)
    seq2 = diagrams.orthodontic_sequence(rothe(wprime))
    b = pcd.beta
    if (seq2.i, seq2.j, seq2.M) != (seq.i[b:], seq.j[b:], seq.M[b:]):
        return False
    K = list(seq.K)
    if pcd.alpha > 0:
        expect = (
            K[: pcd.alpha - 1]
            + [K[pcd.alpha - 1] - S, S | seq.M[b - 1]]
            + K[pcd.alpha + 1 :]
        )
    else:
        expect = [S | seq.M[b - 1]] + K[1:]
    return list(seq2.K) == [frozenset(e) for e in expect]


def suite_thm_os2(nmax: int, endpoint: str = "alpha-plus-one") -> SuiteResult:
    """Sorted-case structure, parts (1)-(6), for sorted nonidentity w."""
    res = SuiteResult("thm-os2")
    for n in range(2, nmax + 1):
        for w in all_perms(n):
            if w == permcomb.identity(n) or not sortorder.is_sorted_perm(w):
                continue
            bad = sorted_structure_parts(w)
            res.check(not bad, "; ".join(bad))
            res.check(
                sorted_cover_check(w, endpoint),
                f"part 6 ({endpoint}) fails at w={format_perm(w)}",
            )
    return res


def random_polynomial(rng: random.Random, n: int, m: int, maxdeg: int = 4, nterms: int = 5) -> Polynomial:
    terms = {}
    for _ in range(nterms):
        budget = rng.randint(0, maxdeg)
        xe = [0] * n
        ye = [0] * m
        for _ in range(budget):
            k = rng.randrange(n + m)
            if k < n:
                xe[k] += 1
            else:
                ye[k - n] += 1
        terms[(tuple(xe), tuple(ye))] = rng.randint(-5, 5)
    return Polynomial(n, m, {mon: c for mon, c in terms.items() if c})


def suite_operators(nmax: int = 4, count: int = 500, seed: int = 2024) -> SuiteResult:
    """Braid/commutation relations plus nilpotence and idempotence."""
    res = SuiteResult("operators")
    rng = random.Random(seed)
    ops = {
        "d": diffops.divided_difference,
        "dbar": diffops.isobaric,
        "pi": diffops.demazure,
        "pibar": diffops.demazure_lascoux,
    }
    for t in range(count):
        n = rng.randint(3, max(3, nmax))
        m = rng.choice([0, 2])
        f = random_polynomial(rng, n, m)
        name, op = rng.choice(list(ops.items()))
        i = rng.randint(1, n - 2)
        res.check(
            op(op(op(f, i), i + 1), i) == op(op(op(f, i + 1), i), i + 1),
            f"braid fails for {name} at trial {t}",
        )
        if n >= 4:
            res.check(
                op(op(f, 1), 3) == op(op(f, 3), 1),
                f"commutation fails for {name} at trial {t}",
            )
        j = rng.randint(1, n - 1)
        res.check(
            diffops.divided_difference(diffops.divided_difference(f, j), j).is_zero(),
            f"d_i d_i != 0 at trial {t}",
        )
        g = diffops.demazure(f, j)
        res.check(diffops.demazure(g, j) == g, f"pi_i not idempotent at trial {t}")
        gb = diffops.demazure_lascoux(f, j)
        res.check(
            diffops.demazure_lascoux(gb, j) == gb, f"pibar_i not idempotent at trial {t}"
        )
    return res


def _elementary_symmetric(r: int, lo: int, hi: int, n: int, m: int) -> Polynomial:
    """e_r in the variables x_lo..x_hi, in ambient (n, m)."""
    from itertools import combinations

    out = Polynomial.zero(n, m)
    for sub in combinations(range(lo, hi + 1), r):
        xe = [0] * n
        for j in sub:
            xe[j - 1] = 1
        out = out + Polynomial(n, m, {(tuple(xe), (0,) * m): 1})
    return out


def swap_x(f: Polynomial, i: int) -> Polynomial:
    terms = {}
    for (xe, ye), c in f.terms.items():
        xl = list(xe)
        xl[i - 1], xl[i] = xl[i], xl[i - 1]
        terms[(tuple(xl), ye)] = c
    return Polynomial(f.n, f.m, terms)


def suite_lemma4(count: int = 200, seed: int = 77) -> SuiteResult:
    """Specialization/intertwining identities and the pi-to-del lemma."""
    res = SuiteResult("lemma4")
    rng = random.Random(seed)

    for t in range(count):
        n = rng.randint(2, 4)
        m = rng.randint(1, 3)
        i = rng.randint(1, n)
        M = frozenset(rng.sample(range(1, m + 1), rng.randint(0, m)))
        # omega-spec
        lhs = diffops.omega(i, M, False, n, m).substitute_y(-1)
        rhs = Polynomial.one(n, 0)
        for j in range(1, i + 1):
            factor = Polynomial.var_x(j, n, 0) - Polynomial.one(n, 0)
            for _ in range(len(M)):
                rhs = rhs * factor
        res.check(lhs == rhs, f"omega-spec fails at trial {t}")

        # omega-int and pi-int act on y-free polynomials under a degree cap
        mcap = rng.randint(1, 3)
        f = random_polynomial(rng, n, 0, maxdeg=mcap, nterms=4)
        prod = f
        for j in range(1, i + 1):
            prod = prod * (Polynomial.var_x(j, n, 0) - Polynomial.one(n, 0))
        res.check(
            prod.flip(mcap + 1) == diffops.phi(f.flip(mcap), n - i),
            f"omega-int fails at trial {t}",
        )
        if i <= n - 1:
            di = diffops.divided_difference(
                (Polynomial.var_x(i, n, 0) - Polynomial.one(n, 0)) * f, i
            )
            res.check(
                di.flip(mcap) == diffops.demazure_lascoux(f.flip(mcap), n - i),
                f"pi-int fails at trial {t}",
            )

        # pi-spec on polynomials with y variables present
        g = random_polynomial(rng, n, m)
        ii = rng.randint(1, n - 1)
        jj = rng.randint(1, m)
        lhs = diffops.pi_double(g, ii, jj).substitute_y(-1)
        rhs = diffops.divided_difference(
            (Polynomial.var_x(ii, n, 0) - Polynomial.one(n, 0)) * g.substitute_y(-1), ii
        )
        res.check(lhs == rhs, f"pi-spec fails at trial {t}")

    # pi-to-del: g symmetric in x_{i+1}..x_{i+k+1} so the d-vanishing holds
    for t in range(40):
        k = rng.randint(0, 3)
        i = rng.randint(1, 2)
        n = i + k + 1
        m = rng.randint(1, 2)
        g = _elementary_symmetric(rng.randint(1, k + 1), i + 1, i + k + 1, n, m)
        h = random_polynomial(rng, n, m, maxdeg=2, nterms=3)
        h = Polynomial(n, m, {
            (xe, ye): c for (xe, ye), c in h.terms.items()
            if all(xe[j] == 0 for j in range(i, i + k + 1))
        })
        if h.is_zero():
            h = Polynomial.one(n, m)
        g = g * h
        assert all(
            diffops.divided_difference(g, j).is_zero() for j in range(i + 1, i + k + 1)
        )
        js = [rng.randint(1, m) for _ in range(k + 1)]
        lhs = g
        for a in range(k + 1):
            lhs = diffops.pibar_double(lhs, i + a, js[a])
        rhs = g
        for a in range(k + 1):
            x = Polynomial.var_x(i, n, m)
            y = Polynomial.var_y(js[a], n, m)
            rhs = rhs * (x + y - x * y)
        for a in range(k + 1):
            rhs = diffops.isobaric(rhs, i + a)
        res.check(lhs == rhs, f"pi-to-del fails at trial {t} (k={k})")
    return res


def suite_triangularity(nmax: int = 4, maxentry: int = 4, roundtrips: int = 200, seed: int = 11) -> SuiteResult:
    """The premises underwriting the Lascoux expander, plus round-trips."""
    res = SuiteResult("triangularity")
    for n in range(1, nmax + 1):
        for beta in product(range(maxentry + 1), repeat=n):
            L = families.lascoux(beta)
            res.check(
                L.coefficient(beta) == 1,
                f"x^beta coefficient != 1 at beta={beta}",
            )
            res.check(
                L.min_degree() == sum(beta),
                f"lowest degree != |beta| at beta={beta}",
            )
            low = L.lowest_degree_part()
            res.check(
                min(xe for xe, _ in low.terms) == beta,
                f"x^beta not lex-minimal in lowest part at beta={beta}",
            )
            cap = max(beta, default=0)
            res.check(
                all(L.per_variable_degree("x", i) <= cap for i in range(1, n + 1)),
                f"per-variable degree exceeds max entry at beta={beta}",
            )
    rng = random.Random(seed)
    for t in range(roundtrips):
        n = rng.randint(1, 4)
        f = random_polynomial(rng, n, 0, maxdeg=3, nterms=4)
        e = lascouxbasis.lascoux_expand(f)
        res.check(e.reconstruct() == f, f"round-trip fails at trial {t}")
    return res


SUITES = {
    "thm11": suite_thm11,
    "cor-double-schub": suite_cor_double_schub,
    "prop-os1": suite_prop_os1,
    "thm-os2": suite_thm_os2,
    "operators": suite_operators,
    "lemma4": lambda nmax=None: suite_lemma4(),
    "triangularity": lambda nmax=4: suite_triangularity(nmax=min(nmax or 4, 4)),
}


def run_suite(name: str, nmax: int) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    fn = SUITES[name]
    if name in ("operators",):
        return fn(nmax=nmax)
    if name in ("lemma4",):
        return fn()
    if name in ("triangularity",):
        return fn(nmax)
    return fn(nmax)


# -- ambiguity resolution report ------------------------------------------


def ambiguity_report(nmax_omega: int = 4, nmax_endpoint: int = 5) -> str:
    """One-page report pinning down the two notational ambiguities.

    Records which inner-omega barring makes the orthodontia evaluator
    reproduce the recursion, which product endpoint makes the sorted-case
    sequence transformation hold, and the observed lowest-degree relation
    between the two evaluators.
    """
    lines = ["# Ambiguity resolution report", ""]

    outcomes = {}
    for variant in (True, False):
        first_bad = None
        for n in range(2, nmax_omega + 1):
            for w in all_perms(n):
                if families.script_G(rothe(w), barred_inner_omega=variant) != \
                        families.double_grothendieck(w):
                    first_bad = format_perm(w)
                    break
            if first_bad:
                break
        outcomes[variant] = first_bad
    lines.append("## Inner omega factors: barred vs unbarred")
    for variant, bad in outcomes.items():
        tag = "barred" if variant else "unbarred"
        if bad is None:
            lines.append(
                f"- {tag} inner omegas reproduce the recursion for all w up to S_{nmax_omega}"
            )
        else:
            lines.append(f"- {tag} inner omegas FAIL; first counterexample w={bad}")
    lines.append("")

    lines.append("## Sorted-case product endpoint: alpha vs alpha+1")
    for endpoint in ("alpha-plus-one", "alpha"):
        first_bad = None
        for n in range(2, nmax_endpoint + 1):
            for w in all_perms(n):
                if w == permcomb.identity(n) or not sortorder.is_sorted_perm(w):
                    continue
                if not sorted_cover_check(w, endpoint):
                    first_bad = format_perm(w)
                    break
            if first_bad:
                break
        if first_bad is None:
            lines.append(
                f"- endpoint {endpoint} satisfies the sequence transformation up to S_{nmax_endpoint}"
            )
        else:
            lines.append(f"- endpoint {endpoint} FAILS; first counterexample w={first_bad}")
    lines.append("")

    lines.append("## Lowest-degree relation between the two evaluators")
    plain = negated = True
    plain_bad = negated_bad = None
    skipped = 0
    for D in diagrams.all_diagrams(3, 3):
        if not diagrams.is_percent_avoiding(D):
            continue
        try:
            sS = families.script_S(D)
            sG = families.script_G(D)
        except ValueError:
            # recorded column index outside [1, m]: unspecialized
            # evaluators undefined for this diagram
            skipped += 1
            continue
        if plain and sS != sG.lowest_degree_part():
            plain, plain_bad = False, diagrams.format_diagram(D)
        if negated and sS != sG.negate_y().lowest_degree_part():
            negated, negated_bad = False, diagrams.format_diagram(D)
    lines.append(
        "- script_S = lowest_degree_part(script_G) "
        + ("holds for all %-avoiding D in [3]x[3]" if plain else f"fails at {plain_bad}")
    )
    lines.append(
        "- script_S = lowest_degree_part(negate_y(script_G)) "
        + ("holds for all %-avoiding D in [3]x[3]" if negated else f"fails at {negated_bad}")
    )
    lines.append(
        f"- {skipped} diagrams skipped (column index outside [1,m]; evaluators undefined)"
    )
    return "\n".join(lines) + "\n"
