"""Exact computation of Schubert, Grothendieck, Lascoux, and key polynomials.

Three independent routes to the same polynomials (divided-difference
recursion, pipe-dream weight sums, orthodontia operator formulas), plus
expansion in the Lascoux basis with graded-positivity verdicts.
"""

from .diagrams import (
    Diagram,
    OrthodonticSequence,
    orthodontic_sequence,
    rothe,
    skyline,
)
from .families import (
    double_grothendieck,
    double_schubert,
    grothendieck,
    key,
    lascoux,
    schubert,
    script_G,
    script_S,
    stable_grothendieck,
)
from .lascouxbasis import LascouxExpansion, graded_positive, lascoux_expand, theorem12_check
from .pipedreams import PipeDream, enumerate_pd, weight_sum
from .polyring import Polynomial

__all__ = [
    "Diagram",
    "OrthodonticSequence",
    "LascouxExpansion",
    "PipeDream",
    "Polynomial",
    "double_grothendieck",
    "double_schubert",
    "enumerate_pd",
    "graded_positive",
    "grothendieck",
    "key",
    "lascoux",
    "lascoux_expand",
    "orthodontic_sequence",
    "rothe",
    "schubert",
    "script_G",
    "script_S",
    "skyline",
    "stable_grothendieck",
    "theorem12_check",
    "weight_sum",
]
