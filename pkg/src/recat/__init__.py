"""Exact computation with finite real-enriched categories.

Categories enriched in ([0,1], (*), 1) for a continuous t-norm: the t-norm
kernel, distributor and presheaf calculus, weight classification, formal-ball
domain theory, and monad/module law verification, all with brute-force
oracles at grid scale.
"""

from .tnorm import TNorm, conj, imp, power, idempotents, is_archimedean, godel, product, lukasiewicz, ordinal_sum
from .values import ValueGrid, grid_validate, grid_closure, unit_grid
from .cat import EnrichedCategory, EnrichedFunctor, Rel
from .presheaf import Weight, Coweight, yoneda, coyoneda, sub, pairing, colim

__all__ = [
    "TNorm",
    "conj",
    "imp",
    "power",
    "idempotents",
    "is_archimedean",
    "godel",
    "product",
    "lukasiewicz",
    "ordinal_sum",
    "ValueGrid",
    "grid_validate",
    "grid_closure",
    "unit_grid",
    "EnrichedCategory",
    "EnrichedFunctor",
    "Rel",
    "Weight",
    "Coweight",
    "yoneda",
    "coyoneda",
    "sub",
    "pairing",
    "colim",
]
