"""Seeded random generators for categories, weights, functors and modules.

Everything takes an explicit random.Random so that suite runs are
reproducible from a single seed.
"""

from __future__ import annotations

import random

from . import tnorm as tn
from .cat import EnrichedCategory, EnrichedFunctor
from .errors import NotAFunctorError
from .laws import ModuleAction
from .poset import FinitePoset, chain, lattice_catalog
from .presheaf import Coweight, Weight, coweight_closure, weight_closure
from .values import ValueGrid, grid_validate, unit_grid


def random_category(rng: random.Random, n: int, grid: ValueGrid) -> EnrichedCategory:
    """Random hom matrix, repaired by sup-(*) transitive closure."""
    t = grid.tnorm
    pts = list(grid.points)
    hom = [[rng.choice(pts) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        hom[i][i] = tn.ONE
    changed = True
    while changed:
        changed = False
        for y in range(n):
            for z in range(n):
                for x in range(n):
                    v = tn.conj(t, hom[y][z], hom[x][y])
                    if v > hom[x][z]:
                        hom[x][z] = v
                        changed = True
    return EnrichedCategory(t, tuple(tuple(row) for row in hom), (), grid)


def random_weight(rng: random.Random, X: EnrichedCategory) -> Weight:
    vec = tuple(rng.choice(list(X.grid.points)) for _ in range(X.n))
    return weight_closure(X, vec)


def random_coweight(rng: random.Random, X: EnrichedCategory) -> Coweight:
    vec = tuple(rng.choice(list(X.grid.points)) for _ in range(X.n))
    return coweight_closure(X, vec)


def random_functor(rng: random.Random, X: EnrichedCategory, Y: EnrichedCategory, tries: int = 64):
    """A random functor X -> Y, falling back to a constant map."""
    for _ in range(tries):
        mapping = tuple(rng.randrange(Y.n) for _ in range(X.n))
        try:
            return EnrichedFunctor(X, Y, mapping)
        except NotAFunctorError:
            continue
    return EnrichedFunctor(X, Y, tuple([rng.randrange(Y.n)] * X.n))


def full_subcategory(X: EnrichedCategory, subset) -> tuple:
    """(category on the subset, fully faithful inclusion functor)."""
    subset = sorted(subset)
    hom = tuple(tuple(X.hom[a][b] for b in subset) for a in subset)
    names = tuple(X.names[a] for a in subset)
    sub = EnrichedCategory(X.tnorm, hom, names, X.grid)
    return sub, EnrichedFunctor(sub, X, tuple(subset))


def random_directed_balls(rng: random.Random, X: EnrichedCategory, length: int = 3):
    """A random chain in the ball order; chains are directed."""
    from .balls import ball_leq, radius_candidates

    pts = list(X.grid.points)
    current = (rng.randrange(X.n), rng.choice(pts))
    out = [current]
    for _ in range(length - 1):
        ups = [
            (z, t)
            for z in range(X.n)
            for t in radius_candidates(X, out)
            if ball_leq(X, current, (z, t))
        ]
        if not ups:
            break
        current = rng.choice(sorted(ups))
        out.append(current)
    return out


def _chain_module(grid: ValueGrid) -> ModuleAction:
    """The grid chain acting on itself by the t-norm."""
    n = len(grid.points)
    L = chain(n)
    action = tuple(
        tuple(grid.index(tn.conj(grid.tnorm, r, x)) for x in grid.points)
        for r in grid.points
    )
    return ModuleAction(L, grid, action)


def _opposite_chain_module(grid: ValueGrid) -> ModuleAction:
    """The reversed grid chain with the residuum action."""
    n = len(grid.points)
    L = chain(n)
    # element i of the lattice is the grid point at position n-1-i
    def elt(i):
        return grid.points[n - 1 - i]

    action = tuple(
        tuple(n - 1 - grid.index(tn.imp(grid.tnorm, r, elt(x))) for x in range(n))
        for r in grid.points
    )
    return ModuleAction(L, grid, action)


def _trivial_module(L: FinitePoset, grid: ValueGrid) -> ModuleAction:
    """Two-point-grid style action: 1 acts as identity, everything else as bottom."""
    bot = L.bottom
    action = tuple(
        tuple(x if r == tn.ONE else bot for x in range(L.n)) for r in grid.points
    )
    return ModuleAction(L, grid, action)


def _relabel_module(rng: random.Random, M: ModuleAction) -> ModuleAction:
    perm = list(range(M.lattice.n))
    rng.shuffle(perm)
    n = M.lattice.n
    leq = tuple(
        tuple(M.lattice.leq[perm.index(i)][perm.index(j)] for j in range(n)) for i in range(n)
    )
    action = tuple(
        tuple(perm[M.action[ri][perm.index(x)]] for x in range(n))
        for ri in range(len(M.grid.points))
    )
    return ModuleAction(FinitePoset(n, leq), M.grid, action)


def random_module(rng: random.Random, t: tn.TNorm, max_size: int = 5) -> ModuleAction:
    """A random grid module with at most max_size elements."""
    kind = rng.randrange(4)
    if kind == 0:
        k = rng.randint(1, max_size - 1)
        grid = unit_grid(k, t) if t.kind == tn.LUKASIEWICZ else _godel_grid(rng, k, t)
        return _relabel_module(rng, _chain_module(grid))
    if kind == 1:
        k = rng.randint(1, max_size - 1)
        grid = unit_grid(k, t) if t.kind == tn.LUKASIEWICZ else _godel_grid(rng, k, t)
        return _relabel_module(rng, _opposite_chain_module(grid))
    if kind == 2:
        from .poset import boolean_lattice

        grid = grid_validate([0, 1], t)
        return _relabel_module(rng, _trivial_module(boolean_lattice(), grid))
    grid = grid_validate([0, 1], t)
    L = rng.choice([P for P in lattice_catalog(max_size) if P.is_lattice()])
    return _relabel_module(rng, _trivial_module(L, grid))


def _godel_grid(rng: random.Random, k: int, t: tn.TNorm) -> ValueGrid:
    """A random rational chain containing 0 and 1 (any chain is Godel-closed)."""
    from fractions import Fraction

    interior = sorted(rng.sample([Fraction(i, 12) for i in range(1, 12)], k - 1)) if k > 1 else []
    return grid_validate([0, *interior, 1], t)
