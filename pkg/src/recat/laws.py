"""Monad- and module-level law verification at grid scale.

Covers the lax-idempotent inequality of the free-cocompletion monad, the
module/cocomplete-category correspondence, the negation involution, conical
filter axioms and the Kowalsky sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from . import tnorm as tn
from .cat import EnrichedCategory, is_separated, underlying_order
from .classify import is_cauchy
from .errors import RecatError
from .poset import FinitePoset
from .presheaf import (
    Weight,
    enumerate_weights,
    is_cocomplete_over_grid,
    sub,
    tensor,
    yoneda,
)
from .values import ValueGrid


# --- lax idempotency ------------------------------------------------------


def kz_defect(phi: Weight, gamma: Weight):
    """(lhs, rhs) of the unit comparison at (phi, gamma); lhs <= rhs always.

    lhs is the image of phi under the free functor applied to the unit,
    evaluated at gamma; rhs is the unit at the free level.  Equality for all
    gamma characterizes the Cauchy weights.
    """
    X = phi.base
    lhs = max(
        X.conj(phi(x), sub(gamma, yoneda(X, x))) for x in range(X.n)
    )
    rhs = sub(gamma, phi)
    return lhs, rhs


def kz_check(X: EnrichedCategory, weights, test_weights) -> dict:
    """Inequality report over the sampled weight pairs."""
    violations = []
    equalities = 0
    total = 0
    for phi in weights:
        for gamma in test_weights:
            lhs, rhs = kz_defect(phi, gamma)
            total += 1
            if not tn.vle(lhs, rhs):
                violations.append((phi.values, gamma.values))
            elif tn.veq(lhs, rhs):
                equalities += 1
    return {"total": total, "equalities": equalities, "violations": violations}


def kz_equality_consistent_with_cauchy(X: EnrichedCategory, bound: int = 10**6) -> bool:
    """Equality against every grid test weight holds exactly for Cauchy weights."""
    weights = enumerate_weights(X, bound)
    for phi in weights:
        everywhere_equal = all(
            tn.veq(*kz_defect(phi, gamma)) for gamma in weights
        )
        if everywhere_equal != (is_cauchy(phi) is not None):
            return False
    return True


# --- modules --------------------------------------------------------------


@dataclass(frozen=True)
class ModuleAction:
    """A complete lattice with a grid action preserving joins in each slot."""

    lattice: FinitePoset
    grid: ValueGrid
    action: tuple  # action[ri][x] with ri indexing grid.points

    def __post_init__(self):
        object.__setattr__(self, "action", tuple(tuple(row) for row in self.action))
        validate_module(self)

    def act(self, r, x: int) -> int:
        return self.action[self.grid.index(r)][x]


def validate_module(M: ModuleAction):
    L, grid = M.lattice, M.grid
    t = grid.tnorm
    if not L.is_lattice():
        raise RecatError("module carrier must be a complete lattice")
    one_i = grid.index(tn.ONE)
    for x in range(L.n):
        if M.action[one_i][x] != x:
            raise RecatError(f"unit law fails at {x}")
    for r in grid.points:
        for s in grid.points:
            rs = tn.conj(t, s, r)
            for x in range(L.n):
                if M.act(s, M.act(r, x)) != M.act(rs, x):
                    raise RecatError(f"associativity fails at ({s}, {r}, {x})")
    bot = L.bottom
    for r in grid.points:
        ri = grid.index(r)
        if M.action[ri][bot] != bot:
            raise RecatError("action does not preserve the empty join")
        for x in range(L.n):
            for y in range(L.n):
                j = L.join([x, y])
                if L.join([M.action[ri][x], M.action[ri][y]]) != M.action[ri][j]:
                    raise RecatError(f"action does not preserve joins at ({r}, {x}, {y})")
    for x in range(L.n):
        if M.act(tn.ZERO, x) != bot:
            raise RecatError("zero scalar must act as bottom")
        for r in grid.points:
            for s in grid.points:
                if r <= s and not L.le(M.act(r, x), M.act(s, x)):
                    raise RecatError(f"action not monotone in the scalar at ({r}, {s}, {x})")


def module_to_category(M: ModuleAction) -> EnrichedCategory:
    """hom(x, y) = max {r in grid : r act x <= y}."""
    L, grid = M.lattice, M.grid
    hom = tuple(
        tuple(max(r for r in grid.points if L.le(M.act(r, x), y)) for y in range(L.n))
        for x in range(L.n)
    )
    names = tuple(f"m{i}" for i in range(L.n))
    return EnrichedCategory(grid.tnorm, hom, names, grid)


def category_to_module(A: EnrichedCategory) -> ModuleAction:
    """Tensors of a separated grid-cocomplete category, packaged as an action."""
    if A.grid is None or A.mode != "exact":
        raise RecatError("module extraction needs exact mode with a grid")
    if not is_separated(A):
        raise RecatError("module extraction needs a separated carrier")
    if not is_cocomplete_over_grid(A):
        raise RecatError("module extraction needs a grid-cocomplete carrier")
    L = underlying_order(A)
    action = tuple(
        tuple(tensor(A, r, x) for x in range(A.n)) for r in A.grid.points
    )
    return ModuleAction(L, A.grid, action)


def modules_isomorphic(M: ModuleAction, N: ModuleAction) -> bool:
    from itertools import permutations

    if M.lattice.n != N.lattice.n or M.grid.points != N.grid.points:
        return False
    for perm in permutations(range(M.lattice.n)):
        if all(
            M.lattice.leq[i][j] == N.lattice.leq[perm[i]][perm[j]]
            for i in range(M.lattice.n)
            for j in range(M.lattice.n)
        ) and all(
            perm[M.action[ri][x]] == N.action[ri][perm[x]]
            for ri in range(len(M.grid.points))
            for x in range(M.lattice.n)
        ):
            return True
    return False


# --- negation duality -----------------------------------------------------


def negation_duality_check(grid: ValueGrid, t: tn.TNorm):
    """(verdict, witness): x -> (x -> 0) -> 0 is an involution on the grid."""
    zero = tn.ZERO
    for x in grid.points:
        neg = tn.imp(t, x, zero)
        if tn.imp(t, neg, zero) != x:
            return False, x
    return True, None


def negation_duality_check_float(t: tn.TNorm, samples=64):
    for k in range(1, samples):
        x = k / samples
        neg = tn.imp(t, x, 0.0)
        if not tn.veq(tn.imp(t, neg, 0.0), x):
            return False, x
    return True, None


# --- conical filters ------------------------------------------------------


def _sub_vec(t: tn.TNorm, xi, lam):
    return min(tn.imp(t, a, b) for a, b in zip(xi, lam))


@dataclass(frozen=True)
class ConicalFilter:
    """A filter generated by a finite directed set of grid vectors.

    Evaluation is the pointwise best lower approximation degree:
    F(lam) = max over generators xi of inf_i (xi_i -> lam_i).
    """

    tnorm: tn.TNorm
    grid: ValueGrid
    size: int
    generators: tuple

    def __post_init__(self):
        gens = tuple(tuple(v for v in g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise RecatError("a conical filter needs at least one generator")
        for g in gens:
            if len(g) != self.size:
                raise RecatError("generator length mismatch")
        for a in gens:
            for b in gens:
                if not any(all(c[i] <= min(a[i], b[i]) for i in range(self.size)) for c in gens):
                    raise RecatError("generators are not directed")

    def __call__(self, lam):
        return max(_sub_vec(self.tnorm, g, tuple(lam)) for g in self.generators)


def filter_table(F, t: tn.TNorm, grid: ValueGrid, size: int) -> dict:
    """Tabulate a filter-like functional on all grid arguments."""
    return {lam: F(lam) for lam in iproduct(grid.points, repeat=size)}


def filter_axiom_check(t: tn.TNorm, grid: ValueGrid, size: int, table) -> dict:
    """CF1..CF4 on grid arguments for an arbitrary functional given as a table.

    CF1: sub(lam, mu) <= F(lam) -> F(mu)
    CF2: F(1) = 1
    CF3: F(lam meet mu) = F(lam) meet F(mu)
    CF4: F(r -> lam) = 1 whenever F(lam) > r
    """
    lams = list(iproduct(grid.points, repeat=size))
    report = {"CF1": None, "CF2": None, "CF3": None, "CF4": None}
    top = tuple(tn.ONE for _ in range(size))
    if table[top] != tn.ONE:
        report["CF2"] = (top,)
    for lam in lams:
        for mu in lams:
            s = _sub_vec(t, lam, mu)
            if not s <= tn.imp(t, table[lam], table[mu]):
                report["CF1"] = report["CF1"] or (lam, mu)
            meet = tuple(min(a, b) for a, b in zip(lam, mu))
            if min(table[lam], table[mu]) != table[meet]:
                report["CF3"] = report["CF3"] or (lam, mu)
    for lam in lams:
        for r in grid.points:
            if table[lam] > r:
                shifted = tuple(tn.imp(t, r, v) for v in lam)
                if table[shifted] != tn.ONE:
                    report["CF4"] = report["CF4"] or (lam, r)
    report["pass"] = all(report[k] is None for k in ("CF1", "CF2", "CF3", "CF4"))
    return report


def conical_filter_check(F: ConicalFilter) -> dict:
    return filter_axiom_check(F.tnorm, F.grid, F.size, filter_table(F, F.tnorm, F.grid, F.size))


def cotensor_filter_table(t: tn.TNorm, r, table) -> dict:
    """The pointwise cotensor r -> F of a tabulated functional."""
    return {lam: tn.imp(t, r, v) for lam, v in table.items()}


def kowalsky_sum(meta_generators, filters, t: tn.TNorm, grid: ValueGrid) -> ConicalFilter:
    """Flatten a finitely generated filter of filters into a filter.

    Each meta generator xi assigns a grid level to every member filter; its
    contribution is the pointwise inf of xi(F) -> F, which for generated
    members is generated by joins of scaled member generators.  The result is
    returned as a generated filter and re-validated on construction.
    """
    if not filters:
        raise RecatError("kowalsky sum needs a nonempty filter support")
    metas = [tuple(xi) for xi in meta_generators]
    for xi in metas:
        if len(xi) != len(filters):
            raise RecatError("meta generator length mismatch")
    for a in metas:
        for b in metas:
            if not any(all(c[k] <= min(a[k], b[k]) for k in range(len(filters))) for c in metas):
                raise RecatError("meta generators are not directed")
    size = filters[0].size
    gens = []
    for xi in metas:
        # inf_F (xi(F) -> F) is generated by { join_F xi(F) (*) g_F : g_F in gens(F) }
        for combo in iproduct(*(F.generators for F in filters)):
            g = tuple(
                max(tn.conj(t, xi[k], combo[k][i]) for k in range(len(filters)))
                for i in range(size)
            )
            gens.append(g)
    # pointwise-minimal generators suffice; the least meta generator combined
    # with the least member generators supplies the common lower bound
    minimal = []
    for g in sorted(set(gens)):
        if not any(all(h[i] <= g[i] for i in range(size)) for h in minimal):
            minimal.append(g)
    return ConicalFilter(t, grid, size, tuple(minimal))


def conical_filter_check_float(t: tn.TNorm, size: int, rng, samples: int = 200) -> bool:
    """Sampled float-mode filter axioms for t-norms without exact grids.

    Generates principal-style filters from random float vectors and verifies
    CF1..CF4 (and the cotensor staying in class) on sampled arguments within
    the float tolerance.
    """

    def make(vec):
        return lambda lam: min(tn.imp(t, g, v) for g, v in zip(vec, lam))

    for _ in range(samples):
        gen_vec = tuple(rng.random() for _ in range(size))
        r0 = rng.random()
        for F in (make(gen_vec), make(tuple(tn.conj(t, r0, g) for g in gen_vec))):
            lam = tuple(rng.random() for _ in range(size))
            mu = tuple(rng.random() for _ in range(size))
            r = rng.random()
            sub_lm = min(tn.imp(t, a, b) for a, b in zip(lam, mu))
            if sub_lm > tn.imp(t, F(lam), F(mu)) + tn.TOL:
                return False
            if abs(F(tuple(1.0 for _ in range(size))) - 1.0) > tn.TOL:
                return False
            meet = tuple(min(a, b) for a, b in zip(lam, mu))
            if abs(min(F(lam), F(mu)) - F(meet)) > tn.TOL:
                return False
            if F(lam) > r + tn.TOL:
                shifted = tuple(tn.imp(t, r, v) for v in lam)
                if F(shifted) < 1.0 - tn.TOL:
                    return False
    return True


def find_cf4_cotensor_witness(t: tn.TNorm, grid: ValueGrid):
    """Search one-point filter tables whose cotensor escapes the filter class.

    Returns (table, r, lam, s) such that the table passes CF1..CF4 but the
    cotensor r -> table fails CF4 at (lam, s); None when the class is closed,
    which is the case exactly when the implication is continuous off the
    diagonal.
    """
    pts = grid.points
    k = len(pts)

    def monotone_tables():
        def rec(prefix):
            i = len(prefix)
            if i == k:
                if prefix[-1] == tn.ONE:
                    yield dict(zip(((p,) for p in pts), prefix))
                return
            lo = prefix[-1] if prefix else tn.ZERO
            for v in pts:
                if v >= lo:
                    yield from rec(prefix + [v])

        yield from rec([])

    for table in monotone_tables():
        if not filter_axiom_check(t, grid, 1, table)["pass"]:
            continue
        for r in pts:
            shifted = cotensor_filter_table(t, r, table)
            rep = filter_axiom_check(t, grid, 1, shifted)
            if rep["CF4"] is not None:
                lam, s = rep["CF4"]
                return table, r, lam, s
    return None


# --- free-algebra monad on plain sets --------------------------------------


def powerset_monad_check(t: tn.TNorm, grid: ValueGrid, size: int, rng, samples: int = 50) -> bool:
    """Unit and multiplication laws of the grid-valued powerset monad.

    m(L) = sup_g L(g) (*) g over grid functions g; both unit laws and the
    associativity square are verified on sampled second-order elements.
    """
    pts = grid.points
    funcs = list(iproduct(pts, repeat=size))

    def unit(x_index):
        return tuple(tn.ONE if i == x_index else tn.ZERO for i in range(size))

    def mult(big):  # big: dict func -> value
        return tuple(
            max(tn.conj(t, big[g], g[i]) for g in funcs) for i in range(size)
        )

    # m . e_P = id and m . P(e) = id
    for g in (funcs if len(funcs) <= samples else rng.sample(funcs, samples)):
        point_mass = {h: (tn.ONE if h == g else tn.ZERO) for h in funcs}
        if mult(point_mass) != g:
            return False
        spread = {h: tn.ZERO for h in funcs}
        for i in range(size):
            spread[unit(i)] = max(spread[unit(i)], g[i])
        if mult(spread) != g:
            return False
    # associativity on sampled second-order elements, pushed down one level
    for _ in range(samples):
        big1 = {g: rng.choice(pts) for g in funcs}
        big2 = {g: rng.choice(pts) for g in funcs}
        r = rng.choice(pts)
        blended = {g: max(tn.conj(t, r, big1[g]), big2[g]) for g in funcs}
        lhs = mult(blended)
        rhs = tuple(
            max(tn.conj(t, r, a), b) for a, b in zip(mult(big1), mult(big2))
        )
        if lhs != rhs:
            return False
    return True
