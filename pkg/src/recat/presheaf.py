"""Weight and coweight calculus: Yoneda, colimits, tensors, Kan, Isbell.

Weights are contravariant [0,1]-valued presheaves (distributors into the
one-point category); coweights are the covariant side.  All sup/inf formulas
evaluate exactly on grid values and with tolerance in float mode.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from . import tnorm as tn
from .cat import EnrichedCategory, EnrichedFunctor, Rel
from .errors import AxiomError, BoundExceededError, CarrierMismatchError, RecatError


@dataclass(frozen=True)
class Weight:
    """phi with phi(x2) (*) X(x1, x2) <= phi(x1)."""

    base: EnrichedCategory
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        X = self.base
        if len(self.values) != X.n:
            raise CarrierMismatchError("weight length differs from carrier")
        for x1 in range(X.n):
            for x2 in range(X.n):
                if not tn.vle(X.conj(self.values[x2], X.hom[x1][x2]), self.values[x1]):
                    raise AxiomError("not a weight", witness=(x1, x2))

    def __call__(self, x: int):
        return self.values[x]

    def to_rel(self) -> Rel:
        return Rel(self.base.n, 1, tuple((v,) for v in self.values))


@dataclass(frozen=True)
class Coweight:
    """psi with X(y1, y2) (*) psi(y1) <= psi(y2)."""

    base: EnrichedCategory
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        X = self.base
        if len(self.values) != X.n:
            raise CarrierMismatchError("coweight length differs from carrier")
        for y1 in range(X.n):
            for y2 in range(X.n):
                if not tn.vle(X.conj(X.hom[y1][y2], self.values[y1]), self.values[y2]):
                    raise AxiomError("not a coweight", witness=(y1, y2))

    def __call__(self, y: int):
        return self.values[y]

    def to_rel(self) -> Rel:
        return Rel(1, self.base.n, (tuple(self.values),))


def _same_base(a, b):
    if a.base is not b.base and a.base.hom != b.base.hom:
        raise CarrierMismatchError("weights live on different bases")


def yoneda(X: EnrichedCategory, a: int) -> Weight:
    return Weight(X, tuple(X.hom[x][a] for x in range(X.n)))


def coyoneda(X: EnrichedCategory, a: int) -> Coweight:
    return Coweight(X, tuple(X.hom[a][x] for x in range(X.n)))


def sub(phi1: Weight, phi2: Weight):
    """Hom of the weight category: inf_x (phi1(x) -> phi2(x))."""
    _same_base(phi1, phi2)
    X = phi1.base
    return min((X.imp(phi1(x), phi2(x)) for x in range(X.n)), default=X.one)


def cosub(psi1: Coweight, psi2: Coweight):
    """Hom of the coweight category: inf_x (psi2(x) -> psi1(x))."""
    _same_base(psi1, psi2)
    X = psi1.base
    return min((X.imp(psi2(x), psi1(x)) for x in range(X.n)), default=X.one)


def pairing(phi: Weight, psi: Coweight):
    """sup_x phi(x) (*) psi(x), the degree that phi and psi meet."""
    _same_base(phi, psi)
    X = phi.base
    zero = tn.ZERO if X.mode == "exact" else 0.0
    return max((X.conj(phi(x), psi(x)) for x in range(X.n)), default=zero)


def isbell_ub(phi: Weight) -> Coweight:
    """The coweight of upper bounds of phi: inf_x (phi(x) -> X(x, -))."""
    X = phi.base
    return Coweight(
        X, tuple(min((X.imp(phi(x), X.hom[x][y]) for x in range(X.n)), default=X.one) for y in range(X.n))
    )


def isbell_lb(psi: Coweight) -> Weight:
    """The weight of lower bounds of psi: inf_y (psi(y) -> X(-, y))."""
    X = psi.base
    return Weight(
        X, tuple(min((X.imp(psi(y), X.hom[x][y]) for y in range(X.n)), default=X.one) for x in range(X.n))
    )


def colim(phi: Weight):
    """Least-index element representing the upper-bound coweight, or None."""
    X = phi.base
    ub = isbell_ub(phi)
    for c in range(X.n):
        if all(tn.veq(X.hom[c][y], ub(y)) for y in range(X.n)):
            return c
    return None


def lim(psi: Coweight):
    X = psi.base
    lb = isbell_lb(psi)
    for c in range(X.n):
        if all(tn.veq(X.hom[x][c], lb(x)) for x in range(X.n)):
            return c
    return None


def weighted_colim(phi: Weight, f: EnrichedFunctor):
    """Colimit of f weighted by phi, i.e. colim of phi composed with the cograph."""
    K, X = f.src, f.tgt
    if phi.base.n != K.n:
        raise CarrierMismatchError("weight must live on the functor source")
    vec = tuple(
        max(X.conj(phi(z), X.hom[x][f(z)]) for z in range(K.n)) for x in range(X.n)
    )
    return colim(Weight(X, vec))


def tensor(X: EnrichedCategory, r, x: int):
    """Element c with X(c, y) = r -> X(x, y) for all y, or None."""
    want = tuple(X.imp(r, X.hom[x][y]) for y in range(X.n))
    for c in range(X.n):
        if all(tn.veq(X.hom[c][y], want[y]) for y in range(X.n)):
            return c
    return None


def cotensor(X: EnrichedCategory, r, y: int):
    """Element c with X(x, c) = r -> X(x, y) for all x, or None."""
    want = tuple(X.imp(r, X.hom[x][y]) for x in range(X.n))
    for c in range(X.n):
        if all(tn.veq(X.hom[x][c], want[x]) for x in range(X.n)):
            return c
    return None


def is_cocomplete_over_grid(X: EnrichedCategory) -> bool:
    """Order-complete plus all grid tensors and cotensors exist."""
    if X.mode != "exact" or X.grid is None:
        raise RecatError("grid cocompleteness is decided in exact mode with a grid")
    from .cat import underlying_order

    P = underlying_order(X)
    for k in range(1 << X.n):
        subset = [i for i in range(X.n) if k >> i & 1]
        if P.join(subset) is None:
            return False
    for r in X.grid.points:
        for x in range(X.n):
            if tensor(X, r, x) is None or cotensor(X, r, x) is None:
                return False
    return True


# --- Kan extensions -------------------------------------------------------


def f_exists(f: EnrichedFunctor, phi: Weight) -> Weight:
    """Left Kan extension along f: phi composed with the cograph of f."""
    K, Y = f.src, f.tgt
    vec = tuple(max(Y.conj(phi(x), Y.hom[y][f(x)]) for x in range(K.n)) for y in range(Y.n))
    return Weight(Y, vec)


def f_inv(f: EnrichedFunctor, gamma: Weight) -> Weight:
    """Restriction along f: gamma o f."""
    return Weight(f.src, tuple(gamma(f(x)) for x in range(f.src.n)))


def f_forall(f: EnrichedFunctor, phi: Weight) -> Weight:
    """Right Kan extension along f: inf_x (Y(f(x), -) -> phi(x))."""
    K, Y = f.src, f.tgt
    vec = tuple(
        min((Y.imp(Y.hom[f(x)][y], phi(x)) for x in range(K.n)), default=Y.one)
        for y in range(Y.n)
    )
    return Weight(Y, vec)


def f_dag_exists(f: EnrichedFunctor, psi: Coweight) -> Coweight:
    """Covariant left extension: sup_x Y(f(x), -) (*) psi(x)."""
    K, Y = f.src, f.tgt
    vec = tuple(max(Y.conj(Y.hom[f(x)][y], psi(x)) for x in range(K.n)) for y in range(Y.n))
    return Coweight(Y, vec)


def f_dag_forall(f: EnrichedFunctor, psi: Coweight) -> Coweight:
    """Covariant right extension: inf_x (Y(-, f(x)) -> psi(x))."""
    K, Y = f.src, f.tgt
    vec = tuple(
        min((Y.imp(Y.hom[y][f(x)], psi(x)) for x in range(K.n)), default=Y.one)
        for y in range(Y.n)
    )
    return Coweight(Y, vec)


def f_inv_coweight(f: EnrichedFunctor, mu: Coweight) -> Coweight:
    return Coweight(f.src, tuple(mu(f(x)) for x in range(f.src.n)))


# --- enumeration ----------------------------------------------------------


def enumerate_weights(X: EnrichedCategory, bound: int = 10**6):
    """All grid-valued weights of X, lexicographically (requires a grid)."""
    if X.grid is None:
        raise RecatError("weight enumeration needs a grid")
    if len(X.grid.points) ** X.n > bound:
        raise BoundExceededError("weight space exceeds bound")
    out = []
    for vec in iproduct(X.grid.points, repeat=X.n):
        ok = True
        for x1 in range(X.n):
            for x2 in range(X.n):
                if not X.conj(vec[x2], X.hom[x1][x2]) <= vec[x1]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(Weight(X, vec))
    return out


def enumerate_coweights(X: EnrichedCategory, bound: int = 10**6):
    if X.grid is None:
        raise RecatError("coweight enumeration needs a grid")
    if len(X.grid.points) ** X.n > bound:
        raise BoundExceededError("coweight space exceeds bound")
    out = []
    for vec in iproduct(X.grid.points, repeat=X.n):
        ok = True
        for y1 in range(X.n):
            for y2 in range(X.n):
                if not X.conj(X.hom[y1][y2], vec[y1]) <= vec[y2]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(Coweight(X, vec))
    return out


def weight_closure(X: EnrichedCategory, vec) -> Weight:
    """The least weight above an arbitrary vector: sup_z v(z) (*) X(-, z)."""
    vec = tuple(vec)
    out = tuple(
        max(X.conj(vec[z], X.hom[x][z]) for z in range(X.n)) for x in range(X.n)
    )
    return Weight(X, out)


def coweight_closure(X: EnrichedCategory, vec) -> Coweight:
    vec = tuple(vec)
    out = tuple(
        max(X.conj(X.hom[z][y], vec[z]) for z in range(X.n)) for y in range(X.n)
    )
    return Coweight(X, out)
