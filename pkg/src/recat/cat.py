"""Finite real-enriched categories, functors, [0,1]-relations and distributors.

A category is a carrier with a hom matrix satisfying reflexivity and
(*)-transitivity.  Relations compose by sup-(*) products and carry the two
residuals; weights and coweights elsewhere are the one-sided special cases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct

from . import tnorm as tn
from . import values as vals
from .errors import (
    AxiomError,
    BoundExceededError,
    CarrierMismatchError,
    ModeMismatchError,
    NotAFunctorError,
    RecatError,
)
from .poset import FinitePoset


def _normalize(v):
    if isinstance(v, (Fraction, int)):
        return Fraction(v)
    if isinstance(v, float):
        return v
    if isinstance(v, str):
        return vals.parse_value(v)
    raise ModeMismatchError(f"unsupported hom value {v!r}")


@dataclass(frozen=True)
class EnrichedCategory:
    tnorm: tn.TNorm
    hom: tuple  # n x n matrix of values
    names: tuple = ()
    grid: vals.ValueGrid | None = None

    def __post_init__(self):
        rows = tuple(tuple(_normalize(v) for v in row) for row in self.hom)
        object.__setattr__(self, "hom", rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise RecatError("hom must be square")
        if not self.names:
            object.__setattr__(self, "names", tuple(f"x{i}" for i in range(n)))
        elif len(self.names) != n:
            raise RecatError("names must match the carrier size")
        modes = {tn.mode_of(v) for row in rows for v in row}
        if len(modes) > 1:
            raise ModeMismatchError("hom matrix mixes exact and float values")

    @property
    def n(self) -> int:
        return len(self.hom)

    @property
    def mode(self) -> str:
        return tn.mode_of(self.hom[0][0]) if self.n else "exact"

    @property
    def one(self):
        return tn.ONE if self.mode == "exact" else 1.0

    def conj(self, x, y):
        return tn.conj(self.tnorm, x, y)

    def imp(self, x, y):
        return tn.imp(self.tnorm, x, y)

    def leq1(self, v) -> bool:
        """Whether a hom value counts as 1 (tolerance-aware in float mode)."""
        return tn.vle(self.one, v)

    def to_json(self):
        def enc(v):
            return vals.format_value(v) if isinstance(v, Fraction) else v

        return {
            "tnorm": tn.format_tnorm(self.tnorm),
            "grid": [vals.format_value(p) for p in self.grid.points] if self.grid else None,
            "names": list(self.names),
            "hom": [[enc(v) for v in row] for row in self.hom],
        }

    @staticmethod
    def from_json(data) -> "EnrichedCategory":
        t = tn.parse_tnorm(data["tnorm"])
        grid = vals.grid_validate(data["grid"], t) if data.get("grid") else None
        hom = tuple(tuple(row) for row in data["hom"])
        return EnrichedCategory(t, hom, tuple(data.get("names") or ()), grid)


def terminal(t: tn.TNorm, grid=None, mode="exact") -> EnrichedCategory:
    one = tn.ONE if mode == "exact" else 1.0
    return EnrichedCategory(t, ((one,),), ("*",), grid)


@dataclass
class ValidationReport:
    ok: bool
    reason: str = ""
    witness: tuple | None = None


def validate(X: EnrichedCategory, strict: bool = False) -> ValidationReport:
    """Check reflexivity and transitivity; report the first violating triple."""
    for x in range(X.n):
        if not tn.veq(X.hom[x][x], X.one):
            rep = ValidationReport(False, "reflexivity", (x,))
            if strict:
                raise AxiomError("hom(x,x) != 1", witness=rep.witness)
            return rep
    for y in range(X.n):
        for z in range(X.n):
            for x in range(X.n):
                if not tn.vle(X.conj(X.hom[y][z], X.hom[x][y]), X.hom[x][z]):
                    rep = ValidationReport(False, "transitivity", (y, z, x))
                    if strict:
                        raise AxiomError("transitivity fails", witness=rep.witness)
                    return rep
    return ValidationReport(True)


@dataclass(frozen=True)
class Rel:
    """A [0,1]-relation between carriers, rows indexed by the source."""

    src: int
    tgt: int
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(_normalize(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.src or any(len(r) != self.tgt for r in rows):
            raise RecatError("relation shape mismatch")

    def __call__(self, x, y):
        return self.rows[x][y]

    def op(self) -> "Rel":
        return Rel(self.tgt, self.src, tuple(tuple(self.rows[x][y] for x in range(self.src)) for y in range(self.tgt)))


def hom_rel(X: EnrichedCategory) -> Rel:
    return Rel(X.n, X.n, X.hom)


def identity_rel(n: int, mode="exact") -> Rel:
    one = tn.ONE if mode == "exact" else 1.0
    zero = tn.ZERO if mode == "exact" else 0.0
    return Rel(n, n, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))


def compose(t: tn.TNorm, s: Rel, r: Rel) -> Rel:
    """(s o r)(x, z) = sup_y s(y, z) (*) r(x, y)."""
    if r.tgt != s.src:
        raise CarrierMismatchError("middle carriers differ")
    rows = tuple(
        tuple(max(tn.conj(t, s(y, z), r(x, y)) for y in range(r.tgt)) for z in range(s.tgt))
        for x in range(r.src)
    )
    return Rel(r.src, s.tgt, rows)


def residual_left(t: tn.TNorm, tt: Rel, r: Rel) -> Rel:
    """(t // r)(y, z) = inf_x (r(x, y) -> t(x, z)); right adjoint of - o r."""
    if tt.src != r.src:
        raise CarrierMismatchError("sources differ")
    rows = tuple(
        tuple(min(tn.imp(t, r(x, y), tt(x, z)) for x in range(r.src)) for z in range(tt.tgt))
        for y in range(r.tgt)
    )
    return Rel(r.tgt, tt.tgt, rows)


def residual_right(t: tn.TNorm, s: Rel, tt: Rel) -> Rel:
    """(s \\ t)(x, y) = inf_z (s(y, z) -> t(x, z)); right adjoint of s o -."""
    if tt.tgt != s.tgt:
        raise CarrierMismatchError("targets differ")
    rows = tuple(
        tuple(min(tn.imp(t, s(y, z), tt(x, z)) for z in range(s.tgt)) for y in range(s.src))
        for x in range(tt.src)
    )
    return Rel(tt.src, s.src, rows)


def rel_le(a: Rel, b: Rel) -> bool:
    if (a.src, a.tgt) != (b.src, b.tgt):
        raise CarrierMismatchError("relation shapes differ")
    return all(tn.vle(a(x, y), b(x, y)) for x in range(a.src) for y in range(a.tgt))


def rel_eq(a: Rel, b: Rel) -> bool:
    return rel_le(a, b) and rel_le(b, a)


def is_distributor(r: Rel, X: EnrichedCategory, Y: EnrichedCategory):
    """None if r is a bimodule for the hom actions, else the violating tuple."""
    for x1 in range(X.n):
        for x2 in range(X.n):
            for y in range(Y.n):
                if not tn.vle(X.conj(r(x2, y), X.hom[x1][x2]), r(x1, y)):
                    return ("left", x1, x2, y)
    for x in range(X.n):
        for y1 in range(Y.n):
            for y2 in range(Y.n):
                if not tn.vle(X.conj(Y.hom[y1][y2], r(x, y1)), r(x, y2)):
                    return ("right", x, y1, y2)
    return None


@dataclass(frozen=True)
class EnrichedFunctor:
    src: EnrichedCategory
    tgt: EnrichedCategory
    mapping: tuple

    def __post_init__(self):
        object.__setattr__(self, "mapping", tuple(self.mapping))
        if len(self.mapping) != self.src.n:
            raise RecatError("mapping must cover the source carrier")
        for x in range(self.src.n):
            for y in range(self.src.n):
                if not tn.vle(self.src.hom[x][y], self.tgt.hom[self.mapping[x]][self.mapping[y]]):
                    raise NotAFunctorError(f"hom decreases at ({x}, {y})")

    def __call__(self, x: int) -> int:
        return self.mapping[x]


def graph(f: EnrichedFunctor) -> Rel:
    """f_*(x, y) = Y(f(x), y)."""
    Y = f.tgt
    return Rel(f.src.n, Y.n, tuple(tuple(Y.hom[f(x)][y] for y in range(Y.n)) for x in range(f.src.n)))


def cograph(f: EnrichedFunctor) -> Rel:
    """f^*(y, x) = Y(y, f(x))."""
    Y = f.tgt
    return Rel(Y.n, f.src.n, tuple(tuple(Y.hom[y][f(x)] for x in range(f.src.n)) for y in range(Y.n)))


def is_fully_faithful(f: EnrichedFunctor) -> bool:
    comp = compose(f.src.tnorm, cograph(f), graph(f))
    return rel_eq(comp, hom_rel(f.src))


def adjoint_pair_check(t: tn.TNorm, psi: Rel, phi: Rel, X: EnrichedCategory, Y: EnrichedCategory) -> bool:
    """psi: X -+-> Y left adjoint to phi: Y -+-> X, i.e. X <= phi o psi and psi o phi <= Y."""
    if psi.src != X.n or psi.tgt != Y.n or phi.src != Y.n or phi.tgt != X.n:
        raise CarrierMismatchError("adjoint candidates have wrong shapes")
    return rel_le(hom_rel(X), compose(t, phi, psi)) and rel_le(compose(t, psi, phi), hom_rel(Y))


def underlying_order(X: EnrichedCategory) -> FinitePoset:
    return FinitePoset(X.n, tuple(tuple(X.leq1(X.hom[x][y]) for y in range(X.n)) for x in range(X.n)))


def is_separated(X: EnrichedCategory) -> bool:
    return all(
        not (X.leq1(X.hom[x][y]) and X.leq1(X.hom[y][x]))
        for x in range(X.n)
        for y in range(X.n)
        if x != y
    )


def opposite(X: EnrichedCategory) -> EnrichedCategory:
    hom = tuple(tuple(X.hom[y][x] for y in range(X.n)) for x in range(X.n))
    return EnrichedCategory(X.tnorm, hom, X.names, X.grid)


def symmetrize(X: EnrichedCategory) -> EnrichedCategory:
    hom = tuple(tuple(min(X.hom[x][y], X.hom[y][x]) for y in range(X.n)) for x in range(X.n))
    return EnrichedCategory(X.tnorm, hom, X.names, X.grid)


def separated_quotient(X: EnrichedCategory):
    """Merge isomorphic elements; least indices represent their classes."""
    reps = []
    proj = [None] * X.n
    for x in range(X.n):
        for r in reps:
            if X.leq1(X.hom[x][r]) and X.leq1(X.hom[r][x]):
                proj[x] = r
                break
        else:
            reps.append(x)
            proj[x] = x
    index = {r: i for i, r in enumerate(reps)}
    hom = tuple(tuple(X.hom[a][b] for b in reps) for a in reps)
    names = tuple(X.names[r] for r in reps)
    return EnrichedCategory(X.tnorm, hom, names, X.grid), tuple(index[proj[x]] for x in range(X.n))


def all_functors(X: EnrichedCategory, Y: EnrichedCategory, bound: int = 4096):
    """All functor mappings X -> Y, in lexicographic order."""
    if Y.n ** X.n > bound:
        raise BoundExceededError(f"{Y.n}^{X.n} candidate maps exceed bound {bound}")
    out = []
    for mapping in iproduct(range(Y.n), repeat=X.n):
        try:
            out.append(EnrichedFunctor(X, Y, mapping))
        except NotAFunctorError:
            continue
    return out


def hom_category(X: EnrichedCategory, Y: EnrichedCategory, bound: int = 4096) -> EnrichedCategory:
    """The category of all functors X -> Y with hom(f, g) = inf_x Y(f(x), g(x))."""
    fs = all_functors(X, Y, bound)
    one = Y.one
    hom = tuple(
        tuple(min((Y.hom[f(x)][g(x)] for x in range(X.n)), default=one) for g in fs)
        for f in fs
    )
    names = tuple("<" + ",".join(str(m) for m in f.mapping) + ">" for f in fs)
    return EnrichedCategory(Y.tnorm, hom, names, Y.grid)


def categories_isomorphic(A: EnrichedCategory, B: EnrichedCategory) -> bool:
    """Bijective hom-preserving correspondence, by permutation search (small n)."""
    from itertools import permutations

    if A.n != B.n:
        return False
    for perm in permutations(range(A.n)):
        if all(
            tn.veq(A.hom[x][y], B.hom[perm[x]][perm[y]])
            for x in range(A.n)
            for y in range(A.n)
        ):
            return True
    return False
