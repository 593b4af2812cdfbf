"""Finite order theory: Galois connections, distributivity, way-below, coprimes.

Orders are reflexive transitive boolean matrices; antisymmetry is tracked but
not required except where lattice operations need canonical meets and joins.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .errors import AxiomError, RecatError


@dataclass(frozen=True)
class FinitePoset:
    n: int
    leq: tuple  # n x n tuple of bool tuples

    def __post_init__(self):
        object.__setattr__(self, "leq", tuple(tuple(bool(v) for v in row) for row in self.leq))
        if len(self.leq) != self.n or any(len(r) != self.n for r in self.leq):
            raise RecatError("leq must be an n x n matrix")
        for i in range(self.n):
            if not self.leq[i][i]:
                raise AxiomError("order not reflexive", witness=i)
        for i in range(self.n):
            for j in range(self.n):
                if not self.leq[i][j]:
                    continue
                for k in range(self.n):
                    if self.leq[j][k] and not self.leq[i][k]:
                        raise AxiomError("order not transitive", witness=(i, j, k))

    def le(self, i, j) -> bool:
        return self.leq[i][j]

    @property
    def antisymmetric(self) -> bool:
        return all(
            not (self.leq[i][j] and self.leq[j][i])
            for i in range(self.n)
            for j in range(self.n)
            if i != j
        )

    def upper_bounds(self, elems):
        return [u for u in range(self.n) if all(self.leq[a][u] for a in elems)]

    def lower_bounds(self, elems):
        return [l for l in range(self.n) if all(self.leq[l][a] for a in elems)]

    def join(self, elems):
        """Least upper bound, or None; picks the least index among equivalents."""
        ubs = self.upper_bounds(elems)
        for u in ubs:
            if all(self.leq[u][v] for v in ubs):
                return u
        return None

    def meet(self, elems):
        lbs = self.lower_bounds(elems)
        for l in lbs:
            if all(self.leq[v][l] for v in lbs):
                return l
        return None

    @property
    def bottom(self):
        return self.join([])

    @property
    def top(self):
        return self.meet([])

    def is_lattice(self) -> bool:
        if not self.antisymmetric:
            return False
        if self.bottom is None or self.top is None:
            return False
        return all(
            self.join([i, j]) is not None and self.meet([i, j]) is not None
            for i in range(self.n)
            for j in range(self.n)
        )

    def opposite(self) -> "FinitePoset":
        return FinitePoset(self.n, tuple(tuple(self.leq[j][i] for j in range(self.n)) for i in range(self.n)))

    def to_json(self):
        return {"n": self.n, "leq": [list(row) for row in self.leq]}

    @staticmethod
    def from_json(data) -> "FinitePoset":
        return FinitePoset(int(data["n"]), tuple(tuple(row) for row in data["leq"]))


def chain(n: int) -> FinitePoset:
    return FinitePoset(n, tuple(tuple(i <= j for j in range(n)) for i in range(n)))


def antichain(n: int) -> FinitePoset:
    return FinitePoset(n, tuple(tuple(i == j for j in range(n)) for i in range(n)))


def from_covers(n: int, covers) -> FinitePoset:
    """Build a poset from a cover list by reflexive transitive closure."""
    leq = [[i == j for j in range(n)] for i in range(n)]
    for a, b in covers:
        leq[a][b] = True
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                if leq[i][j]:
                    for k in range(n):
                        if leq[j][k] and not leq[i][k]:
                            leq[i][k] = True
                            changed = True
    return FinitePoset(n, tuple(tuple(row) for row in leq))


def boolean_lattice() -> FinitePoset:
    """The four-element Boolean lattice 0 < a, b < 1."""
    return from_covers(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


def m3() -> FinitePoset:
    """The diamond with three atoms."""
    return from_covers(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])


def n5() -> FinitePoset:
    """The pentagon: 0 < a < b < 1 and 0 < c < 1."""
    return from_covers(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])


def lattice_catalog(max_n: int = 5):
    """All lattices with at most max_n elements, up to isomorphism (max_n <= 5)."""
    if max_n > 5:
        raise RecatError("catalog covers lattices with at most 5 elements")
    cat = [chain(1), chain(2), chain(3), chain(4), boolean_lattice(), chain(5), m3(), n5(),
           from_covers(5, [(0, 1), (1, 2), (1, 3), (2, 4), (3, 4)]),   # diamond with new bottom
           from_covers(5, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)])]  # diamond with new top
    return [L for L in cat if L.n <= max_n]


def posets_isomorphic(P: FinitePoset, Q: FinitePoset) -> bool:
    if P.n != Q.n:
        return False
    for perm in permutations(range(P.n)):
        if all(P.leq[i][j] == Q.leq[perm[i]][perm[j]] for i in range(P.n) for j in range(P.n)):
            return True
    return False


def enumerate_lattices(n: int):
    """Brute-force enumeration of all n-element lattices up to isomorphism.

    Exponential in n^2; practical for n <= 5 catalog cross-checks.
    """
    found = []
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    rev = {b: pairs.index((j, i)) for b, (i, j) in enumerate(pairs)}
    for bits in range(1 << len(pairs)):
        if any(bits >> b & 1 and bits >> rev[b] & 1 for b in range(len(pairs))):
            continue  # antisymmetry
        leq = [[i == j for j in range(n)] for i in range(n)]
        for b, (i, j) in enumerate(pairs):
            if bits >> b & 1:
                leq[i][j] = True
        transitive = True
        for i in range(n):
            for j in range(n):
                if leq[i][j]:
                    for k in range(n):
                        if leq[j][k] and not leq[i][k]:
                            transitive = False
                            break
                    if not transitive:
                        break
            if not transitive:
                break
        if not transitive:
            continue
        P = FinitePoset(n, tuple(tuple(r) for r in leq))
        if not P.is_lattice():
            continue
        if not any(posets_isomorphic(P, Q) for Q in found):
            found.append(P)
    return found


def galois_check(f, g, P: FinitePoset, Q: FinitePoset) -> bool:
    """True iff f(x) <= y exactly when x <= g(y), for all pairs."""
    return all(Q.le(f[x], y) == P.le(x, g[y]) for x in range(P.n) for y in range(Q.n))


def is_monotone(f, P: FinitePoset, Q: FinitePoset) -> bool:
    return all(Q.le(f[x], f[y]) for x in range(P.n) for y in range(P.n) if P.le(x, y))


def left_adjoint_of(g, Q: FinitePoset, P: FinitePoset):
    """Left adjoint of g: Q -> P, or None.

    f(x) must be a least element of the g-preimage of the up-set of x;
    least-index representatives are chosen when the order is not antisymmetric.
    """
    if not is_monotone(g, Q, P):
        return None
    f = []
    for x in range(P.n):
        candidates = [y for y in range(Q.n) if P.le(x, g[y])]
        least = None
        for y in candidates:
            if all(Q.le(y, z) for z in candidates):
                least = y
                break
        if least is None:
            return None
        f.append(least)
    if not galois_check(f, g, P, Q):
        return None
    return f


def right_adjoint_of(f, P: FinitePoset, Q: FinitePoset):
    """Right adjoint of f: P -> Q, or None."""
    g = left_adjoint_of(f, P.opposite(), Q.opposite())
    if g is None:
        return None
    return g if galois_check(f, g, P, Q) else None


def _subsets(n):
    elems = list(range(n))
    for r in range(n + 1):
        yield from (list(c) for c in combinations(elems, r))


def totally_below(L: FinitePoset, x: int, y: int) -> bool:
    """True iff every subset whose join dominates y contains a member above x."""
    for A in _subsets(L.n):
        j = L.join(A)
        if j is not None and L.le(y, j) and not any(L.le(x, a) for a in A):
            return False
    return True


def is_directed_subset(L: FinitePoset, A) -> bool:
    if not A:
        return False
    return all(any(L.le(a, c) and L.le(b, c) for c in A) for a in A for b in A)


def way_below(L: FinitePoset, x: int, y: int) -> bool:
    """Totally-below restricted to directed subsets (brute force)."""
    for A in _subsets(L.n):
        if not is_directed_subset(L, A):
            continue
        j = L.join(A)
        if j is not None and L.le(y, j) and not any(L.le(x, a) for a in A):
            return False
    return True


def is_completely_distributive(L: FinitePoset) -> bool:
    """Every element is the join of the elements totally below it."""
    for x in range(L.n):
        below = [z for z in range(L.n) if totally_below(L, z, x)]
        if L.join(below) != x:
            return False
    return True


def is_continuous_lattice(L: FinitePoset) -> bool:
    """Every element is the join of the elements way below it (finitely always true)."""
    for x in range(L.n):
        below = [z for z in range(L.n) if way_below(L, z, x)]
        if L.join(below) != x:
            return False
    return True


def coprimes(L: FinitePoset, include_vacuous_bottom: bool = True):
    """Elements x with x <= a v b implying x <= a or x <= b.

    The binary definition makes the bottom vacuously coprime; both readings
    are reachable through the flag since the empty-join convention is a
    documented open point.
    """
    out = []
    for x in range(L.n):
        ok = True
        for a in range(L.n):
            for b in range(L.n):
                j = L.join([a, b])
                if j is not None and L.le(x, j) and not (L.le(x, a) or L.le(x, b)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(x)
    if not include_vacuous_bottom:
        bot = L.bottom
        out = [x for x in out if x != bot]
    return tuple(out)


def primes(L: FinitePoset):
    return coprimes(L.opposite())


def has_enough_coprimes(L: FinitePoset) -> bool:
    cs = set(coprimes(L))
    for x in range(L.n):
        if L.join([c for c in cs if L.le(c, x)]) != x:
            return False
    return True


def lower_sets(L: FinitePoset):
    """All lower sets, as sorted tuples."""
    out = []
    for A in _subsets(L.n):
        s = set(A)
        if all(y in s for x in s for y in range(L.n) if L.le(y, x)):
            out.append(tuple(sorted(s)))
    return out


def cd_law_identity_check(L: FinitePoset) -> bool:
    """Join-of-intersection equals meet-of-joins over families of lower sets.

    On a finite lattice it suffices to test the empty family and all pairs,
    since meets of finitely many lower sets are iterated binary meets.
    """
    los = lower_sets(L)
    if L.join(list(range(L.n))) != L.top:
        return False
    for A in los:
        for B in los:
            inter = sorted(set(A) & set(B))
            lhs = L.join(inter)
            rhs = L.meet([L.join(list(A)), L.join(list(B))])
            if lhs != rhs:
                return False
    return True
