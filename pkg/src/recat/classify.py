"""Weight classification: representable, Cauchy, ideal, conically flat, flat.

Completion-style verdicts (Cauchy completion, Smyth completeness) enumerate
grid weights, so they require exact mode with a validated grid.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import tnorm as tn
from .cat import EnrichedCategory, is_separated
from .errors import RecatError
from .presheaf import (
    Coweight,
    Weight,
    enumerate_coweights,
    enumerate_weights,
    isbell_ub,
    pairing,
    sub,
    yoneda,
)


def is_representable(phi: Weight):
    """Least-index a with phi equal to the Yoneda weight of a, else None."""
    X = phi.base
    for a in range(X.n):
        if all(tn.veq(phi(x), X.hom[x][a]) for x in range(X.n)):
            return a
    return None


def is_cauchy(phi: Weight):
    """The left-adjoint coweight if phi is right adjoint as a distributor, else None.

    The only possible left adjoint is the upper-bound coweight, so it is
    computed and then checked against the two adjunction inequalities.
    """
    X = phi.base
    psi = isbell_ub(phi)
    if not tn.vle(X.one, pairing(phi, psi)):
        return None
    for x in range(X.n):
        for y in range(X.n):
            if not tn.vle(X.conj(psi(y), phi(x)), X.hom[x][y]):
                return None
    return psi


def is_ideal(phi: Weight):
    """(verdict, witness): inhabited and pairwise directed at threshold values.

    On a finite carrier the strict-threshold characterization collapses to:
    some element attains 1, and every pair (x1, x2) admits x with phi(x) = 1,
    X(x1, x) >= phi(x1) and X(x2, x) >= phi(x2).
    """
    X = phi.base
    tops = [x for x in range(X.n) if tn.veq(phi(x), X.one)]
    if not tops:
        return False, ("inhabited",)
    for x1 in range(X.n):
        for x2 in range(X.n):
            if not any(
                tn.vle(phi(x1), X.hom[x1][x]) and tn.vle(phi(x2), X.hom[x2][x]) for x in tops
            ):
                return False, (x1, x2)
    return True, None


def is_ideal_threshold_form(phi: Weight):
    """Strict-threshold form of the ideal criterion, swept over realized values.

    Independent of is_ideal: quantifies r < 1 and s_i < phi(x_i) over the
    finitely many values realized by phi and the hom matrix.
    """
    X = phi.base
    levels = sorted(set(phi.values) | {v for row in X.hom for v in row} | {X.one})
    for r in levels:
        if not r < X.one:
            continue
        if not any(phi(x) > r for x in range(X.n)):
            return False, ("inhabited", r)
    for x1 in range(X.n):
        for x2 in range(X.n):
            for r in levels:
                if not r < X.one:
                    continue
                for s1 in levels:
                    if not s1 < phi(x1):
                        continue
                    for s2 in levels:
                        if not s2 < phi(x2):
                            continue
                        if not any(
                            phi(x) > r and X.hom[x1][x] > s1 and X.hom[x2][x] > s2
                            for x in range(X.n)
                        ):
                            return False, (x1, x2, r, s1, s2)
    return True, None


def _breakpoints(X: EnrichedCategory):
    if X.mode == "exact":
        if X.grid is None:
            raise RecatError("conical flatness needs a grid in exact mode")
        return list(X.grid.points), True
    # float mode: sample the realized values plus a small ladder, flagged approximate
    pts = sorted({v for row in X.hom for v in row} | {k / 8 for k in range(9)})
    return pts, False


def is_conically_flat(phi: Weight):
    """(verdict, witness, exact_flag): inhabited and the binary-meet identity.

    Checks (p1 (*) phi(x1)) meet (p2 (*) phi(x2)) against the sup over x of
    ((p1 (*) X(x1, x)) meet (p2 (*) X(x2, x))) (*) phi(x) for breakpoints p.
    """
    X = phi.base
    if not any(tn.veq(phi(x), X.one) for x in range(X.n)):
        return False, ("inhabited",), X.mode == "exact"
    points, exact = _breakpoints(X)
    for x1 in range(X.n):
        for x2 in range(X.n):
            for p1 in points:
                a1 = X.conj(p1, phi(x1))
                for p2 in points:
                    lhs = min(a1, X.conj(p2, phi(x2)))
                    rhs = max(
                        X.conj(min(X.conj(p1, X.hom[x1][x]), X.conj(p2, X.hom[x2][x])), phi(x))
                        for x in range(X.n)
                    )
                    if not tn.veq(lhs, rhs):
                        return False, (x1, x2, p1, p2), exact
    return True, None, exact


def _coweight_family(X: EnrichedCategory, bound: int, rng):
    """Exhaustive grid coweights when affordable, otherwise a generated family."""
    if X.mode == "exact" and X.grid is not None and len(X.grid.points) ** X.n <= bound:
        return enumerate_coweights(X, bound), True
    from .presheaf import coweight_closure

    fam = []
    seen = set()
    points = list(X.grid.points) if X.grid is not None else [tn.ZERO, tn.ONE]
    for p in points:
        for x in range(X.n):
            cw = Coweight(X, tuple(X.conj(p, X.hom[x][y]) for y in range(X.n)))
            if cw.values not in seen:
                seen.add(cw.values)
                fam.append(cw)
    rng = rng or random.Random(0)
    for _ in range(1000):
        vec = tuple(rng.choice(points) for _ in range(X.n))
        cw = coweight_closure(X, vec)
        if cw.values not in seen:
            seen.add(cw.values)
            fam.append(cw)
    return fam, False


def is_flat(phi: Weight, bound: int = 10**6, rng=None):
    """(verdict, witness, exhaustive_flag): conically flat plus cotensor stability.

    The extra condition quantifies pairing(phi, r -> psi) = r -> pairing(phi, psi)
    over grid scalars r and a coweight family (exhaustive under the bound).
    """
    X = phi.base
    cf, wit, exact = is_conically_flat(phi)
    if not cf:
        return False, ("conically_flat", wit), exact
    points, _ = _breakpoints(X)
    family, exhaustive = _coweight_family(X, bound, rng)
    for r in points:
        for psi in family:
            shifted = Coweight(X, tuple(X.imp(r, psi(y)) for y in range(X.n)))
            lhs = pairing(phi, shifted)
            rhs = X.imp(r, pairing(phi, psi))
            if not tn.veq(lhs, rhs):
                return False, (r, psi.values), exhaustive and exact
    return True, None, exhaustive and exact


@dataclass
class WeightClassReport:
    representable: int | None
    cauchy: tuple | None
    ideal: bool
    conically_flat: bool
    flat: bool
    witnesses: dict = field(default_factory=dict)
    exhaustive: bool = True

    @property
    def flags(self):
        return {
            "representable": self.representable is not None,
            "cauchy": self.cauchy is not None,
            "ideal": self.ideal,
            "conically_flat": self.conically_flat,
            "flat": self.flat,
        }

    def to_json(self):
        def enc(v):
            from fractions import Fraction
            from .values import format_value

            if isinstance(v, Fraction):
                return format_value(v)
            if isinstance(v, tuple):
                return [enc(x) for x in v]
            return v

        return {
            "flags": self.flags,
            "representable_element": self.representable,
            "cauchy_left_adjoint": enc(self.cauchy) if self.cauchy else None,
            "witnesses": {k: enc(w) for k, w in self.witnesses.items()},
            "exhaustive": self.exhaustive,
        }


def classify(phi: Weight, bound: int = 10**6, rng=None) -> WeightClassReport:
    """Aggregate all class predicates, enforcing the implication chain."""
    rep = is_representable(phi)
    cw = is_cauchy(phi)
    ideal, ideal_wit = is_ideal(phi)
    cf, cf_wit, _ = is_conically_flat(phi)
    flat, flat_wit, exhaustive = is_flat(phi, bound, rng)
    report = WeightClassReport(
        representable=rep,
        cauchy=cw.values if cw else None,
        ideal=ideal,
        conically_flat=cf,
        flat=flat,
        exhaustive=exhaustive,
    )
    if ideal_wit is not None:
        report.witnesses["ideal"] = ideal_wit
    if cf_wit is not None:
        report.witnesses["conically_flat"] = cf_wit
    if flat_wit is not None:
        report.witnesses["flat"] = flat_wit
    chain = [
        (rep is not None, cw is not None, "representable implies cauchy"),
        (cw is not None, ideal, "cauchy implies ideal"),
        (cw is not None, flat, "cauchy implies flat"),
        (flat, cf, "flat implies conically flat"),
        (ideal, cf, "ideal implies conically flat"),
    ]
    for pre, post, label in chain:
        if pre and not post and exhaustive:
            raise RecatError(f"classification chain violated: {label}")
    return report


def cauchy_completion(X: EnrichedCategory, bound: int = 10**6):
    """(completion, embedding): distinct Cauchy grid weights under sub.

    Weights are separated, so isomorphism classes are literal equality of
    value vectors; the embedding sends x to the class of its Yoneda weight.
    """
    if X.mode != "exact" or X.grid is None:
        raise RecatError("cauchy completion enumerates grid weights; exact mode required")
    cauchys = []
    seen = set()
    for phi in enumerate_weights(X, bound):
        if phi.values in seen:
            continue
        if is_cauchy(phi) is not None:
            seen.add(phi.values)
            cauchys.append(phi)
    hom = tuple(tuple(sub(p1, p2) for p2 in cauchys) for p1 in cauchys)
    names = tuple(f"c{i}" for i in range(len(cauchys)))
    completion = EnrichedCategory(X.tnorm, hom, names, X.grid)
    index = {phi.values: i for i, phi in enumerate(cauchys)}
    embedding = tuple(index[yoneda(X, x).values] for x in range(X.n))
    return completion, embedding


def is_smyth_complete(X: EnrichedCategory, bound: int = 10**6) -> bool:
    """Separated and every enumerated grid ideal representable."""
    if not is_separated(X):
        return False
    for phi in enumerate_weights(X, bound):
        if is_ideal(phi)[0] and is_representable(phi) is None:
            return False
    return True


def is_smyth_completable(X: EnrichedCategory, bound: int = 10**6) -> bool:
    """Every enumerated grid ideal is a Cauchy weight (separated carrier)."""
    if not is_separated(X):
        raise RecatError("smyth completability is postulated for separated carriers")
    for phi in enumerate_weights(X, bound):
        if is_ideal(phi)[0] and is_cauchy(phi) is None:
            return False
    return True
