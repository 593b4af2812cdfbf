"""Continuous t-norms on [0,1]: evaluation, residua, generators, ordinal sums.

Exact mode works on `fractions.Fraction` values and is available for the
Godel and Lukasiewicz t-norms and for ordinal sums whose blocks are all
Lukasiewicz.  The product t-norm (and any ordinal sum containing a product
block) is evaluated in float mode only, since no finite rational set is
closed under it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce

from .errors import ExactModeError, ModeMismatchError, NotArchimedeanError, RecatError

GODEL = "godel"
PRODUCT = "product"
LUKASIEWICZ = "lukasiewicz"
ORDINAL = "ordinal"

ZERO = Fraction(0)
ONE = Fraction(1)

#: comparison tolerance used throughout float mode
TOL = 1e-12

NEG_INF = float("-inf")


def mode_of(v) -> str:
    if isinstance(v, Fraction):
        return "exact"
    if isinstance(v, float):
        return "float"
    if isinstance(v, int):
        # bare ints are promoted to exact values
        return "exact"
    raise ModeMismatchError(f"unsupported value type {type(v).__name__}")


def same_mode(x, y) -> str:
    mx, my = mode_of(x), mode_of(y)
    if mx != my:
        raise ModeMismatchError(f"mixed exact/float operands: {x!r} and {y!r}")
    return mx


def vle(x, y) -> bool:
    """Order comparison, tolerance-aware in float mode."""
    if isinstance(x, float) or isinstance(y, float):
        return x <= y + TOL
    return x <= y


def veq(x, y) -> bool:
    if isinstance(x, float) or isinstance(y, float):
        return abs(x - y) <= TOL
    return x == y


@dataclass(frozen=True)
class Block:
    """One Archimedean summand of an ordinal sum, on the closed interval [lo, hi]."""

    lo: Fraction
    hi: Fraction
    inner: str  # PRODUCT or LUKASIEWICZ

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if not (ZERO <= self.lo < self.hi <= ONE):
            raise RecatError(f"block needs 0 <= lo < hi <= 1, got [{self.lo}, {self.hi}]")
        if self.inner not in (PRODUCT, LUKASIEWICZ):
            raise RecatError(f"block inner must be product or lukasiewicz, got {self.inner!r}")


@dataclass(frozen=True)
class TNorm:
    """A continuous t-norm: a named base or an ordinal sum of blocks."""

    kind: str
    blocks: tuple = ()

    def __post_init__(self):
        if self.kind not in (GODEL, PRODUCT, LUKASIEWICZ, ORDINAL):
            raise RecatError(f"unknown t-norm kind {self.kind!r}")
        object.__setattr__(self, "blocks", tuple(self.blocks))
        if self.kind != ORDINAL and self.blocks:
            raise RecatError("only ordinal sums carry blocks")
        for a, b in zip(self.blocks, self.blocks[1:]):
            if a.hi > b.lo:
                raise RecatError(f"blocks overlap: [{a.lo},{a.hi}] and [{b.lo},{b.hi}]")

    @property
    def supports_exact(self) -> bool:
        if self.kind == PRODUCT:
            return False
        if self.kind == ORDINAL:
            return all(b.inner == LUKASIEWICZ for b in self.blocks)
        return True

    def __str__(self):
        return format_tnorm(self)


godel = TNorm(GODEL)
product = TNorm(PRODUCT)
lukasiewicz = TNorm(LUKASIEWICZ)


def ordinal_sum(*blocks) -> TNorm:
    return TNorm(ORDINAL, tuple(Block(*b) if not isinstance(b, Block) else b for b in blocks))


def parse_tnorm(text: str) -> TNorm:
    """Parse the textual form: godel, product, lukasiewicz, ordinal[(lo,hi,inner),...]."""
    s = text.strip().lower()
    if s in (GODEL, PRODUCT, LUKASIEWICZ):
        return TNorm(s)
    if s.startswith("ordinal[") and s.endswith("]"):
        body = s[len("ordinal[") : -1].strip()
        blocks = []
        while body:
            if not body.startswith("("):
                raise RecatError(f"cannot parse t-norm {text!r}")
            close = body.index(")")
            lo, hi, inner = (p.strip() for p in body[1:close].split(","))
            blocks.append(Block(Fraction(lo), Fraction(hi), inner))
            body = body[close + 1 :].lstrip(", ")
        return TNorm(ORDINAL, tuple(blocks))
    raise RecatError(f"cannot parse t-norm {text!r}")


def format_tnorm(t: TNorm) -> str:
    if t.kind != ORDINAL:
        return t.kind
    parts = ",".join(f"({b.lo},{b.hi},{b.inner})" for b in t.blocks)
    return f"ordinal[{parts}]"


def _coerce(bound: Fraction, mode: str):
    return bound if mode == "exact" else float(bound)


def _conj_raw(t: TNorm, x, y, mode: str):
    if t.kind == GODEL:
        return x if x <= y else y
    if t.kind == LUKASIEWICZ:
        zero = ZERO if mode == "exact" else 0.0
        z = x + y - (ONE if mode == "exact" else 1.0)
        return z if z > zero else zero
    if t.kind == PRODUCT:
        return x * y
    for b in t.blocks:
        lo, hi = _coerce(b.lo, mode), _coerce(b.hi, mode)
        if lo <= x <= hi and lo <= y <= hi:
            if b.inner == LUKASIEWICZ:
                z = x + y - hi
                return z if z > lo else lo
            return lo + (x - lo) * (y - lo) / (hi - lo)
    return x if x <= y else y


def _imp_raw(t: TNorm, x, y, mode: str):
    one = ONE if mode == "exact" else 1.0
    if x <= y:
        return one
    if t.kind == GODEL:
        return y
    if t.kind == LUKASIEWICZ:
        return one - x + y
    if t.kind == PRODUCT:
        return y / x
    for b in t.blocks:
        lo, hi = _coerce(b.lo, mode), _coerce(b.hi, mode)
        if lo <= y < x <= hi:
            if b.inner == LUKASIEWICZ:
                return hi - x + y
            return lo + (hi - lo) * (y - lo) / (x - lo)
    return y


@lru_cache(maxsize=1 << 20)
def _conj_cached(t: TNorm, x, y):
    return _conj_raw(t, x, y, "exact")


@lru_cache(maxsize=1 << 20)
def _imp_cached(t: TNorm, x, y):
    return _imp_raw(t, x, y, "exact")


def _check_range(v):
    if not (0 <= v <= 1):
        raise RecatError(f"value {v!r} outside [0,1]")


def conj(t: TNorm, x, y):
    """x (*) y for the t-norm t."""
    mode = same_mode(x, y)
    _check_range(x)
    _check_range(y)
    if mode == "exact":
        if not t.supports_exact:
            raise ExactModeError(f"{t} has no exact semantics; use float operands")
        return _conj_cached(t, Fraction(x), Fraction(y))
    return _conj_raw(t, x, y, mode)


def imp(t: TNorm, x, y):
    """The residuum x -> y: the largest z with x (*) z <= y."""
    mode = same_mode(x, y)
    _check_range(x)
    _check_range(y)
    if mode == "exact":
        if not t.supports_exact:
            raise ExactModeError(f"{t} has no exact semantics; use float operands")
        return _imp_cached(t, Fraction(x), Fraction(y))
    return _imp_raw(t, x, y, mode)


def conj_exact_unchecked(t: TNorm, x: Fraction, y: Fraction) -> Fraction:
    """Rational evaluation without the exact-mode gate (grid closure probes)."""
    return _conj_raw(t, Fraction(x), Fraction(y), "exact")


def imp_exact_unchecked(t: TNorm, x: Fraction, y: Fraction) -> Fraction:
    return _imp_raw(t, Fraction(x), Fraction(y), "exact")


def power(t: TNorm, x, n: int):
    """The n-fold (*)-power of x, n >= 1."""
    if n < 1:
        raise RecatError("power requires n >= 1")
    return reduce(lambda a, _: conj(t, a, x), range(n - 1), x)


def idempotents(t: TNorm, grid):
    """All grid points with x (*) x = x."""
    points = getattr(grid, "points", grid)
    return tuple(p for p in points if veq(conj(t, p, p), p))


def is_archimedean(t: TNorm) -> bool:
    if t.kind in (PRODUCT, LUKASIEWICZ):
        return True
    if t.kind == ORDINAL and len(t.blocks) == 1:
        b = t.blocks[0]
        return b.lo == ZERO and b.hi == ONE
    return False


def archimedean_base(t: TNorm):
    """The base kind (product or lukasiewicz) of an Archimedean t-norm."""
    if not is_archimedean(t):
        raise NotArchimedeanError(f"{t} is not Archimedean")
    if t.kind == ORDINAL:
        return t.blocks[0].inner
    return t.kind


def generator_eval(t: TNorm, x):
    """Additive generator value in [-inf, 0]; product uses ln, Lukasiewicz x - 1."""
    base = archimedean_base(t)
    _check_range(x)
    if base == LUKASIEWICZ:
        return x - (ONE if mode_of(x) == "exact" else 1.0)
    if mode_of(x) == "exact":
        raise ExactModeError("the product generator ln(x) leaves the rationals")
    return math.log(x) if x > 0.0 else NEG_INF


def pseudo_inverse(t: TNorm, u):
    """Left adjoint of the generator: inverts on [t(0), 0], collapses below to 0."""
    base = archimedean_base(t)
    if isinstance(u, Fraction) or isinstance(u, int):
        if base == PRODUCT:
            raise ExactModeError("the product generator has no exact inverse")
        if u > 0:
            raise RecatError("pseudo_inverse expects u <= 0")
        v = Fraction(u) + ONE
        return v if v > ZERO else ZERO
    if u > 0.0:
        raise RecatError("pseudo_inverse expects u <= 0")
    if base == LUKASIEWICZ:
        return max(0.0, u + 1.0)
    return math.exp(u) if u != NEG_INF else 0.0


def continuous_off_diagonal(t: TNorm) -> bool:
    """True iff the implication is continuous at every point off the diagonal.

    Holds exactly when at most one block behaves like Lukasiewicz and that
    block starts at 0.
    """
    if t.kind in (GODEL, PRODUCT, LUKASIEWICZ):
        return True
    luka = [b for b in t.blocks if b.inner == LUKASIEWICZ]
    if not luka:
        return True
    return len(luka) == 1 and luka[0].lo == ZERO
