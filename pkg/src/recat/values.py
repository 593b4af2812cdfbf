"""Exact rational scalars and finite value grids closed under (*) and ->.

A grid is a finite set of rationals containing 0 and 1 that is closed under
the quantale operations of a t-norm; it is the carrier on which the sup/inf
formulas of the rest of the library evaluate exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import tnorm as tn
from .errors import CapExceededError, NotClosedError, RecatError

ZERO = tn.ZERO
ONE = tn.ONE


def parse_value(v) -> Fraction:
    """Parse a 'p/q' string, int, or Fraction into an exact value in [0,1]."""
    if isinstance(v, Fraction):
        f = v
    elif isinstance(v, int):
        f = Fraction(v)
    elif isinstance(v, str):
        f = Fraction(v.strip())
    else:
        raise RecatError(f"cannot parse exact value from {v!r}")
    if not (ZERO <= f <= ONE):
        raise RecatError(f"value {f} outside [0,1]")
    return f


def format_value(v: Fraction) -> str:
    return str(Fraction(v))


def parse_grid_text(text: str):
    """Parse the textual grid form '{0, 1/3, 2/3, 1}'."""
    s = text.strip()
    if s.startswith("{") and s.endswith("}"):
        s = s[1:-1]
    return tuple(parse_value(p) for p in s.split(",") if p.strip())


@dataclass(frozen=True)
class ValueGrid:
    """A finite ascending set of rationals closed under the t-norm operations."""

    points: tuple
    tnorm: tn.TNorm

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(sorted(set(map(Fraction, self.points)))))

    def __contains__(self, v):
        return Fraction(v) in set(self.points)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def index(self, v) -> int:
        return self.points.index(Fraction(v))


def grid_validate(points, t: tn.TNorm) -> ValueGrid:
    """Return the validated grid, or raise NotClosedError on the first bad pair."""
    pts = tuple(sorted({parse_value(p) for p in points}))
    if ZERO not in pts or ONE not in pts:
        raise RecatError("grid must contain 0 and 1")
    pset = set(pts)
    for x in pts:
        for y in pts:
            if tn.conj_exact_unchecked(t, x, y) not in pset:
                raise NotClosedError(x, y, "conj")
            if tn.imp_exact_unchecked(t, x, y) not in pset:
                raise NotClosedError(x, y, "imp")
    return ValueGrid(pts, t)


def grid_closure(seed, t: tn.TNorm, cap: int = 4096) -> ValueGrid:
    """Least closed superset of the seed if it fits within cap elements."""
    current = {parse_value(p) for p in seed} | {ZERO, ONE}
    while True:
        fresh = set()
        for x in current:
            for y in current:
                for v in (tn.conj_exact_unchecked(t, x, y), tn.imp_exact_unchecked(t, x, y)):
                    if v not in current:
                        fresh.add(v)
        if not fresh:
            return ValueGrid(tuple(sorted(current)), t)
        current |= fresh
        if len(current) > cap:
            raise CapExceededError(f"grid closure exceeded cap {cap}")


def unit_grid(n: int, t: tn.TNorm) -> ValueGrid:
    """The grid {0, 1/n, ..., 1}, validated against t."""
    return grid_validate([Fraction(k, n) for k in range(n + 1)], t)
