"""Interval algebras of finite powerset Boolean algebras.

An interval ``[lo, hi]`` with ``lo <= hi`` is a face of the n-cube; intervals
are ordered by inclusion, so the top is ``[0, 1]`` and the vertices are the
degenerate intervals ``[b, b]``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .boolean import PrincipalFilter, Universe, leq
from .signed import SignedSet


@dataclass(frozen=True, slots=True)
class Interval:
    lo: int
    hi: int
    universe: Universe

    def __post_init__(self):
        self.universe.check(self.lo)
        self.universe.check(self.hi)
        if not leq(self.lo, self.hi):
            raise ValueError(f"interval endpoints out of order: {self.universe.fmt(self.lo)} "
                             f"is not below {self.universe.fmt(self.hi)}")

    @classmethod
    def of(cls, lo, hi, universe: Universe) -> Interval:
        return cls(universe.from_names(lo), universe.from_names(hi), universe)

    def __le__(self, other: Interval) -> bool:
        return leq(other.lo, self.lo) and leq(self.hi, other.hi)

    def __lt__(self, other: Interval) -> bool:
        return self != other and self <= other

    def __str__(self):
        u = self.universe
        return f"[{u.fmt(self.lo)},{u.fmt(self.hi)}]"

    def to_json(self) -> dict:
        return {"lo": self.universe.names(self.lo), "hi": self.universe.names(self.hi)}


def top(universe: Universe) -> Interval:
    return Interval(0, universe.full, universe)


def enumerate_i(universe: Universe) -> list[Interval]:
    return [Interval(lo, hi, universe)
            for hi in universe.elements() for lo in universe.elements() if leq(lo, hi)]


def join_i(x: Interval, y: Interval) -> Interval:
    return Interval(x.lo & y.lo, x.hi | y.hi, x.universe)


def delta_i(x: Interval, y: Interval) -> Interval:
    """Local complementation of ``y`` inside ``x``; needs ``y <= x``."""
    if not y <= x:
        raise ValueError(f"delta_i needs y <= x, got x={x}, y={y}")
    return _reflect(x, y)


def _reflect(x: Interval, y: Interval) -> Interval:
    nc = x.universe.complement
    return Interval(x.lo | (x.hi & nc(y.hi)), x.hi & (x.lo | nc(y.lo)), x.universe)


def meet_i(x: Interval, y: Interval) -> Interval | None:
    lo, hi = x.lo | y.lo, x.hi & y.hi
    if not leq(lo, hi):
        return None
    return Interval(lo, hi, x.universe)


def caret_i(x: Interval, y: Interval) -> Interval:
    # same shape as the reflection formula, evaluated without x >= y
    return _reflect(x, y)


def length(x: Interval) -> int:
    return x.lo | x.universe.complement(x.hi)


def star_i(a: Interval, b: Interval) -> Interval:
    lb = length(b)
    return Interval(a.lo & lb, a.hi | a.universe.complement(lb), a.universe)


def star_i_def(a: Interval, b: Interval) -> Interval:
    """``a * b`` straight from its definition ``a v Delta(a v b, b)``."""
    return join_i(a, delta_i(join_i(a, b), b))


def arrow_i(x: Interval, y: Interval) -> Interval:
    return join_i(y, delta_i(top(x.universe), delta_i(join_i(x, y), y)))


def implies_big_i(a: Interval, b: Interval) -> Interval:
    la = length(a)
    return Interval(b.lo & a.universe.complement(la), b.hi | la, a.universe)


def implies_big_i_def(a: Interval, b: Interval) -> Interval:
    return arrow_i(delta_i(join_i(a, b), a), b)


def signed_to_interval(s: SignedSet) -> Interval:
    return Interval(s.pos, s.universe.complement(s.neg), s.universe)


def interval_to_signed(x: Interval) -> SignedSet:
    return SignedSet(x.lo, x.universe.complement(x.hi), x.universe)


@dataclass(frozen=True)
class FilterAlgebra:
    """Intervals ``[a, b]`` with ``~a`` and ``b`` in a principal filter.

    A view over the full interval algebra: membership is a predicate and the
    operations are the ones defined above.
    """

    filter: PrincipalFilter

    @property
    def universe(self) -> Universe:
        return self.filter.universe

    def __contains__(self, x: Interval) -> bool:
        return self.universe.complement(x.lo) in self.filter and x.hi in self.filter

    def members(self) -> list[Interval]:
        return [x for x in enumerate_i(self.universe) if x in self]


def filter_subalgebra(f: PrincipalFilter) -> list[Interval]:
    return FilterAlgebra(f).members()
