"""The algebra of signed subsets of a finite set.

A signed set ``<A, B>`` is a pair of disjoint subsets; it stands for the face
of the n-cube whose coordinates in ``A`` are fixed to ``+`` and in ``B`` to
``-``.  Bigger faces are higher in the order, so the top is ``<{}, {}>`` and
``x <= y`` iff ``x.pos >= y.pos`` and ``x.neg >= y.neg``.

Partial operations return ``None`` when the result does not exist.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .boolean import Universe


@dataclass(frozen=True, slots=True)
class SignedSet:
    pos: int
    neg: int
    universe: Universe

    def __post_init__(self):
        self.universe.check(self.pos)
        self.universe.check(self.neg)
        if self.pos & self.neg:
            raise ValueError(
                f"positive and negative parts overlap on {self.universe.fmt(self.pos & self.neg)}"
            )

    @classmethod
    def of(cls, pos, neg, universe: Universe) -> SignedSet:
        """Build from 1-based element names, e.g. ``SignedSet.of([1], [2], U)``."""
        return cls(universe.from_names(pos), universe.from_names(neg), universe)

    def __le__(self, other: SignedSet) -> bool:
        return other.pos & ~self.pos == 0 and other.neg & ~self.neg == 0

    def __lt__(self, other: SignedSet) -> bool:
        return self != other and self <= other

    def __str__(self):
        u = self.universe
        return f"<{u.fmt(self.pos)},{u.fmt(self.neg)}>"

    def to_json(self) -> dict:
        return {"pos": self.universe.names(self.pos), "neg": self.universe.names(self.neg)}


def top(universe: Universe) -> SignedSet:
    return SignedSet(0, 0, universe)


def join_s(x: SignedSet, y: SignedSet) -> SignedSet:
    return SignedSet(x.pos & y.pos, x.neg & y.neg, x.universe)


def delta_s(x: SignedSet, y: SignedSet) -> SignedSet:
    """Reflect ``y`` through the centre of the face ``x``; needs ``y <= x``."""
    if not y <= x:
        raise ValueError(f"delta_s needs y <= x, got x={x}, y={y}")
    return SignedSet(x.pos | (y.neg & ~x.neg), x.neg | (y.pos & ~x.pos), x.universe)


def meet_s(x: SignedSet, y: SignedSet) -> SignedSet | None:
    pos, neg = x.pos | y.pos, x.neg | y.neg
    if pos & neg:
        return None
    return SignedSet(pos, neg, x.universe)


def caret_s(x: SignedSet, y: SignedSet) -> SignedSet:
    # closed form of x ^ Delta(x v y, y); the meet always exists
    return SignedSet(x.pos | (y.neg & ~x.neg), x.neg | (y.pos & ~x.pos), x.universe)


def compose_s(a: SignedSet, b: SignedSet) -> SignedSet:
    """Oriented-matroid composition: ``a`` wins wherever the two disagree."""
    return SignedSet(a.pos | (b.pos & ~a.neg), a.neg | (b.neg & ~a.pos), a.universe)


def enumerate_s(universe: Universe) -> list[SignedSet]:
    """All 3**n signed sets.

    Lexicographic in the signs of elements 1..n, with absent < + < -.
    """
    out = []
    for signs in product((0, 1, 2), repeat=universe.n):
        pos = neg = 0
        for i, s in enumerate(signs):
            if s == 1:
                pos |= 1 << i
            elif s == 2:
                neg |= 1 << i
        out.append(SignedSet(pos, neg, universe))
    return out
