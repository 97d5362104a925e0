"""Finite Boolean algebras of subsets of {1, ..., n}, stored as bit vectors.

Ground element ``i`` (1-based) lives at bit ``i - 1``.  Elements of the
algebra are plain ``int`` values; a :class:`Universe` knows the width and
does the bookkeeping (complement, validation, naming).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

MAX_GROUND = 16


@dataclass(frozen=True)
class Universe:
    n: int
    full: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_GROUND:
            raise ValueError(f"ground set size must be in 0..{MAX_GROUND}, got {self.n}")
        object.__setattr__(self, "full", (1 << self.n) - 1)

    def check(self, bits: int) -> int:
        if bits < 0 or bits & ~self.full:
            raise ValueError(f"bit vector {bits:#x} has bits outside a {self.n}-element ground set")
        return bits

    def complement(self, x: int) -> int:
        return self.full & ~x

    def elements(self) -> range:
        """All 2**n subsets, in increasing integer order."""
        return range(1 << self.n)

    def from_names(self, names: Iterable[int]) -> int:
        bits = 0
        for i in names:
            if not isinstance(i, int) or isinstance(i, bool) or not 1 <= i <= self.n:
                raise ValueError(f"ground element {i!r} not in 1..{self.n}")
            bits |= 1 << (i - 1)
        return bits

    def names(self, bits: int) -> list[int]:
        return [i + 1 for i in range(self.n) if bits >> i & 1]

    def fmt(self, bits: int) -> str:
        return "{" + ",".join(map(str, self.names(bits))) + "}"


def complement(x: int, universe: Universe) -> int:
    return universe.complement(universe.check(x))


def meet(x: int, y: int) -> int:
    return x & y


def join(x: int, y: int) -> int:
    return x | y


def leq(x: int, y: int) -> bool:
    return x & ~y == 0


def supersets(f: int, universe: Universe) -> Iterator[int]:
    """Every element above ``f``, in increasing integer order."""
    free = universe.complement(f)
    # walk the subsets of the free bits in increasing order
    sub = 0
    while True:
        yield f | sub
        if sub == free:
            return
        sub = (sub - free) & free


@dataclass(frozen=True)
class PrincipalFilter:
    """The up-set ``{b : generator <= b}`` of a finite powerset algebra."""

    generator: int
    universe: Universe

    def __post_init__(self):
        self.universe.check(self.generator)

    def __contains__(self, b: int) -> bool:
        return leq(self.generator, b)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(supersets(self.generator, self.universe))


def principal_filter(f: int, universe: Universe) -> PrincipalFilter:
    return PrincipalFilter(f, universe)
