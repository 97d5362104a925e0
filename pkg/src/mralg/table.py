"""Finite structures given by explicit operation tables.

Elements are the indices ``0 .. size-1``.  ``join`` is always present;
``caret`` and ``delta`` are optional.  ``delta[x][y]`` holds the reflection
``Delta(x, y)`` for ``y <= x`` and :data:`ABSENT` elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Callable, Hashable, Sequence

from . import interval as iv
from . import signed as sg
from .boolean import PrincipalFilter, Universe

ABSENT = -1

Table = tuple[tuple[int, ...], ...]


class StructureError(ValueError):
    """A table violates a structural law; ``witness`` names the offending elements."""

    def __init__(self, message, witness=()):
        super().__init__(message)
        self.witness = tuple(witness)


def _freeze(table, size, name, allow_absent=False) -> Table:
    rows = tuple(tuple(int(v) for v in row) for row in table)
    if len(rows) != size or any(len(r) != size for r in rows):
        raise StructureError(f"{name} table must be {size}x{size}")
    lo = ABSENT if allow_absent else 0
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if not lo <= v < size:
                raise StructureError(f"{name}[{i}][{j}] = {v} is not an element index", (i, j))
    return rows


@dataclass(frozen=True)
class FiniteStructure:
    size: int
    one: int
    join: Table
    caret: Table | None = None
    delta: Table | None = None
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.size < 1:
            raise StructureError("a structure needs at least one element")
        if not 0 <= self.one < self.size:
            raise StructureError(f"top index {self.one} out of range")
        set_ = lambda k, v: object.__setattr__(self, k, v)  # noqa: E731
        set_("join", _freeze(self.join, self.size, "join"))
        if self.caret is not None:
            set_("caret", _freeze(self.caret, self.size, "caret"))
        if self.delta is not None:
            set_("delta", _freeze(self.delta, self.size, "delta", allow_absent=True))
        if self.labels is not None:
            set_("labels", tuple(self.labels))
            if len(self.labels) != self.size:
                raise StructureError("labels must name every element")

    @property
    def elements(self) -> range:
        return range(self.size)

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    @cached_property
    def leq(self) -> tuple[tuple[bool, ...], ...]:
        return derive_order(self)

    @cached_property
    def meet(self) -> Table:
        """Partial meet table; :data:`ABSENT` where no greatest lower bound exists."""
        leq = self.leq
        down = [[z for z in self.elements if leq[z][x]] for x in self.elements]
        rows = []
        for a in self.elements:
            row = []
            for b in self.elements:
                lower = [z for z in down[a] if leq[z][b]]
                best = ABSENT
                for z in lower:
                    if all(leq[w][z] for w in lower):
                        best = z
                        break
                row.append(best)
            rows.append(tuple(row))
        return tuple(rows)

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.leq[x][y]

    def glb(self, a: int, b: int) -> int | None:
        m = self.meet[a][b]
        return None if m == ABSENT else m

    def delta_at(self, x: int, y: int) -> int | None:
        """``Delta(x, y)`` for ``y <= x``; ``None`` if the table has a hole there."""
        if not self.leq[y][x]:
            raise ValueError(f"Delta({x}, {y}) is only defined for {y} <= {x}")
        if self.delta is not None:
            v = self.delta[x][y]
            return None if v == ABSENT else v
        if self.caret is not None:
            return self.caret[x][y]
        raise ValueError("structure has neither a delta nor a caret table")

    def caret_at(self, x: int, y: int) -> int | None:
        if self.caret is not None:
            return self.caret[x][y]
        return caret_from_delta(self, x, y)

    def arrow(self, x: int, y: int) -> int | None:
        """Implication ``x -> y``, from the caret table when there is one."""
        if self.caret is not None:
            return derived_arrow(self, x, y)
        j = self.join[x][y]
        d = self.delta_at(j, y)
        if d is None:
            return None
        r = self.delta_at(self.one, d)
        return None if r is None else self.join[y][r]

    def up_set(self, a: int) -> list[int]:
        return [x for x in self.elements if self.leq[a][x]]

    def down_set(self, a: int) -> list[int]:
        return [x for x in self.elements if self.leq[x][a]]

    def with_delta_from_caret(self) -> FiniteStructure:
        if self.caret is None:
            raise ValueError("no caret table to read Delta from")
        leq = self.leq
        delta = [[self.caret[x][y] if leq[y][x] else ABSENT for y in self.elements]
                 for x in self.elements]
        return replace(self, delta=delta)

    def without_caret(self) -> FiniteStructure:
        return replace(self, caret=None)


def derive_order(s: FiniteStructure) -> tuple[tuple[bool, ...], ...]:
    """The order ``x <= y iff x v y = y``, after checking the semilattice laws."""
    j = s.join
    n = s.size
    for x in range(n):
        if j[x][x] != x:
            raise StructureError(f"join is not idempotent at {x}", (x,))
        if j[x][s.one] != s.one:
            raise StructureError(f"{x} v 1 != 1", (x,))
        for y in range(n):
            if j[x][y] != j[y][x]:
                raise StructureError(f"join is not commutative at ({x}, {y})", (x, y))
    for x in range(n):
        jx = j[x]
        for y in range(n):
            jxy = j[jx[y]]
            jy = j[y]
            for z in range(n):
                if jxy[z] != jx[jy[z]]:
                    raise StructureError(f"join is not associative at ({x}, {y}, {z})", (x, y, z))
    return tuple(tuple(j[x][y] == y for y in range(n)) for x in range(n))


def glb(s: FiniteStructure, a: int, b: int) -> int | None:
    return s.glb(a, b)


def derived_arrow(s: FiniteStructure, x: int, y: int) -> int:
    """``x -> y = y v (1 ^ (x ^ y))`` read off the caret table."""
    c = s.caret
    return s.join[y][c[s.one][c[x][y]]]


def caret_from_delta(s: FiniteStructure, a: int, b: int) -> int | None:
    """``a ^ Delta(a v b, b)`` with a genuine meet; ``None`` when it does not exist."""
    j = s.join[a][b]
    d = s.delta_at(j, b)
    if d is None:
        return None
    return s.glb(a, d)


def is_mr(s: FiniteStructure) -> tuple[bool, tuple[int, int] | None]:
    """True iff the caret built from Delta is total; otherwise a pair where it fails."""
    for a in s.elements:
        for b in s.elements:
            if caret_from_delta(s, a, b) is None:
                return False, (a, b)
    return True, None


def relabel(s: FiniteStructure, order: Sequence[int]) -> FiniteStructure:
    """Renumber so that new element ``i`` is old element ``order[i]``."""
    new = [0] * s.size
    for i, old in enumerate(order):
        new[old] = i

    def move(table, absent_ok=False):
        if table is None:
            return None
        return [[(new[table[order[i]][order[k]]]
                  if not (absent_ok and table[order[i]][order[k]] == ABSENT) else ABSENT)
                 for k in range(s.size)] for i in range(s.size)]

    labels = None if s.labels is None else [s.labels[o] for o in order]
    return FiniteStructure(s.size, new[s.one], move(s.join), move(s.caret),
                           move(s.delta, absent_ok=True), labels)


def from_algebra(elements: Sequence[Hashable], one: Hashable,
                 join: Callable, delta: Callable | None = None,
                 caret: Callable | None = None, leq: Callable | None = None,
                 label: Callable = str) -> FiniteStructure:
    """Tabulate a concrete algebra.

    ``delta`` is tabulated on pairs with ``leq(y, x)``; ``leq`` defaults to the
    elements' own ``<=``.
    """
    index = {e: i for i, e in enumerate(elements)}
    if len(index) != len(elements):
        raise StructureError("duplicate elements")
    leq = leq or (lambda a, b: a <= b)
    jt = [[index[join(a, b)] for b in elements] for a in elements]
    ct = dt = None
    if caret is not None:
        ct = [[index[caret(a, b)] for b in elements] for a in elements]
    if delta is not None:
        dt = [[index[delta(a, b)] if leq(b, a) else ABSENT for b in elements] for a in elements]
    return FiniteStructure(len(elements), index[one], jt, ct, dt, [label(e) for e in elements])


def signed_structure(n: int, with_caret: bool = True) -> FiniteStructure:
    u = Universe(n)
    return from_algebra(sg.enumerate_s(u), sg.top(u), sg.join_s, sg.delta_s,
                        sg.caret_s if with_caret else None)


def interval_structure(n: int, with_caret: bool = True) -> FiniteStructure:
    u = Universe(n)
    return from_algebra(iv.enumerate_i(u), iv.top(u), iv.join_i, iv.delta_i,
                        iv.caret_i if with_caret else None)


def filter_structure(n: int, f: int, with_caret: bool = True) -> FiniteStructure:
    u = Universe(n)
    members = iv.FilterAlgebra(PrincipalFilter(f, u)).members()
    return from_algebra(members, iv.top(u), iv.join_i, iv.delta_i,
                        iv.caret_i if with_caret else None)
