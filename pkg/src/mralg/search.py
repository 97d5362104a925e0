"""Finite model search for the universal caret axioms.

For every join-semilattice with top of a given size (one per isomorphism
class) we backtrack over caret tables.  Axiom instances are watched: an
instance is parked on the first unassigned caret cell its evaluation needs
and re-evaluated only when that cell gets a value.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .axioms import all_passed, check_caret_axioms, check_cubic, check_mr_axiom
from .canon import canonical_form
from .table import FiniteStructure

log = logging.getLogger(__name__)

MAX_SIZE = 8
LONG_RUNNING = 7


@dataclass(frozen=True)
class SearchConfig:
    max_size: int = 6
    include_extra: bool = True
    parallel: bool = False
    timeout: float | None = None  # seconds per size

    def __post_init__(self):
        if not 1 <= self.max_size <= MAX_SIZE:
            raise ValueError(f"max_size must be in 1..{MAX_SIZE}")


@dataclass
class ModelCatalog:
    include_extra: bool
    models: dict[int, list[FiniteStructure]] = field(default_factory=dict)
    timed_out: set[int] = field(default_factory=set)
    semilattices: dict[int, int] = field(default_factory=dict)

    def counts(self) -> dict[int, int]:
        return {k: len(v) for k, v in sorted(self.models.items())}

    def summary(self) -> str:
        parts = []
        for k, c in self.counts().items():
            parts.append(f"{k}:{c}+timeout" if k in self.timed_out else f"{k}:{c}")
        return " ".join(parts)


# -- join-semilattices ------------------------------------------------------

def _extensions(s: FiniteStructure):
    """Add one new minimal element below each admissible up-set."""
    n = s.size
    leq = s.leq
    for mask in range(1, 1 << n):
        up = [x for x in range(n) if mask >> x & 1]
        if any(leq[x][y] and not mask >> y & 1 for x in up for y in range(n)):
            continue
        joins = []
        for x in range(n):
            cand = [z for z in up if leq[x][z]]
            least = [z for z in cand if all(leq[z][w] for w in cand)]
            if not least:
                break
            joins.append(least[0])
        else:
            join = [list(row) + [joins[i]] for i, row in enumerate(s.join)]
            join.append(joins + [n])
            yield FiniteStructure(n + 1, s.one, join)


@lru_cache(maxsize=None)
def enumerate_semilattices(n: int) -> tuple[FiniteStructure, ...]:
    """Join-semilattices with top on ``n`` elements, one per isomorphism class.

    Every such semilattice arises from a smaller one by adding a minimal
    element, so we grow them and deduplicate by canonical form.
    """
    if not 1 <= n <= MAX_SIZE:
        raise ValueError(f"semilattice size must be in 1..{MAX_SIZE}")
    if n == 1:
        return (FiniteStructure(1, 0, [[0]]),)
    seen = {}
    for base in enumerate_semilattices(n - 1):
        for s in _extensions(base):
            cf = canonical_form(s)
            if cf.key not in seen:
                seen[cf.key] = cf.apply(s)
    return tuple(seen[k] for k in sorted(seen))


# -- caret search -----------------------------------------------------------

class _Blocked(Exception):
    cell: tuple[int, int]


class _Timeout(Exception):
    pass


def _instances(s: FiniteStructure, include_extra: bool):
    n, one, J, leq = s.size, s.one, s.join, s.leq
    els = range(n)

    def build(C):
        def arrow(x, y):
            return J[y][C(one, C(x, y))]

        out = []
        for x in els:
            out.append(lambda x=x: C(one, C(one, x)) == x)
        for x, y in product(els, els):
            j = J[x][y]
            out.append(lambda x=x, y=y, j=j: J[x][C(y, x)] == j)
            out.append(lambda x=x, y=y: C(C(one, x), C(one, y)) == C(one, C(x, y)))
            if leq[x][y]:
                out.append(lambda x=x, y=y: leq[C(one, x)][C(one, y)])
            out.append(lambda x=x, y=y, j=j: arrow(arrow(x, y), y) == j)
            out.append(lambda x=x, y=y, j=j: arrow(j, C(j, y)) == C(one, arrow(x, y)))
            out.append(lambda x=x, y=y, j=j: leq[C(x, y)][C(j, y)])
            if include_extra:
                out.append(lambda x=x, y=y, j=j: leq[C(j, y)][arrow(x, C(x, y))])
        for x, y, z in product(els, els, els):
            out.append(lambda x=x, y=y, z=z: arrow(x, arrow(y, z)) == arrow(y, arrow(x, z)))
        return out

    return build


def _cell_order(s: FiniteStructure) -> list[tuple[int, int]]:
    one = s.one
    height = {x: len(s.down_set(x)) for x in s.elements}
    cells = [(one, y) for y in s.elements]
    cells += [(x, one) for x in s.elements if x != one]
    rest = [(x, y) for x in s.elements for y in s.elements if x != one and y != one]
    rest.sort(key=lambda c: (-height[c[0]], c[0], -height[c[1]], c[1]))
    return cells + rest


def models_over(s: FiniteStructure, include_extra: bool = True,
                deadline: float | None = None) -> list[FiniteStructure]:
    """Every caret table on the semilattice ``s`` satisfying the axioms."""
    n = s.size
    tab = [[-1] * n for _ in range(n)]
    blk = _Blocked()

    def C(a, b):
        v = tab[a][b]
        if v < 0:
            blk.cell = (a, b)
            raise blk
        return v

    instances = _instances(s, include_extra)(C)
    watch: dict[tuple[int, int], list] = {c: [] for c in product(range(n), range(n))}
    for inst in instances:
        try:
            if not inst():
                return []
        except _Blocked:
            watch[blk.cell].append(inst)

    cells = _cell_order(s)
    domains = {(x, y): s.down_set(x) for x, y in cells}
    found = []

    def assign(cell):
        pending = watch[cell]
        watch[cell] = []
        moved = []
        ok = True
        for inst in pending:
            try:
                if not inst():
                    ok = False
                    break
            except _Blocked:
                watch[blk.cell].append(inst)
                moved.append(blk.cell)
        return ok, pending, moved

    def undo(cell, pending, moved):
        for c in reversed(moved):
            watch[c].pop()
        watch[cell] = pending

    def rec(i):
        if deadline is not None and time.monotonic() > deadline:
            raise _Timeout
        if i == len(cells):
            found.append(FiniteStructure(n, s.one, s.join, caret=[row[:] for row in tab]))
            return
        cell = cells[i]
        x, y = cell
        for v in domains[cell]:
            tab[x][y] = v
            ok, pending, moved = assign(cell)
            if ok:
                rec(i + 1)
            undo(cell, pending, moved)
        tab[x][y] = -1

    rec(0)
    return found


def _verify(m: FiniteStructure, include_extra: bool):
    reports = check_caret_axioms(m, include_extra)
    reports += check_cubic(m) + [check_mr_axiom(m)]
    if not all_passed(reports):
        bad = [r.axiom for r in reports if not r.passed]
        raise RuntimeError(f"search emitted a model failing {bad}")


def _search_one(args):
    s, include_extra, deadline = args
    try:
        return models_over(s, include_extra, deadline), False
    except _Timeout:
        return [], True


def search_models(cfg: SearchConfig, on_model=None) -> ModelCatalog:
    """All models of sizes ``1..cfg.max_size`` up to isomorphism.

    ``on_model(size, model)`` is called for each model in catalog order.
    """
    catalog = ModelCatalog(cfg.include_extra)
    pool = ProcessPoolExecutor() if cfg.parallel else None
    try:
        for size in range(1, cfg.max_size + 1):
            if size >= LONG_RUNNING:
                log.warning("size %d search is long-running", size)
            lattices = enumerate_semilattices(size)
            catalog.semilattices[size] = len(lattices)
            deadline = None if cfg.timeout is None else time.monotonic() + cfg.timeout
            tasks = [(s, cfg.include_extra, deadline) for s in lattices]
            results = pool.map(_search_one, tasks) if pool else map(_search_one, tasks)
            keyed = {}
            for models, timed_out in results:
                if timed_out:
                    catalog.timed_out.add(size)
                for m in models:
                    cf = canonical_form(m)
                    keyed.setdefault(cf.key, cf.apply(m))
            found = [keyed[k] for k in sorted(keyed)]
            for m in found:
                _verify(m, cfg.include_extra)
                if on_model is not None:
                    on_model(size, m)
            catalog.models[size] = found
            log.info("size %d: %d semilattices, %d models", size, len(lattices), len(found))
    finally:
        if pool is not None:
            pool.shutdown()
    return catalog
