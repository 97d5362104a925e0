"""Exhaustive checkers for the axiom systems of cubic and MR-algebras.

Every checker quantifies over all element tuples of a finite structure and
returns :class:`AxiomReport` objects; a failure is data, not an exception.
Meets are always the genuine greatest lower bounds from the join order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from . import interval as iv
from .boolean import Universe
from .table import ABSENT, FiniteStructure

MAX_COUNTEREXAMPLES = 16
BOTTOM = -1  # the adjoined 0 in witnesses from check_thmMR_conditions


@dataclass
class AxiomReport:
    axiom: str
    checked: int = 0
    violations: int = 0
    counterexamples: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def record(self, ok: bool, witness: tuple[int, ...]):
        self.checked += 1
        if not ok:
            self.violations += 1
            if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
                self.counterexamples.append(witness)

    def to_json(self) -> dict:
        return {"axiom": self.axiom, "passed": self.passed,
                "counterexamples": [list(t) for t in self.counterexamples],
                "checked": self.checked}

    def __str__(self):
        status = "pass" if self.passed else f"FAIL ({self.violations} violations)"
        text = f"{self.axiom}: {status}, {self.checked} checked"
        if self.counterexamples:
            text += ", e.g. " + " ".join(map(str, self.counterexamples[:4]))
        return text


def all_passed(reports) -> bool:
    return all(r.passed for r in reports)


def _delta_fn(s: FiniteStructure):
    """Total-on-input Delta lookup: ``None`` for holes and incomparable pairs."""
    leq = s.leq
    if s.delta is not None:
        dt = s.delta

        def delta(x, y):
            if x is None or y is None or not leq[y][x]:
                return None
            v = dt[x][y]
            return None if v == ABSENT else v
    elif s.caret is not None:
        ct = s.caret

        def delta(x, y):
            if x is None or y is None or not leq[y][x]:
                return None
            return ct[x][y]
    else:
        raise ValueError("structure has neither a delta nor a caret table")
    return delta


def check_cubic(s: FiniteStructure) -> list[AxiomReport]:
    """Axioms a-f of a cubic algebra, with Delta from the delta (or caret) table."""
    D = _delta_fn(s)
    J = s.join
    leq = s.leq
    one = s.one
    els = s.elements
    reps = {k: AxiomReport(f"cubic.{k}") for k in "abcdef"}

    def jn(a, b):
        return None if a is None or b is None else J[a][b]

    for x, y in product(els, els):
        if not leq[x][y]:
            continue
        d = D(y, x)
        reps["a"].record(jn(d, x) == y, (x, y))
        reps["c"].record(d is not None and D(y, d) == x, (x, y))
        for z in els:
            if not leq[y][z]:
                continue
            lhs = D(z, d)
            rhs = D(D(z, y), D(z, x))
            reps["b"].record(lhs is not None and lhs == rhs, (x, y, z))
            dzx, dzy = D(z, x), D(z, y)
            reps["d"].record(dzx is not None and dzy is not None and leq[dzx][dzy], (x, y, z))

    def imp(x, y):
        # xy = Delta(1, Delta(x v y, y)) v y
        if x is None or y is None:
            return None
        return jn(D(one, D(J[x][y], y)), y)

    imp_t = [[imp(x, y) for y in els] for x in els]

    def it(x, y):
        return None if x is None or y is None else imp_t[x][y]

    for x, y in product(els, els):
        v = it(it(x, y), y)
        reps["e"].record(v is not None and v == J[x][y], (x, y))
    for x, y, z in product(els, els, els):
        lhs = it(x, it(y, z))
        reps["f"].record(lhs is not None and lhs == it(y, it(x, z)), (x, y, z))
    return [reps[k] for k in "abcdef"]


def check_mr_axiom(s: FiniteStructure) -> AxiomReport:
    """For a, b < x: Delta(x, a) v b < x iff a ^ b does not exist."""
    D = _delta_fn(s)
    J = s.join
    rep = AxiomReport("mr")
    for x in s.elements:
        below = [a for a in s.elements if s.lt(a, x)]
        for a in below:
            d = D(x, a)
            for b in below:
                no_meet = s.meet[a][b] == ABSENT
                rep.record(d is not None and (J[d][b] != x) == no_meet, (a, b, x))
    return rep


def check_consistency(s: FiniteStructure) -> AxiomReport:
    """No a, b < x1, x2 with Delta(x1, a) v b = x1 but Delta(x2, a) v b < x2."""
    D = _delta_fn(s)
    J = s.join
    rep = AxiomReport("cons")
    for a, b in product(s.elements, s.elements):
        full, strict = [], []
        for x in s.elements:
            if s.lt(a, x) and s.lt(b, x):
                d = D(x, a)
                if d is None:
                    continue
                (full if J[d][b] == x else strict).append(x)
        rep.checked += 1
        if full and strict:
            rep.violations += 1
            if len(rep.counterexamples) < MAX_COUNTEREXAMPLES:
                rep.counterexamples.append((a, b, full[0], strict[0]))
    return rep


CARET_AXIOMS = ("a", "b", "c", "d", "e.i", "e.ii", "f", "g", "h")


def check_caret_axioms(s: FiniteStructure, include_extra: bool = False) -> list[AxiomReport]:
    """The universal axioms (a)-(h) for caret, plus (i) when ``include_extra``."""
    if s.caret is None:
        raise ValueError("structure has no caret table")
    C = s.caret
    J = s.join
    leq = s.leq
    one = s.one
    els = s.elements
    reps = {k: AxiomReport(f"caret.{k}") for k in CARET_AXIOMS}
    extra = AxiomReport("extra.i")
    u = C[one]
    arrow = [[J[y][u[C[x][y]]] for y in els] for x in els]

    for x in els:
        reps["c"].record(u[u[x]] == x, (x,))
    for x, y in product(els, els):
        jxy = J[x][y]
        cxy = C[x][y]
        reps["a"].record(J[x][C[y][x]] == jxy, (x, y))
        reps["b"].record(C[u[x]][u[y]] == u[cxy], (x, y))
        if leq[x][y]:
            reps["d"].record(leq[u[x]][u[y]], (x, y))
        reps["e.i"].record(arrow[arrow[x][y]][y] == jxy, (x, y))
        reps["f"].record(arrow[jxy][C[jxy][y]] == u[arrow[x][y]], (x, y))
        reps["g"].record(leq[cxy][C[jxy][y]], (x, y))
        reps["h"].record(leq[cxy][x], (x, y))
        if include_extra:
            extra.record(leq[C[jxy][y]][arrow[x][cxy]], (x, y))
    for x, y, z in product(els, els, els):
        reps["e.ii"].record(arrow[x][arrow[y][z]] == arrow[y][arrow[x][z]], (x, y, z))
    out = [reps[k] for k in CARET_AXIOMS]
    if include_extra:
        out.append(extra)
    return out


def check_implication_laws(s: FiniteStructure) -> list[AxiomReport]:
    """Implication-algebra laws for the structure's ``->``."""
    els = s.elements
    J = s.join
    arrow = [[s.arrow(x, y) for y in els] for x in els]
    names = ("impl.top", "impl.contract", "impl.join", "impl.exchange")
    reps = {k: AxiomReport(k) for k in names}

    def a(x, y):
        return None if x is None or y is None else arrow[x][y]

    for x, y in product(els, els):
        xy = arrow[x][y]
        reps["impl.top"].record(xy is not None and J[xy][x] == s.one, (x, y))
        reps["impl.contract"].record(a(xy, x) == x, (x, y))
        reps["impl.join"].record(a(xy, y) == J[x][y], (x, y))
    for x, y, z in product(els, els, els):
        lhs = a(x, a(y, z))
        reps["impl.exchange"].record(lhs is not None and lhs == a(y, a(x, z)), (x, y, z))
    return [reps[k] for k in names]


def check_thmMR_conditions(s: FiniteStructure) -> list[AxiomReport]:
    """Conditions (i)-(iii) of the Metropolis-Rota theorem on ``s`` plus a new bottom.

    Meets that do not exist in ``s`` become the bottom, and every local
    reflection fixes the bottom.  Witnesses use ``-1`` for the bottom.
    """
    D = _delta_fn(s)
    J = s.join
    leq = s.leq
    reps = [AxiomReport("thmMR.i"), AxiomReport("thmMR.ii"), AxiomReport("thmMR.iii")]

    def dx(x, a):
        return BOTTOM if a == BOTTOM else D(x, a)

    def le(a, b):
        return a == BOTTOM or (b != BOTTOM and leq[a][b])

    def jn(a, b):
        if a == BOTTOM:
            return b
        if b == BOTTOM:
            return a
        return J[a][b]

    def mt(a, b):
        if a == BOTTOM or b == BOTTOM:
            return BOTTOM
        m = s.meet[a][b]
        return BOTTOM if m == ABSENT else m

    for x in s.elements:
        seg = [BOTTOM] + s.down_set(x)
        for a in seg:
            da = dx(x, a)
            ok = da is not None and dx(x, da) == a
            reps[1].record(ok, (a, x))
            for b in seg:
                if le(a, b):
                    db = dx(x, b)
                    reps[0].record(da is not None and db is not None and le(da, db), (a, b, x))
                if a != x and b != x:
                    lhs = da is not None and jn(da, b) != x
                    reps[2].record(lhs == (mt(a, b) == BOTTOM), (a, b, x))
    return reps


def admissible_p_values(x: iv.Interval, y: iv.Interval) -> list[iv.Interval]:
    """Every value allowed for ``p(x, y)``: pinned to Delta(x, y) when x >= y,
    otherwise any interval below both ``x`` and ``Delta(x v y, y)``."""
    if y <= x:
        return [iv.delta_i(x, y)]
    bound = iv.caret_i(x, y)
    u = x.universe
    return [p for p in iv.enumerate_i(u) if p <= bound]


def check_p_freedom(universe: Universe) -> AxiomReport:
    """Any admissible ``p`` gives the same ``y v Delta(1, p(x, y))`` as the caret."""
    top = iv.top(universe)
    elems = iv.enumerate_i(universe)
    index = {e: i for i, e in enumerate(elems)}
    rep = AxiomReport("p-freedom")
    for x, y in product(elems, elems):
        want = iv.join_i(y, iv.delta_i(top, iv.delta_i(iv.join_i(x, y), y)))
        for p in admissible_p_values(x, y):
            got = iv.join_i(y, iv.delta_i(top, p))
            rep.record(got == want, (index[x], index[y], index[p]))
    return rep


def max_p_choices(universe: Universe) -> tuple[int, tuple | None]:
    """Largest number of admissible p-values over incomparable pairs, with a pair attaining it."""
    elems = iv.enumerate_i(universe)
    best, where = 0, None
    for x, y in product(elems, elems):
        if x <= y or y <= x:
            continue
        k = len(admissible_p_values(x, y))
        if k > best:
            best, where = k, (x, y)
    return best, where


def caret_matches_delta(s: FiniteStructure) -> AxiomReport:
    """``x ^ y = x ^ Delta(x v y, y)`` (genuine meet) for all pairs."""
    from .table import caret_from_delta

    if s.caret is None:
        raise ValueError("structure has no caret table")
    t = s if s.delta is not None else s.with_delta_from_caret()
    rep = AxiomReport("caret.definable")
    for x, y in product(s.elements, s.elements):
        rep.record(caret_from_delta(t, x, y) == s.caret[x][y], (x, y))
    return rep


def full_suite(s: FiniteStructure, include_extra: bool = True) -> list[AxiomReport]:
    reports = check_cubic(s) + [check_mr_axiom(s)]
    if s.caret is not None:
        reports += check_caret_axioms(s, include_extra)
    return reports
