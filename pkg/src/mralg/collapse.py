"""The collapse of a finite MR-algebra.

``a ~ b`` iff ``Delta(a v b, a) = b``.  The classes form an implication
lattice with meet from caret, join from ``*`` and implication from ``=>``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .axioms import AxiomReport, all_passed, check_mr_axiom
from .table import FiniteStructure, is_mr


class CollapseError(ValueError):
    def __init__(self, message, witness=()):
        super().__init__(message)
        self.witness = tuple(witness)


def _reflect_up(s: FiniteStructure, a: int, b: int) -> int:
    """``Delta(a v b, a)``."""
    d = s.delta_at(s.join[a][b], a)
    if d is None:
        raise CollapseError(f"Delta({s.join[a][b]}, {a}) is missing", (a, b))
    return d


def preceq(s: FiniteStructure, a: int, b: int) -> bool:
    return s.leq[_reflect_up(s, a, b)][b]


def simeq(s: FiniteStructure, a: int, b: int) -> bool:
    return _reflect_up(s, a, b) == b


def star(s: FiniteStructure, a: int, b: int) -> int:
    return s.join[a][_reflect_up(s, b, a)]


def implies_big(s: FiniteStructure, a: int, b: int) -> int:
    return s.arrow(_reflect_up(s, a, b), b)


@dataclass(frozen=True)
class CollapseClass:
    representative: int
    members: tuple[int, ...]


@dataclass(frozen=True)
class QuotientLattice:
    structure: FiniteStructure
    classes: tuple[CollapseClass, ...]
    class_of: tuple[int, ...]
    one: int
    meet: tuple[tuple[int, ...], ...]
    join: tuple[tuple[int, ...], ...]
    arrow: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.classes)

    def leq(self, p: int, q: int) -> bool:
        return self.join[p][q] == q

    def to_json(self) -> dict:
        return {"version": 1, "one": self.one,
                "classes": [list(c.members) for c in self.classes],
                "meet": [list(r) for r in self.meet],
                "join": [list(r) for r in self.join],
                "arrow": [list(r) for r in self.arrow]}


def build_quotient(s: FiniteStructure) -> QuotientLattice:
    """Quotient by ``~``, with every table entry checked against all representatives."""
    ok, witness = is_mr(s)
    if not ok:
        raise CollapseError("caret is not total, so the input is not an MR-algebra", witness)
    if not check_mr_axiom(s).passed:
        raise CollapseError("input fails the MR-axiom")
    n = s.size
    sim = [[simeq(s, a, b) for b in range(n)] for a in range(n)]
    for a, b in product(range(n), range(n)):
        if sim[a][b] != sim[b][a]:
            raise CollapseError("~ is not symmetric", (a, b))
    for a in range(n):
        if not sim[a][a]:
            raise CollapseError("~ is not reflexive", (a,))
    for a, b, c in product(range(n), range(n), range(n)):
        if sim[a][b] and sim[b][c] and not sim[a][c]:
            raise CollapseError("~ is not transitive", (a, b, c))

    class_of = [-1] * n
    classes = []
    for a in range(n):
        if class_of[a] < 0:
            members = tuple(b for b in range(n) if sim[a][b])
            for b in members:
                class_of[b] = len(classes)
            classes.append(CollapseClass(a, members))

    def table(op, name):
        rows = []
        for p in classes:
            row = []
            for q in classes:
                v = class_of[op(s, p.representative, q.representative)]
                for a, b in product(p.members, q.members):
                    if class_of[op(s, a, b)] != v:
                        raise CollapseError(f"{name} does not respect ~", (a, b))
                row.append(v)
            rows.append(tuple(row))
        return tuple(rows)

    def caret(s, a, b):
        return s.caret_at(a, b)

    return QuotientLattice(s, tuple(classes), tuple(class_of), class_of[s.one],
                           table(caret, "caret"), table(star, "*"), table(implies_big, "=>"))


def check_implication_lattice(q: QuotientLattice) -> list[AxiomReport]:
    k = range(q.size)
    A, J, M = q.arrow, q.join, q.meet
    reps = {name: AxiomReport(name) for name in (
        "quot.contract", "quot.join", "quot.exchange", "quot.one",
        "quot.order", "quot.join.lub", "quot.meet.glb", "quot.meet.formula")}
    for p in k:
        reps["quot.one"].record(A[p][p] == q.one and J[p][q.one] == q.one, (p,))
    for p, r in product(k, k):
        reps["quot.contract"].record(A[A[p][r]][p] == p, (p, r))
        reps["quot.join"].record(A[A[p][r]][r] == A[A[r][p]][p] == J[p][r], (p, r))
        # the implication order and the join order agree
        reps["quot.order"].record((A[p][r] == q.one) == q.leq(p, r), (p, r))
        ub = [t for t in k if q.leq(p, t) and q.leq(r, t)]
        reps["quot.join.lub"].record(J[p][r] in ub and all(q.leq(J[p][r], t) for t in ub), (p, r))
        lb = [t for t in k if q.leq(t, p) and q.leq(t, r)]
        reps["quot.meet.glb"].record(M[p][r] in lb and all(q.leq(t, M[p][r]) for t in lb), (p, r))
    for p, r, t in product(k, k, k):
        reps["quot.exchange"].record(A[p][A[r][t]] == A[r][A[p][t]], (p, r, t))
    # ((a => a^b) * (b => b^a)) => a^b = a^b, elementwise
    s = q.structure
    for a, b in product(s.elements, s.elements):
        ab, ba = s.caret_at(a, b), s.caret_at(b, a)
        lhs = implies_big(s, star(s, implies_big(s, a, ab), implies_big(s, b, ba)), ab)
        reps["quot.meet.formula"].record(lhs == ab, (a, b))
    return list(reps.values())


def local_embedding_check(q: QuotientLattice, a: int) -> AxiomReport:
    """On the up-set of ``a``, ``x -> [x]`` is an injective implication map
    that also carries existing meets to class meets."""
    s = q.structure
    cls = q.class_of
    up = s.up_set(a)
    rep = AxiomReport(f"local.embed[{a}]")
    for x, y in product(up, up):
        rep.record(x == y or cls[x] != cls[y], (x, y))
        rep.record(cls[s.join[x][y]] == q.join[cls[x]][cls[y]], (x, y))
        rep.record(cls[s.arrow(x, y)] == q.arrow[cls[x]][cls[y]], (x, y))
        m = s.glb(x, y)
        if m is not None and s.leq[a][m]:
            rep.record(cls[m] == q.meet[cls[x]][cls[y]], (x, y))
    return rep


def upset_identities(s: FiniteStructure, a: int) -> AxiomReport:
    """For ``b, c >= a``: ``b*c = b v c``, the meet exists and collapses with
    ``b ^ c``, ``b => c = b -> c``, and ``~`` / ``preceq`` reduce to ``=`` / ``<=``."""
    up = s.up_set(a)
    rep = AxiomReport(f"upset[{a}]")
    for b, c in product(up, up):
        rep.record(star(s, b, c) == s.join[b][c], (b, c))
        m = s.glb(b, c)
        # b ^ c itself need not lie above a; only its class is pinned
        rep.record(m is not None and simeq(s, s.caret_at(b, c), m), (b, c))
        rep.record(implies_big(s, b, c) == s.arrow(b, c), (b, c))
        rep.record(simeq(s, b, c) == (b == c), (b, c))
        rep.record(preceq(s, b, c) == s.leq[b][c], (b, c))
    return rep


def congruence_reports(s: FiniteStructure) -> list[AxiomReport]:
    """The coherence facts between ``~`` and caret, ``*`` and ``=>``."""
    els = s.elements
    sim = [[simeq(s, a, b) for b in els] for a in els]
    C = [[s.caret_at(a, b) for b in els] for a in els]
    S = [[star(s, a, b) for b in els] for a in els]
    I = [[implies_big(s, a, b) for b in els] for a in els]
    names = ("caret.comm~", "caret.assoc~", "caret.cong~", "star.comm~", "star.assoc",
             "star.cong", "imp.cong", "imp.contract", "imp.star", "imp.exchange",
             "imp.one", "imp.refl", "imp.le", "imp.star.one")
    reps = {k: AxiomReport(k) for k in names}
    for a in els:
        reps["imp.one"].record(I[s.one][a] == a, (a,))
        reps["imp.refl"].record(I[a][a] == s.one, (a,))
    for a, b in product(els, els):
        reps["caret.comm~"].record(sim[C[a][b]][C[b][a]], (a, b))
        reps["star.comm~"].record(sim[S[a][b]][S[b][a]], (a, b))
        reps["imp.contract"].record(I[I[a][b]][a] == a, (a, b))
        reps["imp.star"].record(I[I[a][b]][b] == S[b][a], (a, b))
        if s.leq[a][b]:
            reps["imp.le"].record(I[a][b] == s.one, (a, b))
        reps["imp.star.one"].record(S[I[a][b]][I[b][a]] == s.one, (a, b))
    for a, b, c in product(els, els, els):
        reps["caret.assoc~"].record(sim[C[a][C[b][c]]][C[C[a][b]][c]], (a, b, c))
        reps["star.assoc"].record(S[a][S[b][c]] == S[S[a][b]][c], (a, b, c))
        reps["imp.exchange"].record(I[a][I[b][c]] == I[b][I[a][c]], (a, b, c))
        if sim[b][c]:
            reps["caret.cong~"].record(sim[C[a][b]][C[a][c]], (a, b, c))
            # exact in the right argument, only up to ~ in the left
            reps["star.cong"].record(S[a][b] == S[a][c] and sim[S[b][a]][S[c][a]], (a, b, c))
            reps["imp.cong"].record(I[b][a] == I[c][a] and sim[I[a][b]][I[a][c]], (a, b, c))
    return [reps[k] for k in names]


def collapse_ok(s: FiniteStructure) -> bool:
    q = build_quotient(s)
    return all_passed(check_implication_lattice(q)) and all(
        local_embedding_check(q, a).passed for a in s.elements)
