"""Canonical labelling of finite structures.

Individualisation-refinement in the style of nauty, without the fancy
invariants: colour refinement over the operation tables, branching on the
first smallest non-singleton cell, and pruning sibling branches that lie in
one orbit of the automorphisms found so far.  The canonical form is the
lexicographically least relabelled table tuple among the leaves.  When a
caret table is present the Delta table is left out of the key.
"""

from __future__ import annotations

from dataclasses import dataclass

from .table import ABSENT, FiniteStructure, relabel


@dataclass(frozen=True)
class CanonicalForm:
    order: tuple[int, ...]  # canonical element i is original element order[i]
    key: tuple  # certificate: equal keys iff isomorphic
    automorphisms: tuple[tuple[int, ...], ...]

    def apply(self, s: FiniteStructure) -> FiniteStructure:
        return relabel(s, self.order)


def _tables(s: FiniteStructure):
    # a caret table already fixes Delta on comparable pairs
    delta = s.delta if s.caret is None else None
    return [t for t in (s.join, s.caret, delta) if t is not None]


def _refine(s: FiniteStructure, colors: list[int]) -> list[int]:
    tables = _tables(s)
    n = s.size
    ncells = len(set(colors))
    while True:
        def c(v):
            return -1 if v == ABSENT else colors[v]

        sigs = []
        for x in range(n):
            row = []
            for y in range(n):
                t = [colors[y]]
                for tb in tables:
                    t.append(c(tb[x][y]))
                    t.append(c(tb[y][x]))
                row.append(tuple(t))
            row.sort()
            sigs.append((colors[x], tuple(row)))
        rank = {sg: i for i, sg in enumerate(sorted(set(sigs)))}
        new = [rank[sg] for sg in sigs]
        if len(rank) == ncells:
            return new
        colors, ncells = new, len(rank)


def _key(s: FiniteStructure, order) -> tuple:
    n = s.size
    pos = [0] * n
    for i, o in enumerate(order):
        pos[o] = i
    parts = [n, pos[s.one]]
    for tb in (s.join, s.caret, s.delta if s.caret is None else None):
        if tb is None:
            parts.append(None)
            continue
        parts.append(tuple(ABSENT if tb[a][b] == ABSENT else pos[tb[a][b]]
                           for a in order for b in order))
    return tuple(parts)


def _orbits(autos, n):
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for g in autos:
        for a in range(n):
            ra, rb = find(a), find(g[a])
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    return find


def canonical_form(s: FiniteStructure) -> CanonicalForm:
    n = s.size
    init = [0 if x == s.one else 1 for x in range(n)]
    best: list = [None, None]  # key, order
    autos: list[tuple[int, ...]] = []

    def leaf(colors):
        order = tuple(sorted(range(n), key=colors.__getitem__))
        key = _key(s, order)
        if best[0] is None or key < best[0]:
            best[0], best[1] = key, order
        elif key == best[0]:
            g = [0] * n
            for a, b in zip(best[1], order):
                g[a] = b
            autos.append(tuple(g))

    def search(colors, prefix):
        counts: dict[int, list[int]] = {}
        for x, c in enumerate(colors):
            counts.setdefault(c, []).append(x)
        cells = [m for m in counts.values() if len(m) > 1]
        if not cells:
            leaf(colors)
            return
        target = min(cells, key=lambda m: (len(m), colors[m[0]]))
        tried: list[int] = []
        for v in target:
            stab = [g for g in autos if all(g[p] == p for p in prefix)]
            if stab:
                find = _orbits(stab, n)
                if any(find(v) == find(w) for w in tried):
                    continue
            tried.append(v)
            ind = sorted(set((colors[x], x != v) for x in range(n)))
            rank = {k: i for i, k in enumerate(ind)}
            child = [rank[(colors[x], x != v)] for x in range(n)]
            search(_refine(s, child), prefix + (v,))

    search(_refine(s, init), ())
    return CanonicalForm(best[1], best[0], tuple(autos))


def is_isomorphic(s: FiniteStructure, t: FiniteStructure) -> bool:
    if s.size != t.size:
        return False
    return canonical_form(s).key == canonical_form(t).key


def find_isomorphism(s: FiniteStructure, t: FiniteStructure) -> list[int] | None:
    """A map ``phi`` with ``phi[x]`` in ``t`` for each ``x`` in ``s``, or ``None``."""
    if s.size != t.size:
        return None
    cs, ct = canonical_form(s), canonical_form(t)
    if cs.key != ct.key:
        return None
    phi = [0] * s.size
    for a, b in zip(cs.order, ct.order):
        phi[a] = b
    return phi
