from itertools import product

import pytest

from conftest import diamond, shuffled, singleton
from mralg.boolean import Universe
from mralg.interval import arrow_i, caret_i, delta_i, enumerate_i, join_i
from mralg.signed import SignedSet, enumerate_s
from mralg.table import (ABSENT, FiniteStructure, StructureError, caret_from_delta, derive_order,
                         derived_arrow, glb, interval_structure, is_mr, relabel, signed_structure)


def index_of(s, label):
    return s.labels.index(label)


def test_singleton_order():
    assert derive_order(singleton()) == ((True,),)


def test_signed_one_order():
    s = signed_structure(1)
    leq = derive_order(s)
    assert sum(map(sum, leq)) == 3 + 2  # reflexive pairs plus two vertices below the top
    vertices = [x for x in s.elements if x != s.one]
    for v in vertices:
        assert leq[v][s.one] and not leq[s.one][v]
    assert not leq[vertices[0]][vertices[1]]


def test_non_idempotent_join_reported():
    with pytest.raises(StructureError) as e:
        derive_order(FiniteStructure(2, 1, [[1, 1], [1, 1]]))
    assert e.value.witness == (0,)


def test_non_associative_join_reported():
    # 0 v 1 = 2, 2 v 0 = 3: commutative and idempotent, not associative
    j = [[0, 2, 3, 3], [2, 1, 2, 3], [3, 2, 2, 3], [3, 3, 3, 3]]
    with pytest.raises(StructureError, match="associative"):
        derive_order(FiniteStructure(4, 3, j))


def test_bad_tables_rejected():
    with pytest.raises(StructureError):
        FiniteStructure(2, 0, [[0, 1]])
    with pytest.raises(StructureError):
        FiniteStructure(1, 0, [[3]])
    with pytest.raises(StructureError):
        FiniteStructure(1, 5, [[0]])


def test_glb_examples():
    s = signed_structure(1)
    vs = [x for x in s.elements if x != s.one]
    assert glb(s, vs[0], s.one) == vs[0]
    assert glb(s, vs[0], vs[1]) is None
    s2 = interval_structure(2)
    for a, b in product(s2.elements, s2.elements):
        if s2.leq[a][b]:
            assert glb(s2, a, b) == a


def test_derived_arrow_examples():
    s = signed_structure(1)
    u = Universe(1)
    v = index_of(s, str(SignedSet.of([1], [], u)))
    w = index_of(s, str(SignedSet.of([], [1], u)))
    assert derived_arrow(s, v, w) == w
    for x in s.elements:
        assert derived_arrow(s, x, x) == s.one
        assert derived_arrow(s, s.one, x) == x


def test_caret_from_delta_examples():
    s = signed_structure(1, with_caret=False)
    vs = [x for x in s.elements if x != s.one]
    for a in s.elements:
        assert caret_from_delta(s, a, s.one) == a
        assert caret_from_delta(s, a, a) == a
    assert caret_from_delta(s, vs[0], vs[1]) == vs[0]


def test_is_mr_examples():
    for n in range(4):
        assert is_mr(signed_structure(n, with_caret=False)) == (True, None)
    ok, witness = is_mr(diamond())
    assert not ok and witness == (0, 1)
    assert is_mr(singleton()) == (True, None)


@pytest.mark.parametrize("n", range(4))
def test_tables_agree_with_direct_formulas(n):
    u = Universe(n)
    elems = enumerate_i(u)
    s = interval_structure(n)
    one = elems[s.one]
    for x, y in product(s.elements, s.elements):
        ex, ey = elems[x], elems[y]
        assert elems[s.join[x][y]] == join_i(ex, ey)
        assert elems[s.caret[x][y]] == caret_i(ex, ey)
        assert elems[caret_from_delta(s, x, y)] == caret_i(ex, ey)
        assert elems[derived_arrow(s, x, y)] == arrow_i(ex, ey)
        # the delta-only corollary form of ->
        assert elems[s.without_caret().arrow(x, y)] == join_i(
            ey, delta_i(one, delta_i(join_i(ex, ey), ey)))
        if ey <= ex:
            assert elems[s.delta[x][y]] == delta_i(ex, ey)
            assert s.delta[x][y] == s.caret[x][y]
        else:
            assert s.delta[x][y] == ABSENT


def test_signed_order_matches_objects():
    s = signed_structure(2)
    elems = enumerate_s(Universe(2))
    for x, y in product(s.elements, s.elements):
        assert s.leq[x][y] == (elems[x] <= elems[y])


def test_delta_query_on_incomparable_pair_is_error():
    s = signed_structure(1)
    vs = [x for x in s.elements if x != s.one]
    with pytest.raises(ValueError):
        s.delta_at(vs[0], vs[1])


def test_relabel_is_isomorphism():
    s = interval_structure(2)
    t = shuffled(s, 7)
    assert t != s
    order = [s.labels.index(lab) for lab in t.labels]
    assert relabel(s, order) == t
    assert sorted(t.labels) == sorted(s.labels)


def test_delta_from_caret():
    s = signed_structure(2)
    assert s.without_caret().delta == s.with_delta_from_caret().delta
