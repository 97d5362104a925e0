from itertools import product

import pytest

from conftest import shuffled
from mralg.boolean import Universe
from mralg.collapse import (CollapseError, build_quotient, check_implication_lattice,
                            congruence_reports, implies_big, local_embedding_check, preceq, simeq,
                            star, upset_identities)
from mralg.interval import Interval, enumerate_i, implies_big_i, length, star_i
from mralg.table import interval_structure, signed_structure


def failing(reports):
    return [r.axiom for r in reports if not r.passed]


def test_signed_one_has_two_classes():
    q = build_quotient(signed_structure(1))
    assert q.size == 2
    # the two vertices collapse together, the top stays alone
    assert sorted(len(c.members) for c in q.classes) == [1, 2]


def test_square_has_four_classes():
    q = build_quotient(interval_structure(2))
    assert q.size == 4
    assert sorted(len(c.members) for c in q.classes) == [1, 2, 2, 4]


def test_named_pair_collapses():
    u = Universe(2)
    s = interval_structure(2)
    ix = {e: i for i, e in enumerate(enumerate_i(u))}
    a, b = ix[Interval.of([1], [1, 2], u)], ix[Interval.of([], [2], u)]
    assert simeq(s, a, b) and simeq(s, b, a)
    assert not simeq(s, a, ix[Interval.of([], [1], u)])


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_classes_are_length_fibres(n):
    s = interval_structure(n)
    elems = enumerate_i(Universe(n))
    for a, b in product(s.elements, s.elements):
        assert simeq(s, a, b) == (length(elems[a]) == length(elems[b]))
        assert preceq(s, a, b) == (length(elems[b]) & ~length(elems[a]) == 0)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_operations_match_interval_formulas(n):
    s = interval_structure(n)
    elems = enumerate_i(Universe(n))
    for a, b in product(s.elements, s.elements):
        assert elems[star(s, a, b)] == star_i(elems[a], elems[b])
        assert elems[implies_big(s, a, b)] == implies_big_i(elems[a], elems[b])


@pytest.mark.parametrize("n", [1, 2, 3])
def test_quotient_is_implication_lattice(n):
    s = interval_structure(n)
    q = build_quotient(s)
    assert q.size == 2 ** n
    assert failing(check_implication_lattice(q)) == []
    for a in s.elements:
        assert local_embedding_check(q, a).passed
        assert upset_identities(s, a).passed


@pytest.mark.parametrize("n", [1, 2, 3])
def test_congruence_facts(n):
    assert failing(congruence_reports(signed_structure(n))) == []


def test_quotient_independent_of_labels():
    s = interval_structure(2)
    for seed in range(3):
        t = shuffled(s, seed)
        q = build_quotient(t)
        assert q.size == 4 and failing(check_implication_lattice(q)) == []


def test_non_mr_input_refused(diamond_structure):
    with pytest.raises(CollapseError) as e:
        build_quotient(diamond_structure)
    assert e.value.witness == (0, 1)


def test_json_shape():
    doc = build_quotient(signed_structure(1)).to_json()
    assert set(doc) == {"version", "one", "classes", "meet", "join", "arrow"}
    assert sorted(sum(doc["classes"], [])) == [0, 1, 2]
