from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mralg.boolean import Universe, complement, join, leq, meet, principal_filter, supersets


def test_universe_full_bits():
    for n in range(0, 17):
        u = Universe(n)
        assert bin(u.full).count("1") == n
        assert u.full >> n == 0


@pytest.mark.parametrize("n", [-1, 17])
def test_universe_size_bounds(n):
    with pytest.raises(ValueError):
        Universe(n)


def test_stray_bits_rejected():
    with pytest.raises(ValueError):
        Universe(2).check(0b100)
    with pytest.raises(ValueError):
        Universe(2).from_names([3])


def test_names_roundtrip():
    u = Universe(4)
    assert u.names(u.from_names([1, 3])) == [1, 3]
    assert u.from_names([]) == 0


def test_complement_examples():
    u = Universe(2)
    assert complement(u.from_names([1]), u) == u.from_names([2])
    assert complement(0, u) == u.full
    assert complement(u.full, u) == 0


def test_lattice_op_examples():
    u = Universe(2)
    one, two = u.from_names([1]), u.from_names([2])
    assert meet(one, two) == 0
    assert join(one, two) == u.full
    assert leq(one, u.full)
    assert not leq(u.full, one)


@pytest.mark.parametrize("n", range(5))
def test_de_morgan_and_double_complement(n):
    u = Universe(n)
    for x, y in product(u.elements(), u.elements()):
        assert u.complement(u.complement(x)) == x
        assert u.complement(meet(x, y)) == join(u.complement(x), u.complement(y))
        assert u.complement(join(x, y)) == meet(u.complement(x), u.complement(y))


def test_principal_filter_examples():
    u = Universe(2)
    f = principal_filter(u.from_names([1]), u)
    assert sorted(map(u.names, f.members)) == [[1], [1, 2]]
    assert principal_filter(0, u).members == tuple(u.elements())
    assert principal_filter(u.full, u).members == (u.full,)


@pytest.mark.parametrize("n", range(5))
def test_principal_filter_matches_superset_enumeration(n):
    u = Universe(n)
    for f in u.elements():
        brute = [b for b in u.elements() if f & b == f]
        pf = principal_filter(f, u)
        assert list(pf.members) == brute
        assert f in pf


@pytest.mark.parametrize("n", range(5))
def test_principal_filter_closed(n):
    u = Universe(n)
    for f in u.elements():
        pf = principal_filter(f, u)
        for a, b in product(pf.members, pf.members):
            assert meet(a, b) in pf
        for a, b in product(pf.members, u.elements()):
            if leq(a, b):
                assert b in pf


@given(st.integers(0, 16).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(0, (1 << n) - 1), st.integers(0, (1 << n) - 1))))
def test_de_morgan_wide(args):
    n, x, y = args
    u = Universe(n)
    assert u.complement(x & y) == u.complement(x) | u.complement(y)
    assert leq(x & y, x) and leq(x, x | y)


def test_supersets_increasing():
    u = Universe(3)
    out = list(supersets(u.from_names([2]), u))
    assert out == sorted(out) and len(out) == 4
