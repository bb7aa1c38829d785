import itertools
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from andre.andre2d import xi_generators
from andre.field import make_field
from andre.perm import (
    DegreeMismatch,
    Perm,
    SizeExceeded,
    compose,
    cycle_structure,
    generate_group,
    inverse,
    orbits,
    orbits_of_indices,
)

perms = st.integers(1, 9).flatmap(lambda m: st.permutations(range(m))).map(Perm)


def test_cycle_structure_examples():
    assert cycle_structure(Perm.identity(6)) == {1: 6}
    f7 = make_field(7)
    assert cycle_structure(xi_generators(f7)[0]) == {6: 1}
    # inversion on GF(5)*, by value: 1->1, 2->3, 3->2, 4->4
    f5 = make_field(5)
    by_value = {v: pow(v, -1, 5) for v in range(1, 5)}
    inv = Perm([f5.log(by_value[f5.value(k)]) for k in range(4)])
    assert inv == xi_generators(f5)[1]
    assert cycle_structure(inv) == {1: 2, 2: 1}


def test_compose_convention_and_mismatch():
    a = Perm([1, 2, 0])
    b = Perm([0, 2, 1])
    assert compose(a, b).images == (2, 1, 0)  # a first, then b
    with pytest.raises(DegreeMismatch):
        compose(a, Perm([1, 0]))
    with pytest.raises(ValueError):
        Perm([0, 0, 1])


@given(perms)
def test_compose_with_inverse_is_identity(a):
    assert cycle_structure(compose(a, inverse(a))) == {1: a.degree}
    assert cycle_structure(a).degree == a.degree


def test_generate_group_examples():
    assert generate_group([Perm.identity(4)]).order == 1
    assert generate_group([Perm([1, 2, 3, 4, 0])]).order == 5


def test_xi_group_q5_matches_brute_force():
    f5 = make_field(5)
    group = generate_group(xi_generators(f5))
    # every map f -> a * f**(+-1) written out on values
    maps = {tuple(f5.log(a * pow(f5.value(k), s, 5) % 5) for k in range(4))
            for a in range(1, 5) for s in (1, -1)}
    assert {g.images for g in group} == maps
    assert group.order == 8


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27])
def test_group_closure(q):
    group = generate_group(xi_generators(make_field(q)))
    assert group.order <= 5000
    elements = set(group.elements)
    assert len(elements) == group.order
    for a in group:
        assert inverse(a) in elements
        for b in group:
            assert compose(a, b) in elements


def test_size_exceeded():
    gens = [Perm([1, 0, 2, 3, 4]), Perm([1, 2, 3, 4, 0])]
    assert generate_group(gens).order == 120
    with pytest.raises(SizeExceeded):
        generate_group(gens, max_size=50)


def test_orbits_examples():
    assert orbits([lambda s: s], ["x"]) == [["x"]]
    f5 = make_field(5)
    assert [len(o) for o in orbits([lambda k: f5.mul(k, 1)], list(range(4)))] == [4]


def test_orbits_two_subsets_q5():
    f5 = make_field(5)
    gens = xi_generators(f5)
    states = list(itertools.combinations(range(4), 2))
    acts = [lambda s, g=g: tuple(sorted(g(k) for k in s)) for g in gens]
    result = orbits(acts, states)
    by_value = [sorted({frozenset(f5.value(k) for k in s) for s in orb}, key=sorted) for orb in result]
    assert sorted(len(o) for o in result) == [2, 4]
    assert frozenset({1, 2}) in by_value[[len(o) for o in result].index(4)]
    assert frozenset({1, 4}) in by_value[[len(o) for o in result].index(2)]


small_perms = st.integers(1, 6).flatmap(lambda m: st.permutations(range(m))).map(Perm)


@settings(max_examples=50, deadline=None)
@given(st.lists(small_perms, min_size=1, max_size=3).filter(lambda gs: len({g.degree for g in gs}) == 1))
def test_orbit_sizes_divide_group_order(gens):
    group = generate_group(gens)
    m = gens[0].degree
    orbs = orbits_of_indices([np.array(g.images) for g in gens], m)
    assert sum(len(o) for o in orbs) == m
    for o in orbs:
        assert group.order % len(o) == 0
    # orbits are sorted by representative, each listed in increasing order
    assert [int(o[0]) for o in orbs] == sorted(int(o[0]) for o in orbs)
    # brute-force orbit of each point
    for o in orbs:
        assert {g(int(o[0])) for g in group} == {int(x) for x in o}


def test_cycle_structure_counts():
    group = generate_group(xi_generators(make_field(7)))
    freq = group.cycle_structure_counts()
    assert sum(freq.values()) == group.order
    assert freq == Counter(cycle_structure(g) for g in group)
