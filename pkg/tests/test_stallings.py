import random

import pytest
from hypothesis import given, settings, strategies as st

from frl.stallings import basis, build_subgroup, intersect, membership, subgroup_rank
from frl.words import IDENTITY, ball, parse_word, random_word
from gen import product_closure

W = parse_word
BALL5 = ball(5)


def S(*ws):
    return build_subgroup([W(w) for w in ws])


def random_gens(rng):
    return [random_word(rng, 3, min_len=1) for _ in range(rng.randint(1, 3))]


def test_build_examples():
    assert all(membership(S("a", "b"), w) for w in ball(4))
    assert subgroup_rank(S("a", "b", "a*b")) == 2
    trivial = S("1")
    assert [w for w in ball(3) if membership(trivial, w)] == [IDENTITY]


def test_membership_examples():
    A = S("a*b*a^-1")
    assert membership(A, W("a*b*b*a^-1"))
    assert not membership(A, W("b"))
    assert membership(A, IDENTITY)


def test_intersection_examples():
    C = intersect(S("a*a", "b"), S("a"))
    assert basis(C) == [W("a*a")]
    H = S("a*b", "b*b*a")
    assert intersect(S("a", "b"), H) == H
    assert basis(intersect(S("a"), S("b"))) == []


def test_basis_examples():
    assert len(basis(S("a", "b"))) == 2
    assert len(basis(S("a*a", "b"))) == 2
    assert basis(S("1")) == []


@settings(max_examples=25)
@given(st.integers(0, 2 ** 32))
def test_membership_matches_product_oracle(seed):
    gens = random_gens(random.Random(seed))
    A = build_subgroup(gens)
    reached = product_closure(gens)
    assert all(membership(A, w) == (w in reached) for w in BALL5)


@settings(max_examples=25)
@given(st.integers(0, 2 ** 32))
def test_automaton_invariants(seed):
    rng = random.Random(seed)
    gens = random_gens(rng)
    A = build_subgroup(gens)
    assert build_subgroup(gens, reverse=True) == A
    degree = {}
    for s, _, t in A.edges:
        degree[s] = degree.get(s, 0) + 1
        degree[t] = degree.get(t, 0) + 1
    assert all(d >= 2 for v, d in degree.items() if v != A.base)
    B = basis(A)
    assert len(B) == A.rank == len(A.edges) - A.num_vertices + 1
    assert all(membership(A, b) for b in B)
    assert build_subgroup(B) == A


@settings(max_examples=25)
@given(st.integers(0, 2 ** 32))
def test_intersection_is_pointwise_and(seed):
    rng = random.Random(seed)
    A, B = build_subgroup(random_gens(rng)), build_subgroup(random_gens(rng))
    C = intersect(A, B)
    assert all(membership(C, w) == (membership(A, w) and membership(B, w)) for w in BALL5)


def test_folding_rejects_unfolded_graphs():
    from frl.stallings import SubgroupAutomaton
    with pytest.raises(ValueError):
        SubgroupAutomaton(2, ((0, 1, 1), (0, 1, 0)))
