import random

import pytest
from hypothesis import given, settings, strategies as st

from frl.groupring import GroupRingElement, parse_ring_literal
from frl.perms import Permutation
from frl.quotients import (
    FiniteHom, apply_hom, choose_prime, combine, find_separating_hom, induced_ring_hom,
    mod_p_reduce, separate_ring_element, separates, verify_certificate,
)
from frl.words import IDENTITY, parse_word, random_word
from gen import random_element

W, R = parse_word, parse_ring_literal
P = Permutation
SWAP = P([2, 1])


def hom(*images):
    return FiniteHom(len(images[0]), tuple(P(i) for i in images))


def test_apply_hom_examples():
    phi = hom([2, 1], [1, 2])
    assert apply_hom(phi, IDENTITY).is_identity()
    assert apply_hom(phi, W("a*b*a")).is_identity()
    assert apply_hom(hom([2, 3, 1], [1, 2, 3]), W("a^3")).is_identity()


@given(st.integers(0, 2 ** 32))
def test_apply_hom_is_homomorphism(seed):
    rng = random.Random(seed)
    phi = FiniteHom(5, tuple(P(rng.sample(range(1, 6), 5)) for _ in range(2)))
    u, v = random_word(rng, 6), random_word(rng, 6)
    assert apply_hom(phi, u * v) == apply_hom(phi, u) * apply_hom(phi, v)
    # letter-by-letter reference
    ref = Permutation.identity(5)
    for x in u.letters:
        g = phi.images[abs(x) - 1]
        ref = ref * (g if x > 0 else g.inverse())
    assert apply_hom(phi, u) == ref


def test_find_separating_hom_examples():
    phi = find_separating_hom([W("a*b^-1")])
    assert phi == hom([2, 1], [1, 2])
    ws = [W("a"), W("b"), W("a*b")]
    phi = find_separating_hom(ws)
    assert phi.degree <= 3 and separates(phi, ws)
    assert find_separating_hom([]).degree == 1
    with pytest.raises(ValueError):
        find_separating_hom([IDENTITY])


def test_combine():
    phi = hom([2, 1], [1, 2])
    psi = hom([1, 2, 3], [2, 3, 1])
    both = combine([phi, psi])
    assert both.degree == 5 and separates(both, [W("a"), W("b")])
    assert separates(combine([phi]), [W("a")])
    assert combine([], rank=2).degree == 1


@settings(max_examples=30)
@given(st.integers(0, 2 ** 32))
def test_combine_separates_union(seed):
    rng = random.Random(seed)
    groups = [[random_word(rng, 4, min_len=1) for _ in range(2)] for _ in range(2)]
    homs = [find_separating_hom(g, max_degree=6, seed=seed) for g in groups]
    if None in homs:
        return
    assert separates(combine(homs), groups[0] + groups[1])


def test_induced_ring_hom_examples():
    assert induced_ring_hom(hom([2, 1], [1, 2]), GroupRingElement.zero()).is_zero()
    assert induced_ring_hom(hom([2, 1], [2, 1]), R("[a - 1*b]")).is_zero()
    img = induced_ring_hom(hom([2, 1], [1, 2]), R("[a - 1*b]"))
    assert img == GroupRingElement([(SWAP, 1), (P([1, 2]), -1)])


@given(st.integers(0, 2 ** 32))
def test_induced_ring_hom_is_ring_hom(seed):
    rng = random.Random(seed)
    phi = FiniteHom(4, tuple(P(rng.sample(range(1, 5), 4)) for _ in range(2)))
    x, y = random_element(rng), random_element(rng)
    psi = lambda z: induced_ring_hom(phi, z)
    assert psi(x + y) == psi(x) + psi(y)
    assert psi(x * y) == psi(x) * psi(y)


def test_choose_prime_examples():
    assert choose_prime([1, -1]) == 2
    assert choose_prime([2, 3]) == 5
    assert choose_prime([6]) == 5


def test_mod_p_reduce_examples():
    e = P([1, 2])
    assert mod_p_reduce(GroupRingElement.of(e, 3), 3).is_zero()
    x = GroupRingElement([(SWAP, 1), (e, -1)])
    assert mod_p_reduce(x, 2) == GroupRingElement([(SWAP, 1), (e, 1)], modulus=2)
    assert mod_p_reduce(GroupRingElement.zero(), 7).is_zero()
    with pytest.raises(ValueError):
        mod_p_reduce(x, 4)


def test_pipeline_examples():
    cert = separate_ring_element(R("[a - 1*b]"))
    assert cert.hom == hom([2, 1], [1, 2]) and cert.prime == 2
    assert cert.to_json() == {"degree": 2, "images": {"a": [2, 1], "b": [1, 2]}, "prime": 2,
                              "image_terms": [[1, [1, 2]], [1, [2, 1]]]}
    cert = separate_ring_element(R("[3]"))
    assert cert.hom.degree == 1 and cert.prime == 2 and cert.to_json()["image_terms"] == [[1, [1]]]
    with pytest.raises(ValueError):
        separate_ring_element(GroupRingElement.zero())


def test_verifier_catches_tampering():
    cert = separate_ring_element(R("[2*a - 3*b + a*b]"))
    assert verify_certificate(cert) == []
    bad = type(cert)(cert.hom, 3, cert.image, cert.element)
    assert "prime divides a coefficient" in verify_certificate(bad)
    collapsed = type(cert)(hom([2, 1], [2, 1]), cert.prime, cert.image, cert.element)
    assert verify_certificate(collapsed)
