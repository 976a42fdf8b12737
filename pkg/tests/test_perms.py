from hypothesis import given, strategies as st

from frl.perms import Permutation, closure, cyclic_group, symmetric_group

perms = st.permutations(range(1, 6)).map(Permutation)


@given(perms, perms, perms)
def test_group_laws(p, q, r):
    e = Permutation.identity(5)
    assert (p * q) * r == p * (q * r)
    assert p * p.inverse() == e
    assert (p * q)(1) == p(q(1))


@given(perms)
def test_order(p):
    assert (p ** p.order()).is_identity()
    assert all(not (p ** k).is_identity() for k in range(1, p.order()))


def test_small_groups():
    assert len(symmetric_group(4)) == 24
    c4 = cyclic_group(4)
    assert c4[0].is_identity() and str(c4[1]) == "(1 2 3 4)"
    assert closure([Permutation.from_cycles(4, (1, 2)), Permutation.from_cycles(4, (1, 2, 3, 4))]) == sorted(symmetric_group(4))
    assert str(Permutation.identity(3)) == "()"
