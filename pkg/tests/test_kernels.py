import random

import pytest
from hypothesis import given, strategies as st

from frl import _pykernels, kernels
from gen import fraction_rank, naive_reduce

try:
    from frl import _ckernels
except ImportError:
    _ckernels = None

needs_c = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")

letters = st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=12)
matrices = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=0, max_size=6)
    .map(lambda rows: (rows, n)))


def test_backend_reported():
    assert kernels.BACKEND in ("cython", "python")


@given(letters)
def test_reduce_matches_stack_oracle(ls):
    assert tuple(_pykernels.reduce_letters(ls)) == naive_reduce(ls)


@needs_c
@given(letters, letters)
def test_backends_agree_on_words(u, v):
    u, v = naive_reduce(u), naive_reduce(v)
    assert tuple(_ckernels.reduce_letters(list(u) + list(v))) == tuple(_pykernels.reduce_letters(list(u) + list(v)))
    assert tuple(_ckernels.mul_letters(u, v)) == tuple(_pykernels.mul_letters(u, v))


@needs_c
@given(st.lists(st.tuples(letters, st.integers(-3, 3)), max_size=6),
       st.lists(st.tuples(letters, st.integers(-3, 3)), max_size=6))
def test_backends_agree_on_convolution(xs, ys):
    xs = [(naive_reduce(w), c) for w, c in xs]
    ys = [(naive_reduce(w), c) for w, c in ys]
    assert dict(_ckernels.convolve_words(xs, ys)) == dict(_pykernels.convolve_words(xs, ys))


@given(st.lists(st.tuples(letters, st.integers(-3, 3)), max_size=5),
       st.lists(st.tuples(letters, st.integers(-3, 3)), max_size=5))
def test_convolution_matches_expansion(xs, ys):
    xs = [(naive_reduce(w), c) for w, c in xs]
    ys = [(naive_reduce(w), c) for w, c in ys]
    want = {}
    for u, c in xs:
        for v, d in ys:
            k = naive_reduce(u + v)
            want[k] = want.get(k, 0) + c * d
    want = {k: c for k, c in want.items() if c}
    got = {tuple(k): c for k, c in kernels.convolve_words(xs, ys).items()}
    assert got == want


@needs_c
@given(st.permutations(range(1, 7)), st.permutations(range(1, 7)), letters)
def test_backends_agree_on_permutations(p, q, word):
    imgs = [tuple(p), tuple(q), tuple(range(1, 7))]
    invs = [tuple(_pykernels.perm_inv(g)) for g in imgs]
    assert tuple(_ckernels.perm_mul(imgs[0], imgs[1])) == tuple(_pykernels.perm_mul(imgs[0], imgs[1]))
    assert tuple(_ckernels.perm_inv(imgs[0])) == invs[0]
    assert (tuple(_ckernels.perm_word(imgs, invs, word, 6))
            == tuple(_pykernels.perm_word(imgs, invs, word, 6)))


@pytest.mark.parametrize("backend", [_pykernels, _ckernels], ids=["python", "cython"])
@given(matrices)
def test_kernel_against_fraction_oracle(backend, m):
    if backend is None:
        pytest.skip("compiled kernels not built")
    rows, n = m
    reduced, pivots, d = backend.gauss_jordan(rows, n)
    rank = fraction_rank(rows, n)
    assert len(pivots) == rank
    basis = _pykernels.kernel_from_reduced(reduced, pivots, d, n)
    assert len(basis) == n - rank
    for v in basis:
        assert any(v)
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)
        first = next(x for x in v if x)
        assert first > 0
    # the basis vectors are independent
    assert fraction_rank(basis, n) == len(basis)


def test_overflow_falls_back_to_python_ints():
    big = 2 ** 40
    rows = [[big, big + 1, 3], [big - 1, big, 5], [7, 11, big]]
    assert kernels.integer_kernel(rows, 3) == []
    rows = [[big, 2 * big], [3, 6]]
    assert [tuple(v) for v in kernels.integer_kernel(rows, 2)] == [(2, -1)]


def test_matrix_rank():
    assert kernels.matrix_rank([[1, 2], [2, 4]], 2) == 1
    assert kernels.matrix_rank([], 3) == 0
    rng = random.Random(5)
    for _ in range(20):
        rows = [[rng.randint(-3, 3) for _ in range(5)] for _ in range(4)]
        assert kernels.matrix_rank(rows, 5) == fraction_rank(rows, 5)


def test_pure_python_backend_selected_by_environment():
    import os
    import subprocess
    import sys
    env = dict(os.environ, FRL_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import frl.kernels as k; print(k.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
