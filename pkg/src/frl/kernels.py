"""Backend selection for the hot loops.

The compiled ``_ckernels`` extension is used when it imports; otherwise, or
when ``FRL_PURE_PYTHON`` is set to a non-empty value, the pure-Python
``_pykernels`` module is used.  Both produce identical results.
"""

import os

from . import _pykernels

if os.environ.get("FRL_PURE_PYTHON"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"

reduce_letters = _impl.reduce_letters
mul_letters = _impl.mul_letters
convolve_words = _impl.convolve_words
perm_mul = _impl.perm_mul
perm_inv = _impl.perm_inv
perm_word = _impl.perm_word


def gauss_jordan(rows, ncols):
    if _impl is _pykernels:
        return _pykernels.gauss_jordan(rows, ncols)
    try:
        return _impl.gauss_jordan(rows, ncols)
    except OverflowError:
        return _pykernels.gauss_jordan(rows, ncols)


def integer_kernel(rows, ncols):
    """Primitive integer basis of ``{v : rows @ v = 0}``, one vector per free column."""
    reduced, pivots, d = gauss_jordan(rows, ncols)
    return _pykernels.kernel_from_reduced(reduced, pivots, d, ncols)


def matrix_rank(rows, ncols):
    return len(gauss_jordan(rows, ncols)[1])
