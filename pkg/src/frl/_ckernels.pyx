# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the hot loops; see ``_pykernels`` for the contract."""

from libc.stdlib cimport malloc, free


cdef extern from *:
    bint __builtin_mul_overflow(long long a, long long b, long long *res) nogil
    bint __builtin_sub_overflow(long long a, long long b, long long *res) nogil


def reduce_letters(letters):
    cdef list out = []
    cdef Py_ssize_t n = 0
    cdef long x
    for x in letters:
        if n and <long>out[n - 1] == -x:
            out.pop()
            n -= 1
        else:
            out.append(x)
            n += 1
    return tuple(out)


cpdef tuple mul_letters(tuple u, tuple v):
    cdef Py_ssize_t lu = len(u), lv = len(v)
    cdef Py_ssize_t n = lu if lu < lv else lv
    cdef Py_ssize_t i = 0
    while i < n and <long>u[lu - 1 - i] == -<long>v[i]:
        i += 1
    if i == 0:
        return u + v
    return u[: lu - i] + v[i:]


def convolve_words(xs, ys):
    cdef dict out = {}
    cdef tuple u, v, w
    cdef object c, d
    cdef list ylist = list(ys)
    for u, c in xs:
        for v, d in ylist:
            w = mul_letters(u, v)
            out[w] = out.get(w, 0) + c * d
    return {w: c for w, c in out.items() if c}


def perm_mul(tuple p, tuple q):
    cdef Py_ssize_t n = len(q), i
    cdef list out = [0] * n
    for i in range(n):
        out[i] = p[<long>q[i] - 1]
    return tuple(out)


def perm_inv(tuple p):
    cdef Py_ssize_t n = len(p), i
    cdef list out = [0] * n
    for i in range(n):
        out[<long>p[i] - 1] = i + 1
    return tuple(out)


def perm_word(images, inverses, letters, int degree):
    cdef int *acc = <int *>malloc(degree * sizeof(int))
    cdef int *tmp = <int *>malloc(degree * sizeof(int))
    cdef int *swap
    cdef int i
    cdef long x
    cdef tuple g
    if acc == NULL or tmp == NULL:
        free(acc)
        free(tmp)
        raise MemoryError()
    try:
        for i in range(degree):
            acc[i] = i + 1
        for x in letters:
            g = images[x - 1] if x > 0 else inverses[-x - 1]
            for i in range(degree):
                tmp[i] = acc[<int>g[i] - 1]
            swap = acc
            acc = tmp
            tmp = swap
        return tuple([acc[i] for i in range(degree)])
    finally:
        free(acc)
        free(tmp)


def gauss_jordan(rows, int ncols):
    """Same algorithm as the Python version on 64-bit integers.

    Raises OverflowError when an intermediate value leaves int64; the
    dispatcher then reruns the Python version.
    """
    cdef list kept = [row_ for row_ in rows if any(row_)]
    cdef Py_ssize_t nrows = len(kept)
    cdef long long *m = <long long *>malloc((nrows * ncols + 1) * sizeof(long long))
    cdef Py_ssize_t i, j, r = 0, p, c
    cdef long long prev = 1, piv, f, a, b, t1, t2
    cdef list pivots = []
    if m == NULL:
        raise MemoryError()
    try:
        for i in range(nrows):
            row = kept[i]
            for j in range(ncols):
                m[i * ncols + j] = row[j]
        for c in range(ncols):
            if r == nrows:
                break
            p = r
            while p < nrows and m[p * ncols + c] == 0:
                p += 1
            if p == nrows:
                continue
            if p != r:
                for j in range(ncols):
                    a = m[r * ncols + j]
                    m[r * ncols + j] = m[p * ncols + j]
                    m[p * ncols + j] = a
            piv = m[r * ncols + c]
            for i in range(nrows):
                if i == r:
                    continue
                f = m[i * ncols + c]
                if f == 0:
                    if piv != prev:
                        for j in range(ncols):
                            if __builtin_mul_overflow(m[i * ncols + j], piv, &t1):
                                raise OverflowError("int64 overflow in elimination")
                            m[i * ncols + j] = t1 // prev
                else:
                    for j in range(ncols):
                        a = m[i * ncols + j]
                        b = m[r * ncols + j]
                        if __builtin_mul_overflow(piv, a, &t1):
                            raise OverflowError("int64 overflow in elimination")
                        if __builtin_mul_overflow(f, b, &t2):
                            raise OverflowError("int64 overflow in elimination")
                        if __builtin_sub_overflow(t1, t2, &t1):
                            raise OverflowError("int64 overflow in elimination")
                        m[i * ncols + j] = t1 // prev
            prev = piv
            pivots.append(c)
            r += 1
        reduced = [[m[i * ncols + j] for j in range(ncols)] for i in range(r)]
        return reduced, pivots, prev
    finally:
        free(m)
