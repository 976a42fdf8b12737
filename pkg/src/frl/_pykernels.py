"""Pure-Python versions of the hot loops.

Words are tuples of nonzero ints: ``+i`` is the i-th generator and ``-i``
its inverse.  Permutations are 1-based one-line tuples.  The compiled
module ``_ckernels`` exposes the same functions with the same results.
"""

from math import gcd


def reduce_letters(letters):
    out = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def mul_letters(u, v):
    """Product of two reduced letter tuples (cancels across the seam only)."""
    lu = len(u)
    n = min(lu, len(v))
    i = 0
    while i < n and u[lu - 1 - i] == -v[i]:
        i += 1
    if i == 0:
        return u + v
    return u[: lu - i] + v[i:]


def convolve_words(xs, ys):
    """Convolution of two sparse word-indexed sums.

    ``xs`` and ``ys`` are sequences of ``(letters, coeff)``.  Returns a dict
    ``letters -> coeff`` with zero coefficients removed.
    """
    out = {}
    get = out.get
    for u, c in xs:
        for v, d in ys:
            w = mul_letters(u, v)
            out[w] = get(w, 0) + c * d
    return {w: c for w, c in out.items() if c}


def perm_mul(p, q):
    # (p*q)(i) = p(q(i))
    return tuple([p[j - 1] for j in q])


def perm_inv(p):
    out = [0] * len(p)
    for i, j in enumerate(p, 1):
        out[j - 1] = i
    return tuple(out)


def perm_word(images, inverses, letters, degree):
    """Image of a word under generator images (composition, left to right)."""
    acc = tuple(range(1, degree + 1))
    for x in letters:
        g = images[x - 1] if x > 0 else inverses[-x - 1]
        acc = tuple([acc[j - 1] for j in g])
    return acc


def gauss_jordan(rows, ncols):
    """Fraction-free Gauss-Jordan elimination over the integers.

    Returns ``(reduced_rows, pivot_columns, d)``: every pivot entry of the
    reduced rows equals ``d`` and pivot columns are zero elsewhere.  All
    divisions are exact (each entry is a minor of the input).
    """
    m = [list(r) for r in rows if any(r)]
    nrows = len(m)
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        p = r
        while p < nrows and m[p][c] == 0:
            p += 1
        if p == nrows:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
        prow = m[r]
        piv = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = m[i]
            f = row[c]
            if f == 0:
                if piv != prev:
                    m[i] = [a * piv // prev for a in row]
            else:
                m[i] = [(piv * a - f * b) // prev for a, b in zip(row, prow)]
        prev = piv
        pivots.append(c)
        r += 1
    return m[:r], pivots, prev


def kernel_from_reduced(reduced, pivots, d, ncols):
    """Integer basis of the right kernel from a fraction-free reduced form.

    One primitive vector per free column, sign-normalised so that the first
    nonzero entry is positive.
    """
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [0] * ncols
        v[f] = d
        for row, c in zip(reduced, pivots):
            v[c] = -row[f]
        g = 0
        for a in v:
            g = gcd(g, a)
        first = next(a for a in v if a)
        if first < 0:
            g = -g
        basis.append(tuple(a // g for a in v))
    return basis
