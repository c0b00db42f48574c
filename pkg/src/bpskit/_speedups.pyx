# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels for dense exact-integer series arithmetic.

Semantics match bpskit._kernels_py exactly.  Coefficients stay Python
ints (only the loop indices are C), so arbitrary precision is preserved.
"""


def mul_trunc(list a, list b, Py_ssize_t n):
    """First n coefficients of the convolution of coefficient lists a and b."""
    cdef Py_ssize_t i, j, jhi
    cdef Py_ssize_t na = len(a)
    cdef Py_ssize_t nb = len(b)
    cdef object ai, bj
    cdef list out = [0] * n
    if na > n:
        na = n
    for i in range(na):
        ai = a[i]
        if not ai:
            continue
        jhi = n - i
        if jhi > nb:
            jhi = nb
        for j in range(jhi):
            bj = b[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return out


def inverse_unit(list c, Py_ssize_t n):
    """First n coefficients of 1/c where c[0] is +1 or -1.

    Entries of c beyond index n-1 cannot influence the result, and entries
    missing from a short c are treated as zero.
    """
    cdef Py_ssize_t m, j, jhi
    cdef Py_ssize_t nc = len(c)
    cdef object lead, s, cj
    cdef bint lead_pos
    cdef list d
    if n <= 0:
        return []
    lead = c[0]
    lead_pos = lead == 1
    d = [0] * n
    d[0] = lead
    for m in range(1, n):
        s = 0
        jhi = m if m < nc - 1 else nc - 1
        for j in range(1, jhi + 1):
            cj = c[j]
            if cj:
                s = s + cj * d[m - j]
        if s:
            d[m] = -s if lead_pos else s
    return d


def mul_sparse_unit_inplace(list acc, list offsets, list coeffs):
    """Multiply acc in place by 1 + sum_i coeffs[i] * x**offsets[i].

    Offsets must be ascending and >= 1; entries of the product beyond
    len(acc) - 1 are discarded.
    """
    cdef Py_ssize_t j, i, p
    cdef Py_ssize_t n = len(acc)
    cdef Py_ssize_t nf = len(offsets)
    cdef object s, src
    for j in range(n - 1, 0, -1):
        s = acc[j]
        for i in range(nf):
            p = offsets[i]
            if p > j:
                break
            src = acc[j - p]
            if src:
                s = s + coeffs[i] * src
        acc[j] = s


def axpy_shift(list dst, list src, Py_ssize_t shift, object c, Py_ssize_t lo, Py_ssize_t hi):
    """dst[i + shift] += c * src[i] for lo <= i <= hi."""
    cdef Py_ssize_t i
    cdef object v
    if not c:
        return
    for i in range(lo, hi + 1):
        v = src[i]
        if v:
            dst[i + shift] = dst[i + shift] + c * v
