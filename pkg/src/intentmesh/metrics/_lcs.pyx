# cython: boundscheck=False, wraparound=False, language_level=3
"""Compiled longest-common-subsequence kernel.

Same contract as _lcs_py.lcs_length; selected at import by metrics.kernels
when the extension was built.
"""

from libc.stdlib cimport free, malloc


def lcs_length(a, b):
    """Length of the longest order-preserving common subsequence, O(|a|*|b|)."""
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t m = len(b)
    if n == 0 or m == 0:
        return 0

    cdef long *xs = <long *> malloc(n * sizeof(long))
    cdef long *ys = <long *> malloc(m * sizeof(long))
    cdef long *prev = <long *> malloc((m + 1) * sizeof(long))
    cdef long *cur = <long *> malloc((m + 1) * sizeof(long))
    if xs == NULL or ys == NULL or prev == NULL or cur == NULL:
        free(xs); free(ys); free(prev); free(cur)
        raise MemoryError()

    cdef Py_ssize_t i, j
    cdef long ai, left, up
    cdef long *tmp
    try:
        for i in range(n):
            xs[i] = a[i]
        for j in range(m):
            ys[j] = b[j]
        for j in range(m + 1):
            prev[j] = 0
            cur[j] = 0
        for i in range(1, n + 1):
            ai = xs[i - 1]
            for j in range(1, m + 1):
                if ai == ys[j - 1]:
                    cur[j] = prev[j - 1] + 1
                else:
                    left = cur[j - 1]
                    up = prev[j]
                    cur[j] = left if left >= up else up
            tmp = prev
            prev = cur
            cur = tmp
        return prev[m]
    finally:
        free(xs)
        free(ys)
        free(prev)
        free(cur)
