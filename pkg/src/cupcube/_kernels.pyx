# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops; ``_kernels_py`` has the same functions in numpy."""
import numpy as np
cimport cython
from libc.stdint cimport int64_t


def matmul_mod(A, B, long n):
    cdef int64_t[:, :] a = np.ascontiguousarray(A, dtype=np.int64)
    cdef int64_t[:, :] b = np.ascontiguousarray(B, dtype=np.int64)
    cdef Py_ssize_t r = a.shape[0], k = a.shape[1], c = b.shape[1], i, j, l
    out = np.zeros((r, c), dtype=np.int64)
    cdef int64_t[:, :] o = out
    cdef int64_t acc
    for i in range(r):
        for j in range(c):
            acc = 0
            for l in range(k):
                acc = (acc + a[i, l] * b[l, j]) % n
            o[i, j] = acc
    return out


def enumerate_colorings(long n, int d, int n_arcs, roles, acts):
    """Every M-part assignment satisfying the crossing relations.

    ``roles`` rows are ``(src, over, dst)``: the relation reads
    ``m_dst = (m_src - m_over) R + m_over`` with ``R = acts[row]``.
    Returns an ``(N, n_arcs * d)`` array in odometer order.
    """
    cdef int64_t[:, :] rl = np.ascontiguousarray(roles, dtype=np.int64).reshape(-1, 3)
    cdef int64_t[:, :, :] R = np.ascontiguousarray(acts, dtype=np.int64).reshape(-1, d, d)
    cdef Py_ssize_t width = n_arcs * d, nc = rl.shape[0]
    cdef int64_t[:] x = np.zeros(width, dtype=np.int64)
    cdef int64_t[:] tmp = np.zeros(d, dtype=np.int64)
    cdef Py_ssize_t c, i, j, pos, s, o, t
    cdef int64_t acc
    cdef bint ok
    found = []
    while True:
        ok = True
        for c in range(nc):
            s = rl[c, 0] * d
            o = rl[c, 1] * d
            t = rl[c, 2] * d
            for j in range(d):
                acc = 0
                for i in range(d):
                    acc += (x[s + i] - x[o + i]) * R[c, i, j]
                acc = (acc + x[o + j] - x[t + j]) % n
                if acc != 0:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(np.asarray(x).copy())
        pos = width - 1
        while pos >= 0:
            x[pos] += 1
            if x[pos] < n:
                break
            x[pos] = 0
            pos -= 1
        if pos < 0:
            break
    if not found:
        return np.zeros((0, width), dtype=np.int64)
    return np.vstack(found)
