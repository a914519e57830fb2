# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer polynomial kernels (mirrors ``_kernels_py``)."""


def convolve(list a, list b):
    cdef Py_ssize_t i, j, na = len(a), nb = len(b)
    if na == 0 or nb == 0:
        return []
    cdef list out = [0] * (na + nb - 1)
    cdef object ai
    for i in range(na):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(nb):
            out[i + j] = out[i + j] + ai * b[j]
    return out


def taylor_shift(list a, object c):
    cdef list out = list(a)
    cdef Py_ssize_t i, j, n = len(out)
    if c == 0 or n < 2:
        return out
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] = out[j] + c * out[j + 1]
    return out


def horner(list a, object p, object q):
    cdef object acc = 0
    cdef object qpow = 1
    cdef Py_ssize_t i
    for i in range(len(a) - 1, -1, -1):
        acc = acc * p + a[i] * qpow
        qpow = qpow * q
    return acc


def binomial_row(object m, Py_ssize_t jmax):
    cdef list row = [1]
    cdef object cur = 1
    cdef Py_ssize_t j
    for j in range(1, jmax + 1):
        cur = cur * (m - j + 1) // j
        row.append(cur)
    return row
