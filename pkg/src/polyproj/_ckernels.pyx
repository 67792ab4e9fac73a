# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled fraction-free simplex kernels; see ``_kernels_py`` for the contract."""


def pivot(list T, Py_ssize_t r, Py_ssize_t s, object D):
    cdef list row_r = <list>T[r]
    cdef list row, out
    cdef object p = row_r[s]
    cdef object f
    cdef Py_ssize_t i, j, n = len(row_r), m = len(T)
    if p < 0:
        row_r = [-x for x in row_r]
        T[r] = row_r
        p = -p
    for i in range(m):
        if i == r:
            continue
        row = <list>T[i]
        f = row[s]
        if f:
            out = [None] * n
            for j in range(n):
                out[j] = (row[j] * p - f * row_r[j]) // D
            T[i] = out
        elif p != D:
            out = [None] * n
            for j in range(n):
                out[j] = row[j] * p // D
            T[i] = out
    return p


def ratio_test(list T, Py_ssize_t s, rows, list basis):
    cdef Py_ssize_t best = -1
    cdef Py_ssize_t i
    cdef list row
    cdef object a, b, best_a = 0, best_b = 0, lhs, rhs
    for i in rows:
        row = <list>T[i]
        a = row[s]
        if a <= 0:
            continue
        b = row[len(row) - 1]
        if best < 0:
            best = i
            best_a = a
            best_b = b
            continue
        lhs = b * best_a
        rhs = best_b * a
        if lhs < rhs or (lhs == rhs and basis[i] < basis[best]):
            best = i
            best_a = a
            best_b = b
    return best


def entering(list obj, cols):
    cdef Py_ssize_t j
    for j in cols:
        if obj[j] < 0:
            return j
    return -1
